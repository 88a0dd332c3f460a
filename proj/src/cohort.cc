#include "infoparity/cohort.h"

#include <algorithm>
#include <numeric>

#include "infoparity/error.h"
#include "infoparity/geodesics.h"

namespace infoparity {
namespace {

double Mean(std::vector<double> values) {
  if (values.empty()) return 0.0;
  // Sorted summation makes the result independent of input order.
  std::sort(values.begin(), values.end());
  return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

double Median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

const std::vector<NodeIndex>& NonEmptyMembers(const RegionPartition& part, std::string_view name) {
  const auto& members = part.Members(name);
  if (members.empty()) throw Error("cluster '" + std::string(name) + "' has no nodes");
  return members;
}

void CheckClusterPair(const RegionPartition& part, const ClusterPair& pair) {
  if (pair.first == pair.second) {
    throw Error("cluster pair " + pair.Name() + " compares a cluster with itself (overlapping)");
  }
  NonEmptyMembers(part, pair.first);
  NonEmptyMembers(part, pair.second);
}

struct SideResult {
  ConditionStats stats;
  std::vector<double> cluster_values;
};

SideResult AnalyzeSide(const Graph& g, const RegionPartition* partition,
                       const std::vector<ClusterPair>& cluster_pairs,
                       const AnalysisOptions& options, const std::string& context) {
  SideResult result;
  const ComponentPartition components = ConnectedComponents(g);
  result.stats.connected = components.connected();
  result.stats.component_count = components.component_count();

  const Graph* work = &g;
  InducedSubgraph giant;
  std::optional<RegionPartition> restricted;
  if (options.giant_component) {
    giant = LargestComponentSubgraph(g);
    work = &giant.graph;
    result.stats.kept_nodes = giant.original_index;
    if (partition != nullptr) {
      restricted = partition->Restrict(giant.new_index, giant.graph.node_count());
      partition = &*restricted;
    }
  }
  if (work->node_count() < 3) {
    throw Error(context + ": analysed graph has fewer than 3 nodes");
  }

  const DistanceMatrix dm = AllPairsDistances(*work, options.workers);
  const ParityMatrix pm = ComputeParityMatrix(dm, options.log_base, options.workers);
  const ParityStats stats = SummarizeParity(pm);
  result.stats.avg_parity = stats.mean;
  result.stats.min_parity = stats.min;
  result.stats.median_parity = stats.median;
  result.stats.mean_geodesic_entropy = MeanGeodesicEntropy(dm, options.log_base);
  result.stats.diameter = dm.diameter();

  if (partition != nullptr) {
    result.cluster_values.reserve(cluster_pairs.size());
    for (const auto& pair : cluster_pairs) {
      try {
        result.cluster_values.push_back(
            ClusterPairParity(pm, *partition, pair.first, pair.second));
      } catch (const Error& e) {
        throw Error(context + ": " + e.what());
      }
    }
  }
  return result;
}

std::string FormatDegree(double k) {
  std::string s = std::to_string(k);
  s.erase(s.find_last_not_of('0') + 1);
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

}  // namespace

RegionPartition RegionPartition::FromAssignments(
    std::size_t n, const std::vector<std::pair<NodeIndex, std::string>>& assignments) {
  RegionPartition part;
  part.n_ = n;
  part.cluster_of_.assign(n, std::nullopt);
  std::vector<std::size_t> owner(n, static_cast<std::size_t>(-1));
  for (const auto& [node, name] : assignments) {
    if (node >= n) {
      throw Error("partition assigns node " + std::to_string(node) + " but the network has " +
                  std::to_string(n) + " nodes");
    }
    if (name.empty()) throw Error("partition has an empty cluster name");
    auto it = std::find(part.names_.begin(), part.names_.end(), name);
    const std::size_t id = static_cast<std::size_t>(it - part.names_.begin());
    if (it == part.names_.end()) part.names_.push_back(name);
    if (part.cluster_of_[node]) {
      if (*part.cluster_of_[node] != id) {
        throw Error("node " + std::to_string(node) + " is assigned to overlapping clusters '" +
                    part.names_[*part.cluster_of_[node]] + "' and '" + name + "'");
      }
      continue;
    }
    part.cluster_of_[node] = id;
  }
  for (const auto& name : part.names_) part.members_[name];
  for (NodeIndex v = 0; v < n; ++v) {
    if (part.cluster_of_[v]) part.members_[part.names_[*part.cluster_of_[v]]].push_back(v);
  }
  return part;
}

RegionPartition RegionPartition::FromLabels(
    const std::vector<std::string>& labels, std::size_t n,
    const std::vector<std::pair<std::string, std::string>>& rows) {
  std::map<std::string, NodeIndex, std::less<>> index_of;
  for (NodeIndex v = 0; v < n; ++v) {
    index_of.emplace(labels.empty() ? std::to_string(v) : labels[v], v);
  }
  std::vector<std::pair<NodeIndex, std::string>> assignments;
  assignments.reserve(rows.size());
  for (const auto& [label, cluster] : rows) {
    auto it = index_of.find(label);
    if (it == index_of.end()) {
      throw Error("partition label '" + label + "' does not match any node label");
    }
    assignments.emplace_back(it->second, cluster);
  }
  return FromAssignments(n, assignments);
}

bool RegionPartition::HasCluster(std::string_view name) const {
  return members_.find(name) != members_.end();
}

const std::vector<NodeIndex>& RegionPartition::Members(std::string_view name) const {
  auto it = members_.find(name);
  if (it == members_.end()) throw Error("unknown cluster '" + std::string(name) + "'");
  return it->second;
}

std::optional<std::string> RegionPartition::ClusterOf(NodeIndex v) const {
  if (v >= n_ || !cluster_of_[v]) return std::nullopt;
  return names_[*cluster_of_[v]];
}

RegionPartition RegionPartition::Restrict(const std::vector<std::optional<NodeIndex>>& new_index,
                                          std::size_t new_n) const {
  RegionPartition part;
  part.n_ = new_n;
  part.names_ = names_;
  part.cluster_of_.assign(new_n, std::nullopt);
  for (const auto& name : names_) part.members_[name];
  for (NodeIndex v = 0; v < n_ && v < new_index.size(); ++v) {
    if (cluster_of_[v] && new_index[v]) {
      part.cluster_of_[*new_index[v]] = cluster_of_[v];
    }
  }
  for (NodeIndex v = 0; v < new_n; ++v) {
    if (part.cluster_of_[v]) part.members_[names_[*part.cluster_of_[v]]].push_back(v);
  }
  return part;
}

double ClusterPairParity(const ParityMatrix& pm, const RegionPartition& part,
                         std::string_view a, std::string_view b) {
  if (part.node_count() != pm.node_count()) {
    throw Error("partition covers " + std::to_string(part.node_count()) +
                " nodes but the parity matrix has " + std::to_string(pm.node_count()));
  }
  if (a == b) {
    throw Error("clusters '" + std::string(a) + "' and '" + std::string(b) + "' overlap");
  }
  const auto& first = NonEmptyMembers(part, a);
  const auto& second = NonEmptyMembers(part, b);
  double sum = 0.0;
  for (NodeIndex i : first) {
    for (NodeIndex j : second) sum += pm.at(i, j);
  }
  return sum / static_cast<double>(first.size() * second.size());
}

double WithinClusterParity(const ParityMatrix& pm, const RegionPartition& part,
                           std::string_view cluster) {
  const auto& members = part.Members(cluster);
  if (members.size() < 2) {
    throw Error("cluster '" + std::string(cluster) + "' needs at least two nodes");
  }
  double sum = 0.0;
  for (std::size_t x = 0; x < members.size(); ++x) {
    for (std::size_t y = x + 1; y < members.size(); ++y) sum += pm.at(members[x], members[y]);
  }
  return sum / static_cast<double>(members.size() * (members.size() - 1) / 2);
}

void ValidatePairedSample(const PairedSample& sample) {
  if (sample.condition_a.node_count() != sample.condition_b.node_count()) {
    throw Error("subject '" + sample.subject_id + "': condition A has " +
                std::to_string(sample.condition_a.node_count()) + " nodes, condition B has " +
                std::to_string(sample.condition_b.node_count()));
  }
  if (sample.condition_a.labels() != sample.condition_b.labels()) {
    throw Error("subject '" + sample.subject_id + "': conditions have different node labels");
  }
}

std::vector<SweepPoint> AnalyzeSweep(const CorrelationMatrix& cm,
                                     const std::vector<DensityTarget>& targets,
                                     const AnalysisOptions& options) {
  std::vector<SweepPoint> points;
  for (auto& entry : DensitySweep(cm, targets)) {
    SideResult side = AnalyzeSide(entry.graph, nullptr, {}, options,
                                  "mean degree " + FormatDegree(entry.target.mean_degree));
    points.push_back({entry.target.mean_degree, entry.target.edge_count, std::move(side.stats)});
  }
  return points;
}

double SweepComparison::MeanDivergence() const {
  std::vector<double> values;
  for (const auto& r : records) values.push_back(r.divergence);
  return Mean(std::move(values));
}

double SweepComparison::MedianDivergence() const {
  std::vector<double> values;
  for (const auto& r : records) values.push_back(r.divergence);
  return Median(std::move(values));
}

SubjectAnalysis AnalyzePairedSample(const PairedSample& sample,
                                    const std::vector<DensityTarget>& targets,
                                    const RegionPartition* partition,
                                    const std::vector<ClusterPair>& cluster_pairs,
                                    const AnalysisOptions& options) {
  ValidatePairedSample(sample);
  if (targets.empty()) throw Error("at least one density target is required");
  const std::size_t n = sample.condition_a.node_count();
  if (partition != nullptr) {
    if (partition->node_count() != n) {
      throw Error("partition covers " + std::to_string(partition->node_count()) +
                  " nodes but subject '" + sample.subject_id + "' has " + std::to_string(n));
    }
    for (const auto& pair : cluster_pairs) CheckClusterPair(*partition, pair);
  }

  const auto sweep_a = DensitySweep(sample.condition_a, targets);
  const auto sweep_b = DensitySweep(sample.condition_b, targets);

  SubjectAnalysis analysis;
  analysis.sweep.subject_id = sample.subject_id;
  analysis.clusters.subject_id = sample.subject_id;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const std::string context = "subject '" + sample.subject_id + "' at mean degree " +
                                FormatDegree(targets[t].mean_degree);
    SideResult a = AnalyzeSide(sweep_a[t].graph, partition, cluster_pairs, options,
                               context + " (condition A)");
    SideResult b = AnalyzeSide(sweep_b[t].graph, partition, cluster_pairs, options,
                               context + " (condition B)");

    DensityRecord record;
    record.mean_degree = targets[t].mean_degree;
    record.edge_count = targets[t].edge_count;
    record.divergence = b.stats.avg_parity - a.stats.avg_parity;
    record.a = std::move(a.stats);
    record.b = std::move(b.stats);
    analysis.sweep.records.push_back(std::move(record));

    for (std::size_t p = 0; p < a.cluster_values.size(); ++p) {
      ClusterRecord row;
      row.pair = cluster_pairs[p];
      row.mean_degree = targets[t].mean_degree;
      row.value_a = a.cluster_values[p];
      row.value_b = b.cluster_values[p];
      row.divergence = row.value_b - row.value_a;
      analysis.clusters.rows.push_back(std::move(row));
    }
  }
  return analysis;
}

SweepComparison ComparePaired(const PairedSample& sample,
                              const std::vector<DensityTarget>& targets,
                              const AnalysisOptions& options) {
  return AnalyzePairedSample(sample, targets, nullptr, {}, options).sweep;
}

ClusterTable ClusterSweepComparison(const PairedSample& sample, const RegionPartition& part,
                                    const std::vector<ClusterPair>& cluster_pairs,
                                    const std::vector<DensityTarget>& targets,
                                    const AnalysisOptions& options) {
  return AnalyzePairedSample(sample, targets, &part, cluster_pairs, options).clusters;
}

namespace {

// Divergences of one metric for one subject, keyed by mean degree.
using DivergenceSeries = std::map<double, double>;

MetricConsistency Tally(const std::string& metric, const std::vector<DivergenceSeries>& subjects) {
  MetricConsistency out;
  out.metric = metric;
  std::vector<double> subject_means;
  for (const auto& series : subjects) {
    std::vector<double> values;
    for (const auto& [degree, divergence] : series) {
      values.push_back(divergence);
      SignTally& tally = out.per_density[degree];
      ++tally.subjects;
      if (divergence > 0.0) ++tally.positive;
    }
    const double mean = Mean(std::move(values));
    subject_means.push_back(mean);
    ++out.overall.subjects;
    if (mean > 0.0) ++out.overall.positive;
  }
  auto finish = [](SignTally& t) {
    t.fraction = t.subjects == 0 ? 0.0
                                 : static_cast<double>(t.positive) / static_cast<double>(t.subjects);
  };
  finish(out.overall);
  for (auto& [degree, tally] : out.per_density) finish(tally);
  out.mean_divergence = Mean(subject_means);
  out.median_divergence = Median(std::move(subject_means));
  return out;
}

}  // namespace

SignConsistencyReport SignConsistency(std::span<const SubjectAnalysis> cohort) {
  if (cohort.empty()) throw Error("sign consistency needs a nonempty cohort");

  std::vector<std::string> pair_names;
  for (const auto& row : cohort.front().clusters.rows) {
    const std::string name = row.pair.Name();
    if (std::find(pair_names.begin(), pair_names.end(), name) == pair_names.end()) {
      pair_names.push_back(name);
    }
  }

  std::vector<DivergenceSeries> global;
  std::map<std::string, std::vector<DivergenceSeries>> by_pair;
  for (const auto& subject : cohort) {
    DivergenceSeries series;
    for (const auto& r : subject.sweep.records) series[r.mean_degree] = r.divergence;
    global.push_back(std::move(series));

    std::map<std::string, DivergenceSeries> pairs;
    for (const auto& row : subject.clusters.rows) pairs[row.pair.Name()][row.mean_degree] = row.divergence;
    if (pairs.size() != pair_names.size()) {
      throw Error("subject '" + subject.sweep.subject_id +
                  "' reports a different set of cluster pairs than the rest of the cohort");
    }
    for (const auto& name : pair_names) {
      auto it = pairs.find(name);
      if (it == pairs.end()) {
        throw Error("subject '" + subject.sweep.subject_id + "' lacks cluster pair " + name);
      }
      by_pair[name].push_back(std::move(it->second));
    }
  }

  SignConsistencyReport report;
  report.metrics.push_back(Tally("global", global));
  for (const auto& name : pair_names) report.metrics.push_back(Tally(name, by_pair[name]));
  return report;
}

}  // namespace infoparity
