#ifndef INFOPARITY_COHORT_H_
#define INFOPARITY_COHORT_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "infoparity/network_builder.h"
#include "infoparity/parity.h"

namespace infoparity {

// Named, disjoint node clusters over an N-node network. Nodes may be left
// unassigned.
class RegionPartition {
 public:
  RegionPartition() = default;

  // Throws on an index >= n or a node assigned to two different clusters.
  static RegionPartition FromAssignments(
      std::size_t n, const std::vector<std::pair<NodeIndex, std::string>>& assignments);

  // Rows of (label, cluster) resolved against node labels (or decimal indices
  // when `labels` is empty). Unknown labels are an error.
  static RegionPartition FromLabels(
      const std::vector<std::string>& labels, std::size_t n,
      const std::vector<std::pair<std::string, std::string>>& rows);

  std::size_t node_count() const { return n_; }
  // Cluster names in first-appearance order.
  const std::vector<std::string>& cluster_names() const { return names_; }
  bool HasCluster(std::string_view name) const;
  // Members in ascending index order; throws for an unknown cluster.
  const std::vector<NodeIndex>& Members(std::string_view name) const;
  std::optional<std::string> ClusterOf(NodeIndex v) const;

  // Partition restricted to the kept nodes and renumbered; new_index maps old
  // indices to new ones.
  RegionPartition Restrict(const std::vector<std::optional<NodeIndex>>& new_index,
                           std::size_t new_n) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::string> names_;
  std::map<std::string, std::vector<NodeIndex>, std::less<>> members_;
  std::vector<std::optional<std::size_t>> cluster_of_;
};

struct ClusterPair {
  std::string first;
  std::string second;

  std::string Name() const { return first + "-" + second; }
  friend auto operator<=>(const ClusterPair&, const ClusterPair&) = default;
};

// Mean of pm(i, j) over i in a, j in b. Throws for unknown, empty or
// overlapping (including identical) clusters.
double ClusterPairParity(const ParityMatrix& pm, const RegionPartition& part,
                         std::string_view a, std::string_view b);

// Mean over unordered pairs inside one cluster; needs at least two members.
double WithinClusterParity(const ParityMatrix& pm, const RegionPartition& part,
                           std::string_view cluster);

struct PairedSample {
  std::string subject_id;
  CorrelationMatrix condition_a;
  CorrelationMatrix condition_b;
};

// Throws if the two conditions differ in node count or label order.
void ValidatePairedSample(const PairedSample& sample);

struct AnalysisOptions {
  LogBase log_base = LogBase::kBits;
  // Compute on the largest connected component of each thresholded graph.
  bool giant_component = false;
  std::size_t workers = 1;
};

// Per-condition facts about one thresholded graph.
struct ConditionStats {
  double avg_parity = 0.0;
  double min_parity = 0.0;
  double median_parity = 0.0;
  double mean_geodesic_entropy = 0.0;
  bool connected = false;
  std::size_t component_count = 0;
  std::size_t diameter = 0;
  // Original indices of the analysed nodes; filled only with giant_component.
  std::vector<NodeIndex> kept_nodes;

  friend bool operator==(const ConditionStats&, const ConditionStats&) = default;
};

// One density of a single-matrix sweep.
struct SweepPoint {
  double mean_degree = 0.0;
  std::size_t edge_count = 0;
  ConditionStats stats;

  friend bool operator==(const SweepPoint&, const SweepPoint&) = default;
};

std::vector<SweepPoint> AnalyzeSweep(const CorrelationMatrix& cm,
                                     const std::vector<DensityTarget>& targets,
                                     const AnalysisOptions& options);

struct DensityRecord {
  double mean_degree = 0.0;
  std::size_t edge_count = 0;
  ConditionStats a;
  ConditionStats b;
  // b.avg_parity - a.avg_parity.
  double divergence = 0.0;

  friend bool operator==(const DensityRecord&, const DensityRecord&) = default;
};

struct SweepComparison {
  std::string subject_id;
  std::vector<DensityRecord> records;

  double MeanDivergence() const;
  double MedianDivergence() const;
  friend bool operator==(const SweepComparison&, const SweepComparison&) = default;
};

struct ClusterRecord {
  ClusterPair pair;
  double mean_degree = 0.0;
  double value_a = 0.0;
  double value_b = 0.0;
  double divergence = 0.0;

  friend bool operator==(const ClusterRecord&, const ClusterRecord&) = default;
};

struct ClusterTable {
  std::string subject_id;
  // Ordered by density target, then by cluster pair in request order.
  std::vector<ClusterRecord> rows;

  friend bool operator==(const ClusterTable&, const ClusterTable&) = default;
};

struct SubjectAnalysis {
  SweepComparison sweep;
  ClusterTable clusters;

  friend bool operator==(const SubjectAnalysis&, const SubjectAnalysis&) = default;
};

// Thresholds both conditions to each target, computes both parity matrices
// once, and fills the global records plus, when `partition` is given, one
// cluster row per (target, pair).
SubjectAnalysis AnalyzePairedSample(const PairedSample& sample,
                                    const std::vector<DensityTarget>& targets,
                                    const RegionPartition* partition,
                                    const std::vector<ClusterPair>& cluster_pairs,
                                    const AnalysisOptions& options);

SweepComparison ComparePaired(const PairedSample& sample,
                              const std::vector<DensityTarget>& targets,
                              const AnalysisOptions& options);

ClusterTable ClusterSweepComparison(const PairedSample& sample, const RegionPartition& part,
                                    const std::vector<ClusterPair>& cluster_pairs,
                                    const std::vector<DensityTarget>& targets,
                                    const AnalysisOptions& options);

// Subjects counted as increasing for a metric at one density, or overall.
struct SignTally {
  std::size_t subjects = 0;
  std::size_t positive = 0;
  double fraction = 0.0;

  friend bool operator==(const SignTally&, const SignTally&) = default;
};

struct MetricConsistency {
  // "global" or a cluster pair name.
  std::string metric;
  // Subjects whose mean divergence across densities is strictly positive.
  SignTally overall;
  // Keyed by mean degree.
  std::map<double, SignTally> per_density;
  double mean_divergence = 0.0;
  double median_divergence = 0.0;

  friend bool operator==(const MetricConsistency&, const MetricConsistency&) = default;
};

struct SignConsistencyReport {
  std::vector<MetricConsistency> metrics;

  friend bool operator==(const SignConsistencyReport&, const SignConsistencyReport&) = default;
};

// Throws on an empty cohort. Independent of subject order and ids.
SignConsistencyReport SignConsistency(std::span<const SubjectAnalysis> cohort);

}  // namespace infoparity

#endif  // INFOPARITY_COHORT_H_
