#include "infoparity/cli.h"

#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "infoparity/geodesics.h"
#include "infoparity/io.h"
#include "infoparity/network_builder.h"
#include "infoparity/report.h"
#include "infoparity/synth.h"

namespace infoparity::cli {
namespace {

using nlohmann::json;

constexpr std::string_view kCommandNames[] = {"build",  "parity", "sweep", "compare",
                                              "cohort", "synth",  "export"};

std::vector<std::string> SplitOn(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::vector<std::size_t> ParseSizes(std::string_view text) {
  std::vector<std::size_t> sizes;
  for (const auto& part : SplitOn(text, ',')) {
    const double value = io::ParseDouble(part, "--blocks");
    if (value < 1 || value != std::floor(value)) {
      throw UsageError("--blocks: '" + part + "' is not a positive integer");
    }
    sizes.push_back(static_cast<std::size_t>(value));
  }
  return sizes;
}

// Renders into memory first so a failure never leaves a half-written file.
void Emit(const std::string& path, std::ostream& out,
          const std::function<void(std::ostream&)>& render) {
  std::ostringstream buffer;
  render(buffer);
  if (path == "-") {
    out << buffer.str();
    return;
  }
  std::ofstream file = io::OpenForWrite(path);
  file << buffer.str();
}

std::vector<DensityTarget> Targets(const std::vector<double>& degrees, std::size_t n) {
  std::vector<DensityTarget> targets;
  targets.reserve(degrees.size());
  for (double k : degrees) targets.push_back(DensityTarget::ForMeanDegree(k, n));
  return targets;
}

AnalysisOptions Options(const RunConfig& c) {
  return AnalysisOptions{c.log_base, c.giant_component, c.workers};
}

std::vector<ClusterPair> ResolvePairs(const RunConfig& c, const RegionPartition& part) {
  if (!c.cluster_pairs.empty()) return c.cluster_pairs;
  std::vector<ClusterPair> pairs;
  const auto& names = part.cluster_names();
  for (std::size_t a = 0; a < names.size(); ++a) {
    for (std::size_t b = a + 1; b < names.size(); ++b) pairs.push_back({names[a], names[b]});
  }
  return pairs;
}

std::optional<RegionPartition> LoadPartition(const RunConfig& c, const CorrelationMatrix& cm) {
  if (c.partition_path.empty()) return std::nullopt;
  const auto rows = io::ReadPartitionCsv(c.partition_path);
  try {
    return RegionPartition::FromLabels(cm.labels(), cm.node_count(), rows);
  } catch (const Error& e) {
    throw Error(c.partition_path + ": " + e.what());
  }
}

void RunBuild(const RunConfig& c, std::ostream& out) {
  CorrelationMatrix cm;
  std::string source;
  if (!c.corr_path.empty()) {
    cm = io::ReadCorrelationCsv(c.corr_path);
    source = c.corr_path;
  } else {
    const io::TimeSeries ts = io::ReadTimeSeriesCsv(c.series_path);
    try {
      cm = PearsonCorrelation(ts.series, ts.labels);
    } catch (const Error& e) {
      throw Error(c.series_path + ": " + e.what());
    }
    source = c.series_path;
  }
  if (!c.corr_out_path.empty()) {
    Emit(c.corr_out_path, out, [&](std::ostream& o) { io::WriteCorrelationCsv(cm, o); });
  }

  Graph g;
  std::vector<std::string> comments{"built from " + source};
  if (c.threshold) {
    g = ThresholdByValue(cm, *c.threshold);
    comments.push_back("threshold=" + io::FormatDouble(*c.threshold));
  } else {
    const double k = c.mean_degrees.empty() ? kDefaultMeanDegree : c.mean_degrees.front();
    g = ThresholdToDensity(cm, DensityTarget::ForMeanDegree(k, cm.node_count()));
    comments.push_back("target_mean_degree=" + io::FormatDouble(k));
  }
  comments.push_back("edges=" + std::to_string(g.edge_count()) +
                     " mean_degree=" + io::FormatDouble(MeanDegree(g)));
  const ComponentPartition parts = ConnectedComponents(g);
  comments.push_back("connected=" + std::string(parts.connected() ? "true" : "false") +
                     " components=" + std::to_string(parts.component_count()));
  if (c.giant_component) {
    InducedSubgraph sub = LargestComponentSubgraph(g);
    std::string kept = "kept_nodes=";
    for (std::size_t k = 0; k < sub.original_index.size(); ++k) {
      kept += (k ? "," : "") + std::to_string(sub.original_index[k]);
    }
    comments.push_back(kept);
    g = std::move(sub.graph);
  }
  Emit(c.output_path, out, [&](std::ostream& o) { io::WriteEdgeList(g, o, comments); });
  if (!c.labels_out_path.empty()) {
    std::vector<std::string> labels;
    for (NodeIndex v = 0; v < g.node_count(); ++v) labels.push_back(g.Label(v));
    Emit(c.labels_out_path, out, [&](std::ostream& o) { io::WriteLabels(labels, o); });
  }
}

void RunParity(const RunConfig& c, std::ostream& out) {
  const Graph original = io::ReadGraph(c.graph_path, c.labels_path);
  const ComponentPartition parts = ConnectedComponents(original);
  io::ParityMetadata meta;
  meta.log_base = c.log_base;
  meta.connected = parts.connected();
  meta.component_count = parts.component_count();
  meta.giant_component = c.giant_component;

  const Graph* g = &original;
  InducedSubgraph sub;
  if (c.giant_component) {
    sub = LargestComponentSubgraph(original);
    meta.kept_nodes = sub.original_index;
    g = &sub.graph;
  }
  meta.node_count = g->node_count();
  meta.edge_count = g->edge_count();
  meta.mean_degree = MeanDegree(*g);

  const DistanceMatrix dm = AllPairsDistances(*g, c.workers);
  meta.diameter = dm.diameter();
  const ParityMatrix pm = ComputeParityMatrix(dm, c.log_base, c.workers, g->labels());
  if (c.output_path == "-") {
    io::WriteParityCsv(pm, out);
  } else {
    io::WriteParityFiles(pm, meta, c.output_path);
  }
}

void RunSweep(const RunConfig& c, std::ostream& out) {
  const CorrelationMatrix cm = io::ReadCorrelationCsv(c.corr_path);
  const auto points = AnalyzeSweep(cm, Targets(c.mean_degrees, cm.node_count()), Options(c));
  Emit(c.output_path, out, [&](std::ostream& o) {
    if (c.format == "csv") {
      report::WriteSweepCsv(points, o);
    } else {
      report::WriteJson(report::SweepReport(points, cm.node_count(), EchoJson(c), c.log_base), o);
    }
  });
}

SubjectAnalysis AnalyzeSubject(const RunConfig& c, PairedSample sample) {
  ValidatePairedSample(sample);
  const auto partition = LoadPartition(c, sample.condition_a);
  const auto targets = Targets(c.mean_degrees, sample.condition_a.node_count());
  if (!partition) return AnalyzePairedSample(sample, targets, nullptr, {}, Options(c));
  return AnalyzePairedSample(sample, targets, &*partition, ResolvePairs(c, *partition), Options(c));
}

void RunCompare(const RunConfig& c, std::ostream& out) {
  PairedSample sample{c.subject_id, io::ReadCorrelationCsv(c.corr_a_path),
                      io::ReadCorrelationCsv(c.corr_b_path)};
  const SubjectAnalysis analysis = AnalyzeSubject(c, std::move(sample));
  Emit(c.output_path, out, [&](std::ostream& o) {
    if (c.format == "csv") {
      report::WriteDivergenceCsv(std::span(&analysis, 1), o);
    } else {
      report::WriteJson(report::CompareReport(analysis, EchoJson(c), c.log_base), o);
    }
  });
}

void RunCohort(const RunConfig& c, std::ostream& out) {
  std::vector<SubjectAnalysis> subjects;
  for (const auto& entry : io::ReadManifest(c.manifest_path)) {
    PairedSample sample{entry.subject_id, io::ReadCorrelationCsv(entry.path_a),
                        io::ReadCorrelationCsv(entry.path_b)};
    subjects.push_back(AnalyzeSubject(c, std::move(sample)));
  }
  const SignConsistencyReport consistency = SignConsistency(subjects);
  Emit(c.output_path, out, [&](std::ostream& o) {
    if (c.format == "csv") {
      report::WriteDivergenceCsv(subjects, o);
    } else {
      report::WriteJson(report::CohortReport(subjects, consistency, EchoJson(c), c.log_base), o);
    }
  });
}

void RunSynth(const RunConfig& c, std::ostream& out) {
  const Seed seed{c.seed};
  std::vector<std::string> comments{"synth model=" + c.model + " seed=" + std::to_string(c.seed) +
                                    " rng=" + std::string(kRngAlgorithm)};
  std::vector<std::string> labels;
  if (!c.labels_path.empty()) {
    std::ifstream in = io::OpenForRead(c.labels_path);
    labels = io::ParseLabels(in);
  }

  if (c.model == "block" || c.model == "perturb") {
    CorrelationMatrix cm;
    if (c.model == "block") {
      std::string sizes;
      for (std::size_t s : c.block_sizes) sizes += (sizes.empty() ? "" : ",") + std::to_string(s);
      comments.push_back("blocks=" + sizes + " within=" + io::FormatDouble(c.within) +
                         " between=" + io::FormatDouble(c.between) +
                         " jitter=" + io::FormatDouble(c.jitter));
      cm = BlockCorrelation(BlocksFromSizes(c.block_sizes), c.within, c.between, c.jitter, seed,
                            std::move(labels));
    } else {
      comments.push_back("source=" + c.corr_path + " amplitude=" + io::FormatDouble(c.amplitude));
      cm = PerturbCorrelation(io::ReadCorrelationCsv(c.corr_path), c.amplitude, seed);
    }
    Emit(c.output_path, out, [&](std::ostream& o) { io::WriteCorrelationCsv(cm, o, comments); });
    return;
  }

  Graph g;
  if (c.model == "complete") {
    g = CompleteGraph(c.n);
  } else if (c.model == "cycle") {
    g = CycleGraph(c.n);
  } else if (c.model == "path") {
    g = PathGraph(c.n);
  } else if (c.model == "star") {
    g = StarGraph(c.n);
  } else if (c.model == "er") {
    comments.push_back("n=" + std::to_string(c.n) + " p=" + io::FormatDouble(c.p));
    g = ErdosRenyi(c.n, c.p, seed);
  } else {
    comments.push_back("source=" + c.graph_path + " fraction=" + io::FormatDouble(c.fraction));
    g = Rewire(io::ReadGraph(c.graph_path), c.fraction, seed);
  }
  if (c.model != "er" && c.model != "rewire") comments.push_back("n=" + std::to_string(c.n));
  Emit(c.output_path, out, [&](std::ostream& o) { io::WriteEdgeList(g, o, comments); });
}

void RunExport(const RunConfig& c, std::ostream& out) {
  const ParityMatrix pm = io::ReadParityCsv(c.parity_path);
  Emit(c.output_path, out, [&](std::ostream& o) { io::ExportParityNetwork(pm, c.cutoff, o); });
}

// Checks that need more than CLI11's per-option validation.
void Validate(RunConfig& c, bool has_mean_degree_flag) {
  if (c.format != "json" && c.format != "csv") {
    throw UsageError("--format must be json or csv, got '" + c.format + "'");
  }
  if (!c.cluster_pairs.empty() && c.partition_path.empty()) {
    throw UsageError("--cluster-pairs requires --partition");
  }
  if (c.command == Command::kBuild) {
    if (c.corr_path.empty() == c.series_path.empty()) {
      throw UsageError("build needs exactly one of --corr or --series");
    }
    if (c.threshold && has_mean_degree_flag) {
      throw UsageError("--threshold and --mean-degree are mutually exclusive");
    }
    if (c.threshold && !(*c.threshold >= 0.0)) throw UsageError("--threshold must be >= 0");
    if (!c.threshold && c.mean_degrees.empty()) c.mean_degrees = {kDefaultMeanDegree};
  }
  if (c.command == Command::kSynth) {
    const std::string& m = c.model;
    const bool graph_family = m == "complete" || m == "cycle" || m == "path" || m == "star";
    if (graph_family || m == "er") {
      if (c.n == 0) throw UsageError("synth --model " + m + " requires --n");
    } else if (m == "rewire") {
      if (c.graph_path.empty()) throw UsageError("synth --model rewire requires --graph");
    } else if (m == "block") {
      if (c.block_sizes.empty()) throw UsageError("synth --model block requires --blocks");
    } else if (m == "perturb") {
      if (c.corr_path.empty()) throw UsageError("synth --model perturb requires --corr");
    } else {
      throw UsageError("unknown synth model '" + m +
                       "' (expected complete, cycle, path, star, er, rewire, block or perturb)");
    }
  }
  if (c.command == Command::kExport && std::isnan(c.cutoff)) {
    throw UsageError("--cutoff must be a number");
  }
}

}  // namespace

std::string_view ToString(Command command) { return kCommandNames[static_cast<int>(command)]; }

Command ParseCommand(std::string_view text) {
  for (std::size_t k = 0; k < std::size(kCommandNames); ++k) {
    if (kCommandNames[k] == text) return static_cast<Command>(k);
  }
  throw Error("unknown command '" + std::string(text) + "'");
}

std::vector<double> ParseMeanDegrees(std::string_view text) {
  if (text.find(':') != std::string_view::npos) {
    const auto parts = SplitOn(text, ':');
    if (parts.size() != 3) throw UsageError("--mean-degrees grid must be start:stop:step");
    try {
      return MeanDegreeGrid(io::ParseDouble(parts[0], "--mean-degrees start"),
                            io::ParseDouble(parts[1], "--mean-degrees stop"),
                            io::ParseDouble(parts[2], "--mean-degrees step"));
    } catch (const UsageError&) {
      throw;
    } catch (const Error& e) {
      throw UsageError(std::string("--mean-degrees: ") + e.what());
    }
  }
  std::vector<double> values;
  for (const auto& part : SplitOn(text, ',')) {
    double v = 0.0;
    try {
      v = io::ParseDouble(part, "--mean-degrees");
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    if (!(v > 0.0) || !std::isfinite(v)) throw UsageError("--mean-degrees values must be positive");
    values.push_back(v);
  }
  return values;
}

std::vector<ClusterPair> ParseClusterPairs(std::string_view text) {
  std::vector<ClusterPair> pairs;
  for (const auto& part : SplitOn(text, ',')) {
    const auto names = SplitOn(part, ':');
    if (names.size() != 2 || names[0].empty() || names[1].empty()) {
      throw UsageError("--cluster-pairs entries must look like first:second, got '" + part + "'");
    }
    if (names[0] == names[1]) {
      throw UsageError("--cluster-pairs entry '" + part + "' pairs a cluster with itself");
    }
    pairs.push_back({names[0], names[1]});
  }
  return pairs;
}

json ToJson(const RunConfig& c) {
  json pairs = json::array();
  for (const auto& p : c.cluster_pairs) pairs.push_back({p.first, p.second});
  json j{{"command", std::string(ToString(c.command))},
         {"graph_path", c.graph_path},
         {"labels_path", c.labels_path},
         {"corr_path", c.corr_path},
         {"series_path", c.series_path},
         {"corr_a_path", c.corr_a_path},
         {"corr_b_path", c.corr_b_path},
         {"manifest_path", c.manifest_path},
         {"partition_path", c.partition_path},
         {"parity_path", c.parity_path},
         {"output_path", c.output_path},
         {"labels_out_path", c.labels_out_path},
         {"corr_out_path", c.corr_out_path},
         {"format", c.format},
         {"mean_degrees", c.mean_degrees},
         {"threshold", c.threshold ? json(*c.threshold) : json(nullptr)},
         {"log_base", std::string(infoparity::ToString(c.log_base))},
         {"cluster_pairs", std::move(pairs)},
         {"cutoff", std::isinf(c.cutoff) ? json(c.cutoff > 0 ? "inf" : "-inf") : json(c.cutoff)},
         {"giant_component", c.giant_component},
         {"workers", c.workers},
         {"seed", c.seed},
         {"subject_id", c.subject_id},
         {"model", c.model},
         {"n", c.n},
         {"p", c.p},
         {"fraction", c.fraction},
         {"block_sizes", c.block_sizes},
         {"within", c.within},
         {"between", c.between},
         {"jitter", c.jitter},
         {"amplitude", c.amplitude}};
  return j;
}

RunConfig FromJson(const json& j) {
  RunConfig c;
  c.command = ParseCommand(j.at("command").get<std::string>());
  j.at("graph_path").get_to(c.graph_path);
  j.at("labels_path").get_to(c.labels_path);
  j.at("corr_path").get_to(c.corr_path);
  j.at("series_path").get_to(c.series_path);
  j.at("corr_a_path").get_to(c.corr_a_path);
  j.at("corr_b_path").get_to(c.corr_b_path);
  j.at("manifest_path").get_to(c.manifest_path);
  j.at("partition_path").get_to(c.partition_path);
  j.at("parity_path").get_to(c.parity_path);
  j.at("output_path").get_to(c.output_path);
  j.at("labels_out_path").get_to(c.labels_out_path);
  j.at("corr_out_path").get_to(c.corr_out_path);
  j.at("format").get_to(c.format);
  j.at("mean_degrees").get_to(c.mean_degrees);
  if (!j.at("threshold").is_null()) c.threshold = j.at("threshold").get<double>();
  c.log_base = ParseLogBase(j.at("log_base").get<std::string>());
  for (const auto& p : j.at("cluster_pairs")) {
    c.cluster_pairs.push_back({p.at(0).get<std::string>(), p.at(1).get<std::string>()});
  }
  const json& cutoff = j.at("cutoff");
  if (cutoff.is_string()) {
    c.cutoff = cutoff.get<std::string>() == "inf" ? HUGE_VAL : -HUGE_VAL;
  } else {
    cutoff.get_to(c.cutoff);
  }
  j.at("giant_component").get_to(c.giant_component);
  j.at("workers").get_to(c.workers);
  j.at("seed").get_to(c.seed);
  j.at("subject_id").get_to(c.subject_id);
  j.at("model").get_to(c.model);
  j.at("n").get_to(c.n);
  j.at("p").get_to(c.p);
  j.at("fraction").get_to(c.fraction);
  j.at("block_sizes").get_to(c.block_sizes);
  j.at("within").get_to(c.within);
  j.at("between").get_to(c.between);
  j.at("jitter").get_to(c.jitter);
  j.at("amplitude").get_to(c.amplitude);
  return c;
}

json EchoJson(const RunConfig& config) {
  json j = ToJson(config);
  j.erase("workers");
  j.erase("output_path");
  j.erase("labels_out_path");
  j.erase("corr_out_path");
  return j;
}

RunConfig ParseArgs(int argc, const char* const* argv) {
  CLI::App app{"Information parity between node pairs of undirected networks", "infoparity"};
  app.require_subcommand(1, 1);

  RunConfig c;
  std::string log_base = "bits";
  std::string mean_degrees;
  std::string cluster_pairs;
  std::string blocks;
  double mean_degree = 0.0;

  auto add_log_base = [&](CLI::App* sub) {
    sub->add_option("--log-base", log_base, "bits (default) or nats")
        ->check(CLI::IsMember({"bits", "nats"}));
  };
  auto add_workers = [&](CLI::App* sub) {
    sub->add_option("--workers", c.workers, "Worker threads (0 = all cores)");
  };
  auto add_giant = [&](CLI::App* sub) {
    sub->add_flag("--giant-component", c.giant_component,
                  "Analyse only the largest connected component of each graph");
  };
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out,-o", c.output_path, "Output file ('-' for stdout)");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "json (default) or csv");
  };
  auto add_degrees = [&](CLI::App* sub) {
    sub->add_option("--mean-degrees", mean_degrees,
                    "start:stop:step or comma list (default 8:40:4)");
  };
  auto add_clusters = [&](CLI::App* sub) {
    sub->add_option("--partition", c.partition_path, "CSV of label,cluster_name rows");
    sub->add_option("--cluster-pairs", cluster_pairs,
                    "first:second[,first:second...] (default: all pairs)");
  };

  auto* build = app.add_subcommand("build", "Threshold a correlation matrix into a graph");
  build->add_option("--corr", c.corr_path, "Correlation matrix CSV");
  build->add_option("--series", c.series_path, "Time-series CSV (Pearson correlation)");
  auto* mean_degree_opt =
      build->add_option("--mean-degree", mean_degree, "Target mean degree (default 28)")
          ->check(CLI::PositiveNumber);
  build->add_option("--threshold", c.threshold, "Keep pairs with |c| > threshold instead");
  build->add_option("--labels-out", c.labels_out_path, "Write node labels here");
  build->add_option("--corr-out", c.corr_out_path, "Write the correlation matrix here");
  add_out(build);
  add_giant(build);

  auto* parity = app.add_subcommand("parity", "Parity matrix of a graph");
  parity->add_option("--graph", c.graph_path, "Edge list")->required();
  parity->add_option("--labels", c.labels_path, "Label file");
  add_log_base(parity);
  add_out(parity);
  add_giant(parity);
  add_workers(parity);

  auto* sweep = app.add_subcommand("sweep", "Average parity across a density sweep");
  sweep->add_option("--corr", c.corr_path, "Correlation matrix CSV")->required();
  add_degrees(sweep);
  add_log_base(sweep);
  add_out(sweep);
  add_format(sweep);
  add_giant(sweep);
  add_workers(sweep);

  auto* compare = app.add_subcommand("compare", "Paired-condition comparison at matched densities");
  compare->add_option("--corr-a", c.corr_a_path, "Condition A correlation CSV")->required();
  compare->add_option("--corr-b", c.corr_b_path, "Condition B correlation CSV")->required();
  compare->add_option("--subject", c.subject_id, "Subject id for the report");
  add_clusters(compare);
  add_degrees(compare);
  add_log_base(compare);
  add_out(compare);
  add_format(compare);
  add_giant(compare);
  add_workers(compare);

  auto* cohort = app.add_subcommand("cohort", "Paired comparison over a manifest of subjects");
  cohort->add_option("--manifest", c.manifest_path, "CSV of subject_id,path_a,path_b")->required();
  cohort->add_option("--seed", c.seed, "Recorded in the report");
  add_clusters(cohort);
  add_degrees(cohort);
  add_log_base(cohort);
  add_out(cohort);
  add_format(cohort);
  add_giant(cohort);
  add_workers(cohort);

  auto* synth = app.add_subcommand("synth", "Generate graphs or correlation matrices");
  synth->add_option("--model", c.model,
                    "complete|cycle|path|star|er|rewire|block|perturb")->required();
  synth->add_option("--n", c.n, "Node count");
  synth->add_option("--p", c.p, "Edge probability (er)");
  synth->add_option("--seed", c.seed, "Random seed");
  synth->add_option("--graph", c.graph_path, "Input edge list (rewire)");
  synth->add_option("--fraction", c.fraction, "Fraction of edges to rewire");
  synth->add_option("--blocks", blocks, "Comma-separated block sizes (block)");
  synth->add_option("--within", c.within, "Within-block correlation (block)");
  synth->add_option("--between", c.between, "Between-block correlation (block)");
  synth->add_option("--jitter", c.jitter, "Uniform noise half-width (block)");
  synth->add_option("--corr", c.corr_path, "Input correlation CSV (perturb)");
  synth->add_option("--amplitude", c.amplitude, "Noise half-width (perturb)");
  synth->add_option("--labels", c.labels_path, "Node labels for block matrices");
  add_out(synth);

  auto* exporter = app.add_subcommand("export", "Cutoff edge list of a parity matrix");
  exporter->add_option("--parity", c.parity_path, "Parity matrix CSV")->required();
  exporter->add_option("--cutoff", c.cutoff, "Keep pairs with parity >= cutoff (default 0.25)");
  add_out(exporter);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    std::string message = out.str() + err.str();
    while (!message.empty() && message.back() == '\n') message.pop_back();
    throw UsageError(message, code == 0 ? 0 : 2);
  }

  for (std::size_t k = 0; k < std::size(kCommandNames); ++k) {
    if (app.got_subcommand(std::string(kCommandNames[k]))) c.command = static_cast<Command>(k);
  }
  c.log_base = ParseLogBase(log_base);
  if (!cluster_pairs.empty()) c.cluster_pairs = ParseClusterPairs(cluster_pairs);
  if (!blocks.empty()) c.block_sizes = ParseSizes(blocks);
  const bool has_mean_degree = mean_degree_opt->count() > 0;
  if (c.command == Command::kBuild) {
    if (has_mean_degree) c.mean_degrees = {mean_degree};
  } else if (c.command == Command::kSweep || c.command == Command::kCompare ||
             c.command == Command::kCohort) {
    c.mean_degrees = ParseMeanDegrees(mean_degrees.empty() ? kDefaultMeanDegreeGrid : mean_degrees);
  }
  Validate(c, has_mean_degree);
  return c;
}

void Run(const RunConfig& config, std::ostream& out) {
  switch (config.command) {
    case Command::kBuild: return RunBuild(config, out);
    case Command::kParity: return RunParity(config, out);
    case Command::kSweep: return RunSweep(config, out);
    case Command::kCompare: return RunCompare(config, out);
    case Command::kCohort: return RunCohort(config, out);
    case Command::kSynth: return RunSynth(config, out);
    case Command::kExport: return RunExport(config, out);
  }
}

int Main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    Run(ParseArgs(argc, argv), out);
    return 0;
  } catch (const UsageError& e) {
    if (e.exit_code() == 0) {
      out << e.what() << '\n';
      return 0;
    }
    err << "infoparity: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    err << "infoparity: error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace infoparity::cli
