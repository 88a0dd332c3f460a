#include "infoparity/report.h"

#include <ostream>

#include "infoparity/io.h"
#include "infoparity/synth.h"

#ifndef INFOPARITY_VERSION
#define INFOPARITY_VERSION "0.0.0"
#endif

namespace infoparity {

using nlohmann::json;

void to_json(json& j, const ConditionStats& s) {
  j = json{{"avg_parity", s.avg_parity},
           {"min_parity", s.min_parity},
           {"median_parity", s.median_parity},
           {"mean_geodesic_entropy", s.mean_geodesic_entropy},
           {"connected", s.connected},
           {"component_count", s.component_count},
           {"diameter", s.diameter}};
  if (!s.kept_nodes.empty()) j["kept_nodes"] = s.kept_nodes;
}

void from_json(const json& j, ConditionStats& s) {
  j.at("avg_parity").get_to(s.avg_parity);
  j.at("min_parity").get_to(s.min_parity);
  j.at("median_parity").get_to(s.median_parity);
  j.at("mean_geodesic_entropy").get_to(s.mean_geodesic_entropy);
  j.at("connected").get_to(s.connected);
  j.at("component_count").get_to(s.component_count);
  j.at("diameter").get_to(s.diameter);
  s.kept_nodes = j.value("kept_nodes", std::vector<NodeIndex>{});
}

void to_json(json& j, const SweepPoint& p) {
  j = json{{"mean_degree", p.mean_degree}, {"edge_count", p.edge_count}, {"stats", p.stats}};
}

void from_json(const json& j, SweepPoint& p) {
  j.at("mean_degree").get_to(p.mean_degree);
  j.at("edge_count").get_to(p.edge_count);
  j.at("stats").get_to(p.stats);
}

void to_json(json& j, const DensityRecord& r) {
  j = json{{"mean_degree", r.mean_degree},
           {"edge_count", r.edge_count},
           {"condition_a", r.a},
           {"condition_b", r.b},
           {"divergence", r.divergence}};
}

void from_json(const json& j, DensityRecord& r) {
  j.at("mean_degree").get_to(r.mean_degree);
  j.at("edge_count").get_to(r.edge_count);
  j.at("condition_a").get_to(r.a);
  j.at("condition_b").get_to(r.b);
  j.at("divergence").get_to(r.divergence);
}

void to_json(json& j, const SweepComparison& c) {
  j = json{{"subject_id", c.subject_id},
           {"records", c.records},
           {"mean_divergence", c.MeanDivergence()},
           {"median_divergence", c.MedianDivergence()}};
}

void from_json(const json& j, SweepComparison& c) {
  j.at("subject_id").get_to(c.subject_id);
  j.at("records").get_to(c.records);
}

void to_json(json& j, const ClusterPair& p) { j = json{{"first", p.first}, {"second", p.second}}; }

void from_json(const json& j, ClusterPair& p) {
  j.at("first").get_to(p.first);
  j.at("second").get_to(p.second);
}

void to_json(json& j, const ClusterRecord& r) {
  j = json{{"cluster_pair", r.pair},   {"mean_degree", r.mean_degree}, {"value_a", r.value_a},
           {"value_b", r.value_b}, {"divergence", r.divergence}};
}

void from_json(const json& j, ClusterRecord& r) {
  j.at("cluster_pair").get_to(r.pair);
  j.at("mean_degree").get_to(r.mean_degree);
  j.at("value_a").get_to(r.value_a);
  j.at("value_b").get_to(r.value_b);
  j.at("divergence").get_to(r.divergence);
}

void to_json(json& j, const ClusterTable& t) {
  j = json{{"subject_id", t.subject_id}, {"rows", t.rows}};
}

void from_json(const json& j, ClusterTable& t) {
  j.at("subject_id").get_to(t.subject_id);
  j.at("rows").get_to(t.rows);
}

void to_json(json& j, const SubjectAnalysis& a) {
  j = json{{"sweep", a.sweep}, {"clusters", a.clusters}};
}

void from_json(const json& j, SubjectAnalysis& a) {
  j.at("sweep").get_to(a.sweep);
  j.at("clusters").get_to(a.clusters);
}

void to_json(json& j, const SignTally& t) {
  j = json{{"subjects", t.subjects}, {"positive", t.positive}, {"fraction", t.fraction}};
}

void from_json(const json& j, SignTally& t) {
  j.at("subjects").get_to(t.subjects);
  j.at("positive").get_to(t.positive);
  j.at("fraction").get_to(t.fraction);
}

void to_json(json& j, const MetricConsistency& m) {
  json per_density = json::array();
  for (const auto& [degree, tally] : m.per_density) {
    json entry = tally;
    entry["mean_degree"] = degree;
    per_density.push_back(std::move(entry));
  }
  j = json{{"metric", m.metric},
           {"overall", m.overall},
           {"per_density", std::move(per_density)},
           {"mean_divergence", m.mean_divergence},
           {"median_divergence", m.median_divergence}};
}

void from_json(const json& j, MetricConsistency& m) {
  j.at("metric").get_to(m.metric);
  j.at("overall").get_to(m.overall);
  m.per_density.clear();
  for (const auto& entry : j.at("per_density")) {
    m.per_density[entry.at("mean_degree").get<double>()] = entry.get<SignTally>();
  }
  j.at("mean_divergence").get_to(m.mean_divergence);
  j.at("median_divergence").get_to(m.median_divergence);
}

void to_json(json& j, const SignConsistencyReport& r) { j = json{{"metrics", r.metrics}}; }

void from_json(const json& j, SignConsistencyReport& r) { j.at("metrics").get_to(r.metrics); }

namespace report {

std::string_view LibraryVersion() { return INFOPARITY_VERSION; }

json Envelope(std::string_view kind, const json& config, LogBase base) {
  return json{{"schema", "infoparity." + std::string(kind)},
              {"schema_version", kSchemaVersion},
              {"library_version", std::string(LibraryVersion())},
              {"rng_algorithm", std::string(kRngAlgorithm)},
              {"log_base", std::string(ToString(base))},
              {"config", config}};
}

std::vector<std::string> ConnectivityWarnings(std::string_view context, const ConditionStats& s,
                                              double mean_degree) {
  std::vector<std::string> warnings;
  if (!s.connected) {
    std::string w = std::string(context) + " at mean degree " + io::FormatDouble(mean_degree) +
                    ": graph is disconnected (" + std::to_string(s.component_count) +
                    " components)";
    if (!s.kept_nodes.empty()) {
      w += "; analysed the largest component (" + std::to_string(s.kept_nodes.size()) + " nodes)";
    }
    warnings.push_back(std::move(w));
  }
  return warnings;
}

namespace {

void Append(json& warnings, const std::vector<std::string>& more) {
  for (const auto& w : more) warnings.push_back(w);
}

json SubjectWarnings(const SubjectAnalysis& a) {
  json warnings = json::array();
  for (const auto& r : a.sweep.records) {
    Append(warnings, ConnectivityWarnings("subject " + a.sweep.subject_id + " condition A", r.a,
                                          r.mean_degree));
    Append(warnings, ConnectivityWarnings("subject " + a.sweep.subject_id + " condition B", r.b,
                                          r.mean_degree));
  }
  return warnings;
}

std::string Bool(bool b) { return b ? "true" : "false"; }

}  // namespace

json SweepReport(const std::vector<SweepPoint>& points, std::size_t node_count,
                 const json& config, LogBase base) {
  json doc = Envelope("sweep", config, base);
  doc["node_count"] = node_count;
  doc["records"] = points;
  json warnings = json::array();
  for (const auto& p : points) Append(warnings, ConnectivityWarnings("sweep", p.stats, p.mean_degree));
  doc["warnings"] = std::move(warnings);
  return doc;
}

json CompareReport(const SubjectAnalysis& analysis, const json& config, LogBase base) {
  json doc = Envelope("compare", config, base);
  doc["subject"] = analysis;
  doc["warnings"] = SubjectWarnings(analysis);
  return doc;
}

json CohortReport(std::span<const SubjectAnalysis> subjects,
                  const SignConsistencyReport& consistency, const json& config, LogBase base) {
  json doc = Envelope("cohort", config, base);
  json list = json::array();
  json warnings = json::array();
  for (const auto& s : subjects) {
    list.push_back(s);
    for (const auto& w : SubjectWarnings(s)) warnings.push_back(w);
  }
  doc["subjects"] = std::move(list);
  doc["sign_consistency"] = consistency;
  doc["warnings"] = std::move(warnings);
  return doc;
}

void WriteJson(const json& doc, std::ostream& out) { out << doc.dump(2) << '\n'; }

void WriteSweepCsv(const std::vector<SweepPoint>& points, std::ostream& out) {
  out << "mean_degree,edge_count,avg_parity,min_parity,median_parity,mean_geodesic_entropy,"
         "connected,component_count,diameter\n";
  for (const auto& p : points) {
    out << io::FormatDouble(p.mean_degree) << ',' << p.edge_count << ','
        << io::FormatDouble(p.stats.avg_parity) << ',' << io::FormatDouble(p.stats.min_parity)
        << ',' << io::FormatDouble(p.stats.median_parity) << ','
        << io::FormatDouble(p.stats.mean_geodesic_entropy) << ',' << Bool(p.stats.connected)
        << ',' << p.stats.component_count << ',' << p.stats.diameter << '\n';
  }
}

void WriteDivergenceCsv(std::span<const SubjectAnalysis> subjects, std::ostream& out) {
  out << "subject,cluster_pair,mean_degree,value_a,value_b,divergence\n";
  for (const auto& s : subjects) {
    const std::string subject = io::JoinCsvLine({s.sweep.subject_id});
    for (const auto& r : s.sweep.records) {
      out << subject << ",global," << io::FormatDouble(r.mean_degree) << ','
          << io::FormatDouble(r.a.avg_parity) << ',' << io::FormatDouble(r.b.avg_parity) << ','
          << io::FormatDouble(r.divergence) << '\n';
    }
    for (const auto& row : s.clusters.rows) {
      out << subject << ',' << io::JoinCsvLine({row.pair.Name()}) << ','
          << io::FormatDouble(row.mean_degree) << ',' << io::FormatDouble(row.value_a) << ','
          << io::FormatDouble(row.value_b) << ',' << io::FormatDouble(row.divergence) << '\n';
    }
  }
}

}  // namespace report
}  // namespace infoparity
