#ifndef INFOPARITY_REPORT_H_
#define INFOPARITY_REPORT_H_

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "infoparity/cohort.h"

namespace infoparity {

// JSON mappings for pipeline results. Derived summaries (mean and median
// divergence) are written but ignored on read.
void to_json(nlohmann::json& j, const ConditionStats& s);
void from_json(const nlohmann::json& j, ConditionStats& s);
void to_json(nlohmann::json& j, const SweepPoint& p);
void from_json(const nlohmann::json& j, SweepPoint& p);
void to_json(nlohmann::json& j, const DensityRecord& r);
void from_json(const nlohmann::json& j, DensityRecord& r);
void to_json(nlohmann::json& j, const SweepComparison& c);
void from_json(const nlohmann::json& j, SweepComparison& c);
void to_json(nlohmann::json& j, const ClusterPair& p);
void from_json(const nlohmann::json& j, ClusterPair& p);
void to_json(nlohmann::json& j, const ClusterRecord& r);
void from_json(const nlohmann::json& j, ClusterRecord& r);
void to_json(nlohmann::json& j, const ClusterTable& t);
void from_json(const nlohmann::json& j, ClusterTable& t);
void to_json(nlohmann::json& j, const SubjectAnalysis& a);
void from_json(const nlohmann::json& j, SubjectAnalysis& a);
void to_json(nlohmann::json& j, const SignTally& t);
void from_json(const nlohmann::json& j, SignTally& t);
void to_json(nlohmann::json& j, const MetricConsistency& m);
void from_json(const nlohmann::json& j, MetricConsistency& m);
void to_json(nlohmann::json& j, const SignConsistencyReport& r);
void from_json(const nlohmann::json& j, SignConsistencyReport& r);

namespace report {

inline constexpr int kSchemaVersion = 1;

std::string_view LibraryVersion();

// Common report header: schema name and version, library version, log base
// and the echoed run configuration.
nlohmann::json Envelope(std::string_view kind, const nlohmann::json& config, LogBase base);

std::vector<std::string> ConnectivityWarnings(std::string_view context, const ConditionStats& s,
                                              double mean_degree);

nlohmann::json SweepReport(const std::vector<SweepPoint>& points, std::size_t node_count,
                           const nlohmann::json& config, LogBase base);
nlohmann::json CompareReport(const SubjectAnalysis& analysis, const nlohmann::json& config,
                             LogBase base);
nlohmann::json CohortReport(std::span<const SubjectAnalysis> subjects,
                            const SignConsistencyReport& consistency,
                            const nlohmann::json& config, LogBase base);

// Pretty-printed with a trailing newline.
void WriteJson(const nlohmann::json& doc, std::ostream& out);

// Columns: mean_degree, edge_count, avg_parity, min_parity, median_parity,
// mean_geodesic_entropy, connected, component_count, diameter.
void WriteSweepCsv(const std::vector<SweepPoint>& points, std::ostream& out);

// Columns: subject, cluster_pair, mean_degree, value_a, value_b, divergence.
// The whole-network average is reported under cluster_pair "global".
void WriteDivergenceCsv(std::span<const SubjectAnalysis> subjects, std::ostream& out);

}  // namespace report
}  // namespace infoparity

#endif  // INFOPARITY_REPORT_H_
