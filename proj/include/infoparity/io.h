#ifndef INFOPARITY_IO_H_
#define INFOPARITY_IO_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "infoparity/graph.h"
#include "infoparity/network_builder.h"
#include "infoparity/parity.h"

namespace infoparity::io {

// Renders with 17 significant digits ("%.17g"), so the text always parses
// back to the identical double.
std::string FormatDouble(double value);
// Strict parse of a whole field as a double; throws Error naming `what`.
double ParseDouble(std::string_view text, std::string_view what);

// One CSV record. Fields may be double-quoted; "" inside quotes is a quote.
std::vector<std::string> SplitCsvLine(std::string_view line);
std::string JoinCsvLine(const std::vector<std::string>& fields);

// Edge list: optional `# nodes=N` comment, then `i<TAB>j` per line (any
// whitespace accepted on input), `#` comments. Without a nodes comment N is
// max index + 1.
Graph ParseEdgeList(std::istream& in, std::string_view source);
void WriteEdgeList(const Graph& g, std::ostream& out,
                   const std::vector<std::string>& comments = {});

// One label per line; line number is the node index.
std::vector<std::string> ParseLabels(std::istream& in);
void WriteLabels(const std::vector<std::string>& labels, std::ostream& out);

Graph ReadGraph(const std::filesystem::path& edges,
                const std::filesystem::path& labels = {});

// Optional label header row, then N rows of N comma-separated reals. Lines
// starting with '#' are comments.
CorrelationMatrix ParseCorrelationCsv(std::istream& in, std::string_view source);
CorrelationMatrix ReadCorrelationCsv(const std::filesystem::path& path);
void WriteCorrelationCsv(const CorrelationMatrix& cm, std::ostream& out,
                         const std::vector<std::string>& comments = {});

struct TimeSeries {
  std::vector<std::string> labels;
  // series[node][time]
  std::vector<std::vector<double>> series;
};
// Header row of labels, one column per node, one row per time point.
TimeSeries ParseTimeSeriesCsv(std::istream& in, std::string_view source);
TimeSeries ReadTimeSeriesCsv(const std::filesystem::path& path);

// Rows `label,cluster_name`; an identical header row is skipped.
std::vector<std::pair<std::string, std::string>> ParsePartitionCsv(std::istream& in,
                                                                   std::string_view source);
std::vector<std::pair<std::string, std::string>> ReadPartitionCsv(
    const std::filesystem::path& path);

struct ManifestEntry {
  std::string subject_id;
  std::filesystem::path path_a;
  std::filesystem::path path_b;
};
// Rows `subject_id,path_a,path_b`; an identical header row is skipped.
// Relative paths resolve against the manifest's directory.
std::vector<ManifestEntry> ReadManifest(const std::filesystem::path& path);

// Header row of labels, then N rows; the diagonal is written as `null`.
void WriteParityCsv(const ParityMatrix& pm, std::ostream& out);
ParityMatrix ParseParityCsv(std::istream& in, LogBase base, std::string_view source);

// Sidecar metadata written next to a parity CSV as `<path>.json`.
struct ParityMetadata {
  LogBase log_base = LogBase::kBits;
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  double mean_degree = 0.0;
  bool connected = false;
  std::size_t component_count = 0;
  std::size_t diameter = 0;
  // Nodes of the original graph that were analysed (giant-component runs).
  std::vector<NodeIndex> kept_nodes;
  bool giant_component = false;
};
std::filesystem::path SidecarPath(const std::filesystem::path& parity_csv);
void WriteParityFiles(const ParityMatrix& pm, const ParityMetadata& meta,
                      const std::filesystem::path& path);
// Reads the CSV and, when present, its sidecar (which supplies the log base;
// bits otherwise).
ParityMatrix ReadParityCsv(const std::filesystem::path& path);

struct WeightedEdge {
  std::string label_a;
  std::string label_b;
  double weight = 0.0;
  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// Pairs i < j with value >= cutoff, sorted by value descending then by
// (i, j) ascending.
std::vector<std::pair<Edge, double>> SelectParityEdges(const ParityMatrix& pm, double cutoff);

// `#` header lines, then `label_i<TAB>label_j<TAB>value` rows.
void ExportParityNetwork(const ParityMatrix& pm, double cutoff, std::ostream& out);
void ExportParityNetwork(const ParityMatrix& pm, double cutoff, const std::filesystem::path& path);
std::vector<WeightedEdge> ParseWeightedEdgeList(std::istream& in, std::string_view source);

// Opens for writing or throws Error naming the path.
std::ofstream OpenForWrite(const std::filesystem::path& path);
std::ifstream OpenForRead(const std::filesystem::path& path);

}  // namespace infoparity::io

#endif  // INFOPARITY_IO_H_
