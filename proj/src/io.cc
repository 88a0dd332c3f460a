#include "infoparity/io.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "infoparity/error.h"

namespace infoparity::io {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::string Where(std::string_view source, std::size_t line) {
  return std::string(source) + ":" + std::to_string(line) + ": ";
}

bool TryParseDouble(std::string_view text, double& value) {
  text = Trim(text);
  if (text.empty()) return false;
  if (text.front() == '+') text.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc() && ptr == text.data() + text.size();
}

bool TryParseIndex(std::string_view text, std::size_t& value) {
  text = Trim(text);
  if (text.empty()) return false;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc() && ptr == text.data() + text.size();
}

// Non-comment, non-blank lines with their 1-based line numbers.
std::vector<std::pair<std::size_t, std::string>> DataLines(std::istream& in) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    const auto trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    lines.emplace_back(number, std::string(trimmed));
  }
  return lines;
}

bool IsIndexSequence(const std::vector<std::string>& labels) {
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (labels[v] != std::to_string(v)) return false;
  }
  return true;
}

template <typename Parser>
auto ReadWith(const std::filesystem::path& path, Parser&& parse) {
  std::ifstream in = OpenForRead(path);
  return parse(in, path.string());
}

}  // namespace

std::string FormatDouble(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto [ptr, ec] =
      std::to_chars(buffer, buffer + sizeof(buffer), value, std::chars_format::general, 17);
  return std::string(buffer, ptr);
}

double ParseDouble(std::string_view text, std::string_view what) {
  double value = 0.0;
  if (!TryParseDouble(text, value)) {
    throw Error(std::string(what) + ": '" + std::string(Trim(text)) + "' is not a number");
  }
  return value;
}

std::vector<std::string> SplitCsvLine(std::string_view line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    const char c = line[k];
    if (quoted) {
      if (c == '"') {
        if (k + 1 < line.size() && line[k + 1] == '"') {
          field.push_back('"');
          ++k;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
      was_quoted = true;
    } else if (c == ',') {
      fields.push_back(was_quoted ? field : std::string(Trim(field)));
      field.clear();
      was_quoted = false;
    } else {
      field.push_back(c);
    }
  }
  if (quoted) throw Error("unterminated quoted CSV field");
  fields.push_back(was_quoted ? field : std::string(Trim(field)));
  return fields;
}

std::string JoinCsvLine(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t k = 0; k < fields.size(); ++k) {
    if (k > 0) line.push_back(',');
    const std::string& f = fields[k];
    const bool needs_quotes = f.find_first_of(",\"\n\r") != std::string::npos ||
                              (!f.empty() && (f.front() == ' ' || f.back() == ' '));
    if (!needs_quotes) {
      line += f;
      continue;
    }
    line.push_back('"');
    for (char c : f) {
      if (c == '"') line.push_back('"');
      line.push_back(c);
    }
    line.push_back('"');
  }
  return line;
}

Graph ParseEdgeList(std::istream& in, std::string_view source) {
  std::optional<std::size_t> declared;
  std::vector<std::pair<NodeIndex, NodeIndex>> pairs;
  std::size_t max_index = 0;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    const auto trimmed = Trim(line);
    if (trimmed.empty()) continue;
    if (trimmed.front() == '#') {
      const auto body = Trim(trimmed.substr(1));
      if (body.starts_with("nodes=")) {
        std::size_t n = 0;
        if (!TryParseIndex(body.substr(6), n) || n == 0) {
          throw Error(Where(source, number) + "malformed node count declaration");
        }
        if (declared && *declared != n) {
          throw Error(Where(source, number) + "conflicting node count declarations");
        }
        declared = n;
      }
      continue;
    }
    std::istringstream fields{std::string(trimmed)};
    std::string a, b, extra;
    fields >> a >> b;
    std::size_t i = 0, j = 0;
    if (b.empty() || (fields >> extra) || !TryParseIndex(a, i) || !TryParseIndex(b, j)) {
      throw Error(Where(source, number) + "expected two node indices, got '" +
                  std::string(trimmed) + "'");
    }
    max_index = std::max({max_index, i, j});
    pairs.emplace_back(i, j);
  }
  if (!declared && pairs.empty()) {
    throw Error(std::string(source) + ": no edges and no '# nodes=N' declaration");
  }
  const std::size_t n = declared ? *declared : max_index + 1;
  try {
    return Graph::FromEdgeList(pairs, n);
  } catch (const Error& e) {
    throw Error(std::string(source) + ": " + e.what());
  }
}

void WriteEdgeList(const Graph& g, std::ostream& out, const std::vector<std::string>& comments) {
  out << "# nodes=" << g.node_count() << '\n';
  for (const auto& comment : comments) out << "# " << comment << '\n';
  for (const Edge& e : g.edges()) out << e.u << '\t' << e.v << '\n';
}

std::vector<std::string> ParseLabels(std::istream& in) {
  std::vector<std::string> labels;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    labels.push_back(line);
  }
  while (!labels.empty() && Trim(labels.back()).empty()) labels.pop_back();
  return labels;
}

void WriteLabels(const std::vector<std::string>& labels, std::ostream& out) {
  for (const auto& label : labels) out << label << '\n';
}

Graph ReadGraph(const std::filesystem::path& edges, const std::filesystem::path& labels) {
  Graph g = ReadWith(edges, [](std::istream& in, const std::string& src) {
    return ParseEdgeList(in, src);
  });
  if (labels.empty()) return g;
  std::ifstream in = OpenForRead(labels);
  try {
    return g.WithLabels(ParseLabels(in));
  } catch (const Error& e) {
    throw Error(labels.string() + ": " + e.what());
  }
}

CorrelationMatrix ParseCorrelationCsv(std::istream& in, std::string_view source) {
  auto lines = DataLines(in);
  if (lines.empty()) throw Error(std::string(source) + ": correlation matrix is empty");

  std::vector<std::string> labels;
  std::size_t first_row = 0;
  try {
    const auto header = SplitCsvLine(lines[0].second);
    double unused = 0.0;
    const bool numeric = std::all_of(header.begin(), header.end(), [&](const std::string& f) {
      return TryParseDouble(f, unused);
    });
    if (!numeric) {
      labels = header;
      first_row = 1;
    }
    std::vector<std::vector<double>> rows;
    for (std::size_t k = first_row; k < lines.size(); ++k) {
      const auto& [number, text] = lines[k];
      const auto fields = SplitCsvLine(text);
      std::vector<double> row;
      row.reserve(fields.size());
      for (std::size_t c = 0; c < fields.size(); ++c) {
        row.push_back(ParseDouble(fields[c], Where(source, number) + "column " + std::to_string(c + 1)));
      }
      rows.push_back(std::move(row));
    }
    if (!labels.empty() && labels.size() != rows.size()) {
      throw Error("header has " + std::to_string(labels.size()) + " labels but there are " +
                  std::to_string(rows.size()) + " data rows");
    }
    return CorrelationMatrix::FromRows(rows, std::move(labels));
  } catch (const Error& e) {
    const std::string what = e.what();
    if (what.starts_with(std::string(source) + ":")) throw;
    throw Error(std::string(source) + ": " + what);
  }
}

CorrelationMatrix ReadCorrelationCsv(const std::filesystem::path& path) {
  return ReadWith(path, [](std::istream& in, const std::string& src) {
    return ParseCorrelationCsv(in, src);
  });
}

void WriteCorrelationCsv(const CorrelationMatrix& cm, std::ostream& out,
                         const std::vector<std::string>& comments) {
  for (const auto& comment : comments) out << "# " << comment << '\n';
  if (!cm.labels().empty()) out << JoinCsvLine(cm.labels()) << '\n';
  for (NodeIndex i = 0; i < cm.node_count(); ++i) {
    for (NodeIndex j = 0; j < cm.node_count(); ++j) {
      if (j > 0) out << ',';
      out << FormatDouble(cm.at(i, j));
    }
    out << '\n';
  }
}

TimeSeries ParseTimeSeriesCsv(std::istream& in, std::string_view source) {
  auto lines = DataLines(in);
  if (lines.empty()) throw Error(std::string(source) + ": time-series file is empty");
  TimeSeries ts;
  ts.labels = SplitCsvLine(lines[0].second);
  ts.series.assign(ts.labels.size(), {});
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& [number, text] = lines[k];
    const auto fields = SplitCsvLine(text);
    if (fields.size() != ts.labels.size()) {
      throw Error(Where(source, number) + "expected " + std::to_string(ts.labels.size()) +
                  " columns, got " + std::to_string(fields.size()));
    }
    for (std::size_t c = 0; c < fields.size(); ++c) {
      ts.series[c].push_back(ParseDouble(fields[c], Where(source, number) + "column " + ts.labels[c]));
    }
  }
  try {
    ValidateLabels(ts.labels, ts.labels.size());
  } catch (const Error& e) {
    throw Error(std::string(source) + ": " + e.what());
  }
  return ts;
}

TimeSeries ReadTimeSeriesCsv(const std::filesystem::path& path) {
  return ReadWith(path, [](std::istream& in, const std::string& src) {
    return ParseTimeSeriesCsv(in, src);
  });
}

std::vector<std::pair<std::string, std::string>> ParsePartitionCsv(std::istream& in,
                                                                   std::string_view source) {
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& [number, text] : DataLines(in)) {
    const auto fields = SplitCsvLine(text);
    if (rows.empty() && fields.size() == 2 && fields[0] == "label" && fields[1] == "cluster_name") {
      continue;
    }
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      throw Error(Where(source, number) + "expected 'label,cluster_name'");
    }
    rows.emplace_back(fields[0], fields[1]);
  }
  if (rows.empty()) throw Error(std::string(source) + ": partition file has no rows");
  return rows;
}

std::vector<std::pair<std::string, std::string>> ReadPartitionCsv(
    const std::filesystem::path& path) {
  return ReadWith(path, [](std::istream& in, const std::string& src) {
    return ParsePartitionCsv(in, src);
  });
}

std::vector<ManifestEntry> ReadManifest(const std::filesystem::path& path) {
  std::ifstream in = OpenForRead(path);
  const std::string source = path.string();
  const auto base = path.parent_path();
  std::vector<ManifestEntry> entries;
  for (const auto& [number, text] : DataLines(in)) {
    const auto fields = SplitCsvLine(text);
    if (fields.size() != 3) {
      throw Error(Where(source, number) + "expected 'subject_id,path_a,path_b'");
    }
    if (fields[0] == "subject_id" && fields[1] == "path_a" && fields[2] == "path_b") continue;
    auto resolve = [&](const std::string& p) {
      std::filesystem::path q(p);
      return q.is_absolute() ? q : base / q;
    };
    for (const auto& e : entries) {
      if (e.subject_id == fields[0]) {
        throw Error(Where(source, number) + "duplicate subject id '" + fields[0] + "'");
      }
    }
    entries.push_back({fields[0], resolve(fields[1]), resolve(fields[2])});
  }
  if (entries.empty()) throw Error(source + ": manifest lists no subjects");
  return entries;
}

void WriteParityCsv(const ParityMatrix& pm, std::ostream& out) {
  std::vector<std::string> header;
  header.reserve(pm.node_count());
  for (NodeIndex v = 0; v < pm.node_count(); ++v) header.push_back(pm.Label(v));
  out << JoinCsvLine(header) << '\n';
  for (NodeIndex i = 0; i < pm.node_count(); ++i) {
    for (NodeIndex j = 0; j < pm.node_count(); ++j) {
      if (j > 0) out << ',';
      out << (i == j ? std::string("null") : FormatDouble(pm.at(i, j)));
    }
    out << '\n';
  }
}

ParityMatrix ParseParityCsv(std::istream& in, LogBase base, std::string_view source) {
  auto lines = DataLines(in);
  if (lines.empty()) throw Error(std::string(source) + ": parity matrix is empty");
  std::vector<std::string> labels = SplitCsvLine(lines[0].second);
  const std::size_t n = labels.size();
  if (lines.size() != n + 1) {
    throw Error(std::string(source) + ": expected " + std::to_string(n) +
                " data rows after the header, got " + std::to_string(lines.size() - 1));
  }
  std::vector<std::vector<double>> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [number, text] = lines[i + 1];
    const auto fields = SplitCsvLine(text);
    if (fields.size() != n) {
      throw Error(Where(source, number) + "expected " + std::to_string(n) + " columns");
    }
    values[i].resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        if (fields[j] != "null") throw Error(Where(source, number) + "diagonal entry must be null");
        continue;
      }
      values[i][j] = ParseDouble(fields[j], Where(source, number) + "column " + std::to_string(j + 1));
    }
  }
  if (IsIndexSequence(labels)) labels.clear();
  ParityMatrix pm(n, base, std::move(labels));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (values[i][j] != values[j][i]) {
        throw Error(std::string(source) + ": parity matrix is asymmetric at (" +
                    std::to_string(i) + ", " + std::to_string(j) + ")");
      }
      pm.Set(i, j, values[i][j]);
    }
  }
  return pm;
}

std::filesystem::path SidecarPath(const std::filesystem::path& parity_csv) {
  return std::filesystem::path(parity_csv.string() + ".json");
}

void WriteParityFiles(const ParityMatrix& pm, const ParityMetadata& meta,
                      const std::filesystem::path& path) {
  {
    std::ofstream out = OpenForWrite(path);
    WriteParityCsv(pm, out);
  }
  nlohmann::json j;
  j["schema"] = "infoparity.parity_matrix";
  j["schema_version"] = 1;
  j["log_base"] = std::string(ToString(meta.log_base));
  j["node_count"] = meta.node_count;
  j["edge_count"] = meta.edge_count;
  j["mean_degree"] = meta.mean_degree;
  j["connected"] = meta.connected;
  j["component_count"] = meta.component_count;
  j["diameter"] = meta.diameter;
  j["giant_component"] = meta.giant_component;
  if (meta.giant_component) j["kept_nodes"] = meta.kept_nodes;
  std::ofstream out = OpenForWrite(SidecarPath(path));
  out << j.dump(2) << '\n';
}

ParityMatrix ReadParityCsv(const std::filesystem::path& path) {
  LogBase base = LogBase::kBits;
  const auto sidecar = SidecarPath(path);
  if (std::filesystem::exists(sidecar)) {
    std::ifstream in = OpenForRead(sidecar);
    try {
      const auto j = nlohmann::json::parse(in);
      base = ParseLogBase(j.at("log_base").get<std::string>());
    } catch (const nlohmann::json::exception& e) {
      throw Error(sidecar.string() + ": " + e.what());
    }
  }
  return ReadWith(path, [base](std::istream& in, const std::string& src) {
    return ParseParityCsv(in, base, src);
  });
}

std::vector<std::pair<Edge, double>> SelectParityEdges(const ParityMatrix& pm, double cutoff) {
  if (std::isnan(cutoff)) throw Error("export cutoff must be a number");
  std::vector<std::pair<Edge, double>> selected;
  for (NodeIndex i = 0; i < pm.node_count(); ++i) {
    for (NodeIndex j = i + 1; j < pm.node_count(); ++j) {
      if (pm.at(i, j) >= cutoff) selected.push_back({{i, j}, pm.at(i, j)});
    }
  }
  std::sort(selected.begin(), selected.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return selected;
}

void ExportParityNetwork(const ParityMatrix& pm, double cutoff, std::ostream& out) {
  const auto selected = SelectParityEdges(pm, cutoff);
  out << "# infoparity parity network\n";
  out << "# log_base=" << ToString(pm.log_base()) << '\n';
  out << "# cutoff=" << FormatDouble(cutoff) << '\n';
  out << "# nodes=" << pm.node_count() << '\n';
  out << "# pairs=" << selected.size() << '\n';
  for (const auto& [edge, value] : selected) {
    out << pm.Label(edge.u) << '\t' << pm.Label(edge.v) << '\t' << FormatDouble(value) << '\n';
  }
}

void ExportParityNetwork(const ParityMatrix& pm, double cutoff, const std::filesystem::path& path) {
  std::ofstream out = OpenForWrite(path);
  ExportParityNetwork(pm, cutoff, out);
}

std::vector<WeightedEdge> ParseWeightedEdgeList(std::istream& in, std::string_view source) {
  std::vector<WeightedEdge> edges;
  for (const auto& [number, text] : DataLines(in)) {
    const auto first = text.find('\t');
    const auto second = first == std::string::npos ? first : text.find('\t', first + 1);
    if (second == std::string::npos || text.find('\t', second + 1) != std::string::npos) {
      throw Error(Where(source, number) + "expected 'label<TAB>label<TAB>weight'");
    }
    edges.push_back({text.substr(0, first), text.substr(first + 1, second - first - 1),
                     ParseDouble(text.substr(second + 1), Where(source, number) + "weight")});
  }
  return edges;
}

std::ofstream OpenForWrite(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out.exceptions(std::ios::badbit);
  return out;
}

std::ifstream OpenForRead(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "' for reading");
  return in;
}

}  // namespace infoparity::io
