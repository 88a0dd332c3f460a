#include "infoparity/parity.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "infoparity/error.h"
#include "infoparity/parallel.h"

namespace infoparity {
namespace {

using Count = std::uint32_t;

double Log(double x, LogBase base) {
  return base == LogBase::kBits ? std::log2(x) : std::log(x);
}

void RequireNodes(const DistanceMatrix& dm, std::size_t minimum, const char* what) {
  if (dm.node_count() < minimum) {
    throw Error(std::string(what) + " requires at least " + std::to_string(minimum) +
                " nodes, graph has " + std::to_string(dm.node_count()));
  }
}

void RequireIndex(const DistanceMatrix& dm, NodeIndex v) {
  if (v >= dm.node_count()) {
    throw Error("node " + std::to_string(v) + " out of range for " +
                std::to_string(dm.node_count()) + " nodes");
  }
}

// counts[r] = number of nodes at distance r from i, for r in 0..diameter.
// counts[0] is always zero: the reference node itself is not counted.
void NodeShellCounts(const DistanceMatrix& dm, NodeIndex i, std::span<Count> counts) {
  std::fill(counts.begin(), counts.end(), 0);
  for (Distance d : dm.row(i)) {
    if (d != kUnreachable) ++counts[d];
  }
  counts[0] = 0;
}

// Co-shell counting with a scratch table indexed by the raw distance value,
// so unreachable pairs land in their own slot instead of taking a branch.
class CoShellCounter {
 public:
  explicit CoShellCounter(std::size_t diameter)
      : diameter_(diameter), table_(std::size_t{kUnreachable} + 1, 0) {}

  // Returns a view of counts for radii 0..diameter. Slot 0 stays zero for
  // i != j because d(i, i) = 0 while d(j, i) > 0.
  std::span<const Count> Tally(const DistanceMatrix& dm, NodeIndex i, NodeIndex j) {
    std::fill(table_.begin(), table_.begin() + diameter_ + 1, 0);
    const auto ri = dm.row(i);
    const auto rj = dm.row(j);
    const std::size_t n = ri.size();
    const Distance* a = ri.data();
    const Distance* b = rj.data();
    for (std::size_t k = 0; k < n; ++k) {
      if (a[k] == b[k]) ++table_[a[k]];
    }
    return {table_.data(), diameter_ + 1};
  }

 private:
  std::size_t diameter_;
  std::vector<std::uint32_t> table_;
};

double ParityFromCounts(std::span<const Count> pair_counts, std::span<const Count> node_i,
                        std::span<const Count> node_j, std::size_t n, LogBase base) {
  const double node_norm = static_cast<double>(n - 1);
  const double pair_norm = static_cast<double>(n - 2);
  double sum = 0.0;
  for (std::size_t r = 1; r < pair_counts.size(); ++r) {
    if (pair_counts[r] == 0) continue;
    const double p_ij = pair_counts[r] / pair_norm;
    const double p_i = node_i[r] / node_norm;
    const double p_j = node_j[r] / node_norm;
    sum += p_ij * Log(p_ij / (p_i * p_j), base);
  }
  return sum;
}

RadialProfile ProfileFromCounts(std::span<const Count> counts, std::size_t base) {
  RadialProfile profile;
  profile.normalization_base = base;
  profile.mass.resize(counts.size() - 1);
  for (std::size_t r = 1; r < counts.size(); ++r) {
    profile.mass[r - 1] = static_cast<double>(counts[r]) / static_cast<double>(base);
  }
  return profile;
}

}  // namespace

std::string_view ToString(LogBase base) {
  return base == LogBase::kBits ? "bits" : "nats";
}

LogBase ParseLogBase(std::string_view text) {
  if (text == "bits" || text == "2") return LogBase::kBits;
  if (text == "nats" || text == "e") return LogBase::kNats;
  throw Error("unknown log base '" + std::string(text) + "' (expected bits or nats)");
}

double RadialProfile::total() const {
  double sum = 0.0;
  for (double m : mass) sum += m;
  return sum;
}

RadialProfile NodeProfile(const DistanceMatrix& dm, NodeIndex i) {
  RequireNodes(dm, 2, "node profile");
  RequireIndex(dm, i);
  std::vector<Count> counts(std::size_t{dm.diameter()} + 1);
  NodeShellCounts(dm, i, counts);
  return ProfileFromCounts(counts, dm.node_count() - 1);
}

RadialProfile PairProfile(const DistanceMatrix& dm, NodeIndex i, NodeIndex j) {
  RequireNodes(dm, 3, "pair profile");
  RequireIndex(dm, i);
  RequireIndex(dm, j);
  if (i == j) throw Error("pair profile requires two distinct nodes");
  CoShellCounter counter(dm.diameter());
  return ProfileFromCounts(counter.Tally(dm, i, j), dm.node_count() - 2);
}

double InformationParity(const DistanceMatrix& dm, NodeIndex i, NodeIndex j, LogBase base) {
  RequireNodes(dm, 3, "information parity");
  RequireIndex(dm, i);
  RequireIndex(dm, j);
  if (i == j) throw Error("information parity requires two distinct nodes");
  const std::size_t width = std::size_t{dm.diameter()} + 1;
  std::vector<Count> ci(width), cj(width);
  NodeShellCounts(dm, i, ci);
  NodeShellCounts(dm, j, cj);
  CoShellCounter counter(dm.diameter());
  return ParityFromCounts(counter.Tally(dm, i, j), ci, cj, dm.node_count(), base);
}

ParityMatrix::ParityMatrix(std::size_t n, LogBase base, std::vector<std::string> labels)
    : n_(n),
      base_(base),
      values_(n * n, 0.0),
      labels_(std::move(labels)) {
  ValidateLabels(labels_, n);
  for (std::size_t i = 0; i < n; ++i) {
    values_[i * n + i] = std::numeric_limits<double>::quiet_NaN();
  }
}

std::string ParityMatrix::Label(NodeIndex v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

void ParityMatrix::Set(NodeIndex i, NodeIndex j, double value) {
  if (i == j) throw Error("parity matrix diagonal is undefined");
  values_[i * n_ + j] = value;
  values_[j * n_ + i] = value;
}

bool operator==(const ParityMatrix& a, const ParityMatrix& b) {
  if (a.n_ != b.n_ || a.base_ != b.base_ || a.labels_ != b.labels_) return false;
  for (std::size_t i = 0; i < a.n_; ++i) {
    for (std::size_t j = 0; j < a.n_; ++j) {
      if (i != j && a.at(i, j) != b.at(i, j)) return false;
    }
  }
  return true;
}

ParityMatrix ComputeParityMatrix(const DistanceMatrix& dm, LogBase base, std::size_t workers,
                                 std::vector<std::string> labels) {
  RequireNodes(dm, 3, "parity matrix");
  const std::size_t n = dm.node_count();
  const std::size_t width = std::size_t{dm.diameter()} + 1;

  std::vector<Count> node_counts(n * width);
  for (NodeIndex i = 0; i < n; ++i) {
    NodeShellCounts(dm, i, std::span<Count>(node_counts.data() + i * width, width));
  }
  auto node_row = [&](NodeIndex v) {
    return std::span<const Count>(node_counts.data() + v * width, width);
  };

  ParityMatrix pm(n, base, std::move(labels));
  // Task i fills row i to the right of the diagonal; no two tasks share a cell.
  ParallelFor(n - 1, workers, [&](std::size_t i) {
    CoShellCounter counter(dm.diameter());
    for (NodeIndex j = i + 1; j < n; ++j) {
      pm.Set(i, j, ParityFromCounts(counter.Tally(dm, i, j), node_row(i), node_row(j), n, base));
    }
  });
  return pm;
}

ParityMatrix ComputeParityMatrix(const Graph& g, LogBase base, std::size_t workers) {
  return ComputeParityMatrix(AllPairsDistances(g, workers), base, workers, g.labels());
}

double AverageParity(const ParityMatrix& pm) {
  const std::size_t n = pm.node_count();
  if (n < 2) throw Error("average parity requires at least one node pair");
  double sum = 0.0;
  for (NodeIndex i = 0; i < n; ++i) {
    for (NodeIndex j = i + 1; j < n; ++j) sum += pm.at(i, j);
  }
  return sum / static_cast<double>(n * (n - 1) / 2);
}

ParityStats SummarizeParity(const ParityMatrix& pm) {
  const std::size_t n = pm.node_count();
  if (n < 2) throw Error("parity summary requires at least one node pair");
  std::vector<double> values;
  values.reserve(n * (n - 1) / 2);
  for (NodeIndex i = 0; i < n; ++i) {
    for (NodeIndex j = i + 1; j < n; ++j) values.push_back(pm.at(i, j));
  }
  ParityStats stats;
  stats.pair_count = values.size();
  stats.mean = AverageParity(pm);
  std::sort(values.begin(), values.end());
  stats.min = values.front();
  stats.max = values.back();
  const std::size_t mid = values.size() / 2;
  stats.median = values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
  return stats;
}

double GeodesicEntropy(const RadialProfile& profile, LogBase base) {
  double h = 0.0;
  for (double m : profile.mass) {
    if (m > 0.0) h -= m * Log(m, base);
  }
  return h;
}

double MeanGeodesicEntropy(const DistanceMatrix& dm, LogBase base) {
  RequireNodes(dm, 2, "geodesic entropy");
  double sum = 0.0;
  for (NodeIndex i = 0; i < dm.node_count(); ++i) {
    sum += GeodesicEntropy(NodeProfile(dm, i), base);
  }
  return sum / static_cast<double>(dm.node_count());
}

}  // namespace infoparity
