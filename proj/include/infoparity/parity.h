#ifndef INFOPARITY_PARITY_H_
#define INFOPARITY_PARITY_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "infoparity/geodesics.h"
#include "infoparity/graph.h"

namespace infoparity {

enum class LogBase { kBits, kNats };

std::string_view ToString(LogBase base);
// Accepts "bits" / "nats" (also "2" / "e").
LogBase ParseLogBase(std::string_view text);

// Shell occupation probabilities for radii 1..r_max. mass[r - 1] holds the
// value for radius r. Masses are normalized by N-1 (node profiles) or N-2
// (pair profiles) even when some nodes are unreachable, so they may sum to
// less than one.
struct RadialProfile {
  std::vector<double> mass;
  std::size_t normalization_base = 0;

  std::size_t r_max() const { return mass.size(); }
  // Mass at radius r; 0 outside 1..r_max.
  double at(std::size_t r) const {
    return (r >= 1 && r <= mass.size()) ? mass[r - 1] : 0.0;
  }
  double total() const;
};

// Fraction of the other N-1 nodes at each distance from i. Requires N >= 2.
RadialProfile NodeProfile(const DistanceMatrix& dm, NodeIndex i);

// Fraction of the other N-2 nodes lying at the same distance r from both i and
// j. Requires i != j and N >= 3.
RadialProfile PairProfile(const DistanceMatrix& dm, NodeIndex i, NodeIndex j);

// Sum over r of p_ij(r) log(p_ij(r) / (p_i(r) p_j(r))), skipping empty pair
// shells. Not clipped; can be negative.
double InformationParity(const DistanceMatrix& dm, NodeIndex i, NodeIndex j,
                         LogBase base = LogBase::kBits);

// Symmetric N x N matrix of pairwise parity. The diagonal is undefined and
// stored as NaN; it is never read by the aggregates.
class ParityMatrix {
 public:
  ParityMatrix() = default;
  ParityMatrix(std::size_t n, LogBase base, std::vector<std::string> labels = {});

  std::size_t node_count() const { return n_; }
  LogBase log_base() const { return base_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string Label(NodeIndex v) const;

  double at(NodeIndex i, NodeIndex j) const { return values_[i * n_ + j]; }
  // Sets both (i, j) and (j, i). i must differ from j.
  void Set(NodeIndex i, NodeIndex j, double value);

  friend bool operator==(const ParityMatrix& a, const ParityMatrix& b);

 private:
  std::size_t n_ = 0;
  LogBase base_ = LogBase::kBits;
  std::vector<double> values_;
  std::vector<std::string> labels_;
};

// All unordered pairs from one shared distance matrix, rows distributed over
// `workers` threads. Bitwise identical for every worker count.
ParityMatrix ComputeParityMatrix(const DistanceMatrix& dm, LogBase base,
                                 std::size_t workers = 1,
                                 std::vector<std::string> labels = {});
ParityMatrix ComputeParityMatrix(const Graph& g, LogBase base, std::size_t workers = 1);

// Mean over unordered pairs i < j.
double AverageParity(const ParityMatrix& pm);

struct ParityStats {
  std::size_t pair_count = 0;
  double mean = 0.0;
  double median = 0.0;
  double min = 0.0;
  double max = 0.0;
};
ParityStats SummarizeParity(const ParityMatrix& pm);

// -sum m log m over the stored masses, with 0 log 0 = 0.
double GeodesicEntropy(const RadialProfile& profile, LogBase base = LogBase::kBits);

// Mean node-profile entropy over all nodes.
double MeanGeodesicEntropy(const DistanceMatrix& dm, LogBase base = LogBase::kBits);

}  // namespace infoparity

#endif  // INFOPARITY_PARITY_H_
