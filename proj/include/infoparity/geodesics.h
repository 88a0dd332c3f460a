#ifndef INFOPARITY_GEODESICS_H_
#define INFOPARITY_GEODESICS_H_

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <vector>

#include "infoparity/graph.h"

namespace infoparity {

using Distance = std::uint16_t;
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();
// Largest node count whose distances fit below the sentinel.
inline constexpr std::size_t kMaxDistanceNodes = kUnreachable;

// Hop distances from `source`; kUnreachable for nodes in other components.
std::vector<Distance> BfsDistances(const Graph& g, NodeIndex source);

// Dense row-major N x N geodesic distance matrix.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;

  std::size_t node_count() const { return n_; }
  Distance at(NodeIndex i, NodeIndex j) const { return d_[i * n_ + j]; }
  std::span<const Distance> row(NodeIndex i) const { return {d_.data() + i * n_, n_}; }
  // Largest finite off-diagonal distance; 0 when there is none.
  Distance diameter() const { return diameter_; }
  // Largest finite distance from i to any other node.
  Distance Eccentricity(NodeIndex i) const;
  bool fully_reachable() const { return fully_reachable_; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  friend DistanceMatrix AllPairsDistances(const Graph& g, std::size_t workers);

  std::size_t n_ = 0;
  std::vector<Distance> d_;
  Distance diameter_ = 0;
  bool fully_reachable_ = true;
};

// One BFS per source, distributed over `workers` threads (0 = hardware
// concurrency). The result does not depend on the worker count.
DistanceMatrix AllPairsDistances(const Graph& g, std::size_t workers = 1);

// Upper limit of the shell radius sum: the graph diameter.
inline std::size_t RMax(const DistanceMatrix& dm) { return dm.diameter(); }

// Debug dump: N comma-separated rows, `inf` for unreachable pairs.
void WriteDistanceCsv(const DistanceMatrix& dm, std::ostream& out);

}  // namespace infoparity

#endif  // INFOPARITY_GEODESICS_H_
