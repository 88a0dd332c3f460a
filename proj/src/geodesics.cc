#include "infoparity/geodesics.h"

#include <algorithm>
#include <ostream>

#include "infoparity/error.h"
#include "infoparity/parallel.h"

namespace infoparity {
namespace {

// Fills `dist` (length N, preset to kUnreachable) using `queue` as scratch.
void Bfs(const Graph& g, NodeIndex source, std::span<Distance> dist,
         std::vector<NodeIndex>& queue) {
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeIndex v = queue[head];
    const Distance next = static_cast<Distance>(dist[v] + 1);
    for (NodeIndex w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = next;
        queue.push_back(w);
      }
    }
  }
}

void CheckSize(const Graph& g) {
  if (g.node_count() >= kMaxDistanceNodes) {
    throw Error("graph has " + std::to_string(g.node_count()) +
                " nodes; distance matrices support fewer than " +
                std::to_string(kMaxDistanceNodes));
  }
}

}  // namespace

std::vector<Distance> BfsDistances(const Graph& g, NodeIndex source) {
  if (source >= g.node_count()) {
    throw Error("BFS source " + std::to_string(source) + " out of range for " +
                std::to_string(g.node_count()) + " nodes");
  }
  CheckSize(g);
  std::vector<Distance> dist(g.node_count(), kUnreachable);
  std::vector<NodeIndex> queue;
  queue.reserve(g.node_count());
  Bfs(g, source, dist, queue);
  return dist;
}

DistanceMatrix AllPairsDistances(const Graph& g, std::size_t workers) {
  CheckSize(g);
  const std::size_t n = g.node_count();
  DistanceMatrix dm;
  dm.n_ = n;
  dm.d_.assign(n * n, kUnreachable);

  ParallelFor(n, workers, [&](std::size_t source) {
    thread_local std::vector<NodeIndex> queue;
    queue.reserve(n);
    Bfs(g, source, std::span<Distance>(dm.d_.data() + source * n, n), queue);
  });

  Distance diameter = 0;
  bool reachable = true;
  for (Distance d : dm.d_) {
    if (d == kUnreachable) {
      reachable = false;
    } else {
      diameter = std::max(diameter, d);
    }
  }
  dm.diameter_ = diameter;
  dm.fully_reachable_ = reachable;
  return dm;
}

Distance DistanceMatrix::Eccentricity(NodeIndex i) const {
  Distance ecc = 0;
  for (Distance d : row(i)) {
    if (d != kUnreachable) ecc = std::max(ecc, d);
  }
  return ecc;
}

void WriteDistanceCsv(const DistanceMatrix& dm, std::ostream& out) {
  for (NodeIndex i = 0; i < dm.node_count(); ++i) {
    for (NodeIndex j = 0; j < dm.node_count(); ++j) {
      if (j > 0) out << ',';
      const Distance d = dm.at(i, j);
      if (d == kUnreachable) {
        out << "inf";
      } else {
        out << d;
      }
    }
    out << '\n';
  }
}

}  // namespace infoparity
