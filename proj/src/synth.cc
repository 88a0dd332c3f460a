#include "infoparity/synth.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "infoparity/error.h"

namespace infoparity {
namespace {

using PairList = std::vector<std::pair<NodeIndex, NodeIndex>>;

void RequireAtLeast(std::size_t n, std::size_t minimum, const char* family) {
  if (n < minimum) {
    throw Error(std::string(family) + " graph needs n >= " + std::to_string(minimum) +
                ", got " + std::to_string(n));
  }
}

}  // namespace

std::uint64_t Rng::UniformIndex(std::uint64_t bound) {
  if (bound == 0) throw Error("UniformIndex bound must be positive");
  // Reject the top partial bucket.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x < limit) return x % bound;
  }
}

Graph CompleteGraph(std::size_t n) {
  RequireAtLeast(n, 1, "complete");
  PairList pairs;
  for (NodeIndex i = 0; i < n; ++i) {
    for (NodeIndex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  return Graph::FromEdgeList(pairs, n);
}

Graph CycleGraph(std::size_t n) {
  RequireAtLeast(n, 3, "cycle");
  PairList pairs;
  for (NodeIndex i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
  return Graph::FromEdgeList(pairs, n);
}

Graph PathGraph(std::size_t n) {
  RequireAtLeast(n, 1, "path");
  PairList pairs;
  for (NodeIndex i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return Graph::FromEdgeList(pairs, n);
}

Graph StarGraph(std::size_t n) {
  RequireAtLeast(n, 2, "star");
  PairList pairs;
  for (NodeIndex leaf = 1; leaf < n; ++leaf) pairs.emplace_back(0, leaf);
  return Graph::FromEdgeList(pairs, n);
}

Graph ErdosRenyi(std::size_t n, double p, Seed seed) {
  RequireAtLeast(n, 1, "Erdos-Renyi");
  if (!(p >= 0.0 && p <= 1.0)) throw Error("edge probability must lie in [0, 1]");
  Rng rng(seed);
  PairList pairs;
  for (NodeIndex i = 0; i < n; ++i) {
    for (NodeIndex j = i + 1; j < n; ++j) {
      if (rng.UniformDouble() < p) pairs.emplace_back(i, j);
    }
  }
  return Graph::FromEdgeList(pairs, n);
}

Graph Rewire(const Graph& g, double fraction, Seed seed) {
  if (!(fraction >= 0.0 && fraction <= 1.0)) throw Error("rewire fraction must lie in [0, 1]");
  const std::size_t n = g.node_count();
  const std::size_t moves =
      static_cast<std::size_t>(std::floor(fraction * static_cast<double>(g.edge_count())));
  const std::size_t non_edge_count = n * (n - 1) / 2 - g.edge_count();
  if (fraction > 0.0 && non_edge_count == 0) {
    throw Error("cannot rewire: the graph has no non-edges");
  }
  if (moves > non_edge_count) {
    throw Error("cannot rewire " + std::to_string(moves) + " edges: only " +
                std::to_string(non_edge_count) + " non-edges available");
  }
  if (moves == 0) return g;

  Rng rng(seed);
  // Partial Fisher-Yates: the first `moves` slots become the sampled subset.
  auto sample_prefix = [&](auto& items, std::size_t count) {
    for (std::size_t k = 0; k < count; ++k) {
      const std::size_t pick = k + rng.UniformIndex(items.size() - k);
      std::swap(items[k], items[pick]);
    }
  };

  std::vector<Edge> edges = g.edges();
  sample_prefix(edges, moves);

  std::vector<Edge> non_edges;
  non_edges.reserve(non_edge_count);
  for (NodeIndex i = 0; i < n; ++i) {
    for (NodeIndex j = i + 1; j < n; ++j) {
      if (!g.HasEdge(i, j)) non_edges.push_back({i, j});
    }
  }
  sample_prefix(non_edges, moves);

  PairList pairs;
  pairs.reserve(g.edge_count());
  for (std::size_t k = moves; k < edges.size(); ++k) pairs.emplace_back(edges[k].u, edges[k].v);
  for (std::size_t k = 0; k < moves; ++k) pairs.emplace_back(non_edges[k].u, non_edges[k].v);
  return Graph::FromEdgeList(pairs, n, g.labels());
}

std::vector<std::size_t> BlocksFromSizes(const std::vector<std::size_t>& sizes) {
  std::vector<std::size_t> block_of;
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    if (sizes[b] == 0) throw Error("block " + std::to_string(b) + " is empty");
    block_of.insert(block_of.end(), sizes[b], b);
  }
  return block_of;
}

CorrelationMatrix BlockCorrelation(const std::vector<std::size_t>& block_of, double within,
                                   double between, double jitter, Seed seed,
                                   std::vector<std::string> labels) {
  const std::size_t n = block_of.size();
  if (n == 0) throw Error("block correlation needs at least one node");
  if (!(within >= -1.0 && within <= 1.0 && between >= -1.0 && between <= within)) {
    throw Error("block correlation needs -1 <= between <= within <= 1");
  }
  if (!(jitter >= 0.0) || within + jitter > 1.0 || between - jitter < -1.0) {
    throw Error("jitter must be nonnegative and keep every entry inside [-1, 1]");
  }
  Rng rng(seed);
  std::vector<std::vector<double>> rows(n, std::vector<double>(n, 1.0));
  for (NodeIndex i = 0; i < n; ++i) {
    for (NodeIndex j = i + 1; j < n; ++j) {
      const double base = block_of[i] == block_of[j] ? within : between;
      const double value = std::clamp(base + rng.UniformReal(-jitter, jitter), -1.0, 1.0);
      rows[i][j] = value;
      rows[j][i] = value;
    }
  }
  return CorrelationMatrix::FromRows(rows, std::move(labels));
}

CorrelationMatrix PerturbCorrelation(const CorrelationMatrix& cm, double amplitude, Seed seed) {
  if (!(amplitude >= 0.0 && std::isfinite(amplitude))) {
    throw Error("perturbation amplitude must be a nonnegative number");
  }
  const std::size_t n = cm.node_count();
  Rng rng(seed);
  std::vector<std::vector<double>> rows(n, std::vector<double>(n, 1.0));
  for (NodeIndex i = 0; i < n; ++i) {
    for (NodeIndex j = i + 1; j < n; ++j) {
      const double value =
          std::clamp(cm.at(i, j) + rng.UniformReal(-amplitude, amplitude), -1.0, 1.0);
      rows[i][j] = value;
      rows[j][i] = value;
    }
  }
  return CorrelationMatrix::FromRows(rows, cm.labels());
}

}  // namespace infoparity
