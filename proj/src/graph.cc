#include "infoparity/graph.h"

#include <algorithm>
#include <queue>
#include <unordered_set>

#include "infoparity/error.h"

namespace infoparity {

void ValidateLabels(const std::vector<std::string>& labels, std::size_t n) {
  if (labels.empty()) return;
  if (labels.size() != n) {
    throw Error("expected " + std::to_string(n) + " node labels, got " +
                std::to_string(labels.size()));
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) {
      throw Error("duplicate node label '" + label + "'");
    }
  }
}

Graph::Graph(std::size_t n, std::vector<Edge> edges, std::vector<std::string> labels)
    : node_count_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
  std::vector<std::size_t> degree(n, 0);
  for (const Edge& e : edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted, so each neighbor list comes out sorted as well.
  for (const Edge& e : edges_) adjacency_[cursor[e.u]++] = e.v;
  for (const Edge& e : edges_) adjacency_[cursor[e.v]++] = e.u;
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1]);
  }
}

Graph Graph::FromEdgeList(std::span<const std::pair<NodeIndex, NodeIndex>> pairs,
                          std::size_t n, std::vector<std::string> labels) {
  if (n == 0) throw Error("graph must have at least one node");
  ValidateLabels(labels, n);
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    if (a >= n || b >= n) {
      throw Error("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                  ") has an index out of range for " + std::to_string(n) + " nodes");
    }
    if (a == b) continue;
    edges.push_back(a < b ? Edge{a, b} : Edge{b, a});
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(n, std::move(edges), std::move(labels));
}

Graph Graph::FromAdjacency(const std::vector<std::vector<int>>& matrix) {
  const std::size_t n = matrix.size();
  if (n == 0) throw Error("adjacency matrix is empty");
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) {
      throw Error("adjacency matrix row " + std::to_string(i) + " has " +
                  std::to_string(matrix[i].size()) + " entries, expected " +
                  std::to_string(n));
    }
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i][i] != 0) {
      throw Error("adjacency matrix has nonzero diagonal at node " + std::to_string(i));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const int value = matrix[i][j];
      if (value != 0 && value != 1) {
        throw Error("adjacency matrix entry (" + std::to_string(i) + ", " +
                    std::to_string(j) + ") is not 0 or 1");
      }
      if (value != matrix[j][i]) {
        throw Error("adjacency matrix is asymmetric at (" + std::to_string(i) + ", " +
                    std::to_string(j) + ")");
      }
      if (i < j && value == 1) edges.push_back({i, j});
    }
  }
  return Graph(n, std::move(edges), {});
}

bool Graph::HasEdge(NodeIndex a, NodeIndex b) const {
  if (a >= node_count_ || b >= node_count_) return false;
  const auto row = neighbors(a);
  return std::binary_search(row.begin(), row.end(), b);
}

std::string Graph::Label(NodeIndex v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

Graph Graph::WithLabels(std::vector<std::string> labels) const {
  ValidateLabels(labels, node_count_);
  Graph copy = *this;
  copy.labels_ = std::move(labels);
  return copy;
}

double MeanDegree(const Graph& g) {
  if (g.node_count() == 0) return 0.0;
  return 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.node_count());
}

ComponentPartition ConnectedComponents(const Graph& g) {
  const std::size_t n = g.node_count();
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> discovery(n, kUnassigned);
  std::vector<std::size_t> sizes;
  std::queue<NodeIndex> frontier;
  // Components are discovered in order of their smallest node.
  for (NodeIndex start = 0; start < n; ++start) {
    if (discovery[start] != kUnassigned) continue;
    const std::size_t id = sizes.size();
    std::size_t size = 0;
    discovery[start] = id;
    frontier.push(start);
    while (!frontier.empty()) {
      const NodeIndex v = frontier.front();
      frontier.pop();
      ++size;
      for (NodeIndex w : g.neighbors(v)) {
        if (discovery[w] == kUnassigned) {
          discovery[w] = id;
          frontier.push(w);
        }
      }
    }
    sizes.push_back(size);
  }

  std::vector<std::size_t> order(sizes.size());
  for (std::size_t c = 0; c < order.size(); ++c) order[c] = c;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sizes[a] > sizes[b]; });
  std::vector<std::size_t> rank(sizes.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;

  ComponentPartition partition;
  partition.component_id.resize(n);
  for (NodeIndex v = 0; v < n; ++v) partition.component_id[v] = rank[discovery[v]];
  partition.component_sizes.reserve(sizes.size());
  for (std::size_t c : order) partition.component_sizes.push_back(sizes[c]);
  return partition;
}

InducedSubgraph InduceSubgraph(const Graph& g, std::span<const NodeIndex> keep) {
  const std::size_t n = g.node_count();
  InducedSubgraph result;
  result.new_index.assign(n, std::nullopt);
  for (std::size_t k = 0; k < keep.size(); ++k) {
    if (keep[k] >= n || (k > 0 && keep[k] <= keep[k - 1])) {
      throw Error("induced subgraph node set must be strictly increasing and in range");
    }
    result.new_index[keep[k]] = k;
  }
  result.original_index.assign(keep.begin(), keep.end());

  std::vector<std::pair<NodeIndex, NodeIndex>> pairs;
  for (const Edge& e : g.edges()) {
    if (result.new_index[e.u] && result.new_index[e.v]) {
      pairs.emplace_back(*result.new_index[e.u], *result.new_index[e.v]);
    }
  }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.reserve(keep.size());
    for (NodeIndex v : keep) labels.push_back(g.labels()[v]);
  }
  result.graph = Graph::FromEdgeList(pairs, keep.size(), std::move(labels));
  return result;
}

InducedSubgraph LargestComponentSubgraph(const Graph& g) {
  const ComponentPartition parts = ConnectedComponents(g);
  std::vector<NodeIndex> keep;
  keep.reserve(parts.component_sizes.empty() ? 0 : parts.component_sizes[0]);
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    if (parts.component_id[v] == 0) keep.push_back(v);
  }
  return InduceSubgraph(g, keep);
}

Graph PermuteNodes(const Graph& g, std::span<const NodeIndex> permutation) {
  const std::size_t n = g.node_count();
  if (permutation.size() != n) throw Error("permutation length does not match node count");
  std::vector<bool> hit(n, false);
  for (NodeIndex p : permutation) {
    if (p >= n || hit[p]) throw Error("not a permutation of the node indices");
    hit[p] = true;
  }
  std::vector<std::pair<NodeIndex, NodeIndex>> pairs;
  pairs.reserve(g.edge_count());
  for (const Edge& e : g.edges()) pairs.emplace_back(permutation[e.u], permutation[e.v]);
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.resize(n);
    for (NodeIndex v = 0; v < n; ++v) labels[permutation[v]] = g.labels()[v];
  }
  return Graph::FromEdgeList(pairs, n, std::move(labels));
}

}  // namespace infoparity
