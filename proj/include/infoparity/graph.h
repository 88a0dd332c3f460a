#ifndef INFOPARITY_GRAPH_H_
#define INFOPARITY_GRAPH_H_

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace infoparity {

using NodeIndex = std::size_t;

// Undirected edge stored canonically with u < v.
struct Edge {
  NodeIndex u = 0;
  NodeIndex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable undirected, unweighted simple graph over dense 0-based node
// indices. Edges are kept sorted and canonical; adjacency is stored in CSR
// form for traversal. Optional node labels are metadata only.
class Graph {
 public:
  Graph() = default;

  // Duplicates and reversed duplicates collapse to one edge. Self-loops are
  // dropped. Throws infoparity::Error on n == 0, an out-of-range index, or
  // invalid labels.
  static Graph FromEdgeList(std::span<const std::pair<NodeIndex, NodeIndex>> pairs,
                            std::size_t n, std::vector<std::string> labels = {});

  // Throws on a non-square, asymmetric or non-binary matrix, or a nonzero
  // diagonal.
  static Graph FromAdjacency(const std::vector<std::vector<int>>& matrix);

  std::size_t node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const NodeIndex> neighbors(NodeIndex v) const {
    return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(NodeIndex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool HasEdge(NodeIndex a, NodeIndex b) const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  // The node's label, or its decimal index when the graph is unlabeled.
  std::string Label(NodeIndex v) const;

  Graph WithLabels(std::vector<std::string> labels) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.node_count_ == b.node_count_ && a.edges_ == b.edges_ &&
           a.labels_ == b.labels_;
  }

 private:
  Graph(std::size_t n, std::vector<Edge> edges, std::vector<std::string> labels);

  std::size_t node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeIndex> adjacency_;
  std::vector<std::string> labels_;
};

// Throws if labels are nonempty and either not n long or not unique.
void ValidateLabels(const std::vector<std::string>& labels, std::size_t n);

// 2|E| / N.
double MeanDegree(const Graph& g);

struct ComponentPartition {
  // component_id[v] in [0, component_count()); component 0 is the largest.
  std::vector<std::size_t> component_id;
  // Sizes in descending order; ties ordered by smallest contained node.
  std::vector<std::size_t> component_sizes;

  std::size_t component_count() const { return component_sizes.size(); }
  bool connected() const { return component_sizes.size() <= 1; }
};

ComponentPartition ConnectedComponents(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  // original_index[new] = old.
  std::vector<NodeIndex> original_index;
  // new_index[old] = new, or nullopt for dropped nodes.
  std::vector<std::optional<NodeIndex>> new_index;
};

// Induced subgraph on the node set `keep`, which must be strictly increasing.
InducedSubgraph InduceSubgraph(const Graph& g, std::span<const NodeIndex> keep);

InducedSubgraph LargestComponentSubgraph(const Graph& g);

// Graph with node v renamed to permutation[v]. Labels follow their nodes.
Graph PermuteNodes(const Graph& g, std::span<const NodeIndex> permutation);

}  // namespace infoparity

#endif  // INFOPARITY_GRAPH_H_
