#ifndef INFOPARITY_NETWORK_BUILDER_H_
#define INFOPARITY_NETWORK_BUILDER_H_

#include <cstddef>
#include <string>
#include <vector>

#include "infoparity/graph.h"

namespace infoparity {

// Symmetric correlation matrix with unit diagonal and entries in [-1, 1].
class CorrelationMatrix {
 public:
  // Tolerance for asymmetry and for |c| exceeding 1 on ingestion.
  static constexpr double kTolerance = 1e-9;

  CorrelationMatrix() = default;

  // Validates shape, finiteness, symmetry and range within kTolerance, then
  // stores (C + C^T) / 2 clamped to [-1, 1] with the diagonal set to 1.
  static CorrelationMatrix FromRows(const std::vector<std::vector<double>>& rows,
                                    std::vector<std::string> labels = {});

  std::size_t node_count() const { return n_; }
  double at(NodeIndex i, NodeIndex j) const { return c_[i * n_ + j]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string Label(NodeIndex v) const;

  friend bool operator==(const CorrelationMatrix&, const CorrelationMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> c_;
  std::vector<std::string> labels_;
};

// Sample Pearson correlation between every pair of series. Throws on fewer
// than two samples, unequal lengths, non-finite values or a constant series
// (the message names the node).
CorrelationMatrix PearsonCorrelation(const std::vector<std::vector<double>>& series,
                                     std::vector<std::string> labels = {});

struct DensityTarget {
  double mean_degree = 0.0;
  std::size_t edge_count = 0;

  // edge_count = round(mean_degree * n / 2); throws unless
  // 1 <= edge_count <= n(n-1)/2.
  static DensityTarget ForMeanDegree(double mean_degree, std::size_t n);
  static DensityTarget ForEdgeCount(std::size_t edge_count, std::size_t n);

  friend bool operator==(const DensityTarget&, const DensityTarget&) = default;
};

// Edge (i, j) iff |c_ij| > tau.
Graph ThresholdByValue(const CorrelationMatrix& cm, double tau);

// Unordered pairs sorted by |c| descending, ties by (i, j) ascending.
std::vector<Edge> RankPairsByStrength(const CorrelationMatrix& cm);

// Exactly target.edge_count edges: the top of RankPairsByStrength.
Graph ThresholdToDensity(const CorrelationMatrix& cm, const DensityTarget& target);

struct SweepEntry {
  DensityTarget target;
  Graph graph;
  bool connected = false;
};

// One graph per target, in the order given. Every graph is a prefix of the
// same ranking, so edge sets are nested by edge count.
std::vector<SweepEntry> DensitySweep(const CorrelationMatrix& cm,
                                     const std::vector<DensityTarget>& targets);

// start, start + step, ... up to and including stop (within 1e-9).
std::vector<double> MeanDegreeGrid(double start, double stop, double step);

}  // namespace infoparity

#endif  // INFOPARITY_NETWORK_BUILDER_H_
