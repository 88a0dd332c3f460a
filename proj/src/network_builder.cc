#include "infoparity/network_builder.h"

#include <algorithm>
#include <cmath>

#include "infoparity/error.h"

namespace infoparity {
namespace {

std::size_t MaxEdges(std::size_t n) { return n * (n - 1) / 2; }

std::string PairName(NodeIndex i, NodeIndex j) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

Graph TakeTop(const CorrelationMatrix& cm, const std::vector<Edge>& ranked, std::size_t m) {
  std::vector<std::pair<NodeIndex, NodeIndex>> pairs;
  pairs.reserve(m);
  for (std::size_t k = 0; k < m; ++k) pairs.emplace_back(ranked[k].u, ranked[k].v);
  return Graph::FromEdgeList(pairs, cm.node_count(), cm.labels());
}

void CheckTarget(const DensityTarget& target, std::size_t n) {
  if (target.edge_count < 1 || target.edge_count > MaxEdges(n)) {
    throw Error("density target of " + std::to_string(target.edge_count) +
                " edges is outside [1, " + std::to_string(MaxEdges(n)) + "] for " +
                std::to_string(n) + " nodes");
  }
}

}  // namespace

CorrelationMatrix CorrelationMatrix::FromRows(const std::vector<std::vector<double>>& rows,
                                              std::vector<std::string> labels) {
  const std::size_t n = rows.size();
  if (n == 0) throw Error("correlation matrix is empty");
  ValidateLabels(labels, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw Error("correlation matrix row " + std::to_string(i) + " has " +
                  std::to_string(rows[i].size()) + " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const double v = rows[i][j];
      if (!std::isfinite(v)) throw Error("correlation entry " + PairName(i, j) + " is not finite");
      if (std::abs(v) > 1.0 + kTolerance) {
        throw Error("correlation entry " + PairName(i, j) + " = " + std::to_string(v) +
                    " lies outside [-1, 1]");
      }
    }
  }
  CorrelationMatrix cm;
  cm.n_ = n;
  cm.labels_ = std::move(labels);
  cm.c_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(rows[i][i] - 1.0) > kTolerance) {
      throw Error("correlation diagonal entry " + std::to_string(i) + " is not 1");
    }
    cm.c_[i * n + i] = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(rows[i][j] - rows[j][i]) > kTolerance) {
        throw Error("correlation matrix is asymmetric at " + PairName(i, j));
      }
      const double v = std::clamp(0.5 * (rows[i][j] + rows[j][i]), -1.0, 1.0);
      cm.c_[i * n + j] = v;
      cm.c_[j * n + i] = v;
    }
  }
  return cm;
}

std::string CorrelationMatrix::Label(NodeIndex v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

CorrelationMatrix PearsonCorrelation(const std::vector<std::vector<double>>& series,
                                     std::vector<std::string> labels) {
  const std::size_t n = series.size();
  if (n == 0) throw Error("no time series supplied");
  ValidateLabels(labels, n);
  auto name = [&](std::size_t v) { return labels.empty() ? std::to_string(v) : labels[v]; };
  const std::size_t length = series[0].size();
  if (length < 2) throw Error("time series need at least 2 samples, got " + std::to_string(length));

  // Centered, unit-norm copies; the correlation is then a plain dot product.
  std::vector<std::vector<double>> unit(n, std::vector<double>(length));
  for (std::size_t v = 0; v < n; ++v) {
    const auto& x = series[v];
    if (x.size() != length) {
      throw Error("time series for node " + name(v) + " has " + std::to_string(x.size()) +
                  " samples, expected " + std::to_string(length));
    }
    double mean = 0.0;
    double scale = 0.0;
    for (double s : x) {
      if (!std::isfinite(s)) throw Error("time series for node " + name(v) + " has a non-finite sample");
      mean += s;
      scale = std::max(scale, std::abs(s));
    }
    mean /= static_cast<double>(length);
    double norm = 0.0;
    for (std::size_t t = 0; t < length; ++t) {
      unit[v][t] = x[t] - mean;
      norm += unit[v][t] * unit[v][t];
    }
    norm = std::sqrt(norm);
    // Anything at rounding-noise level relative to the sample magnitude is a
    // constant series.
    if (!(norm > 1e-12 * scale * std::sqrt(static_cast<double>(length)))) {
      throw Error("time series for node " + name(v) + " has zero variance");
    }
    for (double& s : unit[v]) s /= norm;
  }

  std::vector<std::vector<double>> rows(n, std::vector<double>(n, 1.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double dot = 0.0;
      for (std::size_t t = 0; t < length; ++t) dot += unit[i][t] * unit[j][t];
      dot = std::clamp(dot, -1.0, 1.0);
      rows[i][j] = dot;
      rows[j][i] = dot;
    }
  }
  return CorrelationMatrix::FromRows(rows, std::move(labels));
}

DensityTarget DensityTarget::ForMeanDegree(double mean_degree, std::size_t n) {
  if (!std::isfinite(mean_degree) || mean_degree <= 0.0) {
    throw Error("mean degree must be a positive number, got " + std::to_string(mean_degree));
  }
  DensityTarget target;
  target.mean_degree = mean_degree;
  target.edge_count = static_cast<std::size_t>(std::llround(mean_degree * static_cast<double>(n) / 2.0));
  CheckTarget(target, n);
  return target;
}

DensityTarget DensityTarget::ForEdgeCount(std::size_t edge_count, std::size_t n) {
  DensityTarget target;
  target.edge_count = edge_count;
  target.mean_degree = n == 0 ? 0.0 : 2.0 * static_cast<double>(edge_count) / static_cast<double>(n);
  CheckTarget(target, n);
  return target;
}

Graph ThresholdByValue(const CorrelationMatrix& cm, double tau) {
  if (!(tau >= 0.0)) throw Error("threshold must be nonnegative");
  const std::size_t n = cm.node_count();
  std::vector<std::pair<NodeIndex, NodeIndex>> pairs;
  for (NodeIndex i = 0; i < n; ++i) {
    for (NodeIndex j = i + 1; j < n; ++j) {
      if (std::abs(cm.at(i, j)) > tau) pairs.emplace_back(i, j);
    }
  }
  return Graph::FromEdgeList(pairs, n, cm.labels());
}

std::vector<Edge> RankPairsByStrength(const CorrelationMatrix& cm) {
  const std::size_t n = cm.node_count();
  std::vector<Edge> pairs;
  pairs.reserve(MaxEdges(n));
  for (NodeIndex i = 0; i < n; ++i) {
    for (NodeIndex j = i + 1; j < n; ++j) pairs.push_back({i, j});
  }
  std::sort(pairs.begin(), pairs.end(), [&](const Edge& a, const Edge& b) {
    const double sa = std::abs(cm.at(a.u, a.v));
    const double sb = std::abs(cm.at(b.u, b.v));
    if (sa != sb) return sa > sb;
    return a < b;
  });
  return pairs;
}

Graph ThresholdToDensity(const CorrelationMatrix& cm, const DensityTarget& target) {
  CheckTarget(target, cm.node_count());
  return TakeTop(cm, RankPairsByStrength(cm), target.edge_count);
}

std::vector<SweepEntry> DensitySweep(const CorrelationMatrix& cm,
                                     const std::vector<DensityTarget>& targets) {
  if (targets.empty()) throw Error("density sweep needs at least one target");
  for (const auto& target : targets) CheckTarget(target, cm.node_count());
  const std::vector<Edge> ranked = RankPairsByStrength(cm);
  std::vector<SweepEntry> sweep;
  sweep.reserve(targets.size());
  for (const auto& target : targets) {
    Graph g = TakeTop(cm, ranked, target.edge_count);
    const bool connected = ConnectedComponents(g).connected();
    sweep.push_back({target, std::move(g), connected});
  }
  return sweep;
}

std::vector<double> MeanDegreeGrid(double start, double stop, double step) {
  if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step) || step <= 0.0 ||
      start > stop) {
    throw Error("mean degree grid needs finite start <= stop and a positive step");
  }
  std::vector<double> grid;
  for (std::size_t k = 0;; ++k) {
    const double value = start + static_cast<double>(k) * step;
    if (value > stop + 1e-9) break;
    grid.push_back(value);
  }
  return grid;
}

}  // namespace infoparity
