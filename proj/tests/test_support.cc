#include "test_support.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace infoparity::testing {

std::vector<std::vector<int>> OracleDistances(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kOracleInf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const Edge& e : g.edges()) {
    d[e.u][e.v] = 1;
    d[e.v][e.u] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i][k] == kOracleInf) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (d[k][j] == kOracleInf) continue;
        const int through = d[i][k] + d[k][j];
        if (d[i][j] == kOracleInf || through < d[i][j]) d[i][j] = through;
      }
    }
  }
  return d;
}

double OracleParity(const std::vector<std::vector<int>>& d, std::size_t i, std::size_t j,
                    bool bits) {
  const std::size_t n = d.size();
  double total = 0.0;
  for (int r = 1; r < static_cast<int>(n); ++r) {
    double in_i = 0, in_j = 0, in_both = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (k != i && d[i][k] == r) in_i += 1;
      if (k != j && d[j][k] == r) in_j += 1;
      if (k != i && k != j && d[i][k] == r && d[j][k] == r) in_both += 1;
    }
    if (in_both == 0) continue;
    const double p_i = in_i / static_cast<double>(n - 1);
    const double p_j = in_j / static_cast<double>(n - 1);
    const double p_ij = in_both / static_cast<double>(n - 2);
    total += p_ij * (std::log(p_ij) - std::log(p_i) - std::log(p_j));
  }
  return bits ? total / std::log(2.0) : total;
}

std::vector<std::vector<double>> OracleParityMatrix(const Graph& g, bool bits) {
  const auto d = OracleDistances(g);
  const std::size_t n = g.node_count();
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) m[i][j] = OracleParity(d, i, j, bits);
    }
  }
  return m;
}

Graph CompleteBipartite(std::size_t left, std::size_t right) {
  std::vector<std::pair<NodeIndex, NodeIndex>> pairs;
  for (std::size_t a = 0; a < left; ++a) {
    for (std::size_t b = 0; b < right; ++b) pairs.emplace_back(a, left + b);
  }
  return Graph::FromEdgeList(pairs, left + right);
}

std::vector<NodeIndex> RandomPermutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<NodeIndex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

CorrelationMatrix RandomCorrelation(std::size_t n, std::mt19937_64& rng,
                                    const std::vector<double>& levels) {
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, levels.empty() ? 0 : levels.size() - 1);
  std::vector<std::vector<double>> rows(n, std::vector<double>(n, 1.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = levels.empty() ? uniform(rng) : levels[pick(rng)];
      rows[i][j] = v;
      rows[j][i] = v;
    }
  }
  return CorrelationMatrix::FromRows(rows);
}

}  // namespace infoparity::testing
