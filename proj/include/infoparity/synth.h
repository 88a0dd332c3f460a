#ifndef INFOPARITY_SYNTH_H_
#define INFOPARITY_SYNTH_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "infoparity/graph.h"
#include "infoparity/network_builder.h"

namespace infoparity {

struct Seed {
  std::uint64_t value = 0;
};

// Identifies the generator stream below. Bump the version whenever any
// generator would produce different output for the same (parameters, seed).
inline constexpr std::string_view kRngAlgorithm = "mt19937_64/u53-rej/v1";

// Seeded random stream. The engine is fully specified by the standard; the
// uniform transforms are written out here because std distributions differ
// between standard library implementations.
class Rng {
 public:
  explicit Rng(Seed seed) : engine_(seed.value) {}

  // Uniform in [0, 1) with 53 random bits.
  double UniformDouble() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  // Uniform in [lo, hi].
  double UniformReal(double lo, double hi) { return lo + (hi - lo) * UniformDouble(); }
  // Uniform integer in [0, bound), bound >= 1, without modulo bias.
  std::uint64_t UniformIndex(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

Graph CompleteGraph(std::size_t n);  // n >= 1
Graph CycleGraph(std::size_t n);     // n >= 3
Graph PathGraph(std::size_t n);      // n >= 1
Graph StarGraph(std::size_t n);      // n >= 2, hub is node 0

// G(n, p): each unordered pair kept independently with probability p, pairs
// visited in lexicographic order.
Graph ErdosRenyi(std::size_t n, double p, Seed seed);

// Removes floor(fraction |E|) uniformly chosen edges and adds as many
// uniformly chosen pairs that were non-edges of g. Node and edge counts are
// preserved; labels are kept.
Graph Rewire(const Graph& g, double fraction, Seed seed);

// c_ij = within (same block) or between (different blocks) plus uniform noise
// in [-jitter, jitter], drawn once per unordered pair. block_of[v] is node v's
// block id; n = block_of.size().
CorrelationMatrix BlockCorrelation(const std::vector<std::size_t>& block_of, double within,
                                   double between, double jitter, Seed seed,
                                   std::vector<std::string> labels = {});

// block_of vector for consecutive blocks of the given sizes.
std::vector<std::size_t> BlocksFromSizes(const std::vector<std::size_t>& sizes);

// cm plus symmetric uniform noise in [-amplitude, amplitude], clamped to
// [-1, 1], unit diagonal. Labels are kept.
CorrelationMatrix PerturbCorrelation(const CorrelationMatrix& cm, double amplitude, Seed seed);

}  // namespace infoparity

#endif  // INFOPARITY_SYNTH_H_
