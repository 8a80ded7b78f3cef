#ifndef FGC_RANDOM_HH
#define FGC_RANDOM_HH

#include <cstdint>
#include <random>
#include <span>
#include <utility>

#include "fgc/graph.hh"

namespace fgc {

/// Seeded generator with platform-independent output. The standard
/// distributions are implementation-defined, so bounded draws and shuffles
/// are done by hand on top of mt19937_64.
class Rng {
 public:
  static constexpr const char* kName = "fgc-mt19937_64-v1";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform in [0, 1) with 53 bits of precision.
  double unit();

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Erdos-Renyi G(n, p).
Graph random_graph(std::size_t n, double p, Rng& rng);

/// Uniformly random node permutation.
std::vector<NodeId> random_permutation(std::size_t n, Rng& rng);

}  // namespace fgc

#endif
