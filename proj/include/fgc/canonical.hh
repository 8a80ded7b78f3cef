#ifndef FGC_CANONICAL_HH
#define FGC_CANONICAL_HH

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>

#include "fgc/graph.hh"

namespace fgc {

/// Byte string determined by the isomorphism class of a graph: two graphs
/// have equal certificates exactly when they are isomorphic.
class CanonicalCertificate {
 public:
  CanonicalCertificate() = default;
  explicit CanonicalCertificate(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const { return bytes_; }

  friend auto operator<=>(const CanonicalCertificate&, const CanonicalCertificate&) = default;

 private:
  std::string bytes_;
};

/**
 * Exact canonical form.
 *
 * Each connected component is labeled by individualization-refinement:
 * colors are refined by the multiset of neighbor colors to a fixpoint, then
 * the search branches on the vertices of the smallest non-singleton color
 * class. The lexicographically least upper-triangle adjacency encoding over
 * all leaves is kept. Subtrees equivalent under automorphisms discovered at
 * leaves are skipped, which does not change the minimum. The graph
 * certificate is the sorted list of component encodings.
 */
CanonicalCertificate canonical_certificate(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace fgc

template <>
struct std::hash<fgc::CanonicalCertificate> {
  std::size_t operator()(const fgc::CanonicalCertificate& c) const noexcept {
    return std::hash<std::string>{}(c.bytes());
  }
};

#endif
