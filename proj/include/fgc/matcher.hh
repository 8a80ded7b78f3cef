#ifndef FGC_MATCHER_HH
#define FGC_MATCHER_HH

#include <compare>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "fgc/graph.hh"

namespace fgc {

enum class MatchMode {
  Motif,     // every pattern edge maps to a host edge
  Graphlet,  // additionally every pattern non-edge maps to a host non-edge
};

struct Pattern {
  Graph graph;
  MatchMode mode = MatchMode::Motif;
  std::optional<std::string> name;
};

/// Image node set of one injective embedding, sorted ascending.
struct Occurrence {
  std::vector<NodeId> nodes;

  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

/// Called with the image of each embedding found (unsorted, possibly
/// repeated across automorphic embeddings). Return false to stop.
using EmbeddingVisitor = std::function<bool(std::span<const NodeId> image)>;

/**
 * Backtracking enumeration of injective embeddings of `pattern` into `host`.
 *
 * Pattern components are matched largest first, each in BFS order, so every
 * node after a component's first has an already-mapped neighbor whose host
 * neighborhood supplies the candidates. Injectivity is global, and in
 * Graphlet mode the induced condition is checked across components too.
 * Returns false if the visitor stopped the search.
 */
bool for_each_embedding(const Pattern& pattern, const Graph& host, const EmbeddingVisitor& visit);

std::set<Occurrence> enumerate_occurrences(const Pattern& pattern, const Graph& host);

/// Stops at the first embedding.
bool has_occurrence(const Pattern& pattern, const Graph& host);

std::string to_string(MatchMode mode);

}  // namespace fgc

#endif
