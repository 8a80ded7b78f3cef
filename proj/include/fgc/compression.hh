#ifndef FGC_COMPRESSION_HH
#define FGC_COMPRESSION_HH

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fgc/graph.hh"
#include "fgc/matcher.hh"

namespace fgc {

/// Patterns in a compression family must have at least this many nodes.
inline constexpr std::size_t kMinFamilyMemberSize = 3;

/// Partition of a graph's nodes. Class IDs are dense and ordered by the
/// smallest node each class contains.
struct NodePartition {
  std::vector<std::size_t> class_of;
  std::size_t class_count = 0;

  std::vector<std::vector<NodeId>> classes() const;
  bool is_discrete() const { return class_count == class_of.size(); }
};

/// Classes of the transitive closure of "lie in a common occurrence of f".
NodePartition occurrence_partition(const Graph& g, const Pattern& f);

struct CompressionResult {
  Graph quotient;
  NodePartition partition;

  bool changed() const { return !partition.is_discrete(); }
};

/// Quotient of g by occurrence_partition(g, f). Intra-class edges vanish and
/// parallel cross-class edges collapse to one.
CompressionResult compress_step(const Graph& g, const Pattern& f);

/// Quotient of g by an arbitrary partition.
Graph quotient_graph(const Graph& g, const NodePartition& partition);

struct FgcInstance {
  Graph g;
  Graph h;
  std::vector<Pattern> family;
};

/// Ordered family indices; replaying them from g reaches a graph isomorphic
/// to h, each step strictly shrinking the graph.
struct CompressionWitness {
  std::vector<std::size_t> steps;

  friend bool operator==(const CompressionWitness&, const CompressionWitness&) = default;
};

/// Throws FamilyMemberTooSmall naming the first offending pattern.
void validate(const FgcInstance& instance);

/// Pattern name, or "#<index>" when unnamed.
std::string pattern_label(const std::vector<Pattern>& family, std::size_t index);

enum class Verdict { Yes, No, Inconclusive };

std::string to_string(Verdict verdict);

struct SolveOptions {
  /// Give up with Verdict::Inconclusive after expanding this many states.
  std::optional<std::uint64_t> max_states;
};

struct SolveStats {
  std::uint64_t states_explored = 0;
  std::uint64_t memo_hits = 0;
};

struct SolveResult {
  Verdict verdict = Verdict::No;
  CompressionWitness witness;              // meaningful when verdict == Yes
  std::vector<std::size_t> intermediate_sizes;  // node counts of G^0..G^k along the witness
  SolveStats stats;
};

/**
 * Exhaustive depth-first search over compression sequences.
 *
 * Successors of a state are the effective F_i-compressions in ascending i.
 * Expanded states are memoized by canonical certificate, so a NO verdict
 * means every reachable graph (up to isomorphism) was examined. States with
 * fewer nodes or edges than h are dead ends since neither count can grow.
 * The first witness in DFS order is returned.
 */
SolveResult solve_fgc(const FgcInstance& instance, const SolveOptions& options = {});

/// G^0..G^k for the given steps. Throws InvalidArgument on a bad index.
std::vector<Graph> replay_trace(const Graph& g, std::span<const Pattern> family, std::span<const std::size_t> steps);

Graph replay(const Graph& g, std::span<const Pattern> family, std::span<const std::size_t> steps);

}  // namespace fgc

#endif
