#ifndef FGC_REDUCTION_HH
#define FGC_REDUCTION_HH

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fgc/compression.hh"
#include "fgc/graph.hh"
#include "fgc/matcher.hh"

namespace fgc {

using Triple = std::array<int, 3>;

/// Exact cover by 3-sets: universe {1..3k}, candidate 3-subsets `sets`.
struct Xc3Instance {
  int k = 0;
  std::vector<Triple> sets;

  friend bool operator==(const Xc3Instance&, const Xc3Instance&) = default;
};

/// Throws InvalidArgument unless k >= 1 and every set has three distinct
/// elements in 1..3k.
void validate(const Xc3Instance& x);

/// Elements appearing in more than three sets. Informational only.
std::vector<std::string> xc3_warnings(const Xc3Instance& x);

/// Indices into Xc3Instance::sets, sorted ascending.
struct CoverWitness {
  std::vector<std::size_t> chosen;

  friend bool operator==(const CoverWitness&, const CoverWitness&) = default;
};

bool is_exact_cover(const Xc3Instance& x, const CoverWitness& w);

/// Length of the cycle gadget for element i: i + 2.
int gadget_size(int element);

/// Inclusive node-ID range.
struct NodeBlock {
  NodeId lo;
  NodeId hi;

  friend bool operator==(const NodeBlock&, const NodeBlock&) = default;
};

/// Output of the XC3 -> FGC reduction plus the layout needed to translate
/// witnesses. Duplicate sets share one family member.
struct ReducedInstance {
  Xc3Instance source;
  MatchMode mode = MatchMode::Graphlet;
  FgcInstance instance;
  std::vector<NodeBlock> element_blocks;    // [i - 1] holds element i's cycle
  std::vector<std::size_t> set_to_family;   // per set index
  std::vector<std::size_t> family_to_set;   // lowest set index per family member
};

/**
 * G is the disjoint union of cycles C_{i+2} for i = 1..3k, laid out in
 * ascending element order. Family member j is the union of the three cycles
 * of set j's elements (ascending), and H has k isolated nodes.
 */
ReducedInstance xc3_to_fgc(const Xc3Instance& x, MatchMode mode = MatchMode::Graphlet);

/// Branches on the lowest uncovered element, sets in ascending index order.
std::optional<CoverWitness> solve_xc3_bruteforce(const Xc3Instance& x);

/// Throws InvalidWitness if `w` is not an exact cover.
CompressionWitness cover_to_steps(const ReducedInstance& reduced, const CoverWitness& w);

/// Decodes the effective steps. Throws InvalidWitness unless they form an
/// exact cover and replay to a graph isomorphic to H.
CoverWitness steps_to_cover(const ReducedInstance& reduced, const CompressionWitness& w);

/// Deterministic in `seed`. With `planted`, a random partition of {1..3k}
/// into triples is among the sets; the rest are uniform 3-subsets. Set order
/// is shuffled. Throws InfeasibleParameters for k < 1 or planted with
/// num_sets < k.
Xc3Instance gen_xc3(int k, std::size_t num_sets, std::uint64_t seed, bool planted);

enum class Theorem1Kind { HamiltonCycle, TrianglePartition };

struct Theorem1Variant {
  Theorem1Kind kind;
  std::size_t size;  // n for HamiltonCycle, k for TrianglePartition
};

/// (g, single node, [C_n motif]) or (g, single node, [k disjoint triangles motif]).
FgcInstance gen_theorem1_instance(const Theorem1Variant& variant, const Graph& g);

bool hamiltonian_bruteforce(const Graph& g);
bool triangle_partition_bruteforce(const Graph& g);

}  // namespace fgc

#endif
