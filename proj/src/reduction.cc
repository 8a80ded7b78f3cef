#include "fgc/reduction.hh"

#include <algorithm>
#include <map>
#include <numeric>

#include "fgc/canonical.hh"
#include "fgc/errors.hh"
#include "fgc/random.hh"

namespace fgc {

namespace {

Triple sorted(Triple t) {
  std::sort(t.begin(), t.end());
  return t;
}

std::string to_string(const Triple& t) {
  return "{" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + "}";
}

}  // namespace

void validate(const Xc3Instance& x) {
  if (x.k < 1) throw InvalidArgument("xc3: k must be at least 1, got " + std::to_string(x.k));
  const int universe = 3 * x.k;
  for (std::size_t j = 0; j < x.sets.size(); ++j) {
    const Triple s = sorted(x.sets[j]);
    if (s[0] < 1 || s[2] > universe)
      throw InvalidArgument("xc3: set " + std::to_string(j) + " " + to_string(x.sets[j]) + " leaves 1.." +
                            std::to_string(universe));
    if (s[0] == s[1] || s[1] == s[2])
      throw InvalidArgument("xc3: set " + std::to_string(j) + " " + to_string(x.sets[j]) +
                            " does not have 3 distinct elements");
  }
}

std::vector<std::string> xc3_warnings(const Xc3Instance& x) {
  std::map<int, int> appearances;
  for (const Triple& s : x.sets)
    for (int e : s) ++appearances[e];
  std::vector<std::string> warnings;
  for (const auto& [element, count] : appearances)
    if (count > 3)
      warnings.push_back("element " + std::to_string(element) + " appears in " + std::to_string(count) + " sets");
  return warnings;
}

bool is_exact_cover(const Xc3Instance& x, const CoverWitness& w) {
  std::vector<int> hits(3 * static_cast<std::size_t>(x.k) + 1, 0);
  for (std::size_t j : w.chosen) {
    if (j >= x.sets.size()) return false;
    for (int e : x.sets[j]) {
      if (e < 1 || e > 3 * x.k) return false;
      ++hits[e];
    }
  }
  return std::all_of(hits.begin() + 1, hits.end(), [](int h) { return h == 1; });
}

int gadget_size(int element) {
  if (element < 1) throw InvalidArgument("gadget_size: elements are numbered from 1, got " + std::to_string(element));
  return element + 2;
}

ReducedInstance xc3_to_fgc(const Xc3Instance& x, MatchMode mode) {
  validate(x);
  ReducedInstance reduced;
  reduced.source = x;
  reduced.mode = mode;

  std::vector<Graph> cycles;
  NodeId next = 0;
  for (int i = 1; i <= 3 * x.k; ++i) {
    const auto length = static_cast<NodeId>(gadget_size(i));
    reduced.element_blocks.push_back({next, next + length - 1});
    cycles.push_back(cycle_graph(length));
    next += length;
  }
  reduced.instance.g = disjoint_union(cycles);
  reduced.instance.h = empty_graph(static_cast<std::size_t>(x.k));

  std::map<Triple, std::size_t> family_of;
  for (std::size_t j = 0; j < x.sets.size(); ++j) {
    const Triple s = sorted(x.sets[j]);
    auto [it, inserted] = family_of.try_emplace(s, reduced.instance.family.size());
    if (inserted) {
      Graph gadget = disjoint_union({cycle_graph(gadget_size(s[0])), cycle_graph(gadget_size(s[1])),
                                     cycle_graph(gadget_size(s[2]))});
      reduced.instance.family.push_back({std::move(gadget), mode, "Z" + std::to_string(j)});
      reduced.family_to_set.push_back(j);
    }
    reduced.set_to_family.push_back(it->second);
  }
  return reduced;
}

std::optional<CoverWitness> solve_xc3_bruteforce(const Xc3Instance& x) {
  validate(x);
  const int universe = 3 * x.k;
  std::vector<char> covered(universe + 1, 0);
  std::vector<std::size_t> chosen;

  auto disjoint = [&](const Triple& s) {
    return std::none_of(s.begin(), s.end(), [&](int e) { return covered[e]; });
  };
  auto mark = [&](const Triple& s, char value) {
    for (int e : s) covered[e] = value;
  };
  auto search = [&](auto&& self) -> bool {
    int lowest = 1;
    while (lowest <= universe && covered[lowest]) ++lowest;
    if (lowest > universe) return true;
    for (std::size_t j = 0; j < x.sets.size(); ++j) {
      const Triple& s = x.sets[j];
      if (std::find(s.begin(), s.end(), lowest) == s.end() || !disjoint(s)) continue;
      mark(s, 1);
      chosen.push_back(j);
      if (self(self)) return true;
      chosen.pop_back();
      mark(s, 0);
    }
    return false;
  };
  if (!search(search)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return CoverWitness{chosen};
}

CompressionWitness cover_to_steps(const ReducedInstance& reduced, const CoverWitness& w) {
  if (!is_exact_cover(reduced.source, w)) throw InvalidWitness("cover_to_steps: chosen sets are not an exact cover");
  std::vector<std::size_t> chosen = w.chosen;
  std::sort(chosen.begin(), chosen.end());
  CompressionWitness steps;
  for (std::size_t j : chosen) steps.steps.push_back(reduced.set_to_family.at(j));

  const Graph end = replay(reduced.instance.g, reduced.instance.family, steps.steps);
  if (!is_isomorphic(end, reduced.instance.h))
    throw InvalidWitness("cover_to_steps: translated steps do not reach the target graph");
  return steps;
}

CoverWitness steps_to_cover(const ReducedInstance& reduced, const CompressionWitness& w) {
  const auto& family = reduced.instance.family;
  for (std::size_t step : w.steps)
    if (step >= family.size())
      throw InvalidWitness("steps_to_cover: step " + std::to_string(step) + " is not a family index");

  const std::vector<Graph> trace = replay_trace(reduced.instance.g, family, w.steps);
  CoverWitness cover;
  for (std::size_t i = 0; i < w.steps.size(); ++i)
    if (trace[i + 1].node_count() < trace[i].node_count()) cover.chosen.push_back(reduced.family_to_set[w.steps[i]]);
  std::sort(cover.chosen.begin(), cover.chosen.end());

  if (!is_exact_cover(reduced.source, cover))
    throw InvalidWitness("steps_to_cover: the selected sets are not an exact cover");
  if (!is_isomorphic(trace.back(), reduced.instance.h))
    throw InvalidWitness("steps_to_cover: replay does not reach the target graph");
  return cover;
}

Xc3Instance gen_xc3(int k, std::size_t num_sets, std::uint64_t seed, bool planted) {
  if (k < 1) throw InfeasibleParameters("gen_xc3: k must be at least 1");
  if (planted && num_sets < static_cast<std::size_t>(k))
    throw InfeasibleParameters("gen_xc3: a planted cover needs at least k = " + std::to_string(k) + " sets, got " +
                               std::to_string(num_sets));
  Rng rng(seed);
  const int universe = 3 * k;
  std::vector<int> elements(universe);
  std::iota(elements.begin(), elements.end(), 1);

  Xc3Instance x{k, {}};
  if (planted) {
    rng.shuffle(std::span<int>(elements));
    for (int t = 0; t < k; ++t) x.sets.push_back(sorted({elements[3 * t], elements[3 * t + 1], elements[3 * t + 2]}));
  }
  while (x.sets.size() < num_sets) {
    // Partial Fisher-Yates: the first three slots become a uniform 3-subset.
    for (int i = 0; i < 3; ++i) std::swap(elements[i], elements[i + rng.below(universe - i)]);
    x.sets.push_back(sorted({elements[0], elements[1], elements[2]}));
  }
  rng.shuffle(std::span<Triple>(x.sets));
  return x;
}

FgcInstance gen_theorem1_instance(const Theorem1Variant& variant, const Graph& g) {
  FgcInstance instance{g, empty_graph(1), {}};
  if (variant.kind == Theorem1Kind::HamiltonCycle) {
    if (g.node_count() != variant.size)
      throw InvalidArgument("HamiltonCycle " + std::to_string(variant.size) + " needs a graph on that many nodes, got " +
                            std::to_string(g.node_count()));
    instance.family.push_back({cycle_graph(variant.size), MatchMode::Motif, "C" + std::to_string(variant.size)});
  } else {
    if (variant.size < 1 || g.node_count() != 3 * variant.size)
      throw InvalidArgument("TrianglePartition " + std::to_string(variant.size) + " needs a graph on " +
                            std::to_string(3 * variant.size) + " nodes, got " + std::to_string(g.node_count()));
    std::vector<Graph> triangles(variant.size, cycle_graph(3));
    instance.family.push_back(
        {disjoint_union(triangles), MatchMode::Motif, std::to_string(variant.size) + "xC3"});
  }
  return instance;
}

bool hamiltonian_bruteforce(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n < 3) return false;
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  // Node 0 is fixed first; every cyclic order is a rotation of one that starts there.
  do {
    bool closed = g.has_edge(order[n - 1], order[0]);
    for (std::size_t i = 0; closed && i + 1 < n; ++i) closed = g.has_edge(order[i], order[i + 1]);
    if (closed) return true;
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return false;
}

bool triangle_partition_bruteforce(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n % 3 != 0) return false;
  std::vector<char> used(n, 0);
  auto search = [&](auto&& self) -> bool {
    NodeId a = 0;
    while (a < n && used[a]) ++a;
    if (a == n) return true;
    used[a] = 1;
    for (NodeId b = a + 1; b < n; ++b) {
      if (used[b]) continue;
      for (NodeId c = b + 1; c < n; ++c) {
        if (used[c] || !g.has_edge(a, b) || !g.has_edge(a, c) || !g.has_edge(b, c)) continue;
        used[b] = used[c] = 1;
        if (self(self)) return true;
        used[b] = used[c] = 0;
      }
    }
    used[a] = 0;
    return false;
  };
  return search(search);
}

}  // namespace fgc
