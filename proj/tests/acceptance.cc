// Acceptance suite: every criterion runs at its stated size and tolerance
// and prints one PASS/FAIL line. Exit status is nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fgc/canonical.hh"
#include "fgc/compression.hh"
#include "fgc/errors.hh"
#include "fgc/matcher.hh"
#include "fgc/random.hh"
#include "fgc/reduction.hh"
#include "support/brute_force.hh"

using namespace fgc;

namespace {

constexpr std::uint64_t kSeed = 20240611;
constexpr double kReductionBudgetSeconds = 300.0;
constexpr double kMatcherBudgetSeconds = 60.0;

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct Criterion {
  int id;
  std::string title;
  bool passed = true;
  std::string detail;
  std::string first_failure;

  void fail(const std::string& why) {
    if (passed) first_failure = why;
    passed = false;
  }
};

// ------------------------------------------------------------ corpora

std::vector<Xc3Instance> exhaustive_corpus() {
  std::vector<Xc3Instance> corpus;
  // k = 1: the only 3-subset of {1,2,3}, taken 0, 1 or 2 times.
  for (std::size_t count = 0; count <= 2; ++count) corpus.push_back({1, std::vector<Triple>(count, Triple{1, 2, 3})});

  // k = 2: every collection of at most 3 distinct 3-subsets of {1..6}.
  std::vector<Triple> subsets;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b)
      for (int c = b + 1; c <= 6; ++c) subsets.push_back({a, b, c});
  const std::size_t m = subsets.size();
  corpus.push_back({2, {}});
  for (std::size_t i = 0; i < m; ++i) {
    corpus.push_back({2, {subsets[i]}});
    for (std::size_t j = i + 1; j < m; ++j) {
      corpus.push_back({2, {subsets[i], subsets[j]}});
      for (std::size_t l = j + 1; l < m; ++l) corpus.push_back({2, {subsets[i], subsets[j], subsets[l]}});
    }
  }
  return corpus;
}

// Half planted, half unplanted; k alternates in pairs between 2 and 3.
std::vector<Xc3Instance> random_corpus(std::uint64_t seed, std::size_t count) {
  Rng master(seed);
  std::vector<Xc3Instance> corpus;
  for (std::size_t i = 0; i < count; ++i) {
    const int k = (i / 2) % 2 == 0 ? 2 : 3;
    const bool planted = i % 2 == 0;
    const std::size_t num_sets = k + master.below(9 - k);  // k..8
    corpus.push_back(gen_xc3(k, num_sets, master.next(), planted));
  }
  return corpus;
}

std::string describe(const Xc3Instance& x) {
  std::ostringstream out;
  out << "k=" << x.k << " sets=[";
  for (std::size_t j = 0; j < x.sets.size(); ++j)
    out << (j ? "," : "") << "{" << x.sets[j][0] << "," << x.sets[j][1] << "," << x.sets[j][2] << "}";
  out << "]";
  return out.str();
}

// ------------------------------------------------------------ criteria 1, 2, 7

struct ReductionTally {
  std::size_t instances = 0;
  std::size_t yes = 0;
  std::size_t disagreements = 0;
  std::size_t round_trip_failures = 0;
};

// Runs both solvers in both modes. Appends a deterministic line per
// instance to `report` and records failures on the two criteria.
void check_reduction(const Xc3Instance& x, ReductionTally& tally, Criterion& equivalence, Criterion& round_trip,
                     std::ostream& report) {
  const auto cover = solve_xc3_bruteforce(x);
  ++tally.instances;
  tally.yes += cover.has_value();
  report << describe(x) << " xc3=" << (cover ? "yes" : "no");

  for (MatchMode mode : {MatchMode::Graphlet, MatchMode::Motif}) {
    const ReducedInstance reduced = xc3_to_fgc(x, mode);
    const SolveResult fgc = solve_fgc(reduced.instance);
    report << " " << to_string(mode) << "=" << to_string(fgc.verdict) << "[";
    for (std::size_t s : fgc.witness.steps) report << s << ";";
    report << "]";

    if ((fgc.verdict == Verdict::Yes) != cover.has_value() || fgc.verdict == Verdict::Inconclusive) {
      ++tally.disagreements;
      equivalence.fail(describe(x) + " in " + to_string(mode) + " mode: xc3=" + (cover ? "yes" : "no") +
                       " fgc=" + to_string(fgc.verdict));
      continue;
    }
    if (!cover) continue;

    try {
      const CompressionWitness steps = cover_to_steps(reduced, *cover);
      const Graph end = replay(reduced.instance.g, reduced.instance.family, steps.steps);
      if (!is_isomorphic(end, reduced.instance.h)) throw InvalidWitness("translated cover does not reach H");
      if (steps_to_cover(reduced, steps) != *cover) throw InvalidWitness("cover round-trip is not the identity");
      const CoverWitness decoded = steps_to_cover(reduced, fgc.witness);
      if (!is_exact_cover(x, decoded)) throw InvalidWitness("decoded solver witness is not an exact cover");
      if (fgc.intermediate_sizes.size() != fgc.witness.steps.size() + 1 ||
          std::adjacent_find(fgc.intermediate_sizes.begin(), fgc.intermediate_sizes.end(),
                             [](std::size_t a, std::size_t b) { return b >= a; }) != fgc.intermediate_sizes.end())
        throw InvalidWitness("intermediate sizes do not strictly decrease");
    } catch (const std::exception& e) {
      ++tally.round_trip_failures;
      round_trip.fail(describe(x) + " in " + to_string(mode) + " mode: " + e.what());
    }
  }
  report << "\n";
}

// ------------------------------------------------------------ criterion 3

void check_matcher(Criterion& c) {
  Rng rng(kSeed + 3);
  Timer timer;
  std::size_t pairs = 0, nonempty = 0;
  for (MatchMode mode : {MatchMode::Motif, MatchMode::Graphlet}) {
    for (int trial = 0; trial < 150; ++trial) {
      const Graph pattern = random_graph(1 + rng.below(4), rng.unit(), rng);
      const Graph host = random_graph(rng.below(8), rng.unit(), rng);
      const auto expected = testing::brute_force_occurrences(pattern, mode, host);
      std::set<std::vector<NodeId>> actual;
      for (const Occurrence& o : enumerate_occurrences({pattern, mode, std::nullopt}, host)) actual.insert(o.nodes);
      ++pairs;
      nonempty += !expected.empty();
      if (actual != expected)
        c.fail("mismatch for a " + std::to_string(pattern.node_count()) + "-node pattern in a " +
               std::to_string(host.node_count()) + "-node host (" + to_string(mode) + ")");
    }
  }
  const double seconds = timer.seconds();
  if (seconds >= kMatcherBudgetSeconds) c.fail("took " + std::to_string(seconds) + " s");
  c.detail = std::to_string(pairs) + " pairs (150 per mode), " + std::to_string(nonempty) + " with occurrences, " +
             std::to_string(seconds).substr(0, 5) + " s";
}

// ------------------------------------------------------------ criterion 4

void check_quotients(Criterion& c) {
  Rng rng(kSeed + 4);
  // Every 3-node pattern up to isomorphism, plus C_4.
  const std::vector<Graph> patterns{cycle_graph(3), cycle_graph(4), path_graph(3), empty_graph(3), Graph(3, {{0, 1}})};
  std::size_t trials = 0, shrinking = 0;
  for (int trial = 0; trial < 1200; ++trial) {
    const Graph g = random_graph(1 + rng.below(12), 0.05 + 0.5 * rng.unit(), rng);
    const Pattern f{patterns[rng.below(patterns.size())], trial % 2 ? MatchMode::Motif : MatchMode::Graphlet, {}};
    const CompressionResult r = compress_step(g, f);
    const NodePartition& p = r.partition;
    ++trials;
    auto violation = [&](const std::string& what) { c.fail("trial " + std::to_string(trial) + ": " + what); };

    // Partition validity.
    if (p.class_of.size() != g.node_count()) violation("partition does not cover the graph");
    std::vector<char> seen(p.class_count, 0);
    for (std::size_t cls : p.class_of) {
      if (cls >= p.class_count) violation("class ID out of range");
      else seen[cls] = 1;
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) violation("empty class");
    const auto occurrences = testing::brute_force_occurrences(f.graph, f.mode, g);
    for (const auto& occ : occurrences)
      for (NodeId v : occ)
        if (p.class_of[v] != p.class_of[occ.front()]) violation("an occurrence spans two classes");
    if (p.class_of != testing::brute_force_partition(f.graph, f.mode, g))
      violation("classes differ from the transitive closure of occurrence overlap");

    // Node-count law.
    const bool occurs = !occurrences.empty();
    shrinking += occurs;
    if (occurs && r.quotient.node_count() + 2 > g.node_count()) violation("an occurrence shrank the graph by < 2");
    if (!occurs && !(r.quotient == g)) violation("no occurrence but the graph changed");

    // Simplicity: Graph rejects self-loops, so check duplicates and the edge bound.
    std::set<Edge> distinct(r.quotient.edges().begin(), r.quotient.edges().end());
    if (distinct.size() != r.quotient.edge_count()) violation("duplicate edges in the quotient");
    for (const Edge& e : r.quotient.edges())
      if (e.u == e.v) violation("self-loop in the quotient");
    if (r.quotient.edge_count() > g.edge_count()) violation("quotient has more edges than the input");

    // Isomorphism equivariance.
    const auto perm = random_permutation(g.node_count(), rng);
    if (!is_isomorphic(compress_step(relabel(g, perm), f).quotient, r.quotient))
      violation("relabeling changed the quotient's isomorphism class");
  }
  c.detail = std::to_string(trials) + " trials, " + std::to_string(shrinking) + " with an occurrence";
}

// ------------------------------------------------------------ criterion 5

void check_theorem1(Criterion& c) {
  Rng rng(kSeed + 5);
  std::size_t hamiltonian = 0, yes_h = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 4 + rng.below(4);
    const Graph g = random_graph(n, 0.3 + 0.5 * rng.unit(), rng);
    const bool expected = hamiltonian_bruteforce(g);
    const bool actual = solve_fgc(gen_theorem1_instance({Theorem1Kind::HamiltonCycle, n}, g)).verdict == Verdict::Yes;
    ++hamiltonian;
    yes_h += expected;
    if (actual != expected) c.fail("HamiltonCycle disagreement on a " + std::to_string(n) + "-node graph");
  }

  std::vector<Graph> six_node_graphs{complete_graph(6), cycle_graph(6)};
  for (int trial = 0; trial < 60; ++trial) six_node_graphs.push_back(random_graph(6, 0.4 + 0.5 * rng.unit(), rng));
  std::size_t triangle = 0, yes_t = 0;
  for (std::size_t i = 0; i < six_node_graphs.size(); ++i) {
    const Graph& g = six_node_graphs[i];
    const bool expected = triangle_partition_bruteforce(g);
    const bool actual =
        solve_fgc(gen_theorem1_instance({Theorem1Kind::TrianglePartition, 2}, g)).verdict == Verdict::Yes;
    ++triangle;
    yes_t += expected;
    if (actual != expected) c.fail("TrianglePartition disagreement on graph #" + std::to_string(i));
  }
  if (!triangle_partition_bruteforce(complete_graph(6))) c.fail("K_6 oracle says NO");
  if (triangle_partition_bruteforce(cycle_graph(6))) c.fail("C_6 oracle says YES");
  c.detail = "HamiltonCycle " + std::to_string(hamiltonian) + " graphs (" + std::to_string(yes_h) +
             " yes), TrianglePartition " + std::to_string(triangle) + " graphs incl. K6, C6 (" +
             std::to_string(yes_t) + " yes)";
}

// ------------------------------------------------------------ criterion 6

bool overlaps(const Triple& a, const Triple& b) {
  return std::any_of(a.begin(), a.end(), [&](int e) { return std::find(b.begin(), b.end(), e) != b.end(); });
}

void check_exclusivity(Criterion& c) {
  Rng rng(kSeed + 6);
  std::size_t instances = 0, checks = 0;
  while (instances < 60) {
    const int k = 2 + static_cast<int>(rng.below(2));
    const Xc3Instance x = gen_xc3(k, 3 + rng.below(6), rng.next(), rng.below(2) == 0);
    bool any_overlap = false;
    for (std::size_t a = 0; a < x.sets.size(); ++a)
      for (std::size_t b = a + 1; b < x.sets.size(); ++b) any_overlap |= overlaps(x.sets[a], x.sets[b]);
    if (!any_overlap) continue;
    ++instances;
    for (MatchMode mode : {MatchMode::Graphlet, MatchMode::Motif}) {
      const ReducedInstance r = xc3_to_fgc(x, mode);
      for (std::size_t j = 0; j < x.sets.size(); ++j) {
        const Graph after = compress_step(r.instance.g, r.instance.family[r.set_to_family[j]]).quotient;
        for (std::size_t other = 0; other < x.sets.size(); ++other) {
          if (!overlaps(x.sets[j], x.sets[other])) continue;
          ++checks;
          if (has_occurrence(r.instance.family[r.set_to_family[other]], after))
            c.fail(describe(x) + ": Z" + std::to_string(other) + " still occurs after compressing Z" +
                   std::to_string(j) + " (" + to_string(mode) + ")");
        }
      }
    }
  }
  c.detail = std::to_string(instances) + " instances with overlapping sets, " + std::to_string(checks) +
             " (Z_j, Z_j') checks over both modes";
}

void print(const Criterion& c) {
  std::cout << (c.passed ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title;
  if (!c.detail.empty()) std::cout << ": " << c.detail;
  std::cout << "\n";
  if (!c.passed) std::cout << "     first failure: " << c.first_failure << "\n";
}

}  // namespace

int main() {
  std::vector<Criterion> results;

  Criterion equivalence{1, "reduction equivalence (XC3 vs FGC, graphlet and motif)"};
  Criterion round_trip{2, "witness round-trip"};
  Criterion determinism{7, "determinism of the seeded batch report"};
  {
    Timer timer;
    ReductionTally exhaustive, random;
    std::ostringstream exhaustive_report, random_report;
    for (const Xc3Instance& x : exhaustive_corpus())
      check_reduction(x, exhaustive, equivalence, round_trip, exhaustive_report);
    for (const Xc3Instance& x : random_corpus(kSeed, 200))
      check_reduction(x, random, equivalence, round_trip, random_report);
    const double seconds = timer.seconds();
    if (seconds >= kReductionBudgetSeconds) equivalence.fail("took " + std::to_string(seconds) + " s");
    if (exhaustive.instances != 3 + 1 + 20 + 190 + 1140) equivalence.fail("exhaustive corpus has the wrong size");

    equivalence.detail = std::to_string(exhaustive.instances) + " exhaustive + " + std::to_string(random.instances) +
                         " random instances (" + std::to_string(exhaustive.yes + random.yes) + " yes), " +
                         std::to_string(exhaustive.disagreements + random.disagreements) + " disagreements, " +
                         std::to_string(seconds).substr(0, 5) + " s";
    round_trip.detail = std::to_string(2 * (exhaustive.yes + random.yes)) + " yes instance-modes, " +
                        std::to_string(exhaustive.round_trip_failures + random.round_trip_failures) + " failures";

    // Criterion 7 reruns the random batch from the same seed.
    ReductionTally again;
    Criterion ignored_equivalence{1, ""}, ignored_round_trip{2, ""};
    std::ostringstream again_report;
    for (const Xc3Instance& x : random_corpus(kSeed, 200))
      check_reduction(x, again, ignored_equivalence, ignored_round_trip, again_report);
    if (again_report.str() != random_report.str()) determinism.fail("reports differ between identical runs");
    determinism.detail = std::to_string(random_report.str().size()) + "-byte report reproduced";
  }

  Criterion matcher{3, "matcher equals brute-force enumeration"};
  check_matcher(matcher);
  Criterion quotients{4, "quotient invariants"};
  check_quotients(quotients);
  Criterion theorem1{5, "Hamiltonian cycle and triangle partition cross-checks"};
  check_theorem1(theorem1);
  Criterion exclusivity{6, "gadget exclusivity"};
  check_exclusivity(exclusivity);

  results = {equivalence, round_trip, matcher, quotients, theorem1, exclusivity, determinism};
  bool all = true;
  for (const Criterion& c : results) {
    print(c);
    all &= c.passed;
  }
  std::cout << (all ? "all acceptance criteria passed" : "acceptance FAILED") << "\n";
  return all ? 0 : 1;
}
