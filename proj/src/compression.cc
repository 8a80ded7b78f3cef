#include "fgc/compression.hh"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "fgc/canonical.hh"
#include "fgc/errors.hh"

namespace fgc {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

void require_family_member(const Pattern& f, const std::string& label) {
  if (f.graph.node_count() < kMinFamilyMemberSize) throw FamilyMemberTooSmall(label);
}

}  // namespace

std::vector<std::vector<NodeId>> NodePartition::classes() const {
  std::vector<std::vector<NodeId>> out(class_count);
  for (NodeId v = 0; v < class_of.size(); ++v) out[class_of[v]].push_back(v);
  return out;
}

NodePartition occurrence_partition(const Graph& g, const Pattern& f) {
  require_family_member(f, f.name.value_or("pattern"));
  DisjointSets sets(g.node_count());
  for_each_embedding(f, g, [&](std::span<const NodeId> image) {
    for (std::size_t i = 1; i < image.size(); ++i) sets.unite(image[0], image[i]);
    return true;
  });

  // Roots are the smallest member of each class, so numbering classes in
  // node order numbers them by smallest member.
  NodePartition partition;
  partition.class_of.resize(g.node_count());
  std::vector<std::size_t> id_of_root(g.node_count(), static_cast<std::size_t>(-1));
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const std::size_t root = sets.find(v);
    if (id_of_root[root] == static_cast<std::size_t>(-1)) id_of_root[root] = partition.class_count++;
    partition.class_of[v] = id_of_root[root];
  }
  return partition;
}

Graph quotient_graph(const Graph& g, const NodePartition& partition) {
  if (partition.class_of.size() != g.node_count())
    throw InvalidArgument("quotient_graph: partition does not cover the graph");
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const auto a = static_cast<NodeId>(partition.class_of[e.u]);
    const auto b = static_cast<NodeId>(partition.class_of[e.v]);
    if (a != b) edges.push_back({a, b});
  }
  return Graph(partition.class_count, edges);
}

CompressionResult compress_step(const Graph& g, const Pattern& f) {
  NodePartition partition = occurrence_partition(g, f);
  if (partition.is_discrete()) return {g, std::move(partition)};
  Graph quotient = quotient_graph(g, partition);
  return {std::move(quotient), std::move(partition)};
}

std::string pattern_label(const std::vector<Pattern>& family, std::size_t index) {
  const auto& name = family.at(index).name;
  return name ? *name : "#" + std::to_string(index);
}

void validate(const FgcInstance& instance) {
  for (std::size_t i = 0; i < instance.family.size(); ++i)
    require_family_member(instance.family[i], pattern_label(instance.family, i));
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

class Solver {
 public:
  Solver(const FgcInstance& instance, const SolveOptions& options)
      : instance_(instance), options_(options), target_(canonical_certificate(instance.h)) {}

  SolveResult run() {
    SolveResult result;
    path_sizes_.clear();
    const bool found = visit(instance_.g);
    result.stats = stats_;
    if (found) {
      result.verdict = Verdict::Yes;
      result.witness.steps = steps_;
      result.intermediate_sizes = path_sizes_;
    } else {
      result.verdict = out_of_budget_ ? Verdict::Inconclusive : Verdict::No;
    }
    return result;
  }

 private:
  bool visit(const Graph& state) {
    if (state.node_count() < instance_.h.node_count() || state.edge_count() < instance_.h.edge_count()) return false;
    CanonicalCertificate certificate = canonical_certificate(state);
    path_sizes_.push_back(state.node_count());
    if (certificate == target_) return true;
    if (!visited_.insert(std::move(certificate)).second) {
      ++stats_.memo_hits;
      path_sizes_.pop_back();
      return false;
    }
    if (options_.max_states && stats_.states_explored >= *options_.max_states) {
      out_of_budget_ = true;
      path_sizes_.pop_back();
      return false;
    }
    ++stats_.states_explored;
    for (std::size_t i = 0; i < instance_.family.size() && !out_of_budget_; ++i) {
      CompressionResult next = compress_step(state, instance_.family[i]);
      if (!next.changed()) continue;
      steps_.push_back(i);
      if (visit(next.quotient)) return true;
      steps_.pop_back();
    }
    path_sizes_.pop_back();
    return false;
  }

  const FgcInstance& instance_;
  const SolveOptions& options_;
  const CanonicalCertificate target_;
  std::unordered_set<CanonicalCertificate> visited_;
  std::vector<std::size_t> steps_;
  std::vector<std::size_t> path_sizes_;
  SolveStats stats_;
  bool out_of_budget_ = false;
};

}  // namespace

SolveResult solve_fgc(const FgcInstance& instance, const SolveOptions& options) {
  validate(instance);
  return Solver(instance, options).run();
}

std::vector<Graph> replay_trace(const Graph& g, std::span<const Pattern> family, std::span<const std::size_t> steps) {
  for (std::size_t step : steps)
    if (step >= family.size())
      throw InvalidArgument("replay: step index " + std::to_string(step) + " is outside a family of " +
                            std::to_string(family.size()));
  std::vector<Graph> trace{g};
  for (std::size_t step : steps) trace.push_back(compress_step(trace.back(), family[step]).quotient);
  return trace;
}

Graph replay(const Graph& g, std::span<const Pattern> family, std::span<const std::size_t> steps) {
  return replay_trace(g, family, steps).back();
}

}  // namespace fgc
