#include "fgc/matcher.hh"

#include <algorithm>

namespace fgc {

namespace {

constexpr NodeId kUnmapped = static_cast<NodeId>(-1);
constexpr std::size_t kNoAnchor = static_cast<std::size_t>(-1);

struct Step {
  NodeId pattern_node;
  std::size_t anchor;  // position of an earlier adjacent pattern node, or npos
  std::vector<std::size_t> adjacent_earlier;
};

std::vector<Step> plan(const Graph& pattern) {
  auto components = connected_components(pattern);
  std::stable_sort(components.begin(), components.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });

  std::vector<NodeId> order;
  std::vector<char> placed(pattern.node_count(), 0);
  for (const auto& component : components) {
    NodeId root = component.front();
    for (NodeId v : component)
      if (pattern.degree(v) > pattern.degree(root)) root = v;
    const std::size_t begin = order.size();
    order.push_back(root);
    placed[root] = 1;
    for (std::size_t head = begin; head < order.size(); ++head)
      for (NodeId v : pattern.neighbors(order[head]))
        if (!placed[v]) {
          placed[v] = 1;
          order.push_back(v);
        }
  }

  std::vector<Step> steps;
  for (std::size_t i = 0; i < order.size(); ++i) {
    Step step{order[i], kNoAnchor, {}};
    for (std::size_t j = 0; j < i; ++j)
      if (pattern.has_edge(order[i], order[j])) {
        if (step.anchor == kNoAnchor) step.anchor = j;
        step.adjacent_earlier.push_back(j);
      }
    steps.push_back(std::move(step));
  }
  return steps;
}

class Search {
 public:
  Search(const Pattern& pattern, const Graph& host, const EmbeddingVisitor& visit)
      : pattern_(pattern), host_(host), visit_(visit), steps_(plan(pattern.graph)),
        image_(steps_.size(), kUnmapped), used_(host.node_count(), 0) {}

  bool run() {
    if (steps_.size() > host_.node_count()) return true;
    return extend(0);
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == steps_.size()) return visit_(image_);
    const Step& step = steps_[depth];
    if (step.anchor != kNoAnchor) {
      for (NodeId candidate : host_.neighbors(image_[step.anchor]))
        if (!try_candidate(depth, candidate)) return false;
    } else {
      for (NodeId candidate = 0; candidate < host_.node_count(); ++candidate)
        if (!try_candidate(depth, candidate)) return false;
    }
    return true;
  }

  // Returns false only when the visitor asked to stop.
  bool try_candidate(std::size_t depth, NodeId candidate) {
    if (!feasible(steps_[depth], candidate)) return true;
    used_[candidate] = 1;
    image_[depth] = candidate;
    const bool keep_going = extend(depth + 1);
    image_[depth] = kUnmapped;
    used_[candidate] = 0;
    return keep_going;
  }

  bool feasible(const Step& step, NodeId candidate) const {
    if (used_[candidate]) return false;
    if (pattern_.mode == MatchMode::Motif &&
        host_.degree(candidate) < pattern_.graph.degree(step.pattern_node))
      return false;
    for (std::size_t j : step.adjacent_earlier)
      if (!host_.has_edge(candidate, image_[j])) return false;
    if (pattern_.mode == MatchMode::Graphlet) {
      // The required edges are present, so the induced condition holds iff
      // they are the only edges from the candidate into the mapped image.
      std::size_t mapped_neighbors = 0;
      for (NodeId w : host_.neighbors(candidate)) mapped_neighbors += used_[w];
      if (mapped_neighbors != step.adjacent_earlier.size()) return false;
    }
    return true;
  }

  const Pattern& pattern_;
  const Graph& host_;
  const EmbeddingVisitor& visit_;
  std::vector<Step> steps_;
  std::vector<NodeId> image_;
  std::vector<char> used_;
};

}  // namespace

bool for_each_embedding(const Pattern& pattern, const Graph& host, const EmbeddingVisitor& visit) {
  return Search(pattern, host, visit).run();
}

std::set<Occurrence> enumerate_occurrences(const Pattern& pattern, const Graph& host) {
  std::set<Occurrence> occurrences;
  for_each_embedding(pattern, host, [&](std::span<const NodeId> image) {
    Occurrence occurrence{{image.begin(), image.end()}};
    std::sort(occurrence.nodes.begin(), occurrence.nodes.end());
    occurrences.insert(std::move(occurrence));
    return true;
  });
  return occurrences;
}

bool has_occurrence(const Pattern& pattern, const Graph& host) {
  bool found = false;
  for_each_embedding(pattern, host, [&](std::span<const NodeId>) {
    found = true;
    return false;
  });
  return found;
}

std::string to_string(MatchMode mode) { return mode == MatchMode::Motif ? "motif" : "graphlet"; }

}  // namespace fgc
