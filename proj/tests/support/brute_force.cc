#include "support/brute_force.hh"

#include <algorithm>
#include <functional>
#include <numeric>

namespace fgc::testing {

bool brute_force_isomorphic(const Graph& a, const Graph& b) {
  const std::size_t n = a.node_count();
  if (n != b.node_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), NodeId{0});
  do {
    bool ok = true;
    for (NodeId u = 0; ok && u < n; ++u)
      for (NodeId v = u + 1; ok && v < n; ++v) ok = a.has_edge(u, v) == b.has_edge(perm[u], perm[v]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::set<std::vector<NodeId>> brute_force_occurrences(const Graph& pattern, MatchMode mode, const Graph& host) {
  const std::size_t k = pattern.node_count();
  std::set<std::vector<NodeId>> images;
  std::vector<NodeId> map(k);
  std::vector<char> used(host.node_count(), 0);

  // A partial map is abandoned as soon as one pair of pattern nodes violates
  // the definition; no other pruning or ordering is applied.
  auto pair_ok = [&](NodeId u, NodeId v) {
    const bool pe = pattern.has_edge(u, v);
    const bool he = host.has_edge(map[u], map[v]);
    if (pe && !he) return false;
    return !(mode == MatchMode::Graphlet && !pe && he);
  };
  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (i == k) {
      std::vector<NodeId> image(map);
      std::sort(image.begin(), image.end());
      images.insert(image);
      return;
    }
    for (NodeId h = 0; h < host.node_count(); ++h) {
      if (used[h]) continue;
      map[i] = h;
      bool ok = true;
      for (NodeId j = 0; ok && j < i; ++j) ok = pair_ok(j, static_cast<NodeId>(i));
      if (!ok) continue;
      used[h] = 1;
      assign(i + 1);
      used[h] = 0;
    }
  };
  assign(0);
  return images;
}

std::vector<std::size_t> brute_force_partition(const Graph& pattern, MatchMode mode, const Graph& host) {
  const std::size_t n = host.node_count();
  // Closure by repeated relabeling: every node takes the minimum label over
  // all occurrences it lies in, until nothing changes.
  std::vector<std::size_t> label(n);
  std::iota(label.begin(), label.end(), std::size_t{0});
  const auto occurrences = brute_force_occurrences(pattern, mode, host);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& occ : occurrences) {
      std::size_t low = n;
      for (NodeId v : occ) low = std::min(low, label[v]);
      for (NodeId v : occ)
        if (const std::size_t old = label[v]; old != low) {
          for (auto& l : label)
            if (l == old) l = low;
          changed = true;
        }
    }
  }
  std::vector<std::size_t> class_of(n), id(n, n);
  std::size_t next = 0;
  for (NodeId v = 0; v < n; ++v) {
    if (id[label[v]] == n) id[label[v]] = next++;
    class_of[v] = id[label[v]];
  }
  return class_of;
}

}  // namespace fgc::testing
