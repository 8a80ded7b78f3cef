#include "fgc/canonical.hh"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace fgc {

namespace {

// color[v] is the position of the first vertex of v's cell in an ordering
// sorted by color, so a discrete coloring is a labeling 0..n-1.
using Coloring = std::vector<NodeId>;

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.node_count()) {}

  std::string run() {
    Coloring colors(n_, 0);
    refine(colors);
    std::vector<NodeId> path;
    search(colors, path);
    return best_;
  }

 private:
  void refine(Coloring& colors) const {
    std::vector<NodeId> order(n_);
    std::vector<std::vector<NodeId>> signature(n_);
    std::size_t cells = count_cells(colors);
    while (true) {
      for (NodeId v = 0; v < n_; ++v) {
        auto& sig = signature[v];
        sig.clear();
        for (NodeId u : g_.neighbors(v)) sig.push_back(colors[u]);
        std::sort(sig.begin(), sig.end());
      }
      std::iota(order.begin(), order.end(), NodeId{0});
      auto less = [&](NodeId a, NodeId b) {
        if (colors[a] != colors[b]) return colors[a] < colors[b];
        return signature[a] < signature[b];
      };
      std::sort(order.begin(), order.end(), less);
      Coloring refined(n_);
      std::size_t refined_cells = 0;
      NodeId start = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i == 0 || less(order[i - 1], order[i])) {
          start = static_cast<NodeId>(i);
          ++refined_cells;
        }
        refined[order[i]] = start;
      }
      colors = std::move(refined);
      if (refined_cells == cells) return;
      cells = refined_cells;
    }
  }

  std::size_t count_cells(const Coloring& colors) const {
    std::vector<char> used(n_, 0);
    std::size_t cells = 0;
    for (NodeId c : colors)
      if (!used[c]) {
        used[c] = 1;
        ++cells;
      }
    return cells;
  }

  // Returns the search level to resume at. A value below the caller's level
  // means the caller's whole subtree is equivalent to one already explored.
  std::size_t search(const Coloring& colors, std::vector<NodeId>& path) {
    const std::size_t level = path.size();
    std::vector<std::size_t> cell_size(n_, 0);
    for (NodeId c : colors) ++cell_size[c];
    std::size_t target = n_;
    for (std::size_t c = 0; c < n_; ++c)
      if (cell_size[c] > 1 && (target == n_ || cell_size[c] < cell_size[target])) target = c;
    if (target == n_) return visit_leaf(colors, path);

    std::vector<NodeId> cell;
    for (NodeId v = 0; v < n_; ++v)
      if (colors[v] == target) cell.push_back(v);

    std::vector<NodeId> explored;
    for (NodeId w : cell) {
      if (in_explored_orbit(w, explored, path)) continue;
      Coloring child = colors;
      for (NodeId u : cell)
        if (u != w) child[u] = static_cast<NodeId>(target + 1);
      refine(child);
      path.push_back(w);
      const std::size_t resume = search(child, path);
      path.pop_back();
      explored.push_back(w);
      if (resume < level) return resume;
    }
    return level;
  }

  std::size_t visit_leaf(const Coloring& labels, const std::vector<NodeId>& path) {
    std::string encoding = encode(labels);
    if (!have_leaf_) {
      have_leaf_ = true;
      first_ = best_ = std::move(encoding);
      first_labels_ = best_labels_ = labels;
      first_path_ = best_path_ = path;
      return path.size();
    }
    if (encoding == first_) return record_automorphism(first_labels_, first_path_, labels, path);
    if (encoding == best_) return record_automorphism(best_labels_, best_path_, labels, path);
    if (encoding < best_) {
      best_ = std::move(encoding);
      best_labels_ = labels;
      best_path_ = path;
    }
    return path.size();
  }

  // Two leaves with equal encodings differ by an automorphism that maps the
  // earlier path onto the later one and fixes their common prefix.
  std::size_t record_automorphism(const Coloring& earlier_labels, const std::vector<NodeId>& earlier_path,
                                  const Coloring& labels, const std::vector<NodeId>& path) {
    std::vector<NodeId> node_at(n_);
    for (NodeId v = 0; v < n_; ++v) node_at[labels[v]] = v;
    std::vector<NodeId> automorphism(n_);
    for (NodeId v = 0; v < n_; ++v) automorphism[v] = node_at[earlier_labels[v]];
    automorphisms_.push_back(std::move(automorphism));
    std::size_t common = 0;
    while (common < path.size() && common < earlier_path.size() && path[common] == earlier_path[common]) ++common;
    return common;
  }

  bool in_explored_orbit(NodeId w, const std::vector<NodeId>& explored, const std::vector<NodeId>& path) const {
    if (explored.empty() || automorphisms_.empty()) return false;
    std::vector<NodeId> parent(n_);
    std::iota(parent.begin(), parent.end(), NodeId{0});
    auto find = [&](NodeId x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& automorphism : automorphisms_) {
      const bool fixes_path =
          std::all_of(path.begin(), path.end(), [&](NodeId p) { return automorphism[p] == p; });
      if (!fixes_path) continue;
      for (NodeId v = 0; v < n_; ++v) parent[find(v)] = find(automorphism[v]);
    }
    const NodeId root = find(w);
    return std::any_of(explored.begin(), explored.end(), [&](NodeId e) { return find(e) == root; });
  }

  std::string encode(const Coloring& labels) const {
    std::vector<NodeId> node_at(n_);
    for (NodeId v = 0; v < n_; ++v) node_at[labels[v]] = v;
    std::string bits((n_ * (n_ - 1) / 2 + 7) / 8, '\0');
    std::size_t bit = 0;
    for (NodeId i = 0; i < n_; ++i)
      for (NodeId j = i + 1; j < n_; ++j, ++bit)
        if (g_.has_edge(node_at[i], node_at[j])) bits[bit / 8] |= static_cast<char>(0x80u >> (bit % 8));
    return bits;
  }

  const Graph& g_;
  const std::size_t n_;
  bool have_leaf_ = false;
  std::string first_, best_;
  Coloring first_labels_, best_labels_;
  std::vector<NodeId> first_path_, best_path_;
  std::vector<std::vector<NodeId>> automorphisms_;
};

void append_u32(std::string& out, std::size_t value) {
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<char>((value >> shift) & 0xffu));
}

}  // namespace

CanonicalCertificate canonical_certificate(const Graph& g) {
  std::vector<std::pair<std::size_t, std::string>> parts;
  for (const auto& component : connected_components(g)) {
    if (component.size() == 1) {
      parts.emplace_back(1, std::string{});
      continue;
    }
    const Graph sub = induced_subgraph(g, component);
    parts.emplace_back(component.size(), Canonizer(sub).run());
  }
  std::sort(parts.begin(), parts.end());

  std::string bytes;
  append_u32(bytes, g.node_count());
  append_u32(bytes, parts.size());
  for (const auto& [size, encoding] : parts) {
    append_u32(bytes, size);
    bytes += encoding;
  }
  return CanonicalCertificate(std::move(bytes));
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count()) return false;
  auto degrees = [](const Graph& g) {
    std::vector<std::size_t> d(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) d[v] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(a) != degrees(b)) return false;
  return canonical_certificate(a) == canonical_certificate(b);
}

}  // namespace fgc
