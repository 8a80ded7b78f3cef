#ifndef FGC_GRAPH_HH
#define FGC_GRAPH_HH

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace fgc {

using NodeId = std::uint32_t;

/// Unordered pair, stored normalized with u < v.
struct Edge {
  NodeId u;
  NodeId v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/**
 * Undirected simple graph on nodes 0..node_count()-1.
 *
 * Immutable after construction. Edges are normalized (u < v), sorted and
 * deduplicated; {u,v} and {v,u} name the same edge. Self-loops and
 * out-of-range endpoints are rejected with InvalidArgument.
 */
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t node_count);
  Graph(std::size_t node_count, std::span<const Edge> edges);
  Graph(std::size_t node_count, std::initializer_list<Edge> edges)
      : Graph(node_count, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Sorted neighbor list. Unchecked; see fgc::neighborhood for the checked form.
  std::span<const NodeId> neighbors(NodeId u) const { return adjacency_[u]; }
  std::size_t degree(NodeId u) const { return adjacency_[u].size(); }
  bool has_edge(NodeId u, NodeId v) const;

  /// Labeled equality: same node count and identical edge sets.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.node_count() == b.node_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<NodeId>> adjacency_;
};

Graph empty_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t n);

/// Part i's node IDs are shifted by the node count of parts 0..i-1.
Graph disjoint_union(std::span<const Graph> parts);
Graph disjoint_union(std::initializer_list<Graph> parts);

std::size_t degree(const Graph& g, NodeId u);
std::vector<NodeId> neighborhood(const Graph& g, NodeId u);

/// Node u of g becomes node perm[u]. perm must be a permutation of 0..n-1.
Graph relabel(const Graph& g, std::span<const NodeId> perm);

/// Subgraph induced by `nodes`; node nodes[i] becomes i.
Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes);

/// Connected components, each sorted ascending, ordered by smallest member.
std::vector<std::vector<NodeId>> connected_components(const Graph& g);

}  // namespace fgc

#endif
