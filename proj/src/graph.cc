#include "fgc/graph.hh"

#include <algorithm>
#include <numeric>
#include <string>

#include "fgc/errors.hh"

namespace fgc {

Graph::Graph(std::size_t node_count) : adjacency_(node_count) {}

Graph::Graph(std::size_t node_count, std::span<const Edge> edges) : adjacency_(node_count) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= node_count || e.v >= node_count)
      throw InvalidArgument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            "} has an endpoint outside 0.." + std::to_string(node_count));
    if (e.u == e.v) throw InvalidArgument("self-loop on node " + std::to_string(e.u));
    edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  if (u >= node_count() || v >= node_count()) return false;
  const bool from_u = adjacency_[u].size() <= adjacency_[v].size();
  const auto& list = from_u ? adjacency_[u] : adjacency_[v];
  return std::binary_search(list.begin(), list.end(), from_u ? v : u);
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle_graph: a simple cycle needs at least 3 nodes, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>((i + 1) % n)});
  return Graph(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(i + 1)});
  return Graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph star_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId v = 1; v < n; ++v) edges.push_back({0, v});
  return Graph(n, edges);
}

Graph disjoint_union(std::span<const Graph> parts) {
  std::size_t total = 0;
  std::vector<Edge> edges;
  for (const Graph& part : parts) {
    const auto offset = static_cast<NodeId>(total);
    for (const Edge& e : part.edges()) edges.push_back({e.u + offset, e.v + offset});
    total += part.node_count();
  }
  return Graph(total, edges);
}

Graph disjoint_union(std::initializer_list<Graph> parts) {
  return disjoint_union(std::span<const Graph>(parts.begin(), parts.size()));
}

namespace {

void check_node(const Graph& g, NodeId u) {
  if (u >= g.node_count())
    throw InvalidArgument("node " + std::to_string(u) + " is not in a graph with " +
                          std::to_string(g.node_count()) + " nodes");
}

}  // namespace

std::size_t degree(const Graph& g, NodeId u) {
  check_node(g, u);
  return g.degree(u);
}

std::vector<NodeId> neighborhood(const Graph& g, NodeId u) {
  check_node(g, u);
  auto nbrs = g.neighbors(u);
  return {nbrs.begin(), nbrs.end()};
}

Graph relabel(const Graph& g, std::span<const NodeId> perm) {
  if (perm.size() != g.node_count()) throw InvalidArgument("relabel: permutation has the wrong size");
  std::vector<char> seen(perm.size(), 0);
  for (NodeId p : perm) {
    if (p >= perm.size() || seen[p]) throw InvalidArgument("relabel: not a permutation");
    seen[p] = 1;
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return Graph(g.node_count(), edges);
}

Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes) {
  std::vector<NodeId> index(g.node_count(), static_cast<NodeId>(-1));
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    check_node(g, nodes[i]);
    index[nodes[i]] = static_cast<NodeId>(i);
  }
  std::vector<Edge> edges;
  for (NodeId u : nodes)
    for (NodeId v : g.neighbors(u))
      if (index[v] != static_cast<NodeId>(-1) && index[u] < index[v]) edges.push_back({index[u], index[v]});
  return Graph(nodes.size(), edges);
}

std::vector<std::vector<NodeId>> connected_components(const Graph& g) {
  std::vector<std::vector<NodeId>> components;
  std::vector<char> seen(g.node_count(), 0);
  for (NodeId start = 0; start < g.node_count(); ++start) {
    if (seen[start]) continue;
    std::vector<NodeId> component{start};
    seen[start] = 1;
    for (std::size_t head = 0; head < component.size(); ++head)
      for (NodeId v : g.neighbors(component[head]))
        if (!seen[v]) {
          seen[v] = 1;
          component.push_back(v);
        }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

}  // namespace fgc
