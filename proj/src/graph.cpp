#include "halin/graph.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "halin/error.hpp"

namespace halin {

namespace {

std::string edge_str(VertexId u, VertexId v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

// Leaves of every rooted subtree must occupy a circular arc of the cycle.
// A set of c < n cycle positions is an arc iff exactly c-1 cycle edges have
// both endpoints inside it; a cycle edge lies inside subtree(v) iff the LCA
// of its endpoints does.
void check_arc_contiguity(const std::vector<std::vector<VertexId>>& adj,
                          const std::vector<VertexId>& cycle, VertexId root) {
  const std::size_t n_total = adj.size();
  const std::size_t n = cycle.size();

  std::vector<VertexId> parent(n_total, kNoVertex);
  std::vector<std::uint32_t> depth(n_total, 0);
  std::vector<VertexId> order;
  order.reserve(n_total);
  order.push_back(root);
  parent[root] = root;
  for (std::size_t head = 0; head < order.size(); ++head) {
    VertexId v = order[head];
    for (VertexId u : adj[v]) {
      if (parent[u] == kNoVertex) {
        parent[u] = v;
        depth[u] = depth[v] + 1;
        order.push_back(u);
      }
    }
  }

  const unsigned levels = std::max(1u, static_cast<unsigned>(std::bit_width(n_total)));
  std::vector<std::vector<VertexId>> up(levels, std::vector<VertexId>(n_total));
  up[0] = parent;
  for (unsigned k = 1; k < levels; ++k) {
    for (std::size_t v = 0; v < n_total; ++v) up[k][v] = up[k - 1][up[k - 1][v]];
  }
  auto lca = [&](VertexId a, VertexId b) {
    if (depth[a] < depth[b]) std::swap(a, b);
    std::uint32_t diff = depth[a] - depth[b];
    for (unsigned k = 0; diff != 0; ++k, diff >>= 1) {
      if (diff & 1u) a = up[k][a];
    }
    if (a == b) return a;
    for (unsigned k = levels; k-- > 0;) {
      if (up[k][a] != up[k][b]) {
        a = up[k][a];
        b = up[k][b];
      }
    }
    return parent[a];
  };

  std::vector<std::uint32_t> leaves(n_total, 0);
  std::vector<std::uint32_t> inner_edges(n_total, 0);
  for (std::size_t i = 0; i < n; ++i) {
    leaves[cycle[i]] = 1;
    ++inner_edges[lca(cycle[i], cycle[(i + 1) % n])];
  }
  for (std::size_t k = order.size(); k-- > 1;) {
    VertexId v = order[k];
    if (leaves[v] < n && inner_edges[v] + 1 != leaves[v]) {
      throw HalinError(Errc::ArcContiguityViolation,
                       "leaves below tree edge " + edge_str(parent[v], v) +
                           " do not form a contiguous arc of the cycle");
    }
    leaves[parent[v]] += leaves[v];
    inner_edges[parent[v]] += inner_edges[v];
  }
}

}  // namespace

VertexId HalinGraph::cycle_vertex(std::size_t i) const {
  if (i < 1 || i > cycle_.size()) {
    throw HalinError(Errc::IndexOutOfRange, "cycle index " + std::to_string(i));
  }
  return cycle_[i - 1];
}

VertexId HalinGraph::leaf_parent(std::size_t i) const {
  if (i < 1 || i > cycle_.size()) {
    throw HalinError(Errc::IndexOutOfRange, "cycle index " + std::to_string(i));
  }
  return cycle_parent_[i - 1];
}

std::size_t HalinGraph::cycle_successor(std::size_t i) const {
  if (i < 1 || i > cycle_.size()) {
    throw HalinError(Errc::IndexOutOfRange, "cycle index " + std::to_string(i));
  }
  return i == cycle_.size() ? 1 : i + 1;
}

std::size_t HalinGraph::cycle_predecessor(std::size_t i) const {
  if (i < 1 || i > cycle_.size()) {
    throw HalinError(Errc::IndexOutOfRange, "cycle index " + std::to_string(i));
  }
  return i == 1 ? cycle_.size() : i - 1;
}

std::vector<Edge> HalinGraph::tree_edges() const {
  std::vector<Edge> edges;
  edges.reserve(vertex_count() - 1);
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (VertexId v : tree_neighbors(u)) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

VertexId HalinGraph::lowest_internal_vertex() const {
  for (VertexId v = 0; v < vertex_count(); ++v) {
    if (!is_leaf(v)) return v;
  }
  return kNoVertex;
}

HalinGraph build_halin(std::size_t n_total, std::span<const Edge> tree_edges,
                       std::span<const VertexId> cycle) {
  if (n_total > 0xFFFFFFF0u) throw HalinError(Errc::InvalidArgument, "too many vertices");
  if (n_total < 4) {
    throw HalinError(Errc::TooFewLeaves, "a Halin graph needs at least 4 vertices, got " +
                                             std::to_string(n_total));
  }
  if (tree_edges.size() != n_total - 1) {
    throw HalinError(Errc::NotATree, "expected " + std::to_string(n_total - 1) +
                                         " tree edges, got " + std::to_string(tree_edges.size()));
  }

  HalinGraph g;
  std::vector<std::vector<VertexId>> adj(n_total);
  std::set<Edge> seen;
  for (auto [u, v] : tree_edges) {
    if (u >= n_total || v >= n_total) {
      throw HalinError(Errc::IndexOutOfRange, "tree edge " + edge_str(u, v));
    }
    if (u == v) throw HalinError(Errc::NotATree, "self-loop at " + std::to_string(u));
    if (!seen.insert(std::minmax(u, v)).second) {
      throw HalinError(Errc::InvalidArgument, "duplicate tree edge " + edge_str(u, v));
    }
    adj[u].push_back(v);
    adj[v].push_back(u);
  }

  // n-1 edges plus connectivity implies acyclic.
  std::vector<char> reached(n_total, 0);
  std::vector<VertexId> stack{0};
  reached[0] = 1;
  std::size_t reached_count = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId u : adj[v]) {
      if (!reached[u]) {
        reached[u] = 1;
        ++reached_count;
        stack.push_back(u);
      }
    }
  }
  if (reached_count != n_total) {
    throw HalinError(Errc::NotATree, "tree edges are disconnected or contain a cycle");
  }

  std::size_t leaf_total = 0;
  for (VertexId v = 0; v < n_total; ++v) leaf_total += adj[v].size() == 1;
  if (leaf_total < 3) {
    throw HalinError(Errc::TooFewLeaves, "tree has " + std::to_string(leaf_total) + " leaves");
  }

  g.cycle_pos_.assign(n_total, 0);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    VertexId a = cycle[i];
    if (a >= n_total) {
      throw HalinError(Errc::IndexOutOfRange, "cycle vertex " + std::to_string(a));
    }
    if (adj[a].size() != 1) {
      throw HalinError(Errc::CycleLeafMismatch,
                       "cycle vertex " + std::to_string(a) + " is not a tree leaf");
    }
    if (g.cycle_pos_[a] != 0) {
      throw HalinError(Errc::CycleLeafMismatch,
                       "cycle vertex " + std::to_string(a) + " repeated");
    }
    g.cycle_pos_[a] = static_cast<std::uint32_t>(i + 1);
  }
  if (cycle.size() != leaf_total) {
    throw HalinError(Errc::CycleLeafMismatch, "cycle has " + std::to_string(cycle.size()) +
                                                  " vertices but the tree has " +
                                                  std::to_string(leaf_total) + " leaves");
  }
  g.cycle_.assign(cycle.begin(), cycle.end());
  g.cycle_parent_.reserve(cycle.size());
  for (VertexId a : cycle) g.cycle_parent_.push_back(adj[a].front());

  VertexId root = g.lowest_internal_vertex();
  check_arc_contiguity(adj, g.cycle_, root);

  // Checked after the arcs so that a crossing embedding is reported as such
  // even when the offending tree also has a degree-2 vertex.
  for (VertexId v = 0; v < n_total; ++v) {
    if (adj[v].size() == 2) {
      throw HalinError(Errc::DegreeTwoInternal,
                       "vertex " + std::to_string(v) + " has tree-degree 2");
    }
  }

  g.tree_start_.resize(n_total + 1);
  g.tree_nbr_.reserve(2 * (n_total - 1));
  for (VertexId v = 0; v < n_total; ++v) {
    g.tree_start_[v] = static_cast<std::uint32_t>(g.tree_nbr_.size());
    g.tree_nbr_.insert(g.tree_nbr_.end(), adj[v].begin(), adj[v].end());
  }
  g.tree_start_[n_total] = static_cast<std::uint32_t>(g.tree_nbr_.size());

  for (VertexId v = 0; v < n_total; ++v) {
    g.max_degree_ = std::max(g.max_degree_, static_cast<unsigned>(g.degree(v)));
  }
  return g;
}

GraphDistance distance(const HalinGraph& g, VertexId u, VertexId v) {
  const std::size_t n_total = g.vertex_count();
  if (u >= n_total || v >= n_total) {
    throw HalinError(Errc::IndexOutOfRange, "vertex " + std::to_string(std::max(u, v)));
  }
  if (u == v) return 0;
  std::vector<GraphDistance> dist(n_total, kNoVertex);
  std::vector<VertexId> queue{u};
  dist[u] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId x = queue[head];
    bool found = false;
    g.for_each_neighbor(x, [&](VertexId y) {
      if (dist[y] == kNoVertex) {
        dist[y] = dist[x] + 1;
        if (y == v) found = true;
        queue.push_back(y);
      }
    });
    if (found) return dist[v];
  }
  return dist[v];
}

}  // namespace halin
