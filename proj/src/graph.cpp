#include "binedge/graph.hpp"

#include <algorithm>
#include <bit>

#include "binedge/errors.hpp"

namespace binedge {
namespace {

constexpr std::uint64_t bit_of(Vertex v) { return std::uint64_t{1} << (v - 1); }

}  // namespace

SimpleGraph::SimpleGraph(int n) : n_(n), adjacency_(static_cast<std::size_t>(std::max(n, 0)), 0) {
  if (n < 0 || n > kMaxGraphVertices)
    throw InvalidArgument("graphs must have between 0 and " + std::to_string(kMaxGraphVertices) +
                          " vertices");
}

SimpleGraph::SimpleGraph(int n, const std::vector<Edge>& edges) : SimpleGraph(n) {
  for (const auto& [i, j] : edges) add_edge(i, j);
}

void SimpleGraph::add_edge(Vertex i, Vertex j) {
  if (i < 1 || i > n_ || j < 1 || j > n_)
    throw InvalidArgument("edge {" + std::to_string(i) + "," + std::to_string(j) +
                          "} has an endpoint outside [" + std::to_string(n_) + "]");
  if (i == j) throw InvalidArgument("loops are not allowed (vertex " + std::to_string(i) + ")");
  if (i > j) std::swap(i, j);
  if (!edges_.emplace(i, j).second)
    throw InvalidArgument("repeated edge {" + std::to_string(i) + "," + std::to_string(j) + "}");
  adjacency_[static_cast<std::size_t>(i - 1)] |= bit_of(j);
  adjacency_[static_cast<std::size_t>(j - 1)] |= bit_of(i);
}

bool SimpleGraph::has_edge(Vertex i, Vertex j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) return false;
  return (neighbours(i) & bit_of(j)) != 0;
}

int SimpleGraph::degree(Vertex v) const { return std::popcount(neighbours(v)); }

std::uint64_t SimpleGraph::all_vertices() const {
  return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

std::uint64_t to_mask(const VertexSet& set) {
  std::uint64_t m = 0;
  for (Vertex v : set) m |= bit_of(v);
  return m;
}

VertexSet from_mask(std::uint64_t mask) {
  VertexSet out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return out;
}

namespace {

std::uint64_t reach(const SimpleGraph& g, Vertex start, std::uint64_t allowed) {
  std::uint64_t seen = bit_of(start);
  std::uint64_t frontier = seen;
  while (frontier != 0) {
    std::uint64_t next = 0;
    std::uint64_t f = frontier;
    while (f != 0) {
      const Vertex v = std::countr_zero(f) + 1;
      f &= f - 1;
      next |= g.neighbours(v);
    }
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

}  // namespace

int component_count(const SimpleGraph& g, std::uint64_t removed) {
  std::uint64_t left = g.all_vertices() & ~removed;
  int count = 0;
  while (left != 0) {
    const Vertex v = std::countr_zero(left) + 1;
    left &= ~reach(g, v, left);
    ++count;
  }
  return count;
}

std::vector<VertexSet> components_after_deletion(const SimpleGraph& g, const VertexSet& removed) {
  for (Vertex v : removed)
    if (v < 1 || v > g.vertex_count()) throw InvalidArgument("vertex outside the graph");
  std::uint64_t left = g.all_vertices() & ~to_mask(removed);
  std::vector<VertexSet> out;
  while (left != 0) {
    const Vertex v = std::countr_zero(left) + 1;
    const std::uint64_t comp = reach(g, v, left);
    out.push_back(from_mask(comp));
    left &= ~comp;
  }
  return out;
}

bool is_connected(const SimpleGraph& g) { return component_count(g, 0) <= 1; }

void require_connected(const SimpleGraph& g) {
  if (g.vertex_count() == 0 || !is_connected(g))
    throw DisconnectedGraph("graph is not connected");
}

bool is_cut_set(const SimpleGraph& g, std::uint64_t t) {
  if (t == 0) return true;
  const int c = component_count(g, t);
  std::uint64_t rest = t;
  while (rest != 0) {
    const std::uint64_t b = rest & (~rest + 1);
    rest &= rest - 1;
    if (component_count(g, t & ~b) >= c) return false;
  }
  return true;
}

std::vector<VertexSet> cut_sets(const SimpleGraph& g) {
  require_connected(g);
  if (g.vertex_count() > kMaxCutSetVertices)
    throw InvalidArgument("cut set enumeration is limited to " +
                          std::to_string(kMaxCutSetVertices) + " vertices");
  std::vector<VertexSet> out;
  const std::uint64_t limit = std::uint64_t{1} << g.vertex_count();
  for (std::uint64_t t = 0; t < limit; ++t)
    if (is_cut_set(g, t)) out.push_back(from_mask(t));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_clique(const SimpleGraph& g, const VertexSet& vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (!g.has_edge(vertices[a], vertices[b])) return false;
  return true;
}

namespace {

bool is_complete(const SimpleGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  return g.edge_count() == n * (n - 1) / 2;
}

}  // namespace

int vertex_connectivity(const SimpleGraph& g) {
  require_connected(g);
  const int n = g.vertex_count();
  if (n < 2) throw InvalidArgument("vertex connectivity needs at least two vertices");
  if (is_complete(g)) return n - 1;
  for (int k = 1; k < n - 1; ++k) {
    // Gosper's hack over all k-subsets of [n].
    std::uint64_t t = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (t < limit) {
      if (component_count(g, t) >= 2) return k;
      const std::uint64_t c = t & (~t + 1);
      const std::uint64_t r = t + c;
      t = (((r ^ t) >> 2) / c) | r;
    }
  }
  return n - 1;  // unreachable for a non-complete connected graph
}

namespace {

void grow_clique(const SimpleGraph& g, int size, std::uint64_t candidates, int& best) {
  if (candidates == 0) {
    best = std::max(best, size);
    return;
  }
  while (candidates != 0) {
    if (size + std::popcount(candidates) <= best) return;
    const Vertex v = std::countr_zero(candidates) + 1;
    candidates &= candidates - 1;
    grow_clique(g, size + 1, candidates & g.neighbours(v), best);
  }
}

}  // namespace

int max_clique(const SimpleGraph& g) {
  if (g.vertex_count() == 0) return 0;
  int best = 1;
  grow_clique(g, 0, g.all_vertices(), best);
  return best;
}

std::vector<std::string> FamilyTags::names() const {
  std::vector<std::string> out;
  if (path) out.emplace_back("path");
  if (cycle) out.emplace_back("cycle");
  if (tree) out.emplace_back("tree");
  if (star) out.emplace_back("star");
  if (complete) out.emplace_back("complete");
  if (complete_bipartite)
    out.push_back("complete_bipartite(" + std::to_string(complete_bipartite->first) + "," +
                  std::to_string(complete_bipartite->second) + ")");
  if (null) out.emplace_back("null");
  if (triangle) out.emplace_back("triangle");
  if (diamond) out.emplace_back("diamond");
  return out;
}

FamilyTags classify_family(const SimpleGraph& g) {
  FamilyTags tags;
  const int n = g.vertex_count();
  if (n == 0) return tags;
  const auto q = g.edge_count();
  const bool connected = is_connected(g);
  int max_degree = 0;
  int min_degree = n;
  for (Vertex v = 1; v <= n; ++v) {
    max_degree = std::max(max_degree, g.degree(v));
    min_degree = std::min(min_degree, g.degree(v));
  }
  tags.null = q == 0;
  tags.complete = is_complete(g);
  tags.tree = connected && q == static_cast<std::size_t>(n - 1);
  tags.path = tags.tree && max_degree <= 2;
  tags.cycle = connected && n >= 3 && min_degree == 2 && max_degree == 2;
  tags.star = tags.tree && n >= 2 && max_degree == n - 1;
  tags.triangle = n == 3 && tags.complete;
  tags.diamond = n == 4 && q == 5;

  if (connected && n >= 2) {
    // Two-colour by BFS from vertex 1.
    std::vector<int> colour(static_cast<std::size_t>(n + 1), -1);
    colour[1] = 0;
    std::vector<Vertex> queue{1};
    bool bipartite = true;
    for (std::size_t head = 0; head < queue.size() && bipartite; ++head) {
      const Vertex v = queue[head];
      for (Vertex w : from_mask(g.neighbours(v))) {
        if (colour[static_cast<std::size_t>(w)] < 0) {
          colour[static_cast<std::size_t>(w)] = 1 - colour[static_cast<std::size_t>(v)];
          queue.push_back(w);
        } else if (colour[static_cast<std::size_t>(w)] == colour[static_cast<std::size_t>(v)]) {
          bipartite = false;
          break;
        }
      }
    }
    if (bipartite) {
      const auto p = static_cast<std::size_t>(std::count(colour.begin() + 1, colour.end(), 0));
      const auto r = static_cast<std::size_t>(n) - p;
      if (p * r == q) {
        tags.complete_bipartite = std::make_pair(static_cast<int>(std::min(p, r)),
                                                 static_cast<int>(std::max(p, r)));
      }
    }
  }
  return tags;
}

SimpleGraph path_graph(int n) {
  SimpleGraph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v, v + 1);
  return g;
}

SimpleGraph cycle_graph(int n) {
  if (n < 3) throw InvalidArgument("cycles need at least three vertices");
  SimpleGraph g = path_graph(n);
  g.add_edge(1, n);
  return g;
}

SimpleGraph complete_graph(int n) {
  SimpleGraph g(n);
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j) g.add_edge(i, j);
  return g;
}

SimpleGraph star_graph(int n) {
  SimpleGraph g(n);
  for (Vertex v = 2; v <= n; ++v) g.add_edge(1, v);
  return g;
}

SimpleGraph complete_bipartite(int p, int q) {
  if (p < 0 || q < 0) throw InvalidArgument("negative part size");
  SimpleGraph g(p + q);
  for (Vertex i = 1; i <= p; ++i)
    for (Vertex j = p + 1; j <= p + q; ++j) g.add_edge(i, j);
  return g;
}

SimpleGraph null_graph(int n) { return SimpleGraph(n); }

SimpleGraph diamond() { return SimpleGraph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}}); }

Relabeled join(const SimpleGraph& g, const SimpleGraph& h) {
  const int p = g.vertex_count();
  const int q = h.vertex_count();
  Relabeled out{SimpleGraph(p + q), {}};
  for (const auto& [i, j] : g.edges()) out.graph.add_edge(i, j);
  for (const auto& [i, j] : h.edges()) out.graph.add_edge(p + i, p + j);
  for (Vertex i = 1; i <= p; ++i)
    for (Vertex j = 1; j <= q; ++j) out.graph.add_edge(i, p + j);
  for (Vertex j = 1; j <= q; ++j) out.second_labels.push_back(p + j);
  return out;
}

Relabeled clique_sum(const SimpleGraph& g, const SimpleGraph& h,
                     const std::vector<std::pair<Vertex, Vertex>>& shared) {
  const int ng = g.vertex_count();
  const int nh = h.vertex_count();
  std::vector<Vertex> label(static_cast<std::size_t>(nh), 0);
  VertexSet in_g;
  VertexSet in_h;
  for (const auto& [a, b] : shared) {
    if (a < 1 || a > ng || b < 1 || b > nh) throw InvalidArgument("shared vertex out of range");
    if (label[static_cast<std::size_t>(b - 1)] != 0 ||
        std::find(in_g.begin(), in_g.end(), a) != in_g.end())
      throw InvalidArgument("a vertex is shared twice");
    label[static_cast<std::size_t>(b - 1)] = a;
    in_g.push_back(a);
    in_h.push_back(b);
  }
  if (!is_clique(g, in_g) || !is_clique(h, in_h))
    throw InvalidArgument("shared vertices do not form a clique in both graphs");
  int next = ng;
  for (auto& l : label)
    if (l == 0) l = ++next;
  Relabeled out{SimpleGraph(next), label};
  for (const auto& [i, j] : g.edges()) out.graph.add_edge(i, j);
  for (const auto& [i, j] : h.edges()) {
    const Vertex a = label[static_cast<std::size_t>(i - 1)];
    const Vertex b = label[static_cast<std::size_t>(j - 1)];
    if (!out.graph.has_edge(a, b)) out.graph.add_edge(a, b);
  }
  return out;
}

Relabeled attach_tree(const SimpleGraph& g, Vertex at, const SimpleGraph& tree, Vertex root) {
  if (!classify_family(tree).tree) throw InvalidArgument("attach_tree needs a tree");
  return clique_sum(g, tree, {{at, root}});
}

SimpleGraph induced_subgraph(const SimpleGraph& g, const VertexSet& vertices) {
  SimpleGraph out(static_cast<int>(vertices.size()));
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (g.has_edge(vertices[a], vertices[b]))
        out.add_edge(static_cast<Vertex>(a + 1), static_cast<Vertex>(b + 1));
  return out;
}

}  // namespace binedge
