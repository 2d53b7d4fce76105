#ifndef BINEDGE_GRAPH_HPP
#define BINEDGE_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace binedge {

using Vertex = int;
/// Sorted, duplicate-free set of 1-based vertices.
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr int kMaxGraphVertices = 64;

/// Undirected simple graph on the vertices 1..n. Edges are stored with the
/// smaller endpoint first and iterate in lexicographic order.
class SimpleGraph {
 public:
  explicit SimpleGraph(int n = 0);
  SimpleGraph(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::set<Edge>& edges() const { return edges_; }

  /// Throws InvalidArgument for loops, out-of-range endpoints and repeated edges.
  void add_edge(Vertex i, Vertex j);
  bool has_edge(Vertex i, Vertex j) const;
  /// Bit v-1 set for every neighbour v.
  std::uint64_t neighbours(Vertex v) const { return adjacency_[static_cast<std::size_t>(v - 1)]; }
  int degree(Vertex v) const;
  /// Bitmask of all vertices.
  std::uint64_t all_vertices() const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  std::set<Edge> edges_;
  std::vector<std::uint64_t> adjacency_;
};

std::uint64_t to_mask(const VertexSet& set);
VertexSet from_mask(std::uint64_t mask);

/// Connected components of G with `removed` deleted, each sorted, listed by
/// smallest vertex.
std::vector<VertexSet> components_after_deletion(const SimpleGraph& g, const VertexSet& removed);
/// c(T) as a bitmask computation.
int component_count(const SimpleGraph& g, std::uint64_t removed);
bool is_connected(const SimpleGraph& g);
void require_connected(const SimpleGraph& g);

/// Vertex sets T with T empty or c(T \ {i}) < c(T) for every i in T, in
/// lexicographic order. Exhaustive over all subsets; requires a connected
/// graph with at most kMaxCutSetVertices vertices.
inline constexpr int kMaxCutSetVertices = 20;
bool is_cut_set(const SimpleGraph& g, std::uint64_t t);
std::vector<VertexSet> cut_sets(const SimpleGraph& g);

/// k(G): n-1 for complete graphs, otherwise the size of a smallest vertex
/// separator.
int vertex_connectivity(const SimpleGraph& g);

bool is_clique(const SimpleGraph& g, const VertexSet& vertices);
/// Number of vertices of a maximum clique (1 for a graph without edges).
int max_clique(const SimpleGraph& g);

struct FamilyTags {
  bool path = false;
  bool cycle = false;
  bool tree = false;
  bool star = false;
  bool complete = false;
  bool null = false;
  bool triangle = false;
  bool diamond = false;
  /// Part sizes (p, q) with p <= q when G is complete bipartite.
  std::optional<std::pair<int, int>> complete_bipartite;

  std::vector<std::string> names() const;
};

FamilyTags classify_family(const SimpleGraph& g);

// Constructors. Vertex labels are consecutive from 1.
SimpleGraph path_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph complete_graph(int n);
/// K_{1,n-1} with centre 1.
SimpleGraph star_graph(int n);
/// K_{p,q} with parts {1..p} and {p+1..p+q}.
SimpleGraph complete_bipartite(int p, int q);
SimpleGraph null_graph(int n);
/// K_4 minus the edge {2,4}.
SimpleGraph diamond();

/// A constructed graph with the new label of every vertex of the second input
/// (index v-1 holds the label of v).
struct Relabeled {
  SimpleGraph graph;
  std::vector<Vertex> second_labels;
};

/// G * G': vertices of G keep their labels, G' vertex j becomes p + j, and
/// every vertex of G is joined to every vertex of G'.
Relabeled join(const SimpleGraph& g, const SimpleGraph& h);

/// Glues `h` onto `g` by identifying h-vertex `second` with g-vertex `first`
/// for every pair in `shared`. The shared vertices must span a clique in both
/// graphs. Unshared vertices of h are numbered after g in increasing order.
Relabeled clique_sum(const SimpleGraph& g, const SimpleGraph& h,
                     const std::vector<std::pair<Vertex, Vertex>>& shared);

/// Clique sum over a single vertex: `tree` vertex `root` is identified with `at`.
Relabeled attach_tree(const SimpleGraph& g, Vertex at, const SimpleGraph& tree, Vertex root = 1);

/// Subgraph induced on `vertices`, relabeled 1..k in increasing order.
SimpleGraph induced_subgraph(const SimpleGraph& g, const VertexSet& vertices);

}  // namespace binedge

#endif  // BINEDGE_GRAPH_HPP
