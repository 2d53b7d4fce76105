#ifndef BINEDGE_BOUNDS_HPP
#define BINEDGE_BOUNDS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "binedge/graph.hpp"

namespace binedge {

enum class Verdict { Yes, No, Unknown };
const char* verdict_name(Verdict v);

/// Closed interval with the reason for each end.
struct Interval {
  int lo = 0;
  int hi = 0;
  std::string lo_source;
  std::string hi_source;
};

struct ProvenanceEntry {
  std::string bound;  ///< "ht", "mu", "pd.lo", ..., "ara.hi"
  std::string theorem;
  int value;
};

/// Everything known about ht <= pd <= cd <= ara <= mu for one (G, m, char).
struct BoundsReport {
  SimpleGraph graph;
  int m = 2;
  std::uint32_t characteristic = 0;
  int ht = 0;
  int mu = 0;
  Interval pd;
  Interval cd;
  Interval ara;
  bool ci = false;
  bool aci = false;
  Verdict cci = Verdict::Unknown;
  Verdict stci = Verdict::Unknown;
  std::string cci_reason;
  std::string stci_reason;
  std::string aci_commentary;
  std::vector<std::string> families;
  std::vector<ProvenanceEntry> provenance;
};

/// Throws std::logic_error if some lower bound exceeds an upper bound further
/// along the chain.
BoundsReport bounds_report(int m, const SimpleGraph& g, std::uint32_t characteristic = 0);

Interval pd_bounds(int m, const SimpleGraph& g, std::uint32_t characteristic = 0);
Interval cd_bounds(int m, const SimpleGraph& g, std::uint32_t characteristic = 0);
Interval ara_bounds(int m, const SimpleGraph& g, std::uint32_t characteristic = 0);
Verdict classify_cci(int m, const SimpleGraph& g, std::uint32_t characteristic = 0);
Verdict classify_stci(int m, const SimpleGraph& g, std::uint32_t characteristic = 0);

/// Every (lower, upper) pair along the chain, in chain order, with
/// lower_i <= upper_j required for i <= j.
std::vector<std::string> chain_violations(const BoundsReport& report);

// Structural recognizers used by the bounds. Exposed for testing.

/// A diamond or K4 on four vertices with the rest of G a forest of trees
/// hanging off distinct core vertices, at least two of them nontrivial.
struct CoreWithTrees {
  std::array<Vertex, 4> core;
  bool complete;  ///< K4 rather than a diamond
  int nontrivial_trees;
};
std::optional<CoreWithTrees> find_core_with_trees(const SimpleGraph& g);

/// Two nonadjacent vertices adjacent to every other vertex, i.e. G = H * 2K1.
std::optional<std::pair<Vertex, Vertex>> find_2k1_pair(const SimpleGraph& g);

/// A split V = A u B with every A-B edge present, an edge inside each side and
/// |B| >= 3. Returns A.
std::optional<VertexSet> find_join_split(const SimpleGraph& g);

/// For a connected graph with exactly one cycle: the cycle in traversal order
/// and, per cycle vertex, the length of the path hanging from it. Empty when
/// G is not unicyclic or some hanging tree is not a path ending at the cycle.
struct CycleWithPaths {
  std::vector<Vertex> cycle;
  std::vector<int> tails;
};
std::optional<CycleWithPaths> find_cycle_with_paths(const SimpleGraph& g);

/// Triangle with a path of length >= 1 at each corner.
bool is_triangle_with_three_paths(const SimpleGraph& g);
/// Paths u1..ur and v1..vs, r, s >= 3, plus the edges u1v1 and u2v2.
bool is_two_paths_with_two_rungs(const SimpleGraph& g);

/// Injective map from the template's roles into V(G) carrying pattern edges to
/// edges of G, or empty.
std::optional<std::vector<Vertex>> embed_pattern(const SimpleGraph& pattern, const SimpleGraph& g);

}  // namespace binedge

#endif  // BINEDGE_BOUNDS_HPP
