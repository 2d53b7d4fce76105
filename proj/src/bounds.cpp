#include "binedge/bounds.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "binedge/bei.hpp"
#include "binedge/catalog_data.hpp"
#include "binedge/errors.hpp"
#include "binedge/ring.hpp"

namespace binedge {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v - 1); }

int edges_inside(const SimpleGraph& g, std::uint64_t mask) {
  int count = 0;
  for (const auto& [a, b] : g.edges())
    if ((mask & bit(a)) && (mask & bit(b))) ++count;
  return count;
}

/// Components of the graph on V(G) using only the edges accepted by `keep`.
template <typename Keep>
std::vector<std::uint64_t> edge_components(const SimpleGraph& g, Keep keep) {
  const int n = g.vertex_count();
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  for (int v = 0; v <= n; ++v) parent[static_cast<std::size_t>(v)] = v;
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (const auto& [a, b] : g.edges())
    if (keep(a, b)) parent[static_cast<std::size_t>(find(a))] = find(b);
  std::vector<std::uint64_t> by_root(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 1; v <= n; ++v) by_root[static_cast<std::size_t>(find(v))] |= bit(v);
  std::vector<std::uint64_t> out;
  for (int v = 1; v <= n; ++v)
    if (find(v) == v) out.push_back(by_root[static_cast<std::size_t>(v)]);
  std::sort(out.begin(), out.end(),
            [](std::uint64_t a, std::uint64_t b) { return std::countr_zero(a) < std::countr_zero(b); });
  return out;
}

enum class Slot { PdLo, PdHi, CdLo, CdHi, AraLo, AraHi };

struct Candidate {
  Slot slot;
  int value;
  std::string source;
};

struct Collected {
  std::vector<Candidate> candidates;
  std::vector<std::string> families;

  void add(Slot slot, int value, std::string source) {
    candidates.push_back({slot, value, std::move(source)});
  }
};

void add_m2_families(Collected& c, const SimpleGraph& g);

Collected collect(int m, const SimpleGraph& g, std::uint32_t characteristic) {
  Collected c;
  const int n = g.vertex_count();
  const int q = static_cast<int>(g.edge_count());
  const FamilyTags tags = classify_family(g);
  for (auto& name : tags.names()) c.families.push_back(name);

  if (tags.complete) {
    if (characteristic > 0) {
      const int v = (m - 1) * (n - 1);
      c.add(Slot::CdLo, v, "complete graph, positive characteristic: cd = (m-1)(n-1)");
      c.add(Slot::CdHi, v, "complete graph, positive characteristic: cd = (m-1)(n-1)");
    } else {
      const int v = m * n - 3;
      c.add(Slot::CdLo, v, "complete graph, characteristic 0: cd = mn-3");
      c.add(Slot::CdHi, v, "complete graph, characteristic 0: cd = mn-3");
    }
    c.add(Slot::AraLo, m * n - 3, "complete graph: ara of the 2-minors of a generic m x n matrix is mn-3");
    c.add(Slot::AraHi, m * n - 3, "complete graph: ara of the 2-minors of a generic m x n matrix is mn-3");
  } else {
    c.add(Slot::CdLo, m * n - m - n + vertex_connectivity(g),
          "non-complete graph: cd >= mn-m-n+k(G)");
  }

  if (tags.star && n >= 3) {
    const int v = (m - 1) * (n - 1);
    if (characteristic > 0) {
      c.add(Slot::CdLo, v, "star, positive characteristic: cd = (m-1)(n-1)");
      c.add(Slot::CdHi, v, "star, positive characteristic: cd = (m-1)(n-1)");
    } else {
      c.add(Slot::CdLo, v, "star, characteristic 0: cd >= (m-1)(n-1)");
      c.add(Slot::CdHi, m * n - 3, "star, characteristic 0: cd <= mn-3");
    }
  }

  if (m == 2) add_m2_families(c, g);

  const int r = max_clique(g);
  if (r >= 2)
    c.add(Slot::AraHi, m * (m - 1) / 2 * (q - r * (r - 1) / 2) + r * m - 3,
          "maximum clique K_" + std::to_string(r) + ": ara <= m(m-1)/2 (q - r(r-1)/2) + rm - 3");
  return c;
}

/// Exact values and upper bounds known only for m = 2, then certificate cores.
void add_m2_families(Collected& c, const SimpleGraph& g) {
  const int n = g.vertex_count();
  const int q = static_cast<int>(g.edge_count());

  if (auto core = find_core_with_trees(g)) {
    const std::string what = core->complete ? "K4" : "diamond";
    c.families.push_back(what + "+trees");
    const std::string source = what + " clique-summed with trees at >= 2 distinct vertices: pd = ara = n-1";
    c.add(Slot::PdLo, n - 1, source);
    c.add(Slot::PdHi, n - 1, source);
    c.add(Slot::AraHi, n - 1, source);
  }

  if (find_2k1_pair(g)) {
    const int p = n - 2;
    const int rest = q - 2 * p;
    c.families.push_back("join-2k1");
    const std::string pd_source = "G = H * 2K1 with |V(H)| = p: depth 4, so pd = 2p";
    c.add(Slot::PdLo, 2 * p, pd_source);
    c.add(Slot::PdHi, 2 * p, pd_source);
    if (rest == 0) {
      c.add(Slot::AraHi, 2 * p, "complete bipartite K_{2,p}: ara = 2p");
    } else if (rest <= 3) {
      c.add(Slot::AraHi, 2 * p, "G = H * 2K1 with H having at most 3 edges: ara = 2p");
    }
  }

  if (find_join_split(g)) {
    c.families.push_back("join");
    c.add(Slot::AraHi, q - 3,
          "join of graphs with r, t >= 1 edges on p and q >= 3 vertices: ara <= pq+r+t-3");
  }

  if (is_triangle_with_three_paths(g)) {
    c.families.push_back("triangle+paths");
    c.add(Slot::AraHi, n - 1, "paths attached at the three corners of a triangle: ara = n-1");
  }

  if (is_two_paths_with_two_rungs(g)) {
    c.families.push_back("two-paths-two-rungs");
    c.add(Slot::CdHi, n - 1, "paths u1..ur, v1..vs (r, s >= 3) with rungs u1v1, u2v2: cd = n-1");
  }

  for (const auto& t : builtin_templates()) {
    if (!t.targets_graph_ideal()) continue;
    const SimpleGraph pattern = t.pattern_graph();
    if (pattern.vertex_count() > n || pattern.edge_count() > g.edge_count()) continue;
    if (!embed_pattern(pattern, g)) continue;
    const int value = static_cast<int>(t.witness.size()) + q - static_cast<int>(pattern.edge_count());
    c.add(Slot::AraHi, value,
          "certificate " + t.name + " on a subgraph plus one binomial per remaining edge: ara <= " +
              std::to_string(t.witness.size()) + " + q - " + std::to_string(pattern.edge_count()));
  }
}

void take_lower(const Collected& c, Slot slot, int& value, std::string& source, bool& set) {
  for (const auto& cand : c.candidates)
    if (cand.slot == slot && (!set || cand.value > value)) {
      value = cand.value;
      source = cand.source;
      set = true;
    }
}

void take_upper(const Collected& c, Slot slot, int& value, std::string& source, bool& set) {
  for (const auto& cand : c.candidates)
    if (cand.slot == slot && (!set || cand.value < value)) {
      value = cand.value;
      source = cand.source;
      set = true;
    }
}

void chain_lower(int from, const char* source, Interval& into, bool& set) {
  if (!set || from > into.lo) {
    into.lo = from;
    into.lo_source = source;
    set = true;
  }
}

void chain_upper(int from, const char* source, Interval& into, bool& set) {
  if (!set || from < into.hi) {
    into.hi = from;
    into.hi_source = source;
    set = true;
  }
}

}  // namespace

std::vector<std::string> chain_violations(const BoundsReport& r) {
  struct Level {
    const char* name;
    int lo;
    int hi;
  };
  const Level levels[] = {{"ht", r.ht, r.ht},
                          {"pd", r.pd.lo, r.pd.hi},
                          {"cd", r.cd.lo, r.cd.hi},
                          {"ara", r.ara.lo, r.ara.hi},
                          {"mu", r.mu, r.mu}};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < std::size(levels); ++i)
    for (std::size_t j = i; j < std::size(levels); ++j)
      if (levels[i].lo > levels[j].hi)
        out.push_back(std::string(levels[i].name) + " lower " + std::to_string(levels[i].lo) + " > " +
                      levels[j].name + " upper " + std::to_string(levels[j].hi));
  return out;
}

BoundsReport bounds_report(int m, const SimpleGraph& g, std::uint32_t characteristic) {
  require_analysable(m, g);
  if (characteristic != 0 && !is_prime(characteristic))
    throw InvalidArgument("characteristic must be 0 or a prime");

  BoundsReport r;
  r.graph = g;
  r.m = m;
  r.characteristic = characteristic;
  r.ht = height_formula(m, g);
  r.mu = generator_count(m, g);

  const Collected c = collect(m, g, characteristic);
  r.families = c.families;

  bool set = false;
  take_lower(c, Slot::PdLo, r.pd.lo, r.pd.lo_source, set);
  chain_lower(r.ht, "ht <= pd", r.pd, set);

  set = false;
  take_lower(c, Slot::CdLo, r.cd.lo, r.cd.lo_source, set);
  chain_lower(r.pd.lo, "pd <= cd", r.cd, set);

  set = false;
  take_lower(c, Slot::AraLo, r.ara.lo, r.ara.lo_source, set);
  chain_lower(r.cd.lo, "cd <= ara", r.ara, set);

  set = false;
  take_upper(c, Slot::AraHi, r.ara.hi, r.ara.hi_source, set);
  chain_upper(r.mu, "ara <= mu", r.ara, set);

  set = false;
  take_upper(c, Slot::CdHi, r.cd.hi, r.cd.hi_source, set);
  chain_upper(r.ara.hi, "cd <= ara", r.cd, set);

  set = false;
  take_upper(c, Slot::PdHi, r.pd.hi, r.pd.hi_source, set);
  chain_upper(r.cd.hi, "pd <= cd", r.pd, set);

  const auto violations = chain_violations(r);
  if (!violations.empty()) throw std::logic_error("inconsistent bounds: " + violations.front());

  r.ci = classify_ci(m, g).value;
  const auto aci = classify_aci(m, g);
  r.aci = aci.value;
  if (r.aci) r.aci_commentary = aci.commentary;

  const bool complete = classify_family(g).complete;
  if (m >= 3) {
    r.cci = complete && characteristic > 0 ? Verdict::Yes : Verdict::No;
    r.cci_reason = "m >= 3: cd = ht exactly for complete graphs in positive characteristic";
    r.stci = Verdict::No;
    r.stci_reason = "m >= 3: never a set-theoretic complete intersection";
  } else {
    if (r.cd.hi == r.ht) {
      r.cci = Verdict::Yes;
      r.cci_reason = "cd upper bound equals ht";
    } else if (r.cd.lo > r.ht) {
      r.cci = Verdict::No;
      r.cci_reason = "cd lower bound exceeds ht";
    } else {
      r.cci = Verdict::Unknown;
      r.cci_reason = "cd not settled";
    }
    if (r.ara.hi == r.ht) {
      r.stci = Verdict::Yes;
      r.stci_reason = "ara upper bound equals ht";
    } else if (r.ara.lo > r.ht) {
      r.stci = Verdict::No;
      r.stci_reason = "ara lower bound exceeds ht";
    } else {
      r.stci = Verdict::Unknown;
      r.stci_reason = "ara not settled";
    }
  }

  r.provenance = {
      {"ht", "minimum over cut sets T of (m-1)(n-c(T)) + |T|", r.ht},
      {"mu", "m(m-1)/2 generators per edge", r.mu},
      {"pd.lo", r.pd.lo_source, r.pd.lo},
      {"pd.hi", r.pd.hi_source, r.pd.hi},
      {"cd.lo", r.cd.lo_source, r.cd.lo},
      {"cd.hi", r.cd.hi_source, r.cd.hi},
      {"ara.lo", r.ara.lo_source, r.ara.lo},
      {"ara.hi", r.ara.hi_source, r.ara.hi},
  };
  return r;
}

Interval pd_bounds(int m, const SimpleGraph& g, std::uint32_t characteristic) {
  return bounds_report(m, g, characteristic).pd;
}

Interval cd_bounds(int m, const SimpleGraph& g, std::uint32_t characteristic) {
  return bounds_report(m, g, characteristic).cd;
}

Interval ara_bounds(int m, const SimpleGraph& g, std::uint32_t characteristic) {
  return bounds_report(m, g, characteristic).ara;
}

Verdict classify_cci(int m, const SimpleGraph& g, std::uint32_t characteristic) {
  return bounds_report(m, g, characteristic).cci;
}

Verdict classify_stci(int m, const SimpleGraph& g, std::uint32_t characteristic) {
  return bounds_report(m, g, characteristic).stci;
}

std::optional<CoreWithTrees> find_core_with_trees(const SimpleGraph& g) {
  const int n = g.vertex_count();
  const int q = static_cast<int>(g.edge_count());
  if (n < 6 || (q != n + 1 && q != n + 2)) return std::nullopt;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d) {
          const std::uint64_t core = bit(a) | bit(b) | bit(c) | bit(d);
          const int inside = edges_inside(g, core);
          if (inside < 5 || q - inside != n - 4) continue;
          const auto comps = edge_components(g, [&](Vertex u, Vertex v) {
            return !((core & bit(u)) && (core & bit(v)));
          });
          if (comps.size() != 4) continue;
          bool ok = true;
          int nontrivial = 0;
          for (auto comp : comps) {
            if (std::popcount(comp & core) != 1) ok = false;
            if (std::popcount(comp) >= 2) ++nontrivial;
          }
          if (!ok || nontrivial < 2) continue;
          return CoreWithTrees{{a, b, c, d}, inside == 6, nontrivial};
        }
  return std::nullopt;
}

std::optional<std::pair<Vertex, Vertex>> find_2k1_pair(const SimpleGraph& g) {
  const int n = g.vertex_count();
  if (n < 3) return std::nullopt;
  const std::uint64_t all = g.all_vertices();
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j) {
      const std::uint64_t others = all & ~bit(i) & ~bit(j);
      if (g.neighbours(i) == others && g.neighbours(j) == others) return std::pair{i, j};
    }
  return std::nullopt;
}

std::optional<VertexSet> find_join_split(const SimpleGraph& g) {
  const int n = g.vertex_count();
  if (n < 5) return std::nullopt;
  const std::uint64_t all = g.all_vertices();
  // The sides of a join are unions of components of the complement.
  std::vector<std::uint64_t> parts;
  std::uint64_t seen = 0;
  for (Vertex v = 1; v <= n; ++v) {
    if (seen & bit(v)) continue;
    std::uint64_t comp = bit(v), frontier = bit(v);
    while (frontier) {
      const Vertex u = std::countr_zero(frontier) + 1;
      frontier &= frontier - 1;
      const std::uint64_t fresh = all & ~g.neighbours(u) & ~bit(u) & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    seen |= comp;
    parts.push_back(comp);
  }
  if (parts.size() < 2 || parts.size() > 20) return std::nullopt;
  const std::uint64_t limit = std::uint64_t{1} << (parts.size() - 1);
  for (std::uint64_t pick = 0; pick < limit; ++pick) {
    std::uint64_t a = parts[0];
    for (std::size_t k = 1; k < parts.size(); ++k)
      if (pick & (std::uint64_t{1} << (k - 1))) a |= parts[k];
    const std::uint64_t b = all & ~a;
    if (!b) continue;
    if (edges_inside(g, a) == 0 || edges_inside(g, b) == 0) continue;
    if (std::popcount(b) >= 3) return from_mask(a);
    if (std::popcount(a) >= 3) return from_mask(b);
  }
  return std::nullopt;
}

std::optional<CycleWithPaths> find_cycle_with_paths(const SimpleGraph& g) {
  const int n = g.vertex_count();
  if (static_cast<int>(g.edge_count()) != n || !is_connected(g)) return std::nullopt;
  // Strip leaves until only the cycle remains.
  std::uint64_t alive = g.all_vertices();
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex v = 1; v <= n; ++v)
      if ((alive & bit(v)) && std::popcount(g.neighbours(v) & alive) <= 1) {
        alive &= ~bit(v);
        changed = true;
      }
  }
  const std::uint64_t ring = alive;
  CycleWithPaths out;
  Vertex prev = 0, cur = std::countr_zero(ring) + 1;
  do {
    out.cycle.push_back(cur);
    std::uint64_t next = g.neighbours(cur) & ring;
    if (prev) next &= ~bit(prev);
    Vertex nxt = std::countr_zero(next) + 1;
    prev = cur;
    cur = nxt;
  } while (cur != out.cycle.front());

  for (Vertex c : out.cycle) {
    std::uint64_t off = g.neighbours(c) & ~ring;
    if (std::popcount(off) > 1) return std::nullopt;
    int length = 0;
    Vertex from = c;
    while (off) {
      const Vertex v = std::countr_zero(off) + 1;
      ++length;
      if (std::popcount(g.neighbours(v)) > 2) return std::nullopt;
      off = g.neighbours(v) & ~bit(from);
      from = v;
    }
    out.tails.push_back(length);
  }
  return out;
}

bool is_triangle_with_three_paths(const SimpleGraph& g) {
  const auto shape = find_cycle_with_paths(g);
  if (!shape || shape->cycle.size() != 3) return false;
  return std::all_of(shape->tails.begin(), shape->tails.end(), [](int t) { return t >= 1; });
}

bool is_two_paths_with_two_rungs(const SimpleGraph& g) {
  const auto shape = find_cycle_with_paths(g);
  if (!shape || shape->cycle.size() != 4) return false;
  const auto& t = shape->tails;
  for (std::size_t k = 0; k < 4; ++k) {
    const std::size_t next = (k + 1) % 4, a = (k + 2) % 4, b = (k + 3) % 4;
    if (t[k] >= 1 && t[next] >= 1 && t[a] == 0 && t[b] == 0) return true;
  }
  return false;
}

std::optional<std::vector<Vertex>> embed_pattern(const SimpleGraph& pattern, const SimpleGraph& g) {
  const int k = pattern.vertex_count();
  const int n = g.vertex_count();
  if (k > n) return std::nullopt;
  // Place high-degree roles first, then prefer roles adjacent to placed ones.
  std::vector<Vertex> order;
  std::uint64_t placed = 0;
  while (static_cast<int>(order.size()) < k) {
    Vertex best = 0;
    int best_key = -1;
    for (Vertex v = 1; v <= k; ++v) {
      if (placed & bit(v)) continue;
      const int key = std::popcount(pattern.neighbours(v) & placed) * 64 + pattern.degree(v);
      if (key > best_key) {
        best_key = key;
        best = v;
      }
    }
    order.push_back(best);
    placed |= bit(best);
  }

  std::vector<Vertex> image(static_cast<std::size_t>(k) + 1, 0);
  std::uint64_t used = 0;
  auto place = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == order.size()) return true;
    const Vertex role = order[depth];
    for (Vertex v = 1; v <= n; ++v) {
      if ((used & bit(v)) || g.degree(v) < pattern.degree(role)) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const Vertex other = order[d];
        if (pattern.has_edge(role, other) && !g.has_edge(v, image[static_cast<std::size_t>(other)]))
          ok = false;
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(role)] = v;
      used |= bit(v);
      if (self(self, depth + 1)) return true;
      used &= ~bit(v);
    }
    return false;
  };
  if (!place(place, 0)) return std::nullopt;
  return std::vector<Vertex>(image.begin() + 1, image.end());
}

}  // namespace binedge
