#ifndef BINEDGE_TESTS_SUPPORT_HPP
#define BINEDGE_TESTS_SUPPORT_HPP

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "binedge/graph.hpp"
#include "binedge/polynomial.hpp"

namespace testsupport {

using binedge::SimpleGraph;

/// Calls fn on every connected labeled graph on [n].
inline void for_each_connected_graph(int n, const std::function<void(const SimpleGraph&)>& fn) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) slots.emplace_back(i, j);
  const unsigned long total = 1ul << slots.size();
  for (unsigned long mask = 0; mask < total; ++mask) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
    std::vector<binedge::Edge> edges;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1) {
        edges.push_back(slots[s]);
        adj[static_cast<std::size_t>(slots[s].first)].push_back(slots[s].second);
        adj[static_cast<std::size_t>(slots[s].second)].push_back(slots[s].first);
      }
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    std::vector<int> stack{1};
    seen[1] = true;
    int reached = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<std::size_t>(v)])
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          ++reached;
          stack.push_back(w);
        }
    }
    if (reached == n) fn(SimpleGraph(n, edges));
  }
}

/// Components of G minus `removed`, by plain DFS over adjacency lists.
inline int count_components(const SimpleGraph& g, const std::vector<bool>& removed) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  for (const auto& [a, b] : g.edges()) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<bool> seen(removed);
  int count = 0;
  for (int s = 1; s <= n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    ++count;
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<std::size_t>(v)])
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
    }
  }
  return count;
}

/// Cut sets straight from the definition, in lexicographic order.
inline std::vector<std::vector<int>> brute_force_cut_sets(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<bool> removed(static_cast<std::size_t>(n) + 1, false);
    removed[0] = true;
    std::vector<int> t;
    for (int v = 1; v <= n; ++v)
      if (mask >> (v - 1) & 1) {
        removed[static_cast<std::size_t>(v)] = true;
        t.push_back(v);
      }
    const int c = count_components(g, removed);
    bool ok = true;
    for (int v : t) {
      auto fewer = removed;
      fewer[static_cast<std::size_t>(v)] = false;
      if (!(count_components(g, fewer) < c)) ok = false;
    }
    if (ok) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Evaluates p at a point (one value per variable) with plain rationals.
inline mpq_class evaluate(const binedge::Polynomial& p, const std::vector<mpq_class>& point) {
  mpq_class total = 0;
  for (const auto& t : p.terms()) {
    mpq_class v = t.coefficient;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (unsigned e = 0; e < t.monomial[i]; ++e) v *= point[i];
    total += v;
  }
  return total;
}

inline binedge::Polynomial random_polynomial(const binedge::RingSpec& ring, std::mt19937& rng, int terms,
                                             unsigned max_degree) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<std::size_t> var(0, ring.variable_count() - 1);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::vector<binedge::Term> out;
  for (int k = 0; k < terms; ++k) {
    binedge::Monomial m(ring.variable_count());
    const unsigned d = deg(rng);
    for (unsigned e = 0; e < d; ++e) {
      const std::size_t i = var(rng);
      m.set(i, m[i] + 1);
    }
    out.push_back({m, binedge::Coefficient(coef(rng))});
  }
  return binedge::Polynomial::from_terms(ring, std::move(out));
}

}  // namespace testsupport

#endif  // BINEDGE_TESTS_SUPPORT_HPP
