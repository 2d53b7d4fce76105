#include "binedge/bei.hpp"

#include <algorithm>
#include <stdexcept>

#include "binedge/errors.hpp"

namespace binedge {

void require_analysable(int m, const SimpleGraph& g) {
  if (m < 2) throw InvalidArgument("m must be at least 2");
  if (g.vertex_count() < 2) throw InvalidArgument("the graph needs at least two vertices");
  require_connected(g);
}

RingSpec gbei_ring(int m, const SimpleGraph& g, std::uint32_t characteristic) {
  if (m < 2) throw InvalidArgument("m must be at least 2");
  return RingSpec(m, std::max(g.vertex_count(), 1), characteristic);
}

std::vector<Polynomial> gbei_generators(const RingSpec& ring, const SimpleGraph& g) {
  std::vector<Polynomial> gens;
  for (const auto& [i, j] : g.edges())
    for (int k = 1; k <= ring.rows(); ++k)
      for (int l = k + 1; l <= ring.rows(); ++l) gens.push_back(minor(ring, k, l, i, j));
  return gens;
}

GeneralizedBinomialEdgeIdeal build_gbei(int m, const SimpleGraph& g, std::uint32_t characteristic) {
  const RingSpec ring = gbei_ring(m, g, characteristic);
  return {m, g, Ideal(ring, gbei_generators(ring, g))};
}

int generator_count(int m, const SimpleGraph& g) {
  return m * (m - 1) / 2 * static_cast<int>(g.edge_count());
}

PrimeComponent prime_component(int m, const SimpleGraph& g, const VertexSet& t,
                               std::uint32_t characteristic) {
  const RingSpec ring = gbei_ring(m, g, characteristic);
  VertexSet cut = t;
  std::sort(cut.begin(), cut.end());
  cut.erase(std::unique(cut.begin(), cut.end()), cut.end());
  auto components = components_after_deletion(g, cut);

  std::vector<Polynomial> gens;
  for (Vertex v : cut)
    for (int k = 1; k <= m; ++k) gens.push_back(matrix_variable(ring, k, v));
  for (const auto& comp : components)
    for (std::size_t a = 0; a < comp.size(); ++a)
      for (std::size_t b = a + 1; b < comp.size(); ++b)
        for (int k = 1; k <= m; ++k)
          for (int l = k + 1; l <= m; ++l) gens.push_back(minor(ring, k, l, comp[a], comp[b]));

  const int n = g.vertex_count();
  const int c = static_cast<int>(components.size());
  const int height = (m - 1) * (n - c) + static_cast<int>(cut.size());
  return {std::move(cut), std::move(components), Ideal(ring, std::move(gens)), height};
}

std::vector<PrimeComponent> minimal_primes(int m, const SimpleGraph& g, std::uint32_t characteristic) {
  require_analysable(m, g);
  std::vector<PrimeComponent> out;
  for (const auto& t : cut_sets(g)) out.push_back(prime_component(m, g, t, characteristic));
  return out;
}

int height_formula(int m, const SimpleGraph& g) {
  require_analysable(m, g);
  const int n = g.vertex_count();
  int best = -1;
  for (const auto& t : cut_sets(g)) {
    const int c = component_count(g, to_mask(t));
    const int h = (m - 1) * (n - c) + static_cast<int>(t.size());
    if (best < 0 || h < best) best = h;
  }
  return best;
}

int sum_height_empty_T(int m, const SimpleGraph& g, const VertexSet& t) {
  require_analysable(m, g);
  if (t.empty()) throw InvalidArgument("T must be nonempty");
  const int n = g.vertex_count();
  const int value = (m - 1) * (n - 1) + static_cast<int>(t.size());
  if (is_cut_set(g, to_mask(t))) {
    const int floor = (m - 1) * (n - 1) + vertex_connectivity(g);
    if (value < floor)
      throw std::logic_error("cut set smaller than the vertex connectivity");
  }
  return value;
}

CiClassification classify_ci(int m, const SimpleGraph& g) {
  require_analysable(m, g);
  const bool structural = m == 2 && classify_family(g).path;
  const int mu = generator_count(m, g);
  const int ht = height_formula(m, g);
  const bool numeric = mu == ht;
  if (structural != numeric)
    throw std::logic_error("structural and numeric complete-intersection tests disagree");
  std::string witness = numeric ? "mu = ht = " + std::to_string(mu)
                                : "mu = " + std::to_string(mu) + " > ht = " + std::to_string(ht);
  return {numeric, structural, numeric, std::move(witness)};
}

AciClassification classify_aci(int m, const SimpleGraph& g) {
  require_analysable(m, g);
  const int mu = generator_count(m, g);
  const int ht = height_formula(m, g);
  AciClassification out{mu == ht + 1, {}};
  if (g.vertex_count() >= 3) {
    out.commentary =
        "structurally (n >= 3): m = 2 and G is either a non-path tree made by linking two disjoint "
        "paths with one edge, or a unicyclic graph made from a path plus one edge or from a "
        "triangle with a path hanging at each corner";
  } else {
    out.commentary = "single edge: mu = m(m-1)/2 and ht = m-1, so only m = 3 qualifies";
  }
  return out;
}

int pairwise_cd_lower(int m, const SimpleGraph& g, const VertexSet& t) {
  require_analysable(m, g);
  if (t.empty()) throw InvalidArgument("T must be nonempty");
  if (component_count(g, to_mask(t)) < 2) throw InvalidArgument("G \\ T must be disconnected");
  const int n = g.vertex_count();
  return m * n - m - n + static_cast<int>(t.size());
}

PairwiseCdBounds pairwise_cd_bounds(int m, const SimpleGraph& g, const VertexSet& t,
                                    std::uint32_t characteristic) {
  PairwiseCdBounds out{pairwise_cd_lower(m, g, t), std::nullopt};
  const int n = g.vertex_count();
  if (n >= 3 && g == path_graph(n)) {
    VertexSet interior;
    for (Vertex v = 2; v < n; ++v) interior.push_back(v);
    VertexSet sorted = t;
    std::sort(sorted.begin(), sorted.end());
    if (sorted == interior) out.upper = characteristic > 0 ? m * n - m - 2 : m * n - 3;
  }
  return out;
}

DecompositionResult decompose_verify(int m, const SimpleGraph& g, const GbLimits& limits,
                                     std::uint32_t characteristic) {
  require_analysable(m, g);
  using Status = DecompositionResult::Status;
  const auto gbei = build_gbei(m, g, characteristic);
  if (gbei.ideal.ring().variable_count() + 1 > kMaxVariables)
    return {Status::NotAttempted, 0, "too many variables for the elimination step"};
  try {
    const auto primes = minimal_primes(m, g, characteristic);
    Ideal acc = primes.front().ideal;
    for (std::size_t i = 1; i < primes.size(); ++i)
      acc = ideal_intersection(acc, primes[i].ideal, limits);
    const bool equal = ideal_equal(gbei.ideal, acc, limits);
    return {equal ? Status::Verified : Status::Mismatch, primes.size(),
            equal ? "reduced Groebner bases coincide"
                  : "reduced Groebner bases differ"};
  } catch (const ResourceLimitExceeded& e) {
    return {Status::NotAttempted, 0, e.what()};
  }
}

}  // namespace binedge
