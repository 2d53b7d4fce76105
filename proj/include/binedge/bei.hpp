#ifndef BINEDGE_BEI_HPP
#define BINEDGE_BEI_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "binedge/graph.hpp"
#include "binedge/groebner.hpp"
#include "binedge/ideal.hpp"

namespace binedge {

/// J_m(G): one 2-minor [k,l|i,j] per row pair k < l and edge {i < j}.
struct GeneralizedBinomialEdgeIdeal {
  int m;
  SimpleGraph graph;
  Ideal ideal;

  std::size_t mu() const { return ideal.generators().size(); }
};

/// Ring K[x_ij : i in [m], j in [n]] of a graph.
RingSpec gbei_ring(int m, const SimpleGraph& g, std::uint32_t characteristic = 0);
/// Generators of J_m(G) inside `ring`, ordered by edge and then by row pair.
std::vector<Polynomial> gbei_generators(const RingSpec& ring, const SimpleGraph& g);
GeneralizedBinomialEdgeIdeal build_gbei(int m, const SimpleGraph& g,
                                        std::uint32_t characteristic = 0);

/// mu(J_m(G)) = m(m-1)/2 * |E(G)|.
int generator_count(int m, const SimpleGraph& g);

/// P_T(G): the variables of the columns in T plus the minors of the complete
/// graphs on the components of G \ T.
struct PrimeComponent {
  VertexSet cut;
  std::vector<VertexSet> components;
  Ideal ideal;
  int height;  ///< (m-1)(n-c(T)) + |T|
};

PrimeComponent prime_component(int m, const SimpleGraph& g, const VertexSet& t,
                               std::uint32_t characteristic = 0);
/// One prime per cut set, in cut-set order.
std::vector<PrimeComponent> minimal_primes(int m, const SimpleGraph& g,
                                           std::uint32_t characteristic = 0);

/// min over cut sets T of (m-1)(n-c(T)) + |T|.
int height_formula(int m, const SimpleGraph& g);

/// ht(P_emptyset + P_T) = (m-1)(n-1) + |T| for nonempty T. When T is a cut
/// set the value is checked against the lower limit (m-1)(n-1) + k(G).
int sum_height_empty_T(int m, const SimpleGraph& g, const VertexSet& t);

struct CiClassification {
  bool value;
  bool structural;  ///< m = 2 and G is a path
  bool numeric;     ///< mu = ht
  std::string witness;
};

/// Throws std::logic_error if the structural and numeric answers disagree.
CiClassification classify_ci(int m, const SimpleGraph& g);

struct AciClassification {
  bool value;  ///< mu = ht + 1
  std::string commentary;
};

AciClassification classify_aci(int m, const SimpleGraph& g);

/// Lower bound mn - m - n + |T| for cd(P_emptyset cap P_T). Needs T nonempty
/// with G \ T disconnected; T need not be a cut set.
int pairwise_cd_lower(int m, const SimpleGraph& g, const VertexSet& t);

/// Two-sided bound on cd(P_emptyset cap P_T). The upper end is known only for
/// a path with T its interior vertices.
struct PairwiseCdBounds {
  int lower;
  std::optional<int> upper;
};
PairwiseCdBounds pairwise_cd_bounds(int m, const SimpleGraph& g, const VertexSet& t,
                                    std::uint32_t characteristic);

struct DecompositionResult {
  enum class Status { Verified, Mismatch, NotAttempted };
  Status status;
  std::size_t prime_count = 0;
  std::string detail;
};

/// Checks J_m(G) = intersection of P_T(G) over the cut sets by comparing
/// reduced Groebner bases. Budget overruns give NotAttempted.
DecompositionResult decompose_verify(int m, const SimpleGraph& g, const GbLimits& limits = {},
                                     std::uint32_t characteristic = 0);

/// Graph analyses require a connected graph with n >= 2 and m >= 2.
void require_analysable(int m, const SimpleGraph& g);

}  // namespace binedge

#endif  // BINEDGE_BEI_HPP
