#ifndef BINEDGE_GROEBNER_HPP
#define BINEDGE_GROEBNER_HPP

#include <cstddef>
#include <vector>

#include "binedge/order.hpp"
#include "binedge/polynomial.hpp"

namespace binedge {

/// Budget for a single Groebner computation. Zero means unlimited.
struct GbLimits {
  double max_seconds = 0.0;
  std::size_t max_terms = 0;  ///< total terms stored across the basis
};

/// Fully reduced remainder of `f` modulo `basis` (multivariate division
/// with the reducers tried in sequence order). Zero basis elements are
/// ignored.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order);

/// Reduced Groebner basis by Buchberger's algorithm with the normal
/// selection strategy and the Gebauer-Moeller criteria. The result is monic,
/// interreduced and sorted by descending leading monomial, so it does not
/// depend on the order of `generators`. The computation stops early once a
/// unit appears. Throws ResourceLimitExceeded.
std::vector<Polynomial> reduced_groebner(const std::vector<Polynomial>& generators,
                                         const MonomialOrder& order,
                                         const GbLimits& limits = {});

}  // namespace binedge

#endif  // BINEDGE_GROEBNER_HPP
