#include "binedge/ideal.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "binedge/errors.hpp"

namespace binedge {

Ideal::Ideal(RingSpec ring, std::vector<Polynomial> generators)
    : Ideal(ring, std::move(generators), default_order(ring)) {}

Ideal::Ideal(RingSpec ring, std::vector<Polynomial> generators, MonomialOrder order)
    : ring_(ring), generators_(std::move(generators)), order_(std::move(order)),
      cache_(std::make_shared<Cache>()) {
  if (order_.variable_count() != ring_.variable_count())
    throw RingMismatch("monomial order does not match the ring");
  for (const auto& g : generators_) require_same_ring(ring_, g.ring());
}

Ideal Ideal::unit(const RingSpec& ring) {
  return Ideal(ring, {Polynomial::constant(ring, Coefficient(1))});
}

const std::vector<Polynomial>& Ideal::groebner_basis(const GbLimits& limits) const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->basis)
    cache_->basis = std::make_shared<const std::vector<Polynomial>>(
        reduced_groebner(generators_, order_, limits));
  return *cache_->basis;
}

bool Ideal::has_cached_basis() const {
  std::lock_guard lock(cache_->mutex);
  return cache_->basis != nullptr;
}

Ideal Ideal::with_order(MonomialOrder order) const { return Ideal(ring_, generators_, std::move(order)); }

bool ideal_membership(const Polynomial& f, const Ideal& ideal, const GbLimits& limits) {
  require_same_ring(f.ring(), ideal.ring());
  if (f.is_zero()) return true;
  return normal_form(f, ideal.groebner_basis(limits), ideal.order()).is_zero();
}

std::optional<int> power_membership(const Polynomial& f, const Ideal& ideal, int k_max,
                                    const GbLimits& limits) {
  require_same_ring(f.ring(), ideal.ring());
  if (k_max < 1) throw InvalidArgument("power search needs k_max >= 1");
  const auto& basis = ideal.groebner_basis(limits);
  // f^k = f * f^(k-1) is congruent to f * NF(f^(k-1)) modulo the ideal.
  Polynomial residue = normal_form(f, basis, ideal.order());
  for (int k = 1; k <= k_max; ++k) {
    if (residue.is_zero()) return k;
    if (k < k_max) residue = normal_form(f * residue, basis, ideal.order());
  }
  return std::nullopt;
}

bool radical_membership(const Polynomial& f, const Ideal& ideal, const GbLimits& limits) {
  require_same_ring(f.ring(), ideal.ring());
  const RingSpec ext = ideal.ring().with_extra_aux(1);
  const std::size_t y = ext.variable_count() - 1;
  std::vector<Polynomial> gens;
  gens.reserve(ideal.generators().size() + 1);
  for (const auto& g : ideal.generators()) gens.push_back(g.embed(ext));
  gens.push_back(Polynomial::constant(ext, Coefficient(1)) -
                 Polynomial::variable(ext, y) * f.embed(ext));
  const auto basis = reduced_groebner(gens, default_order(ext), limits);
  return basis.size() == 1 && basis.front().is_constant() && !basis.front().is_zero();
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b, const GbLimits& limits) {
  require_same_ring(a.ring(), b.ring());
  const RingSpec ext = a.ring().with_extra_aux(1);
  const std::size_t nv = ext.variable_count();
  const std::size_t tag = nv - 1;
  std::vector<std::uint8_t> precedence;
  precedence.reserve(nv);
  precedence.push_back(static_cast<std::uint8_t>(tag));
  for (std::size_t v = 0; v < tag; ++v) precedence.push_back(static_cast<std::uint8_t>(v));
  const MonomialOrder elim = MonomialOrder::elimination(std::move(precedence), 1);

  const Polynomial t = Polynomial::variable(ext, tag);
  const Polynomial one_minus_t = Polynomial::constant(ext, Coefficient(1)) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    if (!f.is_zero()) gens.push_back(t * f.embed(ext));
  for (const auto& g : b.generators())
    if (!g.is_zero()) gens.push_back(one_minus_t * g.embed(ext));

  std::vector<Polynomial> kept;
  for (const auto& g : reduced_groebner(gens, elim, limits))
    if (g.degree_in(tag) == 0) kept.push_back(g.restrict_to(a.ring()));
  return Ideal(a.ring(), std::move(kept), a.order());
}

bool ideal_equal(const Ideal& a, const Ideal& b, const GbLimits& limits) {
  require_same_ring(a.ring(), b.ring());
  const auto& ga = a.groebner_basis(limits);
  const Ideal b_same = b.order() == a.order() ? b : b.with_order(a.order());
  return ga == b_same.groebner_basis(limits);
}

std::vector<Monomial> initial_ideal(const Ideal& ideal, const GbLimits& limits) {
  std::vector<Monomial> leads;
  for (const auto& g : ideal.groebner_basis(limits))
    leads.push_back(g.leading_term(ideal.order()).monomial);
  // A reduced basis already has pairwise non-dividing leading monomials.
  std::vector<Monomial> minimal;
  for (std::size_t i = 0; i < leads.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < leads.size() && !redundant; ++j)
      redundant = j != i && leads[j].divides(leads[i]) && (!(leads[j] == leads[i]) || j < i);
    if (!redundant) minimal.push_back(leads[i]);
  }
  return minimal;
}

std::vector<Monomial> initial_ideal(const Ideal& ideal, const MonomialOrder& order,
                                    const GbLimits& limits) {
  return initial_ideal(ideal.with_order(order), limits);
}

namespace {

// Minimum number of variables meeting every support set.
int min_hitting_set(const std::vector<std::uint64_t>& sets, int budget) {
  if (sets.empty()) return 0;
  if (budget <= 0) return std::numeric_limits<int>::max() / 2;
  std::size_t pick = 0;
  for (std::size_t i = 1; i < sets.size(); ++i)
    if (std::popcount(sets[i]) < std::popcount(sets[pick])) pick = i;
  int best = std::numeric_limits<int>::max() / 2;
  std::uint64_t choices = sets[pick];
  while (choices != 0) {
    const std::uint64_t bit = choices & (~choices + 1);
    choices &= choices - 1;
    std::vector<std::uint64_t> rest;
    rest.reserve(sets.size());
    for (auto s : sets)
      if ((s & bit) == 0) rest.push_back(s);
    const int sub = min_hitting_set(rest, std::min(budget, best) - 1);
    best = std::min(best, 1 + sub);
  }
  return best;
}

}  // namespace

int monomial_dimension(const std::vector<Monomial>& mingens, std::size_t varcount) {
  std::vector<std::uint64_t> supports;
  supports.reserve(mingens.size());
  for (const auto& m : mingens) {
    if (m.is_one()) return -1;
    supports.push_back(m.support());
  }
  std::sort(supports.begin(), supports.end());
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
  const int cover = min_hitting_set(supports, static_cast<int>(varcount) + 1);
  return static_cast<int>(varcount) - cover;
}

int height_oracle(const Ideal& ideal, const GbLimits& limits) {
  const auto leads = initial_ideal(ideal, limits);
  for (const auto& m : leads)
    if (m.is_one()) throw InvalidArgument("height of the unit ideal is undefined");
  const auto nv = ideal.ring().variable_count();
  return static_cast<int>(nv) - monomial_dimension(leads, nv);
}

}  // namespace binedge
