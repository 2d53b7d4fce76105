#ifndef BINEDGE_IDEAL_HPP
#define BINEDGE_IDEAL_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "binedge/groebner.hpp"
#include "binedge/monomial.hpp"
#include "binedge/order.hpp"
#include "binedge/polynomial.hpp"

namespace binedge {

/// Generator list plus a lazily computed reduced Groebner basis. Copies share
/// the cache. The basis is published at most once and is never observed
/// half-built, so an Ideal may be queried from several threads.
class Ideal {
 public:
  Ideal(RingSpec ring, std::vector<Polynomial> generators);
  Ideal(RingSpec ring, std::vector<Polynomial> generators, MonomialOrder order);

  static Ideal unit(const RingSpec& ring);

  const RingSpec& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const MonomialOrder& order() const { return order_; }

  /// Reduced Groebner basis under order(). A failed (over-budget) attempt
  /// leaves the cache empty.
  const std::vector<Polynomial>& groebner_basis(const GbLimits& limits = {}) const;
  bool has_cached_basis() const;

  /// Same generators under another order (fresh cache).
  Ideal with_order(MonomialOrder order) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::shared_ptr<const std::vector<Polynomial>> basis;
  };

  RingSpec ring_;
  std::vector<Polynomial> generators_;
  MonomialOrder order_;
  std::shared_ptr<Cache> cache_;
};

bool ideal_membership(const Polynomial& f, const Ideal& ideal, const GbLimits& limits = {});

inline constexpr int kDefaultPowerSearch = 8;

/// Least k <= k_max with f^k in the ideal, or nullopt.
std::optional<int> power_membership(const Polynomial& f, const Ideal& ideal,
                                    int k_max = kDefaultPowerSearch,
                                    const GbLimits& limits = {});

/// f in rad(I), decided by 1 in I + (1 - y f) over the ring with one extra
/// auxiliary variable y.
bool radical_membership(const Polynomial& f, const Ideal& ideal, const GbLimits& limits = {});

/// I cap J by eliminating a tag t from t*I + (1 - t)*J.
Ideal ideal_intersection(const Ideal& a, const Ideal& b, const GbLimits& limits = {});

/// Reduced Groebner bases coincide termwise (both computed under a's order).
bool ideal_equal(const Ideal& a, const Ideal& b, const GbLimits& limits = {});

/// Minimal generators of in(I): leading monomials of the reduced basis,
/// minimalized under divisibility and sorted descending under I's order.
std::vector<Monomial> initial_ideal(const Ideal& ideal, const GbLimits& limits = {});
std::vector<Monomial> initial_ideal(const Ideal& ideal, const MonomialOrder& order,
                                    const GbLimits& limits = {});

/// Krull dimension of K[x_1..x_varcount]/M for the monomial ideal M with the
/// given minimal generators: the largest variable set that contains the
/// support of no generator.
int monomial_dimension(const std::vector<Monomial>& mingens, std::size_t varcount);

/// ht(I) = varcount - dim(R/in(I)). Throws InvalidArgument for the unit ideal.
int height_oracle(const Ideal& ideal, const GbLimits& limits = {});

}  // namespace binedge

#endif  // BINEDGE_IDEAL_HPP
