#ifndef BINEDGE_POLYNOMIAL_HPP
#define BINEDGE_POLYNOMIAL_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "binedge/monomial.hpp"
#include "binedge/order.hpp"
#include "binedge/ring.hpp"

namespace binedge {

struct Term {
  Monomial monomial;
  Coefficient coefficient;
};

/// Exact multivariate polynomial. Terms are kept sorted by descending
/// raw_compare of their monomials and no stored coefficient is zero.
class Polynomial {
 public:
  explicit Polynomial(RingSpec ring);

  static Polynomial constant(const RingSpec& ring, const Coefficient& value);
  static Polynomial variable(const RingSpec& ring, std::size_t index);
  /// Combines like terms and drops zeros; coefficients are reduced into the field.
  static Polynomial from_terms(const RingSpec& ring, std::vector<Term> terms);

  const RingSpec& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  unsigned total_degree() const;
  /// Coefficient of `m`, zero when absent.
  Coefficient coefficient(const Monomial& m) const;

  /// Leading term under `order`; requires a nonzero polynomial.
  const Term& leading_term(const MonomialOrder& order) const;
  /// Terms sorted descending under `order`.
  std::vector<Term> sorted_terms(const MonomialOrder& order) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }
  Polynomial scaled(const Coefficient& c) const;
  Polynomial times_monomial(const Monomial& m) const;
  Polynomial pow(unsigned k) const;
  /// Divides by the leading coefficient under `order`; zero stays zero.
  Polynomial monic(const MonomialOrder& order) const;

  /// Same polynomial in a ring that has at least as many auxiliary variables.
  Polynomial embed(const RingSpec& larger) const;
  /// Inverse of embed; throws InvalidArgument when a dropped variable occurs.
  Polynomial restrict_to(const RingSpec& smaller) const;
  /// Largest exponent of variable `index` over all terms.
  unsigned degree_in(std::size_t index) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  RingSpec ring_;
  std::vector<Term> terms_;
};

/// Default order of a ring: degrevlex with x_11 > x_12 > ... > x_1n > x_21 >
/// ... > x_mn > t_1 > t_2 > ...
MonomialOrder default_order(const RingSpec& ring);

/// x_{row,col}.
Polynomial matrix_variable(const RingSpec& ring, int row, int col);
/// [k,l|i,j] = x_{ki} x_{lj} - x_{kj} x_{li}.
Polynomial minor(const RingSpec& ring, int k, int l, int i, int j);
/// f_{i,j} = x_{1i} x_{2j} - x_{1j} x_{2i}.
Polynomial edge_binomial(const RingSpec& ring, int i, int j);

}  // namespace binedge

#endif  // BINEDGE_POLYNOMIAL_HPP
