#include "binedge/polynomial.hpp"

#include <algorithm>

#include "binedge/errors.hpp"

namespace binedge {
namespace {

bool storage_greater(const Term& a, const Term& b) { return raw_compare(a.monomial, b.monomial) > 0; }

// Merges two storage-sorted term lists, b scaled by `sign` (+1 or -1).
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract,
                        const Field& field) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && raw_compare(a[i].monomial, b[j].monomial) > 0)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || raw_compare(a[i].monomial, b[j].monomial) < 0) {
      out.push_back({b[j].monomial, subtract ? field.neg(b[j].coefficient) : b[j].coefficient});
      ++j;
    } else {
      Coefficient c = subtract ? field.sub(a[i].coefficient, b[j].coefficient)
                               : field.add(a[i].coefficient, b[j].coefficient);
      if (!Field::is_zero(c)) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MonomialOrder default_order(const RingSpec& ring) {
  return MonomialOrder::degrevlex(ring.variable_count());
}

Polynomial::Polynomial(RingSpec ring) : ring_(ring) {}

Polynomial Polynomial::constant(const RingSpec& ring, const Coefficient& value) {
  return from_terms(ring, {Term{Monomial(ring.variable_count()), value}});
}

Polynomial Polynomial::variable(const RingSpec& ring, std::size_t index) {
  Polynomial p(ring);
  p.terms_.push_back({Monomial::variable(ring.variable_count(), index), Coefficient(1)});
  return p;
}

Polynomial Polynomial::from_terms(const RingSpec& ring, std::vector<Term> terms) {
  const Field field(ring.characteristic());
  for (auto& t : terms) {
    if (t.monomial.size() != ring.variable_count())
      throw RingMismatch("term has the wrong number of variables");
    t.coefficient = field.reduce(std::move(t.coefficient));
  }
  std::stable_sort(terms.begin(), terms.end(), storage_greater);
  Polynomial p(ring);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient = field.add(p.terms_.back().coefficient, t.coefficient);
      if (Field::is_zero(p.terms_.back().coefficient)) p.terms_.pop_back();
    } else if (!Field::is_zero(t.coefficient)) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

Coefficient Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
    return raw_compare(t.monomial, key) > 0;
  });
  if (it != terms_.end() && it->monomial == m) return it->coefficient;
  return Coefficient(0);
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw InvalidArgument("zero polynomial has no leading term");
  const Term* best = &terms_[0];
  for (const auto& t : terms_)
    if (order.greater(t.monomial, best->monomial)) best = &t;
  return *best;
}

std::vector<Term> Polynomial::sorted_terms(const MonomialOrder& order) const {
  std::vector<Term> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [&](const Term& a, const Term& b) { return order.greater(a.monomial, b.monomial); });
  return out;
}

Polynomial Polynomial::operator-() const {
  const Field field(ring_.characteristic());
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coefficient = field.neg(t.coefficient);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_ring(ring_, other.ring_);
  Polynomial r(ring_);
  r.terms_ = merge(terms_, other.terms_, false, Field(ring_.characteristic()));
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  require_same_ring(ring_, other.ring_);
  Polynomial r(ring_);
  r.terms_ = merge(terms_, other.terms_, true, Field(ring_.characteristic()));
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_ring(ring_, other.ring_);
  const Field field(ring_.characteristic());
  std::vector<Term> products;
  products.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : other.terms_)
      products.push_back({a.monomial * b.monomial, field.mul(a.coefficient, b.coefficient)});
  return from_terms(ring_, std::move(products));
}

Polynomial Polynomial::scaled(const Coefficient& c) const {
  const Field field(ring_.characteristic());
  const Coefficient k = field.reduce(c);
  if (Field::is_zero(k)) return Polynomial(ring_);
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coefficient = field.mul(t.coefficient, k);
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.monomial = t.monomial * m;
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, Coefficient(1));
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (is_zero()) return *this;
  const Field field(ring_.characteristic());
  return scaled(field.inv(leading_term(order).coefficient));
}

Polynomial Polynomial::embed(const RingSpec& larger) const {
  if (larger.rows() != ring_.rows() || larger.cols() != ring_.cols() ||
      larger.characteristic() != ring_.characteristic() ||
      larger.aux_count() < ring_.aux_count())
    throw RingMismatch("cannot embed into a ring that is not an auxiliary extension");
  Polynomial r(larger);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(larger.variable_count());
    for (std::size_t i = 0; i < t.monomial.size(); ++i) m.set(i, t.monomial[i]);
    r.terms_.push_back({m, t.coefficient});
  }
  // Appending zero exponents keeps the storage order.
  return r;
}

Polynomial Polynomial::restrict_to(const RingSpec& smaller) const {
  if (smaller.rows() != ring_.rows() || smaller.cols() != ring_.cols() ||
      smaller.characteristic() != ring_.characteristic() ||
      smaller.aux_count() > ring_.aux_count())
    throw RingMismatch("cannot restrict to a ring that is not a subring");
  const std::size_t nv = smaller.variable_count();
  Polynomial r(smaller);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(nv);
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      if (i >= nv) {
        if (t.monomial[i] != 0) throw InvalidArgument("polynomial uses a dropped variable");
      } else {
        m.set(i, t.monomial[i]);
      }
    }
    r.terms_.push_back({m, t.coefficient});
  }
  return r;
}

unsigned Polynomial::degree_in(std::size_t index) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[index]);
  return d;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!(a.ring_ == b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) ||
        a.terms_[i].coefficient != b.terms_[i].coefficient)
      return false;
  }
  return true;
}

Polynomial matrix_variable(const RingSpec& ring, int row, int col) {
  return Polynomial::variable(ring, ring.matrix_index(row, col));
}

Polynomial minor(const RingSpec& ring, int k, int l, int i, int j) {
  const auto nv = ring.variable_count();
  Monomial a(nv);
  a.set(ring.matrix_index(k, i), 1);
  Monomial b = Monomial::variable(nv, ring.matrix_index(l, j));
  Monomial c(nv);
  c.set(ring.matrix_index(k, j), 1);
  Monomial d = Monomial::variable(nv, ring.matrix_index(l, i));
  return Polynomial::from_terms(ring, {{a * b, Coefficient(1)}, {c * d, Coefficient(-1)}});
}

Polynomial edge_binomial(const RingSpec& ring, int i, int j) { return minor(ring, 1, 2, i, j); }

}  // namespace binedge
