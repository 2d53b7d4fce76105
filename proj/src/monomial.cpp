#include "binedge/monomial.hpp"

#include <stdexcept>

#include "binedge/errors.hpp"

namespace binedge {

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVariables) throw InvalidArgument("too many variables for a monomial");
}

Monomial Monomial::from_exponents(std::span<const unsigned> exponents) {
  Monomial m(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) m.set(i, exponents[i]);
  return m;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
  Monomial m(nvars);
  if (index >= nvars) throw InvalidArgument("variable index out of range");
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= nvars_) throw InvalidArgument("variable index out of range");
  if (e > 255) throw std::overflow_error("monomial exponent exceeds 255");
  degree_ = static_cast<std::uint16_t>(degree_ - exp_[i] + e);
  exp_[i] = static_cast<std::uint8_t>(e);
  if (e != 0)
    support_ |= std::uint64_t{1} << i;
  else
    support_ &= ~(std::uint64_t{1} << i);
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < nvars_; ++i) {
    const unsigned e = static_cast<unsigned>(exp_[i]) + other.exp_[i];
    if (e > 255) throw std::overflow_error("monomial exponent exceeds 255");
    r.exp_[i] = static_cast<std::uint8_t>(e);
  }
  r.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  r.support_ = support_ | other.support_;
  return r;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < nvars_; ++i) {
    r.exp_[i] = static_cast<std::uint8_t>(exp_[i] - divisor.exp_[i]);
    if (r.exp_[i] == 0) r.support_ &= ~(std::uint64_t{1} << i);
  }
  r.degree_ = static_cast<std::uint16_t>(degree_ - divisor.degree_);
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(*this);
  unsigned degree = 0;
  for (std::size_t i = 0; i < nvars_; ++i) {
    r.exp_[i] = std::max(exp_[i], other.exp_[i]);
    degree += r.exp_[i];
  }
  r.degree_ = static_cast<std::uint16_t>(degree);
  r.support_ = support_ | other.support_;
  return r;
}

std::vector<unsigned> Monomial::exponents() const {
  return std::vector<unsigned>(exp_.begin(), exp_.begin() + nvars_);
}

}  // namespace binedge
