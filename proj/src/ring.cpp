#include "binedge/ring.hpp"

#include <limits>

#include "binedge/errors.hpp"
#include "binedge/monomial.hpp"

namespace binedge {

bool is_prime(std::uint32_t value) {
  if (value < 2) return false;
  for (std::uint64_t d = 2; d * d <= value; ++d)
    if (value % d == 0) return false;
  return true;
}

RingSpec::RingSpec(int rows, int cols, std::uint32_t characteristic, int aux_count)
    : rows_(rows), cols_(cols), characteristic_(characteristic), aux_count_(aux_count) {
  if (rows < 2) throw InvalidArgument("ring needs m >= 2 rows");
  if (cols < 1) throw InvalidArgument("ring needs n >= 1 columns");
  if (aux_count < 0) throw InvalidArgument("negative auxiliary variable count");
  if (characteristic != 0 && !is_prime(characteristic))
    throw InvalidArgument("characteristic must be 0 or a prime, got " +
                          std::to_string(characteristic));
  if (characteristic > static_cast<std::uint32_t>(std::numeric_limits<int>::max()))
    throw InvalidArgument("characteristic too large");
  if (variable_count() > kMaxVariables)
    throw InvalidArgument("ring has " + std::to_string(variable_count()) +
                          " variables; at most " + std::to_string(kMaxVariables) +
                          " are supported");
}

std::size_t RingSpec::matrix_index(int row, int col) const {
  if (row < 1 || row > rows_ || col < 1 || col > cols_)
    throw InvalidArgument("x[" + std::to_string(row) + "][" + std::to_string(col) +
                          "] is not a variable of the ring");
  return static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(cols_) +
         static_cast<std::size_t>(col - 1);
}

std::size_t RingSpec::aux_index(int k) const {
  if (k < 1 || k > aux_count_)
    throw InvalidArgument("t[" + std::to_string(k) + "] is not a variable of the ring");
  return static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_) +
         static_cast<std::size_t>(k - 1);
}

std::string RingSpec::variable_name(std::size_t index) const {
  const auto matrix = static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_);
  if (index < matrix) {
    const auto row = index / static_cast<std::size_t>(cols_) + 1;
    const auto col = index % static_cast<std::size_t>(cols_) + 1;
    return "x[" + std::to_string(row) + "][" + std::to_string(col) + "]";
  }
  return "t[" + std::to_string(index - matrix + 1) + "]";
}

RingSpec RingSpec::with_extra_aux(int extra) const {
  return RingSpec(rows_, cols_, characteristic_, aux_count_ + extra);
}

void require_same_ring(const RingSpec& a, const RingSpec& b) {
  if (!(a == b)) throw RingMismatch("operands belong to different polynomial rings");
}

Coefficient Field::reduce(Coefficient value) const {
  if (p_ == 0) {
    value.canonicalize();
    return value;
  }
  mpz_class num = value.get_num();
  mpz_class den = value.get_den();
  const mpz_class p(p_);
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  if (den != 1) {
    mpz_class d;
    mpz_fdiv_r(d.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    if (d == 0) throw InvalidArgument("denominator divisible by the characteristic");
    mpz_class dinv;
    mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
    r = r * dinv;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
  }
  return Coefficient(r);
}

Coefficient Field::add(const Coefficient& a, const Coefficient& b) const {
  if (p_ == 0) return a + b;
  Coefficient s = a + b;
  if (s >= p_) s -= p_;
  return s;
}

Coefficient Field::sub(const Coefficient& a, const Coefficient& b) const {
  if (p_ == 0) return a - b;
  Coefficient s = a - b;
  if (s < 0) s += p_;
  return s;
}

Coefficient Field::mul(const Coefficient& a, const Coefficient& b) const {
  if (p_ == 0) return a * b;
  mpz_class r = a.get_num() * b.get_num();
  mpz_fdiv_r_ui(r.get_mpz_t(), r.get_mpz_t(), p_);
  return Coefficient(r);
}

Coefficient Field::neg(const Coefficient& a) const {
  if (p_ == 0) return -a;
  if (sgn(a) == 0) return a;
  return Coefficient(p_) - a;
}

Coefficient Field::inv(const Coefficient& a) const {
  if (sgn(a) == 0) throw InvalidArgument("division by zero");
  if (p_ == 0) return 1 / a;
  mpz_class r;
  const mpz_class p(p_);
  mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), p.get_mpz_t());
  return Coefficient(r);
}

}  // namespace binedge
