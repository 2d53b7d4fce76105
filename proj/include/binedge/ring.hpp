#ifndef BINEDGE_RING_HPP
#define BINEDGE_RING_HPP

#include <cstddef>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace binedge {

using Coefficient = mpq_class;

/// Polynomial ring K[x_ij : i in [m], j in [n]] with `aux_count` extra
/// variables t_1..t_aux appended after the matrix variables. The field K is
/// the rationals for characteristic 0 and Z/p otherwise.
class RingSpec {
 public:
  RingSpec(int rows, int cols, std::uint32_t characteristic = 0, int aux_count = 0);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::uint32_t characteristic() const { return characteristic_; }
  int aux_count() const { return aux_count_; }
  std::size_t variable_count() const {
    return static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(aux_count_);
  }

  /// Index of x_{row,col}; both 1-based.
  std::size_t matrix_index(int row, int col) const;
  /// Index of the 1-based auxiliary variable t_k.
  std::size_t aux_index(int k) const;
  bool is_aux(std::size_t index) const {
    return index >= static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_);
  }
  std::string variable_name(std::size_t index) const;

  /// Same ring with `extra` more auxiliary variables.
  RingSpec with_extra_aux(int extra) const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  int rows_;
  int cols_;
  std::uint32_t characteristic_;
  int aux_count_;
};

void require_same_ring(const RingSpec& a, const RingSpec& b);

bool is_prime(std::uint32_t value);

/// Coefficient arithmetic for Q (characteristic 0) or Z/p. Residues mod p
/// are stored as integers in [0, p).
class Field {
 public:
  explicit Field(std::uint32_t characteristic = 0) : p_(characteristic) {}

  std::uint32_t characteristic() const { return p_; }

  Coefficient reduce(Coefficient value) const;
  Coefficient from_integer(long value) const { return reduce(Coefficient(value)); }

  Coefficient add(const Coefficient& a, const Coefficient& b) const;
  Coefficient sub(const Coefficient& a, const Coefficient& b) const;
  Coefficient mul(const Coefficient& a, const Coefficient& b) const;
  Coefficient neg(const Coefficient& a) const;
  Coefficient inv(const Coefficient& a) const;
  Coefficient div(const Coefficient& a, const Coefficient& b) const { return mul(a, inv(b)); }

  static bool is_zero(const Coefficient& a) { return sgn(a) == 0; }
  bool is_one(const Coefficient& a) const { return a == 1; }

 private:
  std::uint32_t p_;
};

}  // namespace binedge

#endif  // BINEDGE_RING_HPP
