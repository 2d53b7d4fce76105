#ifndef BINEDGE_MONOMIAL_HPP
#define BINEDGE_MONOMIAL_HPP

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <span>
#include <vector>

namespace binedge {

inline constexpr std::size_t kMaxVariables = 64;

/// Dense exponent vector over at most kMaxVariables variables. Exponents are
/// capped at 255; products that overflow throw std::overflow_error.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);

  static Monomial from_exponents(std::span<const unsigned> exponents);
  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);

  std::size_t size() const { return nvars_; }
  unsigned operator[](std::size_t i) const { return exp_[i]; }
  unsigned degree() const { return degree_; }
  /// Bit i is set iff variable i occurs.
  std::uint64_t support() const { return support_; }
  bool is_one() const { return degree_ == 0; }
  bool is_squarefree() const { return std::popcount(support_) == static_cast<int>(degree_); }

  void set(std::size_t i, unsigned e);

  bool divides(const Monomial& other) const {
    if ((support_ & ~other.support_) != 0 || degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (exp_[i] > other.exp_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& other) const { return (support_ & other.support_) == 0; }

  Monomial operator*(const Monomial& other) const;
  /// this / divisor; requires divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;

  std::vector<unsigned> exponents() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.exp_ == b.exp_;
  }
  /// Plain lexicographic comparison of exponent vectors (index 0 most
  /// significant). Used as the storage order of Polynomial.
  friend std::strong_ordering raw_compare(const Monomial& a, const Monomial& b) {
    int c = std::memcmp(a.exp_.data(), b.exp_.data(), kMaxVariables);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  std::array<std::uint8_t, kMaxVariables> exp_{};
  std::uint64_t support_ = 0;
  std::uint16_t degree_ = 0;
  std::uint8_t nvars_ = 0;
};

}  // namespace binedge

#endif  // BINEDGE_MONOMIAL_HPP
