#ifndef BINEDGE_ORDER_HPP
#define BINEDGE_ORDER_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "binedge/monomial.hpp"

namespace binedge {

enum class OrderKind { Lex, DegRevLex, BlockElimination };

/// A monomial order over a fixed number of variables. `precedence` lists the
/// variables from highest to lowest. A block-elimination order compares the
/// first `block_size` variables of the precedence by degrevlex and breaks
/// ties by degrevlex on the remaining ones.
class MonomialOrder {
 public:
  static MonomialOrder degrevlex(std::size_t nvars);
  static MonomialOrder lex(std::size_t nvars);
  static MonomialOrder degrevlex(std::vector<std::uint8_t> precedence);
  static MonomialOrder lex(std::vector<std::uint8_t> precedence);
  static MonomialOrder elimination(std::vector<std::uint8_t> precedence, std::size_t block_size);

  OrderKind kind() const { return kind_; }
  std::size_t variable_count() const { return precedence_.size(); }
  std::size_t block_size() const { return block_size_; }
  const std::vector<std::uint8_t>& precedence() const { return precedence_; }
  std::string name() const;

  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(OrderKind kind, std::vector<std::uint8_t> precedence, std::size_t block_size);

  int compare_grevlex_range(const Monomial& a, const Monomial& b, std::size_t begin,
                            std::size_t end) const;

  OrderKind kind_;
  std::vector<std::uint8_t> precedence_;
  std::size_t block_size_ = 0;
  bool identity_ = false;
};

}  // namespace binedge

#endif  // BINEDGE_ORDER_HPP
