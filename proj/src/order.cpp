#include "binedge/order.hpp"

#include <algorithm>
#include <numeric>

#include "binedge/errors.hpp"

namespace binedge {
namespace {

std::vector<std::uint8_t> identity_precedence(std::size_t nvars) {
  if (nvars > kMaxVariables) throw InvalidArgument("too many variables for an order");
  std::vector<std::uint8_t> p(nvars);
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  return p;
}

void check_permutation(const std::vector<std::uint8_t>& p) {
  std::vector<bool> seen(p.size(), false);
  for (auto v : p) {
    if (v >= p.size() || seen[v]) throw InvalidArgument("precedence is not a permutation");
    seen[v] = true;
  }
}

}  // namespace

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::uint8_t> precedence,
                             std::size_t block_size)
    : kind_(kind), precedence_(std::move(precedence)), block_size_(block_size) {
  check_permutation(precedence_);
  if (block_size_ > precedence_.size()) throw InvalidArgument("elimination block too large");
  identity_ = true;
  for (std::size_t i = 0; i < precedence_.size(); ++i)
    if (precedence_[i] != i) identity_ = false;
}

MonomialOrder MonomialOrder::degrevlex(std::size_t nvars) {
  return MonomialOrder(OrderKind::DegRevLex, identity_precedence(nvars), 0);
}
MonomialOrder MonomialOrder::lex(std::size_t nvars) {
  return MonomialOrder(OrderKind::Lex, identity_precedence(nvars), 0);
}
MonomialOrder MonomialOrder::degrevlex(std::vector<std::uint8_t> precedence) {
  return MonomialOrder(OrderKind::DegRevLex, std::move(precedence), 0);
}
MonomialOrder MonomialOrder::lex(std::vector<std::uint8_t> precedence) {
  return MonomialOrder(OrderKind::Lex, std::move(precedence), 0);
}
MonomialOrder MonomialOrder::elimination(std::vector<std::uint8_t> precedence,
                                         std::size_t block_size) {
  return MonomialOrder(OrderKind::BlockElimination, std::move(precedence), block_size);
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case OrderKind::Lex:
      return "lex";
    case OrderKind::DegRevLex:
      return "degrevlex";
    case OrderKind::BlockElimination:
      return "elimination(" + std::to_string(block_size_) + ")";
  }
  return "?";
}

int MonomialOrder::compare_grevlex_range(const Monomial& a, const Monomial& b,
                                         std::size_t begin, std::size_t end) const {
  unsigned da = 0;
  unsigned db = 0;
  for (std::size_t k = begin; k < end; ++k) {
    da += a[precedence_[k]];
    db += b[precedence_[k]];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t k = end; k-- > begin;) {
    const unsigned ea = a[precedence_[k]];
    const unsigned eb = b[precedence_[k]];
    if (ea != eb) return ea < eb ? 1 : -1;
  }
  return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = precedence_.size();
  switch (kind_) {
    case OrderKind::Lex:
      for (std::size_t k = 0; k < n; ++k) {
        const unsigned ea = a[precedence_[k]];
        const unsigned eb = b[precedence_[k]];
        if (ea != eb) return ea < eb ? -1 : 1;
      }
      return 0;
    case OrderKind::DegRevLex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      if (identity_) {
        for (std::size_t k = n; k-- > 0;) {
          if (a[k] != b[k]) return a[k] < b[k] ? 1 : -1;
        }
        return 0;
      }
      for (std::size_t k = n; k-- > 0;) {
        const unsigned ea = a[precedence_[k]];
        const unsigned eb = b[precedence_[k]];
        if (ea != eb) return ea < eb ? 1 : -1;
      }
      return 0;
    case OrderKind::BlockElimination:
      if (int c = compare_grevlex_range(a, b, 0, block_size_); c != 0) return c;
      return compare_grevlex_range(a, b, block_size_, n);
  }
  return 0;
}

}  // namespace binedge
