#include "binedge/poly_text.hpp"

#include <cctype>
#include <sstream>

#include "binedge/errors.hpp"

namespace binedge {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingSpec& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept_word(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    const std::size_t after = pos_ + word.size();
    if (after < text_.size() && std::isalpha(static_cast<unsigned char>(text_[after]))) return false;
    pos_ = after;
    return true;
  }

  mpz_class natural() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  int small_int() {
    mpz_class v = natural();
    if (!v.fits_sint_p()) fail("index out of range");
    return static_cast<int>(v.get_si());
  }

  Polynomial expression() {
    Polynomial acc(ring_);
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    acc = negative ? -term() : term();
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (accept('^')) {
      mpz_class e = natural();
      if (!e.fits_uint_p() || e > 1000) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Polynomial primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = natural();
      mpz_class den = 1;
      if (accept('/')) {
        den = natural();
        if (den == 0) fail("zero denominator");
      }
      const Field field(ring_.characteristic());
      try {
        return Polynomial::constant(ring_, field.reduce(Coefficient(num, den)));
      } catch (const InvalidArgument& e) {
        fail(e.what());
      }
    }
    if (accept('(')) {
      Polynomial inner = expression();
      expect(')');
      return inner;
    }
    try {
      if (accept_word("minor")) {
        expect('[');
        const int k = small_int();
        expect(',');
        const int l = small_int();
        expect('|');
        const int i = small_int();
        expect(',');
        const int j = small_int();
        expect(']');
        return minor(ring_, k, l, i, j);
      }
      if (accept_word("f")) {
        expect('[');
        const int i = small_int();
        expect(',');
        const int j = small_int();
        expect(']');
        return edge_binomial(ring_, i, j);
      }
      if (accept_word("x")) {
        expect('[');
        const int i = small_int();
        expect(']');
        expect('[');
        const int j = small_int();
        expect(']');
        return matrix_variable(ring_, i, j);
      }
      if (accept_word("t")) {
        expect('[');
        const int k = small_int();
        expect(']');
        return Polynomial::variable(ring_, ring_.aux_index(k));
      }
    } catch (const InvalidArgument& e) {
      fail(e.what());
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const RingSpec& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingSpec& ring) {
  return Parser(text, ring).parse();
}

std::string format_monomial(const Monomial& m, const RingSpec& ring) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.variable_name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

std::string format_polynomial(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : p.sorted_terms(order)) {
    Coefficient c = t.coefficient;
    const bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    if (t.monomial.is_one()) {
      out << c.get_str();
    } else {
      if (c != 1) out << c.get_str() << '*';
      out << format_monomial(t.monomial, p.ring());
    }
  }
  return out.str();
}

std::string format_polynomial(const Polynomial& p) { return format_polynomial(p, default_order(p.ring())); }

}  // namespace binedge
