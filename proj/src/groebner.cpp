#include "binedge/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>

#include "binedge/errors.hpp"

namespace binedge {
namespace {

using TermList = std::vector<Term>;
using Clock = std::chrono::steady_clock;

TermList sorted_under(const Polynomial& p, const MonomialOrder& order) { return p.sorted_terms(order); }

// Returns a[from..] - c * u * b[1..] where the leading terms are known to cancel.
TermList subtract_shifted(const TermList& a, std::size_t from, const Coefficient& c,
                          const Monomial& u, const TermList& b, const MonomialOrder& order,
                          const Field& field) {
  TermList out;
  out.reserve(a.size() - from + b.size());
  std::size_t i = from;
  std::size_t j = 1;
  std::optional<Term> pending;
  auto next_b = [&]() -> Term {
    return Term{b[j].monomial * u, field.neg(field.mul(c, b[j].coefficient))};
  };
  if (j < b.size()) pending = next_b();
  while (i < a.size() || pending) {
    if (!pending) {
      out.push_back(a[i++]);
      continue;
    }
    const int cmp = i < a.size() ? order.compare(a[i].monomial, pending->monomial) : -1;
    if (cmp > 0) {
      out.push_back(a[i++]);
      continue;
    }
    if (cmp < 0) {
      out.push_back(std::move(*pending));
    } else {
      Coefficient s = field.add(a[i].coefficient, pending->coefficient);
      if (!Field::is_zero(s)) out.push_back(Term{a[i].monomial, std::move(s)});
      ++i;
    }
    ++j;
    pending.reset();
    if (j < b.size()) pending = next_b();
  }
  return out;
}

struct Reducer {
  const TermList* terms;
  Monomial lead;
};

// Full reduction of p (sorted under order) by reducers in sequence order.
// Reducers must have a nonzero leading coefficient; they need not be monic.
TermList reduce_full(TermList p, const std::vector<Reducer>& reducers, const MonomialOrder& order,
                     const Field& field, const std::function<void()>* tick = nullptr) {
  TermList remainder;
  std::size_t pos = 0;
  while (pos < p.size()) {
    const Monomial& lm = p[pos].monomial;
    const Reducer* found = nullptr;
    for (const auto& r : reducers) {
      if (r.lead.divides(lm)) {
        found = &r;
        break;
      }
    }
    if (found == nullptr) {
      remainder.push_back(p[pos]);
      ++pos;
      continue;
    }
    const TermList& g = *found->terms;
    const Coefficient c = field.div(p[pos].coefficient, g.front().coefficient);
    const Monomial u = lm.quotient(found->lead);
    p = subtract_shifted(p, pos + 1, c, u, g, order, field);
    pos = 0;
    if (tick != nullptr) (*tick)();
  }
  return remainder;
}

void make_monic(TermList& p, const Field& field) {
  if (p.empty() || field.is_one(p.front().coefficient)) return;
  const Coefficient inv = field.inv(p.front().coefficient);
  for (auto& t : p) t.coefficient = field.mul(t.coefficient, inv);
}

Polynomial to_polynomial(const RingSpec& ring, TermList terms) {
  return Polynomial::from_terms(ring, std::move(terms));
}

class Buchberger {
 public:
  Buchberger(const RingSpec& ring, const MonomialOrder& order, const GbLimits& limits)
      : ring_(ring), order_(order), limits_(limits), field_(ring.characteristic()),
        start_(Clock::now()) {}

  std::vector<Polynomial> run(const std::vector<Polynomial>& generators) {
    std::vector<TermList> inputs;
    for (const auto& g : generators) {
      require_same_ring(ring_, g.ring());
      if (!g.is_zero()) inputs.push_back(sorted_under(g, order_));
    }
    // Fixed processing order of the inputs: by leading monomial, then size.
    std::stable_sort(inputs.begin(), inputs.end(), [&](const TermList& a, const TermList& b) {
      const int c = order_.compare(a.front().monomial, b.front().monomial);
      if (c != 0) return c < 0;
      return a.size() < b.size();
    });
    for (auto& p : inputs) {
      TermList h = reduce_full(std::move(p), active_reducers(), order_, field_);
      if (h.empty()) continue;
      if (insert(std::move(h))) return unit_basis();
    }
    while (!pairs_.empty()) {
      check_limits();
      const std::size_t k = select_pair();
      const Pair pair = pairs_[k];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(k));
      TermList s = s_polynomial(pair);
      TermList h = reduce_full(std::move(s), active_reducers(), order_, field_, &tick_);
      if (h.empty()) continue;
      if (insert(std::move(h))) return unit_basis();
    }
    return finish();
  }

 private:
  struct Entry {
    TermList terms;
    Monomial lead;
    bool active = true;
  };
  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
  };

  std::vector<Reducer> active_reducers() const {
    std::vector<Reducer> out;
    for (const auto& e : basis_)
      if (e.active) out.push_back({&e.terms, e.lead});
    return out;
  }

  // A unit generates everything, so the reduced basis is {1} and the
  // remaining pairs need not be processed.
  std::vector<Polynomial> unit_basis() const { return {Polynomial::constant(ring_, Coefficient(1))}; }

  void check_limits() {
    const auto& lim = limits_;
    if (lim.max_terms != 0 && stored_terms_ > lim.max_terms)
      throw ResourceLimitExceeded("Groebner basis exceeded " + std::to_string(lim.max_terms) +
                                  " stored terms");
    if (lim.max_seconds > 0.0) {
      const std::chrono::duration<double> elapsed = Clock::now() - start_;
      if (elapsed.count() > lim.max_seconds)
        throw ResourceLimitExceeded("Groebner basis exceeded the time budget");
    }
  }

  std::size_t select_pair() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.lcm.degree() != b.lcm.degree()) {
        if (a.lcm.degree() < b.lcm.degree()) best = k;
        continue;
      }
      const int c = order_.compare(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && std::tie(a.i, a.j) < std::tie(b.i, b.j))) best = k;
    }
    return best;
  }

  TermList s_polynomial(const Pair& pair) const {
    const Entry& f = basis_[pair.i];
    const Entry& g = basis_[pair.j];
    const Monomial uf = pair.lcm.quotient(f.lead);
    const Monomial ug = pair.lcm.quotient(g.lead);
    TermList fu;
    fu.reserve(f.terms.size());
    for (std::size_t k = 1; k < f.terms.size(); ++k)
      fu.push_back({f.terms[k].monomial * uf, f.terms[k].coefficient});
    // Both are monic, so the leading terms cancel with coefficient 1.
    TermList full_g = g.terms;
    return subtract_shifted(fu, 0, Coefficient(1), ug, full_g, order_, field_);
  }

  // Gebauer-Moeller update. Returns true when h is a unit.
  bool insert(TermList h) {
    make_monic(h, field_);
    if (h.front().monomial.is_one()) return true;
    const std::size_t hi = basis_.size();
    stored_terms_ += h.size();
    basis_.push_back(Entry{std::move(h), Monomial(), true});
    basis_[hi].lead = basis_[hi].terms.front().monomial;
    const Monomial hl = basis_[hi].lead;

    std::vector<std::size_t> candidates;
    for (std::size_t g = 0; g < hi; ++g)
      if (basis_[g].active) candidates.push_back(g);

    std::vector<std::pair<std::size_t, Monomial>> kept;
    for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
      const std::size_t g1 = candidates[idx];
      const Monomial l1 = hl.lcm(basis_[g1].lead);
      if (hl.coprime(basis_[g1].lead)) {
        kept.emplace_back(g1, l1);
        continue;
      }
      bool dominated = false;
      for (std::size_t rest = idx + 1; rest < candidates.size() && !dominated; ++rest)
        dominated = hl.lcm(basis_[candidates[rest]].lead).divides(l1);
      for (std::size_t d = 0; d < kept.size() && !dominated; ++d)
        dominated = kept[d].second.divides(l1);
      if (!dominated) kept.emplace_back(g1, l1);
    }

    std::vector<Pair> next;
    next.reserve(pairs_.size() + kept.size());
    for (const auto& p : pairs_) {
      const bool chain = hl.divides(p.lcm) && !(hl.lcm(basis_[p.i].lead) == p.lcm) &&
                         !(hl.lcm(basis_[p.j].lead) == p.lcm);
      if (!chain) next.push_back(p);
    }
    for (auto& [g, l] : kept)
      if (!hl.coprime(basis_[g].lead)) next.push_back(Pair{g, hi, l});
    pairs_ = std::move(next);

    for (std::size_t g = 0; g < hi; ++g)
      if (basis_[g].active && hl.divides(basis_[g].lead)) basis_[g].active = false;
    return false;
  }

  std::vector<Polynomial> finish() {
    std::vector<std::size_t> active;
    for (std::size_t g = 0; g < basis_.size(); ++g)
      if (basis_[g].active) active.push_back(g);
    std::vector<TermList> reduced;
    reduced.reserve(active.size());
    for (std::size_t a : active) {
      std::vector<Reducer> others;
      for (std::size_t b : active)
        if (b != a) others.push_back({&basis_[b].terms, basis_[b].lead});
      TermList tail(basis_[a].terms.begin() + 1, basis_[a].terms.end());
      TermList r = reduce_full(std::move(tail), others, order_, field_);
      r.insert(r.begin(), basis_[a].terms.front());
      reduced.push_back(std::move(r));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const TermList& a, const TermList& b) {
      return order_.greater(a.front().monomial, b.front().monomial);
    });
    std::vector<Polynomial> out;
    out.reserve(reduced.size());
    for (auto& r : reduced) out.push_back(to_polynomial(ring_, std::move(r)));
    return out;
  }

  const RingSpec& ring_;
  const MonomialOrder& order_;
  const GbLimits& limits_;
  Field field_;
  Clock::time_point start_;
  std::vector<Entry> basis_;
  std::vector<Pair> pairs_;
  std::size_t stored_terms_ = 0;
  std::size_t steps_ = 0;
  std::function<void()> tick_ = [this] {
    if ((++steps_ & 0x3FF) == 0) check_limits();
  };
};

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order) {
  if (order.variable_count() != f.ring().variable_count())
    throw RingMismatch("monomial order does not match the ring");
  std::vector<TermList> sorted;
  sorted.reserve(basis.size());
  for (const auto& g : basis) {
    require_same_ring(f.ring(), g.ring());
    if (!g.is_zero()) sorted.push_back(sorted_under(g, order));
  }
  std::vector<Reducer> reducers;
  reducers.reserve(sorted.size());
  for (const auto& g : sorted) reducers.push_back({&g, g.front().monomial});
  const Field field(f.ring().characteristic());
  return to_polynomial(f.ring(), reduce_full(sorted_under(f, order), reducers, order, field));
}

std::vector<Polynomial> reduced_groebner(const std::vector<Polynomial>& generators,
                                         const MonomialOrder& order,
                                         const GbLimits& limits) {
  if (generators.empty()) return {};
  const RingSpec& ring = generators.front().ring();
  if (order.variable_count() != ring.variable_count())
    throw RingMismatch("monomial order does not match the ring");
  Buchberger engine(ring, order, limits);
  return engine.run(generators);
}

}  // namespace binedge
