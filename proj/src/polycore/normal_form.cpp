#include "theta/polycore.hpp"

#include <algorithm>

namespace theta {

namespace {

Reducer make_reducer(const Polynomial& g, MonomialOrder order) {
  if (g.is_zero()) throw std::invalid_argument("zero polynomial cannot be a reducer");
  const Monomial& lead = g.leading_monomial(order);
  return Reducer{g, lead, g.coefficient(lead)};
}

}  // namespace

ReducerSet::ReducerSet(const Polynomial& generator, MonomialOrder order)
    : order_(order), confluent_(true), nvars_(generator.nvars()) {
  reducers_.push_back(make_reducer(generator, order));
}

ReducerSet::ReducerSet(const std::vector<Polynomial>& generators, MonomialOrder order,
                       bool confluent)
    : order_(order), confluent_(confluent || generators.size() <= 1) {
  if (generators.empty()) throw std::invalid_argument("reducer set needs at least one generator");
  nvars_ = generators.front().nvars();
  for (const auto& g : generators) {
    if (g.nvars() != nvars_) throw std::invalid_argument("reducer variable-count mismatch");
    reducers_.push_back(make_reducer(g, order));
  }
}

bool ReducerSet::is_standard(const Monomial& m) const {
  return std::none_of(reducers_.begin(), reducers_.end(),
                      [&m](const Reducer& r) { return r.lead.divides(m); });
}

Polynomial normal_form(const Polynomial& f, const ReducerSet& reducers) {
  if (!reducers.confluent()) {
    throw std::invalid_argument("normal_form requires a confluent reducer set");
  }
  if (f.nvars() != reducers.nvars()) throw std::invalid_argument("polynomial variable-count mismatch");

  const MonomialOrder order = reducers.order();
  auto greater = [order](const Monomial& a, const Monomial& b) {
    return compare_monomials(a, b, order) == std::strong_ordering::greater;
  };
  // Work list kept sorted largest-first under the term order.
  std::map<Monomial, Rational, decltype(greater)> work(greater);
  for (const auto& [m, c] : f.terms()) work.emplace(m, c);

  Polynomial remainder(f.nvars());
  while (!work.empty()) {
    auto top = work.begin();
    const Monomial m = top->first;
    const Rational c = top->second;
    work.erase(top);

    const Reducer* hit = nullptr;
    for (const auto& r : reducers.reducers()) {
      if (r.lead.divides(m)) {
        hit = &r;
        break;
      }
    }
    if (hit == nullptr) {
      remainder.add_term(m, c);
      continue;
    }
    const Monomial shift = m / hit->lead;
    const Rational factor = c / hit->lead_coefficient;
    for (const auto& [gm, gc] : hit->poly.terms()) {
      if (gm == hit->lead) continue;
      Monomial target = gm * shift;
      Rational delta = -factor * gc;
      auto [it, inserted] = work.try_emplace(target, delta);
      if (!inserted) {
        it->second += delta;
        if (it->second == 0) work.erase(it);
      }
    }
  }
  return remainder;
}

}  // namespace theta
