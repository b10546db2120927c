#include "theta/quotient.hpp"

#include <map>
#include <stdexcept>

namespace theta {

namespace {

class ReducerOracle final : public QuotientOracle {
 public:
  ReducerOracle(const ReducerSet& reducers, int k)
      : QuotientOracle(IdealKind::Principal, reducers.nvars()), reducers_(reducers) {
    if (!reducers.confluent()) throw std::invalid_argument("reducer set must be confluent");
    const auto top = static_cast<std::uint32_t>(2 * k);
    bool finite = false;
    for (std::uint32_t d = 0; d <= top + 1; ++d) {
      bool any = false;
      for (const auto& m : monomials_of_degree(nvars(), d, reducers.order())) {
        if (!reducers.is_standard(m)) continue;
        any = true;
        if (d > top) break;
        index_.emplace(m, basis_.elements.size());
        basis_.elements.push_back(m);
        basis_.labels.push_back(m.to_string());
      }
      // Standard monomials form an order ideal: an empty degree ends the basis.
      if (!any) {
        finite = true;
        break;
      }
    }
    if (basis_.elements.empty()) throw std::invalid_argument("reducer set generates the unit ideal");
    level_ = k;
    complete_ = finite;
    finalize();
  }

 protected:
  SparseVector reduce_monomial(const Monomial& m) const override {
    auto nf = theta::normal_form(Polynomial::term(m, Rational(1)), reducers_);
    std::map<std::size_t, Rational> acc;
    for (const auto& [mono, c] : nf.terms()) {
      auto it = index_.find(mono);
      if (it == index_.end()) {
        throw std::out_of_range("standard monomial " + mono.to_string() +
                                " lies outside the enumerated basis");
      }
      acc[it->second] += c;
    }
    SparseVector out;
    for (auto& [i, c] : acc) {
      if (c != 0) out.emplace_back(i, c);
    }
    return out;
  }

 private:
  ReducerSet reducers_;
  std::map<Monomial, std::size_t> index_;
};

}  // namespace

OraclePtr basis_from_reducers(const ReducerSet& reducers, int k) {
  if (k < 1) throw std::invalid_argument("level k must be at least 1");
  for (const auto& r : reducers.reducers()) {
    if (r.lead.is_one()) throw std::invalid_argument("a reducer has constant leading monomial");
  }
  return std::make_shared<ReducerOracle>(reducers, k);
}

OraclePtr basis_principal(const Polynomial& h, MonomialOrder order, int k) {
  if (h.is_zero() || h.degree() < 1) throw std::invalid_argument("principal generator must be nonconstant");
  return basis_from_reducers(ReducerSet(h, order), k);
}

}  // namespace theta
