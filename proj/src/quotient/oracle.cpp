#include "theta/quotient.hpp"

#include <algorithm>
#include <stdexcept>

namespace theta {

std::string_view to_string(IdealKind kind) {
  switch (kind) {
    case IdealKind::FinitePoints: return "points";
    case IdealKind::StableSet: return "stable_set";
    case IdealKind::CutIdeal: return "cut";
    case IdealKind::Principal: return "principal";
  }
  return "unknown";
}

std::size_t ThetaBasis::prefix_size(int k) const {
  std::size_t n = 0;
  while (n < elements.size() && static_cast<int>(elements[n].degree()) <= k) ++n;
  return n;
}

int ThetaBasis::max_degree() const {
  return elements.empty() ? -1 : static_cast<int>(elements.back().degree());
}

std::size_t QuotientOracle::level_size(int k) const {
  if (!supports_level(k)) {
    throw std::out_of_range("level " + std::to_string(k) + " exceeds the constructed depth " +
                            std::to_string(level_));
  }
  return basis_.prefix_size(k);
}

void QuotientOracle::finalize() {
  if (basis_.elements.empty() || !basis_.elements.front().is_one()) {
    throw std::logic_error("theta basis must start with the constant monomial");
  }
  for (std::size_t i = 1; i < basis_.size(); ++i) {
    if (basis_.elements[i].degree() < basis_.elements[i - 1].degree()) {
      throw std::logic_error("theta basis must be degree-nondecreasing");
    }
  }
  coordinate_forms_.clear();
  for (std::size_t v = 0; v < nvars_; ++v) {
    coordinate_forms_.push_back(reduce_monomial(Monomial::variable(nvars_, v)));
  }
  table_dim_ = basis_.prefix_size(level_);
  table_.clear();
  table_.reserve(table_dim_ * (table_dim_ + 1) / 2);
  for (std::size_t i = 0; i < table_dim_; ++i) {
    for (std::size_t j = i; j < table_dim_; ++j) {
      table_.push_back(reduce_monomial(basis_.elements[i] * basis_.elements[j]));
    }
  }
}

SparseVector QuotientOracle::product(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  if (j < table_dim_) {
    std::size_t offset = i * table_dim_ - i * (i - 1) / 2;  // start of row i
    return table_[offset + (j - i)];
  }
  if (j >= basis_.size()) throw std::out_of_range("basis index out of range");
  return reduce_monomial(basis_.elements[i] * basis_.elements[j]);
}

std::optional<std::size_t> QuotientOracle::coordinate_slot(std::size_t var) const {
  const auto& form = coordinate_forms_.at(var);
  if (form.size() == 1 && form.front().second == 1 &&
      basis_.elements[form.front().first] == Monomial::variable(nvars_, var)) {
    return form.front().first;
  }
  return std::nullopt;
}

bool QuotientOracle::degenerate() const {
  for (std::size_t v = 0; v < nvars_; ++v) {
    if (!coordinate_slot(v)) return true;
  }
  return false;
}

SparseVector QuotientOracle::coordinates(const Polynomial& f) const {
  if (f.nvars() != nvars_) throw std::invalid_argument("polynomial variable-count mismatch");
  std::map<std::size_t, Rational> acc;
  for (const auto& [m, c] : f.terms()) {
    for (const auto& [idx, coeff] : reduce_monomial(m)) acc[idx] += c * coeff;
  }
  SparseVector out;
  for (auto& [idx, c] : acc) {
    if (c != 0) out.emplace_back(idx, c);
  }
  return out;
}

Polynomial QuotientOracle::from_coordinates(const SparseVector& v) const {
  Polynomial p(nvars_);
  for (const auto& [idx, c] : v) p.add_term(basis_.elements.at(idx), c);
  return p;
}

}  // namespace theta
