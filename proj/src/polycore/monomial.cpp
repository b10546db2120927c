#include "theta/polycore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace theta {

MonomialOrder parse_monomial_order(std::string_view name) {
  if (name == "grevlex") return MonomialOrder::GrevLex;
  if (name == "grlex") return MonomialOrder::GrLex;
  throw std::invalid_argument("unknown monomial order '" + std::string(name) + "'");
}

std::string_view to_string(MonomialOrder order) {
  return order == MonomialOrder::GrevLex ? "grevlex" : "grlex";
}

Monomial::Monomial(std::vector<std::uint32_t> exponents)
    : exponents_(std::move(exponents)),
      degree_(std::accumulate(exponents_.begin(), exponents_.end(), std::uint32_t{0})) {}

Monomial Monomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  std::vector<std::uint32_t> e(nvars, 0);
  e[index] = 1;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (nvars() != other.nvars()) throw std::invalid_argument("monomial variable-count mismatch");
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (nvars() != other.nvars()) throw std::invalid_argument("monomial variable-count mismatch");
  std::vector<std::uint32_t> e(exponents_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exponents_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw std::invalid_argument("monomial does not divide");
  std::vector<std::uint32_t> e(exponents_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= divisor.exponents_[i];
  return Monomial(std::move(e));
}

double Monomial::evaluate(std::span<const double> point) const {
  if (point.size() != nvars()) throw std::invalid_argument("point dimension mismatch");
  double v = 1.0;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    for (std::uint32_t k = 0; k < exponents_[i]; ++k) v *= point[i];
  }
  return v;
}

Rational Monomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars()) throw std::invalid_argument("point dimension mismatch");
  Rational v = 1;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    for (std::uint32_t k = 0; k < exponents_[i]; ++k) v *= point[i];
  }
  return v;
}

std::string Monomial::to_string() const {
  if (degree_ == 0) return "1";
  std::string out;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (exponents_[i] > 1) out += '^' + std::to_string(exponents_[i]);
  }
  return out;
}

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("monomial variable-count mismatch");
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  const std::size_t n = a.nvars();
  if (order == MonomialOrder::GrLex) {
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
  }
  // grevlex: the smaller exponent in the last differing variable wins.
  for (std::size_t i = n; i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

namespace {

void fill_exponents(std::size_t var, std::uint32_t remaining, std::vector<std::uint32_t>& cur,
                    std::vector<Monomial>& out) {
  if (var + 1 == cur.size()) {
    cur[var] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (std::uint32_t e = remaining + 1; e-- > 0;) {
    cur[var] = e;
    fill_exponents(var + 1, remaining - e, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t degree,
                                          MonomialOrder order) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(std::vector<std::uint32_t>{});
    return out;
  }
  std::vector<std::uint32_t> cur(nvars, 0);
  fill_exponents(0, degree, cur, out);
  std::sort(out.begin(), out.end(), [order](const Monomial& a, const Monomial& b) {
    return compare_monomials(a, b, order) == std::strong_ordering::greater;
  });
  return out;
}

}  // namespace theta
