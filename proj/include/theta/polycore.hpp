#pragma once

// Exact sparse multivariate polynomials over the rationals, graded term
// orders and normal-form reduction against a marked reducer set.

#include "theta/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace theta {

enum class MonomialOrder {
  GrevLex,  // graded reverse lexicographic, x1 > x2 > ... > xn
  GrLex,    // graded lexicographic, x1 > x2 > ... > xn
};

MonomialOrder parse_monomial_order(std::string_view name);
std::string_view to_string(MonomialOrder order);

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exponents_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exponents);

  static Monomial variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return exponents_.size(); }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t operator[](std::size_t i) const { return exponents_[i]; }
  std::span<const std::uint32_t> exponents() const { return exponents_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;

  double evaluate(std::span<const double> point) const;
  Rational evaluate(std::span<const Rational> point) const;

  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Storage order only (lexicographic on exponent vectors); use
  /// compare_monomials for term orders.
  friend auto operator<=>(const Monomial& a, const Monomial& b) {
    return a.exponents_ <=> b.exponents_;
  }

 private:
  std::vector<std::uint32_t> exponents_;
  std::uint32_t degree_ = 0;
};

/// Total order refining total degree. Throws std::invalid_argument when the
/// variable counts differ.
std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b,
                                       MonomialOrder order = MonomialOrder::GrevLex);

/// All monomials in `nvars` variables of exactly `degree`, largest first.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t degree,
                                          MonomialOrder order);

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial term(const Monomial& m, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const;
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial pow(unsigned exponent) const;

  /// Largest monomial of the support under `order`. Throws on zero.
  const Monomial& leading_monomial(MonomialOrder order = MonomialOrder::GrevLex) const;

  double evaluate(std::span<const double> point) const;
  Rational evaluate(std::span<const Rational> point) const;

  /// Text form `c*x1^a*x2^b + ...`, terms in decreasing grevlex order.
  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void check_nvars(std::size_t other) const;

  std::size_t nvars_ = 0;
  TermMap terms_;
};

/// Parses the text form produced by Polynomial::to_string. Variables are
/// named x1, x2, ...; when nvars is 0 it is inferred from the largest index.
Polynomial parse_polynomial(std::string_view text, std::size_t nvars = 0);

struct Reducer {
  Polynomial poly;
  Monomial lead;
  Rational lead_coefficient;
};

/// Polynomials with marked leading monomials. Normal forms are only defined
/// for confluent sets; a single polynomial is always confluent.
class ReducerSet {
 public:
  explicit ReducerSet(const Polynomial& generator,
                      MonomialOrder order = MonomialOrder::GrevLex);
  ReducerSet(const std::vector<Polynomial>& generators, MonomialOrder order, bool confluent);

  const std::vector<Reducer>& reducers() const { return reducers_; }
  MonomialOrder order() const { return order_; }
  bool confluent() const { return confluent_; }
  std::size_t nvars() const { return nvars_; }

  /// True when no marked leading monomial divides m.
  bool is_standard(const Monomial& m) const;

 private:
  std::vector<Reducer> reducers_;
  MonomialOrder order_;
  bool confluent_;
  std::size_t nvars_ = 0;
};

/// Fully reduced representative of f modulo the ideal generated by G.
Polynomial normal_form(const Polynomial& f, const ReducerSet& reducers);

}  // namespace theta
