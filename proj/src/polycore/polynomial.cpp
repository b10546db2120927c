#include "theta/polycore.hpp"

#include <algorithm>
#include <cctype>

namespace theta {

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  return term(Monomial::variable(nvars, index), 1);
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p(m.nvars());
  p.add_term(m, c);
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
  return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::check_nvars(std::size_t other) const {
  if (other != nvars_) throw std::invalid_argument("polynomial variable-count mismatch");
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  check_nvars(m.nvars());
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_nvars(other.nvars_);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_nvars(other.nvars_);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_nvars(b.nvars_);
  Polynomial out(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

const Monomial& Polynomial::leading_monomial(MonomialOrder order) const {
  if (terms_.empty()) throw std::invalid_argument("zero polynomial has no leading monomial");
  const Monomial* best = &terms_.begin()->first;
  for (const auto& [m, c] : terms_) {
    if (compare_monomials(m, *best, order) == std::strong_ordering::greater) best = &m;
  }
  return *best;
}

double Polynomial::evaluate(std::span<const double> point) const {
  double v = 0.0;
  for (const auto& [m, c] : terms_) v += c.get_d() * m.evaluate(point);
  return v;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  Rational v = 0;
  for (const auto& [m, c] : terms_) v += c * m.evaluate(point);
  return v;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Monomial, Rational>*> sorted;
  sorted.reserve(terms_.size());
  for (const auto& t : terms_) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) {
    return compare_monomials(a->first, b->first) == std::strong_ordering::greater;
  });
  std::string out;
  bool first = true;
  for (const auto* t : sorted) {
    const Monomial& m = t->first;
    Rational c = t->second;
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    Rational a = abs(c);
    if (m.is_one()) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += m.to_string();
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  struct RawTerm {
    Rational coeff;
    std::vector<std::pair<std::size_t, std::uint32_t>> powers;
  };

  std::vector<RawTerm> parse() {
    std::vector<RawTerm> out;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      RawTerm t = parse_term();
      if (negative) t.coeff = -t.coeff;
      out.push_back(std::move(t));
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
    }
    return out;
  }

 private:
  RawTerm parse_term() {
    RawTerm t{Rational(1), {}};
    while (true) {
      skip_ws();
      if (at_end()) fail("expected a factor");
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        mpz_class num(read_digits(), 10);
        mpz_class den = 1;
        skip_ws();
        if (!at_end() && peek() == '/') {
          ++pos_;
          skip_ws();
          den = mpz_class(read_digits(), 10);
          if (den == 0) fail("zero denominator");
        }
        Rational q(num, den);
        q.canonicalize();
        t.coeff *= q;
      } else if (c == 'x') {
        ++pos_;
        std::string digits = read_digits();
        std::size_t index = std::stoul(digits);
        if (index == 0) fail("variables are numbered from x1");
        std::uint32_t e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          e = static_cast<std::uint32_t>(std::stoul(read_digits()));
        }
        t.powers.emplace_back(index - 1, e);
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      return t;
    }
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t nvars) {
  auto raw = Parser(text).parse();
  std::size_t needed = 0;
  for (const auto& t : raw) {
    for (const auto& [v, e] : t.powers) needed = std::max(needed, v + 1);
  }
  if (nvars == 0) nvars = needed;
  if (needed > nvars) {
    throw std::invalid_argument("polynomial uses x" + std::to_string(needed) + " but only " +
                                std::to_string(nvars) + " variables are declared");
  }
  Polynomial p(nvars);
  for (const auto& t : raw) {
    std::vector<std::uint32_t> e(nvars, 0);
    for (const auto& [v, k] : t.powers) e[v] += k;
    p.add_term(Monomial(std::move(e)), t.coeff);
  }
  return p;
}

}  // namespace theta
