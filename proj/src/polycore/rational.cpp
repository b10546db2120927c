#include "theta/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace theta {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  std::string_view num = trim(s.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational limit_denominator(double x, unsigned long max_denominator) {
  if (max_denominator == 0) throw std::invalid_argument("max_denominator must be positive");
  Rational exact(x);  // exact binary value
  if (exact.get_den() <= max_denominator) return exact;

  // Continued-fraction convergents, then the best semiconvergent.
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  mpz_class n = exact.get_num(), d = exact.get_den();
  const mpz_class bound = max_denominator;
  while (true) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    mpz_class q2 = q0 + a * q1;
    if (q2 > bound) break;
    mpz_class p2 = p0 + a * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    mpz_class rem = n - a * d;
    n = d;
    d = rem;
    if (d == 0) break;
  }
  mpz_class k = (bound - q0) / q1;
  Rational b1(p0 + k * p1, q0 + k * q1);
  Rational b2(p1, q1);
  b1.canonicalize();
  b2.canonicalize();
  Rational e1 = abs(b1 - exact);
  Rational e2 = abs(b2 - exact);
  return e2 <= e1 ? b2 : b1;
}

}  // namespace theta
