#include "liedim/arith.hpp"

#include <limits>

namespace liedim {

int mobius(std::uint64_t d) {
  if (d == 0) throw DomainError("mobius: argument must be >= 1");
  int sign = 1;
  for (std::uint64_t f = 2; f * f <= d; ++f) {
    if (d % f != 0) continue;
    d /= f;
    if (d % f == 0) return 0;
    sign = -sign;
  }
  if (d > 1) sign = -sign;
  return sign;
}

std::vector<std::uint64_t> divisors(std::uint64_t r) {
  if (r == 0) throw DomainError("divisors: argument must be >= 1");
  std::vector<std::uint64_t> low, high;
  for (std::uint64_t d = 1; d * d <= r; ++d) {
    if (r % d != 0) continue;
    low.push_back(d);
    if (d != r / d) high.push_back(r / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t f = 2; f * f <= p; ++f)
    if (p % f == 0) return false;
  return true;
}

Natural factorial(std::uint64_t r) {
  Natural out;
  mpz_fac_ui(out.get_mpz_t(), r);
  return out;
}

Natural power(const Natural& base, std::uint64_t exponent) {
  if (exponent > std::numeric_limits<unsigned long>::max())
    throw DomainError("power: exponent too large");
  Natural out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
  return out;
}

Natural power_u(std::uint64_t base, std::uint64_t exponent) {
  Natural out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

Natural checked_sub(const Natural& a, const Natural& b) {
  if (a < b) throw DomainError("checked_sub: result would be negative");
  return a - b;
}

Integer exact_div(const Integer& a, const Integer& b, const char* what) {
  if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw InvariantViolation(std::string("inexact division in ") + what);
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rational_power(const Rational& base, std::uint64_t exponent) {
  Rational out;
  Integer num = power(base.get_num(), exponent);
  Integer den = power(base.get_den(), exponent);
  mpz_swap(out.get_num_mpz_t(), num.get_mpz_t());
  mpz_swap(out.get_den_mpz_t(), den.get_mpz_t());
  // gcd(a^e, b^e) = 1 when gcd(a, b) = 1, so no canonicalisation needed.
  return out;
}

bool sqrt_le(const Rational& square, const Rational& x) {
  if (x < 0) return false;
  return square <= x * x;
}

bool le_sqrt(const Rational& x, const Rational& square) {
  if (x <= 0) return true;
  return x * x <= square;
}

bool sqrt_lt(const Rational& square, const Rational& x) {
  if (x <= 0) return false;
  return square < x * x;
}

namespace {

bool perfect_square(const Rational& q, Rational& root) {
  if (q < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return false;
  Integer num, den;
  mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
  root = make_rational(num, den);
  return true;
}

}  // namespace

std::string SqrtDifference::to_string() const {
  Rational root;
  if (perfect_square(root_square, root)) return Rational(rational - root).get_str();
  return rational.get_str() + " - sqrt(" + root_square.get_str() + ")";
}

std::uint64_t PAdicSplit::r() const { return ipow(p, m) * k; }

PAdicSplit p_adic_split(std::uint64_t r, std::uint64_t p) {
  if (r == 0) throw DomainError("p_adic_split: r must be >= 1");
  if (!is_prime(p)) throw DomainError("p_adic_split: p must be prime");
  PAdicSplit s{p, 0, r};
  while (s.k % p == 0) {
    s.k /= p;
    ++s.m;
  }
  return s;
}

std::uint64_t ipow(std::uint64_t base, std::uint64_t exponent) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base)
      throw DomainError("ipow: overflow");
    out *= base;
  }
  return out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace liedim
