// Exact arithmetic substrate: arbitrary-precision naturals and rationals,
// small number-theoretic helpers, and the p-adic split r = p^m * k.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace liedim {

/// Arbitrary-precision integer. Used for dimensions, so values are
/// non-negative unless a signed intermediate is explicitly needed.
using Natural = mpz_class;
using Integer = mpz_class;
/// Always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

/// A precondition on an input value was violated.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An identity that the mathematics guarantees did not hold. Signals a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A work budget was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int mobius(std::uint64_t d);
std::vector<std::uint64_t> divisors(std::uint64_t r);
bool is_prime(std::uint64_t p);

Natural factorial(std::uint64_t r);
Natural power(const Natural& base, std::uint64_t exponent);
Natural power_u(std::uint64_t base, std::uint64_t exponent);

/// a - b, throwing DomainError if the result would be negative.
Natural checked_sub(const Natural& a, const Natural& b);

/// Exact quotient a / b; throws InvariantViolation if b does not divide a.
Integer exact_div(const Integer& a, const Integer& b, const char* what);

Rational make_rational(const Integer& num, const Integer& den);
Rational rational_power(const Rational& base, std::uint64_t exponent);

/// sqrt(square) <= x, for square >= 0, decided without leaving Q.
bool sqrt_le(const Rational& square, const Rational& x);
/// x <= sqrt(square).
bool le_sqrt(const Rational& x, const Rational& square);

/// sqrt(square) < x.
bool sqrt_lt(const Rational& square, const Rational& x);

/// The value rational - sqrt(root_square), root_square >= 0. Keeps bounds
/// with an odd-exponent n^{q/2} term exact.
struct SqrtDifference {
  Rational rational;
  Rational root_square;

  /// value <= x
  bool le(const Rational& x) const { return le_sqrt(rational - x, root_square); }
  /// 1 - value < eps
  bool deficit_lt(const Rational& eps) const { return sqrt_lt(root_square, eps - (1 - rational)); }
  /// "a/b" when the root is rational, otherwise "a/b - sqrt(c/d)".
  std::string to_string() const;
};

struct PAdicSplit {
  std::uint64_t p = 2;
  std::uint64_t m = 0;
  std::uint64_t k = 1;

  std::uint64_t r() const;
  bool is_prime_power() const { return k == 1 && m > 0; }
  friend bool operator==(const PAdicSplit&, const PAdicSplit&) = default;
};

PAdicSplit p_adic_split(std::uint64_t r, std::uint64_t p);

/// p^e as a machine integer; throws DomainError on overflow.
std::uint64_t ipow(std::uint64_t base, std::uint64_t exponent);

std::string to_string(const Rational& q);

}  // namespace liedim
