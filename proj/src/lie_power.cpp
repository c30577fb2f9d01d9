#include "liedim/lie_power.hpp"

#include <string>

#include "liedim/witt.hpp"

namespace liedim {

SqrtDifference LowerBoundB::bound() const {
  return {Rational(1) - middle_term - last_term, first_term_squared};
}

LiePowerContext::LiePowerContext(std::uint64_t p, Natural n) : p_(p), n_(std::move(n)) {
  if (!is_prime(p_)) throw DomainError("p must be prime");
  if (n_ < 2) throw DomainError("n = dim V must be >= 2");
}

void LiePowerContext::populate(std::uint64_t max_r) {
  for (std::uint64_t r = 1; r <= max_r; ++r) dim_b(r);
}

const Natural& LiePowerContext::witt(std::uint64_t r) {
  auto it = witt_memo_.find(r);
  if (it != witt_memo_.end()) return it->second;
  return witt_memo_.emplace(r, witt_dim(n_, r)).first->second;
}

const Natural& LiePowerContext::dim_b(std::uint64_t r) {
  if (r == 0) throw DomainError("r must be >= 1");
  auto it = dim_b_memo_.find(r);
  if (it != dim_b_memo_.end()) return it->second;

  const PAdicSplit s = p_adic_split(r, p_);
  Natural value;
  if (s.m == 0) {
    value = witt(r);
  } else if (s.k == 1) {
    value = 0;
  } else {
    Integer numerator = witt_dim(power(n_, ipow(p_, s.m)), s.k);
    for (std::uint64_t i = 1; i <= s.m; ++i) {
      const std::uint64_t lower = ipow(p_, s.m - i) * s.k;
      numerator -= ipow(p_, s.m - i) * Natural(power(dim_b(lower), ipow(p_, i)));
    }
    value = exact_div(numerator, power_u(p_, s.m), "dim_b");
    if (value < 0) throw InvariantViolation("dim_b: negative dimension");
  }
  return dim_b_memo_.emplace(r, std::move(value)).first->second;
}

Rational LiePowerContext::ratio_b(std::uint64_t r) {
  const Natural& w = witt(r);
  if (w == 0) throw DomainError("ratio_b: w(n, r) = 0");
  return make_rational(dim_b(r), w);
}

void LiePowerContext::require_coprime(std::uint64_t k) const {
  if (k == 0 || k % p_ == 0) throw DomainError("k must be positive and not divisible by p");
}

Rational LiePowerContext::coeff_a(std::uint64_t m, std::uint64_t k, std::uint64_t i) {
  require_coprime(k);
  if (i > m) throw DomainError("coeff_a: index i must satisfy 0 <= i <= m");
  const Natural& top = witt(ipow(p_, m) * k);
  const Natural num = power(witt(ipow(p_, m - i) * k), ipow(p_, i));
  return make_rational(num, power_u(p_, i) * top);
}

ARatioWitness LiePowerContext::check_a_ratio_bound(std::uint64_t m, std::uint64_t k,
                                                    std::uint64_t i, std::uint64_t s) {
  require_coprime(k);
  if (!(0 < s && s <= i && i <= m)) throw DomainError("need 0 < s <= i <= m");
  if (k < 2) throw DomainError("need k >= 2");
  if (ipow(p_, m - i + s) * k < 6) throw DomainError("need p^{m-i+s} k >= 6");

  ARatioWitness out;
  out.lhs = coeff_a(m, k, i) / coeff_a(m, k, i - s);
  const Natural ps = power_u(p_, s);
  const Natural base = ipow(p_, m - i) * k;
  const Rational inner = make_rational(2 * ps, power(base, ipow(p_, s) - 1));
  out.rhs = rational_power(inner, ipow(p_, i - s)) / Rational(ps);
  out.holds = out.lhs <= out.rhs;
  return out;
}

ACorollaryWitness LiePowerContext::check_a_corollary(std::uint64_t m, std::uint64_t k) {
  require_coprime(k);
  if (m < 1 || k < 2) throw DomainError("need m >= 1 and k >= 2");
  ACorollaryWitness out;
  auto record = [&](bool ok, std::uint64_t i) {
    ++out.checks;
    if (!ok && out.holds) {
      out.holds = false;
      out.failing_index = i;
    }
  };
  for (std::uint64_t i = 2; i + 1 <= m; ++i) record(coeff_a(m, k, i) <= coeff_a(m, k, i - 1), i);
  const Natural base1 = ipow(p_, m - 1) * k;
  record(coeff_a(m, k, 1) <= make_rational(2, power(base1, p_ - 1)), 1);
  record(coeff_a(m, k, m) <= make_rational(2, power_u(k, ipow(p_, m) - 1)), m);
  return out;
}

LowerBoundB LiePowerContext::lower_bound_b(std::uint64_t m, std::uint64_t k) const {
  require_coprime(k);
  if (m < 1) throw DomainError("lower_bound_b: m must be >= 1 (m = 0 gives b_k = 1)");
  if (k < 2) throw DomainError("lower_bound_b: k must be >= 2");
  const std::uint64_t q = ipow(p_, m) * k;
  LowerBoundB out;
  out.split = {p_, m, k};
  const Natural kk = static_cast<unsigned long>(k);
  out.first_term_squared = make_rational(kk * kk, 4 * power(n_, q));
  out.middle_term = make_rational(Natural(static_cast<unsigned long>(2 * (m - 1))),
                                  power(Natural(static_cast<unsigned long>(ipow(p_, m - 1) * k)), p_ - 1));
  out.last_term = make_rational(2, power_u(k, ipow(p_, m) - 1));
  return out;
}

DimensionIdentityWitness LiePowerContext::check_dimension_identity(std::uint64_t m,
                                                                   std::uint64_t k) {
  require_coprime(k);
  DimensionIdentityWitness out;
  out.lhs = 0;
  for (std::uint64_t i = 0; i <= m; ++i)
    out.lhs += ipow(p_, m - i) * Natural(power(dim_b(ipow(p_, m - i) * k), ipow(p_, i)));
  out.rhs = witt_dim(power(n_, ipow(p_, m)), k);
  out.holds = out.lhs == out.rhs;
  return out;
}

BRatioReport LiePowerContext::report(std::uint64_t r) {
  BRatioReport out;
  out.r = r;
  out.split = p_adic_split(r, p_);
  out.dim_b = dim_b(r);
  out.dim_lie_power = witt(r);
  out.b = ratio_b(r);
  if (out.split.m >= 1 && out.split.k >= 2)
    out.lower_bound = lower_bound_b(out.split.m, out.split.k).bound();
  for (std::uint64_t i = 0; i <= out.split.m; ++i)
      out.a_coeffs.push_back(coeff_a(out.split.m, out.split.k, i));
  return out;
}

}  // namespace liedim
