#include "liedim/lie_module.hpp"

namespace liedim {

namespace {

void require_coprime(std::uint64_t p, std::uint64_t k) {
  if (!is_prime(p)) throw DomainError("p must be prime");
  if (k == 0 || k % p == 0) throw DomainError("k must be positive and not divisible by p");
}

Natural nat(std::uint64_t v) { return Natural(static_cast<unsigned long>(v)); }

}  // namespace

Natural dim_lie(std::uint64_t r) {
  if (r == 0) throw DomainError("r must be >= 1");
  return factorial(r - 1);
}

Rational coeff_a_prime(std::uint64_t p, std::uint64_t m, std::uint64_t k, std::uint64_t i) {
  require_coprime(p, k);
  if (i > m) throw DomainError("coeff_a_prime: index i must satisfy 0 <= i <= m");
  return make_rational(1, power(nat(ipow(p, m - i) * k), ipow(p, i) - 1));
}

APrimeRatioWitness check_a_prime_ratio_identity(std::uint64_t p, std::uint64_t m, std::uint64_t k,
                                                std::uint64_t i, std::uint64_t s) {
  require_coprime(p, k);
  if (!(s <= i && i <= m)) throw DomainError("need 0 <= s <= i <= m");
  APrimeRatioWitness out;
  out.lhs = coeff_a_prime(p, m, k, i) / coeff_a_prime(p, m, k, i - s);
  const Natural ps = power_u(p, s);
  const Rational inner = make_rational(ps, power(nat(ipow(p, m - i) * k), ipow(p, s) - 1));
  out.rhs = rational_power(inner, ipow(p, i - s)) / Rational(ps);
  out.holds = out.lhs == out.rhs;
  return out;
}

Rational lower_bound_c(std::uint64_t p, std::uint64_t m, std::uint64_t k) {
  require_coprime(p, k);
  if (m < 1 || k < 2) throw DomainError("lower_bound_c: need m >= 1 and k >= 2");
  return Rational(1) - Rational(nat(m - 1)) * coeff_a_prime(p, m, k, 1) -
         coeff_a_prime(p, m, k, m);
}

Natural weight_space_dim_formula(std::uint64_t q, std::uint64_t k) {
  if (q == 0 || k == 0) throw DomainError("q and k must be >= 1");
  return exact_div(factorial(q * k), nat(k), "weight_space_dim_formula");
}

Natural phi_count(std::uint64_t q, std::uint64_t k) {
  if (q == 0 || k == 0) throw DomainError("q and k must be >= 1");
  return exact_div(factorial(q * k), factorial(k), "phi_count");
}

Natural w_phi_dim(std::uint64_t k) {
  if (k == 0) throw DomainError("k must be >= 1");
  return factorial(k - 1);
}

LieModuleContext::LieModuleContext(std::uint64_t p) : p_(p) {
  if (!is_prime(p_)) throw DomainError("p must be prime");
}

void LieModuleContext::populate(std::uint64_t max_r) {
  for (std::uint64_t r = 1; r <= max_r; ++r) ratio_c(r);
}

const Rational& LieModuleContext::ratio_c(std::uint64_t r) {
  if (r == 0) throw DomainError("r must be >= 1");
  auto it = memo_.find(r);
  if (it != memo_.end()) return it->second;

  const PAdicSplit s = p_adic_split(r, p_);
  Rational value;
  if (s.m == 0) {
    value = 1;
  } else if (s.k == 1) {
    value = 0;
  } else {
    value = 1;
    for (std::uint64_t i = 1; i <= s.m; ++i) {
      const Rational lower = ratio_c(ipow(p_, s.m - i) * s.k);
      value -= coeff_a_prime(p_, s.m, s.k, i) * rational_power(lower, ipow(p_, i));
    }
  }
  if (value < 0 || value > 1) throw InvariantViolation("ratio_c out of [0, 1]");
  return memo_.emplace(r, std::move(value)).first->second;
}

const Rational& LieModuleContext::ratio_c_factorial_form(std::uint64_t r) {
  if (r == 0) throw DomainError("r must be >= 1");
  auto it = factorial_memo_.find(r);
  if (it != factorial_memo_.end()) return it->second;

  const PAdicSplit s = p_adic_split(r, p_);
  Rational value;
  if (s.m == 0) {
    value = 1;
  } else if (s.k == 1) {
    value = 0;
  } else {
    const Natural fact = factorial(r);
    Rational rest = make_rational(fact, nat(s.k));
    for (std::uint64_t i = 1; i <= s.m; ++i) {
      const std::uint64_t lower = ipow(p_, s.m - i) * s.k;
      const Rational coeff = make_rational(ipow(p_, s.m - i) * fact, power(nat(lower), ipow(p_, i)));
      rest -= coeff * rational_power(ratio_c_factorial_form(lower), ipow(p_, i));
    }
    value = rest / make_rational(power_u(p_, s.m) * fact, nat(r));
  }
  return factorial_memo_.emplace(r, std::move(value)).first->second;
}

Natural LieModuleContext::dim_c(std::uint64_t r) {
  const Rational product = ratio_c(r) * Rational(dim_lie(r));
  if (product.get_den() != 1) throw InvariantViolation("dim_c: c_r (r-1)! is not an integer");
  return product.get_num();
}

CIdentityWitness LieModuleContext::check_c_recurrence_identity(std::uint64_t m, std::uint64_t k) {
  require_coprime(p_, k);
  const std::uint64_t r = ipow(p_, m) * k;
  const Natural fact = factorial(r);
  CIdentityWitness out;
  out.lhs = 0;
  for (std::uint64_t i = 0; i <= m; ++i) {
    const std::uint64_t lower = ipow(p_, m - i) * k;
    const Rational coeff = make_rational(ipow(p_, m - i) * fact, power(nat(lower), ipow(p_, i)));
    out.lhs += coeff * rational_power(ratio_c(lower), ipow(p_, i));
  }
  out.rhs = make_rational(fact, nat(k));
  out.holds = out.lhs == out.rhs;
  return out;
}

CRatioReport LieModuleContext::report(std::uint64_t r) {
  CRatioReport out;
  out.r = r;
  out.split = p_adic_split(r, p_);
  out.c = ratio_c(r);
  out.dim_c = dim_c(r);
  out.dim_lie = dim_lie(r);
  if (out.split.m >= 1 && out.split.k >= 2)
    out.lower_bound = lower_bound_c(p_, out.split.m, out.split.k);
  for (std::uint64_t i = 0; i <= out.split.m; ++i)
    out.a_prime_coeffs.push_back(coeff_a_prime(p_, out.split.m, out.split.k, i));
  return out;
}

}  // namespace liedim
