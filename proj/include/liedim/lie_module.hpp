// Dimensions for the Lie module Lie(r) of the symmetric group and its
// projective submodule C(r), obtained by applying the Schur functor to the
// B^r(E_n) summands. c_r = dim C(r) / (r-1)! obeys
//
//   c_{p^m k} = 1 - sum_{i=1}^{m} a'_i (c_{p^{m-i}k})^{p^i},
//   a'_i = (p^{m-i} k)^{-(p^i - 1)},
//
// equivalently the factorial form
//
//   sum_{i=0}^{m} p^{m-i} (p^m k)! / (p^{m-i}k)^{p^i} * c_{p^{m-i}k}^{p^i} = (p^m k)! / k.
//
// Conventions: c_k = 1 for p not dividing k, c_{p^m} = 0 for m >= 1.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "liedim/arith.hpp"

namespace liedim {

Natural dim_lie(std::uint64_t r);

Rational coeff_a_prime(std::uint64_t p, std::uint64_t m, std::uint64_t k, std::uint64_t i);

struct APrimeRatioWitness {
  Rational lhs;  // a'_i / a'_{i-s}
  Rational rhs;  // p^{-s} (p^s / (p^{m-i}k)^{p^s-1})^{p^{i-s}}
  bool holds = false;
};

APrimeRatioWitness check_a_prime_ratio_identity(std::uint64_t p, std::uint64_t m, std::uint64_t k,
                                                std::uint64_t i, std::uint64_t s);

/// 1 - (m-1) a'_1 - a'_m. Follows from the recurrence with c <= 1 and
/// a'_i <= a'_{i-1} for 2 <= i <= m-1; equality at m = 1.
Rational lower_bound_c(std::uint64_t p, std::uint64_t m, std::uint64_t k);

/// dim of the omega-weight space of L^k(E_n^{(x)q}): (qk)!/k.
Natural weight_space_dim_formula(std::uint64_t q, std::uint64_t k);
/// Number of k-element sets of q-tuples partitioning {1..qk}: (qk)!/k!.
Natural phi_count(std::uint64_t q, std::uint64_t k);
/// Dimension of each block W_phi: (k-1)!.
Natural w_phi_dim(std::uint64_t k);

struct CRatioReport {
  std::uint64_t r = 0;
  PAdicSplit split;
  Rational c;
  Natural dim_c;
  Natural dim_lie;
  std::optional<Rational> lower_bound;
  std::vector<Rational> a_prime_coeffs;
};

struct CIdentityWitness {
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

/// Same threading contract as LiePowerContext.
class LieModuleContext {
 public:
  explicit LieModuleContext(std::uint64_t p);

  std::uint64_t p() const { return p_; }

  void populate(std::uint64_t max_r);
  /// Via the subtractive recurrence (no factorials).
  const Rational& ratio_c(std::uint64_t r);
  /// Via the factorial form, solved for the i = 0 term. Independent memo.
  const Rational& ratio_c_factorial_form(std::uint64_t r);
  Natural dim_c(std::uint64_t r);
  CIdentityWitness check_c_recurrence_identity(std::uint64_t m, std::uint64_t k);
  CRatioReport report(std::uint64_t r);

 private:
  std::uint64_t p_;
  std::map<std::uint64_t, Rational> memo_;
  std::map<std::uint64_t, Rational> factorial_memo_;
};

}  // namespace liedim
