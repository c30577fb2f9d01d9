// Dimensions of the tensor-summand part B^r(V) of the Lie power L^r(V) over a
// field of characteristic p, where V is represented only by n = dim V.
//
// For r = p^m k with p not dividing k the dimensions satisfy
//
//   sum_{i=0}^{m} p^{m-i} (dim B^{p^{m-i}k})^{p^i} = w(n^{p^m}, k)
//
// which determines dim B^{p^m k} from the lower-m terms. Degrees that are
// p-powers (k = 1, m > 0) have B = 0, and dim B^k = w(n, k) when m = 0.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "liedim/arith.hpp"

namespace liedim {

struct BRatioReport {
  std::uint64_t r = 0;
  PAdicSplit split;
  Natural dim_b;
  Natural dim_lie_power;  // w(n, r)
  Rational b;
  std::optional<SqrtDifference> lower_bound;  // only for m >= 1, k >= 2
  std::vector<Rational> a_coeffs;             // a_0 .. a_m
};

/// Both sides of a_i / a_{i-s} <= p^{-s} (2p^s / (p^{m-i}k)^{p^s-1})^{p^{i-s}}.
struct ARatioWitness {
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

/// Instances of the consequences a_i/a_{i-1} <= 1 (2 <= i <= m-1),
/// a_1 <= 2/(p^{m-1}k)^{p-1} and a_m <= 2/k^{p^m-1}.
struct ACorollaryWitness {
  std::size_t checks = 0;
  bool holds = true;
  std::optional<std::uint64_t> failing_index;
};

struct DimensionIdentityWitness {
  Natural lhs;  // sum_i p^{m-i} (dim B^{p^{m-i}k})^{p^i}
  Natural rhs;  // w(n^{p^m}, k)
  bool holds = false;
};

/// The three subtracted terms of
///   b_{p^m k} >= 1 - k/(2 n^{p^m k/2}) - 2(m-1)/(p^{m-1}k)^{p-1} - 2/k^{p^m-1}.
/// The first is kept squared so odd p^m k stays exact.
struct LowerBoundB {
  PAdicSplit split;
  Rational first_term_squared;
  Rational middle_term;
  Rational last_term;

  SqrtDifference bound() const;
};

/// Memoised dim B^r for one (p, n). Lazy calls mutate the memo, so a context
/// is single-writer until populate() has covered every degree of interest;
/// afterwards the const accessors are safe to share.
class LiePowerContext {
 public:
  LiePowerContext(std::uint64_t p, Natural n);

  std::uint64_t p() const { return p_; }
  const Natural& n() const { return n_; }

  void populate(std::uint64_t max_r);
  const Natural& dim_b(std::uint64_t r);
  const Natural& witt(std::uint64_t r);

  Rational ratio_b(std::uint64_t r);
  Rational coeff_a(std::uint64_t m, std::uint64_t k, std::uint64_t i);
  ARatioWitness check_a_ratio_bound(std::uint64_t m, std::uint64_t k, std::uint64_t i,
                                    std::uint64_t s);
  ACorollaryWitness check_a_corollary(std::uint64_t m, std::uint64_t k);
  LowerBoundB lower_bound_b(std::uint64_t m, std::uint64_t k) const;
  DimensionIdentityWitness check_dimension_identity(std::uint64_t m, std::uint64_t k);
  BRatioReport report(std::uint64_t r);

 private:
  void require_coprime(std::uint64_t k) const;

  std::uint64_t p_;
  Natural n_;
  std::map<std::uint64_t, Natural> dim_b_memo_;
  std::map<std::uint64_t, Natural> witt_memo_;
};

}  // namespace liedim
