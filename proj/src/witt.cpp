#include "liedim/witt.hpp"

namespace liedim {

namespace {

void validate(const WittQuery& q) {
  if (q.n < 1) throw DomainError("n must be >= 1");
  if (q.r < 1) throw DomainError("r must be >= 1");
}

Integer signed_divisor_sum(const WittQuery& q) {
  Integer sum = 0;
  for (std::uint64_t d : divisors(q.r)) {
    int mu = mobius(d);
    if (mu == 0) continue;
    Natural term = power(q.n, q.r / d);
    if (mu > 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

}  // namespace

Natural witt_dim(const WittQuery& q) {
  validate(q);
  return exact_div(signed_divisor_sum(q), Integer(static_cast<unsigned long>(q.r)), "witt_dim");
}

Natural aperiodic_word_count(const WittQuery& q) {
  validate(q);
  return signed_divisor_sum(q);
}

WittBoundWitness check_witt_bounds(const WittQuery& q) {
  validate(q);
  WittBoundWitness out;
  const Natural r = static_cast<unsigned long>(q.r);
  out.w = witt_dim(q);
  out.upper_lhs = r * out.w;
  out.upper_rhs = power(q.n, q.r);
  out.upper_holds = out.upper_lhs <= out.upper_rhs;

  out.lower_lhs = 2 * out.upper_rhs - 2 * out.upper_lhs;
  out.lower_lhs_squared = out.lower_lhs * out.lower_lhs;
  out.lower_rhs_squared = r * r * out.upper_rhs;
  out.lower_holds = out.lower_lhs <= 0 || out.lower_lhs_squared <= out.lower_rhs_squared;
  return out;
}

}  // namespace liedim
