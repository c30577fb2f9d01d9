// Witt's dimension formula w(n, r) for homogeneous components of a free Lie
// algebra, and the two-sided estimate n^r/r - n^{r/2}/2 <= w(n, r) <= n^r/r.
#pragma once

#include <cstdint>

#include "liedim/arith.hpp"

namespace liedim {

struct WittQuery {
  Natural n;  // alphabet size, dim V; may be a large power like n^{p^m}
  std::uint64_t r = 1;
};

/// (1/r) * sum_{d | r} mu(d) n^{r/d}.
Natural witt_dim(const WittQuery& q);
inline Natural witt_dim(const Natural& n, std::uint64_t r) { return witt_dim({n, r}); }

/// Number of length-r words over n letters that are not a proper power,
/// i.e. r * w(n, r).
Natural aperiodic_word_count(const WittQuery& q);

/// Both bounds checked with denominators cleared:
///   upper:  r*w <= n^r
///   lower:  2n^r - 2r*w <= r * n^{r/2}, compared squared when the left side
///           is positive, (2n^r - 2r*w)^2 <= r^2 * n^r.
struct WittBoundWitness {
  Natural w;
  Natural upper_lhs;  // r*w
  Natural upper_rhs;  // n^r
  Integer lower_lhs;  // 2n^r - 2r*w
  Natural lower_lhs_squared;
  Natural lower_rhs_squared;  // r^2 n^r
  bool upper_holds = false;
  bool lower_holds = false;

  bool holds() const { return upper_holds && lower_holds; }
};

WittBoundWitness check_witt_bounds(const WittQuery& q);

}  // namespace liedim
