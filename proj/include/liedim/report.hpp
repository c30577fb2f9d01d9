// Convergence tables for b_r and c_r, rendered as CSV or JSON.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liedim/arith.hpp"

namespace liedim {

enum class OutputFormat { Csv, Json };

struct RunConfig {
  std::uint64_t p = 2;
  std::uint64_t n = 2;  // ignored for c tables
  std::vector<std::uint64_t> k_list;
  std::uint64_t m_max = 6;
  std::uint64_t float_bits = 128;
  OutputFormat format = OutputFormat::Csv;
  bool slow = false;

  /// Throws DomainError. `needs_n` is false for c tables.
  void validate(bool needs_n) const;
};

struct ConvergenceRow {
  std::uint64_t r = 0, p = 0, m = 0, k = 0;
  Natural dim;          // dim B^r or dim C(r)
  Natural dim_context;  // w(n, r) or (r-1)!
  Rational ratio;
  std::string ratio_float;
  std::string bound;        // exact, possibly "a - sqrt(b)"; empty if undefined
  std::string bound_float;  // empty if undefined
  Rational gap;             // 1 - ratio
  std::string gap_float;

  friend bool operator==(const ConvergenceRow& a, const ConvergenceRow& b);
};

/// Significant decimal digits shown for a binary precision.
int decimal_digits(std::uint64_t float_bits);
/// Round-to-nearest-even decimal rendering via an MPFR float of float_bits.
std::string render_float(const Rational& q, std::uint64_t float_bits);
std::string render_float(const SqrtDifference& v, std::uint64_t float_bits);

/// Rows for r = p^m k, m = 0..m_max, k in k_list, sorted by r.
std::vector<ConvergenceRow> b_table(const RunConfig& cfg);
std::vector<ConvergenceRow> c_table(const RunConfig& cfg);

std::string to_csv(const std::vector<ConvergenceRow>& rows);
std::string to_json(const std::vector<ConvergenceRow>& rows);
std::vector<ConvergenceRow> rows_from_json(const std::string& text);

}  // namespace liedim
