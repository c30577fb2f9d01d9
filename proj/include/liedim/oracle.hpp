// Brute-force free Lie algebra oracle. Elements of V^{(x)r} are stored in
// tensor coordinates, index e_{i_1} (x) ... (x) e_{i_r} encoded as the base-n
// number i_1 i_2 ... i_r (leftmost factor most significant, so numeric order
// is lexicographic order). Ranks are computed by sparse elimination over Q
// (integer rows kept primitive) or F_p.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "liedim/arith.hpp"

namespace liedim::oracle {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;
using Coefficient = std::int64_t;

/// modulus 0 is Q, otherwise F_modulus.
struct Field {
  std::uint32_t modulus = 0;

  static Field rationals() { return {0}; }
  static Field prime(std::uint32_t p);
  /// "q", "f2", "f3", "f5", ...
  static Field parse(const std::string& name);
  std::string name() const;
  friend bool operator==(const Field&, const Field&) = default;
};

struct Budget {
  std::uint64_t max_code_space = 10'000'000;  // alphabet^degree
  std::uint64_t max_terms = 100'000;          // spanning vectors * 2^{len-1}

  /// Defaults, multiplied by 1000 under slow, then LIEDIM_BUDGET (if set)
  /// replaces max_terms.
  static Budget from_environment(bool slow);
};

class SparseTensorVector {
 public:
  using Entry = std::pair<std::uint64_t, Coefficient>;

  SparseTensorVector(std::uint32_t alphabet, std::uint32_t degree);
  static SparseTensorVector unit(std::uint32_t alphabet, const Word& index);

  std::uint32_t alphabet() const { return alphabet_; }
  std::uint32_t degree() const { return degree_; }
  /// Sorted by index, no zero coefficients.
  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  Coefficient at(const Word& index) const;

  Word decode(std::uint64_t code) const;
  std::uint64_t encode(const Word& index) const;

  friend SparseTensorVector tensor(const SparseTensorVector& a, const SparseTensorVector& b);
  friend SparseTensorVector operator+(const SparseTensorVector& a, const SparseTensorVector& b);
  friend SparseTensorVector operator-(const SparseTensorVector& a);
  friend bool operator==(const SparseTensorVector&, const SparseTensorVector&) = default;

 private:
  std::uint32_t alphabet_;
  std::uint32_t degree_;
  std::vector<Entry> entries_;
};

/// [a, b] = a (x) b - b (x) a.
SparseTensorVector bracket(const SparseTensorVector& a, const SparseTensorVector& b);
/// [x_1, ..., x_l] = [[x_1, ..., x_{l-1}], x_l].
SparseTensorVector left_normed_bracket(std::span<const SparseTensorVector> factors);
SparseTensorVector left_normed_expand(const Word& word, std::uint32_t alphabet);

bool is_lyndon(const Word& w);
/// All Lyndon words of exactly length r over n letters, lexicographic.
std::vector<Word> lyndon_words(std::uint32_t n, std::uint32_t r);
/// w = u v with v the longest proper Lyndon suffix. Requires |w| >= 2.
std::pair<Word, Word> standard_factorization(const Word& w);
/// [std(u), std(v)] recursively; a single letter is its unit vector.
SparseTensorVector expand_standard_bracketing(const Word& w, std::uint32_t alphabet);

std::uint64_t aperiodic_count_bruteforce(std::uint32_t n, std::uint32_t r,
                                         const Budget& budget = {});

std::size_t rank_over_field(std::span<const SparseTensorVector> vectors, Field field);

/// Rank of all n^r left-normed words.
std::size_t lie_power_rank(std::uint32_t n, std::uint32_t r, Field field,
                           const Budget& budget = {});
/// Rank of the standard bracketings of the Lyndon words only.
std::size_t lyndon_basis_rank(std::uint32_t n, std::uint32_t r, Field field,
                              const Budget& budget = {});
/// Rank of the r! multilinear left-normed brackets [e_{1pi}, ..., e_{rpi}].
std::size_t lie_module_rank(std::uint32_t r, Field field, const Budget& budget = {});
/// Rank of the omega_{qk} weight space of L^k(E^{(x)q}) spanned by
/// [e_{theta_1}, ..., e_{theta_k}] with the theta_j jointly a permutation of
/// {0, ..., qk-1}.
std::size_t weight_space_rank(std::uint32_t q, std::uint32_t k, Field field,
                              const Budget& budget = {});

struct WeightResult {
  enum class Kind { Homogeneous, Inhomogeneous, Zero };
  Kind kind = Kind::Zero;
  std::vector<std::uint32_t> alpha;  // letter multiplicities, size = alphabet
};

WeightResult weight_of(const SparseTensorVector& v);

/// One "index:coefficient" line per entry, sorted by index.
std::string to_golden_text(const SparseTensorVector& v);
std::string format_index(const Word& index, std::uint32_t alphabet);
Word parse_word(const std::string& text);

}  // namespace liedim::oracle
