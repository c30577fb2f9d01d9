#include "liedim/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <unordered_map>

namespace liedim::oracle {

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw DomainError("field characteristic must be prime");
  return {p};
}

Field Field::parse(const std::string& name) {
  if (name == "q" || name == "Q") return rationals();
  if (name.size() >= 2 && (name[0] == 'f' || name[0] == 'F')) {
    const std::string digits = name.substr(1);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit) &&
        digits.size() < 10)
      return prime(static_cast<std::uint32_t>(std::stoul(digits)));
  }
  throw DomainError("unknown field '" + name + "' (expected q, f2, f3, f5, ...)");
}

std::string Field::name() const { return modulus == 0 ? "q" : "f" + std::to_string(modulus); }

Budget Budget::from_environment(bool slow) {
  Budget b;
  if (slow) b.max_terms *= 1000;
  if (const char* env = std::getenv("LIEDIM_BUDGET")) {
    const std::string text(env);
    if (text.empty() || !std::all_of(text.begin(), text.end(), ::isdigit) || text.size() > 18)
      throw DomainError("LIEDIM_BUDGET must be a non-negative integer");
    b.max_terms = std::stoull(text);
  }
  return b;
}

namespace {

// alphabet^degree, or max() on overflow.
std::uint64_t code_space(std::uint64_t alphabet, std::uint64_t degree) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < degree; ++i) {
    if (alphabet != 0 && out > std::numeric_limits<std::uint64_t>::max() / alphabet)
      return std::numeric_limits<std::uint64_t>::max();
    out *= alphabet;
  }
  return out;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

void check_budget(const Budget& budget, std::uint64_t alphabet, std::uint64_t degree,
                  std::uint64_t vectors, std::uint64_t terms_per_vector, const char* what) {
  if (code_space(alphabet, degree) > budget.max_code_space)
    throw ResourceError(std::string(what) + ": tensor index space exceeds budget");
  if (saturating_mul(vectors, terms_per_vector) > budget.max_terms)
    throw ResourceError(std::string(what) +
                        ": work exceeds budget (use --slow or set LIEDIM_BUDGET)");
}

std::uint64_t factorial_u(std::uint64_t r) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 2; i <= r; ++i) out = saturating_mul(out, i);
  return out;
}

std::uint64_t pow2(std::uint64_t e) {
  return e >= 63 ? std::numeric_limits<std::uint64_t>::max() : std::uint64_t{1} << e;
}

}  // namespace

SparseTensorVector::SparseTensorVector(std::uint32_t alphabet, std::uint32_t degree)
    : alphabet_(alphabet), degree_(degree) {
  if (alphabet == 0) throw DomainError("alphabet must be non-empty");
  if (code_space(alphabet, degree) == std::numeric_limits<std::uint64_t>::max())
    throw ResourceError("tensor index does not fit in 64 bits");
}

SparseTensorVector SparseTensorVector::unit(std::uint32_t alphabet, const Word& index) {
  SparseTensorVector v(alphabet, static_cast<std::uint32_t>(index.size()));
  v.entries_.emplace_back(v.encode(index), 1);
  return v;
}

std::uint64_t SparseTensorVector::encode(const Word& index) const {
  if (index.size() != degree_) throw DomainError("index length differs from tensor degree");
  std::uint64_t code = 0;
  for (Letter l : index) {
    if (l >= alphabet_) throw DomainError("letter outside alphabet");
    code = code * alphabet_ + l;
  }
  return code;
}

Word SparseTensorVector::decode(std::uint64_t code) const {
  Word out(degree_);
  for (std::uint32_t i = degree_; i-- > 0;) {
    out[i] = static_cast<Letter>(code % alphabet_);
    code /= alphabet_;
  }
  return out;
}

Coefficient SparseTensorVector::at(const Word& index) const {
  const std::uint64_t code = encode(index);
  auto it = std::lower_bound(entries_.begin(), entries_.end(), code,
                             [](const Entry& e, std::uint64_t c) { return e.first < c; });
  return it != entries_.end() && it->first == code ? it->second : 0;
}

SparseTensorVector tensor(const SparseTensorVector& a, const SparseTensorVector& b) {
  if (a.alphabet_ != b.alphabet_) throw DomainError("tensor: alphabets differ");
  SparseTensorVector out(a.alphabet_, a.degree_ + b.degree_);
  const std::uint64_t shift = code_space(b.alphabet_, b.degree_);
  out.entries_.reserve(a.entries_.size() * b.entries_.size());
  // Concatenation preserves lexicographic order, so the result is sorted.
  for (const auto& [ca, xa] : a.entries_)
    for (const auto& [cb, xb] : b.entries_) out.entries_.emplace_back(ca * shift + cb, xa * xb);
  return out;
}

SparseTensorVector operator+(const SparseTensorVector& a, const SparseTensorVector& b) {
  if (a.alphabet_ != b.alphabet_ || a.degree_ != b.degree_)
    throw DomainError("sum of tensors of different shape");
  SparseTensorVector out(a.alphabet_, a.degree_);
  auto i = a.entries_.begin();
  auto j = b.entries_.begin();
  while (i != a.entries_.end() || j != b.entries_.end()) {
    if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first)) {
      out.entries_.push_back(*i++);
    } else if (i == a.entries_.end() || j->first < i->first) {
      out.entries_.push_back(*j++);
    } else {
      const Coefficient s = i->second + j->second;
      if (s != 0) out.entries_.emplace_back(i->first, s);
      ++i;
      ++j;
    }
  }
  return out;
}

SparseTensorVector operator-(const SparseTensorVector& a) {
  SparseTensorVector out = a;
  for (auto& e : out.entries_) e.second = -e.second;
  return out;
}

SparseTensorVector bracket(const SparseTensorVector& a, const SparseTensorVector& b) {
  return tensor(a, b) + -tensor(b, a);
}

SparseTensorVector left_normed_bracket(std::span<const SparseTensorVector> factors) {
  if (factors.empty()) throw DomainError("bracket of no factors");
  SparseTensorVector acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = bracket(acc, factors[i]);
  return acc;
}

SparseTensorVector left_normed_expand(const Word& word, std::uint32_t alphabet) {
  if (word.empty()) throw DomainError("left_normed_expand: empty word");
  SparseTensorVector acc = SparseTensorVector::unit(alphabet, {word.front()});
  for (std::size_t i = 1; i < word.size(); ++i)
    acc = bracket(acc, SparseTensorVector::unit(alphabet, {word[i]}));
  return acc;
}

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t shift = 1; shift < w.size(); ++shift) {
    // compare w with its rotation by `shift`
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Letter a = w[i];
      const Letter b = w[(i + shift) % w.size()];
      if (a < b) break;
      if (a > b || i + 1 == w.size()) return false;
    }
  }
  return true;
}

std::vector<Word> lyndon_words(std::uint32_t n, std::uint32_t r) {
  if (n == 0 || r == 0) throw DomainError("lyndon_words: need n >= 1 and r >= 1");
  std::vector<Word> out;
  // Duval's generation of all Lyndon words of length <= r in lexicographic order.
  std::vector<std::int64_t> w{-1};
  while (!w.empty()) {
    ++w.back();
    const std::size_t period = w.size();
    if (period == r) out.emplace_back(w.begin(), w.end());
    while (w.size() < r) w.push_back(w[w.size() - period]);
    while (!w.empty() && w.back() == static_cast<std::int64_t>(n) - 1) w.pop_back();
  }
  return out;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
  if (w.size() < 2) throw DomainError("standard_factorization: need length >= 2");
  for (std::size_t cut = 1; cut < w.size(); ++cut) {
    Word suffix(w.begin() + static_cast<std::ptrdiff_t>(cut), w.end());
    if (is_lyndon(suffix)) return {Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut)), suffix};
  }
  // The last letter alone is always Lyndon.
  throw InvariantViolation("standard_factorization: no Lyndon suffix");
}

SparseTensorVector expand_standard_bracketing(const Word& w, std::uint32_t alphabet) {
  if (!is_lyndon(w)) throw DomainError("expand_standard_bracketing: word is not Lyndon");
  if (w.size() == 1) return SparseTensorVector::unit(alphabet, w);
  auto [u, v] = standard_factorization(w);
  return bracket(expand_standard_bracketing(u, alphabet), expand_standard_bracketing(v, alphabet));
}

std::uint64_t aperiodic_count_bruteforce(std::uint32_t n, std::uint32_t r, const Budget& budget) {
  if (n == 0 || r == 0) throw DomainError("aperiodic_count_bruteforce: need n >= 1 and r >= 1");
  if (code_space(n, r) > budget.max_code_space)
    throw ResourceError("aperiodic_count_bruteforce: n^r exceeds budget");
  std::vector<std::uint64_t> periods;
  for (std::uint64_t d : divisors(r))
    if (d < r) periods.push_back(d);

  std::uint64_t count = 0;
  Word w(r, 0);
  while (true) {
    const bool periodic = std::any_of(periods.begin(), periods.end(), [&](std::uint64_t d) {
      for (std::size_t i = d; i < r; ++i)
        if (w[i] != w[i - d]) return false;
      return true;
    });
    if (!periodic) ++count;
    std::size_t pos = r;
    while (pos > 0 && w[pos - 1] == n - 1) w[--pos] = 0;
    if (pos == 0) break;
    ++w[pos - 1];
  }
  return count;
}

namespace {

void check_shapes(std::span<const SparseTensorVector> vectors) {
  for (const auto& v : vectors)
    if (v.alphabet() != vectors.front().alphabet() || v.degree() != vectors.front().degree())
      throw DomainError("rank_over_field: vectors of mixed dimensions");
}

std::size_t rank_mod_p(std::span<const SparseTensorVector> vectors, std::uint32_t p) {
  using Row = std::vector<std::pair<std::uint64_t, std::uint32_t>>;
  auto inverse = [p](std::uint64_t a) {
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
  };

  std::unordered_map<std::uint64_t, Row> pivots;
  Row v, scratch;
  for (const auto& vec : vectors) {
    v.clear();
    for (const auto& [code, x] : vec.entries()) {
      const std::int64_t m = ((x % static_cast<std::int64_t>(p)) + p) % p;
      if (m != 0) v.emplace_back(code, static_cast<std::uint32_t>(m));
    }
    while (!v.empty()) {
      auto it = pivots.find(v.front().first);
      if (it == pivots.end()) {
        const std::uint64_t inv = inverse(v.front().second);
        for (auto& e : v) e.second = static_cast<std::uint32_t>(e.second * inv % p);
        pivots.emplace(v.front().first, v);
        break;
      }
      // v -= lead(v) * row; row has leading coefficient 1.
      const std::uint64_t factor = v.front().second;
      const Row& row = it->second;
      scratch.clear();
      auto i = v.begin();
      auto j = row.begin();
      while (i != v.end() || j != row.end()) {
        if (j == row.end() || (i != v.end() && i->first < j->first)) {
          scratch.push_back(*i++);
        } else {
          const std::uint64_t sub = factor * j->second % p;
          std::uint64_t value = (i != v.end() && i->first == j->first) ? (i++)->second : 0;
          value = (value + p - sub) % p;
          if (value != 0) scratch.emplace_back(j->first, static_cast<std::uint32_t>(value));
          ++j;
        }
      }
      v.swap(scratch);
    }
  }
  return pivots.size();
}

// Fraction-free: rows are primitive integer vectors with positive leading
// coefficient; elimination cross-multiplies and divides out the content.
std::size_t rank_rational(std::span<const SparseTensorVector> vectors) {
  using Row = std::vector<std::pair<std::uint64_t, Integer>>;
  auto make_primitive = [](Row& row) {
    Integer g = 0;
    for (const auto& e : row) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
      if (g == 1) break;
    }
    if (row.front().second < 0) g = -g;
    if (g != 1)
      for (auto& e : row) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
  };

  std::unordered_map<std::uint64_t, Row> pivots;
  Row v, scratch;
  for (const auto& vec : vectors) {
    v.clear();
    for (const auto& [code, x] : vec.entries())
      v.emplace_back(code, Integer(static_cast<long>(x)));
    while (!v.empty()) {
      make_primitive(v);
      auto it = pivots.find(v.front().first);
      if (it == pivots.end()) {
        pivots.emplace(v.front().first, v);
        break;
      }
      const Row& row = it->second;
      Integer g;
      mpz_gcd(g.get_mpz_t(), row.front().second.get_mpz_t(), v.front().second.get_mpz_t());
      const Integer scale_v = row.front().second / g;
      const Integer scale_row = v.front().second / g;
      scratch.clear();
      auto i = v.begin();
      auto j = row.begin();
      while (i != v.end() || j != row.end()) {
        if (j == row.end() || (i != v.end() && i->first < j->first)) {
          scratch.emplace_back(i->first, scale_v * i->second);
          ++i;
        } else {
          Integer value = -scale_row * j->second;
          if (i != v.end() && i->first == j->first) {
            value += scale_v * i->second;
            ++i;
          }
          if (value != 0) scratch.emplace_back(j->first, std::move(value));
          ++j;
        }
      }
      v.swap(scratch);
    }
  }
  return pivots.size();
}

}  // namespace

std::size_t rank_over_field(std::span<const SparseTensorVector> vectors, Field field) {
  if (vectors.empty()) return 0;
  check_shapes(vectors);
  if (field.modulus == 0) return rank_rational(vectors);
  return rank_mod_p(vectors, field.modulus);
}

std::size_t lie_power_rank(std::uint32_t n, std::uint32_t r, Field field, const Budget& budget) {
  if (n == 0 || r == 0) throw DomainError("lie_power_rank: need n >= 1 and r >= 1");
  check_budget(budget, n, r, code_space(n, r), pow2(r - 1), "lie_power_rank");
  std::vector<SparseTensorVector> span;
  Word w(r, 0);
  while (true) {
    auto v = left_normed_expand(w, n);
    if (!v.is_zero()) span.push_back(std::move(v));
    std::size_t pos = r;
    while (pos > 0 && w[pos - 1] == n - 1) w[--pos] = 0;
    if (pos == 0) break;
    ++w[pos - 1];
  }
  return rank_over_field(span, field);
}

std::size_t lyndon_basis_rank(std::uint32_t n, std::uint32_t r, Field field, const Budget& budget) {
  if (n == 0 || r == 0) throw DomainError("lyndon_basis_rank: need n >= 1 and r >= 1");
  check_budget(budget, n, r, 1, 1, "lyndon_basis_rank");
  std::vector<SparseTensorVector> span;
  for (const Word& w : lyndon_words(n, r)) span.push_back(expand_standard_bracketing(w, n));
  return rank_over_field(span, field);
}

std::size_t lie_module_rank(std::uint32_t r, Field field, const Budget& budget) {
  if (r == 0) throw DomainError("lie_module_rank: need r >= 1");
  check_budget(budget, r, r, factorial_u(r), pow2(r - 1), "lie_module_rank");
  Word perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<SparseTensorVector> span;
  do {
    span.push_back(left_normed_expand(perm, r));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return rank_over_field(span, field);
}

std::size_t weight_space_rank(std::uint32_t q, std::uint32_t k, Field field, const Budget& budget) {
  if (q == 0 || k == 0) throw DomainError("weight_space_rank: need q >= 1 and k >= 1");
  const std::uint32_t total = q * k;
  check_budget(budget, total, total, factorial_u(total), pow2(k - 1), "weight_space_rank");
  Word perm(total);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<SparseTensorVector> span;
  std::vector<SparseTensorVector> factors;
  do {
    factors.clear();
    for (std::uint32_t j = 0; j < k; ++j)
      factors.push_back(SparseTensorVector::unit(
          total, Word(perm.begin() + j * q, perm.begin() + (j + 1) * q)));
    span.push_back(left_normed_bracket(factors));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return rank_over_field(span, field);
}

WeightResult weight_of(const SparseTensorVector& v) {
  WeightResult out;
  if (v.is_zero()) return out;
  auto content = [&](std::uint64_t code) {
    std::vector<std::uint32_t> alpha(v.alphabet(), 0);
    for (Letter l : v.decode(code)) ++alpha[l];
    return alpha;
  };
  out.alpha = content(v.entries().front().first);
  for (const auto& e : v.entries()) {
    if (content(e.first) != out.alpha) {
      out.kind = WeightResult::Kind::Inhomogeneous;
      out.alpha.clear();
      return out;
    }
  }
  out.kind = WeightResult::Kind::Homogeneous;
  return out;
}

std::string format_index(const Word& index, std::uint32_t alphabet) {
  std::string out;
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (alphabet > 10 && i > 0) out += '.';
    out += std::to_string(index[i]);
  }
  return out;
}

std::string to_golden_text(const SparseTensorVector& v) {
  std::string out;
  for (const auto& [code, x] : v.entries())
    out += format_index(v.decode(code), v.alphabet()) + ":" + std::to_string(x) + "\n";
  return out;
}

Word parse_word(const std::string& text) {
  Word out;
  if (text.empty()) throw DomainError("empty word");
  const bool dotted = text.find_first_of(".,") != std::string::npos;
  std::string token;
  auto flush = [&] {
    if (token.empty()) throw DomainError("malformed word '" + text + "'");
    out.push_back(static_cast<Letter>(std::stoul(token)));
    token.clear();
  };
  for (char c : text) {
    if (c == '.' || c == ',') {
      flush();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      token += c;
      if (!dotted) flush();
    } else {
      throw DomainError("malformed word '" + text + "'");
    }
  }
  if (dotted) flush();
  return out;
}

}  // namespace liedim::oracle
