#include "liedim/verify.hpp"

#include <exception>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "liedim/arith.hpp"
#include "liedim/lie_module.hpp"
#include "liedim/lie_power.hpp"
#include "liedim/oracle.hpp"
#include "liedim/witt.hpp"

namespace liedim {

namespace {

class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++result_.checks;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.failure = describe();
    }
  }

  void fail(const std::string& why) {
    if (result_.passed) {
      result_.passed = false;
      result_.failure = why;
    }
  }

  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string tuple(std::initializer_list<std::pair<const char*, std::uint64_t>> fields) {
  std::string out;
  for (const auto& [key, value] : fields) {
    if (!out.empty()) out += ' ';
    out += std::string(key) + '=' + std::to_string(value);
  }
  return out;
}

void run_group(std::vector<CheckResult>& out, const std::string& name,
               const std::function<void(Check&)>& body) {
  Check check(name);
  try {
    body(check);
  } catch (const std::exception& e) {
    check.fail(std::string("exception: ") + e.what());
  }
  out.push_back(check.take());
}

Natural nat(std::uint64_t v) { return Natural(static_cast<unsigned long>(v)); }

struct GridPoint {
  std::uint64_t p, n, m, k;
  std::uint64_t r() const { return ipow(p, m) * k; }
};

// p in {2,3}, n in {2,3}, k in {2,3,5} coprime to p, p^m k <= 5000.
std::vector<GridPoint> convergence_grid() {
  std::vector<GridPoint> out;
  for (std::uint64_t p : {2, 3})
    for (std::uint64_t n : {2, 3})
      for (std::uint64_t k : {2, 3, 5}) {
        if (k % p == 0) continue;
        for (std::uint64_t m = 0; ipow(p, m) * k <= 5000; ++m) out.push_back({p, n, m, k});
      }
  return out;
}

constexpr std::uint64_t kSmallGridMax = 200;
constexpr std::uint64_t kConvergenceThreshold = 2000;

void witt_suite(std::vector<CheckResult>& out) {
  run_group(out, "witt.mobius_sum", [](Check& c) {
    for (std::uint64_t r = 1; r <= 10000; ++r) {
      long sum = 0;
      for (std::uint64_t d : divisors(r)) sum += mobius(d);
      c.expect(sum == (r == 1 ? 1 : 0), [&] { return tuple({{"r", r}}); });
    }
  });
  run_group(out, "witt.p_adic_roundtrip", [](Check& c) {
    for (std::uint64_t p : {2, 3, 5, 7})
      for (std::uint64_t r = 1; r <= 100000; ++r) {
        const PAdicSplit s = p_adic_split(r, p);
        c.expect(s.r() == r && s.k % p != 0 && s.k >= 1,
                 [&] { return tuple({{"p", p}, {"r", r}}); });
      }
  });
  run_group(out, "witt.bounds", [](Check& c) {
    for (std::uint64_t n = 1; n <= 10; ++n)
      for (std::uint64_t r = 1; r <= 64; ++r)
        c.expect(check_witt_bounds({nat(n), r}).holds(), [&] { return tuple({{"n", n}, {"r", r}}); });
  });
  run_group(out, "witt.alphabet_one", [](Check& c) {
    c.expect(witt_dim(1, 1) == 1, [] { return std::string("n=1 r=1"); });
    for (std::uint64_t r = 2; r <= 100; ++r)
      c.expect(witt_dim(1, r) == 0, [&] { return tuple({{"n", 1}, {"r", r}}); });
  });
  run_group(out, "witt.lyndon_count", [](Check& c) {
    for (std::uint32_t n = 1; n <= 4; ++n)
      for (std::uint32_t r = 1; r <= 12; ++r)
        c.expect(witt_dim(n, r) == static_cast<unsigned long>(oracle::lyndon_words(n, r).size()),
                 [&] { return tuple({{"n", n}, {"r", r}}); });
  });
  run_group(out, "witt.aperiodic_count", [](Check& c) {
    for (std::uint32_t n = 1; n <= 3; ++n)
      for (std::uint32_t r = 1; r <= 10; ++r)
        c.expect(aperiodic_word_count({nat(n), r}) ==
                     static_cast<unsigned long>(oracle::aperiodic_count_bruteforce(n, r)),
                 [&] { return tuple({{"n", n}, {"r", r}}); });
  });
}

void b_suite(std::vector<CheckResult>& out) {
  const std::uint64_t primes[] = {2, 3, 5};
  const std::uint64_t dims[] = {2, 3, 5};

  run_group(out, "b.dimension_identity", [&](Check& c) {
    for (std::uint64_t p : primes)
      for (std::uint64_t n : dims) {
        LiePowerContext ctx(p, nat(n));
        ctx.populate(kSmallGridMax);
        for (std::uint64_t r = 1; r <= kSmallGridMax; ++r) {
          const PAdicSplit s = p_adic_split(r, p);
          c.expect(ctx.check_dimension_identity(s.m, s.k).holds,
                   [&] { return tuple({{"p", p}, {"n", n}, {"m", s.m}, {"k", s.k}}); });
        }
      }
  });
  run_group(out, "b.ratio_range", [&](Check& c) {
    for (std::uint64_t p : primes)
      for (std::uint64_t n : dims) {
        LiePowerContext ctx(p, nat(n));
        for (std::uint64_t r = 1; r <= kSmallGridMax; ++r) {
          const PAdicSplit s = p_adic_split(r, p);
          const Rational b = ctx.ratio_b(r);
          bool ok = b >= 0 && b <= 1 && ((b == 0) == s.is_prime_power());
          if (s.m == 0) ok = ok && b == 1;
          c.expect(ok, [&] { return tuple({{"p", p}, {"n", n}, {"r", r}}); });
        }
      }
  });
  run_group(out, "b.a_ratio_bound", [&](Check& c) {
    for (std::uint64_t p : primes)
      for (std::uint64_t n : dims) {
        LiePowerContext ctx(p, nat(n));
        for (std::uint64_t r = 1; r <= kSmallGridMax; ++r) {
          const PAdicSplit s = p_adic_split(r, p);
          if (s.k < 2) continue;
          for (std::uint64_t i = 1; i <= s.m; ++i)
            for (std::uint64_t sh = 1; sh <= i; ++sh)
              c.expect(ctx.check_a_ratio_bound(s.m, s.k, i, sh).holds, [&] {
                return tuple({{"p", p}, {"n", n}, {"m", s.m}, {"k", s.k}, {"i", i}, {"s", sh}});
              });
        }
      }
  });
  run_group(out, "b.a_corollary", [&](Check& c) {
    for (std::uint64_t p : primes)
      for (std::uint64_t n : dims) {
        LiePowerContext ctx(p, nat(n));
        for (std::uint64_t r = 1; r <= kSmallGridMax; ++r) {
          const PAdicSplit s = p_adic_split(r, p);
          if (s.k < 2 || s.m < 1) continue;
          c.expect(ctx.check_a_corollary(s.m, s.k).holds,
                   [&] { return tuple({{"p", p}, {"n", n}, {"m", s.m}, {"k", s.k}}); });
        }
      }
  });
  run_group(out, "b.lower_bound", [&](Check& c) {
    for (std::uint64_t p : primes)
      for (std::uint64_t n : dims) {
        LiePowerContext ctx(p, nat(n));
        for (std::uint64_t r = 1; r <= kSmallGridMax; ++r) {
          const PAdicSplit s = p_adic_split(r, p);
          if (s.k < 2 || s.m < 1) continue;
          c.expect(ctx.lower_bound_b(s.m, s.k).bound().le(ctx.ratio_b(r)),
                   [&] { return tuple({{"p", p}, {"n", n}, {"m", s.m}, {"k", s.k}}); });
        }
      }
  });
  run_group(out, "b.convergence", [](Check& c) {
    const Rational eps(1, 100);
    std::map<std::pair<std::uint64_t, std::uint64_t>, LiePowerContext> contexts;
    for (const GridPoint& g : convergence_grid()) {
      auto& ctx = contexts.try_emplace({g.p, g.n}, g.p, nat(g.n)).first->second;
      const Rational b = ctx.ratio_b(g.r());
      const Rational gap = Rational(1) - b;
      bool ok = g.m == 0 ? gap == 0 : ctx.lower_bound_b(g.m, g.k).bound().le(b);
      if (g.r() >= kConvergenceThreshold) ok = ok && gap < eps;
      c.expect(ok, [&] { return tuple({{"p", g.p}, {"n", g.n}, {"m", g.m}, {"k", g.k}}); });
    }
  });
  run_group(out, "b.bound_below_one_percent", [](Check& c) {
    // (p^{m-1}k)^{p-1} >= 400(m-1), k^{p^m-1} >= 800, n^{p^m k} >= 160000 k^2
    // force the three subtracted terms under 1/200, 1/400 and 1/800.
    const Rational eps(1, 100);
    for (const GridPoint& g : convergence_grid()) {
      if (g.m < 1) continue;
      const bool applies = power(nat(ipow(g.p, g.m - 1) * g.k), g.p - 1) >= nat(400 * (g.m - 1)) &&
                           power_u(g.k, ipow(g.p, g.m) - 1) >= 800 &&
                           power_u(g.n, g.r()) >= nat(160000 * g.k * g.k);
      if (!applies) continue;
      LiePowerContext ctx(g.p, nat(g.n));
      c.expect(ctx.lower_bound_b(g.m, g.k).bound().deficit_lt(eps),
               [&] { return tuple({{"p", g.p}, {"n", g.n}, {"m", g.m}, {"k", g.k}}); });
    }
  });
}

void c_suite(std::vector<CheckResult>& out) {
  const std::uint64_t primes[] = {2, 3, 5};

  run_group(out, "c.integrality_and_range", [&](Check& c) {
    for (std::uint64_t p : primes) {
      LieModuleContext ctx(p);
      for (std::uint64_t r = 1; r <= kSmallGridMax; ++r) {
        const PAdicSplit s = p_adic_split(r, p);
        const Rational& cr = ctx.ratio_c(r);
        const Rational product = cr * Rational(dim_lie(r));
        bool ok = product.get_den() == 1 && cr >= 0 && cr <= 1;
        if (s.m == 0) ok = ok && cr == 1;
        if (s.is_prime_power()) ok = ok && cr == 0;
        c.expect(ok, [&] { return tuple({{"p", p}, {"r", r}}); });
      }
    }
  });
  run_group(out, "c.recurrence_forms_agree", [&](Check& c) {
    for (std::uint64_t p : primes) {
      LieModuleContext ctx(p);
      for (std::uint64_t r = 1; r <= kSmallGridMax; ++r)
        c.expect(ctx.ratio_c(r) == ctx.ratio_c_factorial_form(r),
                 [&] { return tuple({{"p", p}, {"r", r}}); });
    }
    for (std::uint64_t p : {2, 3}) {
      LieModuleContext ctx(p);
      for (const GridPoint& g : convergence_grid()) {
        if (g.p != p || g.n != 2) continue;
        c.expect(ctx.ratio_c(g.r()) == ctx.ratio_c_factorial_form(g.r()),
                 [&] { return tuple({{"p", g.p}, {"m", g.m}, {"k", g.k}}); });
      }
    }
  });
  run_group(out, "c.factorial_identity", [&](Check& c) {
    for (std::uint64_t p : primes) {
      LieModuleContext ctx(p);
      for (std::uint64_t r = 2; r <= kSmallGridMax; ++r) {
        const PAdicSplit s = p_adic_split(r, p);
        if (s.k < 2) continue;
        c.expect(ctx.check_c_recurrence_identity(s.m, s.k).holds,
                 [&] { return tuple({{"p", p}, {"m", s.m}, {"k", s.k}}); });
      }
    }
  });
  run_group(out, "c.a_prime_ratio_identity", [&](Check& c) {
    auto check_point = [&](std::uint64_t p, std::uint64_t m, std::uint64_t k) {
      for (std::uint64_t i = 0; i <= m; ++i)
        for (std::uint64_t s = 0; s <= i; ++s)
          c.expect(check_a_prime_ratio_identity(p, m, k, i, s).holds, [&] {
            return tuple({{"p", p}, {"m", m}, {"k", k}, {"i", i}, {"s", s}});
          });
    };
    for (std::uint64_t p : primes)
      for (std::uint64_t r = 2; r <= kSmallGridMax; ++r) {
        const PAdicSplit s = p_adic_split(r, p);
        if (s.k >= 2) check_point(p, s.m, s.k);
      }
    for (const GridPoint& g : convergence_grid())
      if (g.n == 2) check_point(g.p, g.m, g.k);
  });
  run_group(out, "c.lower_bound", [&](Check& c) {
    for (std::uint64_t p : primes) {
      LieModuleContext ctx(p);
      for (std::uint64_t r = 2; r <= kSmallGridMax; ++r) {
        const PAdicSplit s = p_adic_split(r, p);
        if (s.k < 2 || s.m < 1) continue;
        const Rational bound = lower_bound_c(p, s.m, s.k);
        const Rational& cr = ctx.ratio_c(r);
        c.expect(bound <= cr && (s.m != 1 || bound == cr),
                 [&] { return tuple({{"p", p}, {"m", s.m}, {"k", s.k}}); });
      }
    }
  });
  run_group(out, "c.convergence", [](Check& c) {
    const Rational eps(1, 100);
    for (std::uint64_t p : {2, 3}) {
      LieModuleContext ctx(p);
      for (const GridPoint& g : convergence_grid()) {
        if (g.p != p || g.n != 2) continue;
        const Rational& cr = ctx.ratio_c(g.r());
        const Rational gap = Rational(1) - cr;
        bool ok = g.m == 0 ? gap == 0 : lower_bound_c(g.p, g.m, g.k) <= cr;
        if (g.r() >= kConvergenceThreshold) ok = ok && gap < eps;
        c.expect(ok, [&] { return tuple({{"p", g.p}, {"m", g.m}, {"k", g.k}}); });
      }
    }
  });
  run_group(out, "c.bound_below_one_percent", [](Check& c) {
    const Rational eps(1, 100);
    for (const GridPoint& g : convergence_grid()) {
      if (g.n != 2 || g.m < 1) continue;
      const bool applies = power(nat(ipow(g.p, g.m - 1) * g.k), g.p - 1) >= nat(200 * (g.m - 1)) &&
                           power_u(g.k, ipow(g.p, g.m) - 1) >= 400;
      if (!applies) continue;
      c.expect(Rational(1) - lower_bound_c(g.p, g.m, g.k) < eps,
               [&] { return tuple({{"p", g.p}, {"m", g.m}, {"k", g.k}}); });
    }
  });
  run_group(out, "c.weight_space_factorization", [](Check& c) {
    for (std::uint64_t q = 1; q <= 8; ++q)
      for (std::uint64_t k = 1; k <= 8; ++k)
        c.expect(weight_space_dim_formula(q, k) == phi_count(q, k) * w_phi_dim(k),
                 [&] { return tuple({{"q", q}, {"k", k}}); });
  });
}

void oracle_suite(std::vector<CheckResult>& out, bool slow) {
  using oracle::Field;
  const Field fields[] = {Field::rationals(), Field::prime(2), Field::prime(3)};
  const oracle::Budget budget = oracle::Budget::from_environment(slow);

  run_group(out, "oracle.lyndon_words", [](Check& c) {
    for (std::uint32_t n = 1; n <= 4; ++n)
      for (std::uint32_t r = 1; r <= 12; ++r) {
        const auto words = oracle::lyndon_words(n, r);
        bool ok = witt_dim(n, r) == static_cast<unsigned long>(words.size());
        for (std::size_t i = 0; ok && i < words.size(); ++i)
          ok = oracle::is_lyndon(words[i]) && (i == 0 || words[i - 1] < words[i]);
        c.expect(ok, [&] { return tuple({{"n", n}, {"r", r}}); });
      }
  });
  run_group(out, "oracle.lie_power_rank", [&](Check& c) {
    for (const Field& f : fields)
      for (std::uint32_t n = 1; n <= 3; ++n)
        for (std::uint32_t r = 1; r <= 6; ++r)
          c.expect(witt_dim(n, r) == static_cast<unsigned long>(oracle::lie_power_rank(n, r, f, budget)),
                   [&] { return tuple({{"n", n}, {"r", r}, {"field", f.modulus}}); });
  });
  run_group(out, "oracle.lyndon_basis_rank", [&](Check& c) {
    for (const Field& f : fields)
      for (std::uint32_t n = 1; n <= 3; ++n)
        for (std::uint32_t r = 1; r <= 6; ++r)
          c.expect(witt_dim(n, r) ==
                       static_cast<unsigned long>(oracle::lyndon_basis_rank(n, r, f, budget)),
                   [&] { return tuple({{"n", n}, {"r", r}, {"field", f.modulus}}); });
  });
  run_group(out, "oracle.lie_module_rank", [&](Check& c) {
    const std::uint32_t max_r = slow ? 7 : 6;
    for (const Field& f : fields)
      for (std::uint32_t r = 1; r <= max_r; ++r)
        c.expect(dim_lie(r) == static_cast<unsigned long>(oracle::lie_module_rank(r, f, budget)),
                 [&] { return tuple({{"r", r}, {"field", f.modulus}}); });
  });
  run_group(out, "oracle.weight_space_rank", [&](Check& c) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> cases{{1, 2}, {1, 3}, {1, 4}, {2, 2}, {3, 2}};
    if (slow) cases.emplace_back(2, 3);
    for (const Field& f : fields)
      for (const auto& [q, k] : cases) {
        const Natural formula = weight_space_dim_formula(q, k);
        c.expect(formula == phi_count(q, k) * w_phi_dim(k) &&
                     formula == static_cast<unsigned long>(oracle::weight_space_rank(q, k, f, budget)),
                 [&] { return tuple({{"q", q}, {"k", k}, {"field", f.modulus}}); });
      }
  });
  run_group(out, "oracle.homogeneity", [](Check& c) {
    for (std::uint32_t n = 1; n <= 3; ++n)
      for (std::uint32_t r = 1; r <= 5; ++r) {
        oracle::Word w(r, 0);
        while (true) {
          const auto v = oracle::left_normed_expand(w, n);
          const auto weight = oracle::weight_of(v);
          std::vector<std::uint32_t> content(n, 0);
          for (auto l : w) ++content[l];
          c.expect(v.is_zero() || (weight.kind == oracle::WeightResult::Kind::Homogeneous &&
                                   weight.alpha == content),
                   [&] { return tuple({{"n", n}, {"r", r}}); });
          std::size_t pos = r;
          while (pos > 0 && w[pos - 1] == n - 1) w[--pos] = 0;
          if (pos == 0) break;
          ++w[pos - 1];
        }
      }
  });
  run_group(out, "oracle.antisymmetry", [](Check& c) {
    for (std::uint32_t a = 0; a < 3; ++a)
      for (std::uint32_t b = 0; b < 3; ++b) {
        const auto sum = oracle::left_normed_expand({a, b}, 3) + oracle::left_normed_expand({b, a}, 3);
        c.expect(sum.is_zero(), [&] { return tuple({{"a", a}, {"b", b}}); });
      }
  });
}

}  // namespace

Suite parse_suite(const std::string& name) {
  if (name == "all") return Suite::All;
  if (name == "witt") return Suite::Witt;
  if (name == "b") return Suite::B;
  if (name == "c") return Suite::C;
  if (name == "oracle") return Suite::Oracle;
  throw DomainError("unknown suite '" + name + "' (expected all, witt, b, c, oracle)");
}

std::vector<CheckResult> run_verify(const VerifyOptions& options) {
  std::vector<CheckResult> out;
  const bool all = options.suite == Suite::All;
  if (all || options.suite == Suite::Witt) witt_suite(out);
  if (all || options.suite == Suite::B) b_suite(out);
  if (all || options.suite == Suite::C) c_suite(out);
  if (all || options.suite == Suite::Oracle) oracle_suite(out, options.slow);
  return out;
}

int report_verify(const std::vector<CheckResult>& results, std::ostream& out) {
  std::size_t total = 0;
  std::size_t failed = 0;
  for (const auto& r : results) {
    total += r.checks;
    if (!r.passed) ++failed;
    out << (r.passed ? "[PASS] " : "[FAIL] ") << std::left << std::setw(34) << r.name
        << std::right << std::setw(8) << r.checks << " checks";
    if (!r.passed) out << "  first failure: " << r.failure;
    out << '\n';
  }
  out << (failed == 0 ? "PASS" : "FAIL") << ": " << results.size() - failed << '/'
      << results.size() << " groups, " << total << " checks\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace liedim
