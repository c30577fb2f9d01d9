// liedim: dimension tables, bounds and brute-force checks for modular Lie
// powers and Lie modules.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "liedim/arith.hpp"
#include "liedim/lie_module.hpp"
#include "liedim/oracle.hpp"
#include "liedim/report.hpp"
#include "liedim/verify.hpp"
#include "liedim/witt.hpp"

namespace {

using namespace liedim;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

int cmd_witt(std::uint64_t n, std::uint64_t r) {
  if (n < 1) throw DomainError("n must be ≥ 1");
  if (r < 1) throw DomainError("r must be ≥ 1");
  const WittBoundWitness wb = check_witt_bounds({Natural(static_cast<unsigned long>(n)), r});
  std::cout << "w(" << n << "," << r << ") = " << wb.w << '\n';
  std::cout << "upper: r*w = " << wb.upper_lhs << " <= n^r = " << wb.upper_rhs
            << (wb.upper_holds ? "  OK" : "  VIOLATED") << '\n';
  std::cout << "lower: 2n^r - 2r*w = " << wb.lower_lhs;
  if (wb.lower_lhs > 0)
    std::cout << ", squared " << wb.lower_lhs_squared << " <= r^2 n^r = " << wb.lower_rhs_squared;
  else
    std::cout << " <= 0";
  std::cout << (wb.lower_holds ? "  OK" : "  VIOLATED") << '\n';
  std::cout << (wb.holds() ? "bounds OK" : "bounds VIOLATED") << '\n';
  return wb.holds() ? 0 : kExitVerifyFailed;
}

void emit(const std::vector<ConvergenceRow>& rows, OutputFormat format) {
  std::cout << (format == OutputFormat::Csv ? to_csv(rows) : to_json(rows));
}

int report_rank(const std::string& label, std::size_t rank, const Natural& expected,
                const std::string& expected_label) {
  std::cout << label << " = " << rank << '\n' << expected_label << " = " << expected << '\n';
  const bool ok = expected == static_cast<unsigned long>(rank);
  std::cout << (ok ? "match" : "MISMATCH") << '\n';
  return ok ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact dimension sequences and bounds for modular Lie powers and Lie modules"};
  app.require_subcommand(1);

  std::uint64_t n = 2, r = 1, q = 1, k_single = 1;
  RunConfig cfg;
  std::string format = "csv";
  std::string field_name = "q";
  std::string word_text;
  bool left_normed = false;
  std::string suite = "all";
  bool slow = false;

  auto* witt = app.add_subcommand("witt", "Witt dimension w(n, r) with its bounds");
  witt->add_option("--n", n, "alphabet size / dim V")->required();
  witt->add_option("--r", r, "degree")->required();

  auto add_table_options = [&](CLI::App* sub, bool with_n) {
    sub->add_option("--p", cfg.p, "prime characteristic")->required();
    if (with_n) sub->add_option("--n", cfg.n, "dim V (>= 2)")->required();
    sub->add_option("--k", cfg.k_list, "k coprime to p (repeatable)");
    sub->add_option("--m-max", cfg.m_max, "largest exponent m")->capture_default_str();
    sub->add_option("--float-bits", cfg.float_bits, "binary precision of float columns")
        ->capture_default_str();
    sub->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_flag("--slow", cfg.slow, "accepted for symmetry; tables are exact and fast");
  };
  auto* b_table_cmd = app.add_subcommand("b-table", "dim B^r(V) / dim L^r(V) along r = p^m k");
  add_table_options(b_table_cmd, true);
  auto* c_table_cmd = app.add_subcommand("c-table", "dim C(r) / dim Lie(r) along r = p^m k");
  add_table_options(c_table_cmd, false);

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force free Lie algebra computations");
  oracle_cmd->require_subcommand(1);
  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--field", field_name, "q, f2, f3, f5, ...")->capture_default_str();
    sub->add_flag("--slow", slow, "raise work budgets");
  };
  auto* lyndon = oracle_cmd->add_subcommand("lyndon", "list Lyndon words");
  lyndon->add_option("--n", n)->required();
  lyndon->add_option("--r", r)->required();
  auto* aperiodic = oracle_cmd->add_subcommand("aperiodic", "count aperiodic words by enumeration");
  aperiodic->add_option("--n", n)->required();
  aperiodic->add_option("--r", r)->required();
  add_field(aperiodic);
  auto* expand = oracle_cmd->add_subcommand("expand", "tensor expansion of a bracketed word");
  expand->add_option("--n", n)->required();
  expand->add_option("--word", word_text, "letters, e.g. 001 or 0.1.12")->required();
  expand->add_flag("--left-normed", left_normed, "left-normed instead of standard bracketing");
  auto* lie_power = oracle_cmd->add_subcommand("lie-power", "rank of L^r in tensor coordinates");
  lie_power->add_option("--n", n)->required();
  lie_power->add_option("--r", r)->required();
  add_field(lie_power);
  auto* lie_module = oracle_cmd->add_subcommand("lie-module", "rank of Lie(r)");
  lie_module->add_option("--r", r)->required();
  add_field(lie_module);
  auto* weight = oracle_cmd->add_subcommand("weight-space", "rank of the multilinear weight space");
  weight->add_option("--q", q)->required();
  weight->add_option("--k", k_single)->required();
  add_field(weight);

  auto* verify = app.add_subcommand("verify", "run the exact verification grids");
  verify->add_option("--suite", suite, "all, witt, b, c, oracle")
      ->check(CLI::IsMember({"all", "witt", "b", "c", "oracle"}))
      ->capture_default_str();
  verify->add_flag("--slow", slow, "include the slow oracle cases");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    cfg.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
    if (*witt) return cmd_witt(n, r);
    if (*b_table_cmd) {
      emit(b_table(cfg), cfg.format);
      return 0;
    }
    if (*c_table_cmd) {
      emit(c_table(cfg), cfg.format);
      return 0;
    }
    if (*verify) {
      const auto results = run_verify({parse_suite(suite), slow});
      return report_verify(results, std::cout);
    }
    if (*oracle_cmd) {
      const oracle::Field field = oracle::Field::parse(field_name);
      const oracle::Budget budget = oracle::Budget::from_environment(slow);
      auto small = [](std::uint64_t v, const char* what) {
        if (v < 1 || v > 64) throw DomainError(std::string(what) + " must be in [1, 64]");
        return static_cast<std::uint32_t>(v);
      };
      if (*lyndon) {
        const auto n32 = small(n, "n");
        for (const auto& w : oracle::lyndon_words(n32, small(r, "r")))
          std::cout << oracle::format_index(w, n32) << '\n';
        return 0;
      }
      if (*aperiodic) {
        const auto count = oracle::aperiodic_count_bruteforce(small(n, "n"), small(r, "r"), budget);
        std::cout << "aperiodic words = " << count << '\n';
        return 0;
      }
      if (*expand) {
        const oracle::Word w = oracle::parse_word(word_text);
        const auto n32 = small(n, "n");
        const auto v = left_normed ? oracle::left_normed_expand(w, n32)
                                   : oracle::expand_standard_bracketing(w, n32);
        std::cout << oracle::to_golden_text(v);
        return 0;
      }
      if (*lie_power) {
        const auto rank = oracle::lie_power_rank(small(n, "n"), small(r, "r"), field, budget);
        return report_rank("lie_power_rank(n=" + std::to_string(n) + ", r=" + std::to_string(r) +
                               ", " + field.name() + ")",
                           rank, witt_dim(Natural(static_cast<unsigned long>(n)), r), "w(n,r)");
      }
      if (*lie_module) {
        const auto rank = oracle::lie_module_rank(small(r, "r"), field, budget);
        return report_rank("lie_module_rank(r=" + std::to_string(r) + ", " + field.name() + ")",
                           rank, dim_lie(r), "(r-1)!");
      }
      if (*weight) {
        const auto rank = oracle::weight_space_rank(small(q, "q"), small(k_single, "k"), field, budget);
        return report_rank("weight_space_rank(q=" + std::to_string(q) + ", k=" +
                               std::to_string(k_single) + ", " + field.name() + ")",
                           rank, weight_space_dim_formula(q, k_single), "(qk)!/k");
      }
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
