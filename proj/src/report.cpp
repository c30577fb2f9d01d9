#include "liedim/report.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <mpfr.h>
#include "json.hpp"

#include "liedim/lie_module.hpp"
#include "liedim/lie_power.hpp"

namespace liedim {

namespace {

class MpfrFloat {
 public:
  explicit MpfrFloat(mpfr_prec_t bits) { mpfr_init2(value_, bits); }
  ~MpfrFloat() { mpfr_clear(value_); }
  MpfrFloat(const MpfrFloat&) = delete;
  MpfrFloat& operator=(const MpfrFloat&) = delete;
  mpfr_ptr get() { return value_; }

 private:
  mpfr_t value_;
};

std::string print(mpfr_ptr x, std::uint64_t float_bits) {
  char* buffer = nullptr;
  if (mpfr_asprintf(&buffer, "%.*RNe", decimal_digits(float_bits) - 1, x) < 0)
    throw std::runtime_error("mpfr_asprintf failed");
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

std::vector<std::uint64_t> degrees(const RunConfig& cfg) {
  std::set<std::uint64_t> rs;
  for (std::uint64_t k : cfg.k_list)
    for (std::uint64_t m = 0; m <= cfg.m_max; ++m) rs.insert(ipow(cfg.p, m) * k);
  return {rs.begin(), rs.end()};
}

}  // namespace

void RunConfig::validate(bool needs_n) const {
  if (!is_prime(p)) throw DomainError("p must be prime");
  if (needs_n && n < 2) throw DomainError("n must be >= 2");
  if (k_list.empty()) throw DomainError("at least one --k is required");
  for (std::uint64_t k : k_list)
    if (k == 0 || k % p == 0) throw DomainError("every k must be >= 1 and not divisible by p");
  if (float_bits < 2) throw DomainError("float-bits must be >= 2");
  if (m_max > 40) throw DomainError("m-max too large");
  if (ipow(p, m_max) > (std::uint64_t{1} << 40)) throw DomainError("p^m-max too large");
}

bool operator==(const ConvergenceRow& a, const ConvergenceRow& b) {
  return a.r == b.r && a.p == b.p && a.m == b.m && a.k == b.k && a.dim == b.dim &&
         a.dim_context == b.dim_context && a.ratio == b.ratio && a.ratio_float == b.ratio_float &&
         a.bound == b.bound && a.bound_float == b.bound_float && a.gap == b.gap &&
         a.gap_float == b.gap_float;
}

int decimal_digits(std::uint64_t float_bits) {
  return std::max(1, static_cast<int>(std::floor(static_cast<double>(float_bits) * std::log10(2.0))));
}

std::string render_float(const Rational& q, std::uint64_t float_bits) {
  MpfrFloat x(static_cast<mpfr_prec_t>(float_bits));
  mpfr_set_q(x.get(), q.get_mpq_t(), MPFR_RNDN);
  return print(x.get(), float_bits);
}

std::string render_float(const SqrtDifference& v, std::uint64_t float_bits) {
  const auto work = static_cast<mpfr_prec_t>(float_bits + 64);
  MpfrFloat root(work), rational(work), out(static_cast<mpfr_prec_t>(float_bits));
  mpfr_set_q(root.get(), v.root_square.get_mpq_t(), MPFR_RNDN);
  mpfr_sqrt(root.get(), root.get(), MPFR_RNDN);
  mpfr_set_q(rational.get(), v.rational.get_mpq_t(), MPFR_RNDN);
  mpfr_sub(out.get(), rational.get(), root.get(), MPFR_RNDN);
  return print(out.get(), float_bits);
}

std::vector<ConvergenceRow> b_table(const RunConfig& cfg) {
  cfg.validate(true);
  LiePowerContext ctx(cfg.p, Natural(static_cast<unsigned long>(cfg.n)));
  std::vector<ConvergenceRow> rows;
  for (std::uint64_t r : degrees(cfg)) {
    const BRatioReport rep = ctx.report(r);
    ConvergenceRow row;
    row.r = r;
    row.p = cfg.p;
    row.m = rep.split.m;
    row.k = rep.split.k;
    row.dim = rep.dim_b;
    row.dim_context = rep.dim_lie_power;
    row.ratio = rep.b;
    row.ratio_float = render_float(row.ratio, cfg.float_bits);
    if (rep.lower_bound) {
      row.bound = rep.lower_bound->to_string();
      row.bound_float = render_float(*rep.lower_bound, cfg.float_bits);
    } else if (rep.split.m == 0) {
      row.bound = "1";
      row.bound_float = render_float(Rational(1), cfg.float_bits);
    }
    row.gap = Rational(1) - row.ratio;
    row.gap_float = render_float(row.gap, cfg.float_bits);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ConvergenceRow> c_table(const RunConfig& cfg) {
  cfg.validate(false);
  LieModuleContext ctx(cfg.p);
  std::vector<ConvergenceRow> rows;
  for (std::uint64_t r : degrees(cfg)) {
    const CRatioReport rep = ctx.report(r);
    ConvergenceRow row;
    row.r = r;
    row.p = cfg.p;
    row.m = rep.split.m;
    row.k = rep.split.k;
    row.dim = rep.dim_c;
    row.dim_context = rep.dim_lie;
    row.ratio = rep.c;
    row.ratio_float = render_float(row.ratio, cfg.float_bits);
    if (rep.lower_bound) {
      row.bound = rep.lower_bound->get_str();
      row.bound_float = render_float(*rep.lower_bound, cfg.float_bits);
    } else if (rep.split.m == 0) {
      row.bound = "1";
      row.bound_float = render_float(Rational(1), cfg.float_bits);
    }
    row.gap = Rational(1) - row.ratio;
    row.gap_float = render_float(row.gap, cfg.float_bits);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string to_csv(const std::vector<ConvergenceRow>& rows) {
  std::string out =
      "r,p,m,k,dim_num,dim_den_context,ratio_num,ratio_den,ratio_float,bound_float,gap_float\n";
  for (const auto& row : rows) {
    out += std::to_string(row.r) + ',' + std::to_string(row.p) + ',' + std::to_string(row.m) + ',' +
           std::to_string(row.k) + ',' + row.dim.get_str() + ',' + row.dim_context.get_str() + ',' +
           row.ratio.get_num().get_str() + ',' + row.ratio.get_den().get_str() + ',' +
           row.ratio_float + ',' + row.bound_float + ',' + row.gap_float + '\n';
  }
  return out;
}

std::string to_json(const std::vector<ConvergenceRow>& rows) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json obj;
    obj["r"] = std::to_string(row.r);
    obj["p"] = std::to_string(row.p);
    obj["m"] = std::to_string(row.m);
    obj["k"] = std::to_string(row.k);
    obj["dim_num"] = row.dim.get_str();
    obj["dim_den_context"] = row.dim_context.get_str();
    obj["ratio_num"] = row.ratio.get_num().get_str();
    obj["ratio_den"] = row.ratio.get_den().get_str();
    obj["ratio_float"] = row.ratio_float;
    obj["bound"] = row.bound;
    obj["bound_float"] = row.bound_float;
    obj["gap_num"] = row.gap.get_num().get_str();
    obj["gap_den"] = row.gap.get_den().get_str();
    obj["gap_float"] = row.gap_float;
    out.push_back(std::move(obj));
  }
  return out.dump(2) + "\n";
}

std::vector<ConvergenceRow> rows_from_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  if (!doc.is_array()) throw DomainError("expected a JSON array of rows");
  auto u64 = [](const nlohmann::json& obj, const char* key) {
    return static_cast<std::uint64_t>(std::stoull(obj.at(key).get<std::string>()));
  };
  auto big = [](const nlohmann::json& obj, const char* key) {
    return Integer(obj.at(key).get<std::string>());
  };
  std::vector<ConvergenceRow> rows;
  for (const auto& obj : doc) {
    ConvergenceRow row;
    row.r = u64(obj, "r");
    row.p = u64(obj, "p");
    row.m = u64(obj, "m");
    row.k = u64(obj, "k");
    row.dim = big(obj, "dim_num");
    row.dim_context = big(obj, "dim_den_context");
    row.ratio = make_rational(big(obj, "ratio_num"), big(obj, "ratio_den"));
    row.ratio_float = obj.at("ratio_float").get<std::string>();
    row.bound = obj.at("bound").get<std::string>();
    row.bound_float = obj.at("bound_float").get<std::string>();
    row.gap = make_rational(big(obj, "gap_num"), big(obj, "gap_den"));
    row.gap_float = obj.at("gap_float").get<std::string>();
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace liedim
