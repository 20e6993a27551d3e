// Command-line surface for the classification engine.
//
// Exit codes: 0 verdict computed (true or false alike), 2 input error,
// 3 internal disagreement between criteria.

#include "lefschetz/characters.hpp"
#include "lefschetz/criteria.hpp"
#include "lefschetz/jacobi.hpp"
#include "lefschetz/report.hpp"
#include "lefschetz/selftest.hpp"
#include "lefschetz/slopes.hpp"
#include "lefschetz/survey.hpp"
#include "lefschetz/version.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitEngine = 3;

std::array<std::int64_t, 3> parse_alpha(const std::string& s) {
  std::array<std::int64_t, 3> a{};
  std::stringstream ss(s);
  std::string item;
  int i = 0;
  while (std::getline(ss, item, ',')) {
    if (i >= 3) throw std::invalid_argument("alpha must have exactly three entries");
    a[static_cast<std::size_t>(i++)] = std::stoll(item);
  }
  if (i != 3) throw std::invalid_argument("alpha must have exactly three entries");
  return a;
}

std::string default_cache_path(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("LEFSCHETZ_CACHE")) return env;
  return {};
}

void print_human(const lefschetz::ClassificationRecord& rec, std::ostream& os) {
  os << "p=" << rec.p << " l=" << rec.l << " f=" << rec.f << " alpha=(" << rec.alpha[0] << ","
     << rec.alpha[1] << "," << rec.alpha[2] << ")\n";
  os << "  |H_alpha|=" << rec.h_alpha_size << "  [C(A):Q]=" << rec.center_degree;
  if (rec.brauer_order) os << "  brauer_order=" << *rec.brauer_order;
  if (rec.dimension) os << "  dim=" << *rec.dimension;
  os << "\n";
  os << "  verdict: " << (rec.verdict ? "all Tate classes Lefschetz" : "NOT all Lefschetz")
     << "  (rule " << lefschetz::to_string(rec.rule) << ")\n";
  auto show = [&](const char* name, const std::optional<bool>& v) {
    if (v) os << "  " << name << ": " << (*v ? "true" : "false") << "\n";
  };
  show("verdict_by_rank", rec.verdict_by_rank);
  show("verdict_by_characters", rec.verdict_by_characters);
  show("verdict_by_e", rec.verdict_by_e);
  if (!rec.witnesses.empty()) {
    os << "  witnesses (character exponents with vanishing sum):";
    for (std::int64_t k : rec.witnesses) os << " " << k;
    os << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classifies simple factors of Fermat Jacobians of prime degree: decides "
               "whether all l-adic Tate classes on all powers are Lefschetz, by "
               "independent exact criteria."};
  app.require_subcommand(1);

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "Classify a single (p, l, alpha)");
  std::int64_t cl_p = 0, cl_l = 0;
  std::string cl_alpha, cl_mode = "cross_validate", cl_format = "text", cl_out;
  classify_cmd->add_option("--p", cl_p, "characteristic prime")->required();
  classify_cmd->add_option("--l", cl_l, "Fermat degree (odd prime)")->required();
  classify_cmd->add_option("--alpha", cl_alpha, "triple a0,a1,a2")->required();
  classify_cmd->add_option("--mode", cl_mode, "fast|full|cross_validate");
  classify_cmd->add_option("--format", cl_format, "text|json|csv");
  classify_cmd->add_option("--out", cl_out, "also write the row to this path");

  // survey
  auto* survey_cmd = app.add_subcommand("survey", "Classify every alpha over (p, l) grids");
  std::vector<std::int64_t> sv_p, sv_l;
  std::string sv_mode = "cross_validate", sv_format = "json", sv_out, sv_cache;
  bool sv_dedupe = false;
  int sv_workers = 1;
  std::uint64_t sv_seed = 0;
  survey_cmd->add_option("--p", sv_p, "characteristic primes")->required()->delimiter(',');
  survey_cmd->add_option("--l", sv_l, "Fermat degrees")->required()->delimiter(',');
  survey_cmd->add_option("--mode", sv_mode, "fast|full|cross_validate");
  survey_cmd->add_flag("--dedupe", sv_dedupe, "collapse alpha under permutation and unit scaling");
  survey_cmd->add_option("--format", sv_format, "json|csv");
  survey_cmd->add_option("--out", sv_out, "report path (JSON lines or CSV)");
  survey_cmd->add_option("--cache", sv_cache, "persistent result cache path");
  survey_cmd->add_option("--workers", sv_workers, "worker thread count");
  survey_cmd->add_option("--seed", sv_seed, "seed (reserved; surveys are deterministic)");

  // selftest
  auto* selftest_cmd = app.add_subcommand("selftest", "Run internal identity/invariant suites");
  std::string st_level = "quick";
  std::uint64_t st_seed = 12345;
  selftest_cmd->add_option("--level", st_level, "quick|deep");
  selftest_cmd->add_option("--seed", st_seed, "seed for randomized suites");

  // validate
  auto* validate_cmd = app.add_subcommand(
      "validate", "Jacobi-sum ground truth: weight checks and the split-prime slope oracle");
  std::int64_t va_p = 0, va_l = 0;
  validate_cmd->add_option("--p", va_p, "characteristic prime (with --l)");
  validate_cmd->add_option("--l", va_l, "Fermat degree (with --p)");

  // lsum-table
  auto* lsum_cmd = app.add_subcommand(
      "lsum-table", "Emit the exact sums sum_c <c> chi(c)^(-1) for every odd character");
  std::int64_t ls_l = 0;
  std::string ls_format = "json", ls_out;
  lsum_cmd->add_option("--l", ls_l, "Fermat degree (odd prime)")->required();
  lsum_cmd->add_option("--format", ls_format, "json|csv");
  lsum_cmd->add_option("--out", ls_out, "write table to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (classify_cmd->parsed()) {
      const auto mode = lefschetz::mode_from_string(cl_mode);
      if (!mode) throw std::invalid_argument("unknown mode: " + cl_mode);
      const auto alpha = parse_alpha(cl_alpha);
      const auto ctx = lefschetz::build_context(cl_p, cl_l);
      const auto rec = lefschetz::classify(alpha, ctx, *mode);
      if (cl_format == "json") {
        std::cout << lefschetz::record_to_json(rec).dump() << "\n";
      } else if (cl_format == "csv") {
        std::cout << lefschetz::csv_header() << "\n" << lefschetz::record_to_csv(rec) << "\n";
      } else {
        print_human(rec, std::cout);
      }
      if (!cl_out.empty()) {
        std::ofstream out(cl_out, std::ios::trunc);
        if (!out) throw std::invalid_argument("cannot write: " + cl_out);
        if (cl_format == "csv") {
          out << lefschetz::csv_header() << "\n" << lefschetz::record_to_csv(rec) << "\n";
        } else {
          out << lefschetz::record_to_json(rec).dump() << "\n";
        }
      }
      return kExitOk;
    }

    if (survey_cmd->parsed()) {
      lefschetz::SurveyConfig config;
      config.p_list = sv_p;
      config.l_list = sv_l;
      const auto mode = lefschetz::mode_from_string(sv_mode);
      if (!mode) throw std::invalid_argument("unknown mode: " + sv_mode);
      config.mode = *mode;
      config.dedupe = sv_dedupe;
      const auto format = lefschetz::format_from_string(sv_format);
      if (!format) throw std::invalid_argument("unknown format: " + sv_format);
      config.format = *format;
      config.out_path = sv_out;
      config.cache_path = default_cache_path(sv_cache);
      config.workers = sv_workers;
      config.seed = sv_seed;
      lefschetz::run_survey(config, std::cout);
      return kExitOk;
    }

    if (selftest_cmd->parsed()) {
      lefschetz::SelftestLevel level;
      if (st_level == "quick") {
        level = lefschetz::SelftestLevel::Quick;
      } else if (st_level == "deep") {
        level = lefschetz::SelftestLevel::Deep;
      } else {
        throw std::invalid_argument("unknown level: " + st_level);
      }
      const int failures = lefschetz::run_selftest(level, st_seed, std::cout);
      return failures == 0 ? kExitOk : 1;
    }

    if (validate_cmd->parsed()) {
      std::vector<std::pair<std::int64_t, std::int64_t>> weight_pairs, oracle_pairs;
      if (va_p != 0 || va_l != 0) {
        if (va_p == 0 || va_l == 0) throw std::invalid_argument("validate needs both --p and --l");
        weight_pairs = {{va_p, va_l}};
        if (lefschetz::multiplicative_order(va_p, va_l) == 1 && va_p <= 10000) {
          oracle_pairs = weight_pairs;
        }
      } else {
        weight_pairs = {{7, 3}, {13, 3}, {11, 5}, {31, 5}, {29, 7}};
        oracle_pairs = {{7, 3}, {11, 5}, {29, 7}, {23, 11}};
      }
      bool all_ok = true;
      std::cout << "psi normalization: psi(g) = zeta_l with g the table generator of F_q^x\n";
      for (const auto& [p, l] : weight_pairs) {
        const std::int64_t f = lefschetz::multiplicative_order(p, l);
        const auto field = lefschetz::build_field_table(p, f);
        lefschetz::Rational q(1);
        for (std::int64_t i = 0; i < f; ++i) q *= p;
        bool ok = true;
        for (const auto& a : lefschetz::enumerate_alpha(l, false)) {
          const auto jac = lefschetz::jacobi_sum(a, field, l);
          if (!(jac * jac.conjugate() ==
                lefschetz::CyclotomicElement::from_rational(l, q))) {
            ok = false;
            break;
          }
        }
        all_ok = all_ok && ok;
        std::cout << (ok ? "PASS" : "FAIL") << "  weight j*conj(j) = p^f  p=" << p << " l=" << l
                  << " (q=" << q << ", generator=" << field.generator << ")\n";
      }
      for (const auto& [p, l] : oracle_pairs) {
        const auto ctx = lefschetz::build_context(p, l);
        const auto oracle = lefschetz::make_slope_oracle_f1(ctx);
        const auto field = lefschetz::build_field_table(p, 1);
        bool ok = true;
        for (const auto& a : lefschetz::enumerate_alpha(l, false)) {
          const auto alpha = lefschetz::make_alpha_triple(a, ctx);
          const auto jac = lefschetz::jacobi_sum(a, field, l);
          const lefschetz::SlopeFunction e(ctx, alpha);
          for (std::int64_t c = 1; c < l; ++c) {
            if (lefschetz::Rational(oracle.valuation(jac, c)) != e.at(c) + lefschetz::Rational(1, 2)) {
              ok = false;
              break;
            }
          }
          if (!ok) break;
        }
        all_ok = all_ok && ok;
        std::cout << (ok ? "PASS" : "FAIL") << "  slope oracle (f=1)  p=" << p << " l=" << l
                  << "  pairing: prime(c) <-> root " << oracle.base_root << "^<c^-1> mod p\n";
      }
      return all_ok ? kExitOk : 1;
    }

    if (lsum_cmd->parsed()) {
      const auto ctx = lefschetz::build_context(2, ls_l);  // p only fixes the frame; sums ignore H
      std::ostringstream body;
      if (ls_format == "csv") {
        body << "l,k,order,coeffs,nonzero\n";
        for (std::int64_t k = 1; k < ls_l - 1; k += 2) {
          const auto chi = lefschetz::make_character(ctx, k);
          const auto s = lefschetz::l_sum(chi, ctx);
          body << ls_l << ',' << k << ',' << chi.order << ',' << '"' << s.to_string() << '"' << ','
               << (s.is_zero() ? "false" : "true") << '\n';
        }
      } else if (ls_format == "json") {
        for (std::int64_t k = 1; k < ls_l - 1; k += 2) {
          const auto chi = lefschetz::make_character(ctx, k);
          const auto s = lefschetz::l_sum(chi, ctx);
          nlohmann::ordered_json j;
          j["schema_version"] = lefschetz::kSchemaVersion;
          j["l"] = ls_l;
          j["k"] = k;
          j["order"] = chi.order;
          nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
          for (const auto& c : s.coeffs()) coeffs.push_back(lefschetz::rational_to_string(c));
          j["coeffs"] = coeffs;
          j["nonzero"] = !s.is_zero();
          body << j.dump() << '\n';
        }
      } else {
        throw std::invalid_argument("unknown format: " + ls_format);
      }
      if (ls_out.empty()) {
        std::cout << body.str();
      } else {
        std::ofstream out(ls_out, std::ios::trunc);
        if (!out) throw std::invalid_argument("cannot write: " + ls_out);
        out << body.str();
      }
      return kExitOk;
    }
  } catch (const lefschetz::engine_error& ex) {
    std::cerr << "engine error: " << ex.what() << "\n";
    return kExitEngine;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
