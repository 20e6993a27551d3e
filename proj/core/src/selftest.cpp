#include "lefschetz/selftest.hpp"

#include "lefschetz/characters.hpp"
#include "lefschetz/criteria.hpp"
#include "lefschetz/jacobi.hpp"
#include "lefschetz/slopes.hpp"
#include "lefschetz/survey.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <random>
#include <vector>

namespace lefschetz {

namespace {

std::vector<std::pair<std::int64_t, std::int64_t>> odd_degree_pairs(std::int64_t max_l) {
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::int64_t l : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    if (l > max_l) break;
    for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
      if (p == l) continue;
      if (multiplicative_order(p, l) % 2 == 1) pairs.emplace_back(p, l);
    }
  }
  return pairs;
}

}  // namespace

int run_selftest(SelftestLevel level, std::uint64_t seed, std::ostream& out) {
  const bool deep = level == SelftestLevel::Deep;
  int failures = 0;

  auto suite = [&](const std::string& name, const std::function<bool()>& body) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
      ok = body();
    } catch (const std::exception& ex) {
      note = std::string(" (") + ex.what() + ")";
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    out << (ok ? "PASS" : "FAIL") << "  " << name << "  [" << ms << " ms]" << note << '\n';
    if (!ok) ++failures;
  };

  suite("bridge_identity", [&] {
    for (const auto& [p, l] : odd_degree_pairs(deep ? 31 : 13)) {
      const ModulusContext ctx = build_context(p, l);
      for (const auto& a : enumerate_alpha(l, true)) {
        const AlphaTriple alpha = make_alpha_triple(a, ctx);
        for (const auto& chi : characters_trivial_on(alpha.h_alpha, ctx)) {
          if (!bridge_identity_check(alpha, ctx, chi)) return false;
        }
      }
    }
    return true;
  });

  suite("group_determinant", [&] {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> num(-9, 9);
    std::uniform_int_distribution<std::int64_t> den(1, 7);
    const int trials = deep ? 100 : 40;
    for (int t = 0; t < trials; ++t) {
      const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 10);
      std::vector<Rational> f(static_cast<std::size_t>(n));
      for (auto& x : f) x = Rational(num(rng), den(rng));
      if (!group_determinant_check(n, f)) return false;
    }
    return true;
  });

  suite("det_factorization", [&] {
    for (const auto& [p, l] : odd_degree_pairs(deep ? 31 : 13)) {
      const ModulusContext ctx = build_context(p, l);
      for (const auto& a : enumerate_alpha(l, true)) {
        if (det_factorization_check(make_alpha_triple(a, ctx), ctx) != CheckStatus::Pass) {
          return false;
        }
      }
    }
    return true;
  });

  suite("lsum_nonvanishing", [&] {
    for (std::int64_t l : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
      if (!deep && l > 13) break;
      const ModulusContext ctx = build_context(2, l);
      for (std::int64_t k = 1; k < l - 1; k += 2) {
        if (l_sum(make_character(ctx, k), ctx).is_zero()) return false;
      }
    }
    return true;
  });

  suite("jacobi_weight", [&] {
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs = {{7, 3}, {13, 3}, {11, 5}};
    if (deep) {
      pairs.insert(pairs.end(), {{31, 5}, {29, 7}, {2, 7}, {3, 13}, {23, 11}, {2, 23}, {3, 23}, {2, 31}});
    }
    for (const auto& [p, l] : pairs) {
      const std::int64_t f = multiplicative_order(p, l);
      const FiniteFieldTable field = build_field_table(p, f);
      Rational q(1);
      for (std::int64_t i = 0; i < f; ++i) q *= p;
      for (const auto& a : enumerate_alpha(l, true)) {
        const CyclotomicElement jac = jacobi_sum(a, field, l);
        if (!(jac * jac.conjugate() == CyclotomicElement::from_rational(l, q))) return false;
      }
    }
    return true;
  });

  suite("slope_oracle_f1", [&] {
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs = {{7, 3}, {11, 5}};
    if (deep) pairs.insert(pairs.end(), {{29, 7}, {23, 11}});
    for (const auto& [p, l] : pairs) {
      const ModulusContext ctx = build_context(p, l);
      const SlopeOracleF1 oracle = make_slope_oracle_f1(ctx);
      const FiniteFieldTable field = build_field_table(p, 1);
      for (const auto& a : enumerate_alpha(l, false)) {
        const AlphaTriple alpha = make_alpha_triple(a, ctx);
        const CyclotomicElement jac = jacobi_sum(a, field, l);
        const SlopeFunction e(ctx, alpha);
        for (std::int64_t c = 1; c < l; ++c) {
          if (Rational(oracle.valuation(jac, c)) != e.at(c) + Rational(1, 2)) return false;
        }
      }
    }
    return true;
  });

  suite("slope_invariants", [&] {
    for (const auto& [p, l] : odd_degree_pairs(deep ? 31 : 13)) {
      const ModulusContext ctx = build_context(p, l);
      for (const auto& a : enumerate_alpha(l, true)) {
        const AlphaTriple alpha = make_alpha_triple(a, ctx);
        const SlopeFunction e(ctx, alpha);
        Rational total(0);
        for (std::int64_t c = 1; c < l; ++c) {
          if (e.at(c) + e.at(l - c) != 0) return false;
          if (e.at(c) < Rational(-1, 2) || e.at(c) > Rational(1, 2)) return false;
          if (denominator(e.at(c) * (2 * ctx.f * l)) != 1) return false;
          for (std::int64_t h : ctx.subgroup) {
            if (e.at(c * h % l) != e.at(c)) return false;
          }
          total += e.at(c);
        }
        if (total != 0) return false;
      }
    }
    return true;
  });

  return failures;
}

}  // namespace lefschetz
