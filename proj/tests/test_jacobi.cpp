#include "lefschetz/jacobi.hpp"

#include "lefschetz/slopes.hpp"
#include "lefschetz/survey.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace lefschetz;

namespace {

// Galois twist zeta_l -> zeta_l^m; stands in for re-normalizing psi.
CyclotomicElement galois_twist(const CyclotomicElement& x, std::int64_t m) {
  const std::int64_t l = x.conductor();
  CyclotomicElement out = CyclotomicElement::zero(l);
  for (std::size_t j = 0; j < x.coeffs().size(); ++j) {
    if (x.coeffs()[j] != 0) {
      out = out + CyclotomicElement::root_of_unity(l, static_cast<std::int64_t>(j) * m)
                      .scalar_mul(x.coeffs()[j]);
    }
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("jacobi");

TEST_CASE("prime field table") {
  const auto f7 = build_field_table(7, 1);
  CHECK(f7.q == 7);
  CHECK(f7.generator == 3);
  CHECK(f7.modulus == std::vector<std::int64_t>{0, 1});
  CHECK(f7.mul(3, 5) == 1);
  CHECK(f7.add(6, 1) == 0);
  CHECK(f7.neg(2) == 5);
}

TEST_CASE("extension field table: F_8") {
  const auto f8 = build_field_table(2, 3);
  CHECK(f8.q == 8);
  // lex-least monic irreducible cubic over F_2 is x^3 + x + 1
  CHECK(f8.modulus == std::vector<std::int64_t>{1, 1, 0, 1});
  // multiplicative group is cyclic of order 7
  std::int64_t x = 1;
  std::set<std::int64_t> seen;
  for (int i = 0; i < 7; ++i) {
    x = f8.mul(x, f8.generator);
    seen.insert(x);
  }
  CHECK(seen.size() == 7);
  CHECK(x == 1);
}

TEST_CASE("field size cap") {
  CHECK_THROWS_AS(build_field_table(2, 21), std::invalid_argument);
  CHECK_THROWS_AS(build_field_table(4, 1), std::invalid_argument);
}

TEST_CASE("jacobi sum frozen value for l=3 over F_7") {
  const auto field = build_field_table(7, 1);
  const auto j = jacobi_sum({1, 1, 1}, field, 3);
  // with psi(3) = zeta_3 the exact value is 1 + 3 zeta_3
  CHECK(j == CyclotomicElement(3, {Rational(1), Rational(3)}));
  CHECK(j * j.conjugate() == CyclotomicElement::from_rational(3, Rational(7)));
}

TEST_CASE("jacobi sum input validation") {
  const auto field = build_field_table(7, 1);
  CHECK_THROWS_AS(jacobi_sum({1, 1, 1}, field, 5), std::invalid_argument);  // 5 does not divide 6
  CHECK_THROWS_AS(jacobi_sum({3, 1, 2}, field, 3), std::invalid_argument);  // zero entry mod 3
}

TEST_CASE("weight identity j * conj(j) = p^f") {
  for (auto [p, l] : std::vector<std::pair<std::int64_t, std::int64_t>>{
           {7, 3}, {13, 3}, {11, 5}, {2, 7}, {3, 13}}) {
    const std::int64_t f = multiplicative_order(p, l);
    const auto field = build_field_table(p, f);
    Rational q(1);
    for (std::int64_t i = 0; i < f; ++i) q *= p;
    for (const auto& raw : enumerate_alpha(l, false)) {
      const auto j = jacobi_sum(raw, field, l);
      CHECK(j * j.conjugate() == CyclotomicElement::from_rational(l, q));
    }
  }
}

TEST_CASE("slope oracle agrees with the slope formula pointwise") {
  for (auto [p, l] : std::vector<std::pair<std::int64_t, std::int64_t>>{{7, 3}, {11, 5}}) {
    const auto ctx = build_context(p, l);
    const auto oracle = make_slope_oracle_f1(ctx);
    const auto field = build_field_table(p, 1);
    for (const auto& raw : enumerate_alpha(l, false)) {
      const auto alpha = make_alpha_triple(raw, ctx);
      const auto j = jacobi_sum(raw, field, l);
      const SlopeFunction e(ctx, alpha);
      for (std::int64_t c = 1; c < l; ++c) {
        CHECK(Rational(oracle.valuation(j, c)) == e.at(c) + Rational(1, 2));
      }
    }
  }
}

TEST_CASE("spec-level oracle call") {
  const auto ctx = build_context(11, 5);
  // alpha (1,1,3): slopes are 0 at the stabilizer side and 1 opposite
  const auto alpha = make_alpha_triple({1, 1, 3}, ctx);
  const SlopeFunction e(ctx, alpha);
  for (std::int64_t c = 1; c < 5; ++c) {
    CHECK(slope_oracle_f1({1, 1, 3}, ctx, c) == e.at(c) + Rational(1, 2));
  }
}

TEST_CASE("valuations at c and -c sum to one") {
  const auto ctx = build_context(11, 5);
  const auto oracle = make_slope_oracle_f1(ctx);
  const auto field = build_field_table(11, 1);
  for (const auto& raw : enumerate_alpha(5, false)) {
    const auto j = jacobi_sum(raw, field, 5);
    for (std::int64_t c = 1; c < 5; ++c) {
      CHECK(oracle.valuation(j, c) + oracle.valuation(j, 5 - c) == 1);
    }
  }
}

TEST_CASE("total valuation counts the slope-one primes") {
  const auto ctx = build_context(29, 7);
  const auto oracle = make_slope_oracle_f1(ctx);
  const auto field = build_field_table(29, 1);
  for (const auto& raw : enumerate_alpha(7, true)) {
    const auto j = jacobi_sum(raw, field, 7);
    const auto vals = oracle.valuations_at_all_roots(j);
    CHECK(std::accumulate(vals.begin(), vals.end(), std::int64_t{0}) == (7 - 1) / 2);
  }
}

TEST_CASE("valuation multiset is invariant under psi renormalization") {
  const auto ctx = build_context(11, 5);
  const auto oracle = make_slope_oracle_f1(ctx);
  const auto field = build_field_table(11, 1);
  for (const auto& raw : enumerate_alpha(5, true)) {
    const auto j = jacobi_sum(raw, field, 5);
    auto base = oracle.valuations_at_all_roots(j);
    std::sort(base.begin(), base.end());
    for (std::int64_t m = 2; m < 5; ++m) {
      auto twisted = oracle.valuations_at_all_roots(galois_twist(j, m));
      std::sort(twisted.begin(), twisted.end());
      CHECK(twisted == base);
    }
  }
}

TEST_CASE("oracle preconditions") {
  CHECK_THROWS_AS(make_slope_oracle_f1(build_context(2, 7)), std::invalid_argument);  // f = 3
}

TEST_SUITE_END();
