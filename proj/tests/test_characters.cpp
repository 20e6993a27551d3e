#include "lefschetz/characters.hpp"

#include <doctest.h>

#include <random>

using namespace lefschetz;

TEST_SUITE_BEGIN("characters");

TEST_CASE("trivial character is identically one") {
  const auto ctx = build_context(2, 7);
  const auto chi = make_character(ctx, 0);
  for (std::int64_t c = 1; c < 7; ++c) {
    CHECK(evaluate(chi, ctx, c) == CyclotomicElement::one(6));
  }
}

TEST_CASE("evaluation against the generator table") {
  const auto ctx7 = build_context(2, 7);  // g = 3
  const auto chi3 = make_character(ctx7, 3);
  // -1 = 3^3 mod 7, so chi_3(-1) = zeta_6^9 = zeta_6^3 = -1
  CHECK(evaluate(chi3, ctx7, -1) == CyclotomicElement::from_rational(6, Rational(-1)));

  const auto ctx5 = build_context(3, 5);  // g = 2
  const auto chi2 = make_character(ctx5, 2);
  CHECK(evaluate(chi2, ctx5, 4) == CyclotomicElement::one(4));
  CHECK_THROWS_AS(evaluate(chi2, ctx5, 0), std::invalid_argument);
}

TEST_CASE("parity flag agrees with the value at -1") {
  CHECK_FALSE(is_odd(make_character(build_context(2, 7), 0)));
  CHECK(is_odd(make_character(build_context(2, 7), 1)));
  for (std::int64_t l : {7, 13, 31}) {
    const auto ctx = build_context(2, l);
    for (std::int64_t k = 0; k < l - 1; ++k) {
      const auto chi = make_character(ctx, k);
      const auto at_minus_one = evaluate(chi, ctx, l - 1);
      const bool minus = at_minus_one == CyclotomicElement::from_rational(l - 1, Rational(-1));
      CHECK(is_odd(chi) == minus);
    }
  }
}

TEST_CASE("characters trivial on a stabilizer") {
  const auto ctx = build_context(2, 7);
  const auto chis = characters_trivial_on({1, 2, 4}, ctx);
  REQUIRE(chis.size() == 1);
  CHECK(chis[0].exponent == 3);
  // enumeration oracle: the returned characters are exactly the odd ones
  // whose value is 1 on every element of the subgroup
  for (std::int64_t k = 0; k < 6; ++k) {
    const auto chi = make_character(ctx, k);
    bool trivial = true;
    for (std::int64_t h : {1, 2, 4}) {
      if (!(evaluate(chi, ctx, h) == CyclotomicElement::one(6))) trivial = false;
    }
    const bool expected = trivial && is_odd(chi);
    bool in_list = false;
    for (const auto& c : chis) in_list = in_list || c.exponent == k;
    CHECK(in_list == expected);
  }
}

TEST_CASE("trivial stabilizer admits every odd character") {
  const auto ctx = build_context(11, 5);  // f = 1, H = {1}
  const auto chis = characters_trivial_on({1}, ctx);
  REQUIRE(chis.size() == 2);
  CHECK(chis[0].exponent == 1);
  CHECK(chis[1].exponent == 3);
}

TEST_CASE("full-group stabilizer admits none") {
  const auto ctx = build_context(3, 5);  // H is everything
  CHECK(characters_trivial_on({1, 2, 3, 4}, ctx).empty());
}

TEST_CASE("subgroup validation") {
  const auto ctx = build_context(2, 7);
  CHECK_THROWS_AS(characters_trivial_on({1, 2}, ctx), std::invalid_argument);   // not closed
  CHECK_THROWS_AS(characters_trivial_on({1}, ctx), std::invalid_argument);      // misses H
}

TEST_CASE("alpha character sums") {
  const auto ctx = build_context(2, 7);
  const auto alpha = make_alpha_triple({1, 2, 4}, ctx);
  // 2 = 3^2 and 4 = 3^4, so the k=1 sum is 1 + zeta_6^2 + zeta_6^4 = 0
  CHECK(alpha_character_sum(make_character(ctx, 1), ctx, alpha).is_zero());
  CHECK(alpha_character_sum(make_character(ctx, 0), ctx, alpha) ==
        CyclotomicElement::from_rational(6, Rational(3)));

  // (a,a,b): the sum can never vanish
  const auto aab = make_alpha_triple({1, 1, 5}, ctx);
  for (std::int64_t k = 0; k < 6; ++k) {
    CHECK_FALSE(alpha_character_sum(make_character(ctx, k), ctx, aab).is_zero());
  }
}

TEST_CASE("sum of three roots vanishes exactly on the cube-root pattern") {
  for (std::int64_t l : {7, 13, 19}) {
    const auto ctx = build_context(2, l);
    const std::int64_t n = l - 1;
    const auto omega = CyclotomicElement::root_of_unity(n, n / 3);
    const auto omega2 = CyclotomicElement::root_of_unity(n, 2 * n / 3);
    for (std::int64_t a0 = 1; a0 < l; ++a0) {
      for (std::int64_t a1 = 1; a1 < l; ++a1) {
        const std::int64_t a2 = ((-(a0 + a1)) % l + l) % l;
        if (a2 == 0) continue;
        const auto alpha = make_alpha_triple({a0, a1, a2}, ctx);
        for (std::int64_t k = 0; k < n; ++k) {
          const auto chi = make_character(ctx, k);
          const auto inv = make_character(ctx, -k);
          const auto r1 = evaluate(chi, ctx, a1) * evaluate(inv, ctx, a0);
          const auto r2 = evaluate(chi, ctx, a2) * evaluate(inv, ctx, a0);
          const bool closed_form =
              (r1 == omega && r2 == omega2) || (r1 == omega2 && r2 == omega);
          CHECK(alpha_character_sum(chi, ctx, alpha).is_zero() == closed_form);
        }
      }
    }
  }
}

TEST_CASE("orthogonality and weighted sums") {
  for (std::int64_t l : {7, 13}) {
    const auto ctx = build_context(2, l);
    std::map<std::int64_t, Rational> ones;
    for (std::int64_t c = 1; c < l; ++c) ones[c] = 1;
    for (std::int64_t k = 0; k < l - 1; ++k) {
      const auto s = weighted_character_sum(make_character(ctx, k), ctx, ones);
      if (k == 0) {
        CHECK(s == CyclotomicElement::from_rational(l - 1, Rational(l - 1)));
      } else {
        CHECK(s.is_zero());
      }
    }
  }
}

TEST_CASE("weighted sum demands a full weight map") {
  const auto ctx = build_context(2, 7);
  std::map<std::int64_t, Rational> partial{{1, Rational(1)}};
  CHECK_THROWS_AS(weighted_character_sum(make_character(ctx, 1), ctx, partial),
                  std::invalid_argument);
}

TEST_CASE("multiplicativity on random pairs") {
  std::mt19937_64 rng(31);
  for (std::int64_t l : {13, 29}) {
    const auto ctx = build_context(2, l);
    std::uniform_int_distribution<std::int64_t> unit(1, l - 1);
    for (int t = 0; t < 50; ++t) {
      const std::int64_t k = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(l - 1));
      const auto chi = make_character(ctx, k);
      const std::int64_t a = unit(rng), b = unit(rng);
      CHECK(evaluate(chi, ctx, a) * evaluate(chi, ctx, b) == evaluate(chi, ctx, a * b % l));
    }
  }
}

TEST_CASE("l-sum values") {
  // l = 3: 1*chi(1)^-1 + 2*chi(2)^-1 = 1 - 2 = -1
  const auto ctx3 = build_context(7, 3);
  CHECK(l_sum(make_character(ctx3, 1), ctx3) ==
        CyclotomicElement::from_rational(2, Rational(-1)));

  // l = 5, k = 1, g = 2: the exact value is -3 + zeta_4
  const auto ctx5 = build_context(11, 5);
  REQUIRE(ctx5.generator == 2);
  const auto s = l_sum(make_character(ctx5, 1), ctx5);
  CHECK(s == CyclotomicElement(4, {Rational(-3), Rational(1)}));

  // direct four-term oracle for the same value
  CyclotomicElement direct = CyclotomicElement::zero(4);
  const auto inv = make_character(ctx5, -1);
  for (std::int64_t c = 1; c < 5; ++c) {
    direct = direct + evaluate(inv, ctx5, c).scalar_mul(Rational(c));
  }
  CHECK(s == direct);
}

TEST_CASE("l-sum rejects even characters and never vanishes for odd ones") {
  for (std::int64_t l : {3, 5, 7, 11, 13}) {
    const auto ctx = build_context(2, l);
    CHECK_THROWS_AS(l_sum(make_character(ctx, 0), ctx), std::invalid_argument);
    for (std::int64_t k = 1; k < l - 1; k += 2) {
      CHECK_FALSE(l_sum(make_character(ctx, k), ctx).is_zero());
    }
  }
}

TEST_CASE("count of qualifying characters follows the minus-one dichotomy") {
  for (std::int64_t l : {5, 7, 11, 13, 19, 31}) {
    for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
      if (p == l) continue;
      const auto ctx = build_context(p, l);
      for (std::int64_t a0 : {1, 2}) {
        const std::int64_t a2 = ((-(a0 + 1)) % l + l) % l;
        if (a2 == 0) continue;
        const auto alpha = make_alpha_triple({a0, 1, a2}, ctx);
        const auto count =
            static_cast<std::int64_t>(characters_trivial_on(alpha.h_alpha, ctx).size());
        const bool minus_one_in = std::binary_search(alpha.h_alpha.begin(), alpha.h_alpha.end(),
                                                     l - 1);
        if (minus_one_in) {
          CHECK(count == 0);
        } else {
          CHECK(count == (l - 1) / (2 * alpha.h_alpha_size));
        }
      }
    }
  }
}

TEST_SUITE_END();
