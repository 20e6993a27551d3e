#include "lefschetz/cyclotomic.hpp"

#include <doctest.h>

#include <random>
#include <thread>

using namespace lefschetz;

namespace {

// Random element with small rational coefficients.
CyclotomicElement random_element(std::int64_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> num(-8, 8);
  std::uniform_int_distribution<std::int64_t> den(1, 5);
  std::vector<Rational> c(static_cast<std::size_t>(euler_phi(n)));
  for (auto& x : c) x = Rational(num(rng), den(rng));
  return CyclotomicElement(n, std::move(c));
}

}  // namespace

TEST_SUITE_BEGIN("cyclotomic");

TEST_CASE("first cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1).coeffs == std::vector<BigInt>{-1, 1});
  CHECK(cyclotomic_polynomial(6).coeffs == std::vector<BigInt>{1, -1, 1});
  CHECK(cyclotomic_polynomial(7).coeffs == std::vector<BigInt>{1, 1, 1, 1, 1, 1, 1});
  CHECK(cyclotomic_polynomial(12).coeffs == std::vector<BigInt>{1, 0, -1, 0, 1});
}

TEST_CASE("degree and leading coefficient up to 60") {
  for (std::int64_t n = 1; n <= 60; ++n) {
    const auto& phi = cyclotomic_polynomial(n);
    CHECK(phi.degree() == euler_phi(n));
    CHECK(phi.coeffs.back() == 1);
  }
}

TEST_CASE("zeta_n is a root of Phi_n and has order dividing n, up to 60") {
  for (std::int64_t n = 1; n <= 60; ++n) {
    const auto z = CyclotomicElement::root_of_unity(n, 1);
    // Phi_n(zeta_n) = 0 by Horner in the field
    const auto& phi = cyclotomic_polynomial(n);
    CyclotomicElement acc = CyclotomicElement::from_rational(n, Rational(phi.coeffs.back()));
    for (std::size_t i = phi.coeffs.size() - 1; i-- > 0;) {
      acc = acc * z + CyclotomicElement::from_rational(n, Rational(phi.coeffs[i]));
    }
    CHECK(acc.is_zero());
    // zeta_n^n = 1 via exponent arithmetic
    CHECK(CyclotomicElement::root_of_unity(n, n) == CyclotomicElement::one(n));
  }
}

TEST_CASE("roots of unity basics") {
  CHECK(CyclotomicElement::root_of_unity(3, 0) == CyclotomicElement::one(3));
  const auto sum = CyclotomicElement::root_of_unity(3, 1) + CyclotomicElement::root_of_unity(3, 2);
  CHECK(sum == CyclotomicElement::from_rational(3, Rational(-1)));
  // zeta_6 satisfies its minimal polynomial x^2 - x + 1
  const auto z6 = CyclotomicElement::root_of_unity(6, 1);
  CHECK((z6 * z6 - z6 + CyclotomicElement::one(6)).is_zero());
}

TEST_CASE("ring operations") {
  const auto z7 = CyclotomicElement::root_of_unity(7, 1);
  const auto z7_6 = CyclotomicElement::root_of_unity(7, 6);
  CHECK(z7 * z7_6 == CyclotomicElement::one(7));

  const auto z5 = CyclotomicElement::root_of_unity(5, 1);
  CHECK(z5.scalar_mul(Rational(2)).scalar_mul(Rational(1, 2)) == z5);

  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    const auto x = random_element(12, rng);
    CHECK((x + (-x)).is_zero());
  }
}

TEST_CASE("conductor mismatch is rejected") {
  const auto a = CyclotomicElement::one(5);
  const auto b = CyclotomicElement::one(7);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("conjugation") {
  CHECK(CyclotomicElement::root_of_unity(5, 1).conjugate() ==
        CyclotomicElement::root_of_unity(5, 4));
  const auto r = CyclotomicElement::from_rational(9, Rational(3, 7));
  CHECK(r.conjugate() == r);

  std::mt19937_64 rng(11);
  for (std::int64_t n : {5, 8, 12, 15}) {
    for (int t = 0; t < 10; ++t) {
      const auto x = random_element(n, rng);
      const auto y = random_element(n, rng);
      // involution
      CHECK(x.conjugate().conjugate() == x);
      // ring homomorphism
      CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
      CHECK((x + y).conjugate() == x.conjugate() + y.conjugate());
      // x * conj(x) is fixed by conjugation
      const auto norm = x * x.conjugate();
      CHECK(norm.conjugate() == norm);
    }
  }
}

TEST_CASE("exact zero tests") {
  const auto s3 = CyclotomicElement::one(3) + CyclotomicElement::root_of_unity(3, 1) +
                  CyclotomicElement::root_of_unity(3, 2);
  CHECK(s3.is_zero());
  CHECK_FALSE((CyclotomicElement::one(7) + CyclotomicElement::root_of_unity(7, 1)).is_zero());
  for (std::int64_t n = 2; n <= 12; ++n) {
    CyclotomicElement geo = CyclotomicElement::zero(n);
    for (std::int64_t k = 0; k < n; ++k) geo = geo + CyclotomicElement::root_of_unity(n, k);
    CHECK(geo.is_zero());
  }
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937_64 rng(23);
  for (std::int64_t n : {7, 10, 16}) {
    for (int t = 0; t < 10; ++t) {
      const auto x = random_element(n, rng);
      const auto y = random_element(n, rng);
      const auto z = random_element(n, rng);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x * y == y * x);
    }
  }
}

TEST_CASE("polynomial cache is safe under concurrent first use") {
  std::vector<std::thread> ts;
  std::vector<CyclotomicElement> results(8, CyclotomicElement::zero(1));
  for (int i = 0; i < 8; ++i) {
    ts.emplace_back([i, &results] {
      // all threads race on the same fresh conductors
      for (std::int64_t n : {49, 50, 51, 52, 53}) {
        auto z = CyclotomicElement::root_of_unity(n, 1 + i % 3);
        results[static_cast<std::size_t>(i)] = z * z.conjugate();
      }
    });
  }
  for (auto& t : ts) t.join();
  for (int i = 0; i < 8; ++i) {
    CHECK(results[static_cast<std::size_t>(i)] ==
          CyclotomicElement::one(53));
  }
}

TEST_SUITE_END();
