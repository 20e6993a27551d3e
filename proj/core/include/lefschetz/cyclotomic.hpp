#pragma once

#include "lefschetz/rational.hpp"

#include <cstdint>
#include <vector>

namespace lefschetz {

std::int64_t euler_phi(std::int64_t n);

// Integer-coefficient polynomial, ascending degree.  Carrier for the
// cyclotomic polynomials; leading coefficient of any polynomial produced
// by cyclotomic_polynomial is 1.
struct IntegerPolynomial {
  std::vector<BigInt> coeffs;

  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs.size()) - 1; }
};

// Phi_n, computed by exact division of x^n - 1 by the product of Phi_d over
// proper divisors d | n.  Results are cached per process; the cache is safe
// under concurrent lookups and concurrent first insertion.
const IntegerPolynomial& cyclotomic_polynomial(std::int64_t n);

// An exact element of Q(zeta_n): a rational-coefficient polynomial in
// zeta_n, reduced mod Phi_n.  The coefficient vector always has length
// phi(n); every operation returns a reduced value.  Mixed conductors are a
// caller error; there is no implicit embedding between conductors.
class CyclotomicElement {
 public:
  CyclotomicElement(std::int64_t conductor, std::vector<Rational> coeffs);

  static CyclotomicElement zero(std::int64_t n);
  static CyclotomicElement one(std::int64_t n);
  static CyclotomicElement from_rational(std::int64_t n, const Rational& q);
  // zeta_n^k, k taken mod n
  static CyclotomicElement root_of_unity(std::int64_t n, std::int64_t k);

  std::int64_t conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  CyclotomicElement operator+(const CyclotomicElement& o) const;
  CyclotomicElement operator-(const CyclotomicElement& o) const;
  CyclotomicElement operator*(const CyclotomicElement& o) const;
  CyclotomicElement operator-() const;
  CyclotomicElement scalar_mul(const Rational& q) const;

  // Image under zeta_n -> zeta_n^(n-1), i.e. complex conjugation.
  CyclotomicElement conjugate() const;

  // Exact vanishing test: true iff the reduced coefficient vector is zero.
  // Never approximate; verdicts hinge on exact cancellations like
  // 1 + zeta_3 + zeta_3^2 = 0.
  bool is_zero() const;

  bool operator==(const CyclotomicElement& o) const;

  std::string to_string() const;

 private:
  std::int64_t conductor_;
  std::vector<Rational> coeffs_;
};

}  // namespace lefschetz
