#pragma once

#include "lefschetz/cyclotomic.hpp"
#include "lefschetz/residue.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace lefschetz {

// Explicit model of F_{p^f} for fields of size up to 10^6: elements are
// integers 0..q-1 encoding coefficient vectors base p against the
// lexicographically least monic irreducible of degree f (coefficient
// vectors compared as base-p integers).  Multiplication runs through
// discrete log/exp tables over a verified generator.
struct FiniteFieldTable {
  std::int64_t p = 0;
  std::int64_t f = 0;
  std::int64_t q = 0;
  std::vector<std::int64_t> modulus;  // monic, length f+1
  std::int64_t generator = 0;
  std::vector<std::int32_t> exp_table;  // exp_table[i] = generator^i, size q-1
  std::vector<std::int32_t> log_table;  // log_table[x], x in [1, q-1]

  std::int64_t add(std::int64_t a, std::int64_t b) const;
  std::int64_t neg(std::int64_t a) const;
  std::int64_t mul(std::int64_t a, std::int64_t b) const;
};

inline constexpr std::int64_t kMaxFieldSize = 1000000;

FiniteFieldTable build_field_table(std::int64_t p, std::int64_t f);

// j(alpha) = -sum over v1+v2 = -1 (both nonzero) of psi(v1)^a1 psi(v2)^a2,
// as an exact element of Q(zeta_l).  psi is normalized by
// psi(generator) = zeta_l; any other choice moves the result by a Galois
// conjugate and changes no verdict.  Requires l | q - 1.
CyclotomicElement jacobi_sum(const std::array<std::int64_t, 3>& alpha,
                             const FiniteFieldTable& field, std::int64_t l);

// Independent slope oracle for split primes (f = 1, p = 1 mod l, p <= 10^4).
// The l-th roots of unity mod p are Hensel-lifted to mod p^3 (u -> u^(p^2));
// evaluating the Jacobi sum at a lifted root and taking the p-adic valuation
// reads off the slope at the corresponding prime.  Valuations of a weight-1
// sum at split primes are 0 or 1; anything deeper is an engine fault.
struct SlopeOracleF1 {
  std::int64_t p = 0;
  std::int64_t l = 0;
  std::int64_t base_root = 0;       // calibrated l-th root of unity mod p
  std::int64_t uncalibrated = 0;    // generator^((p-1)/l): the search origin

  // Valuation at the prime labeled by unit c: evaluate at base_root^(<c^-1>).
  std::int64_t valuation(const CyclotomicElement& jac, std::int64_t c) const;

  // Valuations at all l-1 roots (multiset source; calibration-free).
  std::vector<std::int64_t> valuations_at_all_roots(const CyclotomicElement& jac) const;
};

// Builds the oracle and calibrates the root <-> coset pairing by requiring
// pointwise agreement with the slope formula across every alpha.  The
// calibrated pairing is part of the oracle's reported convention.
SlopeOracleF1 make_slope_oracle_f1(const ModulusContext& ctx);

// Spec-level convenience: the valuation the oracle assigns to (alpha, c).
Rational slope_oracle_f1(const std::array<std::int64_t, 3>& alpha, const ModulusContext& ctx,
                         std::int64_t c);

}  // namespace lefschetz
