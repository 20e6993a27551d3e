#pragma once

#include "lefschetz/rational.hpp"
#include "lefschetz/residue.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace lefschetz {

// The slope-deviation function e of the Jacobi-sum Weil germ attached to
// alpha: e(c) = s(c q) - 1/2 at the prime of Q(mu_l) indexed by the unit c,
// with the base prime fixed at the identity coset.  Values satisfy
//   e(c) + e(-c) = 0,      e(ch) = e(c) for h in H,
//   -1/2 <= e(c) <= 1/2,   2fl e(c) in Z,   sum_c e(c) = 0.
class SlopeFunction {
 public:
  SlopeFunction(const ModulusContext& ctx, const AlphaTriple& alpha);

  const Rational& at(std::int64_t c) const;  // c nonzero mod l
  std::int64_t modulus() const { return l_; }
  std::map<std::int64_t, Rational> as_weight_map() const;

 private:
  std::int64_t l_;
  std::vector<Rational> values_;  // index c in [1, l-1]
};

// e(c) = (1/(fl)) sum_i sum_{h in H} (<h a_i c^(-1)> - l/2), exact.
Rational slope_deviation(const AlphaTriple& alpha, const ModulusContext& ctx, std::int64_t c);

// The d x r matrix whose full column rank decides the classification:
// rows are the primes over p (cosets of H, canonical least reps), columns a
// half-system of stabilizer cosets (one of {tH_a, -tH_a} per pair, chosen by
// walking reps ascending and skipping any coset whose negative was kept).
// Entry (i, j) is e(t_j^(-1) c_i); this is the covariance rule
// s_{sigma pi}(v) = s_pi(sigma^(-1) v) written in coset coordinates, so the
// entries do not depend on which representative of t_j H_alpha is used.
struct SlopeMatrix {
  std::vector<std::vector<Rational>> entries;  // d_primes rows, r columns
  std::vector<std::int64_t> row_labels;        // coset reps of H
  std::vector<std::int64_t> col_labels;        // half-system reps of H_alpha
};

SlopeMatrix build_slope_matrix(const AlphaTriple& alpha, const ModulusContext& ctx);

// Rank over Q.  When clear_factor is positive the matrix is scaled by it and
// must become integral (the slope matrices use 2fl, a provable bound);
// otherwise denominators are cleared row by row.  Elimination is
// fraction-free (Bareiss) in exact big integers.
std::int64_t rational_rank(const std::vector<std::vector<Rational>>& m,
                           std::int64_t clear_factor = 0);

// Smallest n with n * (e(c) + 1/2) integral for every c: the order of the
// endomorphism algebra in the Brauer group of the center.  Divides f; odd
// whenever f is odd (both verified, not assumed).
std::int64_t brauer_order(const AlphaTriple& alpha, const ModulusContext& ctx);

// n * center_degree / 2: the dimension of the simple factor when p splits
// completely in the center.  Used to gate the elliptic fast path.
std::int64_t simple_factor_dimension(const AlphaTriple& alpha, const ModulusContext& ctx);

}  // namespace lefschetz
