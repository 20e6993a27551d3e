#pragma once

#include "lefschetz/characters.hpp"
#include "lefschetz/residue.hpp"
#include "lefschetz/slopes.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lefschetz {

// Rule provenance for a verdict.  The CASE_* rules are sufficiency shortcuts
// from the classification theorem; GENERAL_CRITERION means the character-sum
// criterion decided.
enum class Rule {
  SUPERSINGULAR_F_EVEN,
  DIM_ONE_ELLIPTIC,
  CASE_AAB,
  CASE_DEGREE_NOT_6,
  CASE_2POW_TIMES_3,
  GENERAL_CRITERION,
};

std::string to_string(Rule r);

enum class Mode { Fast, Full, CrossValidate };

std::string to_string(Mode m);
std::optional<Mode> mode_from_string(const std::string& s);

struct CharacterVerdict {
  bool all_nonzero = true;
  // Exponents k of odd characters trivial on H_alpha whose alpha-sum vanishes.
  std::vector<std::int64_t> failing_exponents;
};

// True iff chi(a0)+chi(a1)+chi(a2) != 0 for every odd character trivial on
// the stabilizer.  An empty character list (stabilizer of even order, e.g.
// the supersingular frame) makes the criterion vacuously true.
CharacterVerdict verdict_by_characters(const AlphaTriple& alpha, const ModulusContext& ctx);

// True iff the slope matrix has full column rank r.
bool verdict_by_rank(const AlphaTriple& alpha, const ModulusContext& ctx);

// True iff sum_c e(c) chi(c) != 0 for every odd chi trivial on the
// stabilizer.  The 1/|H_alpha| normalization cannot change vanishing and is
// applied only where reported values are compared exactly.
bool verdict_by_e(const AlphaTriple& alpha, const ModulusContext& ctx);

// Exact identity connecting the slope-weighted sum to the character data:
//   (1/d) sum_c e(c) chi(c)  ==  (1/(l d)) * (sum_i chi(a_i)) * sum_c <c> chi(c)^(-1)
// with d = |H_alpha|.  Requires chi odd and trivial on the stabilizer.
// Note the first factor on the right is sum_i chi(a_i), not its conjugate;
// the two differ only by conjugation so either form gives the same vanishing
// locus, but only this orientation is an exact identity.
bool bridge_identity_check(const AlphaTriple& alpha, const ModulusContext& ctx,
                           const DirichletCharacter& chi);

// Earliest applicable shortcut, or nothing.  Order: supersingular, elliptic
// dimension one, (a,a,b) up to permutation, center degree not divisible by
// six, center degree of the form 2^(s+1)*3.  Every shortcut certifies a
// positive verdict.
std::optional<Rule> fast_path(const AlphaTriple& alpha, const ModulusContext& ctx);

// det(f(sigma tau^{-1}))_{sigma,tau} == prod_psi sum_sigma f(sigma) psi(sigma)
// for a cyclic group of order n, f given by its value at each power of the
// generator.  Both sides computed exactly in Q(zeta_n).
bool group_determinant_check(std::int64_t n, const std::vector<Rational>& f);

enum class CheckStatus { Pass, Fail, SkippedDegenerate };

// Exact factorization of the r x r slope determinant:
//   det( e(s_i s_j^{-1}) )  ==  (1/2)^r * prod_chi [ (1/d) sum_c e(c) chi(c) ]
// over the odd characters trivial on the stabilizer, s_i the half-system
// coset reps.  The power of 1/2 is (1/2)^r: each of the r character factors
// carries one halving when the sum over the +-1 quotient group is unfolded.
CheckStatus det_factorization_check(const AlphaTriple& alpha, const ModulusContext& ctx);

struct ClassificationRecord {
  std::int64_t p = 0;
  std::int64_t l = 0;
  std::int64_t f = 0;
  std::array<std::int64_t, 3> alpha{};
  std::int64_t h_alpha_size = 0;
  std::int64_t center_degree = 0;
  std::optional<std::int64_t> brauer_order;  // absent for supersingular frames
  std::optional<std::int64_t> dimension;     // absent for supersingular frames
  bool verdict = false;  // all l-adic Tate classes on all powers are Lefschetz
  std::optional<bool> verdict_by_rank;
  std::optional<bool> verdict_by_characters;
  std::optional<bool> verdict_by_e;
  Rule rule = Rule::GENERAL_CRITERION;
  bool agreement = true;
  std::vector<std::int64_t> witnesses;

  bool operator==(const ClassificationRecord&) const = default;
};

// Orchestrates the verdict paths.
//   Fast: stop at the first shortcut; otherwise run the general criterion
//     with all three verdict routes (a GENERAL_CRITERION record always
//     carries all three).
//   Full: always run the character criterion; add the other two routes when
//     no shortcut applies.
//   CrossValidate: run every applicable route plus the bridge identity for
//     every qualifying character.
// Any disagreement between computed verdicts is an engine defect and throws;
// it is never reported as data.
ClassificationRecord classify(const std::array<std::int64_t, 3>& raw_alpha,
                              const ModulusContext& ctx, Mode mode);

}  // namespace lefschetz
