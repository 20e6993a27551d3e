#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace lefschetz {

bool is_prime(std::int64_t n);

// a^e mod m, m > 1, e >= 0
std::int64_t mod_pow(std::int64_t a, std::int64_t e, std::int64_t m);

std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

// Least f >= 1 with p^f = 1 mod l.  Rejects p = l and non-prime inputs.
std::int64_t multiplicative_order(std::int64_t p, std::int64_t l);

// <c>: the representative of c in [1, l-1].  Rejects c = 0 mod l.
std::int64_t least_residue(std::int64_t c, std::int64_t l);

// Least positive primitive root mod an odd prime l.
std::int64_t primitive_root(std::int64_t l);

// The arithmetic frame for one (p, l) pair.  Immutable after construction;
// safe to share across threads.
struct ModulusContext {
  std::int64_t l = 0;           // odd prime, the Fermat degree
  std::int64_t p = 0;           // prime, p != l
  std::int64_t f = 0;           // multiplicative order of p mod l
  std::int64_t q_exponent = 0;  // = f; the model lives over the field with p^f elements
  std::int64_t generator = 0;   // least primitive root mod l
  std::vector<std::int64_t> subgroup;    // H = <p>, sorted ascending
  std::vector<std::int64_t> coset_reps;  // least residue per coset of H, sorted
  std::int64_t d_primes = 0;             // (l-1)/f
  std::vector<std::int64_t> dlog;        // dlog[c] = index of c base generator, c in [1,l-1]

  bool in_subgroup(std::int64_t c) const;
};

ModulusContext build_context(std::int64_t p, std::int64_t l);

// An element of the triple set: nonzero residues mod l with zero sum, plus
// its stabilizer subgroup H_alpha and the derived degrees.
struct AlphaTriple {
  std::array<std::int64_t, 3> a{};         // stored in [1, l-1]
  std::vector<std::int64_t> h_alpha;       // stabilizer subgroup, sorted
  std::int64_t h_alpha_size = 0;
  std::int64_t center_degree = 0;          // (l-1)/|H_alpha|
  std::optional<std::int64_t> r;           // center_degree/2 when even

  bool is_aab() const;  // (a,a,b) up to permutation
};

// Sum over h in H and the three entries of <h*t*a_i>; the basic invariant
// object everything downstream is built from.
std::int64_t stabilizer_double_sum(const ModulusContext& ctx,
                                   const std::array<std::int64_t, 3>& a,
                                   std::int64_t t);

// Validates membership in the triple set and computes the stabilizer.
//
// The stabilizer is the set of units c whose translation fixes the whole
// double-sum vector: S(tc) = S(t) for every unit t, with
// S(t) = sum_{h in H} sum_i <h t a_i>.  This set is a subgroup by
// construction and always contains H.  The single-slice condition
// S(c) = S(1) alone is necessary but not sufficient: it can fail to be
// closed under multiplication (smallest cases live at f = 1), so the full
// translation condition is what gets used.
AlphaTriple make_alpha_triple(const std::array<std::int64_t, 3>& raw,
                              const ModulusContext& ctx);

}  // namespace lefschetz
