#pragma once

#include "lefschetz/cyclotomic.hpp"
#include "lefschetz/residue.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace lefschetz {

// A Dirichlet character of (Z/l)^x, encoded against the context's fixed
// generator g: the character maps g^j to zeta_{l-1}^{k j}.  All values live
// in the single conductor l-1 so sums over characters of different orders
// combine without embeddings.
struct DirichletCharacter {
  std::int64_t modulus = 0;    // l
  std::int64_t generator = 0;  // g from the context
  std::int64_t exponent = 0;   // k in [0, l-2]
  std::int64_t order = 0;      // (l-1)/gcd(k, l-1)
};

DirichletCharacter make_character(const ModulusContext& ctx, std::int64_t k);

// chi(c) = zeta_{l-1}^(k * ind_g(c)); rejects c = 0 mod l.
CyclotomicElement evaluate(const DirichletCharacter& chi, const ModulusContext& ctx,
                           std::int64_t c);

// chi(-1) = (-1)^k
bool is_odd(const DirichletCharacter& chi);

// Exactly the odd characters trivial on the given subgroup: k = 0 mod |H|
// and k odd.  The subgroup must contain the context's H.
std::vector<DirichletCharacter> characters_trivial_on(const std::vector<std::int64_t>& subgroup,
                                                      const ModulusContext& ctx);

// chi(a0) + chi(a1) + chi(a2), exact in Q(zeta_{l-1}).
CyclotomicElement alpha_character_sum(const DirichletCharacter& chi, const ModulusContext& ctx,
                                      const AlphaTriple& alpha);

// sum_c w(c) chi(c); the weight map must cover every unit c.
CyclotomicElement weighted_character_sum(const DirichletCharacter& chi, const ModulusContext& ctx,
                                         const std::map<std::int64_t, Rational>& weights);

// sum_c <c> chi(c)^(-1) for odd chi.  Nonzero for every odd character
// (finite multiple of an L-value at 1); the engine asserts this in its
// verification suites rather than assuming it.  Even characters are
// rejected to keep the contract sharp.
CyclotomicElement l_sum(const DirichletCharacter& chi, const ModulusContext& ctx);

}  // namespace lefschetz
