#include "lefschetz/characters.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lefschetz {

namespace {

void require_same_frame(const DirichletCharacter& chi, const ModulusContext& ctx) {
  if (chi.modulus != ctx.l || chi.generator != ctx.generator) {
    throw std::invalid_argument("character does not belong to this context");
  }
}

bool is_subgroup(const std::vector<std::int64_t>& xs, std::int64_t l) {
  if (xs.empty() || !std::binary_search(xs.begin(), xs.end(), std::int64_t{1})) return false;
  for (std::int64_t x : xs) {
    for (std::int64_t y : xs) {
      if (!std::binary_search(xs.begin(), xs.end(), x * y % l)) return false;
    }
  }
  return true;
}

}  // namespace

DirichletCharacter make_character(const ModulusContext& ctx, std::int64_t k) {
  const std::int64_t n = ctx.l - 1;
  k = ((k % n) + n) % n;
  DirichletCharacter chi;
  chi.modulus = ctx.l;
  chi.generator = ctx.generator;
  chi.exponent = k;
  chi.order = n / std::gcd(k, n);
  return chi;
}

CyclotomicElement evaluate(const DirichletCharacter& chi, const ModulusContext& ctx,
                           std::int64_t c) {
  require_same_frame(chi, ctx);
  const std::int64_t r = least_residue(c, ctx.l);
  const std::int64_t ind = ctx.dlog[static_cast<std::size_t>(r)];
  return CyclotomicElement::root_of_unity(ctx.l - 1, chi.exponent * ind);
}

bool is_odd(const DirichletCharacter& chi) { return chi.exponent % 2 == 1; }

std::vector<DirichletCharacter> characters_trivial_on(const std::vector<std::int64_t>& subgroup,
                                                      const ModulusContext& ctx) {
  if (!is_subgroup(subgroup, ctx.l)) {
    throw std::invalid_argument("characters_trivial_on: not a subgroup");
  }
  for (std::int64_t h : ctx.subgroup) {
    if (!std::binary_search(subgroup.begin(), subgroup.end(), h)) {
      throw std::invalid_argument("characters_trivial_on: subgroup must contain H");
    }
  }
  // A subgroup of the cyclic unit group of order m pins k to multiples of m.
  const std::int64_t m = static_cast<std::int64_t>(subgroup.size());
  std::vector<DirichletCharacter> out;
  for (std::int64_t k = 1; k < ctx.l - 1; k += 2) {
    if (k % m == 0) out.push_back(make_character(ctx, k));
  }
  return out;
}

CyclotomicElement alpha_character_sum(const DirichletCharacter& chi, const ModulusContext& ctx,
                                      const AlphaTriple& alpha) {
  require_same_frame(chi, ctx);
  CyclotomicElement s = CyclotomicElement::zero(ctx.l - 1);
  for (std::int64_t ai : alpha.a) s = s + evaluate(chi, ctx, ai);
  return s;
}

CyclotomicElement weighted_character_sum(const DirichletCharacter& chi, const ModulusContext& ctx,
                                         const std::map<std::int64_t, Rational>& weights) {
  require_same_frame(chi, ctx);
  CyclotomicElement s = CyclotomicElement::zero(ctx.l - 1);
  for (std::int64_t c = 1; c < ctx.l; ++c) {
    auto it = weights.find(c);
    if (it == weights.end()) {
      throw std::invalid_argument("weighted_character_sum: missing weight for a unit");
    }
    if (it->second != 0) s = s + evaluate(chi, ctx, c).scalar_mul(it->second);
  }
  return s;
}

CyclotomicElement l_sum(const DirichletCharacter& chi, const ModulusContext& ctx) {
  require_same_frame(chi, ctx);
  if (!is_odd(chi)) {
    throw std::invalid_argument("l_sum: character must be odd");
  }
  const DirichletCharacter inv = make_character(ctx, -chi.exponent);
  CyclotomicElement s = CyclotomicElement::zero(ctx.l - 1);
  for (std::int64_t c = 1; c < ctx.l; ++c) {
    s = s + evaluate(inv, ctx, c).scalar_mul(Rational(c));
  }
  return s;
}

}  // namespace lefschetz
