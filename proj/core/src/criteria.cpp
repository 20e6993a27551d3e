#include "lefschetz/criteria.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lefschetz {

std::string to_string(Rule r) {
  switch (r) {
    case Rule::SUPERSINGULAR_F_EVEN: return "SUPERSINGULAR_F_EVEN";
    case Rule::DIM_ONE_ELLIPTIC: return "DIM_ONE_ELLIPTIC";
    case Rule::CASE_AAB: return "CASE_AAB";
    case Rule::CASE_DEGREE_NOT_6: return "CASE_DEGREE_NOT_6";
    case Rule::CASE_2POW_TIMES_3: return "CASE_2POW_TIMES_3";
    case Rule::GENERAL_CRITERION: return "GENERAL_CRITERION";
  }
  throw std::logic_error("unknown rule");
}

std::string to_string(Mode m) {
  switch (m) {
    case Mode::Fast: return "fast";
    case Mode::Full: return "full";
    case Mode::CrossValidate: return "cross_validate";
  }
  throw std::logic_error("unknown mode");
}

std::optional<Mode> mode_from_string(const std::string& s) {
  if (s == "fast") return Mode::Fast;
  if (s == "full") return Mode::Full;
  if (s == "cross_validate") return Mode::CrossValidate;
  return std::nullopt;
}

namespace {

// A sum of three roots of unity vanishes iff the three values are a common
// rotation of the cube roots of unity; used as the independent route when
// re-verifying failure witnesses.
bool vanishes_by_cube_root_pattern(const DirichletCharacter& chi, const ModulusContext& ctx,
                                   const AlphaTriple& alpha) {
  const std::int64_t n = ctx.l - 1;
  if (n % 3 != 0) return false;
  const auto ratio1 = evaluate(chi, ctx, alpha.a[1]) * evaluate(make_character(ctx, -chi.exponent), ctx, alpha.a[0]);
  const auto ratio2 = evaluate(chi, ctx, alpha.a[2]) * evaluate(make_character(ctx, -chi.exponent), ctx, alpha.a[0]);
  const auto omega = CyclotomicElement::root_of_unity(n, n / 3);
  const auto omega2 = CyclotomicElement::root_of_unity(n, 2 * n / 3);
  return (ratio1 == omega && ratio2 == omega2) || (ratio1 == omega2 && ratio2 == omega);
}

Rational rational_det(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      const Rational factor = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= factor * m[c][j];
    }
  }
  return det;
}

CyclotomicElement e_weighted_sum(const DirichletCharacter& chi, const ModulusContext& ctx,
                                 const SlopeFunction& e) {
  CyclotomicElement s = CyclotomicElement::zero(ctx.l - 1);
  for (std::int64_t c = 1; c < ctx.l; ++c) {
    if (e.at(c) != 0) s = s + evaluate(chi, ctx, c).scalar_mul(e.at(c));
  }
  return s;
}

}  // namespace

CharacterVerdict verdict_by_characters(const AlphaTriple& alpha, const ModulusContext& ctx) {
  CharacterVerdict v;
  for (const auto& chi : characters_trivial_on(alpha.h_alpha, ctx)) {
    if (alpha_character_sum(chi, ctx, alpha).is_zero()) {
      v.all_nonzero = false;
      v.failing_exponents.push_back(chi.exponent);
    }
  }
  return v;
}

bool verdict_by_rank(const AlphaTriple& alpha, const ModulusContext& ctx) {
  const SlopeMatrix m = build_slope_matrix(alpha, ctx);
  const std::int64_t rank = rational_rank(m.entries, 2 * ctx.f * ctx.l);
  return rank == static_cast<std::int64_t>(m.col_labels.size());
}

bool verdict_by_e(const AlphaTriple& alpha, const ModulusContext& ctx) {
  const SlopeFunction e(ctx, alpha);
  for (const auto& chi : characters_trivial_on(alpha.h_alpha, ctx)) {
    if (e_weighted_sum(chi, ctx, e).is_zero()) return false;
  }
  return true;
}

bool bridge_identity_check(const AlphaTriple& alpha, const ModulusContext& ctx,
                           const DirichletCharacter& chi) {
  if (!is_odd(chi)) throw std::invalid_argument("bridge_identity_check: character must be odd");
  for (std::int64_t h : alpha.h_alpha) {
    if (!(evaluate(chi, ctx, h) == CyclotomicElement::one(ctx.l - 1))) {
      throw std::invalid_argument("bridge_identity_check: character must be trivial on the stabilizer");
    }
  }
  const SlopeFunction e(ctx, alpha);
  const Rational inv_d(1, alpha.h_alpha_size);
  const CyclotomicElement lhs = e_weighted_sum(chi, ctx, e).scalar_mul(inv_d);

  CyclotomicElement chi_sum = CyclotomicElement::zero(ctx.l - 1);
  for (std::int64_t ai : alpha.a) chi_sum = chi_sum + evaluate(chi, ctx, ai);
  const CyclotomicElement rhs =
      (chi_sum * l_sum(chi, ctx)).scalar_mul(Rational(1, ctx.l * alpha.h_alpha_size));
  return lhs == rhs;
}

std::optional<Rule> fast_path(const AlphaTriple& alpha, const ModulusContext& ctx) {
  if (ctx.f % 2 == 0) return Rule::SUPERSINGULAR_F_EVEN;
  if (simple_factor_dimension(alpha, ctx) == 1) return Rule::DIM_ONE_ELLIPTIC;
  if (alpha.is_aab()) return Rule::CASE_AAB;
  if (alpha.center_degree % 6 != 0) return Rule::CASE_DEGREE_NOT_6;
  std::int64_t odd_part = alpha.center_degree / 3;  // center_degree = 2^(s+1) * 3?
  if ((odd_part & (odd_part - 1)) == 0 && odd_part >= 2) return Rule::CASE_2POW_TIMES_3;
  return std::nullopt;
}

bool group_determinant_check(std::int64_t n, const std::vector<Rational>& f) {
  if (n < 1 || static_cast<std::int64_t>(f.size()) != n) {
    throw std::invalid_argument("group_determinant_check: need one value per group element");
  }
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n),
                                       std::vector<Rational>(static_cast<std::size_t>(n)));
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < n; ++j) {
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          f[static_cast<std::size_t>(((i - j) % n + n) % n)];
    }
  }
  const Rational det = rational_det(std::move(m));

  CyclotomicElement prod = CyclotomicElement::one(n);
  for (std::int64_t k = 0; k < n; ++k) {
    CyclotomicElement s = CyclotomicElement::zero(n);
    for (std::int64_t i = 0; i < n; ++i) {
      s = s + CyclotomicElement::root_of_unity(n, k * i).scalar_mul(f[static_cast<std::size_t>(i)]);
    }
    prod = prod * s;
  }
  return prod == CyclotomicElement::from_rational(n, det);
}

CheckStatus det_factorization_check(const AlphaTriple& alpha, const ModulusContext& ctx) {
  if (alpha.center_degree % 2 != 0) {
    throw std::invalid_argument("det_factorization_check: center degree is odd");
  }
  const SlopeMatrix sm = build_slope_matrix(alpha, ctx);
  const std::int64_t r = static_cast<std::int64_t>(sm.col_labels.size());
  if (r == 0) return CheckStatus::SkippedDegenerate;

  const SlopeFunction e(ctx, alpha);
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(r),
                                       std::vector<Rational>(static_cast<std::size_t>(r)));
  for (std::int64_t i = 0; i < r; ++i) {
    for (std::int64_t j = 0; j < r; ++j) {
      const std::int64_t sij =
          sm.col_labels[static_cast<std::size_t>(i)] *
          mod_inverse(sm.col_labels[static_cast<std::size_t>(j)], ctx.l) % ctx.l;
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e.at(sij);
    }
  }
  const Rational det = rational_det(std::move(m));

  const Rational inv_d(1, alpha.h_alpha_size);
  CyclotomicElement prod = CyclotomicElement::one(ctx.l - 1);
  for (const auto& chi : characters_trivial_on(alpha.h_alpha, ctx)) {
    prod = prod * e_weighted_sum(chi, ctx, e).scalar_mul(inv_d);
  }
  Rational half_pow(1);
  for (std::int64_t i = 0; i < r; ++i) half_pow /= 2;
  const CyclotomicElement rhs = prod.scalar_mul(half_pow);
  return rhs == CyclotomicElement::from_rational(ctx.l - 1, det) ? CheckStatus::Pass
                                                                 : CheckStatus::Fail;
}

ClassificationRecord classify(const std::array<std::int64_t, 3>& raw_alpha,
                              const ModulusContext& ctx, Mode mode) {
  const AlphaTriple alpha = make_alpha_triple(raw_alpha, ctx);

  ClassificationRecord rec;
  rec.p = ctx.p;
  rec.l = ctx.l;
  rec.f = ctx.f;
  rec.alpha = alpha.a;
  rec.h_alpha_size = alpha.h_alpha_size;
  rec.center_degree = alpha.center_degree;
  if (ctx.f % 2 == 1) {
    rec.brauer_order = brauer_order(alpha, ctx);
    rec.dimension = simple_factor_dimension(alpha, ctx);
  }

  const std::optional<Rule> shortcut = fast_path(alpha, ctx);
  rec.rule = shortcut.value_or(Rule::GENERAL_CRITERION);
  const bool supersingular = ctx.f % 2 == 0;

  const bool run_characters =
      mode != Mode::Fast || !shortcut.has_value();
  const bool run_others =
      mode == Mode::CrossValidate || !shortcut.has_value();

  std::optional<CharacterVerdict> chars;
  if (run_characters) {
    chars = verdict_by_characters(alpha, ctx);
    rec.verdict_by_characters = chars->all_nonzero;
    rec.witnesses = chars->failing_exponents;
  }
  if (run_others) {
    rec.verdict_by_e = verdict_by_e(alpha, ctx);
    if (!supersingular) rec.verdict_by_rank = verdict_by_rank(alpha, ctx);
  }
  if (mode == Mode::CrossValidate && !supersingular) {
    for (const auto& chi : characters_trivial_on(alpha.h_alpha, ctx)) {
      if (!bridge_identity_check(alpha, ctx, chi)) {
        std::ostringstream os;
        os << "bridge identity failed at p=" << ctx.p << " l=" << ctx.l << " alpha=("
           << alpha.a[0] << "," << alpha.a[1] << "," << alpha.a[2] << ") k=" << chi.exponent;
        throw engine_error(os.str());
      }
    }
  }

  rec.verdict = shortcut.has_value() ? true : rec.verdict_by_characters.value();

  // Re-verify any failure witness through the independent closed form.
  for (std::int64_t k : rec.witnesses) {
    const DirichletCharacter chi = make_character(ctx, k);
    if (!is_odd(chi) || k % alpha.h_alpha_size != 0 ||
        !vanishes_by_cube_root_pattern(chi, ctx, alpha)) {
      throw engine_error("witness re-verification failed for k=" + std::to_string(k));
    }
  }

  // Agreement across every computed route, plus any shortcut certificate.
  std::vector<bool> computed;
  if (rec.verdict_by_characters) computed.push_back(*rec.verdict_by_characters);
  if (rec.verdict_by_rank) computed.push_back(*rec.verdict_by_rank);
  if (rec.verdict_by_e) computed.push_back(*rec.verdict_by_e);
  for (bool v : computed) {
    if (v != rec.verdict) {
      std::ostringstream os;
      os << "criterion disagreement at p=" << ctx.p << " l=" << ctx.l << " alpha=("
         << alpha.a[0] << "," << alpha.a[1] << "," << alpha.a[2] << ") rule=" << to_string(rec.rule)
         << " verdict=" << rec.verdict;
      if (rec.verdict_by_characters) os << " characters=" << *rec.verdict_by_characters;
      if (rec.verdict_by_rank) os << " rank=" << *rec.verdict_by_rank;
      if (rec.verdict_by_e) os << " e_sum=" << *rec.verdict_by_e;
      throw engine_error(os.str());
    }
  }
  rec.agreement = true;
  return rec;
}

}  // namespace lefschetz
