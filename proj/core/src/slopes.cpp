#include "lefschetz/slopes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lefschetz {

SlopeFunction::SlopeFunction(const ModulusContext& ctx, const AlphaTriple& alpha) : l_(ctx.l) {
  values_.resize(static_cast<std::size_t>(l_));
  const std::int64_t f = ctx.f;
  for (std::int64_t c = 1; c < l_; ++c) {
    const std::int64_t cinv = mod_inverse(c, l_);
    const std::int64_t s = stabilizer_double_sum(ctx, alpha.a, cinv);
    // (1/(fl)) * (S(c^{-1}) - 3f*l/2), kept exact as (2S - 3fl) / (2fl)
    values_[static_cast<std::size_t>(c)] = Rational(2 * s - 3 * f * l_, 2 * f * l_);
  }
}

const Rational& SlopeFunction::at(std::int64_t c) const {
  return values_[static_cast<std::size_t>(least_residue(c, l_))];
}

std::map<std::int64_t, Rational> SlopeFunction::as_weight_map() const {
  std::map<std::int64_t, Rational> w;
  for (std::int64_t c = 1; c < l_; ++c) w[c] = values_[static_cast<std::size_t>(c)];
  return w;
}

Rational slope_deviation(const AlphaTriple& alpha, const ModulusContext& ctx, std::int64_t c) {
  const std::int64_t r = least_residue(c, ctx.l);
  const std::int64_t cinv = mod_inverse(r, ctx.l);
  const std::int64_t s = stabilizer_double_sum(ctx, alpha.a, cinv);
  return Rational(2 * s - 3 * ctx.f * ctx.l, 2 * ctx.f * ctx.l);
}

SlopeMatrix build_slope_matrix(const AlphaTriple& alpha, const ModulusContext& ctx) {
  if (alpha.center_degree % 2 != 0) {
    throw std::invalid_argument(
        "build_slope_matrix: center degree is odd (totally real center, no "
        "conjugate pairing of embeddings)");
  }
  const std::int64_t l = ctx.l;

  // Half-system of stabilizer cosets: walk least reps ascending, keep a rep
  // only if the negated coset has not been kept.
  std::vector<std::int64_t> cols;
  std::vector<bool> seen(static_cast<std::size_t>(l), false);
  for (std::int64_t c = 1; c < l; ++c) {
    if (seen[static_cast<std::size_t>(c)]) continue;
    cols.push_back(c);
    for (std::int64_t h : alpha.h_alpha) {
      const std::int64_t x = c * h % l;
      seen[static_cast<std::size_t>(x)] = true;
      seen[static_cast<std::size_t>(l - x)] = true;
    }
  }

  SlopeFunction e(ctx, alpha);
  SlopeMatrix m;
  m.row_labels = ctx.coset_reps;
  m.col_labels = std::move(cols);
  m.entries.reserve(m.row_labels.size());
  for (std::int64_t row : m.row_labels) {
    std::vector<Rational> line;
    line.reserve(m.col_labels.size());
    for (std::int64_t t : m.col_labels) {
      line.push_back(e.at(mod_inverse(t, l) * row % l));
    }
    m.entries.push_back(std::move(line));
  }
  return m;
}

namespace {

std::int64_t bareiss_rank(std::vector<std::vector<BigInt>> m) {
  if (m.empty() || m[0].empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  BigInt prev(1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        m[i][j] = (m[i][j] * m[rank][col] - m[i][col] * m[rank][j]) / prev;
      }
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return static_cast<std::int64_t>(rank);
}

}  // namespace

std::int64_t rational_rank(const std::vector<std::vector<Rational>>& m,
                           std::int64_t clear_factor) {
  if (m.empty() || m[0].empty()) return 0;
  std::vector<std::vector<BigInt>> z(m.size(), std::vector<BigInt>(m[0].size()));
  if (clear_factor > 0) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m[i].size(); ++j) {
        const Rational scaled = m[i][j] * clear_factor;
        if (denominator(scaled) != 1) {
          throw std::invalid_argument("rational_rank: clear factor does not clear denominators");
        }
        z[i][j] = numerator(scaled);
      }
    }
  } else {
    for (std::size_t i = 0; i < m.size(); ++i) {
      BigInt row_lcm(1);
      for (const auto& q : m[i]) row_lcm = boost::multiprecision::lcm(row_lcm, denominator(q));
      for (std::size_t j = 0; j < m[i].size(); ++j) {
        const Rational scaled = m[i][j] * Rational(row_lcm);
        z[i][j] = numerator(scaled);
      }
    }
  }
  return bareiss_rank(std::move(z));
}

std::int64_t brauer_order(const AlphaTriple& alpha, const ModulusContext& ctx) {
  SlopeFunction e(ctx, alpha);
  BigInt n(1);
  const Rational half(1, 2);
  for (std::int64_t c = 1; c < ctx.l; ++c) {
    n = boost::multiprecision::lcm(n, denominator(e.at(c) + half));
  }
  const std::int64_t order = n.convert_to<std::int64_t>();
  if (ctx.f % order != 0) {
    throw engine_error("brauer_order: slope denominators do not divide the residual degree");
  }
  if (ctx.f % 2 == 1 && order % 2 == 0) {
    throw engine_error("brauer_order: even order with odd residual degree");
  }
  return order;
}

std::int64_t simple_factor_dimension(const AlphaTriple& alpha, const ModulusContext& ctx) {
  if (alpha.center_degree % 2 != 0) {
    throw std::invalid_argument("simple_factor_dimension: center degree is odd");
  }
  return brauer_order(alpha, ctx) * alpha.center_degree / 2;
}

}  // namespace lefschetz
