#include "lefschetz/jacobi.hpp"

#include "lefschetz/slopes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lefschetz {

namespace {

using u128 = unsigned __int128;

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<u128>(a) * static_cast<u128>(b) % static_cast<u128>(m));
}

std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::vector<std::int64_t> to_vec(std::int64_t x, std::int64_t p, std::int64_t f) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(f));
  for (std::int64_t i = 0; i < f; ++i) {
    v[static_cast<std::size_t>(i)] = x % p;
    x /= p;
  }
  return v;
}

std::int64_t to_int(const std::vector<std::int64_t>& v, std::int64_t p) {
  std::int64_t x = 0;
  for (std::size_t i = v.size(); i-- > 0;) x = x * p + v[i];
  return x;
}

// Polynomial multiplication mod (modulus, p); inputs coefficient vectors.
std::vector<std::int64_t> polmulmod(const std::vector<std::int64_t>& a,
                                    const std::vector<std::int64_t>& b,
                                    const std::vector<std::int64_t>& modc, std::int64_t p) {
  std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
  }
  const std::size_t deg = modc.size() - 1;
  for (std::size_t k = out.size(); k-- > deg;) {
    const std::int64_t c = out[k];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) {
      out[k - deg + j] = ((out[k - deg + j] - c * modc[j]) % p + p) % p;
    }
  }
  out.resize(deg);
  return out;
}

// x^(p^e) mod (modc, p), by e rounds of p-th powering.
std::vector<std::int64_t> frobenius_power(std::int64_t e, const std::vector<std::int64_t>& modc,
                                          std::int64_t p) {
  std::vector<std::int64_t> cur{0, 1};
  for (std::int64_t round = 0; round < e; ++round) {
    std::vector<std::int64_t> res{1};
    std::vector<std::int64_t> base = cur;
    std::int64_t exp = p;
    while (exp) {
      if (exp & 1) res = polmulmod(res, base, modc, p);
      base = polmulmod(base, base, modc, p);
      exp >>= 1;
    }
    cur = std::move(res);
    cur.resize(modc.size() - 1);
  }
  return cur;
}

bool poly_is_x(const std::vector<std::int64_t>& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != (i == 1 ? 1 : 0)) return false;
  }
  return true;
}

bool is_irreducible(const std::vector<std::int64_t>& modc, std::int64_t p, std::int64_t f) {
  auto xq = frobenius_power(f, modc, p);
  xq.resize(modc.size() - 1);
  if (!poly_is_x(xq)) return false;
  std::int64_t x = f;
  for (std::int64_t r = 2; r * r <= x; ++r) {
    if (x % r == 0) {
      auto xr = frobenius_power(f / r, modc, p);
      xr.resize(modc.size() - 1);
      if (poly_is_x(xr)) return false;
      while (x % r == 0) x /= r;
    }
  }
  if (x > 1) {
    auto xr = frobenius_power(f / x, modc, p);
    xr.resize(modc.size() - 1);
    if (poly_is_x(xr)) return false;
  }
  return true;
}

std::vector<std::int64_t> prime_factors_of(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

std::int64_t FiniteFieldTable::add(std::int64_t a, std::int64_t b) const {
  std::int64_t out = 0, mult = 1;
  for (std::int64_t i = 0; i < f; ++i) {
    out += (a % p + b % p) % p * mult;
    a /= p;
    b /= p;
    mult *= p;
  }
  return out;
}

std::int64_t FiniteFieldTable::neg(std::int64_t a) const {
  std::int64_t out = 0, mult = 1;
  for (std::int64_t i = 0; i < f; ++i) {
    out += (p - a % p) % p * mult;
    a /= p;
    mult *= p;
  }
  return out;
}

std::int64_t FiniteFieldTable::mul(std::int64_t a, std::int64_t b) const {
  if (a == 0 || b == 0) return 0;
  const std::int64_t la = log_table[static_cast<std::size_t>(a)];
  const std::int64_t lb = log_table[static_cast<std::size_t>(b)];
  return exp_table[static_cast<std::size_t>((la + lb) % (q - 1))];
}

FiniteFieldTable build_field_table(std::int64_t p, std::int64_t f) {
  if (!is_prime(p) || f < 1) throw std::invalid_argument("build_field_table: need prime p, f >= 1");
  std::int64_t q = 1;
  for (std::int64_t i = 0; i < f; ++i) {
    q *= p;
    if (q > kMaxFieldSize) throw std::invalid_argument("build_field_table: field size exceeds 10^6");
  }

  FiniteFieldTable t;
  t.p = p;
  t.f = f;
  t.q = q;

  if (f == 1) {
    t.modulus = {0, 1};
  } else {
    for (std::int64_t m = 0;; ++m) {
      if (m >= q) throw std::logic_error("build_field_table: no irreducible found");
      std::vector<std::int64_t> cand = to_vec(m, p, f);
      cand.push_back(1);
      if (is_irreducible(cand, p, f)) {
        t.modulus = std::move(cand);
        break;
      }
    }
  }

  // Field multiplication in coefficient form, used to bootstrap the tables.
  auto raw_mul = [&](std::int64_t a, std::int64_t b) {
    auto va = to_vec(a, p, f);
    auto vb = to_vec(b, p, f);
    return to_int(polmulmod(va, vb, t.modulus, p), p);
  };

  const auto factors = prime_factors_of(q - 1);
  auto order_is_full = [&](std::int64_t g) {
    for (std::int64_t r : factors) {
      std::int64_t e = (q - 1) / r;
      std::int64_t acc = 1, base = g;
      while (e) {
        if (e & 1) acc = raw_mul(acc, base);
        base = raw_mul(base, base);
        e >>= 1;
      }
      if (acc == 1) return false;
    }
    return true;
  };

  for (std::int64_t g = 2; g < q; ++g) {
    if (order_is_full(g)) {
      t.generator = g;
      break;
    }
  }
  if (t.generator == 0) throw std::logic_error("build_field_table: no generator found");

  t.exp_table.resize(static_cast<std::size_t>(q - 1));
  t.log_table.assign(static_cast<std::size_t>(q), 0);
  std::int64_t x = 1;
  for (std::int64_t i = 0; i < q - 1; ++i) {
    t.exp_table[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(x);
    t.log_table[static_cast<std::size_t>(x)] = static_cast<std::int32_t>(i);
    x = raw_mul(x, t.generator);
  }
  if (x != 1) throw std::logic_error("build_field_table: generator order mismatch");
  return t;
}

CyclotomicElement jacobi_sum(const std::array<std::int64_t, 3>& alpha,
                             const FiniteFieldTable& field, std::int64_t l) {
  if ((field.q - 1) % l != 0) {
    throw std::invalid_argument("jacobi_sum: l must divide q - 1");
  }
  for (std::int64_t ai : alpha) {
    if (((ai % l) + l) % l == 0) {
      throw std::invalid_argument("jacobi_sum: alpha entries must be nonzero mod l");
    }
  }
  const std::int64_t a1 = ((alpha[1] % l) + l) % l;
  const std::int64_t a2 = ((alpha[2] % l) + l) % l;

  std::vector<std::int64_t> counts(static_cast<std::size_t>(l), 0);
  const std::int64_t minus_one = field.neg(1);
  for (std::int64_t v1 = 1; v1 < field.q; ++v1) {
    if (v1 == minus_one) continue;
    const std::int64_t v2 = field.add(minus_one, field.neg(v1));
    // psi(v) = zeta_l^log(v); exponents accumulate mod l
    const std::int64_t k =
        (field.log_table[static_cast<std::size_t>(v1)] % l * a1 +
         field.log_table[static_cast<std::size_t>(v2)] % l * a2) % l;
    counts[static_cast<std::size_t>(k)] -= 1;
  }

  CyclotomicElement s = CyclotomicElement::zero(l);
  for (std::int64_t k = 0; k < l; ++k) {
    const std::int64_t c = counts[static_cast<std::size_t>(k)];
    if (c != 0) {
      s = s + CyclotomicElement::root_of_unity(l, k).scalar_mul(Rational(c));
    }
  }
  return s;
}

namespace {

std::int64_t eval_valuation(const CyclotomicElement& jac, std::int64_t root_lift, std::int64_t p,
                            std::int64_t p3) {
  // Evaluate the integer polynomial at the lifted root mod p^3.
  std::int64_t acc = 0, xk = 1;
  for (const auto& coeff : jac.coeffs()) {
    if (denominator(coeff) != 1) throw std::invalid_argument("slope oracle: non-integral Jacobi sum");
    const std::int64_t c = (numerator(coeff) % p3).convert_to<std::int64_t>();
    acc = (acc + mulmod(((c % p3) + p3) % p3, xk, p3)) % p3;
    xk = mulmod(xk, root_lift, p3);
  }
  if (acc % p != 0) return 0;
  if (acc % (p * p) != 0) return 1;
  throw engine_error("slope oracle: valuation at least 2 for a weight-1 sum");
}

}  // namespace

std::int64_t SlopeOracleF1::valuation(const CyclotomicElement& jac, std::int64_t c) const {
  const std::int64_t p3 = p * p * p;
  const std::int64_t cinv = mod_inverse(least_residue(c, l), l);
  const std::int64_t root = powmod(base_root, cinv, p);
  const std::int64_t lift = powmod(root, p * p, p3);
  return eval_valuation(jac, lift, p, p3);
}

std::vector<std::int64_t> SlopeOracleF1::valuations_at_all_roots(const CyclotomicElement& jac) const {
  const std::int64_t p3 = p * p * p;
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(l - 1));
  for (std::int64_t b = 1; b < l; ++b) {
    const std::int64_t root = powmod(uncalibrated, b, p);
    const std::int64_t lift = powmod(root, p * p, p3);
    out.push_back(eval_valuation(jac, lift, p, p3));
  }
  return out;
}

SlopeOracleF1 make_slope_oracle_f1(const ModulusContext& ctx) {
  if (ctx.f != 1) throw std::invalid_argument("slope oracle: requires f = 1 (p = 1 mod l)");
  if (ctx.p > 10000) throw std::invalid_argument("slope oracle: requires p <= 10^4");
  SlopeOracleF1 oracle;
  oracle.p = ctx.p;
  oracle.l = ctx.l;

  const FiniteFieldTable field = build_field_table(ctx.p, 1);
  oracle.uncalibrated = powmod(field.generator, (ctx.p - 1) / ctx.l, ctx.p);
  if (oracle.uncalibrated == 1) throw engine_error("slope oracle: degenerate root of unity");

  // Calibrate: one power of the base root matches e(c) + 1/2 pointwise for
  // every alpha; pick the least such exponent.
  for (std::int64_t b = 1; b < ctx.l; ++b) {
    oracle.base_root = powmod(oracle.uncalibrated, b, ctx.p);
    bool all_match = true;
    for (std::int64_t a0 = 1; a0 < ctx.l && all_match; ++a0) {
      for (std::int64_t a1 = 1; a1 < ctx.l && all_match; ++a1) {
        const std::int64_t a2 = (2 * ctx.l - a0 - a1) % ctx.l;
        if (a2 == 0) continue;
        const std::array<std::int64_t, 3> raw{a0, a1, a2};
        const AlphaTriple alpha = make_alpha_triple(raw, ctx);
        const CyclotomicElement jac = jacobi_sum(raw, field, ctx.l);
        const SlopeFunction e(ctx, alpha);
        for (std::int64_t c = 1; c < ctx.l; ++c) {
          if (Rational(oracle.valuation(jac, c)) != e.at(c) + Rational(1, 2)) {
            all_match = false;
            break;
          }
        }
      }
    }
    if (all_match) return oracle;
  }
  throw engine_error("slope oracle: no globally consistent root pairing found");
}

Rational slope_oracle_f1(const std::array<std::int64_t, 3>& alpha, const ModulusContext& ctx,
                         std::int64_t c) {
  const SlopeOracleF1 oracle = make_slope_oracle_f1(ctx);
  const FiniteFieldTable field = build_field_table(ctx.p, 1);
  return Rational(oracle.valuation(jacobi_sum(alpha, field, ctx.l), c));
}

}  // namespace lefschetz
