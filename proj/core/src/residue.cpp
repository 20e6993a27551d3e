#include "lefschetz/residue.hpp"

#include "lefschetz/rational.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace lefschetz {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
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

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  // deterministic Miller-Rabin for 64-bit inputs
  std::uint64_t d = static_cast<std::uint64_t>(n - 1);
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, static_cast<std::uint64_t>(n));
    if (x == 1 || x == static_cast<std::uint64_t>(n - 1)) continue;
    bool composite = true;
    for (int i = 0; i + 1 < s; ++i) {
      x = mulmod_u64(x, x, static_cast<std::uint64_t>(n));
      if (x == static_cast<std::uint64_t>(n - 1)) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::int64_t mod_pow(std::int64_t a, std::int64_t e, std::int64_t m) {
  if (m <= 1) throw std::invalid_argument("mod_pow: modulus must exceed 1");
  if (e < 0) throw std::invalid_argument("mod_pow: negative exponent");
  std::int64_t r = ((a % m) + m) % m;
  return static_cast<std::int64_t>(powmod_u64(static_cast<std::uint64_t>(r),
                                              static_cast<std::uint64_t>(e),
                                              static_cast<std::uint64_t>(m)));
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, x1 = 1, b = ((a % m) + m) % m;
  while (b) {
    std::int64_t qt = g / b;
    g -= qt * b;
    std::swap(g, b);
    x -= qt * x1;
    std::swap(x, x1);
  }
  if (g != 1) throw std::invalid_argument("mod_inverse: not invertible");
  return ((x % m) + m) % m;
}

std::int64_t multiplicative_order(std::int64_t p, std::int64_t l) {
  if (!is_prime(p)) throw std::invalid_argument("multiplicative_order: p must be prime");
  if (!is_prime(l) || l == 2) throw std::invalid_argument("multiplicative_order: l must be an odd prime");
  if (p == l) throw std::invalid_argument("multiplicative_order: p must differ from l");
  std::int64_t x = p % l;
  std::int64_t f = 1;
  while (x != 1) {
    x = x * (p % l) % l;
    ++f;
  }
  return f;
}

std::int64_t least_residue(std::int64_t c, std::int64_t l) {
  std::int64_t r = ((c % l) + l) % l;
  if (r == 0) throw std::invalid_argument("least_residue: residue is zero mod l");
  return r;
}

std::int64_t primitive_root(std::int64_t l) {
  if (!is_prime(l) || l == 2) throw std::invalid_argument("primitive_root: l must be an odd prime");
  const auto factors = prime_factors(l - 1);
  for (std::int64_t g = 2; g < l; ++g) {
    bool ok = true;
    for (std::int64_t q : factors) {
      if (mod_pow(g, (l - 1) / q, l) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("primitive_root: no generator found");
}

bool ModulusContext::in_subgroup(std::int64_t c) const {
  return std::binary_search(subgroup.begin(), subgroup.end(), least_residue(c, l));
}

ModulusContext build_context(std::int64_t p, std::int64_t l) {
  ModulusContext ctx;
  ctx.f = multiplicative_order(p, l);  // validates p, l
  ctx.p = p;
  ctx.l = l;
  ctx.q_exponent = ctx.f;
  ctx.generator = primitive_root(l);

  std::set<std::int64_t> h;
  std::int64_t x = 1;
  for (std::int64_t i = 0; i < ctx.f; ++i) {
    x = x * (p % l) % l;
    h.insert(x);
  }
  ctx.subgroup.assign(h.begin(), h.end());
  ctx.d_primes = (l - 1) / ctx.f;

  std::vector<bool> seen(static_cast<std::size_t>(l), false);
  for (std::int64_t c = 1; c < l; ++c) {
    if (!seen[static_cast<std::size_t>(c)]) {
      ctx.coset_reps.push_back(c);
      for (std::int64_t hh : ctx.subgroup) seen[static_cast<std::size_t>(c * hh % l)] = true;
    }
  }

  ctx.dlog.assign(static_cast<std::size_t>(l), -1);
  x = 1;
  for (std::int64_t j = 0; j < l - 1; ++j) {
    ctx.dlog[static_cast<std::size_t>(x)] = j;
    x = x * ctx.generator % l;
  }
  return ctx;
}

std::int64_t stabilizer_double_sum(const ModulusContext& ctx,
                                   const std::array<std::int64_t, 3>& a,
                                   std::int64_t t) {
  std::int64_t s = 0;
  for (std::int64_t h : ctx.subgroup) {
    const std::int64_t ht = h * t % ctx.l;
    for (std::int64_t ai : a) s += ht * ai % ctx.l;
  }
  return s;
}

bool AlphaTriple::is_aab() const {
  return a[0] == a[1] || a[1] == a[2] || a[0] == a[2];
}

AlphaTriple make_alpha_triple(const std::array<std::int64_t, 3>& raw,
                              const ModulusContext& ctx) {
  const std::int64_t l = ctx.l;
  AlphaTriple out;
  for (int i = 0; i < 3; ++i) {
    std::int64_t r = ((raw[i] % l) + l) % l;
    if (r == 0) {
      throw std::invalid_argument("alpha triple: entries must be nonzero mod l");
    }
    out.a[i] = r;
  }
  if ((out.a[0] + out.a[1] + out.a[2]) % l != 0) {
    throw std::invalid_argument("alpha triple: entries must sum to zero mod l");
  }

  // S(t) for every unit t; the stabilizer is the translation symmetry group
  // of this vector.
  std::vector<std::int64_t> s(static_cast<std::size_t>(l), 0);
  for (std::int64_t t = 1; t < l; ++t) s[static_cast<std::size_t>(t)] = stabilizer_double_sum(ctx, out.a, t);

  for (std::int64_t c = 1; c < l; ++c) {
    bool stable = true;
    for (std::int64_t t = 1; t < l; ++t) {
      if (s[static_cast<std::size_t>(t * c % l)] != s[static_cast<std::size_t>(t)]) {
        stable = false;
        break;
      }
    }
    if (stable) out.h_alpha.push_back(c);
  }

  out.h_alpha_size = static_cast<std::int64_t>(out.h_alpha.size());
  if ((l - 1) % out.h_alpha_size != 0) {
    throw engine_error("alpha stabilizer size does not divide the unit group order");
  }
  out.center_degree = (l - 1) / out.h_alpha_size;
  if (out.center_degree % 2 == 0) out.r = out.center_degree / 2;

  // H is contained in the stabilizer because translation by p permutes H.
  for (std::int64_t h : ctx.subgroup) {
    if (!std::binary_search(out.h_alpha.begin(), out.h_alpha.end(), h)) {
      throw engine_error("alpha stabilizer does not contain the Frobenius subgroup");
    }
  }
  return out;
}

}  // namespace lefschetz
