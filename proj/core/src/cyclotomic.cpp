#include "lefschetz/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace lefschetz {

namespace {

std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// Exact division of integer polynomials; remainder must vanish.
std::vector<BigInt> poly_div_exact(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  std::vector<BigInt> q(a.size() - b.size() + 1, BigInt(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    BigInt c = a[k + b.size() - 1] / b.back();
    q[k] = c;
    if (c != 0) {
      for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
    }
  }
  for (std::size_t j = 0; j + 1 < b.size(); ++j) {
    if (a[j] != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
  }
  return q;
}

// Per-conductor tables: Phi_n plus x^k mod Phi_n for k = 0..2n, so that
// products and conjugates reduce by table lookup.
struct ConductorTable {
  IntegerPolynomial phi;
  std::vector<std::vector<BigInt>> powers;  // powers[k], length phi(n) each
};

std::shared_ptr<const ConductorTable> conductor_table(std::int64_t n);

std::shared_ptr<const ConductorTable> build_conductor_table(std::int64_t n) {
  auto tbl = std::make_shared<ConductorTable>();

  std::vector<BigInt> num(static_cast<std::size_t>(n) + 1, BigInt(0));
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  std::vector<BigInt> den{BigInt(1)};
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d == 0) den = poly_mul(den, conductor_table(d)->phi.coeffs);
  }
  tbl->phi.coeffs = poly_div_exact(std::move(num), den);

  const std::size_t deg = tbl->phi.coeffs.size() - 1;
  tbl->powers.reserve(static_cast<std::size_t>(2 * n + 2));
  std::vector<BigInt> cur(deg, BigInt(0));
  if (deg > 0) cur[0] = 1;
  tbl->powers.push_back(cur);
  for (std::int64_t k = 1; k <= 2 * n + 1; ++k) {
    std::vector<BigInt> nxt(deg + 1, BigInt(0));
    for (std::size_t j = 0; j < deg; ++j) nxt[j + 1] = cur[j];
    if (nxt.size() > deg) {
      const BigInt lead = nxt[deg];
      if (lead != 0) {
        for (std::size_t j = 0; j <= deg; ++j) nxt[j] -= lead * tbl->phi.coeffs[j];
      }
      nxt.resize(deg);
    }
    cur = std::move(nxt);
    tbl->powers.push_back(cur);
  }
  return tbl;
}

std::shared_ptr<const ConductorTable> conductor_table(std::int64_t n) {
  static std::mutex mu;
  static std::map<std::int64_t, std::shared_ptr<const ConductorTable>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // Built outside the lock; a concurrent duplicate build produces the same
  // value and the first insert wins.
  auto built = build_conductor_table(n);
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(n, std::move(built));
  return it->second;
}

}  // namespace

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n, x = n;
  for (std::int64_t q = 2; q * q <= x; ++q) {
    if (x % q == 0) {
      while (x % q == 0) x /= q;
      result -= result / q;
    }
  }
  if (x > 1) result -= result / x;
  return result;
}

const IntegerPolynomial& cyclotomic_polynomial(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  static std::mutex mu;
  static std::map<std::int64_t, std::shared_ptr<const ConductorTable>> pinned;
  auto tbl = conductor_table(n);
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = pinned.emplace(n, std::move(tbl));
  return it->second->phi;
}

CyclotomicElement::CyclotomicElement(std::int64_t conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
  if (conductor_ < 1) throw std::invalid_argument("cyclotomic element: conductor must be positive");
  if (static_cast<std::int64_t>(coeffs_.size()) != euler_phi(conductor_)) {
    throw std::invalid_argument("cyclotomic element: coefficient vector must have length phi(n)");
  }
}

CyclotomicElement CyclotomicElement::zero(std::int64_t n) {
  return CyclotomicElement(n, std::vector<Rational>(static_cast<std::size_t>(euler_phi(n))));
}

CyclotomicElement CyclotomicElement::one(std::int64_t n) {
  return from_rational(n, Rational(1));
}

CyclotomicElement CyclotomicElement::from_rational(std::int64_t n, const Rational& q) {
  std::vector<Rational> c(static_cast<std::size_t>(euler_phi(n)));
  c[0] = q;
  return CyclotomicElement(n, std::move(c));
}

CyclotomicElement CyclotomicElement::root_of_unity(std::int64_t n, std::int64_t k) {
  auto tbl = conductor_table(n);
  k = ((k % n) + n) % n;
  const auto& pw = tbl->powers[static_cast<std::size_t>(k)];
  std::vector<Rational> c(pw.size());
  for (std::size_t j = 0; j < pw.size(); ++j) c[j] = Rational(pw[j]);
  return CyclotomicElement(n, std::move(c));
}

CyclotomicElement CyclotomicElement::operator+(const CyclotomicElement& o) const {
  if (conductor_ != o.conductor_) throw std::invalid_argument("cyclotomic add: conductor mismatch");
  std::vector<Rational> c(coeffs_.size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = coeffs_[j] + o.coeffs_[j];
  return CyclotomicElement(conductor_, std::move(c));
}

CyclotomicElement CyclotomicElement::operator-(const CyclotomicElement& o) const {
  if (conductor_ != o.conductor_) throw std::invalid_argument("cyclotomic sub: conductor mismatch");
  std::vector<Rational> c(coeffs_.size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = coeffs_[j] - o.coeffs_[j];
  return CyclotomicElement(conductor_, std::move(c));
}

CyclotomicElement CyclotomicElement::operator-() const {
  std::vector<Rational> c(coeffs_.size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = -coeffs_[j];
  return CyclotomicElement(conductor_, std::move(c));
}

CyclotomicElement CyclotomicElement::scalar_mul(const Rational& q) const {
  std::vector<Rational> c(coeffs_.size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = coeffs_[j] * q;
  return CyclotomicElement(conductor_, std::move(c));
}

CyclotomicElement CyclotomicElement::operator*(const CyclotomicElement& o) const {
  if (conductor_ != o.conductor_) throw std::invalid_argument("cyclotomic mul: conductor mismatch");
  auto tbl = conductor_table(conductor_);
  const std::size_t deg = coeffs_.size();
  std::vector<Rational> conv(2 * deg - 1 > 0 ? 2 * deg - 1 : 1);
  for (std::size_t i = 0; i < deg; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      if (o.coeffs_[j] != 0) conv[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  std::vector<Rational> out(deg);
  for (std::size_t k = 0; k < conv.size(); ++k) {
    if (conv[k] == 0) continue;
    const auto& pw = tbl->powers[k];
    for (std::size_t j = 0; j < deg; ++j) {
      if (pw[j] != 0) out[j] += conv[k] * Rational(pw[j]);
    }
  }
  return CyclotomicElement(conductor_, std::move(out));
}

CyclotomicElement CyclotomicElement::conjugate() const {
  auto tbl = conductor_table(conductor_);
  const std::size_t deg = coeffs_.size();
  std::vector<Rational> out(deg);
  for (std::size_t j = 0; j < deg; ++j) {
    if (coeffs_[j] == 0) continue;
    const std::int64_t k = (conductor_ - static_cast<std::int64_t>(j)) % conductor_;
    const auto& pw = tbl->powers[static_cast<std::size_t>(k)];
    for (std::size_t t = 0; t < deg; ++t) {
      if (pw[t] != 0) out[t] += coeffs_[j] * Rational(pw[t]);
    }
  }
  return CyclotomicElement(conductor_, std::move(out));
}

bool CyclotomicElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CyclotomicElement::operator==(const CyclotomicElement& o) const {
  return conductor_ == o.conductor_ && coeffs_ == o.coeffs_;
}

std::string CyclotomicElement::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (j) os << ",";
    os << rational_to_string(coeffs_[j]);
  }
  os << "]";
  return os.str();
}

}  // namespace lefschetz
