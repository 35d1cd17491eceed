#include "tube/qpoly.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace tube {

QPoly::QPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

QPoly QPoly::constant(const BigInt& c) { return QPoly(std::vector<BigInt>{c}); }

QPoly QPoly::monomial(int e, const BigInt& c) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  std::vector<BigInt> v(static_cast<std::size_t>(e) + 1);
  v.back() = c;
  return QPoly(std::move(v));
}

void QPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt QPoly::at(const BigInt& q) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  normalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  normalize();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(out));
}

QPoly operator*(const BigInt& s, QPoly a) {
  for (BigInt& c : a.c_) c *= s;
  a.normalize();
  return a;
}

QPoly QPoly::mod_monic(const QPoly& divisor) const {
  if (divisor.is_zero() || divisor.c_.back() != 1) throw std::invalid_argument("divisor must be monic");
  std::vector<BigInt> r = c_;
  const std::size_t dd = divisor.c_.size() - 1;
  for (std::size_t top = r.size(); top-- > dd;) {
    const BigInt lead = r[top];
    if (lead == 0) continue;
    for (std::size_t k = 0; k <= dd; ++k) r[top - dd + k] -= lead * divisor.c_[k];
  }
  return QPoly(std::move(r));
}

QPoly QPoly::div_exact_monic(const QPoly& divisor) const {
  if (divisor.is_zero() || divisor.c_.back() != 1) throw std::invalid_argument("divisor must be monic");
  const std::size_t dd = divisor.c_.size() - 1;
  if (c_.size() <= dd) {
    if (!is_zero()) throw std::domain_error("inexact polynomial division");
    return {};
  }
  std::vector<BigInt> r = c_;
  std::vector<BigInt> quot(c_.size() - dd);
  for (std::size_t top = r.size(); top-- > dd;) {
    const BigInt lead = r[top];
    quot[top - dd] = lead;
    if (lead == 0) continue;
    for (std::size_t k = 0; k <= dd; ++k) r[top - dd + k] -= lead * divisor.c_[k];
  }
  for (const BigInt& v : r) {
    if (v != 0) throw std::domain_error("inexact polynomial division");
  }
  return QPoly(std::move(quot));
}

std::string QPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    const BigInt mag = c_[k] < 0 ? BigInt(-c_[k]) : c_[k];
    if (first) {
      if (c_[k] < 0) os << '-';
    } else {
      os << (c_[k] < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || k == 0) os << mag;
    if (k >= 1) os << 'q';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

QPoly qinteger(int n) {
  if (n <= 0) return {};
  return QPoly(std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(1)));
}

QPoly qfactorial(int n) {
  QPoly out = QPoly::constant(1);
  for (int k = 2; k <= n; ++k) out = out * qinteger(k);
  return out;
}

QPoly qbinomial(int a, int b) {
  if (a < 0 || b < 0 || b > a) return {};
  if (b > a - b) b = a - b;
  // Pascal: [r, s] = [r-1, s-1] + q^s [r-1, s], kept for s <= b.
  std::vector<QPoly> row(static_cast<std::size_t>(b) + 1);
  row[0] = QPoly::constant(1);
  for (int r = 1; r <= a; ++r) {
    for (int s = std::min(r, b); s >= 1; --s) {
      row[static_cast<std::size_t>(s)] =
          row[static_cast<std::size_t>(s - 1)] + QPoly::monomial(s) * row[static_cast<std::size_t>(s)];
    }
  }
  return row[static_cast<std::size_t>(b)];
}

QPoly qmultinomial(const std::vector<int>& parts) {
  QPoly out = QPoly::constant(1);
  int total = 0;
  for (int p : parts) {
    if (p < 0) return {};
    total += p;
    out = out * qbinomial(total, p);
  }
  return out;
}

QPoly cyclotomic(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic: d must be positive");
  static std::mutex lock;
  static std::map<int, QPoly> cache;
  {
    std::lock_guard guard(lock);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  QPoly p = QPoly::monomial(d) - QPoly::constant(1);
  for (int e = 1; e < d; ++e) {
    if (d % e == 0) p = p.div_exact_monic(cyclotomic(e));
  }
  std::lock_guard guard(lock);
  cache.emplace(d, p);
  return p;
}

BigInt eval_at_primitive_root(const QPoly& p, int d) {
  const QPoly r = p.mod_monic(cyclotomic(d));
  if (r.degree() > 0) {
    throw std::domain_error("value at a primitive " + std::to_string(d) +
                            "-th root of unity is not an integer: remainder " + r.str());
  }
  return r.is_zero() ? BigInt(0) : r.coefficients()[0];
}

std::optional<BigInt> qlucas_binomial(int a, int b, int d) {
  if (d < 1) throw std::invalid_argument("qlucas_binomial: d must be positive");
  if (a < 0 || b < 0 || b > a) return BigInt(0);
  const int a0 = a % d;
  const int b0 = b % d;
  if (b0 == 0) return binomial(a / d, b / d);
  if (b0 > a0) return BigInt(0);
  return std::nullopt;
}

}  // namespace tube
