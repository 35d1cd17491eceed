#include "tube/series.hpp"

#include <sstream>
#include <stdexcept>

namespace tube {

MultiPoly::MultiPoly(long long constant) : MultiPoly(BigInt(constant)) {}

MultiPoly::MultiPoly(const BigInt& constant) {
  if (constant != 0) terms_[{}] = constant;
}

MultiPoly MultiPoly::x() { return term(1, {1, 0, 0}); }
MultiPoly MultiPoly::y1() { return term(1, {0, 1, 0}); }
MultiPoly MultiPoly::y2() { return term(1, {0, 0, 1}); }

MultiPoly MultiPoly::term(const BigInt& c, Monomial mono) {
  MultiPoly p;
  p.add_term(mono, c);
  return p;
}

void MultiPoly::add_term(Monomial mono, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt MultiPoly::coefficient(Monomial mono) const {
  const auto it = terms_.find(mono);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt MultiPoly::evaluate(long long x, long long y1, long long y2) const {
  BigInt sum = 0;
  for (const auto& [mono, c] : terms_) {
    sum += c * boost::multiprecision::pow(BigInt(x), static_cast<unsigned>(mono.x)) *
           boost::multiprecision::pow(BigInt(y1), static_cast<unsigned>(mono.y1)) *
           boost::multiprecision::pow(BigInt(y2), static_cast<unsigned>(mono.y2));
  }
  return sum;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [mono, c] : o.terms_) add_term(mono, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, v] : terms_) v *= c;
  return *this;
}

void MultiPoly::add_product(const MultiPoly& a, const MultiPoly& b) {
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      add_term({ma.x + mb.x, ma.y1 + mb.y1, ma.y2 + mb.y2}, ca * cb);
    }
  }
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  out.add_product(a, b);
  return out;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first, matching the usual way of writing these.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [mono, c] = *it;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool bare = mono == Monomial{};
    if (mag != 1 || bare) os << mag;
    const auto var = [&os](const char* name, int e) {
      if (e == 0) return;
      os << name;
      if (e > 1) os << '^' << e;
    };
    var("x", mono.x);
    var("y1", mono.y1);
    var("y2", mono.y2);
  }
  return os.str();
}

SeriesPoly::SeriesPoly(int order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

SeriesPoly& SeriesPoly::operator+=(const SeriesPoly& o) {
  if (o.order() != order()) throw std::invalid_argument("series order mismatch");
  for (int k = 0; k <= order(); ++k) (*this)[k] += o[k];
  return *this;
}

SeriesPoly& SeriesPoly::operator-=(const SeriesPoly& o) {
  if (o.order() != order()) throw std::invalid_argument("series order mismatch");
  for (int k = 0; k <= order(); ++k) (*this)[k] -= o[k];
  return *this;
}

SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
  SeriesPoly out(a.order());
  for (int i = 0; i <= a.order(); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= a.order(); ++j) out[i + j].add_product(a[i], b[j]);
  }
  return out;
}

SeriesPoly operator*(const MultiPoly& c, const SeriesPoly& a) {
  SeriesPoly out(a.order());
  for (int k = 0; k <= a.order(); ++k) out[k] = c * a[k];
  return out;
}

SeriesPoly SeriesPoly::derivative() const {
  SeriesPoly out(std::max(order() - 1, 0));
  for (int k = 1; k <= order(); ++k) out[k - 1] = (*this)[k] * BigInt(k);
  return out;
}

SeriesPoly SeriesPoly::pointed() const {
  SeriesPoly out(order());
  for (int k = 1; k <= order(); ++k) out[k] = (*this)[k] * BigInt(k);
  return out;
}

SeriesPoly SeriesPoly::inverse() const {
  const MultiPoly& c0 = (*this)[0];
  const BigInt unit = c0.coefficient({});
  if (c0.terms().size() != 1 || (unit != 1 && unit != -1)) {
    throw std::domain_error("series inverse needs constant term 1 or -1");
  }
  SeriesPoly out(order());
  out[0] = MultiPoly(unit);
  for (int k = 1; k <= order(); ++k) {
    MultiPoly acc;
    for (int j = 1; j <= k; ++j) acc.add_product((*this)[j], out[k - j]);
    out[k] = acc * BigInt(-unit);
  }
  return out;
}

SeriesPoly SeriesPoly::truncated(int order) const {
  if (order > this->order()) throw std::invalid_argument("cannot raise truncation order");
  SeriesPoly out(order);
  for (int k = 0; k <= order; ++k) out[k] = (*this)[k];
  return out;
}

SeriesPoly SeriesPoly::z(int order) {
  SeriesPoly out(order);
  if (order >= 1) out[1] = MultiPoly(1);
  return out;
}

SeriesPoly SeriesPoly::constant(int order, const MultiPoly& c) {
  SeriesPoly out(order);
  out[0] = c;
  return out;
}

SeriesPoly series_P(int order, const CellWeights& w) {
  if (order < 1) throw std::invalid_argument("series_P: order must be at least 1");
  // The z^k coefficient of the right-hand side only involves P_1..P_{k-1}:
  //   S2 = P^2, S3 = P^3, R = P^3/(1-P) = S3 + P R.
  SeriesPoly p(order), s2(order), s3(order), r(order);
  const MultiPoly y = w.y1 + w.y2;
  p[1] = MultiPoly(1);
  for (int k = 2; k <= order; ++k) {
    for (int j = 1; j < k; ++j) s2[k].add_product(p[j], p[k - j]);
    for (int j = 1; j + 2 <= k; ++j) s3[k].add_product(p[j], s2[k - j]);
    r[k] = s3[k];
    for (int j = 1; j + 3 <= k; ++j) r[k].add_product(p[j], r[k - j]);
    p[k] = w.x * s2[k] + y * r[k];
  }
  return p;
}

SeriesPoly series_torsion(int order, const CellWeights& w) {
  const SeriesPoly p = series_P(order, w);
  SeriesPoly one_minus_p = SeriesPoly::constant(order, 1) - p;
  SeriesPoly out = p.pointed() * one_minus_p.inverse();
  return MultiPoly(2) * out;
}

MultiPoly lagrange_coefficient(int n) {
  if (n < 1) throw std::invalid_argument("lagrange_coefficient: n must be positive");
  MultiPoly out;
  // Term (k, l, m) contributes z^(k + 2(l+m)) / (1-z)^(l+m+1); the z^i
  // coefficient of the latter is C(l+m+i, l+m).
  for (int k = 0; k <= n - 1; ++k) {
    for (int l = 0; k + 2 * l <= n - 1; ++l) {
      for (int m = 0; k + 2 * (l + m) <= n - 1; ++m) {
        const int i = n - 1 - k - 2 * (l + m);
        const BigInt c = 2 * multinomial({n - 1, k, l, m}) * binomial(l + m + i, l + m);
        out += MultiPoly::term(c, {k, l, m});
      }
    }
  }
  return out;
}

MultiPoly lagrange_inversion_coefficient(int n, const CellWeights& w) {
  if (n < 1) throw std::invalid_argument("lagrange_inversion_coefficient: n must be positive");
  const int order = n - 1;
  SeriesPoly geometric(order);  // 1/(1-z)
  for (int k = 0; k <= order; ++k) geometric[k] = MultiPoly(1);
  // z^2/(1-z) truncated
  SeriesPoly z2_geo(order);
  for (int k = 2; k <= order; ++k) z2_geo[k] = MultiPoly(1);

  // Q(z)/z = 1 - x z - (y1+y2) z^2/(1-z)
  SeriesPoly q_over_z = SeriesPoly::constant(order, 1);
  if (order >= 1) q_over_z[1] -= w.x;
  q_over_z -= (w.y1 + w.y2) * z2_geo;
  const SeriesPoly z_over_q = q_over_z.inverse();

  SeriesPoly power = SeriesPoly::constant(order, 1);
  for (int t = 0; t < n; ++t) power = power * z_over_q;
  const SeriesPoly full = geometric * power;
  return full[order] * BigInt(2);
}

}  // namespace tube
