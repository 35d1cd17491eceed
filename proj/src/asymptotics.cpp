#include "tube/asymptotics.hpp"

#include "tube/counts.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <stdexcept>

namespace tube {

namespace {

RealPoly trimmed(RealPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

RealPoly derivative(const RealPoly& p) {
  RealPoly out;
  for (std::size_t k = 1; k < p.size(); ++k) out.push_back(p[k] * static_cast<int>(k));
  return out;
}

int sign(const Decimal& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Cauchy bound on the absolute value of every root.
Decimal root_bound(const RealPoly& p) {
  Decimal m = 0;
  for (std::size_t k = 0; k + 1 < p.size(); ++k) m = std::max(m, Decimal(abs(p[k] / p.back())));
  return m + 1;
}

Decimal bisect(const RealPoly& p, Decimal lo, Decimal hi, const Decimal& tol) {
  int slo = sign(evaluate(p, lo));
  if (slo == 0) return lo;
  if (sign(evaluate(p, hi)) == 0) return hi;
  while (hi - lo > tol) {
    const Decimal mid = (lo + hi) / 2;
    const int sm = sign(evaluate(p, mid));
    if (sm == 0) return mid;
    if (sm == slo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

// All distinct real roots in increasing order. Between consecutive critical
// points the polynomial is monotone, so each interval holds at most one root.
std::vector<Decimal> real_roots(const RealPoly& raw, const Decimal& tol) {
  const RealPoly p = trimmed(raw);
  if (p.size() <= 1) return {};
  const Decimal bound = root_bound(p);
  std::vector<Decimal> marks{-bound};
  for (const Decimal& c : real_roots(derivative(p), tol)) marks.push_back(c);
  marks.push_back(bound);

  std::vector<Decimal> roots;
  for (std::size_t k = 0; k + 1 < marks.size(); ++k) {
    const Decimal& a = marks[k];
    const Decimal& b = marks[k + 1];
    const int sa = sign(evaluate(p, a));
    const int sb = sign(evaluate(p, b));
    Decimal r;
    if (sa == 0) {
      r = a;
    } else if (sa != sb) {
      r = bisect(p, a, b, tol);
    } else {
      continue;
    }
    if (roots.empty() || abs(roots.back() - r) > tol * 10) roots.push_back(r);
  }
  if (sign(evaluate(p, marks.back())) == 0 &&
      (roots.empty() || abs(roots.back() - marks.back()) > tol * 10)) {
    roots.push_back(marks.back());
  }
  return roots;
}

}  // namespace

Decimal evaluate(const RealPoly& coeffs, const Decimal& x) {
  Decimal acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Decimal real_root(const RealPoly& coeffs, RootChoice which, const Decimal& tol) {
  std::vector<Decimal> positive;
  for (const Decimal& r : real_roots(coeffs, tol)) {
    if (r > 0) positive.push_back(r);
  }
  if (positive.empty()) throw std::domain_error("polynomial has no positive real root");
  return which == RootChoice::LargestPositive ? positive.back() : positive.front();
}

Decimal real_root_in(const RealPoly& coeffs, const Decimal& lo, const Decimal& hi, const Decimal& tol) {
  if (!(lo < hi)) throw std::domain_error("empty bracket");
  const int slo = sign(evaluate(coeffs, lo));
  const int shi = sign(evaluate(coeffs, hi));
  if (slo != 0 && shi != 0 && slo == shi) throw std::domain_error("no sign change in bracket");
  return bisect(coeffs, lo, hi, tol);
}

RealPoly rho_polynomial() { return {4, -47, -48, 8}; }

RealPoly alpha_polynomial() { return {4, 0, -72, 0, 213, 0, 71}; }

Decimal growth_rate() { return real_root(rho_polynomial(), RootChoice::LargestPositive); }

Decimal growth_constant() { return real_root(alpha_polynomial(), RootChoice::SmallestPositive); }

AsymptoticEstimate asymptotic_check(int n) {
  if (n < 2) throw std::invalid_argument("asymptotic_check needs n >= 2");
  const Decimal tn(torsion_count(n));
  const Decimal tn1(torsion_count(n + 1));
  const Decimal rho = growth_rate();
  const Decimal pi = boost::math::constants::pi<Decimal>();
  return {tn1 / tn, tn * sqrt(pi * n) / pow(rho, n)};
}

}  // namespace tube
