#include "doctest.h"

#include "tube/counts.hpp"
#include "tube/errors.hpp"
#include "tube/qpoly.hpp"
#include "tube/sieve.hpp"
#include "tube/torsion.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <numbers>

using namespace tube;

namespace {

QPoly poly(std::initializer_list<int> c) {
  std::vector<BigInt> v;
  for (int x : c) v.emplace_back(x);
  return QPoly(v);
}

// Floating evaluation at exp(2 pi i / d), as an independent cross-check.
std::complex<double> at_root(const QPoly& p, int d) {
  const std::complex<double> w = std::polar(1.0, 2 * std::numbers::pi / d);
  std::complex<double> acc = 0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * w + static_cast<double>(*it);
  return acc;
}

}  // namespace

TEST_CASE("QPoly normalization and arithmetic") {
  CHECK(poly({1, 2, 0, 0}).degree() == 1);
  CHECK(poly({0, 0}).is_zero());
  CHECK(poly({1, 1}) * poly({1, -1}) == poly({1, 0, -1}));
  CHECK((poly({1, 1}) - poly({1, 1})).is_zero());
  CHECK(poly({1, 2, 1}).str() == "1 + 2q + q^2");
  CHECK(poly({1, 2, 1}).at(2) == 9);
}

TEST_CASE("q-integers and q-binomials") {
  CHECK(qbinomial(2, 1) == poly({1, 1}));
  CHECK(qbinomial(4, 2) == poly({1, 1, 2, 1, 1}));
  CHECK(qbinomial(7, 0) == poly({1}));
  CHECK(qbinomial(3, 4).is_zero());
  CHECK(qbinomial(-1, 0).is_zero());
  CHECK(qinteger(3) == poly({1, 1, 1}));
  // Definition through q-factorials.
  for (int a = 0; a <= 9; ++a) {
    for (int b = 0; b <= a; ++b) {
      CHECK(qbinomial(a, b) * qfactorial(b) * qfactorial(a - b) == qfactorial(a));
      CHECK(qbinomial(a, b).at(1) == binomial(a, b));
    }
  }
  CHECK(qmultinomial({2, 1, 1}).at(1) == 12);
  CHECK(qmultinomial({1, -1}).is_zero());
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == poly({-1, 1}));
  CHECK(cyclotomic(2) == poly({1, 1}));
  CHECK(cyclotomic(4) == poly({1, 0, 1}));
  CHECK(cyclotomic(6) == poly({1, -1, 1}));
  for (int d = 1; d <= 30; ++d) {
    QPoly prod = QPoly::constant(1);
    for (int e = 1; e <= d; ++e) {
      if (d % e == 0) prod = prod * cyclotomic(e);
    }
    CHECK(prod == QPoly::monomial(d) - QPoly::constant(1));
    CHECK(cyclotomic(d).degree() == euler_phi(d));
  }
}

TEST_CASE("evaluation at primitive roots of unity") {
  CHECK(eval_at_primitive_root(qbinomial(2, 1), 2) == 0);
  CHECK(eval_at_primitive_root(qbinomial(4, 2), 2) == 2);
  CHECK(eval_at_primitive_root(BigInt(2) * qbinomial(2, 1), 2) == 0);
  CHECK(eval_at_primitive_root(torsion_qcount(2, 1, 0, 0), 2) == 0);
  CHECK(eval_at_primitive_root(poly({3, 4}), 1) == 7);
  CHECK_THROWS_AS(eval_at_primitive_root(poly({0, 1}), 3), std::domain_error);
}

TEST_CASE("q-Lucas agrees with cyclotomic reduction, a <= 40") {
  for (int a = 0; a <= 40; ++a) {
    for (int b = 0; b <= a; ++b) {
      const QPoly p = qbinomial(a, b);
      for (int d = 1; d <= 12; ++d) {
        if (b % d == 0) CHECK(eval_at_primitive_root(p, d) == binomial(a / d, b / d));
        if (const auto v = qlucas_binomial(a, b, d)) CHECK(eval_at_primitive_root(p, d) == *v);
      }
    }
  }
}

TEST_CASE("exact root values agree with floating evaluation") {
  for (int a = 0; a <= 14; ++a) {
    for (int b = 0; b <= a; ++b) {
      for (int d = 1; d <= 6; ++d) {
        const QPoly p = qbinomial(a, b);
        const auto z = at_root(p, d);
        BigInt exact;
        try {
          exact = eval_at_primitive_root(p, d);
        } catch (const std::domain_error&) {
          // Not an integer: the floating value must not be one either.
          CHECK(std::abs(z - std::round(z.real())) > 1e-6);
          continue;
        }
        CHECK(std::abs(z - std::complex<double>(static_cast<double>(exact), 0)) < 1e-6);
      }
    }
  }
}

TEST_CASE("q-counts specialize to the refined counts at q = 1") {
  for (int n = 1; n <= 10; ++n) {
    for (const auto& [s, c] : refined_table(n)) {
      CHECK(torsion_qcount(n, s.triangles, s.cliques, s.empty_cells).at(1) == c);
    }
  }
}

TEST_CASE("multinomial factor vanishes when d does not divide k, l, m, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (int d = 2; d <= n; ++d) {
      if (n % d != 0) continue;
      for (const auto& [s, c] : refined_table(n)) {
        if (s.triangles % d == 0 && s.cliques % d == 0 && s.empty_cells % d == 0) continue;
        CHECK(eval_at_primitive_root(qmultinomial({n - 1, s.triangles, s.cliques, s.empty_cells}), d) == 0);
      }
    }
  }
}

TEST_CASE("csp_verify examples at rank 2") {
  const SieveReport r = csp_verify(2);
  CHECK(r.all_match);
  bool seen_empty = false;
  bool seen_triangle = false;
  for (const SieveEntry& e : r.entries) {
    if (e.d == 2 && e.k == 0 && e.l == 0 && e.m == 0) {
      CHECK(e.poly_value == 2);
      CHECK(e.fixed_count == 2);
      seen_empty = true;
    }
    if (e.d == 2 && e.k == 1 && e.l == 0 && e.m == 0) {
      CHECK(e.poly_value == 0);
      CHECK(e.fixed_count == 0);
      seen_triangle = true;
    }
    if (e.d == 1) CHECK(e.poly_value == torsion_count_refined(2, e.k, e.l, e.m));
  }
  CHECK(seen_empty);
  CHECK(seen_triangle);
}

TEST_CASE("cyclic sieving holds, n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    const SieveReport r = csp_verify(n);
    CHECK(r.all_match);
    for (const SieveEntry& e : r.entries) {
      CHECK(e.match);
      // Independent recount of the fixed points for this entry.
      if (n <= 4) {
        BigInt fixed = 0;
        for (const PeriodicDiagram& x : enumerate_structured(n)) {
          const CellStatistics s = statistics(x);
          if (tau(x, n / e.d) == x && s == CellStatistics{e.k, e.l, e.m}) fixed += 2;
        }
        CHECK(fixed == e.fixed_count);
      }
    }
  }
  CHECK_THROWS_AS(csp_verify(10), CapExceeded);
}
