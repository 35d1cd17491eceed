#pragma once

// Truncated power series in z whose coefficients are polynomials in the cell
// weights x (triangles), y1 (cliques) and y2 (empty cells).

#include "tube/bigint.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace tube {

struct Monomial {
  int x = 0;
  int y1 = 0;
  int y2 = 0;
  friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sparse polynomial in x, y1, y2 over the integers. Never stores zeros.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(long long constant);  // NOLINT(google-explicit-constructor)
  MultiPoly(const BigInt& constant);  // NOLINT(google-explicit-constructor)

  static MultiPoly x();
  static MultiPoly y1();
  static MultiPoly y2();
  static MultiPoly term(const BigInt& c, Monomial mono);

  const std::map<Monomial, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(Monomial mono) const;
  BigInt evaluate(long long x, long long y1, long long y2) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const BigInt& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const BigInt& c) { return a *= c; }
  friend MultiPoly operator*(const BigInt& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  /// Adds c * a * b without materializing the product.
  void add_product(const MultiPoly& a, const MultiPoly& b);

  /// Human-readable form, e.g. "2x^2 + y1 + y2".
  std::string str() const;

 private:
  void add_term(Monomial mono, const BigInt& c);
  std::map<Monomial, BigInt> terms_;
};

/// Coefficients of z^0 .. z^order; higher powers are discarded.
class SeriesPoly {
 public:
  explicit SeriesPoly(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const MultiPoly& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  MultiPoly& operator[](int k) { return coeffs_[static_cast<std::size_t>(k)]; }
  const std::vector<MultiPoly>& coefficients() const { return coeffs_; }

  SeriesPoly& operator+=(const SeriesPoly& o);
  SeriesPoly& operator-=(const SeriesPoly& o);
  friend SeriesPoly operator+(SeriesPoly a, const SeriesPoly& b) { return a += b; }
  friend SeriesPoly operator-(SeriesPoly a, const SeriesPoly& b) { return a -= b; }
  friend SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b);
  friend SeriesPoly operator*(const MultiPoly& c, const SeriesPoly& a);
  friend bool operator==(const SeriesPoly&, const SeriesPoly&) = default;

  /// d/dz; the result has order() - 1.
  SeriesPoly derivative() const;
  /// z * d/dz, i.e. pointing; the order is kept.
  SeriesPoly pointed() const;
  /// Multiplicative inverse. The constant term must be 1 or -1.
  SeriesPoly inverse() const;
  /// Same series truncated at a lower order.
  SeriesPoly truncated(int order) const;

  /// The series z at the given order.
  static SeriesPoly z(int order);
  static SeriesPoly constant(int order, const MultiPoly& c);

 private:
  std::vector<MultiPoly> coeffs_;
};

/// Values substituted for the cell weights. The default keeps them symbolic.
struct CellWeights {
  MultiPoly x = MultiPoly::x();
  MultiPoly y1 = MultiPoly::y1();
  MultiPoly y2 = MultiPoly::y2();

  static CellWeights all_ones() { return {1, 1, 1}; }
};

inline constexpr int kDefaultSeriesOrder = 24;

/// Generating function of polygon Ptolemy diagrams, solving
/// P = z + x P^2 + (y1 + y2) P^3 / (1 - P) one degree at a time.
SeriesPoly series_P(int order, const CellWeights& w = {});

/// 2 z P'(z) / (1 - P(z)): the z^n coefficient counts torsion pairs in C_n.
SeriesPoly series_torsion(int order, const CellWeights& w = {});

/// z^n coefficient of series_torsion, from the multinomial expansion of
/// (1 - X - Y1 - Y2)^(-n) with X = xz, Yi = yi z^2 / (1 - z).
MultiPoly lagrange_coefficient(int n);

/// Same coefficient as 2 [z^(n-1)] (1/(1-z)) (z/Q(z))^n with the compositional
/// inverse Q(z) = z (1 - xz - (y1+y2) z^2/(1-z)) expanded as a series.
MultiPoly lagrange_inversion_coefficient(int n, const CellWeights& w = {});

}  // namespace tube
