#pragma once

// Univariate integer polynomials in q, q-analogues, and exact evaluation at
// primitive roots of unity.

#include "tube/bigint.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tube {

class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<BigInt> coeffs);
  static QPoly constant(const BigInt& c);
  /// q^e
  static QPoly monomial(int e, const BigInt& c = 1);

  /// Coefficients of q^0..q^deg; empty for the zero polynomial.
  const std::vector<BigInt>& coefficients() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  BigInt at(const BigInt& q) const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const BigInt& s, QPoly a);
  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// Remainder modulo a monic polynomial.
  QPoly mod_monic(const QPoly& divisor) const;
  /// Exact quotient by a monic divisor; throws if the remainder is nonzero.
  QPoly div_exact_monic(const QPoly& divisor) const;

  std::string str() const;

 private:
  void normalize();
  std::vector<BigInt> c_;
};

/// [n]_q = 1 + q + ... + q^(n-1)
QPoly qinteger(int n);
/// [n]_q!
QPoly qfactorial(int n);
/// Gaussian binomial; the zero polynomial unless 0 <= b <= a.
QPoly qbinomial(int a, int b);
/// q-multinomial [sum parts; parts]_q; zero if any part is negative.
QPoly qmultinomial(const std::vector<int>& parts);

/// The d-th cyclotomic polynomial.
QPoly cyclotomic(int d);

/// p(omega) for a primitive d-th root of unity omega, by reduction modulo the
/// d-th cyclotomic polynomial. Throws std::domain_error if the value is not
/// an integer.
BigInt eval_at_primitive_root(const QPoly& p, int d);

/// [a choose b]_q at a primitive d-th root via the q-Lucas theorem, when it
/// reduces to an ordinary binomial or to zero; nullopt otherwise.
std::optional<BigInt> qlucas_binomial(int a, int b, int d);

}  // namespace tube
