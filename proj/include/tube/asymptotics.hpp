#pragma once

// Growth constants of the torsion pair counts.

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <vector>

namespace tube {

using Decimal = boost::multiprecision::cpp_dec_float_50;

enum class RootChoice { LargestPositive, SmallestPositive };

/// Coefficients are listed from the constant term upwards.
using RealPoly = std::vector<Decimal>;

/// A real root of the polynomial, isolated through the roots of its
/// derivatives and refined by bisection to within tol. Throws
/// std::domain_error when no positive root exists.
Decimal real_root(const RealPoly& coeffs, RootChoice which, const Decimal& tol = Decimal("1e-40"));

/// Root inside [lo, hi] by bisection; throws std::domain_error if the
/// endpoint values do not bracket a sign change.
Decimal real_root_in(const RealPoly& coeffs, const Decimal& lo, const Decimal& hi,
                     const Decimal& tol = Decimal("1e-40"));

Decimal evaluate(const RealPoly& coeffs, const Decimal& x);

/// 8x^3 - 48x^2 - 47x + 4
RealPoly rho_polynomial();
/// 71x^6 + 213x^4 - 72x^2 + 4
RealPoly alpha_polynomial();

/// Exponential growth rate of T_n.
Decimal growth_rate();
/// Constant in T_n ~ alpha rho^n / sqrt(pi n).
Decimal growth_constant();

struct AsymptoticEstimate {
  Decimal ratio;  // T_{n+1} / T_n
  Decimal alpha;  // T_n sqrt(pi n) / rho^n
};

AsymptoticEstimate asymptotic_check(int n);

}  // namespace tube
