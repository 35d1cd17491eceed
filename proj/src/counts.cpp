#include "tube/counts.hpp"

#include <stdexcept>

namespace tube {

BigInt binomial(long long a, long long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt r = 1;
  for (long long t = 1; t <= b; ++t) {
    r *= a - b + t;
    r /= t;
  }
  return r;
}

BigInt multinomial(const std::vector<long long>& parts) {
  BigInt r = 1;
  long long total = 0;
  for (long long p : parts) {
    if (p < 0) return 0;
    total += p;
    r *= binomial(total, p);
  }
  return r;
}

BigInt torsion_count(int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  BigInt sum = 0;
  for (long long l = 0; n - 1 - 2 * l >= 0; ++l) {
    sum += (BigInt(1) << (l + 1)) * binomial(n - 1 + l, l) * binomial(2LL * n - 1, n - 1 - 2 * l);
  }
  return sum;
}

BigInt torsion_count_refined(int n, int k, int l, int m) {
  if (n < 1 || k < 0 || l < 0 || m < 0) return 0;
  return 2 * multinomial({n - 1, k, l, m}) * binomial(n - 1 - k - l - m, l + m);
}

std::map<CellStatistics, BigInt> refined_table(int n) {
  std::map<CellStatistics, BigInt> out;
  for (int k = 0; k <= n - 1; ++k) {
    for (int l = 0; k + 2 * l <= n - 1; ++l) {
      for (int m = 0; k + 2 * (l + m) <= n - 1; ++m) {
        BigInt c = torsion_count_refined(n, k, l, m);
        if (c != 0) out[{k, l, m}] = std::move(c);
      }
    }
  }
  return out;
}

long long euler_phi(long long n) {
  long long result = n;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace tube
