#include "tube/sieve.hpp"

#include "tube/counts.hpp"
#include "tube/errors.hpp"
#include "tube/torsion.hpp"

#include <map>
#include <stdexcept>

namespace tube {

QPoly torsion_qcount(int n, int k, int l, int m) {
  if (n < 1 || k < 0 || l < 0 || m < 0) return {};
  return BigInt(2) * (qmultinomial({n - 1, k, l, m}) * qbinomial(n - 1 - k - l - m, l + m));
}

SieveReport csp_verify(int n, int structured_cap) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  if (n > structured_cap) throw CapExceeded("csp_verify", n, structured_cap);

  const std::vector<PeriodicDiagram> halves = enumerate_structured(n, structured_cap);
  const std::map<CellStatistics, BigInt> table = refined_table(n);

  SieveReport report;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    // tau^(n/d) generates the order-d subgroup of <tau>. Each fixed half
    // yields two fixed pairs, since tau preserves which side is finite.
    std::map<CellStatistics, BigInt> fixed;
    for (const PeriodicDiagram& x : fixed_under(halves, n / d)) fixed[statistics(x)] += 2;

    for (const auto& [s, count] : table) {
      SieveEntry e;
      e.n = n;
      e.d = d;
      e.k = s.triangles;
      e.l = s.cliques;
      e.m = s.empty_cells;
      e.poly_value = eval_at_primitive_root(torsion_qcount(n, e.k, e.l, e.m), d);
      if (auto it = fixed.find(s); it != fixed.end()) e.fixed_count = it->second;
      const bool divisible = e.k % d == 0 && e.l % d == 0 && e.m % d == 0;
      e.formula = divisible ? torsion_count_refined(n / d, e.k / d, e.l / d, e.m / d) : BigInt(0);
      bool ok = e.poly_value == e.fixed_count && e.poly_value == e.formula;
      if (!divisible) {
        // The multinomial factor alone already vanishes.
        ok = ok && eval_at_primitive_root(qmultinomial({n - 1, e.k, e.l, e.m}), d) == 0;
      }
      e.match = ok;
      report.all_match = report.all_match && ok;
      report.entries.push_back(std::move(e));
    }
    // Fixed pairs whose statistics have no nonzero count would be a mismatch too.
    for (const auto& [s, count] : fixed) {
      if (table.count(s) != 0) continue;
      SieveEntry e;
      e.n = n;
      e.d = d;
      e.k = s.triangles;
      e.l = s.cliques;
      e.m = s.empty_cells;
      e.fixed_count = count;
      e.match = false;
      report.all_match = false;
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

}  // namespace tube
