#pragma once

// JSON and CSV forms of the library types. Every writer produces compact,
// canonically ordered output, so a value read back and written again is
// byte-identical. Readers throw InputError on malformed input.

#include "tube/arc_model.hpp"
#include "tube/counts.hpp"
#include "tube/polygon.hpp"
#include "tube/sieve.hpp"
#include "tube/torsion.hpp"

#include "json.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

namespace tube::io {

using Json = nlohmann::ordered_json;

Json to_json(const PeriodicDiagram& x);
Json to_json(const PolygonDiagram& p);
Json to_json(const TorsionPair& pair);
/// Emits "finite_side" only when a side is given.
Json to_json(const WingDecomposition& w, std::optional<Side> side = std::nullopt);
Json to_json(const SieveReport& report);

PeriodicDiagram periodic_from_json(const Json& j);
PolygonDiagram polygon_from_json(const Json& j);
TorsionPair pair_from_json(const Json& j);

struct SidedDecomposition {
  WingDecomposition wings;
  std::optional<Side> side;
};
SidedDecomposition decomposition_from_json(const Json& j);

/// Parses a single JSON document; InputError on syntax errors.
Json parse(const std::string& text);
/// Compact single-line serialization.
std::string dump(const Json& j);

/// Header n,k,l,m,count followed by one row per entry.
void write_count_csv(std::ostream& os, int n, const std::map<CellStatistics, BigInt>& table);
Json count_table_json(int n, const std::map<CellStatistics, BigInt>& table);

}  // namespace tube::io
