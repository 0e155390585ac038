#pragma once

#include <json.hpp>

#include "quiver/verify.hpp"

namespace quiver {

using Json = nlohmann::ordered_json;

Json to_json(const DimensionVector& d);
/// [0, 1, "*", 0, 4, 0]
Json to_json(const RisingVector& v);
/// [[k, l, multiplicity], ...] over the non-zero entries, sorted by (k, l).
Json to_json(const KostantPartition& m);
/// Triangular rows: row i is [r_ii, r_i,i+1, ..., r_in].
Json to_json(const RankPattern& r);
Json to_json(const RankCondition& c);
/// {"rows": r, "cols": c, "data": [row-major entries]}
Json to_json(const IntMatrix& a);
/// {"dots": [[x, y], ...], "links": [[x, y_left, y_right], ...]}
Json to_json(const LaceDiagram& g);
Json to_json(const ComponentRecord& rec);
Json to_json(const ComponentReport& report);
Json to_json(const CrossCheckReport& report, bool with_timing);

/// Wide values leave the library as JSON integers (checked narrowing).
Json wide_json(Wide v);

KostantPartition partition_from_json(const Json& j, int n);
LaceDiagram diagram_from_json(const Json& j, int n);
IntMatrix matrix_from_json(const Json& j);

}  // namespace quiver
