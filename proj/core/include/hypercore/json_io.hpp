#pragma once

#include <json.hpp>

#include "hypercore/classify.hpp"
#include "hypercore/decompose.hpp"
#include "hypercore/diffop.hpp"
#include "hypercore/poly.hpp"
#include "hypercore/rational.hpp"
#include "hypercore/series.hpp"

namespace hypercore {

// Encodings used repo-wide. Rationals are canonical "num/den" or integer
// strings; polynomials are {"coeffs": [...]} ascending; operators are
// {"order": K, "terms": {"k": poly}}. nlohmann::json objects keep sorted
// keys, so identical values serialize byte-identically.

nlohmann::json to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TruncSeries& s);
TruncSeries series_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DiffOp& t);
DiffOp diffop_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TnDecomposition& d);
TnDecomposition decomposition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Verdict& v);

}  // namespace hypercore
