#pragma once

#include "correspondence.hpp"

#include <json.hpp>

namespace gk {

using json = nlohmann::json;

struct SchemaError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

json to_json(const Matrix& m);
json to_json(const ChainBundle& cb);
json to_json(const GiesekerDatum& d);
json to_json(const GeneralizedIsomorphism& gi);
json to_json(const RoundtripReport& r);
json to_json(const GrassmannianPoint& g);

// All parsers throw SchemaError on malformed input.
Matrix matrix_from_json(const json& j);
ChainBundle chain_from_json(const json& j);
GiesekerDatum datum_from_json(const json& j);
GeneralizedIsomorphism gi_from_json(const json& j);

enum class ObjectKind { chain, datum, gi, unknown };
ObjectKind classify(const json& j);

}  // namespace gk
