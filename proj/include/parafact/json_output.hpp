#pragma once

// JSON encoding of the library types. Integers that fit in 64 bits become
// JSON numbers; larger ones become decimal strings. Matrices are row-major
// 4-element arrays.

#include <string>

#include <json.hpp>

#include "parafact/classifier.hpp"
#include "parafact/diophantine.hpp"
#include "parafact/factorization.hpp"
#include "parafact/sl2z.hpp"

namespace parafact {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1.0";

Json to_json(const Int& x);
Json to_json(const Mat2& m);
Json to_json(const ParabolicParams& p);  // {"eps": 1, "c": .., "d": ..}
Json to_json(const HyperbolaSolution& s);  // [d1, d2]
Json to_json(const Vec3& v);
Json to_json(const MarkovTriple& t);
Json to_json(const ParamTuple& tuple);
Json to_json(const Factorization& f);

/// {"schema_version", "command", "inputs", "results"}.
Json make_record(const std::string& command, Json inputs, Json results);

}  // namespace parafact
