#include "parafact/json_output.hpp"

namespace parafact {

Json to_json(const Int& x) {
  if (fits_int64(x)) return static_cast<std::int64_t>(x);
  return x.str();
}

Json to_json(const Mat2& m) {
  return Json::array({to_json(m.a), to_json(m.b), to_json(m.c), to_json(m.d)});
}

Json to_json(const ParabolicParams& p) {
  return Json{{"eps", value(p.eps)}, {"c", to_json(p.c)}, {"d", to_json(p.d)}};
}

Json to_json(const HyperbolaSolution& s) { return Json::array({to_json(s.d1), to_json(s.d2)}); }

Json to_json(const Vec3& v) { return Json::array({to_json(v.x), to_json(v.y), to_json(v.z)}); }

Json to_json(const MarkovTriple& t) {
  return Json::array({to_json(t.d1), to_json(t.d2), to_json(t.d3)});
}

Json to_json(const ParamTuple& tuple) {
  Json out = Json::array();
  for (const auto& p : tuple) out.push_back(to_json(p));
  return out;
}

Json to_json(const Factorization& f) {
  Json factors = Json::array();
  for (const auto& m : f.factors) factors.push_back(to_json(m));
  Json params = Json::array();
  for (const auto& m : f.factors) {
    if (auto p = parabolic_params(m)) {
      params.push_back(to_json(*p));
    } else {
      params.push_back(nullptr);
    }
  }
  return Json{{"factors", std::move(factors)}, {"params", std::move(params)},
              {"target", to_json(f.target)}};
}

Json make_record(const std::string& command, Json inputs, Json results) {
  return Json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"inputs", std::move(inputs)},
              {"results", std::move(results)}};
}

}  // namespace parafact
