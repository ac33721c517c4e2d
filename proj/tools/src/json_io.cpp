#include "rank2tools/json_io.hpp"

namespace rank2::tools {

nlohmann::json to_json(const LaurentPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : p.terms())
    terms.push_back({{"e", {t.e.d1, t.e.d2}}, {"c", t.c.get_str()}});
  return {{"terms", std::move(terms)}};
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
  try {
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
      const auto& e = t.at("e");
      if (!e.is_array() || e.size() != 2) throw Error("exponent must be a pair");
      Integer c;
      if (c.set_str(t.at("c").get<std::string>(), 10) != 0) throw Error("bad coefficient");
      terms.push_back({{e[0].get<std::int64_t>(), e[1].get<std::int64_t>()}, c});
    }
    return LaurentPoly::from_terms(std::move(terms));
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("malformed polynomial JSON: ") + ex.what());
  }
}

} // namespace rank2::tools
