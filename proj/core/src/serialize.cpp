#include "ellcy/serialize.hpp"

#include <json.hpp>

namespace ellcy {

using nlohmann::json;
using nlohmann::ordered_json;

std::string to_json(const Series1& f) {
  ordered_json j;
  j["cap"] = f.cap();
  auto terms = ordered_json::array();
  for (int i = 0; i <= f.cap(); ++i)
    if (f.at(i) != 0) terms.push_back({i, rat_str(f.at(i))});
  j["terms"] = terms;
  return j.dump();
}

std::string to_json(const Series2& f) {
  ordered_json j;
  j["caps"] = {f.caps().d1, f.caps().d2};
  auto terms = ordered_json::array();
  for (int i = 0; i <= f.caps().d1; ++i)
    for (int k = 0; k <= f.caps().d2; ++k)
      if (f.at(i, k) != 0) terms.push_back({i, k, rat_str(f.at(i, k))});
  j["terms"] = terms;
  return j.dump();
}

std::string to_json(const LogSeries& f) {
  ordered_json j;
  j["caps"] = {f.caps().d1, f.caps().d2};
  auto parts = ordered_json::array();
  for (const auto& [key, g] : f.parts()) {
    ordered_json p;
    p["log"] = {key.first, key.second};
    p["series"] = ordered_json::parse(to_json(g));
    parts.push_back(p);
  }
  j["parts"] = parts;
  return j.dump();
}

std::string to_json(const QExp& f) {
  ordered_json j;
  j["base_den"] = f.base_den();
  auto lead = f.leading_exp();
  j["min_exp"] = lead ? *lead : f.lo();
  j["window"] = {f.lo(), f.hi()};
  if (f.weight) j["weight"] = *f.weight;
  auto terms = ordered_json::array();
  for (const auto& [e, c] : f.support()) terms.push_back({e, rat_str(c)});
  j["terms"] = terms;
  return j.dump();
}

Series1 series1_from_json(const std::string& text) {
  json j = json::parse(text);
  Series1 f(j.at("cap").get<int>());
  for (const auto& t : j.at("terms"))
    f.set(t.at(0).get<int>(), rat_parse(t.at(1).get<std::string>()));
  return f;
}

Series2 series2_from_json(const std::string& text) {
  json j = json::parse(text);
  auto caps = j.at("caps");
  Series2 f(caps.at(0).get<int>(), caps.at(1).get<int>());
  for (const auto& t : j.at("terms"))
    f.set(t.at(0).get<int>(), t.at(1).get<int>(), rat_parse(t.at(2).get<std::string>()));
  return f;
}

QExp qexp_from_json(const std::string& text) {
  json j = json::parse(text);
  int base = j.at("base_den").get<int>();
  long lo = 0, hi = QExp::WINDOW_INF;
  if (j.contains("window")) {
    lo = j["window"].at(0).get<long>();
    hi = j["window"].at(1).get<long>();
  }
  QExp f(base, lo, hi);
  for (const auto& t : j.at("terms"))
    f.set_coeff(t.at(0).get<long>(), rat_parse(t.at(1).get<std::string>()));
  if (j.contains("weight")) f.weight = j["weight"].get<int>();
  return f;
}

}  // namespace ellcy
