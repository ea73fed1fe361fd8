#include "ellcy/presets.hpp"

#include <json.hpp>
#include <stdexcept>

namespace ellcy {

namespace detail {
extern const char* kPresetsJson;
}

namespace {

struct Registry {
  int version = 0;
  std::vector<PFSystemPreset> presets;
};

Registry load() {
  using nlohmann::json;
  json doc = json::parse(detail::kPresetsJson);
  Registry reg;
  reg.version = doc.at("version").get<int>();
  for (const auto& p : doc.at("presets")) {
    PFSystemPreset ps;
    ps.name = p.at("name").get<std::string>();
    ps.family = p.at("family").get<std::string>();
    ps.geometry = p.value("geometry", "");
    ps.h = p.at("h").get<int>();
    if (p.contains("n")) ps.n = p["n"].get<int>();
    if (p.contains("a0")) ps.a0 = rat_parse(p["a0"].get<std::string>());
    if (p.contains("a1")) ps.a1 = rat_parse(p["a1"].get<std::string>());
    if (p.contains("a2")) ps.a2 = rat_parse(p["a2"].get<std::string>());
    for (const auto& g : p.at("generators"))
      ps.generators.push_back(op_parse(g.get<std::string>(), ps.h));
    for (const auto& l : p.at("limits")) {
      PresetLimit lim;
      lim.axis = l.at("axis").get<int>();
      lim.op = op_parse(l.at("op").get<std::string>(), ps.h);
      if (l.contains("as_recorded"))
        lim.as_recorded = op_parse(l["as_recorded"].get<std::string>(), ps.h);
      lim.note = l.value("note", "");
      ps.limits.push_back(std::move(lim));
    }
    reg.presets.push_back(std::move(ps));
  }
  return reg;
}

const Registry& registry() {
  static const Registry reg = load();
  return reg;
}

}  // namespace

int presets_version() { return registry().version; }

const std::vector<PFSystemPreset>& preset_registry() { return registry().presets; }

const PFSystemPreset* find_preset(const std::string& name) {
  for (const auto& p : registry().presets)
    if (p.name == name) return &p;
  return nullptr;
}

std::string presets_json_text() { return detail::kPresetsJson; }

}  // namespace ellcy
