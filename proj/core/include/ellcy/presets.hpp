#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ellcy/shift_op.hpp"

namespace ellcy {

struct PresetLimit {
  int axis = 1;
  ShiftOp op;  // verified one-variable degeneration
  // Present when an independently recorded limit text differs from the
  // mechanical restriction; `note` says how they relate.
  std::optional<ShiftOp> as_recorded;
  std::string note;
};

struct PFSystemPreset {
  std::string name;
  std::string family;  // "grid" (the n x a0 parameter grid) or "survey"
  std::string geometry;
  int h = 2;
  std::optional<int> n;
  std::optional<Rat> a0, a1, a2;
  std::vector<ShiftOp> generators;
  std::vector<PresetLimit> limits;

  bool has_params() const { return n && a0 && a1 && a2; }
};

int presets_version();
const std::vector<PFSystemPreset>& preset_registry();
// nullptr when the name is unknown.
const PFSystemPreset* find_preset(const std::string& name);
// The embedded JSON document the registry was parsed from.
std::string presets_json_text();

}  // namespace ellcy
