#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "ellcy/periods.hpp"

namespace ellcy {

// Bad flags, unknown presets and impossible cap requests exit with 2;
// mathematical failures inside a command exit with 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;

  // model selection: preset name, or inline parameters overriding it
  std::string preset = "main4";
  std::optional<int> n;
  std::optional<Rat> a0, a1, a2;

  // caps
  int d1 = 14;
  int d2 = 3;
  int q_order = 12;
  int t_order = 0;  // 0 = per-command default (gw: 4, others: 2)

  int gamma = 1;
  int slice_constants = -1;  // >= 0 selects cmd_periods slice-constant mode

  std::string format = "";  // json | csv | text; per-command default if empty
  std::string out;          // empty = stdout

  // cmd_fit inputs
  std::string series_file;
  std::string builtin;  // f1-c2222 | f1-gamma1 | f1-gamma2 | e4cubed
  int weight = 0;
  int level = 1;
  int eta_power = 0;
  long q_shift = 0;
  int max_e2 = 0;
};

// Applies a JSON config file (same keys as the long flags); unknown keys
// are rejected so typos cannot silently change a run.
void apply_config_file(RunConfig& cfg, const std::string& path);

// Preset lookup plus inline overrides; throws UsageError for unknown or
// parameterless presets.
ModelParams resolve_model(const RunConfig& cfg);

int cmd_periods(const RunConfig& cfg);
int cmd_gw(const RunConfig& cfg);
int cmd_verify(const RunConfig& cfg);
int cmd_fit(const RunConfig& cfg);

}  // namespace ellcy
