#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "run_config.hpp"

namespace {

// Model and cap flags shared by every subcommand.
void add_model_flags(CLI::App* sc, ellcy::RunConfig& cfg,
                     std::string& config_path) {
  sc->add_option("--config", config_path,
                 "JSON file with the same keys as the long flags; explicit "
                 "flags override it");
  sc->add_option("--preset", cfg.preset, "model preset name")
      ->capture_default_str();
  sc->add_option("--n", cfg.n, "fibre degree override");
  sc->add_option_function<std::string>(
      "--a0", [&cfg](const std::string& s) { cfg.a0 = ellcy::rat_parse(s); },
      "holomorphic-period scale override, e.g. 432");
  sc->add_option_function<std::string>(
      "--a1", [&cfg](const std::string& s) { cfg.a1 = ellcy::rat_parse(s); },
      "first indicial offset, e.g. 5/6");
  sc->add_option_function<std::string>(
      "--a2", [&cfg](const std::string& s) { cfg.a2 = ellcy::rat_parse(s); },
      "second indicial offset, e.g. 1/6");
  sc->add_option("--d1", cfg.d1, "z1 truncation degree")->capture_default_str();
  sc->add_option("--d2", cfg.d2, "z2 truncation degree")->capture_default_str();
  sc->add_option("--format", cfg.format,
                 "output format (json, csv or text; default depends on the "
                 "command)");
  sc->add_option("--out", cfg.out, "write the result here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  ellcy::RunConfig cfg;
  std::string config_path;

  // First pass only extracts --config so file values become the defaults the
  // real parse can then override.
  {
    CLI::App pre;
    pre.allow_extras();
    pre.set_help_flag();
    pre.set_help_all_flag();
    std::string path;
    pre.add_option("--config", path);
    try {
      pre.parse(argc, argv);
    } catch (const CLI::ParseError&) {
      // the full grammar below reports the real error
    }
    if (!path.empty()) {
      try {
        ellcy::apply_config_file(cfg, path);
      } catch (const ellcy::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
    }
  }

  CLI::App app{
      "exact Frobenius periods, mirror maps and instanton counts for "
      "two-parameter elliptic fibrations"};
  app.require_subcommand(1);

  CLI::App* sc_periods = app.add_subcommand(
      "periods", "solve the two operators and print the period data");
  add_model_flags(sc_periods, cfg, config_path);
  sc_periods->add_option(
      "--slice-constants", cfg.slice_constants,
      "print the leading constants of one z2-slice instead of the series");

  CLI::App* sc_gw = app.add_subcommand(
      "gw", "genus-0 invariant table of the main model for one divisor class");
  add_model_flags(sc_gw, cfg, config_path);
  sc_gw->add_option("--gamma", cfg.gamma, "divisor class, 1 or 2")
      ->capture_default_str();
  sc_gw->add_option("--t-order", cfg.t_order,
                    "number of fibre-volume sectors to solve (default 4)");

  CLI::App* sc_verify = app.add_subcommand(
      "verify", "run the identity suite across the preset registry");
  add_model_flags(sc_verify, cfg, config_path);
  sc_verify
      ->add_option("--q-order", cfg.q_order,
                   "q-expansion order for the modular identities")
      ->capture_default_str();

  CLI::App* sc_fit = app.add_subcommand(
      "fit", "express a q-expansion in a quasi-modular basis, exactly");
  add_model_flags(sc_fit, cfg, config_path);
  sc_fit->add_option("--series", cfg.series_file,
                     "JSON file holding the expansion to fit");
  sc_fit->add_option("--builtin", cfg.builtin,
                     "computed series: f1-c2222, f1-gamma1, f1-gamma2 or "
                     "e4cubed (default f1-c2222)");
  sc_fit->add_option("--weight", cfg.weight, "modular weight of the target");
  sc_fit->add_option("--level", cfg.level, "congruence level of the basis")
      ->capture_default_str();
  sc_fit->add_option("--eta", cfg.eta_power,
                     "eta-power prefactor, e.g. -48 for eta^-48");
  sc_fit->add_option("--qshift", cfg.q_shift,
                     "exponent offset between the stored and modular q");
  sc_fit->add_option("--max-e2", cfg.max_e2,
                     "highest allowed quasi-modular degree");
  sc_fit->add_option("--q-order", cfg.q_order,
                     "expansion order for builtin modular series");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sc_periods->parsed()) return ellcy::cmd_periods(cfg);
    if (sc_gw->parsed()) return ellcy::cmd_gw(cfg);
    if (sc_verify->parsed()) return ellcy::cmd_verify(cfg);
    if (sc_fit->parsed()) return ellcy::cmd_fit(cfg);
  } catch (const ellcy::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
