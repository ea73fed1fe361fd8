#include "run_config.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <iostream>
#include <sstream>

#include "ellcy/coupling.hpp"
#include "ellcy/mirror.hpp"
#include "ellcy/modular.hpp"
#include "ellcy/presets.hpp"
#include "ellcy/serialize.hpp"
#include "json.hpp"

namespace ellcy {

namespace {

using nlohmann::ordered_json;

// Reports are assembled as one string and written in a single shot so a run
// is byte-for-byte reproducible whether it goes to stdout or --out.
void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary | std::ios::trunc);
  if (!f) throw UsageError("cannot open output file: " + cfg.out);
  f << text;
}

std::string pick_format(const RunConfig& cfg, const char* fallback,
                        std::initializer_list<const char*> allowed) {
  std::string f = cfg.format.empty() ? fallback : cfg.format;
  for (const char* a : allowed)
    if (f == a) return f;
  throw UsageError("format '" + f + "' is not supported by this command");
}

Rat json_rat(const ordered_json& v, const std::string& key) {
  if (v.is_number_integer()) return Rat(v.get<long>());
  if (v.is_string()) return rat_parse(v.get<std::string>());
  throw UsageError("config key '" + key +
                   "' must be an integer or a string like \"5/6\"");
}

bool is_main_model(const ModelParams& mp) {
  return mp.n == 4 && mp.a0 == Rat(432) && mp.a1 == Rat(5, 6) &&
         mp.a2 == Rat(1, 6);
}

struct TauPipeline {
  PeriodSet ps;
  MirrorMap mm;
  TauCouplings tc;
};

TauPipeline run_tau(const ModelParams& mp, Caps caps) {
  TauPipeline p{frobenius_solve(mp, caps), {}, {}};
  p.mm = build_mirror(p.ps);
  p.tc = to_tau(main_example_yukawa(), p.ps, p.mm);
  return p;
}

}  // namespace

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file: " + path);
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const std::exception& e) {
    throw UsageError("config file " + path + " is not valid JSON: " + e.what());
  }
  if (!j.is_object()) throw UsageError("config file must hold a JSON object");
  for (const auto& [key, val] : j.items()) {
    if (key == "preset") cfg.preset = val.get<std::string>();
    else if (key == "n") cfg.n = val.get<int>();
    else if (key == "a0") cfg.a0 = json_rat(val, key);
    else if (key == "a1") cfg.a1 = json_rat(val, key);
    else if (key == "a2") cfg.a2 = json_rat(val, key);
    else if (key == "d1") cfg.d1 = val.get<int>();
    else if (key == "d2") cfg.d2 = val.get<int>();
    else if (key == "q_order") cfg.q_order = val.get<int>();
    else if (key == "t_order") cfg.t_order = val.get<int>();
    else if (key == "gamma") cfg.gamma = val.get<int>();
    else if (key == "slice_constants") cfg.slice_constants = val.get<int>();
    else if (key == "format") cfg.format = val.get<std::string>();
    else if (key == "out") cfg.out = val.get<std::string>();
    else if (key == "series") cfg.series_file = val.get<std::string>();
    else if (key == "builtin") cfg.builtin = val.get<std::string>();
    else if (key == "weight") cfg.weight = val.get<int>();
    else if (key == "level") cfg.level = val.get<int>();
    else if (key == "eta") cfg.eta_power = val.get<int>();
    else if (key == "qshift") cfg.q_shift = val.get<long>();
    else if (key == "max_e2") cfg.max_e2 = val.get<int>();
    else throw UsageError("config file has unknown key '" + key + "'");
  }
}

ModelParams resolve_model(const RunConfig& cfg) {
  const PFSystemPreset* p = find_preset(cfg.preset);
  if (!p) throw UsageError("unknown preset '" + cfg.preset + "'");
  ModelParams mp;
  if (p->has_params()) {
    mp.n = *p->n;
    mp.a0 = *p->a0;
    mp.a1 = *p->a1;
    mp.a2 = *p->a2;
  } else if (!(cfg.n && cfg.a0 && cfg.a1 && cfg.a2)) {
    throw UsageError("preset '" + cfg.preset +
                     "' records no (n, a0, a1, a2) parameters; pass --n --a0 "
                     "--a1 --a2 to run it");
  }
  if (cfg.n) mp.n = *cfg.n;
  if (cfg.a0) mp.a0 = *cfg.a0;
  if (cfg.a1) mp.a1 = *cfg.a1;
  if (cfg.a2) mp.a2 = *cfg.a2;
  if (mp.n < 2) throw UsageError("--n must be at least 2");
  return mp;
}

int cmd_periods(const RunConfig& cfg) {
  if (cfg.d1 <= 0 || cfg.d2 < 0)
    throw UsageError("caps must satisfy --d1 >= 1 and --d2 >= 0");
  ModelParams mp = resolve_model(cfg);
  Caps caps{cfg.d1, cfg.d2};
  std::string format = pick_format(cfg, "json", {"json", "text"});
  std::ostringstream out;

  if (cfg.slice_constants >= 0) {
    int i = cfg.slice_constants;
    if (i > caps.d2)
      throw UsageError("slice index exceeds --d2; raise the z2 cap");
    if (mp.n * i > caps.d1)
      throw UsageError("resumming slice " + std::to_string(i) + " needs --d1 >= " +
                       std::to_string(mp.n * i));
    PeriodSet ps = frobenius_solve(mp, caps);
    SliceData sd = slice_constants(ps, i);
    if (format == "json") {
      ordered_json j;
      j["preset"] = cfg.preset;
      j["i"] = i;
      j["c0"] = rat_str(sd.c0);
      j["c1"] = rat_str(sd.c1);
      j["c1_tilde"] = rat_str(sd.c1t);
      j["closed_form_ok"] = sd.closed_form_ok;
      j["ab_series_ok"] = sd.ab_series_ok;
      out << j.dump(2) << "\n";
    } else {
      out << "slice " << i << "\n";
      out << "c0 " << rat_str(sd.c0) << "\n";
      out << "c1 " << rat_str(sd.c1) << "\n";
      out << "c1_tilde " << rat_str(sd.c1t) << "\n";
      out << "closed_form_ok " << (sd.closed_form_ok ? 1 : 0) << "\n";
      out << "ab_series_ok " << (sd.ab_series_ok ? 1 : 0) << "\n";
    }
    emit(cfg, out.str());
    return 0;
  }

  PeriodSet ps = frobenius_solve(mp, caps);
  if (format == "json") {
    ordered_json j;
    j["preset"] = cfg.preset;
    j["params"] = {{"n", mp.n},
                   {"a0", rat_str(mp.a0)},
                   {"a1", rat_str(mp.a1)},
                   {"a2", rat_str(mp.a2)}};
    j["caps"] = {caps.d1, caps.d2};
    j["pi0"] = ordered_json::parse(to_json(ps.pi0));
    j["s1"] = ordered_json::parse(to_json(ps.s1));
    j["s2"] = ordered_json::parse(to_json(ps.s2));
    out << j.dump(2) << "\n";
  } else {
    out << "preset " << cfg.preset << "\n";
    out << "n " << mp.n << "\n";
    out << "a0 " << rat_str(mp.a0) << "\n";
    out << "a1 " << rat_str(mp.a1) << "\n";
    out << "a2 " << rat_str(mp.a2) << "\n";
    out << "caps " << caps.d1 << " " << caps.d2 << "\n";
    for (const char* tag : {"pi0", "s1", "s2"}) {
      const Series2& s = tag == std::string("pi0") ? ps.pi0
                         : tag == std::string("s1") ? ps.s1
                                                    : ps.s2;
      for (int j2 = 0; j2 <= caps.d2; ++j2) {
        out << tag << " z2^" << j2 << ":";
        for (int i = 0; i <= caps.d1; ++i) out << " " << rat_str(s.at(i, j2));
        out << "\n";
      }
    }
  }
  emit(cfg, out.str());
  return 0;
}

int cmd_gw(const RunConfig& cfg) {
  ModelParams mp = resolve_model(cfg);
  if (!is_main_model(mp))
    throw UsageError(
        "instanton tables need the closed-form couplings, which are wired for "
        "the main model (n=4, a0=432, a1=5/6, a2=1/6); run with --preset "
        "main4");
  if (cfg.gamma != 1 && cfg.gamma != 2)
    throw UsageError("--gamma must be 1 or 2");
  int t_order = cfg.t_order > 0 ? cfg.t_order : 4;
  if (cfg.d1 <= 0 || cfg.d2 <= 0)
    throw UsageError("an empty truncation cannot hold the table; --d1 and "
                     "--d2 must be positive");
  if (cfg.d1 < 5)
    throw UsageError("the table runs to base degree 5; --d1 must be >= 5");
  std::string format = pick_format(cfg, "csv", {"csv", "json"});

  Caps caps{cfg.d1, std::max(cfg.d2, t_order)};
  TauPipeline p = run_tau(mp, caps);
  std::array<TExpansion, 5> c4;
  for (int k = 0; k < 5; ++k) c4[k] = t_expand(p.tc.c[k], mp.n, t_order);
  ThreePointResult tp = solve_three_point(c4, main_intersections(), t_order);
  if (!tp.ok) {
    std::cerr << "three-point factorization failed";
    if (!tp.seed_checks_ok)
      std::cerr << " at the degree-0 seeds: " << tp.seed_mismatch;
    else
      std::cerr << " at t-order " << tp.fail_order << ", component "
                << tp.fail_component;
    std::cerr << "\n";
    return 1;
  }

  Potential pot =
      assemble_potential(tp, main_intersections(), cfg.gamma, t_order, cfg.d1);
  GWTable table = extract_gw(pot, 5, std::min(4, t_order));
  if (format == "json")
    emit(cfg, table.json() + "\n");
  else
    emit(cfg, table.csv());
  return 0;
}

int cmd_fit(const RunConfig& cfg) {
  QExp f;
  std::string source;
  int weight = cfg.weight, level = cfg.level, eta = cfg.eta_power,
      max_e2 = cfg.max_e2;
  long q_shift = cfg.q_shift;

  if (!cfg.series_file.empty()) {
    std::ifstream in(cfg.series_file);
    if (!in) throw UsageError("cannot read series file: " + cfg.series_file);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      f = qexp_from_json(ss.str());
    } catch (const std::exception& e) {
      throw UsageError("series file " + cfg.series_file +
                       " did not parse: " + e.what());
    }
    source = cfg.series_file;
    if (weight == 0)
      throw UsageError("a series file needs explicit fit parameters; pass "
                       "--weight (and --eta/--qshift/--max-e2 as needed)");
  } else {
    std::string b = cfg.builtin.empty() ? "f1-c2222" : cfg.builtin;
    source = b;
    // Auto parameters track the weight bookkeeping of each builtin; explicit
    // --weight switches all five knobs to the caller's values.
    if (b == "e4cubed") {
      int order = std::max(cfg.q_order, 16);
      QExp e4 = eisenstein(4, order);
      f = e4 * e4 * e4;
      if (weight == 0) { weight = 12; level = 1; eta = 0; q_shift = 0; max_e2 = 0; }
    } else if (b == "f1-c2222" || b == "f1-gamma1" || b == "f1-gamma2") {
      ModelParams mp = resolve_model(cfg);
      if (!is_main_model(mp))
        throw UsageError("builtin series '" + b +
                         "' is defined for the main model; use --preset main4");
      if (cfg.d1 < 8)
        throw UsageError("builtin series '" + b +
                         "' needs --d1 >= 8 for a usable window");
      Caps caps{cfg.d1, std::max(cfg.d2, 1)};
      TauPipeline p = run_tau(mp, caps);
      if (b == "f1-c2222") {
        TExpansion te = t_expand(p.tc.by_count(4), mp.n, 1);
        f = te.f[1];
        if (weight == 0) { weight = 22; level = 1; eta = -48; q_shift = 0; max_e2 = 0; }
      } else {
        std::array<TExpansion, 5> c4;
        for (int k = 0; k < 5; ++k) c4[k] = t_expand(p.tc.c[k], mp.n, 1);
        ThreePointResult tp = solve_three_point(c4, main_intersections(), 1);
        if (!tp.ok) {
          std::cerr << "three-point factorization failed while preparing '"
                    << b << "'\n";
          return 1;
        }
        f = (b == "f1-gamma1") ? tp.sectors[0].f_gamma1
                               : tp.sectors[0].f_gamma2;
        if (weight == 0) {
          weight = (b == "f1-gamma1") ? 22 : 24;
          level = 1;
          eta = -48;
          q_shift = 0;
          max_e2 = (b == "f1-gamma1") ? 0 : 1;
        }
      }
    } else {
      throw UsageError("unknown builtin series '" + b +
                       "'; choose f1-c2222, f1-gamma1, f1-gamma2 or e4cubed");
    }
  }

  std::string format = pick_format(cfg, "text", {"text", "json"});
  FitResult r = fit(f, weight, level, eta, q_shift, max_e2);
  std::ostringstream out;
  if (format == "json") {
    ordered_json j;
    j["series"] = source;
    j["weight"] = weight;
    j["level"] = level;
    j["eta"] = eta;
    j["qshift"] = q_shift;
    j["max_e2"] = max_e2;
    j["ok"] = r.ok;
    j["rows"] = r.rows;
    j["margin"] = r.margin;
    j["unique"] = r.unique;
    ordered_json co = ordered_json::object();
    for (size_t i = 0; i < r.names.size(); ++i)
      co[r.names[i]] = rat_str(r.coeffs[i]);
    j["coeffs"] = co;
    if (!r.ok) j["detail"] = r.detail;
    out << j.dump(2) << "\n";
  } else {
    out << "series " << source << "\n";
    out << "weight " << weight << "  level " << level << "  eta " << eta
        << "  qshift " << q_shift << "  max_e2 " << max_e2 << "\n";
    if (!r.ok) {
      out << "fit failed: " << r.detail << "\n";
    } else {
      out << "rows " << r.rows << "  margin " << r.margin << "  unique "
          << (r.unique ? 1 : 0) << "\n";
      for (size_t i = 0; i < r.names.size(); ++i)
        out << r.names[i] << " " << rat_str(r.coeffs[i]) << "\n";
    }
  }
  emit(cfg, out.str());
  return r.ok ? 0 : 1;
}

namespace {

struct Section {
  std::string name;
  bool ok = false;
  std::string detail;
};

// Integral basis check of L1, L2 against all three log-periods.
Section check_annihilation(const PFSystemPreset& p) {
  Section s{"annihilation/" + p.name, false, ""};
  ModelParams mp{*p.n, *p.a0, *p.a1, *p.a2};
  PeriodSet ps = frobenius_solve(mp, Caps{10, 3});
  bool gen_ok = false;
  for (const ShiftOp& g : p.generators)
    if (g == ps.L1) gen_ok = true;
  bool gen2_ok = false;
  for (const ShiftOp& g : p.generators)
    if (g == ps.L2) gen2_ok = true;
  int bad = 0;
  for (const ShiftOp* op : {&ps.L1, &ps.L2}) {
    for (const LogSeries& f :
         {ps.pi0_log(), ps.pi1_log(), ps.pi2_log()}) {
      AnnihilationReport r = annihilates(*op, f);
      if (!r.ok) ++bad;
    }
  }
  s.ok = gen_ok && gen2_ok && bad == 0;
  if (!gen_ok || !gen2_ok)
    s.detail = "registry generators disagree with the parameter build";
  else if (bad)
    s.detail = std::to_string(bad) + " operator/period pairs left residuals";
  return s;
}

}  // namespace

int cmd_verify(const RunConfig& cfg) {
  std::string format = pick_format(cfg, "text", {"text", "json"});
  std::vector<Section> sections;

  for (const PFSystemPreset& p : preset_registry())
    if (p.family == "grid") sections.push_back(check_annihilation(p));

  ModelParams mp;  // main model defaults
  Caps caps{12, 3};
  PeriodSet ps = frobenius_solve(mp, caps);

  {
    Section s{"slice constants i<=3", true, ""};
    for (int i = 0; i <= 3; ++i) {
      SliceData sd = slice_constants(ps, i);
      if (!sd.closed_form_ok || !sd.ab_series_ok) {
        s.ok = false;
        s.detail += (s.detail.empty() ? "" : ", ") + std::string("i=") +
                    std::to_string(i);
      }
    }
    sections.push_back(s);
  }
  {
    Section s{"slice inhomogeneous images i<=3", true, ""};
    for (int i = 0; i <= 3; ++i) {
      NonhomReport r = nonhom_slice_check(ps, i);
      if (!r.all()) {
        s.ok = false;
        s.detail += (s.detail.empty() ? "" : ", ") + std::string("i=") +
                    std::to_string(i);
      }
    }
    sections.push_back(s);
  }
  {
    // W11 on the fibre slice inverts 1 - a0 z1 exactly.
    Section s{"wronskian fibre normalization", false, ""};
    Series1 w = wronskian(ps, 1, 1).slice(0);
    std::vector<Rat> om(caps.d1 + 1, Rat(0));
    om[0] = Rat(1);
    om[1] = -mp.a0;
    std::vector<Rat> one(caps.d1 + 1, Rat(0));
    one[0] = Rat(1);
    s.ok = w * Series1(caps.d1, om) == Series1(caps.d1, one);
    if (!s.ok) s.detail = "product with (1 - a0 z1) is not 1";
    sections.push_back(s);
  }

  MirrorMap mm = build_mirror(ps);
  {
    Section s{"mirror flat coordinates", false, ""};
    TauDerivation td = tau_derivations(ps);
    s.ok = td.routes_agree && td.flat_ok;
    if (!td.routes_agree)
      s.detail = "wronskian and jacobian routes disagree";
    else if (!td.flat_ok)
      s.detail = "D_a tau_b is not the identity";
    sections.push_back(s);
  }
  {
    Section s{"fibre volume derivative", false, ""};
    Series2 x = x_series(ps, mm);
    Series2 ratio = (wronskian(ps, 2, 2) + wronskian(ps, 2, 1) * rat(mp.n, 2)) /
                    (ps.pi0 * ps.pi0);
    Series2 rhs = x * (ratio - Series2::constant(caps, Rat(1)));
    s.ok = x.theta(2) == rhs;
    if (!s.ok) s.detail = "theta2 X mismatch";
    sections.push_back(s);
  }
  {
    Section s{"modular pullback identities", false, ""};
    ModRepReport r = verify_modrep(cfg.q_order);
    s.ok = r.ok();
    if (!r.quartic_ok)
      s.detail = "quartic relation failed";
    else if (!r.deriv_ok)
      s.detail = "derivative relation failed";
    sections.push_back(s);
  }

  {
    Section s{"recorded one-parameter limits", true, ""};
    int checked = 0, divergences = 0;
    for (const PFSystemPreset& p : preset_registry()) {
      for (const PresetLimit& li : p.limits) {
        ++checked;
        bool found = false;
        for (const ShiftOp& g : p.generators)
          if (restrict_op(g, li.axis) == li.op) found = true;
        if (!found) {
          s.ok = false;
          s.detail += (s.detail.empty() ? "" : ", ") + p.name + "/axis" +
                      std::to_string(li.axis);
        }
        if (li.as_recorded) ++divergences;
      }
    }
    if (s.ok)
      s.detail = std::to_string(checked) + " limits, " +
                 std::to_string(divergences) + " with annotated divergences";
    sections.push_back(s);
  }

  YukawaSet ys = main_example_yukawa();
  {
    Section s{"operator constraints on couplings", false, ""};
    PFConstraintReport r = verify_pf_constraints(ys, Caps{10, 3});
    s.ok = r.ok;
    s.detail = s.ok ? std::to_string(r.constraints) + " coefficient equations"
                    : "first residual at " + r.op_tag + " gamma(" +
                          std::to_string(r.g1) + "," + std::to_string(r.g2) +
                          ") z^(" + std::to_string(r.e1) + "," +
                          std::to_string(r.e2) + ")";
    sections.push_back(s);
  }
  {
    Section s{"couplings recovered from constraints", false, ""};
    DerivedYukawa dy = derive_yukawa_series(mp, Caps{5, 2});
    bool match = dy.ok && dy.kernel_dim == 1;
    static const int idx[5][2] = {{4, 0}, {3, 1}, {2, 2}, {1, 3}, {0, 4}};
    for (int k = 0; match && k < 5; ++k)
      if (dy.v[k] != ys.cleared_series(idx[k][0], idx[k][1], Caps{5, 2}))
        match = false;
    s.ok = match;
    if (!dy.ok)
      s.detail = dy.detail;
    else if (!match)
      s.detail = "recovered series differ from the closed forms";
    sections.push_back(s);
  }
  {
    // Deliberately broken input: a z1^5 bump on the (4,0) coupling has to be
    // caught, and located, by the constraint scan.
    Section s{"perturbed coupling detected", false, ""};
    YukawaSet bad = ys;
    RationalFn2 bump{Poly2::monomial(Rat(1), 5, 0), Poly2::constant(Rat(1))};
    bad.entries[0].cleared = bad.entries[0].cleared + bump;
    PFConstraintReport r = verify_pf_constraints(bad, Caps{10, 3});
    s.ok = !r.ok && !r.op_tag.empty();
    if (s.ok)
      s.detail = "located at " + r.op_tag + " gamma(" + std::to_string(r.g1) +
                 "," + std::to_string(r.g2) + ") z^(" + std::to_string(r.e1) +
                 "," + std::to_string(r.e2) + ")";
    else
      s.detail = "perturbation went unnoticed";
    sections.push_back(s);
  }

  {
    Section s{"three-point factorization t<=2", false, ""};
    Caps tcaps{10, 2};
    TauPipeline p = run_tau(mp, tcaps);
    std::array<TExpansion, 5> c4;
    for (int k = 0; k < 5; ++k) c4[k] = t_expand(p.tc.c[k], mp.n, 2);
    ThreePointResult tp = solve_three_point(c4, main_intersections(), 2);
    s.ok = tp.ok && tp.seed_checks_ok;
    if (!tp.seed_checks_ok)
      s.detail = "seed mismatch: " + tp.seed_mismatch;
    else if (!tp.ok)
      s.detail = "t-order " + std::to_string(tp.fail_order) + ", component " +
                 tp.fail_component;
    if (s.ok) {
      Section mc{"multicover round trip", true, ""};
      for (int gamma = 1; gamma <= 2 && mc.ok; ++gamma) {
        Potential pot =
            assemble_potential(tp, main_intersections(), gamma, 2, 10);
        GWTable t = extract_gw(pot, 5, 2);
        for (const auto& [deg, value] : t.gw)
          if (multicover_sum(t, deg.first, deg.second) != value) {
            mc.ok = false;
            mc.detail = "gamma " + std::to_string(gamma) + " (" +
                        std::to_string(deg.first) + "," +
                        std::to_string(deg.second) + ")";
            break;
          }
      }
      sections.push_back(s);
      sections.push_back(mc);
    } else {
      sections.push_back(s);
      sections.push_back(
          {"multicover round trip", false, "skipped, factorization failed"});
    }
  }

  bool all_ok = true;
  for (const Section& s : sections) all_ok = all_ok && s.ok;

  std::ostringstream out;
  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const Section& s : sections) {
      ordered_json j;
      j["name"] = s.name;
      j["ok"] = s.ok;
      if (!s.detail.empty()) j["detail"] = s.detail;
      arr.push_back(j);
    }
    ordered_json top;
    top["ok"] = all_ok;
    top["sections"] = arr;
    out << top.dump(2) << "\n";
  } else {
    for (const Section& s : sections) {
      out << (s.ok ? "ok   " : "FAIL ") << s.name;
      if (!s.detail.empty()) out << "  (" << s.detail << ")";
      out << "\n";
    }
    int passed = 0;
    for (const Section& s : sections) passed += s.ok ? 1 : 0;
    out << "verify: " << passed << "/" << sections.size() << " sections ok\n";
  }
  emit(cfg, out.str());
  return all_ok ? 0 : 1;
}

}  // namespace ellcy
