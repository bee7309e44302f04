// Command-line front end: runs the built-in verification suites and
// config-driven computations (H^1 classes, lower p-series, growth exponents).
//
// Exit codes: 0 = all checks passed, 1 = a check failed, 2 = usage or
// configuration error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "towerlab/arith.hpp"
#include "towerlab/betti.hpp"
#include "towerlab/group.hpp"
#include "towerlab/h1.hpp"
#include "towerlab/lie.hpp"
#include "towerlab/report.hpp"
#include "towerlab/scenario.hpp"
#include "towerlab/suites.hpp"

using nlohmann::json;
using namespace towerlab;

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return j;
}

void write_json(const std::optional<std::string>& path, const std::string& body) {
  if (!path) return;
  std::ofstream out(*path);
  if (!out) throw ConfigError("cannot write JSON output: " + *path);
  out << body << "\n";
}

// ---- config-driven object construction ----

GroupPtr group_from_config(const json& c) {
  std::string family = c.value("family", "SL");
  MatrixFamily fam;
  if (family == "SL") fam = MatrixFamily::SL;
  else if (family == "Sp") fam = MatrixFamily::Sp;
  else if (family == "GL") fam = MatrixFamily::GL;
  else throw ConfigError("unknown matrix family: " + family);
  int n = c.value("n", 2);
  int64_t p = c.value("p", static_cast<int64_t>(3));
  int k = c.value("k", 2);
  int level = c.value("level", 1);
  try {
    return congruence_kernel(fam, n, PrimePower::make(p, k), level);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("bad finite-group config: ") + e.what());
  }
}

ThetaAction action_from_config(const json& c, const GroupPtr& g) {
  std::string action = c.value("action", "trivial");
  int order = c.value("theta_order", 2);
  int64_t p = c.value("p", static_cast<int64_t>(3));
  int k = c.value("k", 2);
  int n = c.value("n", 2);
  PrimePower pk = PrimePower::make(p, k);
  try {
    if (action == "trivial") return trivial_theta_action(g, order);
    if (action == "transpose-inverse")
      return make_theta_action(g, order, [pk, n](const Enc& e) {
        return encode_mat(transpose(invert_mod_pk(decode_mat(e, pk, n))));
      });
    if (action == "diag-conjugation") {
      std::vector<int64_t> diag =
          c.value("diag", std::vector<int64_t>(static_cast<size_t>(n), 1));
      if (static_cast<int>(diag.size()) != n)
        throw ConfigError("diag length must equal n");
      MatZpk t(pk, n);
      for (int i = 0; i < n; ++i)
        t.at(i, i) = ((diag[i] % pk.modulus) + pk.modulus) % pk.modulus;
      MatZpk tinv = invert_mod_pk(t);
      return make_theta_action(g, order, [pk, n, t, tinv](const Enc& e) {
        return encode_mat(mat_mul(mat_mul(t, decode_mat(e, pk, n)), tinv));
      });
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("bad action config: ") + e.what());
  }
  throw ConfigError("unknown action: " + action);
}

LatticeAction lattice_from_config(const json& c) {
  if (!c.contains("matrix")) throw ConfigError("lattice config needs \"matrix\"");
  std::vector<std::vector<long long>> rows =
      c.at("matrix").get<std::vector<std::vector<long long>>>();
  int order = c.value("order", 2);
  try {
    return make_lattice_action(IntMat::from_rows(rows), order);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("bad lattice config: ") + e.what());
  }
}

// ---- subcommand bodies; each returns a report ----

Report verify_config(const json& c) {
  std::string kind = c.value("kind", "");
  Report rep;
  rep.suite = "config:" + kind;
  if (kind == "lattice") {
    LatticeAction act = lattice_from_config(c);
    int64_t p = c.value("p", static_cast<int64_t>(3));
    int64_t ell = c.value("ell", static_cast<int64_t>(2));
    int depth = c.value("depth", 3);
    int64_t r = c.value("r", static_cast<int64_t>(0));
    Scenario s;
    try {
      s = make_scenario("config", act, p, ell, depth);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("bad scenario: ") + e.what());
    }
    for (int n = 1; n <= depth; ++n) {
      CountingReport cr = verify_counting_formula(act, p, n);
      rep.add_bool("counting-n" + std::to_string(n), "count.exact",
                   cr.sequence_ok && cr.power_ok, cr.ker_hn.str());
      ChainResult ch = chain_inequality(s, n, r);
      rep.add_bool("chain-n" + std::to_string(n), "adem.chain", ch.holds,
                   ch.tail_gamma.str() + ">=" + ch.adem.str() + ">=" +
                       ch.kernel_bound.str());
    }
  } else if (kind == "finite-group") {
    GroupPtr g = group_from_config(c);
    ThetaAction act = action_from_config(c, g);
    H1Classes h = h1_finite(act);
    size_t total = 0;
    for (size_t s : h.class_sizes) total += s;
    rep.add_bool("h1-partition", "h1.classes", total == h.cocycle_count,
                 std::to_string(h.reps.size()) + " classes");
    bool orbit_ok = true;
    for (size_t i = 0; i < h.reps.size(); ++i) {
      GroupPtr tf = twisted_fixed_subgroup(act, h.reps[i]);
      if (h.class_sizes[i] * tf->size() != g->size()) orbit_ok = false;
    }
    rep.add_bool("h1-orbit-stabilizer", "h1.classes", orbit_ok);
    SeriesData sg = lower_p_series(g);
    GroupPtr fixed = fixed_by(g, act.perm);
    SeriesData sf = lower_p_series(fixed);
    bool series_ok = sg.terms.size() == sf.terms.size();
    for (size_t i = 0; series_ok && i < sg.terms.size(); ++i) {
      ThetaAction ra = restrict_action(act, sg.terms[i]);
      series_ok = same_elements(*fixed_by(sg.terms[i], ra.perm), *sf.terms[i]);
    }
    rep.add_bool("series-commutes", "series.fixed", series_ok,
                 std::to_string(sg.terms.size()) + " terms");
  } else if (kind == "lie-algebra") {
    std::string name = c.value("algebra", "sl2");
    LieAlgebraSC g = [&] {
      try {
        return builtin_algebra(name);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    }();
    QuadForm bk = killing_form(g);
    std::vector<RatVec> fixed;
    if (c.contains("conjugation_diag")) {
      std::vector<long long> diag = c.at("conjugation_diag").get<std::vector<long long>>();
      RatMat d = rat_identity(static_cast<int>(diag.size()));
      for (size_t i = 0; i < diag.size(); ++i) d[i][i] = Rational(diag[i]);
      AlgebraAuto tau = [&] {
        try {
          return auto_from_conjugation(g, d, c.value("order", 2));
        } catch (const std::invalid_argument& e) {
          throw ConfigError(e.what());
        }
      }();
      fixed = fixed_subalgebra(g, tau);
    } else {
      for (int i = 0; i < g.dim(); ++i) {
        RatVec e(g.dim(), Rational(0));
        e[i] = 1;
        fixed.push_back(e);
      }
    }
    CenterDerivedSplit split = derived_center_split(g, fixed, bk);
    SignatureResult sig = signature(restrict_form(bk, split.derived));
    rep.add_bool("fixed-dim", "sign.fixed", true, std::to_string(fixed.size()));
    rep.add_bool("derived-signature", "sign.killing", sig.n_zero == 0,
                 std::to_string(sig.signature()));
    int q = q_from_dim_sign(static_cast<int>(split.derived.size()), sig.signature());
    EulerSign es = euler_sign(q);
    rep.add_bool("euler-sign", "sign.euler", true,
                 es.zero ? "0" : std::to_string(es.sign));
  } else {
    throw ConfigError("verify config needs kind lattice | finite-group | lie-algebra");
  }
  return rep;
}

Report exponents_config(const json& c) {
  Report rep;
  rep.suite = "exponents:config";
  if (!c.contains("rows")) throw ConfigError("exponent config needs \"rows\"");
  int i = 0;
  for (const json& row : c.at("rows")) {
    std::string type = row.value("type", "");
    std::string name = row.value("name", "row-" + std::to_string(i++));
    try {
      if (type == "theorem1") {
        Rational alpha(row.value("alpha_num", static_cast<long long>(1)),
                       row.value("alpha_den", static_cast<long long>(1)));
        Rational e = theorem1_exponent(row.at("dim_fixed").get<int>(),
                                       row.value("lambda", 0),
                                       row.at("dim").get<int>(), alpha);
        rep.add_bool(name, "exp.main", true, e.str());
      } else if (type == "basechange") {
        SplitGroupData g = builtin_group(row.value("family", "SL"), row.value("n", 2));
        BasechangeResult r = basechange_exponent(row.value("m", 1), g);
        rep.add_bool(name, "exp.bc", true,
                     r.exponent.str() + " from degree " + r.start_degree.str());
      } else if (type == "sl2n") {
        NumberFieldData f = NumberFieldData::make(row.value("f_real", 1),
                                                  row.value("f_complex", 0));
        NumberFieldData e = NumberFieldData::make(row.value("e_real", 2),
                                                  row.value("e_complex", 0));
        Sl2nReport r = sl2n_example_report(row.value("n", 1), row.value("m", 1), f, e);
        rep.add_bool(name, "exp.sl2n", true,
                     r.exponent.str() + " start " + r.start_degree.str() +
                         " vcd " + r.vcd.str());
      } else if (type == "split") {
        SplitGroupData g = builtin_group(row.value("family", "SL"), row.value("n", 2));
        NumberFieldData f = NumberFieldData::make(
            row.value("f_real", 0), row.value("f_complex", 1),
            row.value("mu", std::vector<int64_t>{2}));
        SplitGroupsResult r = split_groups_exponent(
            g, f, row.value("s_size", 1), row.value("ell", static_cast<int64_t>(2)));
        rep.add_bool(name, "exp.split", true,
                     r.alpha.str() + " start " + std::to_string(r.start_degree));
      } else {
        throw ConfigError("unknown exponent row type: " + type);
      }
    } catch (const json::exception& e) {
      throw ConfigError(std::string("bad exponent row: ") + e.what());
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("bad exponent row: ") + e.what());
    }
  }
  return rep;
}

Report h1_config(const json& c) {
  Report rep;
  rep.suite = "h1:config";
  std::string kind = c.value("kind", "");
  if (kind == "lattice") {
    LatticeAction act = lattice_from_config(c);
    AbelianStructure h = h1_lattice(act);
    rep.add_bool("h1-structure", "h1.lattice", true, h.str());
    if (c.contains("q")) {
      cpp_int q(c.at("q").get<long long>());
      rep.add_bool("restriction-kernel", "count.exact", true,
                   lattice_restriction_kernel_size(act, q).str());
    }
  } else if (kind == "finite-group") {
    GroupPtr g = group_from_config(c);
    ThetaAction act = action_from_config(c, g);
    H1Classes h = h1_finite(act);
    rep.add_bool("h1-classes", "h1.classes", true, std::to_string(h.reps.size()));
    rep.add_bool("cocycles", "h1.classes", true, std::to_string(h.cocycle_count));
    for (size_t i = 0; i < h.reps.size() && i < 16; ++i) {
      GroupPtr tf = twisted_fixed_subgroup(act, h.reps[i]);
      rep.add_bool("twisted-fixed-" + std::to_string(i), "h1.twist", true,
                   "order " + std::to_string(tf->size()));
    }
  } else {
    throw ConfigError("h1 config needs kind lattice | finite-group");
  }
  return rep;
}

Report series_config(const json& c) {
  if (c.value("kind", "") != "finite-group")
    throw ConfigError("series config needs kind finite-group");
  Report rep;
  rep.suite = "series:config";
  GroupPtr g = group_from_config(c);
  SeriesData s = lower_p_series(g);
  for (size_t i = 0; i < s.terms.size(); ++i) {
    std::string q = i < s.quotient_orders.size() ? s.quotient_orders[i].str() : "-";
    rep.add_bool("term-" + std::to_string(i + 1), "series.step", true,
                 "order " + std::to_string(s.terms[i]->size()) + ", step " + q);
  }
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"group-tower workbench: cohomology growth verification"};
  app.require_subcommand(1);

  std::string config_path, json_path;
  long long cap = 0;
  app.add_option("--cap", cap, "element cap for group closures");

  std::vector<std::string> suites;
  auto* verify = app.add_subcommand("verify", "run verification suites or a config");
  verify->add_option("suites", suites, "suite names (default: all)");
  verify->add_option("--config", config_path, "JSON scenario config");
  verify->add_option("--json", json_path, "write the report as JSON");

  auto* exponents = app.add_subcommand("exponents", "growth exponents from a config");
  exponents->add_option("--config", config_path, "JSON exponent rows")->required();
  exponents->add_option("--json", json_path, "write the report as JSON");

  auto* h1cmd = app.add_subcommand("h1", "H^1 classes for a configured action");
  h1cmd->add_option("--config", config_path, "JSON action config")->required();
  h1cmd->add_option("--json", json_path, "write the report as JSON");

  auto* series = app.add_subcommand("series", "lower p-series of a configured group");
  series->add_option("--config", config_path, "JSON group config")->required();
  series->add_option("--json", json_path, "write the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (cap > 0) setenv("TOWERLAB_ELEMENT_CAP", std::to_string(cap).c_str(), 1);
  std::optional<std::string> json_out;
  if (!json_path.empty()) json_out = json_path;

  try {
    std::vector<Report> reports;
    if (verify->parsed()) {
      if (!config_path.empty()) {
        reports.push_back(verify_config(load_config(config_path)));
      } else {
        std::vector<std::string> names = suites.empty() ? suite_names() : suites;
        for (const std::string& n : names) {
          try {
            reports.push_back(run_suite(n));
          } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
          }
        }
      }
    } else if (exponents->parsed()) {
      reports.push_back(exponents_config(load_config(config_path)));
    } else if (h1cmd->parsed()) {
      reports.push_back(h1_config(load_config(config_path)));
    } else if (series->parsed()) {
      reports.push_back(series_config(load_config(config_path)));
    }

    int failures = 0;
    json all = json::array();
    for (const Report& r : reports) {
      std::cout << r.text();
      failures += r.failures();
      all.push_back(json::parse(r.json()));
    }
    if (json_out)
      write_json(json_out, reports.size() == 1
                               ? json::parse(reports[0].json()).dump(2)
                               : all.dump(2));
    return failures == 0 ? 0 : 1;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
