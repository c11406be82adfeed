#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kirchhoff/io.hpp"
#include "run_config.hpp"

namespace fs = std::filesystem;
using namespace kirchhoff;
using kirchhoff::cli::RunConfig;

namespace {

enum ExitCode { kOk = 0, kInput = 2, kSolver = 3, kFalsified = 4 };

struct Outcome {
  json report;
  bool falsified = false;
  bool solver_failed = false;
  std::string message;
};

class Writer {
 public:
  explicit Writer(const RunConfig& cfg) : cfg_(cfg) {
    if (cfg.out_dir != "-") fs::create_directories(cfg.out_dir);
  }

  void json_file(const std::string& name, const json& j) const {
    if (!cli::writes_json(cfg_.format)) return;
    if (cfg_.out_dir == "-") {
      std::cout << j.dump(2) << '\n';
      return;
    }
    std::ofstream os(fs::path(cfg_.out_dir) / name);
    os << j.dump(2) << '\n';
  }

  template <class F>
  void csv_file(const std::string& name, F&& body) const {
    if (!cli::writes_csv(cfg_.format) || cfg_.out_dir == "-") return;
    std::ofstream os(fs::path(cfg_.out_dir) / name);
    body(os);
  }

 private:
  const RunConfig& cfg_;
};

GroundStateOptions gs_options(const RunConfig& cfg) {
  GroundStateOptions o;
  o.tol = cfg.tol;
  return o;
}

GroundState ground_state_for(const RunConfig& cfg) {
  return find_ground_state(cfg.params, gs_options(cfg));
}

json config_json(const RunConfig& cfg) {
  return json{{"a", cfg.a ? json(*cfg.a) : json("auto")},
              {"tol", cfg.tol},
              {"format", cfg.format == cli::Format::Json  ? "json"
                         : cfg.format == cli::Format::Csv ? "csv"
                                                          : "both"},
              {"a_grid", cfg.a_grid},
              {"seed", cfg.seed},
              {"theorem", cfg.theorem}};
}

// Coupling used when --a is "auto".
double auto_coupling(const RunConfig& cfg, const GroundState& gs, const ThresholdSet& th) {
  const int N = cfg.params.N;
  if (cfg.command == "probe") {
    if (cfg.theorem == "t0-2") return 1.2 * *th.nonexist_upper;
    if (cfg.theorem == "t0-1") {
      if (N <= 3) return 1.0;
      if (N == 4) return 0.5 * *th.a_star_under;
      return 0.5 * *th.a_star_lower;
    }
  }
  (void)gs;
  return 0.5 * th.lambda;
}

double coupling(const RunConfig& cfg, const GroundState& gs) {
  if (cfg.a) return *cfg.a;
  return auto_coupling(cfg, gs, compute_thresholds(cfg.params.with_a(0.0), gs));
}

Outcome cmd_ground_state(const RunConfig& cfg, const Writer& w) {
  const GroundState gs = ground_state_for(cfg);
  Outcome out;
  out.report = gs;
  w.csv_file("profile.csv", [&](std::ostream& os) { write_profile_csv(os, gs.profile); });
  return out;
}

Outcome cmd_branch(const RunConfig& cfg, const Writer& w) {
  const GroundState gs = ground_state_for(cfg);
  Outcome out;
  if (!cfg.a_grid.empty()) {
    const BranchDiagram d = branch_diagram(cfg.params, gs, cfg.a_grid);
    out.report = json{{"G", gs.G}, {"diagram", d}};
    w.csv_file("branch.csv", [&](std::ostream& os) { write_branch_csv(os, d); });
    return out;
  }
  const ProblemParams q = cfg.params.with_a(coupling(cfg, gs));
  const T1Report t1 = theorem_t1_checks(q, gs);
  out.report = json{{"G", gs.G}, {"a", q.a}, {"solutions", t1.solutions}};
  if (q.a < t1.lambda) {
    out.report["t1"] = t1;
    out.falsified = !t1.all_pass;
  }
  BranchDiagram d;
  d.rows.push_back({q.a, t1.solutions});
  w.csv_file("branch.csv", [&](std::ostream& os) { write_branch_csv(os, d); });
  return out;
}

Outcome cmd_thresholds(const RunConfig& cfg, const Writer& w) {
  const GroundState gs = ground_state_for(cfg);
  const ProblemParams q = cfg.params.with_a(cfg.a.value_or(0.0));
  const ThresholdSet th = compute_thresholds(q, gs);
  Outcome out;
  out.report = th;
  const json flat = th;
  w.csv_file("thresholds.csv", [&](std::ostream& os) {
    os.precision(17);
    os << "name,value\n";
    for (const auto& [k, v] : flat.items())
      if (v.is_number()) os << k << ',' << v.get<double>() << '\n';
  });
  return out;
}

Outcome cmd_fibering(const RunConfig& cfg, const Writer& w) {
  FunctionData d;
  const ProblemParams q = cfg.params.with_a(cfg.a.value_or(0.0));
  std::optional<double> sp_pow;
  if (cfg.from_ground_state) {
    const GroundState gs = ground_state_for(cfg);
    d = FunctionData::from(gs.G, gs.M, gs.fp(), q.b);
    sp_pow = gs.S_p_pow;
  } else {
    d = FunctionData::from(cfg.dir_sq, cfg.mass, cfg.fp, q.b);
  }
  const FiberingReport rep = critical_points(d, q);
  Outcome out;
  out.report = json{{"data", d}, {"critical_points", rep}};
  if (sp_pow && q.a > 0.0) {
    try {
      out.report["filtration"] = filtration_split(d, q, *sp_pow);
    } catch (const PreconditionError& e) {
      out.report["filtration"] = json{{"skipped", e.what()}};
    }
  }
  if (rep.hypothesis_ok) out.falsified = !rep.ordering_ok;
  std::vector<double> ts;
  for (int i = 0; i <= 120; ++i) ts.push_back(std::pow(10.0, -3.0 + 0.05 * i));
  w.csv_file("fiber.csv", [&](std::ostream& os) { write_fiber_sweep_csv(os, d, q, ts); });
  return out;
}

Outcome cmd_probe(const RunConfig& cfg, const Writer& w) {
  const GroundState gs = ground_state_for(cfg);
  const double a = coupling(cfg, gs);
  const ProblemParams q = cfg.params.with_a(a);
  Outcome out;
  if (cfg.theorem == "t1") {
    const T1Report r = theorem_t1_checks(q, gs);
    out.report = r;
    out.falsified = !r.all_pass && q.a < r.lambda;
    return out;
  }
  ProbeReport r;
  if (cfg.theorem == "t0-1")
    r = boundedness_probe(q, gs);
  else if (cfg.theorem == "t0-2")
    r = nonexistence_check(cfg.params, gs, a);
  else if (cfg.theorem == "t5")
    r = t5_sign_checks(cfg.params, gs, cfg.a ? std::vector<double>{a} : cfg.a_grid);
  else
    throw DomainError("unknown theorem '" + cfg.theorem + "' (t0-1, t0-2, t1, t5)");
  out.report = r;
  out.falsified = r.falsified;
  w.csv_file("trajectory.csv", [&](std::ostream& os) {
    os.precision(17);
    os << "t,energy\n";
    for (const TrajectoryPoint& p : r.trajectory) os << p.t << ',' << p.energy << '\n';
  });
  return out;
}

Outcome cmd_pohozaev(const RunConfig& cfg, const Writer& w) {
  const GroundState gs = ground_state_for(cfg);
  const ProblemParams q = cfg.params.with_a(coupling(cfg, gs));
  Outcome out;
  json checks = json::array();
  for (const BranchSolution& s : solve_and_materialize(gs, q)) {
    const ProbeReport r = pohozaev_check(s, q);
    out.falsified = out.falsified || r.verdict != Verdict::Confirmed;
    checks.push_back(json{{"solution", s}, {"check", r}});
  }
  out.report = json{{"a", q.a}, {"checks", checks}};
  w.csv_file("pohozaev.csv", [&](std::ostream& os) {
    os.precision(17);
    os << "K,general,display\n";
    for (const auto& c : checks) {
      const auto& res = c["check"]["residuals"];
      os << c["solution"]["K"].get<double>() << ','
         << res["general"]["value"].get<double>() << ',';
      if (res.contains("display")) os << res["display"]["value"].get<double>();
      os << '\n';
    }
  });
  return out;
}

CoefficientSpec coefficient(const RunConfig& cfg) {
  const double f = cfg.params.f_inf;
  if (cfg.profile == "gaussian") return CoefficientSpec::gaussian(f, cfg.eps, cfg.sigma);
  if (cfg.profile == "spline") return CoefficientSpec::spline(f, cfg.eps, cfg.sigma);
  if (cfg.profile == "constant") return CoefficientSpec::constant(f);
  throw DomainError("profile must be gaussian, spline or constant");
}

Outcome cmd_nonauto(const RunConfig& cfg, const Writer& w) {
  if (cfg.params.N != 1) throw DomainError("nonauto runs in N = 1");
  const CoefficientSpec f = coefficient(cfg);
  f.validate();
  ProblemParams q = f.params(cfg.params.p, 0.0, cfg.params.b);
  double a = 0.0;
  if (cfg.a) {
    a = *cfg.a;
  } else {
    a = 0.5 * lambda(q, closed_form_1d(q.p, 1.0).S_p_pow);
  }
  q.a = a;
  MinimizeOptions opt;
  opt.h = cfg.h;
  opt.L = cfg.L;
  const DiscreteSolution s = minimize_m1(q, f, opt);
  const ConditionReport cond = condition_checkers(f, q, s.grid, s.u);
  const PohozaevTerms pz = pohozaev_general(s.data, 1, q.p, q.a, q.b, s.virial);
  Outcome out;
  out.report = json{{"coefficient", json{{"profile", f.name()},
                                         {"f_inf", f.f_inf},
                                         {"eps", f.eps},
                                         {"sigma", f.sigma},
                                         {"f_min", f.f_min()},
                                         {"f_max", f.f_max()}}},
                    {"a", a},
                    {"solution", s},
                    {"conditions", cond},
                    {"pohozaev_residual", pz.residual}};
  for (const auto& [k, v] : s.checks)
    if (k != "converged" && !v) out.falsified = true;
  if (!s.converged) {
    out.solver_failed = true;
    out.message = "minimization did not reach the KKT tolerance";
  }
  w.csv_file("solution.csv", [&](std::ostream& os) { write_solution_csv(os, s, f); });
  w.csv_file("history.csv", [&](std::ostream& os) { write_history_csv(os, s); });
  return out;
}

Outcome cmd_table(const RunConfig& cfg, const Writer& w) {
  std::vector<ProblemParams> rows;
  if (cfg.n_given) {
    rows.push_back(cfg.params);
  } else {
    const double ps[] = {3.0, 3.0, 3.0, 3.0, 2.5, 2.5};
    for (int N = 1; N <= 6; ++N)
      rows.push_back(ProblemParams::autonomous(N, ps[N - 1], 0.0, cfg.params.b,
                                               cfg.params.f_inf));
  }
  const LandscapeTable tab = landscape_table(rows, cfg.a_grid);
  Outcome out;
  out.report = tab;
  out.falsified = !tab.all_match;
  auto quoted = [](const std::string& s) { return '"' + s + '"'; };
  for (const char* table : {"boundedness", "solutions"}) {
    w.csv_file(std::string("table_") + table + ".csv", [&](std::ostream& os) {
      os.precision(17);
      os << "N,row,column,expected,computed,match,a,witness,witness_value\n";
      for (const TableCell& c : tab.cells) {
        if (c.table != table) continue;
        os << c.N << ',' << quoted(c.row) << ',' << quoted(c.column) << ','
           << quoted(c.expected) << ',' << quoted(c.computed) << ',' << c.match << ',';
        if (c.a) os << *c.a;
        os << ',' << quoted(c.witness) << ',';
        if (c.witness_value) os << *c.witness_value;
        os << '\n';
      }
    });
  }
  if (!tab.sweep.empty())
    w.csv_file("table_sweep.csv", [&](std::ostream& os) {
      os.precision(17);
      os << "N,a,solutions,boundedness\n";
      for (const SweepRow& s : tab.sweep)
        os << s.N << ',' << s.a << ',' << s.solutions << ',' << to_string(s.boundedness)
           << '\n';
    });
  return out;
}

Outcome dispatch(const RunConfig& cfg, const Writer& w) {
  const std::string& c = cfg.command;
  if (c == "ground-state") return cmd_ground_state(cfg, w);
  if (c == "branch") return cmd_branch(cfg, w);
  if (c == "thresholds") return cmd_thresholds(cfg, w);
  if (c == "fibering") return cmd_fibering(cfg, w);
  if (c == "probe") return cmd_probe(cfg, w);
  if (c == "pohozaev") return cmd_pohozaev(cfg, w);
  if (c == "nonauto") return cmd_nonauto(cfg, w);
  if (c == "table") return cmd_table(cfg, w);
  throw DomainError("unknown command " + c);
}

std::string file_stem(const std::string& command) {
  std::string s = command;
  for (char& ch : s)
    if (ch == '-') ch = '_';
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kirchhoff-type elliptic problems: ground states, branches, probes"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file; command-line flags take precedence");

  RunConfig cfg;
  cfg.out_dir = cli::default_out_dir();
  std::string a_text = "auto", format_text = "both", grid_text;
  double f_inf = 1.0, f_min = 1.0, f_max = 1.0;

  app.add_option("--N", cfg.params.N, "dimension")->capture_default_str();
  app.add_option("--p", cfg.params.p, "exponent, 2 < p < min(4, 2*)")->capture_default_str();
  app.add_option("--a", a_text, "Kirchhoff coupling or 'auto'")->capture_default_str();
  app.add_option("--b", cfg.params.b, "diffusion constant")->capture_default_str();
  app.add_option("--f-inf", f_inf, "limit of f at infinity")->capture_default_str();
  auto* fmin_opt = app.add_option("--f-min", f_min, "lower bound of f (default f_inf)");
  auto* fmax_opt = app.add_option("--f-max", f_max, "upper bound of f (default f_inf)");
  app.add_option("--tol", cfg.tol, "shooting tolerance on w(0)")->capture_default_str();
  app.add_option("--out", cfg.out_dir, "output directory, '-' for stdout (env KIRCHHOFF_OUT)");
  app.add_option("--format", format_text, "json, csv or both")->capture_default_str();
  app.add_option("--a-grid", grid_text, "log:lo:hi:n, lin:lo:hi:n or a comma list");
  app.add_option("--seed", cfg.seed, "seed recorded with the run")->capture_default_str();
  app.add_option("--theorem", cfg.theorem, "probe target: t0-1, t0-2, t1, t5")
      ->capture_default_str();
  app.add_flag("--from-ground-state", cfg.from_ground_state,
               "fibering data from the ground state");
  app.add_option("--dir-sq", cfg.dir_sq, "fibering data: int |grad u|^2");
  app.add_option("--mass", cfg.mass, "fibering data: int u^2");
  app.add_option("--fp", cfg.fp, "fibering data: int f |u|^p");
  app.add_option("--profile", cfg.profile, "nonauto coefficient: gaussian, spline, constant")
      ->capture_default_str();
  app.add_option("--eps", cfg.eps, "nonauto bump amplitude")->capture_default_str();
  app.add_option("--sigma", cfg.sigma, "nonauto bump width")->capture_default_str();
  app.add_option("--grid-h", cfg.h, "nonauto grid spacing")->capture_default_str();
  app.add_option("--grid-L", cfg.L, "nonauto half-length of the domain")->capture_default_str();

  const std::pair<const char*, const char*> commands[] = {
      {"ground-state", "semilinear ground state profile and integrals"},
      {"branch", "radial Kirchhoff solutions along the branch equation"},
      {"thresholds", "all named coupling thresholds"},
      {"fibering", "critical points of the fibering map"},
      {"probe", "landscape and sign probes"},
      {"pohozaev", "Pohozaev residuals of the branch solutions"},
      {"nonauto", "one-dimensional nonautonomous minimization"},
      {"table", "both summary tables with witnesses"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.params.f_inf = f_inf;
    cfg.f_min_given = fmin_opt->count() > 0;
    cfg.f_max_given = fmax_opt->count() > 0;
    cfg.params.f_min = cfg.f_min_given ? f_min : f_inf;
    cfg.params.f_max = cfg.f_max_given ? f_max : f_inf;
    cfg.n_given = app.get_option("--N")->count() > 0;
    cfg.a = cli::parse_coupling(a_text);
    cfg.format = cli::parse_format(format_text);
    cfg.a_grid = cli::parse_a_grid(grid_text);
    if (cfg.a && !(*cfg.a >= 0.0)) throw DomainError("a must be nonnegative");
    if (!(cfg.tol > 0.0)) throw DomainError("tol must be positive");
    cfg.params.a = cfg.a.value_or(0.0);
    if (cfg.command != "nonauto") cfg.params.validate();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }

  try {
    const Writer w(cfg);
    Outcome out = dispatch(cfg, w);
    json doc = envelope(cfg.command, cfg.params, out.report);
    doc["config"] = config_json(cfg);
    doc["falsified"] = out.falsified;
    w.json_file(file_stem(cfg.command) + ".json", doc);
    if (out.falsified) {
      if (cfg.out_dir != "-") {
        std::ofstream os(fs::path(cfg.out_dir) / "falsification.json");
        os << doc.dump(2) << '\n';
      }
      std::cerr << "falsified: a checked assertion failed; see falsification.json\n";
      return kFalsified;
    }
    if (out.solver_failed) {
      std::cerr << "solver: " << out.message << '\n';
      return kSolver;
    }
    return kOk;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const SolverError& e) {
    std::cerr << "solver: " << e.what() << '\n';
    return kSolver;
  } catch (const std::exception& e) {
    std::cerr << "solver: " << e.what() << '\n';
    return kSolver;
  }
}
