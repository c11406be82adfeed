#include "kirchhoff/io.hpp"

namespace kirchhoff {

namespace {

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

void to_json(json& j, const ProblemParams& p) {
  j = json{{"N", p.N},         {"p", p.p},         {"a", p.a},          {"b", p.b},
           {"f_inf", p.f_inf}, {"f_min", p.f_min}, {"f_max", p.f_max}};
}

void to_json(json& j, const FunctionData& d) {
  j = json{{"h1b_sq", d.h1b_sq}, {"dir_sq", d.dir_sq}, {"mass", d.mass}, {"fp", d.fp}};
}

void to_json(json& j, const GroundState& gs) {
  j = json{{"N", gs.N},
           {"p", gs.p},
           {"f_inf", gs.f_inf},
           {"w0", gs.w0},
           {"G", gs.G},
           {"M", gs.M},
           {"P", gs.P},
           {"h1_sq", gs.h1_sq},
           {"S_p", gs.S_p},
           {"S_p_pow", gs.S_p_pow},
           {"energy0", gs.energy0},
           {"nehari_residual", gs.nehari_residual()},
           {"sobolev_residual", gs.sobolev_residual()},
           {"pohozaev_residual", gs.pohozaev_residual()},
           {"quadrature_error", gs.quadrature_error},
           {"shooting_tol", gs.shooting_tol},
           {"integrator_tol", gs.integrator_tol},
           {"r_max", gs.profile.r_max},
           {"samples", gs.profile.r.size()},
           {"tail_constant", gs.profile.tail_constant},
           {"tail_residual", gs.profile.tail_residual}};
}

void to_json(json& j, const ThresholdSet& t) {
  j = json{{"N", t.N},
           {"p", t.p},
           {"d_p", t.d_p},
           {"lambda0", t.lambda0},
           {"lambda", t.lambda},
           {"a_star_lower", opt(t.a_star_lower)},
           {"a_star_upper", opt(t.a_star_upper)},
           {"a_star_under", opt(t.a_star_under)},
           {"nonexist_lower", opt(t.nonexist_lower)},
           {"nonexist_upper", opt(t.nonexist_upper)},
           {"A0", t.A0},
           {"A0_bar", t.A0_bar},
           {"A0_star", t.A0_star},
           {"a_crit", opt(t.a_crit)},
           {"r_hat", opt(t.r_hat)},
           {"R_a", opt(t.R_a)},
           {"R_hat_a", opt(t.R_hat_a)},
           {"S_p", t.S_p},
           {"S_p_pow", t.S_p_pow},
           {"C_p", t.C_p},
           {"C_p_pow", t.C_p_pow},
           {"provenance", t.provenance}};
}

void to_json(json& j, const BranchSolution& s) {
  j = json{{"K", s.K},
           {"multiplicity", s.multiplicity},
           {"data", s.data},
           {"energy", s.energy},
           {"h_pp", s.h_pp},
           {"nehari_class", to_string(s.nehari_class)},
           {"norm_h1", s.norm_h1},
           {"branch_residual", s.branch_residual},
           {"nehari_residual", s.nehari_residual}};
}

void to_json(json& j, const BranchDiagram& d) {
  json rows = json::array();
  for (const BranchRecord& r : d.rows)
    rows.push_back(json{{"a", r.a}, {"solutions", r.solutions}});
  j = json{{"rows", rows},
           {"fold_a", opt(d.fold_a)},
           {"fold_K", opt(d.fold_K)},
           {"a_crit", opt(d.a_crit)}};
}

void to_json(json& j, const T1Report& r) {
  j = json{{"lambda", r.lambda},
           {"norm_scale", r.norm_scale},
           {"energy_floor", r.energy_floor},
           {"solutions", r.solutions},
           {"checks", r.checks},
           {"all_pass", r.all_pass}};
}

void to_json(json& j, const FiberingReport& r) {
  j = json{{"T_f", r.T_f},
           {"t_minus", opt(r.t_minus)},
           {"t_plus", opt(r.t_plus)},
           {"tangent", r.tangent},
           {"t_hat_0", opt(r.t_hat_0)},
           {"t_hat_1", opt(r.t_hat_1)},
           {"t0_u", opt(r.t0_u)},
           {"a0_u", r.a0_u},
           {"g_minimizer", r.g_minimizer},
           {"m_minimizer", r.m_minimizer},
           {"hypothesis_ok", r.hypothesis_ok},
           {"ordering", r.ordering},
           {"ordering_ok", r.ordering_ok},
           {"energies", r.energies}};
}

void to_json(json& j, const FiltrationReport& r) {
  j = json{{"c", r.c},
           {"D1", r.D1},
           {"D2", r.D2},
           {"norm", r.norm},
           {"energy", r.energy},
           {"membership", to_string(r.membership)},
           {"lower_sandwich", r.lower_sandwich},
           {"upper_sandwich", r.upper_sandwich},
           {"gap_bound", r.gap_bound}};
}

void to_json(json& j, const Residual& r) {
  j = json{{"value", r.value}, {"tolerance", r.tolerance}, {"pass", r.pass}};
}

void to_json(json& j, const ProbeReport& r) {
  json traj = json::array();
  for (const TrajectoryPoint& q : r.trajectory) traj.push_back(json{{"t", q.t}, {"energy", q.energy}});
  j = json{{"probe", r.probe},
           {"verdict", to_string(r.verdict)},
           {"witness", r.witness},
           {"residuals", r.residuals},
           {"signs", r.signs},
           {"trajectory", traj},
           {"fitted_exponent", opt(r.fitted_exponent)},
           {"expected_exponent", opt(r.expected_exponent)},
           {"notes", r.notes},
           {"falsified", r.falsified}};
}

void to_json(json& j, const TableCell& c) {
  j = json{{"table", c.table},
           {"N", c.N},
           {"row", c.row},
           {"column", c.column},
           {"expected", c.expected},
           {"computed", c.computed},
           {"match", c.match},
           {"a", opt(c.a)},
           {"witness", c.witness},
           {"witness_value", opt(c.witness_value)},
           {"verdict", to_string(c.verdict)}};
}

void to_json(json& j, const LandscapeTable& t) {
  json sweep = json::array();
  for (const SweepRow& s : t.sweep)
    sweep.push_back(json{{"N", s.N},
                         {"a", s.a},
                         {"solutions", s.solutions},
                         {"boundedness", to_string(s.boundedness)}});
  j = json{{"cells", t.cells},
           {"sweep", sweep},
           {"sweep_monotone", t.sweep_monotone},
           {"all_match", t.all_match}};
}

void to_json(json& j, const ConditionReport& r) {
  j = json{{"d5_integral", r.d5_integral}, {"d5", r.d5}, {"t4_min", r.t4_min}, {"t4", r.t4}};
}

void to_json(json& j, const DiscreteSolution& s) {
  j = json{{"L", s.grid.L},
           {"h", s.grid.h},
           {"nodes", s.grid.n},
           {"data", s.data},
           {"energy", s.energy},
           {"virial", s.virial},
           {"kkt_residual", s.kkt_residual},
           {"iterations", s.iterations},
           {"converged", s.converged},
           {"norm", std::sqrt(s.data.h1_sq())},
           {"norm_bound", s.norm_bound},
           {"energy_bound", s.energy_bound},
           {"reference_energy", s.reference_energy},
           {"checks", s.checks}};
}

json envelope(const std::string& command, const ProblemParams& params, json result) {
  return json{{"command", command}, {"params", params}, {"result", std::move(result)}};
}

}  // namespace kirchhoff
