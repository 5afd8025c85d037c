#include "acqudit/runner.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "acqudit/parallel.hpp"

namespace acqudit::runner {

namespace {

using nlohmann::json;

constexpr double kC = bath::UnitSystem::c_sound;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", x);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open output file " + path.string());
  out << text;
}

json config_to_json(const RunConfig& cfg) {
  json j;
  j["trap"] = {{"depth", cfg.trap.depth_D}, {"width", cfg.trap.width_a}, {"mass", cfg.trap.mass_m}};
  j["bath"] = {{"g_tilde", cfg.bath.g_tilde}, {"eps_max", cfg.bath.eps_max},
               {"k_max", cfg.bath.k_max},     {"n_eps", cfg.bath.n_eps},
               {"n_k", cfg.bath.n_k}};
  j["grid"] = {{"t_f", cfg.t_f}, {"n_t", cfg.n_t}};
  j["solver"] = {{"lambda", cfg.solver.lambda},
                 {"lambda1", cfg.solver.lambda1},
                 {"series_terms", cfg.solver.series_terms},
                 {"picard_iters", cfg.solver.picard_iters},
                 {"tol", cfg.solver.tol}};
  j["protocol"] = protocol_name(cfg.protocol);
  json bc;
  bc["v0_over_c"] = cfg.bc.v0_over_c;
  if (cfg.bc.vf_over_c) bc["vf_over_c"] = *cfg.bc.vf_over_c;
  if (cfg.bc.v_bar_over_c) bc["v_bar_over_c"] = *cfg.bc.v_bar_over_c;
  if (cfg.bc.xf) bc["xf"] = *cfg.bc.xf;
  j["bc"] = bc;
  if (!cfg.sweep.empty()) j["sweep"] = cfg.sweep;
  return j;
}

}  // namespace

std::string protocol_name(Protocol p) {
  switch (p) {
    case Protocol::AcquditLinear: return "acqudit_linear";
    case Protocol::AcquditPicard: return "acqudit_picard";
    case Protocol::Dissipationless: return "dissipationless";
    case Protocol::ConstantSpeed: return "constant_speed";
    case Protocol::CdfOnOptimal: return "cdf_on_optimal";
  }
  throw ConfigError("unknown protocol enum value");
}

Protocol protocol_from_name(const std::string& name) {
  if (name == "acqudit_linear") return Protocol::AcquditLinear;
  if (name == "acqudit_picard") return Protocol::AcquditPicard;
  if (name == "dissipationless") return Protocol::Dissipationless;
  if (name == "constant_speed") return Protocol::ConstantSpeed;
  if (name == "cdf_on_optimal") return Protocol::CdfOnOptimal;
  throw ConfigError("unknown protocol '" + name + "'");
}

void RunConfig::validate() const {
  if (!(trap.depth_D > 0.0) || !(trap.width_a > 0.0) || !(trap.mass_m > 0.0)) {
    throw ConfigError("trap: depth, width, mass must be positive");
  }
  bath.validate();
  GridSpec gs{t_f, n_t, bath.n_eps, bath.n_k};
  gs.validate();
  solver.validate();
  for (double tf : sweep) {
    if (!(tf > 0.0)) throw ConfigError("sweep: t_f values must be > 0");
  }

  const bool has_vf = bc.vf_over_c.has_value();
  const bool has_vbar = bc.v_bar_over_c.has_value();
  const bool has_xf = bc.xf.has_value();
  switch (protocol) {
    case Protocol::AcquditLinear:
      if (has_vbar) throw ConfigError("bc: v_bar_over_c is only for constant_speed");
      if (has_vf == has_xf) {
        throw ConfigError("acqudit_linear needs exactly one of bc.vf_over_c or bc.xf");
      }
      if (has_xf && bc.v0_over_c != 0.0) {
        throw ConfigError("position BC requires v0_over_c = 0");
      }
      break;
    case Protocol::AcquditPicard:
    case Protocol::Dissipationless:
    case Protocol::CdfOnOptimal:
      if (!has_vf) throw ConfigError(protocol_name(protocol) + " needs bc.vf_over_c");
      if (has_xf) throw ConfigError("bc.xf is only valid for acqudit_linear");
      if (has_vbar) throw ConfigError("bc: v_bar_over_c is only for constant_speed");
      break;
    case Protocol::ConstantSpeed:
      if (!has_vbar) throw ConfigError("constant_speed needs bc.v_bar_over_c");
      if (has_vf || has_xf) throw ConfigError("constant_speed takes only bc.v_bar_over_c");
      break;
  }
}

std::vector<double> RunConfig::cells() const {
  if (!sweep.empty()) return sweep;
  return {t_f};
}

RunConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  RunConfig cfg;
  try {
    if (j.contains("trap")) {
      const auto& t = j.at("trap");
      cfg.trap.depth_D = t.value("depth", cfg.trap.depth_D);
      cfg.trap.width_a = t.value("width", cfg.trap.width_a);
      cfg.trap.mass_m = t.value("mass", cfg.trap.mass_m);
    }
    if (j.contains("bath")) {
      const auto& b = j.at("bath");
      cfg.bath.g_tilde = b.value("g_tilde", cfg.bath.g_tilde);
      cfg.bath.eps_max = b.value("eps_max", cfg.bath.eps_max);
      cfg.bath.k_max = b.value("k_max", cfg.bath.k_max);
      cfg.bath.n_eps = b.value("n_eps", cfg.bath.n_eps);
      cfg.bath.n_k = b.value("n_k", cfg.bath.n_k);
    }
    if (j.contains("grid")) {
      const auto& g = j.at("grid");
      cfg.t_f = g.value("t_f", cfg.t_f);
      cfg.n_t = g.value("n_t", cfg.n_t);
    }
    if (j.contains("solver")) {
      const auto& s = j.at("solver");
      cfg.solver.lambda = s.value("lambda", cfg.solver.lambda);
      cfg.solver.lambda1 = s.value("lambda1", cfg.solver.lambda1);
      cfg.solver.series_terms = s.value("series_terms", cfg.solver.series_terms);
      cfg.solver.picard_iters = s.value("picard_iters", cfg.solver.picard_iters);
      cfg.solver.tol = s.value("tol", cfg.solver.tol);
    }
    if (j.contains("protocol")) cfg.protocol = protocol_from_name(j.at("protocol"));
    if (j.contains("bc")) {
      const auto& b = j.at("bc");
      cfg.bc.v0_over_c = b.value("v0_over_c", 0.0);
      if (b.contains("vf_over_c")) cfg.bc.vf_over_c = b.at("vf_over_c").get<double>();
      if (b.contains("v_bar_over_c")) cfg.bc.v_bar_over_c = b.at("v_bar_over_c").get<double>();
      if (b.contains("xf")) cfg.bc.xf = b.at("xf").get<double>();
    }
    if (j.contains("sweep")) cfg.sweep = j.at("sweep").get<std::vector<double>>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config field error: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string canonical_config(const RunConfig& cfg) { return config_to_json(cfg).dump(2); }

std::string content_hash(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
  return buf;
}

CellResult solve_cell(const RunConfig& cfg, const kernels::SpectralTables& tab, double t_f) {
  CellResult cell;
  cell.t_f = t_f;
  const TimeGrid grid = make_time_grid(t_f, cfg.n_t);
  const kernels::KernelSet ks = kernels::build_kernels(tab, grid);

  double v_bar = 0.0;  // constant-speed baseline
  switch (cfg.protocol) {
    case Protocol::AcquditLinear:
    case Protocol::CdfOnOptimal: {
      if (cfg.bc.xf) {
        cell.trajectory = solvers::solve_linear_position_bc(ks, cfg.solver, *cfg.bc.xf,
                                                            &cell.neumann);
        v_bar = *cfg.bc.xf / t_f;
      } else {
        const solvers::VelocityBC bc{cfg.bc.v0_over_c * kC, *cfg.bc.vf_over_c * kC};
        cell.trajectory = solvers::solve_linear(ks, cfg.solver, bc, &cell.neumann);
        v_bar = bc.vf;
      }
      break;
    }
    case Protocol::AcquditPicard: {
      const solvers::VelocityBC bc{cfg.bc.v0_over_c * kC, *cfg.bc.vf_over_c * kC};
      cell.trajectory = solvers::solve_nonlinear_picard(ks, tab, cfg.solver, bc, &cell.picard);
      v_bar = bc.vf;
      break;
    }
    case Protocol::Dissipationless: {
      const solvers::VelocityBC bc{cfg.bc.v0_over_c * kC, *cfg.bc.vf_over_c * kC};
      cell.trajectory = solvers::solve_dissipationless(ks, cfg.solver, bc, &cell.neumann);
      v_bar = bc.vf;
      break;
    }
    case Protocol::ConstantSpeed: {
      v_bar = *cfg.bc.v_bar_over_c * kC;
      cell.trajectory = constant_speed(v_bar, grid);
      break;
    }
  }

  cell.optimal = fidelity::survival(cell.trajectory, tab);
  cell.cdf = fidelity::survival_cdf(cell.trajectory, tab);
  cell.cdf_condition = fidelity::cdf_condition_check(cell.trajectory, tab);
  cell.constant = fidelity::survival(constant_speed(v_bar, grid), tab);
  return cell;
}

namespace {

std::string trajectory_csv(const Trajectory& traj) {
  std::string out = "t,x,v,a\n";
  for (int i = 0; i < traj.grid.size(); ++i) {
    out += fmt(traj.grid.t[i]) + "," + fmt(traj.x[i]) + "," + fmt(traj.v[i]) + "," +
           fmt(traj.a[i]) + "\n";
  }
  return out;
}

std::string comparison_csv(const std::vector<CellResult>& cells) {
  std::string out =
      "t_f,survival_opt,survival_const,survival_cdf,J_na,J_bath,adiabatic_flag,speed_ok\n";
  for (const CellResult& c : cells) {
    out += fmt(c.t_f) + "," + fmt(c.optimal.survival) + "," + fmt(c.constant.survival) + "," +
           fmt(c.cdf.survival) + "," + fmt(c.optimal.J_nonadiabatic) + "," +
           fmt(c.optimal.J_bath) + "," + (c.optimal.adiabatic ? "1" : "0") + "," +
           (c.optimal.speed_ok ? "1" : "0") + "\n";
  }
  return out;
}

json manifest_json(const RunConfig& cfg, const kernels::SpectralTables& tab,
                   const std::vector<CellResult>& cells) {
  json m;
  m["tool"] = "acqudit";
  m["version"] = "1.0.0";
  m["config"] = config_to_json(cfg);
  m["config_hash"] = content_hash(canonical_config(cfg));
  m["units"] = {{"xi", bath::UnitSystem::xi},
                {"t_B", bath::UnitSystem::t_B},
                {"m_B", bath::UnitSystem::m_B},
                {"c_sound", bath::UnitSystem::c_sound},
                {"note", "hbar = m_B = xi = 1, c = 1/sqrt(2), t_B = 1; "
                         "user speeds are multiples of c_sound"}};
  m["quadrature"] = {{"rule", "composite midpoint"},
                     {"n_eps", cfg.bath.n_eps},
                     {"n_k", cfg.bath.n_k},
                     {"eps_max", cfg.bath.eps_max},
                     {"k_max", cfg.bath.k_max},
                     {"n_t", cfg.n_t}};
  const morse::MorseStructure& s = tab.structure;
  m["derived"] = {{"N", s.N_param},
                  {"omega_bound", s.omega_bound},
                  {"bound_norm", s.bound_norm},
                  {"t_c", 1.0 / cfg.trap.depth_D},
                  {"min_gap", morse::gap(s, tab.eps_grid.nodes.front())},
                  {"min_sonic_bound",
                   bath::min_sonic_bound(s, tab.eps_grid, tab.k_grid)}};
  json jc = json::array();
  for (const CellResult& c : cells) {
    json e;
    e["t_f"] = c.t_f;
    e["survival_opt"] = c.optimal.survival;
    e["survival_const"] = c.constant.survival;
    e["survival_cdf"] = c.cdf.survival;
    e["J_na"] = c.optimal.J_nonadiabatic;
    e["J_bath"] = c.optimal.J_bath;
    e["kinetic_integral"] = c.optimal.kinetic_integral;
    e["distance"] = c.trajectory.distance();
    e["max_abs_v"] = c.trajectory.max_abs_v();
    e["adiabaticity_lhs"] = c.optimal.adiabaticity_lhs;
    e["adiabaticity_rhs"] = c.optimal.adiabaticity_rhs;
    e["speed_margin"] = c.optimal.speed_margin;
    e["cdf_condition_aggregate"] = c.cdf_condition.aggregate;
    if (!c.trajectory_file.empty()) e["trajectory_file"] = c.trajectory_file;
    if (c.neumann.terms_used > 0) {
      e["neumann"] = {{"terms_used", c.neumann.terms_used},
                      {"last_update", c.neumann.last_update},
                      {"fredholm_residual", c.neumann.fredholm_residual}};
    }
    if (c.picard.iterations > 0) {
      e["picard"] = {{"iterations", c.picard.iterations},
                     {"converged", c.picard.converged},
                     {"relax_used", c.picard.relax_used},
                     {"residuals", c.picard.residuals}};
    }
    jc.push_back(e);
  }
  m["cells"] = jc;
  return m;
}

}  // namespace

RunOutput run(const RunConfig& cfg, const std::filesystem::path& out_dir, int jobs,
              bool write_trajectories) {
  cfg.validate();
  std::filesystem::create_directories(out_dir);
  const kernels::SpectralTables tab = kernels::build_tables(cfg.trap, cfg.bath, jobs);

  const std::vector<double> tfs = cfg.cells();
  RunOutput out;
  out.cells.resize(tfs.size());
  std::vector<std::exception_ptr> failures(tfs.size());
  parallel_for(static_cast<int>(tfs.size()), jobs, [&](int i) {
    try {
      out.cells[i] = solve_cell(cfg, tab, tfs[i]);
    } catch (...) {
      failures[i] = std::current_exception();
    }
  });
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  if (write_trajectories) {
    for (std::size_t i = 0; i < out.cells.size(); ++i) {
      char name[48];
      if (out.cells.size() == 1) {
        std::snprintf(name, sizeof(name), "trajectory.csv");
      } else {
        std::snprintf(name, sizeof(name), "trajectory_%03zu.csv", i);
      }
      out.cells[i].trajectory_file = name;
      write_file(out_dir / name, trajectory_csv(out.cells[i].trajectory));
    }
  }

  if (cfg.protocol == Protocol::CdfOnOptimal) {
    std::string csv = "eps,csd_term,accel_psd_term,total\n";
    const auto& rep = out.cells.front().cdf_condition;
    for (std::size_t i = 0; i < rep.eps.size(); ++i) {
      csv += fmt(rep.eps[i]) + "," + fmt(rep.csd_term[i]) + "," + fmt(rep.psd_term[i]) + "," +
             fmt(rep.csd_term[i] + rep.psd_term[i]) + "\n";
    }
    write_file(out_dir / "cdf_condition.csv", csv);
  }

  out.comparison_csv = out_dir / "comparison.csv";
  write_file(out.comparison_csv, comparison_csv(out.cells));
  out.manifest = out_dir / "manifest.json";
  write_file(out.manifest, manifest_json(cfg, tab, out.cells).dump(2) + "\n");
  return out;
}

void dump_kernels(const RunConfig& cfg, const std::filesystem::path& out_dir, int jobs) {
  cfg.validate();
  std::filesystem::create_directories(out_dir);
  const kernels::SpectralTables tab = kernels::build_tables(cfg.trap, cfg.bath, jobs);
  const TimeGrid grid = make_time_grid(cfg.t_f, cfg.n_t);
  const kernels::KernelSet ks = kernels::build_kernels(tab, grid, jobs);

  std::string csv = "t,eta,zeta,phi,phi1\n";
  for (int i = 0; i < grid.size(); ++i) {
    csv += fmt(grid.t[i]) + "," + fmt(ks.eta[i]) + "," + fmt(ks.zeta[i]) + "," +
           fmt(ks.phi[i]) + "," + fmt(ks.phi1[i]) + "\n";
  }
  write_file(out_dir / "kernels.csv", csv);

  std::string mcsv = "eps,k,mu,d_abs_sq,dipole\n";
  for (int ie = 0; ie < tab.n_eps(); ++ie) {
    const double eps = tab.eps_grid.nodes[ie];
    for (int ik = 0; ik < tab.n_k(); ++ik) {
      const double k = tab.k_grid.nodes[ik];
      mcsv += fmt(eps) + "," + fmt(k) + "," + fmt(tab.mu[ie]) + "," +
              fmt(morse::d_abs_sq(tab.structure, eps, k)) + "," + fmt(tab.dipole[ie]) + "\n";
    }
  }
  write_file(out_dir / "matrix_elements.csv", mcsv);

  json m = manifest_json(cfg, tab, {});
  m["kernel_diagnostics"] = {
      {"phi0", ks.phi[0]},
      {"phi1_0", ks.phi1[0]},
      {"eta_sup_norm", [&] {
         double s = 0.0;
         for (double e : ks.eta) s = std::max(s, std::abs(e));
         return s;
       }()},
      {"zeta_mid", ks.zeta[grid.size() / 2]}};
  write_file(out_dir / "manifest.json", m.dump(2) + "\n");
}

}  // namespace acqudit::runner
