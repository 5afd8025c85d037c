#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "acqudit/bath.hpp"
#include "acqudit/fidelity.hpp"
#include "acqudit/grid.hpp"
#include "acqudit/kernels.hpp"
#include "acqudit/morse.hpp"
#include "acqudit/solvers.hpp"

namespace acqudit::runner {

enum class Protocol {
  AcquditLinear,
  AcquditPicard,
  Dissipationless,
  ConstantSpeed,
  CdfOnOptimal,
};

std::string protocol_name(Protocol p);
Protocol protocol_from_name(const std::string& name);

// Boundary data in user units (speeds in multiples of the sound speed c).
struct BoundarySpec {
  double v0_over_c = 0.0;
  std::optional<double> vf_over_c;
  std::optional<double> v_bar_over_c;  // constant-speed protocol
  std::optional<double> xf;            // position BC, units of xi
};

struct RunConfig {
  morse::TrapSpec trap;
  bath::BathSpec bath;
  double t_f = 1.0;
  int n_t = 200;
  solvers::SolverSettings solver;
  Protocol protocol = Protocol::AcquditLinear;
  BoundarySpec bc;
  std::vector<double> sweep;  // optional list of t_f values

  void validate() const;
  std::vector<double> cells() const;  // sweep values, or {t_f}
};

RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::filesystem::path& path);
std::string canonical_config(const RunConfig& cfg);

// One sweep cell: solved trajectory plus the three protocol fidelities and
// solver diagnostics.
struct CellResult {
  double t_f = 0.0;
  Trajectory trajectory;
  fidelity::TransportResult optimal;
  fidelity::TransportResult constant;
  fidelity::TransportResult cdf;
  fidelity::CdfConditionReport cdf_condition;
  solvers::NeumannReport neumann;
  solvers::PicardReport picard;
  std::string trajectory_file;
};

struct RunOutput {
  std::vector<CellResult> cells;
  std::filesystem::path comparison_csv;
  std::filesystem::path manifest;
};

// Executes the configured protocol for every sweep cell and writes
// trajectory CSVs, the comparison CSV and a manifest under out_dir.
// write_trajectories=false suppresses the per-cell trajectory files
// (the `compare` subcommand).
RunOutput run(const RunConfig& cfg, const std::filesystem::path& out_dir, int jobs = 1,
              bool write_trajectories = true);

// Kernel/matrix-element inspection dump (`kernels` subcommand): writes
// kernels.csv (t, eta, zeta, phi, phi1) and matrix_elements.csv
// (eps, k, mu, d_abs_sq, dipole).
void dump_kernels(const RunConfig& cfg, const std::filesystem::path& out_dir, int jobs = 1);

// Solves one cell in memory (shared by run() and the test-suites).
CellResult solve_cell(const RunConfig& cfg, const kernels::SpectralTables& tab, double t_f);

// 64-bit FNV-1a content hash used to fingerprint configs in manifests.
std::string content_hash(const std::string& text);

}  // namespace acqudit::runner
