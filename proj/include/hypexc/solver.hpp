#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "hypexc/basis.hpp"
#include "hypexc/elements.hpp"

namespace hypexc {

// Eigen-solution of one sector at one anisotropy. Eigenvalues lambda_nu
// are ascending and relate to energies by E_nu = -1/lambda_nu^2 (effective
// rydbergs). For gamma > 1 the problem is solved in the rescaled
// (xy-perturbation) formulation: coefficients and s_norms then refer to
// the rescaled basis, while lambdas, energies and oscillator_strengths are
// already converted to the original units.
struct SpectrumResult {
  Sector sector;
  double gamma = 1.0;
  SectorBasis basis;
  std::vector<double> lambdas;
  std::vector<double> energies;
  Eigen::MatrixXd coefficients;  // column nu = eigenvector over basis positions
  std::vector<double> s_norms;
  std::vector<double> oscillator_strengths;  // zero unless m=0 even sector
  std::vector<std::string> labels;
  int n_max_used = 0;
  int l_max_used = 0;
  bool converged = true;
  int dropped_nonpositive = 0;  // truncation artifacts with lambda <= 0

  int size() const { return static_cast<int>(lambdas.size()); }
};

// Elongated (gamma > 1) reformulation: the xy-plane perturbation problem
// is solved with epsilon_tilde = 1/gamma - 1, and rescaled-unit energies
// convert back as E = E_tilde * energy_scale with energy_scale = 1/gamma
// (equivalently lambda = sqrt(gamma) * lambda_tilde).
struct ElongatedReduction {
  double epsilon_tilde = 0.0;
  double energy_scale = 1.0;
};

ElongatedReduction reduce_elongated(double gamma);

// Spectroscopic label, e.g. (3,2,0) -> "3D0", (2,1,1) -> "2Ppm", (1,0,0) -> "1S".
std::string spectroscopic_label(int n, int l, int m_abs);

// Ordered label sequence of the sector at the labeling anchor gamma =
// 1 -/+ 1e-6 (states split off a degenerate multiplet keep fixed
// combinations as the perturbation tends to zero, so labels are assigned
// there and carried along gamma by the no-crossing property). Within a
// multiplet of the m=0 even sector the larger oscillator strength gets the
// lower-l letter (S before D0 before G0); other sectors pair ascending
// eigenvalue with ascending l.
std::vector<std::string> anchor_label_sequence(const SectorBasis& basis,
                                               bool from_above, int count);

// Diagonalize one sector at fixed truncation and keep the k_states lowest
// bound states (lambda > 0). gamma <= 1 uses the z-axis perturbation with
// epsilon = gamma - 1; gamma > 1 goes through reduce_elongated.
SpectrumResult solve_sector(const Sector& sector, double gamma, int n_max,
                            int l_max, int k_states);

struct ConvergeOptions {
  int l_max_cap = 8;
  std::vector<int> schedule = {6, 9, 12, 15, 20, 26, 34};
};

// Walk the truncation schedule until the k_states lowest energies move by
// less than rel_tol relatively between successive truncations. Hitting the
// schedule cap first is reported as converged = false, not an error.
SpectrumResult solve_converged(const Sector& sector, double gamma,
                               double rel_tol, int k_states,
                               const ConvergeOptions& options = {});

struct LevelTrajectory {
  std::string label;
  std::vector<double> gammas;
  std::vector<double> lambdas;
  std::vector<double> energies;
  std::vector<double> oscillator_strengths;
};

struct ContinuityDefect {
  int grid_step = 0;   // between points grid_step and grid_step+1
  int state = 0;
  int matched_state = 0;
  double overlap = 0.0;
};

struct ContinuityReport {
  double min_overlap = 1.0;
  bool order_preserved = true;  // overlap matching is the identity at every step
  std::vector<ContinuityDefect> defects;
};

struct SweepResult {
  std::vector<double> gamma_grid;
  std::vector<SpectrumResult> points;
  std::vector<LevelTrajectory> trajectories;
  ContinuityReport continuity;
};

// Connect labeled levels across an ascending-gamma sweep of one sector.
// States are continued point to point by maximal eigenvector overlap
// (computed over the common basis states when truncations differ); ties
// break toward the lower index. Matches with overlap below 0.5, or that
// deviate from the identity, are recorded as refinement-needed defects.
SweepResult track_levels(std::vector<SpectrumResult> sweep);

}  // namespace hypexc
