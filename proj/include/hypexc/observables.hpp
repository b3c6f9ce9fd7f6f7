#pragma once

#include <Eigen/Dense>
#include <array>
#include <string>

#include "hypexc/basis.hpp"
#include "hypexc/solver.hpp"

namespace hypexc::observables {

// S^2 = sum_{n,l} C_nlm [ n C_nlm - sqrt((n+l+1)(n-l)) C_{n+1,l,m} ],
// the (1 - cos alpha)-weighted norm of the expansion. Returns S > 0;
// throws on a zero vector.
double normalization_S(const SectorBasis& basis, const Eigen::VectorXd& coeffs);

// Relative oscillator strength f_nu = p^3 |sum_n C_n00 sqrt(n)|^2 / S^2 in
// units of the isotropic ground-state value (f_1S(gamma=1) = 1). Defined
// for the m=0 even sector only.
double oscillator_strength(const SpectrumResult& result, int nu);

// Coordinate-space amplitude phi_nu(r), r in effective Bohr radii:
//   phi_nu(r) = (p^{3/2}/S) sum_s C_s n^2 phi_s^(0)(r p n)
// with standard hydrogen phi^(0) and real spherical harmonics (the cos m phi
// combination for m_abs > 0; only |phi|^2 is contractually meaningful
// there). For gamma > 1 the rescaled-formulation result is converted to
// original units.
double wavefunction(const SpectrumResult& result, int nu,
                    const std::array<double, 3>& r);

// Spherical approximation, keeping only the l-diagonal perturbation:
// E = -1 / (n^2 (1 + eps Q_lm)). Throws when 1 + eps Q_lm <= 0.
double spherical_energy(int n, int l, int m, double epsilon);

// Spherical-approximation oscillator strength (1 + eps/3)^{-3} / n^3.
double spherical_oscillator(int n, double epsilon);

enum class AnalyticLevel { level_1S, level_2S, level_2P0, level_2Ppm };

AnalyticLevel analytic_level_from_string(const std::string& name);

// Second-order perturbation energies of the four lowest levels, e.g.
// E_1S = -[1 + eps/6 + (pi^2/45 - 59/216) eps^2]^{-2}.
double second_order_energy(AnalyticLevel level, double epsilon);

// Ground-state Pade-type estimate E_0 ~ -4 / (1 + gamma^{1/3})^2.
double ground_state_pade(double gamma);

// (E_1S - E_2S) / E_1S, the anisotropy measure; 3/4 in the isotropic limit.
double anisotropy_measure(double e_1s, double e_2s);

}  // namespace hypexc::observables
