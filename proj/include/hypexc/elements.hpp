#pragma once

#include <Eigen/Dense>

#include "hypexc/basis.hpp"

namespace hypexc::elements {

// Which kinetic-energy component is treated as the perturbation. z_axis is
// the native formulation for flattened problems (epsilon = gamma - 1); the
// xy_plane variant backs the elongated (gamma > 1) reformulation, where
// (u_x^2 + u_y^2)/(1 - u_n) = (1 + cos a)(1 - cos^2 t) so the matrix is
// T - V with T the hyperangle-only operator.
enum class PerturbationAxis { z_axis, xy_plane };

// Angular average of cos^2 theta over Y_lm:
//   Q_lm = 1/2 + (1 - 4 m^2) / (2 (2l-1)(2l+3)),   0 < Q_lm < 1.
double q_angular(int l, int m);

// Same-l perturbation element between (n,l,m) and (n2,l,m):
//   Q_lm { n d(n,n2) + (1/2) sqrt((n-l)(n+l+1)) d(n+1,n2)
//                    + (1/2) sqrt((n-l-1)(n+l)) d(n-1,n2) }.
// Zero for |n - n2| >= 2, symmetric in n <-> n2.
double v_same_l(int n, int n2, int l, int m);

// l-lowering element between (n,l,m) and (n2,l-2,m), l >= 2:
//
//   sqrt( (l^2-m^2)((l-1)^2-m^2) / ((2l+1)(2l-3)) )
//     * 2 n n2 sqrt( (n-l-1)! (n2+l-2)! / ((n+l)! (n2-l+1)!) ) * F
//
//              | -1                                             n2 <= n-2
//   F =        | (n-l)/(2n(2l-1)) * (n^2-4nl-l^2+n+3l-2)/(2(n-1))  n2 = n-1
//              | (n-l)/(2n(2l-1)) * (n-l+1)                        n2 = n
//              | (n-l)/(2n(2l-1)) * (n-l+1)(n-l+2)/(2(n+1))        n2 = n+1
//              | 0                                              n2 >= n+2
//
// The (n-l)/(2n(2l-1)) factor multiplies only the three middle branches;
// the -1 branch stands alone and no residual 1/(2l-1) enters the prefactor.
// This placement is the one the quadrature oracle confirms (see
// tests/test_elements.cpp and the verify subcommand).
// Returns 0 when |m| > l-2 (the angular prefactor vanishes). Factorial
// ratios go through lgamma, so large n is safe.
double v_lower_l(int n, int n2, int l, int m);

// Matrix of the hyperangle operator (1 + cos a) within fixed (l, m),
// scaled by sqrt(n n2): the brace of v_same_l without the angular factor.
double t_hyper(int n, int n2, int l);

// Closed-form element between two states sharing m, dispatching on
// l2 - l in {0, -2, +2}; zero otherwise. The (l, l+2) value is the
// transpose of the printed (l, l-2) form.
double v_element(const QuantumNumbers& s, const QuantumNumbers& s2);

struct HamiltonianMatrix {
  Sector sector;
  double epsilon = 0.0;
  PerturbationAxis mode = PerturbationAxis::z_axis;
  Eigen::MatrixXd entries;
};

// Effective Hamiltonian over the sector basis:
//   z_axis:   diag(n) + (epsilon/2) V
//   xy_plane: diag(n) + (epsilon/2) (T - V)
// A symmetry defect above 1e-10 raises an internal-consistency error.
HamiltonianMatrix assemble(const SectorBasis& basis, double epsilon,
                           PerturbationAxis mode);

}  // namespace hypexc::elements
