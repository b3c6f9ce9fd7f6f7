#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "hypexc/basis.hpp"

namespace hypexc::oracle {

// Fixed-order Gaussian rule on (-1,1). Jacobi rules are built by
// Golub-Welsch from the monic three-term recurrence, so a rule whose
// (1-x)^alpha (1+x)^beta exponents match the integrand weight integrates
// the remaining polynomial factor exactly (up to degree 2*order-1).
struct QuadratureRule {
  enum class Kind { legendre, jacobi };

  Kind kind = Kind::legendre;
  double alpha = 0.0;
  double beta = 0.0;
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;

  static QuadratureRule gauss_legendre(int order);
  static QuadratureRule gauss_jacobi(int order, double alpha, double beta);

  // Integral of the plain weight function over (-1,1).
  double weight_integral() const;

  template <class F>
  double integrate(F&& f) const {
    double acc = 0.0;
    for (int i = 0; i < nodes.size(); ++i) acc += weights(i) * f(nodes(i));
    return acc;
  }
};

// Gegenbauer polynomial C_k^nu(x) by the three-term recurrence.
double gegenbauer(int k, double nu, double x);

// Associated Legendre P_l^m(x), m >= 0, no Condon-Shortley phase, by
// stable upward recurrence in l.
double assoc_legendre(int l, int m, double x);

// N_lm such that the x-integral of (N_lm P_l^m)^2 over (-1,1) is 1.
double legendre_normalization(int l, int m);

// Polar-angle integral of the perturbation: N_lm N_l2m Int P_l^m P_l2^m x^2 dx,
// by Gauss-Legendre quadrature. Vanishes when l + l2 is odd.
double angular_integral_J(int l, int l2, int m, int order = 0);

// Hyperangle integral between radial-hyperspherical factors of states
// (n,l) and (n2,l2), l2 in {l, l-2}, including the sqrt(n n2)-free
// normalizations. Evaluated with a Gauss-Jacobi rule whose exponents match
// the weight exactly. The (-2i)^l phases of the basis are absorbed as
// (-1)^floor(l/2) 2^l so that all values are real and the Delta-l = 2
// blocks carry the sign of the closed forms.
double hyper_integral_I(int n, int n2, int l, int l2, int order = 0);

// Full perturbation matrix element sqrt(n n2) * J * I between two states
// sharing m. Any same-parity pair is accepted; the angular factor kills
// |l - l2| >= 4 so the selection rules are checked by quadrature rather
// than asserted.
double v_element_oracle(const QuantumNumbers& s, const QuantumNumbers& s2,
                        int order = 0);

// Overlap of states (n,l,m) and (n2,l,m) under the weight (1 - cos alpha);
// the quadrature side of the S_nu normalization identity.
double overlap_one_minus_cos(int n, int n2, int l, int order = 0);

// Expectation of cos alpha in state (n,l,m); identically zero.
double cos_alpha_expectation(int n, int l, int order = 0);

struct VerifyFailure {
  QuantumNumbers bra;
  QuantumNumbers ket;
  double closed_form = 0.0;
  double quadrature = 0.0;
};

struct VerifyReport {
  int n_max = 0;
  int l_max = 0;
  double tol = 0.0;
  long element_count = 0;
  double max_dev = 0.0;
  QuantumNumbers worst_bra;
  QuantumNumbers worst_ket;
  std::vector<VerifyFailure> failures;
  double norm_max_dev = 0.0;      // Int (1-cos a)|Psi|^2 = 1
  double footnote_max_dev = 0.0;  // Int cos a |Psi|^2 = 0
  bool passed() const { return failures.empty(); }
};

// Exhaustive comparison of the closed-form matrix elements against the
// quadrature values for every valid pair with n, n2 <= n_max and
// l, l2 <= l_max, plus the normalization and cos-alpha identities.
// inject_dev is a test hook that offsets one closed-form value to prove
// the comparator can fail.
VerifyReport verify_closed_forms(int n_max, int l_max, double tol,
                                 double inject_dev = 0.0);

}  // namespace hypexc::oracle
