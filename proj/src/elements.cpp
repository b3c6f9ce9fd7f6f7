#include "hypexc/elements.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace hypexc::elements {

namespace {

void require_valid(int n, int l, int m, const char* where) {
  if (!is_valid({n, l, m}))
    throw std::domain_error(std::string(where) + ": invalid quantum numbers (n=" +
                            std::to_string(n) + ", l=" + std::to_string(l) +
                            ", m=" + std::to_string(m) + ")");
}

}  // namespace

double q_angular(int l, int m) {
  if (l < 0 || std::abs(m) > l) throw std::domain_error("q_angular: need |m| <= l");
  return 0.5 + (1.0 - 4.0 * m * m) / (2.0 * (2.0 * l - 1.0) * (2.0 * l + 3.0));
}

double t_hyper(int n, int n2, int l) {
  require_valid(n, l, 0, "t_hyper");
  require_valid(n2, l, 0, "t_hyper");
  if (n2 == n) return n;
  if (n2 == n + 1) return 0.5 * std::sqrt(double(n - l) * (n + l + 1));
  if (n2 == n - 1) return 0.5 * std::sqrt(double(n - l - 1) * (n + l));
  return 0.0;
}

double v_same_l(int n, int n2, int l, int m) {
  require_valid(n, l, m, "v_same_l");
  require_valid(n2, l, m, "v_same_l");
  if (std::abs(n - n2) >= 2) return 0.0;
  return q_angular(l, m) * t_hyper(n, n2, l);
}

double v_lower_l(int n, int n2, int l, int m) {
  if (l < 2) throw std::domain_error("v_lower_l: need l >= 2");
  if (std::abs(m) > l - 2) return 0.0;  // angular factor contains (l-1)^2 - m^2 or l^2 - m^2
  require_valid(n, l, m, "v_lower_l");
  require_valid(n2, l - 2, m, "v_lower_l");
  if (n2 >= n + 2) return 0.0;

  const double angular = std::sqrt((double(l) * l - double(m) * m) *
                                   (double(l - 1) * (l - 1) - double(m) * m) /
                                   ((2.0 * l + 1.0) * (2.0 * l - 3.0)));
  const double fact = std::exp(0.5 * (std::lgamma(n - l + 0.0) + std::lgamma(n2 + l - 1.0) -
                                      std::lgamma(n + l + 1.0) - std::lgamma(n2 - l + 2.0)));
  double branch;
  if (n2 <= n - 2) {
    branch = -1.0;
  } else {
    const double pre = double(n - l) / (2.0 * n * (2.0 * l - 1.0));
    if (n2 == n - 1)
      branch = pre * (double(n) * n - 4.0 * n * l - double(l) * l + n + 3.0 * l - 2.0) /
               (2.0 * (n - 1.0));
    else if (n2 == n)
      branch = pre * (n - l + 1.0);
    else  // n2 == n + 1
      branch = pre * (n - l + 1.0) * (n - l + 2.0) / (2.0 * (n + 1.0));
  }
  return angular * 2.0 * n * n2 * fact * branch;
}

double v_element(const QuantumNumbers& s, const QuantumNumbers& s2) {
  if (s.m != s2.m) throw std::domain_error("v_element: states must share m");
  if (s2.l == s.l) return v_same_l(s.n, s2.n, s.l, s.m);
  if (s2.l == s.l - 2) return v_lower_l(s.n, s2.n, s.l, s.m);
  if (s2.l == s.l + 2) return v_lower_l(s2.n, s.n, s2.l, s.m);
  return 0.0;
}

HamiltonianMatrix assemble(const SectorBasis& basis, double epsilon,
                           PerturbationAxis mode) {
  if (basis.size() == 0) throw std::invalid_argument("assemble: empty basis");
  const int dim = basis.size();
  Eigen::MatrixXd matrix(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const auto& a = basis.state(i);
    for (int j = 0; j < dim; ++j) {
      const auto& b = basis.state(j);
      double entry = 0.5 * epsilon * v_element(a, b);
      if (mode == PerturbationAxis::xy_plane)
        entry = (a.l == b.l ? 0.5 * epsilon * t_hyper(a.n, b.n, a.l) : 0.0) - entry;
      if (i == j) entry += a.n;
      matrix(i, j) = entry;
    }
  }
  const double defect = (matrix - matrix.transpose()).cwiseAbs().maxCoeff();
  if (defect > 1e-10)
    throw std::logic_error("assemble: symmetry defect " + std::to_string(defect));
  return {basis.sector(), epsilon, mode, std::move(matrix)};
}

}  // namespace hypexc::elements
