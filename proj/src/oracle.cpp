#include "hypexc/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "hypexc/elements.hpp"

namespace hypexc::oracle {

namespace {

// log of the real-convention normalization 2^l l! sqrt(2n (n-l-1)! / (pi (n+l)!))
double log_hyper_norm(int n, int l) {
  return l * std::log(2.0) + std::lgamma(l + 1.0) +
         0.5 * (std::log(2.0 * n) - std::log(M_PI) + std::lgamma(n - l + 0.0) -
                std::lgamma(n + l + 1.0));
}

// sign absorbing the (-2i)^l basis phase
int phase(int l) { return (l / 2) % 2 == 0 ? 1 : -1; }

void require_state(int n, int l) {
  if (n < 1 || l < 0 || l > n - 1)
    throw std::domain_error("oracle: invalid quantum numbers (n=" +
                            std::to_string(n) + ", l=" + std::to_string(l) + ")");
}

// hyperangle integral for any same-parity pair; weight
// (1-x)^{(l+l2+1)/2} (1+x)^{(l+l2+3)/2}, remaining factor a polynomial
double hyper_integral_any(int n, int n2, int l, int l2, int order) {
  require_state(n, l);
  require_state(n2, l2);
  if (order <= 0) order = n + n2 + 8;
  const double a = 0.5 * (l + l2 + 1);
  const double b = 0.5 * (l + l2 + 3);
  const auto rule = QuadratureRule::gauss_jacobi(order, a, b);
  const double poly = rule.integrate([&](double x) {
    return gegenbauer(n - l - 1, l + 1.0, x) * gegenbauer(n2 - l2 - 1, l2 + 1.0, x);
  });
  return phase(l) * phase(l2) * std::exp(log_hyper_norm(n, l) + log_hyper_norm(n2, l2)) * poly;
}

}  // namespace

QuadratureRule QuadratureRule::gauss_jacobi(int order, double alpha, double beta) {
  if (order < 1) throw std::domain_error("gauss_jacobi: order must be >= 1");
  if (alpha <= -1.0 || beta <= -1.0)
    throw std::domain_error("gauss_jacobi: exponents must exceed -1");

  // Golub-Welsch: recurrence coefficients of the monic Jacobi polynomials
  const double ab = alpha + beta;
  Eigen::VectorXd diag(order), sub(std::max(order - 1, 0));
  diag(0) = (beta - alpha) / (ab + 2.0);
  for (int k = 1; k < order; ++k) {
    const double den = (2.0 * k + ab) * (2.0 * k + ab + 2.0);
    diag(k) = (beta * beta - alpha * alpha) / den;
    double b2;
    if (k == 1)
      b2 = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
    else
      b2 = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) /
           ((2.0 * k + ab) * (2.0 * k + ab) * (2.0 * k + ab + 1.0) * (2.0 * k + ab - 1.0));
    sub(k - 1) = std::sqrt(b2);
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("gauss_jacobi: tridiagonal eigensolve failed");

  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                              std::lgamma(beta + 1.0) - std::lgamma(ab + 2.0));
  QuadratureRule rule;
  rule.kind = Kind::jacobi;
  rule.alpha = alpha;
  rule.beta = beta;
  rule.nodes = es.eigenvalues();
  rule.weights = mu0 * es.eigenvectors().row(0).array().square();
  return rule;
}

QuadratureRule QuadratureRule::gauss_legendre(int order) {
  auto rule = gauss_jacobi(order, 0.0, 0.0);
  rule.kind = Kind::legendre;
  return rule;
}

double QuadratureRule::weight_integral() const {
  return std::exp((alpha + beta + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                  std::lgamma(beta + 1.0) - std::lgamma(alpha + beta + 2.0));
}

double gegenbauer(int k, double nu, double x) {
  if (k < 0) return 0.0;
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * nu * x;
  for (int a = 1; a < k; ++a) {
    const double next = (2.0 * (nu + a) * x * cur - (2.0 * nu + a - 1.0) * prev) / (a + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double assoc_legendre(int l, int m, double x) {
  if (m < 0 || m > l) throw std::domain_error("assoc_legendre: need 0 <= m <= l");
  if (std::abs(x) > 1.0) throw std::domain_error("assoc_legendre: |x| must be <= 1");
  // P_m^m = (2m-1)!! (1-x^2)^{m/2}
  double pmm = 1.0;
  const double s = std::sqrt((1.0 - x) * (1.0 + x));
  for (int i = 1; i <= m; ++i) pmm *= (2.0 * i - 1.0) * s;
  if (l == m) return pmm;
  double pm1 = pmm;
  double p = (2.0 * m + 1.0) * x * pmm;  // P_{m+1}^m
  for (int ll = m + 1; ll < l; ++ll) {
    const double next = ((2.0 * ll + 1.0) * x * p - (ll + m) * pm1) / (ll - m + 1.0);
    pm1 = p;
    p = next;
  }
  return p;
}

double legendre_normalization(int l, int m) {
  const int ma = std::abs(m);
  return std::exp(0.5 * (std::log(2.0 * l + 1.0) - std::log(2.0) +
                         std::lgamma(l - ma + 1.0) - std::lgamma(l + ma + 1.0)));
}

double angular_integral_J(int l, int l2, int m, int order) {
  const int ma = std::abs(m);
  if (ma > l || ma > l2)
    throw std::domain_error("angular_integral_J: need |m| <= min(l, l2)");
  if (order <= 0) order = l + l2 + 8;
  const auto rule = QuadratureRule::gauss_legendre(order);
  const double norm = legendre_normalization(l, ma) * legendre_normalization(l2, ma);
  return norm * rule.integrate([&](double x) {
    return assoc_legendre(l, ma, x) * assoc_legendre(l2, ma, x) * x * x;
  });
}

double hyper_integral_I(int n, int n2, int l, int l2, int order) {
  if (l2 != l && l2 != l - 2)
    throw std::domain_error("hyper_integral_I: l2 must be l or l-2");
  return hyper_integral_any(n, n2, l, l2, order);
}

double v_element_oracle(const QuantumNumbers& s, const QuantumNumbers& s2, int order) {
  if (s.m != s2.m)
    throw std::domain_error("v_element_oracle: states must share m");
  if (!is_valid(s) || !is_valid(s2))
    throw std::domain_error("v_element_oracle: invalid quantum numbers");
  if ((s.l + s2.l) % 2 != 0) return 0.0;  // J vanishes by parity
  return std::sqrt(double(s.n) * s2.n) * angular_integral_J(s.l, s2.l, s.m, order) *
         hyper_integral_any(s.n, s2.n, s.l, s2.l, order);
}

double overlap_one_minus_cos(int n, int n2, int l, int order) {
  require_state(n, l);
  require_state(n2, l);
  if (order <= 0) order = n + n2 + 8;
  const auto rule = QuadratureRule::gauss_jacobi(order, l + 0.5, l + 0.5);
  const double poly = rule.integrate([&](double x) {
    return (1.0 - x) * gegenbauer(n - l - 1, l + 1.0, x) * gegenbauer(n2 - l - 1, l + 1.0, x);
  });
  return std::exp(log_hyper_norm(n, l) + log_hyper_norm(n2, l)) * poly;
}

double cos_alpha_expectation(int n, int l, int order) {
  require_state(n, l);
  if (order <= 0) order = 2 * n + 8;
  const auto rule = QuadratureRule::gauss_jacobi(order, l + 0.5, l + 0.5);
  const double poly = rule.integrate([&](double x) {
    const double c = gegenbauer(n - l - 1, l + 1.0, x);
    return x * c * c;
  });
  return std::exp(2.0 * log_hyper_norm(n, l)) * poly;
}

VerifyReport verify_closed_forms(int n_max, int l_max, double tol, double inject_dev) {
  if (tol <= 0) throw std::domain_error("verify_closed_forms: tol must be positive");
  VerifyReport report;
  report.n_max = n_max;
  report.l_max = l_max;
  report.tol = tol;

  bool injected = false;
  for (int m = 0; m <= l_max; ++m) {
    for (int l = m; l <= l_max; ++l) {
      for (int l2 = m; l2 <= l_max; ++l2) {
        for (int n = l + 1; n <= n_max; ++n) {
          for (int n2 = l2 + 1; n2 <= n_max; ++n2) {
            const QuantumNumbers a{n, l, m}, b{n2, l2, m};
            double closed = elements::v_element(a, b);
            if (!injected && inject_dev != 0.0) {
              closed += inject_dev;
              injected = true;
            }
            const double quad = v_element_oracle(a, b);
            const double dev = std::abs(closed - quad);
            ++report.element_count;
            if (dev > report.max_dev) {
              report.max_dev = dev;
              report.worst_bra = a;
              report.worst_ket = b;
            }
            if (dev > tol) report.failures.push_back({a, b, closed, quad});
          }
        }
      }
    }
  }

  // normalization and cos-alpha identities over the same grid
  for (int l = 0; l <= l_max; ++l) {
    for (int n = l + 1; n <= n_max; ++n) {
      report.norm_max_dev =
          std::max(report.norm_max_dev, std::abs(overlap_one_minus_cos(n, n, l) - 1.0));
      report.footnote_max_dev =
          std::max(report.footnote_max_dev, std::abs(cos_alpha_expectation(n, l)));
    }
  }
  return report;
}

}  // namespace hypexc::oracle
