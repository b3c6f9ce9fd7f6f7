#include "hypexc/observables.hpp"

#include <cmath>
#include <stdexcept>

namespace hypexc::observables {

namespace {

double assoc_laguerre(int k, int alpha, double x) {
  if (k < 0) return 0.0;
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + alpha - x;
  for (int i = 1; i < k; ++i) {
    const double next = ((2.0 * i + 1.0 + alpha - x) * cur - (i + alpha) * prev) / (i + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

// unit-normalized hydrogen radial function, r in Bohr radii
double hydrogen_radial(int n, int l, double r) {
  const double norm = std::exp(0.5 * (3.0 * std::log(2.0 / n) + std::lgamma(n - l + 0.0) -
                                      std::log(2.0 * n) - std::lgamma(n + l + 1.0)));
  const double x = 2.0 * r / n;
  return norm * std::pow(x, l) * std::exp(-0.5 * x) * assoc_laguerre(n - l - 1, 2 * l + 1, x);
}

// real spherical harmonic (cos m phi combination for m > 0)
double real_harmonic(int l, int m_abs, double cos_theta, double phi) {
  double p = 0.0;
  // P_l^m via the same recurrence the oracle uses, inlined to keep this
  // module self-contained
  {
    double pmm = 1.0;
    const double s = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));
    for (int i = 1; i <= m_abs; ++i) pmm *= (2.0 * i - 1.0) * s;
    if (l == m_abs) {
      p = pmm;
    } else {
      double pm1 = pmm;
      p = (2.0 * m_abs + 1.0) * cos_theta * pmm;
      for (int ll = m_abs + 1; ll < l; ++ll) {
        const double next =
            ((2.0 * ll + 1.0) * cos_theta * p - (ll + m_abs) * pm1) / (ll - m_abs + 1.0);
        pm1 = p;
        p = next;
      }
    }
  }
  const double nlm = std::exp(0.5 * (std::log(2.0 * l + 1.0) - std::log(2.0) +
                                     std::lgamma(l - m_abs + 1.0) - std::lgamma(l + m_abs + 1.0)));
  double y = nlm * p / std::sqrt(2.0 * M_PI);
  if (m_abs > 0) y *= std::sqrt(2.0) * std::cos(m_abs * phi);
  return y;
}

}  // namespace

double normalization_S(const SectorBasis& basis, const Eigen::VectorXd& coeffs) {
  if (coeffs.size() != basis.size())
    throw std::invalid_argument("normalization_S: coefficient vector does not match basis");
  if (coeffs.squaredNorm() == 0.0)
    throw std::domain_error("normalization_S: zero coefficient vector");
  double s2 = 0.0;
  for (int i = 0; i < basis.size(); ++i) {
    const auto& qn = basis.state(i);
    const int up = basis.find({qn.n + 1, qn.l, qn.m});
    const double c_up = up >= 0 ? coeffs(up) : 0.0;
    s2 += coeffs(i) * (qn.n * coeffs(i) -
                       std::sqrt(double(qn.n + qn.l + 1) * (qn.n - qn.l)) * c_up);
  }
  return std::sqrt(s2);
}

double oscillator_strength(const SpectrumResult& result, int nu) {
  if (result.sector.m_abs != 0 || result.sector.parity != Parity::even)
    throw std::domain_error("oscillator_strength: defined for the m=0 even sector only");
  if (nu < 0 || nu >= result.size())
    throw std::out_of_range("oscillator_strength: state index out of range");
  const bool elongated = result.gamma > 1.0;
  const double lambda_aux =
      elongated ? result.lambdas[nu] / std::sqrt(result.gamma) : result.lambdas[nu];
  double amp = 0.0;
  for (int i = 0; i < result.basis.size(); ++i)
    if (result.basis.state(i).l == 0)
      amp += result.coefficients(i, nu) * std::sqrt(double(result.basis.state(i).n));
  const double s = result.s_norms[nu];
  const double p = 1.0 / lambda_aux;
  double f = p * p * p * amp * amp / (s * s);
  // |phi(0)|^2 of the rescaled formulation converts to original units by
  // gamma^{-3}; validated through continuity at the gamma = 1 seam
  if (elongated) f /= result.gamma * result.gamma * result.gamma;
  return f;
}

double wavefunction(const SpectrumResult& result, int nu,
                    const std::array<double, 3>& r) {
  if (nu < 0 || nu >= result.size())
    throw std::out_of_range("wavefunction: state index out of range");
  const bool elongated = result.gamma > 1.0;
  const double arg_scale = elongated ? 1.0 / result.gamma : 1.0;
  const double amp_scale = elongated ? std::pow(result.gamma, -1.5) : 1.0;
  const double lambda_aux =
      elongated ? result.lambdas[nu] / std::sqrt(result.gamma) : result.lambdas[nu];
  const double p = 1.0 / lambda_aux;

  const double x = r[0] * arg_scale, y = r[1] * arg_scale, z = r[2] * arg_scale;
  const double rho = std::sqrt(x * x + y * y + z * z);
  const double cos_theta = rho > 0.0 ? z / rho : 1.0;
  const double phi = std::atan2(y, x);

  double sum = 0.0;
  for (int i = 0; i < result.basis.size(); ++i) {
    const auto& qn = result.basis.state(i);
    const double c = result.coefficients(i, nu);
    if (c == 0.0) continue;
    sum += c * qn.n * qn.n * hydrogen_radial(qn.n, qn.l, p * qn.n * rho) *
           real_harmonic(qn.l, result.sector.m_abs, cos_theta, phi);
  }
  return amp_scale * std::pow(p, 1.5) * sum / result.s_norms[nu];
}

double spherical_energy(int n, int l, int m, double epsilon) {
  if (!is_valid({n, l, m}))
    throw std::domain_error("spherical_energy: invalid quantum numbers");
  const double denom = 1.0 + epsilon * elements::q_angular(l, m);
  if (denom <= 0.0)
    throw std::domain_error("spherical_energy: approximation breaks down (1 + eps Q <= 0)");
  return -1.0 / (double(n) * n * denom);
}

double spherical_oscillator(int n, double epsilon) {
  if (n < 1) throw std::domain_error("spherical_oscillator: n must be >= 1");
  const double denom = 1.0 + epsilon / 3.0;
  if (denom <= 0.0)
    throw std::domain_error("spherical_oscillator: approximation breaks down (1 + eps/3 <= 0)");
  return 1.0 / (denom * denom * denom * double(n) * n * n);
}

AnalyticLevel analytic_level_from_string(const std::string& name) {
  if (name == "1S") return AnalyticLevel::level_1S;
  if (name == "2S") return AnalyticLevel::level_2S;
  if (name == "2P0") return AnalyticLevel::level_2P0;
  if (name == "2Ppm") return AnalyticLevel::level_2Ppm;
  throw std::domain_error("analytic_level_from_string: unknown level '" + name + "'");
}

double second_order_energy(AnalyticLevel level, double epsilon) {
  const double pi2 = M_PI * M_PI;
  double n2, c1, c2;
  switch (level) {
    case AnalyticLevel::level_1S:
      n2 = 1.0, c1 = 1.0 / 6.0, c2 = pi2 / 45.0 - 59.0 / 216.0;
      break;
    case AnalyticLevel::level_2S:
      n2 = 4.0, c1 = 1.0 / 6.0, c2 = -4.0 * pi2 / 45.0 + 173.0 / 216.0;
      break;
    case AnalyticLevel::level_2P0:
      n2 = 4.0, c1 = 3.0 / 10.0, c2 = 4.0 * pi2 / 35.0 - 25441.0 / 21000.0;
      break;
    case AnalyticLevel::level_2Ppm:
      n2 = 4.0, c1 = 1.0 / 10.0, c2 = 8.0 * pi2 / 105.0 - 49307.0 / 63000.0;
      break;
    default:
      throw std::domain_error("second_order_energy: unknown level");
  }
  const double bracket = 1.0 + c1 * epsilon + c2 * epsilon * epsilon;
  return -1.0 / (n2 * bracket * bracket);
}

double ground_state_pade(double gamma) {
  if (!(gamma > 0.0)) throw std::domain_error("ground_state_pade: gamma must be positive");
  const double t = 1.0 + std::cbrt(gamma);
  return -4.0 / (t * t);
}

double anisotropy_measure(double e_1s, double e_2s) {
  if (!(e_1s <= e_2s) || !(e_2s < 0.0))
    throw std::domain_error("anisotropy_measure: need E_1S <= E_2S < 0");
  return (e_1s - e_2s) / e_1s;
}

}  // namespace hypexc::observables
