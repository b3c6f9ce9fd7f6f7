#include "hypexc/basis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace hypexc {

bool is_valid(const QuantumNumbers& qn) {
  return qn.n >= 1 && qn.l >= 0 && qn.l <= qn.n - 1 && std::abs(qn.m) <= qn.l;
}

Parity parity_of(int l) { return l % 2 == 0 ? Parity::even : Parity::odd; }

std::string to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

SectorBasis::SectorBasis(Sector sector, int n_max, int l_max)
    : sector_(sector), n_max_(n_max), l_max_(l_max) {
  int l0 = sector.m_abs;
  if (parity_of(l0) != sector.parity) ++l0;
  for (int l = l0; l <= l_max; l += 2)
    for (int n = l + 1; n <= n_max; ++n)
      states_.push_back({n, l, sector.m_abs});
}

int SectorBasis::find(const QuantumNumbers& qn) const {
  if (qn.m != sector_.m_abs || qn.l > l_max_ || qn.n > n_max_ ||
      !is_valid(qn) || parity_of(qn.l) != sector_.parity)
    return -1;
  auto it = std::lower_bound(states_.begin(), states_.end(), qn,
                             [](const QuantumNumbers& a, const QuantumNumbers& b) {
                               return a.l != b.l ? a.l < b.l : a.n < b.n;
                             });
  if (it == states_.end() || !(*it == qn)) return -1;
  return static_cast<int>(it - states_.begin());
}

int SectorBasis::index_of(const QuantumNumbers& qn) const {
  int pos = find(qn);
  if (pos < 0)
    throw std::out_of_range("SectorBasis: state (" + std::to_string(qn.n) +
                            "," + std::to_string(qn.l) + "," +
                            std::to_string(qn.m) + ") is not in the basis");
  return pos;
}

SectorBasis sector_states(const Sector& sector, int n_max, int l_max) {
  if (sector.m_abs < 0) throw std::domain_error("sector_states: m_abs must be >= 0");
  if (n_max < 1 || l_max < 0) throw std::domain_error("sector_states: empty truncation");
  if (n_max < sector.m_abs + 1)
    throw std::domain_error("sector_states: n_max < m_abs+1 leaves an empty basis");
  if (l_max < sector.m_abs)
    throw std::domain_error("sector_states: l_max < m_abs leaves an empty basis");
  return SectorBasis(sector, n_max, l_max);
}

int state_index(const SectorBasis& basis, const QuantumNumbers& qn) {
  return basis.index_of(qn);
}

EffectiveUnits gamma_from_materials(double mu_perp, double mu_par,
                                    double eps_perp, double eps_par) {
  if (mu_perp <= 0 || mu_par <= 0 || eps_perp <= 0 || eps_par <= 0)
    throw std::domain_error("gamma_from_materials: parameters must be positive");
  constexpr double rydberg_ev = 13.605693122990;
  constexpr double bohr_nm = 0.052917721067;
  const double eps0 = std::sqrt(eps_perp * eps_par);
  EffectiveUnits u;
  u.gamma = (eps_perp * mu_perp) / (eps_par * mu_par);
  u.rydberg = rydberg_ev * mu_perp / (eps0 * eps0);
  u.bohr_radius = bohr_nm * eps0 / mu_perp;
  return u;
}

}  // namespace hypexc
