#pragma once

#include <string>
#include <vector>

namespace hypexc {

// Hydrogen-like basis label. Valid states satisfy 1 <= n, 0 <= l <= n-1,
// |m| <= l.
struct QuantumNumbers {
  int n = 1;
  int l = 0;
  int m = 0;

  bool operator==(const QuantumNumbers&) const = default;
};

bool is_valid(const QuantumNumbers& qn);

enum class Parity { even, odd };

Parity parity_of(int l);
std::string to_string(Parity p);

// Symmetry block of the anisotropic problem: magnetic quantum number |m|
// and l-parity are conserved, so the Hamiltonian is block diagonal over
// sectors. Only m >= 0 sectors are stored; +-m pairs stay degenerate and
// are reported as a multiplicity-2 flag.
struct Sector {
  int m_abs = 0;
  Parity parity = Parity::even;

  int multiplicity() const { return m_abs > 0 ? 2 : 1; }
  bool operator==(const Sector&) const = default;
};

// Ordered, truncated basis of one sector. Contains every (n, l, m_abs)
// with l of the sector parity, m_abs <= l <= min(n-1, l_max), n <= n_max,
// sorted by ascending (l, n) so that the tridiagonal same-l blocks are
// contiguous.
class SectorBasis {
 public:
  SectorBasis(Sector sector, int n_max, int l_max);

  const Sector& sector() const { return sector_; }
  int n_max() const { return n_max_; }
  int l_max() const { return l_max_; }
  int size() const { return static_cast<int>(states_.size()); }
  const std::vector<QuantumNumbers>& states() const { return states_; }
  const QuantumNumbers& state(int pos) const { return states_.at(pos); }

  // Position of qn in the ordering; throws if qn is not a member.
  int index_of(const QuantumNumbers& qn) const;
  // Like index_of but returns -1 instead of throwing.
  int find(const QuantumNumbers& qn) const;

 private:
  Sector sector_;
  int n_max_;
  int l_max_;
  std::vector<QuantumNumbers> states_;
};

// Complete ordered basis for one sector. Throws std::domain_error for
// truncations that cannot hold any state of the sector (n_max < m_abs+1)
// or l_max < m_abs.
SectorBasis sector_states(const Sector& sector, int n_max, int l_max);

int state_index(const SectorBasis& basis, const QuantumNumbers& qn);

// Effective atomic units and anisotropy parameter built from material
// parameters. Reduced masses are in units of the free electron mass;
// rydberg comes out in eV and bohr_radius in nm, using eps0 = sqrt(eps_perp
// * eps_par).
struct EffectiveUnits {
  double gamma = 1.0;
  double rydberg = 0.0;      // eV
  double bohr_radius = 0.0;  // nm
};

EffectiveUnits gamma_from_materials(double mu_perp, double mu_par,
                                    double eps_perp, double eps_par);

}  // namespace hypexc
