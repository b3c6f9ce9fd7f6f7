#include "hypexc/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "hypexc/observables.hpp"

namespace hypexc {

namespace {

constexpr double kAnchorDelta = 1e-6;

struct EigenPairs {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

EigenPairs diagonalize(const Eigen::MatrixXd& matrix) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(matrix);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("solver: dense symmetric eigensolve failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

double l0_amplitude(const SectorBasis& basis, const Eigen::VectorXd& c) {
  double amp = 0.0;
  for (int i = 0; i < basis.size(); ++i)
    if (basis.state(i).l == 0) amp += c(i) * std::sqrt(double(basis.state(i).n));
  return amp;
}

// relative oscillator strength from the auxiliary (formulation-local)
// eigenvalue; the gamma^{-3} unit conversion for elongated problems is
// applied by the caller
double osc_raw(const SectorBasis& basis, const Eigen::VectorXd& c, double lambda_aux) {
  const double amp = l0_amplitude(basis, c);
  const double s = observables::normalization_S(basis, c);
  const double p = 1.0 / lambda_aux;
  return p * p * p * amp * amp / (s * s);
}

}  // namespace

ElongatedReduction reduce_elongated(double gamma) {
  if (!(gamma > 1.0))
    throw std::domain_error("reduce_elongated: gamma must exceed 1");
  return {1.0 / gamma - 1.0, 1.0 / gamma};
}

std::string spectroscopic_label(int n, int l, int m_abs) {
  static const std::string letters = "SPDFGHIKLMNOQRTUVWXYZ";
  std::string out = std::to_string(n);
  if (l < static_cast<int>(letters.size()))
    out += letters[l];
  else
    out += "[l=" + std::to_string(l) + "]";
  if (m_abs > 0)
    out += "pm";
  else if (l > 0)
    out += "0";
  return out;
}

std::vector<std::string> anchor_label_sequence(const SectorBasis& basis,
                                               bool from_above, int count) {
  const double eps = from_above ? kAnchorDelta : -kAnchorDelta;
  const auto ham = elements::assemble(basis, eps, elements::PerturbationAxis::z_axis);
  const auto eig = diagonalize(ham.entries);
  const int dim = basis.size();
  const bool use_osc = basis.sector().m_abs == 0 && basis.sector().parity == Parity::even;

  std::vector<std::string> labels(dim);
  int begin = 0;
  while (begin < dim) {
    const int n = static_cast<int>(std::llround(eig.values(begin)));
    int end = begin;
    while (end < dim && static_cast<int>(std::llround(eig.values(end))) == n) ++end;

    // l letters available in this multiplet
    std::vector<int> ls;
    for (int i = 0; i < dim; ++i)
      if (basis.state(i).n == n) ls.push_back(basis.state(i).l);
    std::sort(ls.begin(), ls.end());

    // rank members: larger oscillator strength first for m=0 even,
    // ascending eigenvalue otherwise
    std::vector<int> members(end - begin);
    std::iota(members.begin(), members.end(), begin);
    if (use_osc) {
      std::vector<double> f(end - begin);
      for (int k = begin; k < end; ++k)
        f[k - begin] = osc_raw(basis, eig.vectors.col(k), eig.values(k));
      std::stable_sort(members.begin(), members.end(),
                       [&](int a, int b) { return f[a - begin] > f[b - begin]; });
    }
    for (std::size_t r = 0; r < members.size(); ++r)
      labels[members[r]] = spectroscopic_label(n, ls[r], basis.sector().m_abs);
    begin = end;
  }
  labels.resize(std::min<std::size_t>(labels.size(), std::max(count, 0)));
  return labels;
}

SpectrumResult solve_sector(const Sector& sector, double gamma, int n_max,
                            int l_max, int k_states) {
  if (!(gamma > 0.0) || !std::isfinite(gamma))
    throw std::domain_error("solve_sector: gamma must be positive and finite");
  if (k_states < 1) throw std::domain_error("solve_sector: k_states must be >= 1");

  SectorBasis basis = sector_states(sector, n_max, l_max);
  const bool elongated = gamma > 1.0;
  double epsilon, energy_scale = 1.0;
  if (elongated) {
    const auto red = reduce_elongated(gamma);
    epsilon = red.epsilon_tilde;
    energy_scale = red.energy_scale;
  } else {
    epsilon = gamma - 1.0;
  }
  const auto ham = elements::assemble(basis, epsilon,
                                      elongated ? elements::PerturbationAxis::xy_plane
                                                : elements::PerturbationAxis::z_axis);
  const auto eig = diagonalize(ham.entries);

  int first = 0;
  while (first < eig.values.size() && eig.values(first) <= 0.0) ++first;
  const int keep = std::min<int>(k_states, eig.values.size() - first);

  SpectrumResult result{sector, gamma, basis};
  result.n_max_used = n_max;
  result.l_max_used = l_max;
  result.dropped_nonpositive = first;
  result.lambdas.resize(keep);
  result.energies.resize(keep);
  result.s_norms.resize(keep);
  result.oscillator_strengths.assign(keep, 0.0);
  result.coefficients.resize(basis.size(), keep);
  for (int j = 0; j < keep; ++j) {
    const double lambda_aux = eig.values(first + j);
    result.coefficients.col(j) = eig.vectors.col(first + j);
    result.lambdas[j] = elongated ? std::sqrt(gamma) * lambda_aux : lambda_aux;
    result.energies[j] = -energy_scale / (lambda_aux * lambda_aux);
    result.s_norms[j] = observables::normalization_S(basis, result.coefficients.col(j));
  }
  if (sector.m_abs == 0 && sector.parity == Parity::even)
    for (int j = 0; j < keep; ++j)
      result.oscillator_strengths[j] = observables::oscillator_strength(result, j);
  result.labels = anchor_label_sequence(basis, gamma >= 1.0, keep);
  return result;
}

SpectrumResult solve_converged(const Sector& sector, double gamma,
                               double rel_tol, int k_states,
                               const ConvergeOptions& options) {
  if (!(rel_tol > 0.0)) throw std::domain_error("solve_converged: rel_tol must be positive");
  std::optional<SpectrumResult> prev;
  for (int step : options.schedule) {
    const int n_max = step;
    const int l_max = std::min(n_max - 1, options.l_max_cap);
    if (n_max < sector.m_abs + 1 || l_max < sector.m_abs) continue;
    auto cur = solve_sector(sector, gamma, n_max, l_max, k_states);
    if (prev && prev->size() >= k_states && cur.size() >= k_states) {
      bool settled = true;
      for (int i = 0; i < k_states && settled; ++i)
        settled = std::abs(cur.energies[i] - prev->energies[i]) <=
                  rel_tol * std::abs(cur.energies[i]);
      if (settled) {
        cur.converged = true;
        return cur;
      }
    }
    prev = std::move(cur);
  }
  if (!prev)
    throw std::domain_error("solve_converged: no schedule step can hold the sector");
  prev->converged = false;
  return *prev;
}

SweepResult track_levels(std::vector<SpectrumResult> sweep) {
  if (sweep.empty()) throw std::invalid_argument("track_levels: empty sweep");
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    if (!(sweep[i].sector == sweep.front().sector))
      throw std::invalid_argument("track_levels: mixed sectors");
    if (i > 0 && sweep[i].gamma < sweep[i - 1].gamma)
      throw std::invalid_argument("track_levels: gamma grid must be ascending");
  }

  int k = sweep.front().size();
  for (const auto& point : sweep) k = std::min(k, point.size());

  SweepResult out;
  out.gamma_grid.reserve(sweep.size());
  for (const auto& point : sweep) out.gamma_grid.push_back(point.gamma);

  // point-to-point matching by maximal eigenvector overlap over the
  // common basis states
  std::vector<std::vector<int>> match(sweep.size() > 0 ? sweep.size() - 1 : 0);
  for (std::size_t s = 0; s + 1 < sweep.size(); ++s) {
    const auto& pa = sweep[s];
    const auto& pb = sweep[s + 1];
    std::vector<std::pair<int, int>> common;
    for (int i = 0; i < pa.basis.size(); ++i) {
      const int j = pb.basis.find(pa.basis.state(i));
      if (j >= 0) common.emplace_back(i, j);
    }
    Eigen::MatrixXd overlap(k, k);
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        double dot = 0.0, na = 0.0, nb = 0.0;
        for (const auto& [i, j] : common) {
          dot += pa.coefficients(i, a) * pb.coefficients(j, b);
          na += pa.coefficients(i, a) * pa.coefficients(i, a);
          nb += pb.coefficients(j, b) * pb.coefficients(j, b);
        }
        overlap(a, b) = (na > 0 && nb > 0) ? std::abs(dot) / std::sqrt(na * nb) : 0.0;
      }
    }
    match[s].assign(k, -1);
    std::vector<bool> taken(k, false);
    for (int a = 0; a < k; ++a) {
      int best = -1;
      for (int b = 0; b < k; ++b)
        if (!taken[b] && (best < 0 || overlap(a, b) > overlap(a, best))) best = b;
      match[s][a] = best;
      taken[best] = true;
      out.continuity.min_overlap = std::min(out.continuity.min_overlap, overlap(a, best));
      if (best != a || overlap(a, best) < 0.5) {
        if (best != a) out.continuity.order_preserved = false;
        out.continuity.defects.push_back({static_cast<int>(s), a, best, overlap(a, best)});
      }
    }
  }

  for (int j = 0; j < k; ++j) {
    LevelTrajectory traj;
    traj.label = sweep.front().labels.empty() ? std::string() : sweep.front().labels[j];
    int cur = j;
    for (std::size_t s = 0; s < sweep.size(); ++s) {
      if (s > 0) cur = match[s - 1][cur];
      traj.gammas.push_back(sweep[s].gamma);
      traj.lambdas.push_back(sweep[s].lambdas[cur]);
      traj.energies.push_back(sweep[s].energies[cur]);
      traj.oscillator_strengths.push_back(sweep[s].oscillator_strengths[cur]);
    }
    out.trajectories.push_back(std::move(traj));
  }
  out.points = std::move(sweep);
  return out;
}

}  // namespace hypexc
