#include "acqudit/kernels.hpp"

#include <cmath>
#include <complex>

#include "acqudit/parallel.hpp"

namespace acqudit::kernels {

namespace {
using Complex = std::complex<double>;

double lerp_x(const TimeGrid& g, std::span<const double> x, double t) {
  if (t <= 0.0) return x.front();
  if (t >= g.t_f) return x.back();
  const double u = t / g.h;
  const int i = std::min(static_cast<int>(u), g.size() - 2);
  const double frac = u - i;
  return x[i] + frac * (x[i + 1] - x[i]);
}
}  // namespace

SpectralTables build_tables(const morse::TrapSpec& trap, const bath::BathSpec& spec,
                            int jobs) {
  spec.validate();
  SpectralTables tab;
  tab.trap = trap;
  tab.structure = morse::build_structure(trap);
  tab.spec = spec;
  tab.eps_grid = midpoint_rule(0.0, spec.eps_max, spec.n_eps);
  tab.k_grid = midpoint_rule(-spec.k_max, spec.k_max, spec.n_k);

  const int ne = tab.n_eps();
  const int nk = tab.n_k();
  tab.gap.resize(ne);
  tab.mu.resize(ne);
  tab.mu_over_gap.resize(ne);
  tab.dipole.resize(ne);
  tab.omega_k.resize(nk);
  tab.weight.resize(static_cast<std::size_t>(ne) * nk);
  tab.omega_sum.resize(static_cast<std::size_t>(ne) * nk);

  for (int ik = 0; ik < nk; ++ik) tab.omega_k[ik] = bath::dispersion(tab.k_grid.nodes[ik]);

  parallel_for(ne, jobs, [&](int ie) {
    const double eps = tab.eps_grid.nodes[ie];
    tab.gap[ie] = morse::gap(tab.structure, eps);
    tab.mu[ie] = morse::mu_nonadiabatic(tab.structure, trap, eps);
    tab.mu_over_gap[ie] = tab.mu[ie] / tab.gap[ie];
    tab.dipole[ie] = morse::dipole_D(tab.structure, eps);
    const double we = tab.eps_grid.weights[ie];
    for (int ik = 0; ik < nk; ++ik) {
      const double k = tab.k_grid.nodes[ik];
      const double wg = spec.g_tilde > 0.0 ? bath::coupling_weight(spec, k) : 0.0;
      tab.weight[static_cast<std::size_t>(ie) * nk + ik] =
          wg > 0.0 ? we * tab.k_grid.weights[ik] * wg * morse::d_abs_sq(tab.structure, eps, k)
                   : 0.0;
      tab.omega_sum[static_cast<std::size_t>(ie) * nk + ik] = tab.gap[ie] + tab.omega_k[ik];
    }
  });
  return tab;
}

double KernelSet::phi_at(double lag) const {
  const double al = std::abs(lag);
  const double u = al / grid.h;
  const int i = std::min(static_cast<int>(u), grid.size() - 2);
  const double frac = u - i;
  return phi[i] + frac * (phi[i + 1] - phi[i]);
}

double KernelSet::phi1_at(double lag) const {
  const double al = std::abs(lag);
  const double u = al / grid.h;
  const int i = std::min(static_cast<int>(u), grid.size() - 2);
  const double frac = u - i;
  return phi1[i] + frac * (phi1[i + 1] - phi1[i]);
}

KernelSet build_kernels(const SpectralTables& tab, const TimeGrid& grid, int jobs) {
  KernelSet ks;
  ks.grid = grid;
  const int nt = grid.size();
  ks.eta.assign(nt, 0.0);
  ks.zeta.assign(nt, 0.0);
  ks.phi.assign(nt, 0.0);
  ks.phi1.assign(nt, 0.0);

  const int ne = tab.n_eps();
  const int nk = tab.n_k();

  parallel_for(nt, jobs, [&](int it) {
    const double lag = grid.t[it];
    double p = 0.0, p1 = 0.0;
    for (int ie = 0; ie < ne; ++ie) {
      const double we = tab.eps_grid.weights[ie];
      const double c = std::cos(tab.gap[ie] * lag);
      p += we * tab.mu[ie] * tab.mu[ie] * c;
      p1 += we * tab.mu_over_gap[ie] * tab.mu_over_gap[ie] * c;
    }
    ks.phi[it] = p;
    ks.phi1[it] = p1;
  });

  if (!tab.has_bath()) return ks;

  parallel_for(nt, jobs, [&](int it) {
    const double t = grid.t[it];
    double e = 0.0, z = 0.0;
    for (int ie = 0; ie < ne; ++ie) {
      const std::size_t row = static_cast<std::size_t>(ie) * nk;
      for (int ik = 0; ik < nk; ++ik) {
        const double w = tab.weight[row + ik];
        if (w == 0.0) continue;
        const double osum = tab.omega_sum[row + ik];
        const double k = tab.k_grid.nodes[ik];
        const double c_int = (std::sin(osum * t) + std::sin(osum * (grid.t_f - t))) / osum;
        e += w * osum * k * c_int;
        z += w * k * k * c_int;
      }
    }
    ks.eta[it] = e;
    ks.zeta[it] = z;
  });
  return ks;
}

void eta1_zeta1_profile(const SpectralTables& tab, const TimeGrid& grid,
                        std::span<const double> x, std::vector<double>& eta1,
                        std::vector<double>& zeta1) {
  const int nt = grid.size();
  if (static_cast<int>(x.size()) != nt) {
    throw GridMismatch("eta1_zeta1_profile: trajectory not on the kernel grid");
  }
  eta1.assign(nt, 0.0);
  zeta1.assign(nt, 0.0);
  if (!tab.has_bath()) return;

  const int ne = tab.n_eps();
  const int nk = tab.n_k();

  // Phase factorisation: exp(i[(gap+Omega) t + k x(t)]) = E_eps(ie,t) E_k(ik,t).
  std::vector<Complex> e_eps(static_cast<std::size_t>(ne) * nt);
  std::vector<Complex> e_k(static_cast<std::size_t>(nk) * nt);
  for (int ie = 0; ie < ne; ++ie) {
    for (int it = 0; it < nt; ++it) {
      e_eps[static_cast<std::size_t>(ie) * nt + it] =
          std::polar(1.0, tab.gap[ie] * grid.t[it]);
    }
  }
  for (int ik = 0; ik < nk; ++ik) {
    const double k = tab.k_grid.nodes[ik];
    for (int it = 0; it < nt; ++it) {
      e_k[static_cast<std::size_t>(ik) * nt + it] =
          std::polar(1.0, tab.omega_k[ik] * grid.t[it] + k * x[it]);
    }
  }

  // With Theta(t) = (gap+Omega) t + k x(t):
  //   int_0^{t_f} cos[Theta(t) - Theta(s)] ds = Re[ e^{i Theta(t)} conj(Z) ],
  //   Z = int_0^{t_f} e^{i Theta(s)} ds.
  // Z is integrated cell by cell with the phase taken linear across each
  // cell: int e^{i theta} ds = h e^{i theta_m} (e^{i dtheta} - 1)/(i dtheta).
  // For x = 0 the phase is exactly linear and the cell sums telescope to the
  // closed-form s-integral used by build_kernels, so eta1/zeta1 reproduce
  // eta/zeta at machine precision in that limit.
  for (int ie = 0; ie < ne; ++ie) {
    const Complex* pe = &e_eps[static_cast<std::size_t>(ie) * nt];
    const std::size_t row = static_cast<std::size_t>(ie) * nk;
    for (int ik = 0; ik < nk; ++ik) {
      const double w = tab.weight[row + ik];
      if (w == 0.0) continue;
      const double k = tab.k_grid.nodes[ik];
      const double osum = tab.omega_sum[row + ik];
      const Complex* pk = &e_k[static_cast<std::size_t>(ik) * nt];
      Complex zsum(0.0, 0.0);
      for (int it = 0; it + 1 < nt; ++it) {
        const Complex em = pe[it] * pk[it];
        const Complex ep = pe[it + 1] * pk[it + 1];
        const double dtheta = osum * grid.h + k * (x[it + 1] - x[it]);
        if (std::abs(dtheta) > 1e-6) {
          zsum += grid.h * (ep - em) / Complex(0.0, dtheta);
        } else {
          zsum += grid.h * 0.5 * (em + ep);
        }
      }
      const Complex zc = std::conj(zsum);
      const double ce = w * k * osum;
      const double cz = w * k * k;
      for (int it = 0; it < nt; ++it) {
        const double re = (pe[it] * pk[it] * zc).real();
        eta1[it] += ce * re;
        zeta1[it] += cz * re;
      }
    }
  }
}

std::pair<double, double> eval_eta1_zeta1(const SpectralTables& tab, const TimeGrid& grid,
                                          std::span<const double> x, int time_index) {
  std::vector<double> e, z;
  eta1_zeta1_profile(tab, grid, x, e, z);
  return {e.at(time_index), z.at(time_index)};
}

double eval_K(const SpectralTables& tab, const TimeGrid& grid, std::span<const double> x,
              double t, double t_prime) {
  if (static_cast<int>(x.size()) != grid.size()) {
    throw GridMismatch("eval_K: trajectory not on the kernel grid");
  }
  const double xt = lerp_x(grid, x, t);
  const double xp = lerp_x(grid, x, t_prime);
  const int ne = tab.n_eps();
  const int nk = tab.n_k();
  double sum = 0.0;
  for (int ie = 0; ie < ne; ++ie) {
    const std::size_t row = static_cast<std::size_t>(ie) * nk;
    for (int ik = 0; ik < nk; ++ik) {
      const double w = tab.weight[row + ik];
      if (w == 0.0) continue;
      const double k = tab.k_grid.nodes[ik];
      sum += w * k * std::sin(tab.omega_sum[row + ik] * (t - t_prime) + k * (xt - xp));
    }
  }
  return sum;
}

}  // namespace acqudit::kernels
