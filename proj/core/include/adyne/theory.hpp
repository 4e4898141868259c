#pragma once

#include <complex>

namespace adyne {

/// Squeezed-state parameters equivalent to a completed record (a, b, v): the
/// outcome distribution of the measurement is that of the state labelled by
/// beta = c/(1 - |b|^2) and zeta = -b atanh|b| / |b|.
struct SqueezeParams {
  std::complex<double> beta{0.0, 0.0};
  std::complex<double> zeta{0.0, 0.0};
};

/// Map a record to its squeezed-state parameters. Throws std::domain_error
/// when |b| >= 1 (the atanh mapping is singular there).
SqueezeParams squeeze_params(std::complex<double> a, std::complex<double> b, double v);

/// Mean photon number |beta|^2 + sinh^2 |zeta| of the mapped state.
double squeezed_photon_number(const SqueezeParams& p);

/// Phase variance of a squeezed state with photon number n_p and real squeeze
/// parameter zeta: (n0 + 1)/(4 n_p^2) + 2 erfc(sqrt(2 n0)), n0 = n_p e^{2 zeta}.
double squeezed_phase_variance(double n_p, double zeta_real);

/// Minimum introduced phase variance under a loop delay tau in (0, 1]:
/// e^{-2 atanh(1 - tau)} / (4 n_bar). Throws std::domain_error at tau = 0
/// (use the no-delay limit instead).
double delay_limit(double tau, double n_bar);

/// Small-tau asymptotic of the delay limit, tau / (8 n_bar).
double delay_limit_small_tau(double tau, double n_bar);

/// Phase variance introduced by heterodyne detection, 1/(4 n_bar).
double heterodyne_var(double n_bar);

/// Phase variance introduced by the adaptive best-estimate scheme with no
/// delay, 1/(8 n_bar^{3/2}).
double mark_two_intro_var(double n_bar);

/// Theoretical no-delay limit log(n_bar)/(4 n_bar^2), natural log; requires
/// n_bar > 1.
double no_delay_limit(double n_bar);

/// Total variance of the final intermediate estimate under simplified
/// feedback with delay tau, to first order: 1/(4 alpha) + tau/2.
double mark_one_delay_var(double alpha, double tau);

/// First-order delay coefficient by direct quadrature of
///   4 alpha Int_{v1}^{1} (log u)/u e^{8 alpha (sqrt u - 1)} du
///   + Int_{v1}^{1} 2 e^{8 alpha (sqrt u - 1)} / u^{3/2} du,
/// which reproduces 1/(4 alpha) + O(alpha^-2). The integrand lives in a
/// boundary layer of width ~1/(8 alpha) at u = 1; the lower limit is
/// exponentially irrelevant. Throws std::runtime_error when the requested
/// accuracy is not reached.
double perturbation_quadrature(double alpha, double v1 = 1e-4);

/// Delay limit evaluated with the ensemble's measured mean inverse photon
/// number: (1/4) <1/n_p> e^{-2 atanh(1 - tau)}.
double corrected_limit(double inv_n_mean, double tau);

}  // namespace adyne
