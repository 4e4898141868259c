#include "adyne/theory.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <stdexcept>

namespace adyne {

SqueezeParams squeeze_params(std::complex<double> a, std::complex<double> b, double v) {
  const double abs_b = std::abs(b);
  if (abs_b >= 1.0) throw std::domain_error("squeeze_params: |b| >= 1 is singular");
  SqueezeParams p;
  const std::complex<double> c = a * v + b * std::conj(a);
  // The record projects onto exp(A a^+ + B a^+2/2)|0>, which disentangles to
  // D(beta) S(zeta)|0> with beta (1 - |B|^2) = A v + B conj(A). The
  // denominator is |B|^2, not B^2: only that form is covariant under a
  // global phase rotation (A, B) -> (e^{i t} A, e^{2 i t} B).
  p.beta = c / (1.0 - std::norm(b));
  if (abs_b > 0.0) p.zeta = -b * (std::atanh(abs_b) / abs_b);
  return p;
}

double squeezed_photon_number(const SqueezeParams& p) {
  const double s = std::sinh(std::abs(p.zeta));
  return std::norm(p.beta) + s * s;
}

double squeezed_phase_variance(double n_p, double zeta_real) {
  if (!(n_p > 0.0)) throw std::domain_error("squeezed_phase_variance: n_p must be > 0");
  const double n0 = n_p * std::exp(2.0 * zeta_real);
  return (n0 + 1.0) / (4.0 * n_p * n_p) + 2.0 * std::erfc(std::sqrt(2.0 * n0));
}

double delay_limit(double tau, double n_bar) {
  if (!(n_bar > 0.0)) throw std::domain_error("delay_limit: n_bar must be > 0");
  if (!(tau > 0.0)) throw std::domain_error("delay_limit: tau = 0; use no_delay_limit");
  if (tau > 1.0) throw std::domain_error("delay_limit: tau must lie in (0, 1]");
  return std::exp(-2.0 * std::atanh(1.0 - tau)) / (4.0 * n_bar);
}

double delay_limit_small_tau(double tau, double n_bar) { return tau / (8.0 * n_bar); }

double heterodyne_var(double n_bar) {
  if (!(n_bar > 0.0)) throw std::domain_error("heterodyne_var: n_bar must be > 0");
  return 1.0 / (4.0 * n_bar);
}

double mark_two_intro_var(double n_bar) {
  if (!(n_bar > 0.0)) throw std::domain_error("mark_two_intro_var: n_bar must be > 0");
  return 1.0 / (8.0 * std::pow(n_bar, 1.5));
}

double no_delay_limit(double n_bar) {
  if (!(n_bar > 1.0)) throw std::domain_error("no_delay_limit: n_bar must be > 1");
  return std::log(n_bar) / (4.0 * n_bar * n_bar);
}

double mark_one_delay_var(double alpha, double tau) {
  if (!(alpha > 0.0) || tau < 0.0) {
    throw std::domain_error("mark_one_delay_var: alpha > 0 and tau >= 0 required");
  }
  return 1.0 / (4.0 * alpha) + tau / 2.0;
}

double perturbation_quadrature(double alpha, double v1) {
  if (!(alpha >= 10.0)) throw std::domain_error("perturbation_quadrature: alpha >= 10 required");
  if (!(v1 > 0.0 && v1 < 0.5)) {
    throw std::domain_error("perturbation_quadrature: v1 must lie in (0, 0.5)");
  }
  using quad = boost::math::quadrature::gauss_kronrod<double, 15>;
  const auto log_term = [alpha](double u) {
    return std::log(u) / u * std::exp(8.0 * alpha * (std::sqrt(u) - 1.0));
  };
  const auto power_term = [alpha](double u) {
    return 2.0 * std::exp(8.0 * alpha * (std::sqrt(u) - 1.0)) / (u * std::sqrt(u));
  };
  double err1 = 0.0;
  double err2 = 0.0;
  const double i1 = quad::integrate(log_term, v1, 1.0, 15, 1e-9, &err1);
  const double i2 = quad::integrate(power_term, v1, 1.0, 15, 1e-9, &err2);
  const double value = 4.0 * alpha * i1 + i2;
  const double err = 4.0 * alpha * err1 + err2;
  if (!(err <= 1e-8 * std::abs(value))) {
    throw std::runtime_error("perturbation_quadrature: accuracy failure, error estimate " +
                             std::to_string(err));
  }
  return value;
}

double corrected_limit(double inv_n_mean, double tau) {
  if (!(inv_n_mean > 0.0)) throw std::domain_error("corrected_limit: inv_n_mean must be > 0");
  if (!(tau > 0.0 && tau <= 1.0)) throw std::domain_error("corrected_limit: tau in (0, 1]");
  return 0.25 * inv_n_mean * std::exp(-2.0 * std::atanh(1.0 - tau));
}

}  // namespace adyne
