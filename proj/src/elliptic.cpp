#include "torsion/elliptic.hpp"

#include <cmath>

namespace torsion {

namespace {

constexpr double kPi = 3.14159265358979323846;

int auto_terms(double im_tau, int requested) {
  if (requested > 0) return requested;
  // |q|^terms < 1e-30  <=>  terms > 30 ln 10 / (2 pi Im tau).
  int t = static_cast<int>(std::ceil(30.0 * std::log(10.0) / (2.0 * kPi * im_tau))) + 1;
  return std::max(t, 4);
}

void require_upper_half(std::complex<double> tau) {
  if (!(tau.imag() > 0.0)) throw InputError("tau must lie in the upper half plane");
}

}  // namespace

std::complex<double> dedekind_eta(std::complex<double> tau, int terms) {
  require_upper_half(tau);
  const std::complex<double> i2pi(0.0, 2.0 * kPi);
  std::complex<double> q = std::exp(i2pi * tau);
  std::complex<double> lead = std::exp(i2pi * tau / 24.0);
  int n = auto_terms(tau.imag(), terms);
  std::complex<double> prod(1.0, 0.0);
  std::complex<double> qk(1.0, 0.0);
  for (int k = 1; k <= n; ++k) {
    qk *= q;
    prod *= (1.0 - qk);
  }
  return lead * prod;
}

double log_abs_eta(std::complex<double> tau, int terms) {
  require_upper_half(tau);
  const double y = tau.imag();
  int n = auto_terms(y, terms);
  KahanSum acc;
  acc.add(-kPi * y / 12.0);
  // q^k = e^{2 pi i k tau}; |q^k| = e^{-2 pi k y} vanishes fast, so the sum
  // is effectively finite even for huge y.
  for (int k = 1; k <= n; ++k) {
    double mag = std::exp(-2.0 * kPi * k * y);
    if (mag == 0.0) break;
    double arg = 2.0 * kPi * k * tau.real();
    std::complex<double> qk = mag * std::complex<double>(std::cos(arg), std::sin(arg));
    acc.add(std::log(std::abs(1.0 - qk)));
  }
  return acc.value();
}

double torus_log_det(std::complex<double> tau) {
  require_upper_half(tau);
  return 2.0 * std::log(tau.imag()) + 4.0 * log_abs_eta(tau);
}

std::complex<double> node_tate_tau(long double r) {
  if (!(r > 0.0L) || r >= 1.0L) throw InputError("node family radius must lie in (0,1)");
  long double im = -std::log(r) / (2.0L * static_cast<long double>(kPi));
  return std::complex<double>(0.0, static_cast<double>(im));
}

std::vector<Sample> sample_family(const FamilyKind& kind,
                                  const std::vector<long double>& r_grid) {
  std::vector<Sample> out;
  if (const auto* node = std::get_if<NodeTateFamily>(&kind)) {
    (void)node;
    for (long double r : r_grid) {
      std::complex<double> tau = node_tate_tau(r);
      if (!(tau.imag() > 1.0))
        throw InputError("node family needs r < e^{-2 pi} so that Im tau > 1");
      out.push_back({r, -torus_log_det(tau)});
    }
  } else {
    const auto& table = std::get<PrescribedTauFamily>(kind).table;
    for (const auto& [r, tau] : table) {
      if (!(r > 0.0L) || r >= 1.0L)
        throw InputError("prescribed-tau radius must lie in (0,1)");
      require_upper_half(tau);
      out.push_back({r, -torus_log_det(tau)});
    }
  }
  return out;
}

std::vector<long double> node_tate_grid(double im_lo, double im_hi, int points) {
  if (!(im_lo > 1.0) || !(im_hi > im_lo) || points < 2)
    throw InputError("node grid needs 1 < im_lo < im_hi and at least two points");
  std::vector<long double> out;
  out.reserve(static_cast<size_t>(points));
  for (int i = 0; i < points; ++i) {
    long double im = im_lo + (im_hi - im_lo) * static_cast<long double>(i) / (points - 1);
    out.push_back(std::exp(-2.0L * static_cast<long double>(kPi) * im));
  }
  return out;
}

}  // namespace torsion
