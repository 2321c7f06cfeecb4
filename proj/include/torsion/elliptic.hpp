#ifndef TORSION_ELLIPTIC_HPP
#define TORSION_ELLIPTIC_HPP

#include <complex>
#include <variant>
#include <vector>

#include "torsion/asymptotics.hpp"

namespace torsion {

// Dedekind eta by the q-product q^{1/24} prod (1 - q^k), q = e^{2 pi i tau}.
// `terms` = 0 picks enough factors for |q|^terms < 1e-30.
std::complex<double> dedekind_eta(std::complex<double> tau, int terms = 0);

// log|eta(tau)|, evaluated in log space so very large Im tau never
// underflows through the product.
double log_abs_eta(std::complex<double> tau, int terms = 0);

// log det' Laplacian of the unit-area flat torus C/(Z + tau Z):
// 2 log Im tau + 4 log|eta(tau)|.
double torus_log_det(std::complex<double> tau);

// tau(r) = log r / (2 pi i); purely imaginary with Im tau = log(1/r)/(2 pi).
struct NodeTateFamily {};

// Explicit (r, tau) table.
struct PrescribedTauFamily {
  std::vector<std::pair<long double, std::complex<double>>> table;
};

using FamilyKind = std::variant<NodeTateFamily, PrescribedTauFamily>;

std::complex<double> node_tate_tau(long double r);

// Sample(r, -torus_log_det(tau(r))): the sign puts the value in the role of
// log tau(X_s) for the fitter.
std::vector<Sample> sample_family(const FamilyKind& kind,
                                  const std::vector<long double>& r_grid);

// Radii with Im tau equally spaced in [im_lo, im_hi] for the node family.
std::vector<long double> node_tate_grid(double im_lo, double im_hi, int points);

}  // namespace torsion

#endif
