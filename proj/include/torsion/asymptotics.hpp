#ifndef TORSION_ASYMPTOTICS_HPP
#define TORSION_ASYMPTOTICS_HPP

#include <Eigen/Core>

#include <complex>
#include <functional>
#include <vector>

#include "torsion/errors.hpp"

namespace torsion {

// Boundary model for log torsion:
//   kappa log r^2 - rho log log(r^{-2}) + gamma + c / log(r^{-1}).
struct AsymModel {
  double kappa = 0.0;
  double rho = 0.0;
  double gamma = 0.0;
  double c = 0.0;
};

// One observation at radius r = |s| < 1.  The radius is kept in extended
// precision: node-type families reach r around 1e-546, far below the double
// range, while log(1/r) stays comfortably representable.
struct Sample {
  long double r = 0.5L;
  double value = 0.0;
};

struct FitResult {
  AsymModel model;
  long rho_rounded = 0;
  bool rho_integral = true;  // |rho - rho_rounded| within the tolerance
  double residual_rms = 0.0;
  double conditioning = 1.0;  // condition number of the normal system
};

double model_eval(const AsymModel& m, long double r);

// Linear least squares in the basis {log r^2, -log log r^{-2}, 1, 1/log r^{-1}}.
// `with_c` switches the 1/L column on.  `rho_tol` controls the integrality
// report on the fitted rho.
FitResult fit(const std::vector<Sample>& samples, bool with_c = false,
              double rho_tol = 0.1);

// Power-of-log ratio model C' (log r^{-1})^p: fitted by the same routine on
// log-values with the kappa column constrained to zero.
struct PowerLogFit {
  double exponent = 0.0;
  double prefactor = 1.0;
  double residual_rms = 0.0;
};
PowerLogFit fit_power_log(const std::vector<Sample>& ratio_samples,
                          double rho_tol = 0.1);

// ---- Barlet-Takayama matrix models ----

using HermMatrix = Eigen::MatrixXcd;

// H~(t) = sum_{m=0}^{degree} (log|t|^{-2})^m A_m with Hermitian A_m; the
// scaling exponents relate it to H(mu(t)) = D(t) H~(t) conj(D(t)) with
// D(t) = diag(t^{-e_i}).
struct BTExpansion {
  int degree = 0;
  int size = 1;
  std::vector<HermMatrix> matrices;  // degree+1 entries
  std::vector<long> exponents;       // size entries, >= 0

  void validate() const;
};

HermMatrix bt_eval(const BTExpansion& b, std::complex<double> t);

// H(t) with the diagonal scaling applied, for synthesizing test data.
HermMatrix bt_eval_scaled(const BTExpansion& b, std::complex<double> t);

// Least-squares recovery of the coefficients a_m of det H~ as a polynomial
// in x = log|t|^{-2}, from (t, det) samples.
std::vector<double> bt_det_fit(const std::vector<std::pair<std::complex<double>, double>>& det_samples,
                               int degree);

// max{m : |a_m| > tol * max|a|}.
int bt_rho(const std::vector<double>& coeffs, double tol = 1e-7);

struct DhResult {
  std::vector<HermMatrix> descaled;  // H~ at each grid point
  double min_eigenvalue = 0.0;       // inf over the grid
};

// Undoes the diagonal scaling: H~ = D^{-1} H conj(D)^{-1}.  Throws on
// non-Hermitian input (beyond roundoff).
DhResult dh_decompose(const std::vector<std::pair<std::complex<double>, HermMatrix>>& samples,
                      const std::vector<long>& exponents);

// ---- Numeric curvature checks ----

// g(t) = sum_i (log|t|^2)^{ell_i} phi_i(t), assumed positive on the grid.
struct LogTerm {
  int ell = 0;
  std::function<double(std::complex<double>)> phi;
};

struct CurvatureReport {
  // One row per grid point.
  struct Row {
    std::complex<double> t;
    double numeric;    // d_t d_tbar log g by central differences
    double principal;  // -ell / (|t|^2 (log|t|^2)^2)
    double envelope;   // |numeric - principal| * |t|^2 (log|t|^{-1})^3
  };
  std::vector<Row> rows;
  int ell = 0;               // max{i : phi_i(0) != 0}
  double max_envelope = 0.0;
  double max_rel_dev = 0.0;  // of numeric vs principal
};

// Central differences with relative step h = |t|/100 in each real
// coordinate and one Richardson extrapolation.
double laplacian_log(const std::function<double(std::complex<double>)>& g,
                     std::complex<double> t);

CurvatureReport curvature_check(const std::vector<LogTerm>& terms,
                                const std::vector<std::complex<double>>& grid);

// Compensated (Kahan) accumulation for order-stable grid sums.
class KahanSum {
public:
  void add(double x) {
    double y = x - comp_;
    double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace torsion

#endif
