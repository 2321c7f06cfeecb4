#include "torsion/asymptotics.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>

namespace torsion {

namespace {

// L = log(1/r) > 1 on the valid domain; computed in extended precision so
// that radii below the double range still carry full information.
double big_l(long double r) {
  if (!(r > 0.0L) || r >= 1.0L)
    throw InputError("sample radius must lie in (0, 1)");
  double L = static_cast<double>(-std::log(r));
  if (!(L > 0.5))  // keeps log log(r^{-2}) defined and positive
    throw InputError("sample radius too close to 1 for the log-log model");
  return L;
}

}  // namespace

double model_eval(const AsymModel& m, long double r) {
  double L = big_l(r);
  return -2.0 * m.kappa * L - m.rho * std::log(2.0 * L) + m.gamma + m.c / L;
}

namespace {

FitResult fit_masked(const std::vector<Sample>& samples, bool use_kappa, bool use_rho,
                     bool use_gamma, bool use_c, double rho_tol) {
  const Eigen::Index n = static_cast<Eigen::Index>(samples.size());
  std::vector<int> cols;
  if (use_kappa) cols.push_back(0);
  if (use_rho) cols.push_back(1);
  if (use_gamma) cols.push_back(2);
  if (use_c) cols.push_back(3);
  const Eigen::Index p = static_cast<Eigen::Index>(cols.size());
  if (n < p) throw InputError("fit needs at least as many samples as coefficients");

  Eigen::MatrixXd design(n, p);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double L = big_l(samples[static_cast<size_t>(i)].r);
    double basis[4] = {-2.0 * L, -std::log(2.0 * L), 1.0, 1.0 / L};
    for (Eigen::Index j = 0; j < p; ++j) design(i, j) = basis[cols[static_cast<size_t>(j)]];
    y(i) = samples[static_cast<size_t>(i)].value;
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  double smax = sv(0), smin = sv(p - 1);
  double cond = (smin > 0.0) ? (smax / smin) * (smax / smin)
                             : std::numeric_limits<double>::infinity();
  if (!(smin > smax * 1e-13))
    throw InputError("fit design matrix is rank deficient (normal-system conditioning " +
                     std::to_string(cond) + ")");

  Eigen::VectorXd beta = svd.solve(y);
  Eigen::VectorXd resid = design * beta - y;

  FitResult out;
  for (Eigen::Index j = 0; j < p; ++j) {
    double v = beta(j);
    switch (cols[static_cast<size_t>(j)]) {
      case 0: out.model.kappa = v; break;
      case 1: out.model.rho = v; break;
      case 2: out.model.gamma = v; break;
      case 3: out.model.c = v; break;
    }
  }
  out.rho_rounded = std::lround(out.model.rho);
  out.rho_integral = std::abs(out.model.rho - static_cast<double>(out.rho_rounded)) <= rho_tol;
  out.residual_rms = std::sqrt(resid.squaredNorm() / static_cast<double>(n));
  out.conditioning = cond;
  return out;
}

}  // namespace

FitResult fit(const std::vector<Sample>& samples, bool with_c, double rho_tol) {
  return fit_masked(samples, true, true, true, with_c, rho_tol);
}

PowerLogFit fit_power_log(const std::vector<Sample>& ratio_samples, double rho_tol) {
  std::vector<Sample> logged;
  logged.reserve(ratio_samples.size());
  for (const auto& s : ratio_samples) {
    if (!(s.value > 0.0))
      throw InputError("power-log fit requires positive ratio samples");
    logged.push_back({s.r, std::log(s.value)});
  }
  FitResult r = fit_masked(logged, false, true, true, false, rho_tol);
  // -rho log(2L) + gamma == p log L + log C'  with  p = -rho and
  // log C' = gamma - rho log 2.
  PowerLogFit out;
  out.exponent = -r.model.rho;
  out.prefactor = std::exp(r.model.gamma - r.model.rho * std::log(2.0));
  out.residual_rms = r.residual_rms;
  return out;
}

// ---------------------------------------------------------------------------

void BTExpansion::validate() const {
  if (degree < 0 || size < 1) throw InputError("malformed BT expansion shape");
  if (static_cast<int>(matrices.size()) != degree + 1)
    throw InputError("BT expansion needs degree+1 coefficient matrices");
  for (const auto& a : matrices) {
    if (a.rows() != size || a.cols() != size)
      throw InputError("BT coefficient matrix has wrong shape");
    if ((a - a.adjoint()).norm() > 1e-12 * (1.0 + a.norm()))
      throw InputError("BT coefficient matrix is not Hermitian");
  }
  if (static_cast<int>(exponents.size()) != size)
    throw InputError("BT expansion needs one exponent per basis element");
  for (long e : exponents)
    if (e < 0) throw InputError("BT exponents are non-negative");
}

namespace {

double log_inv_sq(std::complex<double> t) {
  double a = std::abs(t);
  if (!(a > 0.0) || a >= 1.0) throw InputError("BT evaluation needs 0 < |t| < 1");
  return -2.0 * std::log(a);
}

}  // namespace

HermMatrix bt_eval(const BTExpansion& b, std::complex<double> t) {
  b.validate();
  double x = log_inv_sq(t);
  HermMatrix acc = HermMatrix::Zero(b.size, b.size);
  double xm = 1.0;
  for (int m = 0; m <= b.degree; ++m) {
    acc += xm * b.matrices[static_cast<size_t>(m)];
    xm *= x;
  }
  return acc;
}

HermMatrix bt_eval_scaled(const BTExpansion& b, std::complex<double> t) {
  HermMatrix h = bt_eval(b, t);
  Eigen::VectorXcd d(b.size);
  for (int i = 0; i < b.size; ++i)
    d(i) = std::pow(t, static_cast<double>(-b.exponents[static_cast<size_t>(i)]));
  return d.asDiagonal() * h * d.conjugate().asDiagonal();
}

std::vector<double> bt_det_fit(
    const std::vector<std::pair<std::complex<double>, double>>& det_samples, int degree) {
  const Eigen::Index n = static_cast<Eigen::Index>(det_samples.size());
  const Eigen::Index p = degree + 1;
  if (degree < 0 || n < p) throw InputError("bt_det_fit: not enough samples");
  Eigen::MatrixXd design(n, p);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double x = log_inv_sq(det_samples[static_cast<size_t>(i)].first);
    double xm = 1.0;
    for (Eigen::Index j = 0; j < p; ++j) {
      design(i, j) = xm;
      xm *= x;
    }
    y(i) = det_samples[static_cast<size_t>(i)].second;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (!(sv(p - 1) > sv(0) * 1e-13))
    throw InputError("bt_det_fit: design matrix is rank deficient");
  Eigen::VectorXd beta = svd.solve(y);
  return std::vector<double>(beta.data(), beta.data() + p);
}

int bt_rho(const std::vector<double>& coeffs, double tol) {
  double top = 0.0;
  for (double c : coeffs) top = std::max(top, std::abs(c));
  if (top == 0.0) return 0;
  int rho = 0;
  for (size_t m = 0; m < coeffs.size(); ++m)
    if (std::abs(coeffs[m]) > tol * top) rho = static_cast<int>(m);
  return rho;
}

DhResult dh_decompose(const std::vector<std::pair<std::complex<double>, HermMatrix>>& samples,
                      const std::vector<long>& exponents) {
  DhResult out;
  out.min_eigenvalue = std::numeric_limits<double>::infinity();
  for (const auto& [t, h] : samples) {
    const Eigen::Index n = h.rows();
    if (h.cols() != n || n != static_cast<Eigen::Index>(exponents.size()))
      throw InputError("dh_decompose: shape mismatch");
    if ((h - h.adjoint()).norm() > 1e-10 * (1.0 + h.norm()))
      throw InputError("dh_decompose: matrix sample is not Hermitian");
    if (!(std::abs(t) > 0.0)) throw InputError("dh_decompose: grid touches t = 0");
    Eigen::VectorXcd dinv(n);
    for (Eigen::Index i = 0; i < n; ++i)
      dinv(i) = std::pow(t, static_cast<double>(exponents[static_cast<size_t>(i)]));
    HermMatrix descaled = dinv.asDiagonal() * h * dinv.conjugate().asDiagonal();
    descaled = 0.5 * (descaled + descaled.adjoint().eval());  // symmetrize roundoff
    Eigen::SelfAdjointEigenSolver<HermMatrix> es(descaled, Eigen::EigenvaluesOnly);
    out.min_eigenvalue = std::min(out.min_eigenvalue, es.eigenvalues().minCoeff());
    out.descaled.push_back(std::move(descaled));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

double laplacian_once(const std::function<double(std::complex<double>)>& g,
                      std::complex<double> t, double h) {
  const std::complex<double> dx(h, 0.0), dy(0.0, h);
  double c = g(t);
  return (g(t + dx) + g(t - dx) + g(t + dy) + g(t - dy) - 4.0 * c) / (h * h);
}

}  // namespace

double laplacian_log(const std::function<double(std::complex<double>)>& g,
                     std::complex<double> t) {
  auto logg = [&g](std::complex<double> z) {
    double v = g(z);
    if (!(v > 0.0)) throw InputError("curvature check requires positive g on the grid");
    return std::log(v);
  };
  double h = std::abs(t) / 100.0;
  double coarse = laplacian_once(logg, t, h);
  double fine = laplacian_once(logg, t, h / 2.0);
  // One Richardson step on the O(h^2) stencil; d_t d_tbar = Laplacian/4.
  return (4.0 * fine - coarse) / 3.0 / 4.0;
}

CurvatureReport curvature_check(const std::vector<LogTerm>& terms,
                                const std::vector<std::complex<double>>& grid) {
  if (terms.empty()) throw InputError("curvature check needs at least one term");
  CurvatureReport rep;
  rep.ell = 0;
  bool any = false;
  for (const auto& term : terms) {
    if (std::abs(term.phi(std::complex<double>(0.0, 0.0))) > 0.0) {
      rep.ell = any ? std::max(rep.ell, term.ell) : term.ell;
      any = true;
    }
  }
  if (!any) throw InputError("curvature check: every phi_i vanishes at 0");

  auto g = [&terms](std::complex<double> z) {
    double logsq = 2.0 * std::log(std::abs(z));
    KahanSum acc;
    for (const auto& term : terms)
      acc.add(std::pow(logsq, term.ell) * term.phi(z));
    return acc.value();
  };

  for (auto t : grid) {
    double a = std::abs(t);
    if (!(a > 0.0) || a >= 1.0) throw InputError("curvature grid must lie in 0 < |t| < 1");
    double numeric = laplacian_log(g, t);
    double logsq = 2.0 * std::log(a);
    double principal = -static_cast<double>(rep.ell) / (a * a * logsq * logsq);
    double linv = -std::log(a);
    double envelope = std::abs(numeric - principal) * a * a * linv * linv * linv;
    double rel = (principal != 0.0) ? std::abs(numeric - principal) / std::abs(principal)
                                    : std::abs(numeric - principal);
    rep.rows.push_back({t, numeric, principal, envelope});
    rep.max_envelope = std::max(rep.max_envelope, envelope);
    rep.max_rel_dev = std::max(rep.max_rel_dev, rel);
  }
  return rep;
}

}  // namespace torsion
