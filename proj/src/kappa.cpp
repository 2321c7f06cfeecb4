#include "torsion/kappa.hpp"

#include <algorithm>
#include <set>

namespace torsion {

Rat kappa_ihs(const std::vector<Germ>& germs, long rank, int n, SpectrumConvention conv) {
  if (rank < 1) throw InputError("kappa_ihs: rank must be positive");
  if (n < 1) throw InputError("kappa_ihs: fiber dimension must be positive");
  const BigInt fact = factorial(static_cast<unsigned>(n) + 2);
  Rat total;
  for (const auto& g : germs) {
    if (germ_nvars(g) != n + 1)
      throw InputError("kappa_ihs: germ has " + std::to_string(germ_nvars(g)) +
                       " variables, expected " + std::to_string(n + 1));
    Rat mu(milnor_number(g));
    total += mu / Rat(fact) - spectral_genus(g, conv);
  }
  return Rat(-rank) * total;
}

Rat kappa_toptrivial(const Rat& alpha, const Rat& epsilon, long rank) {
  if (rank < 1) throw InputError("kappa_toptrivial: rank must be positive");
  return Rat(rank) * (alpha + epsilon);
}

void QuadraticRank2Config::validate() const {
  if (dim_sigma < 0) throw InputError("dim Sigma must be non-negative");
  const RingCtx& ctx = intersections.ctx;
  if (ctx.dim != dim_sigma)
    throw InputError("ring dimension must equal dim Sigma");
  for (const BundleData* b : {&tangent, &normal, &xi, &hyperplane}) {
    b->validate();
    if (b->ctx != ctx) throw InputError("bundle '" + b->name + "' in wrong ring");
  }
  if (normal.rank != 2) throw InputError("normal bundle must have rank two");
  if (!normal.chern_class(1).is_zero())
    throw InputError("normal bundle must have c_1 = 0");
  if (hyperplane.rank != 1) throw InputError("polarization must be a line bundle");
  if (tangent.rank != dim_sigma)
    throw InputError("tangent bundle rank must equal dim Sigma");
  intersections.validate();
}

Rat kappa_quadratic(const QuadraticRank2Config& cfg, EClassConvention conv,
                    int series_order) {
  cfg.validate();
  const int dim = cfg.dim_sigma;
  if (dim == 0 && cfg.intersections.values.empty()) return Rat(0);  // empty Sigma

  const int order = std::max(series_order >= 0 ? series_order : 2 * dim + 2, 1);
  GradedElt td = multiplicative_genus(todd_series(order), cfg.tangent);
  GradedElt e_class = (conv == EClassConvention::EvenSubstitution)
                          ? even_series_class(bismut_e_series(order), cfg.normal)
                          : even_series_class_additive(bismut_e_series(order), cfg.normal);
  // ch(K_Sigma) = e^{-c_1(T Sigma)}.
  GradedElt ch_k = exp_nilpotent(Rat(-1) * cfg.tangent.chern_class(1));
  GradedElt ch_xi = chern_character(cfg.xi);
  GradedElt ch_hm = exp_nilpotent(Rat(cfg.m) * cfg.hyperplane.chern_class(1));
  GradedElt integrand = td * e_class * ch_k * ch_xi * ch_hm;
  return Rat(-1, 2) * integrate(integrand, cfg.intersections);
}

Rat kappa_semistable(const Rat& alpha_f, const Rat& beta, long deg_mu) {
  if (deg_mu < 1) throw InputError("kappa_semistable: deg mu must be positive");
  return (alpha_f + beta) / Rat(deg_mu);
}

Rat kappa_decomposition(const Rat& alpha, const Rat& delta) { return alpha + delta; }

Rat alpha_eval(const std::vector<AlphaStratum>& strata) {
  Rat total;
  for (const auto& s : strata) {
    const RingCtx& ctx = s.data.ctx;
    if (s.cls.ctx() != ctx)
      throw InputError("alpha_eval: class and functional contexts differ");
    int idx = ctx.gen_index(s.hdual_gen);
    if (ctx.gens[static_cast<size_t>(idx)].degree != 1)
      throw InputError("alpha_eval: H-dual generator must have degree one");
    GradedElt u = GradedElt::generator(ctx, s.hdual_gen);
    GradedElt quot = series_at(todd_quot_series(std::max(ctx.dim, 1)), u);
    total += integrate(quot * s.cls, s.data);
  }
  return total;
}

Rat RatPoly::eval(const Rat& x) const {
  Rat acc;
  for (size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
  return acc;
}

namespace {

// Lagrange interpolation through (x_i, y_i), exact over Q.
RatPoly lagrange(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  const size_t n = xs.size();
  std::vector<Rat> acc(n);  // accumulated coefficients
  for (size_t i = 0; i < n; ++i) {
    // Basis numerator prod_{j != i} (x - x_j) as coefficients.
    std::vector<Rat> basis = {Rat(1)};
    Rat denom(1);
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      denom *= xs[i] - xs[j];
      std::vector<Rat> next(basis.size() + 1);
      for (size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= xs[j] * basis[k];
      }
      basis = std::move(next);
    }
    Rat scale = ys[i] / denom;
    for (size_t k = 0; k < basis.size(); ++k) acc[k] += scale * basis[k];
  }
  while (acc.size() > 1 && acc.back().is_zero()) acc.pop_back();
  return RatPoly{std::move(acc)};
}

}  // namespace

RatPoly kappa_polynomial_in_m(const QuadraticRank2Config& cfg,
                              const std::vector<long>& m_points,
                              EClassConvention conv) {
  cfg.validate();
  const int dim = cfg.dim_sigma;
  std::set<long> uniq;
  for (long m : m_points) {
    if (m < 0) throw InputError("twist degrees must be non-negative");
    uniq.insert(m);
  }
  if (static_cast<int>(uniq.size()) < dim + 2)
    throw InputError("need at least dim Sigma + 2 distinct twist degrees");

  // Extend to 2*dim + 4 certification points past the supplied range.
  std::vector<long> pts(uniq.begin(), uniq.end());
  long next = pts.back() + 1;
  while (static_cast<int>(pts.size()) < 2 * dim + 4) pts.push_back(next++);

  auto kappa_at = [&](long m) {
    QuadraticRank2Config c = cfg;
    c.m = m;
    return kappa_quadratic(c, conv);
  };

  std::vector<Rat> xs, ys;
  for (int i = 0; i <= dim; ++i) {
    xs.emplace_back(BigInt(pts[static_cast<size_t>(i)]));
    ys.push_back(kappa_at(pts[static_cast<size_t>(i)]));
  }
  RatPoly p = lagrange(xs, ys);
  if (p.degree() > dim)
    throw InvariantError("kappa(m) interpolates above degree dim Sigma");
  for (long m : pts) {
    if (p.eval(Rat(BigInt(m))) != kappa_at(m))
      throw InvariantError("kappa(m) is not polynomial of degree <= dim Sigma");
  }
  return p;
}

}  // namespace torsion
