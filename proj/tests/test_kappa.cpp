#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "torsion/exponents.hpp"
#include "torsion/kappa.hpp"

using namespace torsion;

namespace {

// Genus-g curve configuration: generators t = c1(T), x = c1(det xi),
// h = c1(H); ranks and degrees as given.
QuadraticRank2Config curve_config(long genus, long rank_xi, long deg_xi, long deg_h,
                                  long m) {
  RingCtx ctx(1, {{"t", 1}, {"x", 1}, {"h", 1}});
  QuadraticRank2Config cfg;
  cfg.dim_sigma = 1;
  cfg.m = m;

  cfg.tangent.ctx = ctx;
  cfg.tangent.name = "T";
  cfg.tangent.rank = 1;
  cfg.tangent.chern = {GradedElt::generator(ctx, "t")};

  cfg.normal.ctx = ctx;
  cfg.normal.name = "N";
  cfg.normal.rank = 2;
  cfg.normal.chern = {GradedElt::zero(ctx)};

  cfg.xi.ctx = ctx;
  cfg.xi.name = "xi";
  cfg.xi.rank = static_cast<int>(rank_xi);
  cfg.xi.chern = {GradedElt::generator(ctx, "x")};

  cfg.hyperplane.ctx = ctx;
  cfg.hyperplane.name = "H";
  cfg.hyperplane.rank = 1;
  cfg.hyperplane.chern = {GradedElt::generator(ctx, "h")};

  cfg.intersections.ctx = ctx;
  cfg.intersections.values[{1, 0, 0}] = Rat(2 - 2 * genus);
  cfg.intersections.values[{0, 1, 0}] = Rat(deg_xi);
  cfg.intersections.values[{0, 0, 1}] = Rat(deg_h);
  return cfg;
}

Rat closed_form_kappa(long genus, long rank_xi, long deg_xi, long deg_h, long m) {
  // 2 kappa = -E(0) { deg(xi(m)|_Sigma) + r(xi)(g-1) }, E(0) = 1/6.
  Rat deg_twisted = Rat(deg_xi) + Rat(m) * Rat(rank_xi) * Rat(deg_h);
  return Rat(-1, 12) * (deg_twisted + Rat(rank_xi) * Rat(genus - 1));
}

}  // namespace

TEST_CASE("kappa for isolated hypersurface singularities") {
  CHECK(kappa_ihs({BrieskornPham{{2, 2}}}, 1, 1) == Rat(-1, 6));
  CHECK(kappa_ihs({BrieskornPham{{2, 3}}}, 1, 1) == Rat(-1, 6));
  CHECK(kappa_ihs({BrieskornPham{{2, 4}}}, 1, 1) == Rat(-1, 4));
  CHECK(kappa_ihs({BrieskornPham{{2, 2, 2}}}, 1, 2) == Rat(-1, 24));
  // Additivity over several singular points, scaled by rank.
  CHECK(kappa_ihs({BrieskornPham{{2, 2}}, BrieskornPham{{2, 3}}}, 3, 1) == Rat(-1));
  // Dimension bookkeeping.
  CHECK_THROWS_AS(kappa_ihs({BrieskornPham{{2, 2}}}, 1, 2), InputError);
}

TEST_CASE("kappa negativity for curve germs") {
  std::vector<std::vector<long>> corpus = {{2, 2}, {2, 3}, {2, 4}, {3, 3}, {3, 4},
                                           {4, 5}, {5, 5}, {2, 9}, {6, 7}, {7, 9}};
  for (const auto& exps : corpus) {
    Rat k = kappa_ihs({BrieskornPham{exps}}, 1, 1);
    CHECK(k < Rat(0));
  }
}

TEST_CASE("kappa_ihs denominator bound") {
  std::vector<std::vector<long>> corpus = {{2, 3}, {3, 4}, {2, 5}, {2, 3, 4}};
  for (const auto& exps : corpus) {
    int n = static_cast<int>(exps.size()) - 1;
    long rank = 2;
    Germ g = BrieskornPham{exps};
    Rat k = kappa_ihs({g}, rank, n);
    BigInt denbound = BigInt(rank) * factorial(static_cast<unsigned>(n) + 2);
    for (const auto& a : spectrum(g).entries) denbound = lcm(denbound, a.den());
    CHECK(denbound % k.den() == 0);
  }
}

TEST_CASE("kappa for topologically trivial twists") {
  CHECK(kappa_toptrivial(Rat(-1, 6), Rat(0), 1) == Rat(-1, 6));
  CHECK(kappa_toptrivial(Rat(0), Rat(1, 2), 3) == Rat(3, 2));
  // Unipotent monodromy forces epsilon = 0, so kappa = alpha exactly.
  MonodromySpec unipotent;
  unipotent.n = 1;
  unipotent.per_degree[0] = {Rat(0), Rat(0)};
  CHECK(kappa_toptrivial(Rat(-7, 5), epsilon_pi(unipotent), 1) == Rat(-7, 5));
}

TEST_CASE("quadratic rank-two kappa against the closed form") {
  // The two pinned cases first.
  CHECK(kappa_quadratic(curve_config(1, 1, 0, 1, 0)) == Rat(0));  // elliptic
  CHECK(kappa_quadratic(curve_config(0, 1, 0, 1, 0)) == Rat(1, 12));

  std::mt19937 rng(123);
  std::uniform_int_distribution<long> genus(0, 5), rk(1, 4), deg(-4, 6), m(0, 5);
  for (int trial = 0; trial < 10; ++trial) {
    long g = genus(rng), r = rk(rng), dx = deg(rng), dh = deg(rng), mm = m(rng);
    CHECK(kappa_quadratic(curve_config(g, r, dx, dh, mm)) ==
          closed_form_kappa(g, r, dx, dh, mm));
  }
}

TEST_CASE("quadratic kappa on empty critical locus") {
  RingCtx ctx(0, {});
  QuadraticRank2Config cfg;
  cfg.dim_sigma = 0;
  cfg.tangent.ctx = ctx;
  cfg.tangent.name = "T";
  cfg.tangent.rank = 0;
  cfg.normal.ctx = ctx;
  cfg.normal.name = "N";
  cfg.normal.rank = 2;
  cfg.xi.ctx = ctx;
  cfg.xi.name = "xi";
  cfg.xi.rank = 1;
  cfg.hyperplane.ctx = ctx;
  cfg.hyperplane.name = "H";
  cfg.hyperplane.rank = 1;
  cfg.intersections.ctx = ctx;
  CHECK(kappa_quadratic(cfg) == Rat(0));
}

TEST_CASE("additive-roots convention doubles the curve kappa") {
  auto cfg = curve_config(3, 2, 1, 2, 1);
  CHECK(kappa_quadratic(cfg, EClassConvention::AdditiveRoots) ==
        Rat(2) * kappa_quadratic(cfg));
}

TEST_CASE("semistable ratio and the decomposition identities") {
  CHECK(kappa_semistable(Rat(7, 3), Rat(0), 1) == Rat(7, 3));
  CHECK(kappa_semistable(Rat(1, 2), Rat(1, 2), 6) == Rat(1, 6));
  CHECK_THROWS_AS(kappa_semistable(Rat(1), Rat(1), 0), InputError);

  CHECK(kappa_decomposition(Rat(-1, 6), Rat(0)) == Rat(-1, 6));
  CHECK(kappa_decomposition(Rat(0), Rat(3, 2)) == Rat(3, 2));

  // kappa = alpha + delta and delta = (alpha_f + beta)/deg mu - alpha agree
  // as scalar identities on random rational inputs.
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9), dm(1, 8);
  for (int trial = 0; trial < 50; ++trial) {
    Rat alpha(num(rng), den(rng)), alpha_f(num(rng), den(rng)), beta(num(rng), den(rng));
    long deg_mu = dm(rng);
    Rat kappa = kappa_semistable(alpha_f, beta, deg_mu);
    Rat delta = kappa - alpha;
    CHECK(kappa_decomposition(alpha, delta) == kappa);
  }
}

TEST_CASE("alpha_eval basics") {
  CHECK(alpha_eval({}) == Rat(0));

  // One-point stratum: only the constant term of the quotient series pairs
  // with the class, so alpha = -c/2 for cls = c * 1.
  RingCtx pt(0, {{"u", 1}});
  AlphaStratum s;
  s.cls = Rat(6) * GradedElt::unit(pt);
  s.data.ctx = pt;
  s.data.values[{0}] = Rat(1);
  s.hdual_gen = "u";
  CHECK(alpha_eval({s}) == Rat(-3));
}

TEST_CASE("alpha_eval reproduces the quadratic kappa") {
  // Stratum = the exceptional projective bundle E over the curve Sigma:
  // generators u = c1(H^dual) and the pullbacks of t, x, h.  Fiberwise
  // u^2 = 0, and the functional is the pushforward to Sigma followed by
  // integration, normalized so that u * (pullback) integrates to 1/2 times
  // the base integral (the resolved family hits the hyperplane class with
  // multiplicity two along the doubled exceptional divisor).
  std::mt19937 rng(321);
  std::uniform_int_distribution<long> genus(0, 5), rk(1, 4), deg(-4, 6), m(0, 5);
  for (int trial = 0; trial < 10; ++trial) {
    long g = genus(rng), r = rk(rng), dx = deg(rng), dh = deg(rng), mm = m(rng);

    RingCtx ctx(2, {{"u", 1}, {"t", 1}, {"x", 1}, {"h", 1}});
    // q*{Td(TX) ch(K_X(xi(m)))} restricted to E, pulled back from Sigma:
    // Td(T Sigma) Td(N) e^{-c1 T Sigma} ch(xi) e^{m c1 H}; Td(N) = 1 here
    // since c1(N) = 0 and degree-2 base classes vanish on a curve.
    BundleData tangent{"T", 1, ctx, {GradedElt::generator(ctx, "t")}};
    BundleData xi{"xi", static_cast<int>(r), ctx, {GradedElt::generator(ctx, "x")}};
    GradedElt cls = multiplicative_genus(todd_series(2), tangent) *
                    exp_nilpotent(Rat(-1) * GradedElt::generator(ctx, "t")) *
                    chern_character(xi) *
                    exp_nilpotent(Rat(mm) * GradedElt::generator(ctx, "h"));

    AlphaStratum s;
    s.cls = cls;
    s.hdual_gen = "u";
    s.data.ctx = ctx;
    // u = c1(H^dual) restricts to minus the fiberwise hyperplane class, and
    // the family meets the exceptional divisor with multiplicity two, so
    // u * pullback(deg-1 class) pairs to -(1/2) * base integral; u^2 and
    // pure pullback top classes die on the curve.
    s.data.values[Mono{1, 1, 0, 0}] = Rat(-1, 2) * Rat(2 - 2 * g);
    s.data.values[Mono{1, 0, 1, 0}] = Rat(-1, 2) * Rat(dx);
    s.data.values[Mono{1, 0, 0, 1}] = Rat(-1, 2) * Rat(dh);

    CHECK(alpha_eval({s}) == kappa_quadratic(curve_config(g, r, dx, dh, mm)));
  }
}

TEST_CASE("kappa polynomial in the twist degree") {
  auto cfg = curve_config(2, 3, 1, 4, 0);
  RatPoly p = kappa_polynomial_in_m(cfg, {0, 1, 2, 3});
  CHECK(p.degree() <= 1);
  // Leading coefficient -E(0) r deg H / 2 = -r deg H / 12.
  CHECK(p.coeffs.size() == 2);
  CHECK(p.coeffs[1] == Rat(-3 * 4, 12));
  for (long m = 0; m <= 8; ++m) {
    auto at = cfg;
    at.m = m;
    CHECK(p.eval(Rat(m)) == kappa_quadratic(at));
  }
  CHECK_THROWS_AS(kappa_polynomial_in_m(cfg, {0, 1}), InputError);  // too few
  CHECK_THROWS_AS(kappa_polynomial_in_m(cfg, {0, 1, -2, 3}), InputError);

  // Empty Sigma: the zero polynomial.
  RingCtx pt(0, {});
  QuadraticRank2Config empty;
  empty.dim_sigma = 0;
  empty.tangent = {"T", 0, pt, {}};
  empty.normal = {"N", 2, pt, {}};
  empty.xi = {"xi", 1, pt, {}};
  empty.hyperplane = {"H", 1, pt, {}};
  empty.intersections.ctx = pt;
  RatPoly z = kappa_polynomial_in_m(empty, {0, 1, 2});
  CHECK(z.degree() == 0);
  CHECK(z.coeffs[0] == Rat(0));
}
