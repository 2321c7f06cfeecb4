#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "torsion/series.hpp"

using torsion::BigInt;
using torsion::Rat;
using torsion::Series;

namespace {

// Test-local long division: solves q * den = num coefficientwise without
// going through the library's operator/.
Series naive_div(const Series& num, const Series& den, int order) {
  REQUIRE(!den[0].is_zero());
  Series q(order);
  for (int k = 0; k <= order; ++k) {
    Rat acc = k <= num.order() ? num[k] : Rat(0);
    for (int j = 0; j < k; ++j) acc -= q[j] * den[k - j];
    q[k] = acc / den[0];
  }
  return q;
}

Series exp_neg_x(int order) {
  Series s(order);
  for (int k = 0; k <= order; ++k) {
    Rat c(BigInt(1), torsion::factorial(static_cast<unsigned>(k)));
    s[k] = (k % 2 == 0) ? c : -c;
  }
  return s;
}

Series random_series(std::mt19937& rng, int order, bool unit_constant) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 5);
  Series s(order);
  for (int k = 0; k <= order; ++k) s[k] = Rat(BigInt(num(rng)), BigInt(den(rng)));
  if (unit_constant) s[0] = Rat(1);
  return s;
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double fa, double fm, double fb, double eps, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * eps)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, eps / 2.0, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, eps / 2.0, depth - 1);
}

double integrate01(const std::function<double(double)>& f, double eps) {
  return adaptive_simpson(f, 0.0, 1.0, f(0.0), f(0.5), f(1.0), eps, 40);
}

// -int_0^inf log(rho)/(1+rho)^{k+1} drho, singularities transformed away.
double ak_quadrature(int k) {
  auto piece1 = [k](double v) {
    if (v <= 0.0) return 0.0;
    return -4.0 * v * std::log(v) / std::pow(1.0 + v * v, k + 1);
  };
  auto piece2 = [k](double w) {
    if (w <= 0.0) return 0.0;
    return 4.0 * std::pow(w, 2 * k - 1) * std::log(w) / std::pow(1.0 + w * w, k + 1);
  };
  return integrate01(piece1, 1e-10) + integrate01(piece2, 1e-10);
}

}  // namespace

TEST_CASE("basic arithmetic matches hand examples") {
  Series one_plus = Series::constant(2, Rat(1));
  Series one_minus = one_plus;
  one_plus[1] = Rat(1);
  one_minus[1] = Rat(-1);
  Series prod = one_plus * one_minus;
  CHECK(prod[0] == Rat(1));
  CHECK(prod[1] == Rat(0));
  CHECK(prod[2] == Rat(-1));
}

TEST_CASE("exp and log are inverse at order 8") {
  Series a(8);
  a[1] = Rat(1);  // 1 + x after exp(log(1+x))
  Series one_plus_x = Series::constant(8, Rat(1));
  one_plus_x[1] = Rat(1);
  CHECK(exp(log(one_plus_x)) == one_plus_x);
}

TEST_CASE("division against independent long-division oracle") {
  // x/(1 - e^{-x}): numerator x, denominator expanded from e^{-x}.
  int order = 10;
  Series denom = Series::constant(order + 1, Rat(1)) - exp_neg_x(order + 1);
  // Divide out the x: shift both down one degree.
  Series dshift(order);
  for (int k = 0; k <= order; ++k) dshift[k] = denom[k + 1];
  Series oracle = naive_div(Series::constant(order, Rat(1)), dshift, order);
  CHECK(torsion::todd_series(order) == oracle);
}

TEST_CASE("todd series values") {
  Series td = torsion::todd_series(4);
  CHECK(td[0] == Rat(1));
  CHECK(td[1] == Rat(1, 2));
  CHECK(td[2] == Rat(1, 12));
  CHECK(td[3] == Rat(0));
  CHECK(td[4] == Rat(-1, 720));
  CHECK(torsion::todd_series(0) == Series::constant(0, Rat(1)));
}

TEST_CASE("todd identities through order 12") {
  const int n = 12;
  Series td = torsion::todd_series(n);
  Series x = Series::identity(n);
  CHECK(td * (Series::constant(n, Rat(1)) - exp_neg_x(n)) == x);

  Series dual = torsion::todd_dual_series(n);
  CHECK(dual == torsion::flip_sign(td));
  CHECK(dual == td * exp_neg_x(n));
  CHECK(torsion::todd_dual_series(0) == Series::constant(0, Rat(1)));

  Series dual2 = torsion::todd_dual_series(2);
  CHECK(dual2[0] == Rat(1));
  CHECK(dual2[1] == Rat(-1, 2));
  CHECK(dual2[2] == Rat(1, 12));
}

TEST_CASE("todd(x) todd(-x) is even through order 10") {
  Series p = torsion::todd_series(10) * torsion::flip_sign(torsion::todd_series(10));
  for (int k = 1; k <= 10; k += 2) CHECK(p[k] == Rat(0));
}

TEST_CASE("bismut E series") {
  Series e = torsion::bismut_e_series(10);
  CHECK(e[0] == Rat(1, 6));
  CHECK(e[2] == Rat(-1, 180));
  for (int k = 1; k <= 9; k += 2) CHECK(e[k] == Rat(0));

  // Independent oracle: direct division of the defining even series.
  Series num(10), den(10);
  for (int j = 0; 2 * j <= 10; ++j) {
    num[2 * j] = -Rat(BigInt(1), torsion::factorial(2 * static_cast<unsigned>(j) + 3));
    den[2 * j] = -Rat(BigInt(2), torsion::factorial(2 * static_cast<unsigned>(j) + 2));
  }
  CHECK(e == naive_div(num, den, 10));
}

TEST_CASE("f_minus and the E identity") {
  Series fm = torsion::todd_quot_odd_series(10);
  CHECK(fm[0] == Rat(1, 6));
  for (int k = 1; k <= 9; k += 2) CHECK(fm[k] == Rat(0));

  Series td = torsion::todd_series(10);
  CHECK(torsion::bismut_e_series(10) == fm * td * torsion::flip_sign(td));
}

TEST_CASE("todd quotient series values") {
  // Td^{-1} = 1 - x/2 + x^2/6 - x^3/24 + ...  so f = -1/2 + x/6 - x^2/24.
  Series f = torsion::todd_quot_series(4);
  CHECK(f[0] == Rat(-1, 2));
  CHECK(f[1] == Rat(1, 6));
  CHECK(f[2] == Rat(-1, 24));
}

TEST_CASE("ring axioms on random series") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 25; ++trial) {
    Series a = random_series(rng, 9, false);
    Series b = random_series(rng, 9, false);
    Series c = random_series(rng, 9, false);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("composition inverts exp - 1 against log(1 + x)") {
  const int n = 9;
  Series one_plus_x = Series::constant(n, Rat(1));
  one_plus_x[1] = Rat(1);
  Series log1p = log(one_plus_x);
  Series expm1 = exp(Series::identity(n)) - Series::constant(n, Rat(1));
  CHECK(compose(log1p, expm1) == Series::identity(n));
  CHECK(compose(expm1, log1p) == Series::identity(n));
  // Substituting -x reproduces flip_sign.
  Series minus_x(n);
  minus_x[1] = Rat(-1);
  Series td = torsion::todd_series(n);
  CHECK(compose(td, minus_x) == torsion::flip_sign(td));
}

TEST_CASE("division and log/exp roundtrips on random units") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    Series a = random_series(rng, 8, true);
    Series b = random_series(rng, 8, true);
    CHECK((a * b) / b == a);
    CHECK(exp(log(a)) == a);
  }
}

TEST_CASE("mismatched orders combine at the minimum") {
  Series a = Series::constant(8, Rat(1));
  Series b = Series::constant(3, Rat(2));
  CHECK((a + b).order() == 3);
  CHECK((a * b).order() == 3);
}

TEST_CASE("precondition violations throw") {
  Series z(4);  // zero constant term
  CHECK_THROWS_AS(Series::constant(4, Rat(1)) / z, torsion::InputError);
  Series two = Series::constant(4, Rat(2));
  CHECK_THROWS_AS(log(two), torsion::InputError);
  CHECK_THROWS_AS(exp(two), torsion::InputError);
  CHECK_THROWS_AS(compose(two, two), torsion::InputError);
}

TEST_CASE("scaled harmonic sequence") {
  CHECK(torsion::scaled_harmonic(1) == Rat(0));
  CHECK(torsion::scaled_harmonic(2) == Rat(1, 2));
  CHECK(torsion::scaled_harmonic(3) == Rat(1, 2));
  CHECK(torsion::scaled_harmonic(4) == Rat(11, 24));
  CHECK_THROWS_AS(torsion::scaled_harmonic(0), torsion::InputError);
}

TEST_CASE("scaled harmonic matches quadrature oracle for k <= 6") {
  for (int k = 1; k <= 6; ++k) {
    double closed = torsion::scaled_harmonic(k).to_double();
    double integral = ak_quadrature(k);
    CHECK(std::abs(closed - integral) < 1e-6);
  }
}
