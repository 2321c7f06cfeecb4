#include "torsion/series.hpp"

#include <algorithm>

namespace torsion {

int Series::check_order(int order) {
  if (order < 0) throw InputError("series order must be non-negative");
  return order;
}

Series::Series(int order, std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  check_order(order);
  if (coeffs_.size() != static_cast<size_t>(order) + 1)
    throw InputError("series coefficient count does not match order");
}

Series Series::constant(int order, const Rat& c) {
  Series s(order);
  s[0] = c;
  return s;
}

Series Series::identity(int order) {
  Series s(order);
  if (order >= 1) s[1] = Rat(1);
  return s;
}

Series Series::truncated(int order) const {
  check_order(order);
  Series s(std::min(order, this->order()));
  for (int k = 0; k <= s.order(); ++k) s[k] = (*this)[k];
  return s;
}

bool Series::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rat& c) { return c.is_zero(); });
}

Series operator+(const Series& a, const Series& b) {
  Series r(std::min(a.order(), b.order()));
  for (int k = 0; k <= r.order(); ++k) r[k] = a[k] + b[k];
  return r;
}

Series operator-(const Series& a, const Series& b) {
  Series r(std::min(a.order(), b.order()));
  for (int k = 0; k <= r.order(); ++k) r[k] = a[k] - b[k];
  return r;
}

Series operator*(const Series& a, const Series& b) {
  Series r(std::min(a.order(), b.order()));
  for (int i = 0; i <= r.order(); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= r.order(); ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

Series operator*(const Rat& c, const Series& a) {
  Series r(a.order());
  for (int k = 0; k <= r.order(); ++k) r[k] = c * a[k];
  return r;
}

Series operator/(const Series& a, const Series& b) {
  if (b[0].is_zero())
    throw InputError("series division by series with zero constant term");
  Series q(std::min(a.order(), b.order()));
  for (int k = 0; k <= q.order(); ++k) {
    Rat acc = a[k];
    for (int j = 0; j < k; ++j) acc -= q[j] * b[k - j];
    q[k] = acc / b[0];
  }
  return q;
}

Series compose(const Series& a, const Series& b) {
  if (!b[0].is_zero())
    throw InputError("series composition requires inner constant term zero");
  int n = std::min(a.order(), b.order());
  // Horner over the truncated outer coefficients.
  Series r = Series::constant(n, a[n]);
  for (int k = n - 1; k >= 0; --k) {
    r = r * b;
    r[0] += a[k];
  }
  return r;
}

Series exp(const Series& a) {
  if (!a[0].is_zero())
    throw InputError("series exp requires zero constant term");
  Series e(a.order());
  e[0] = Rat(1);
  // (k)e_k = sum_{j=1..k} j a_j e_{k-j}, from e' = a'e.
  for (int k = 1; k <= e.order(); ++k) {
    Rat acc;
    for (int j = 1; j <= k; ++j) acc += Rat(j) * a[j] * e[k - j];
    e[k] = acc / Rat(k);
  }
  return e;
}

Series log(const Series& a) {
  if (a[0] != Rat(1))
    throw InputError("series log requires constant term one");
  Series l(a.order());
  // k a_k = sum_{j=1..k} j l_j a_{k-j}.
  for (int k = 1; k <= l.order(); ++k) {
    Rat acc = Rat(k) * a[k];
    for (int j = 1; j < k; ++j) acc -= Rat(j) * l[j] * a[k - j];
    l[k] = acc / Rat(k);
  }
  return l;
}

Series flip_sign(const Series& a) {
  Series r(a.order());
  for (int k = 0; k <= r.order(); ++k) r[k] = (k % 2 == 0) ? a[k] : -a[k];
  return r;
}

Series todd_series(int order) {
  // (1 - e^{-x})/x = sum_k (-1)^k x^k/(k+1)!, then invert.
  Series denom(order);
  for (int k = 0; k <= order; ++k) {
    Rat c(BigInt(1), factorial(static_cast<unsigned>(k) + 1));
    denom[k] = (k % 2 == 0) ? c : -c;
  }
  return Series::constant(order, Rat(1)) / denom;
}

Series todd_dual_series(int order) {
  // (e^x - 1)/x = sum_k x^k/(k+1)!, then invert.
  Series denom(order);
  for (int k = 0; k <= order; ++k)
    denom[k] = Rat(BigInt(1), factorial(static_cast<unsigned>(k) + 1));
  return Series::constant(order, Rat(1)) / denom;
}

Series bismut_e_series(int order) {
  // (x - sinh x)/x^3 = -sum_{j>=0} x^{2j}/(2j+3)!
  // 2(1 - cosh x)/x^2 = -sum_{j>=0} 2 x^{2j}/(2j+2)!
  Series num(order), den(order);
  for (int j = 0; 2 * j <= order; ++j) {
    num[2 * j] = -Rat(BigInt(1), factorial(static_cast<unsigned>(2 * j) + 3));
    den[2 * j] = -Rat(BigInt(2), factorial(static_cast<unsigned>(2 * j) + 2));
  }
  return num / den;
}

Series todd_quot_series(int order) {
  Series td = todd_series(order + 1);
  Series inv = Series::constant(order + 1, Rat(1)) / td;
  Series shifted(order);
  for (int k = 0; k <= order; ++k) shifted[k] = inv[k + 1];
  return shifted;
}

Series todd_quot_odd_series(int order) {
  Series f = todd_quot_series(order + 1);
  Series r(order);
  // (f(x) - f(-x))/(2x) keeps the odd coefficients of f, shifted down.
  for (int k = 0; k <= order; k += 2) r[k] = f[k + 1];
  return r;
}

Rat scaled_harmonic(long k) {
  if (k < 1) throw InputError("scaled_harmonic requires k >= 1");
  Rat h;
  for (long j = 1; j < k; ++j) h += Rat(BigInt(1), BigInt(j));
  return h / Rat(BigInt(k));
}

}  // namespace torsion
