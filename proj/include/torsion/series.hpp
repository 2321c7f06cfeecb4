#ifndef TORSION_SERIES_HPP
#define TORSION_SERIES_HPP

#include <vector>

#include "torsion/rational.hpp"

namespace torsion {

// Truncated univariate formal power series over Rat.  `order` is the
// truncation degree, inclusive; coefficients beyond it do not exist.
// Binary operations combine at the minimum of the two orders so that a
// result never claims more precision than its inputs.
class Series {
public:
  explicit Series(int order) : coeffs_(static_cast<size_t>(check_order(order)) + 1) {}
  Series(int order, std::vector<Rat> coeffs);

  static Series constant(int order, const Rat& c);
  static Series identity(int order);  // the series x

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rat& operator[](int k) const { return coeffs_.at(static_cast<size_t>(k)); }
  Rat& operator[](int k) { return coeffs_.at(static_cast<size_t>(k)); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  Series truncated(int order) const;
  bool is_zero() const;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(const Rat& c, const Series& a);
  friend Series operator/(const Series& a, const Series& b);
  friend bool operator==(const Series& a, const Series& b) {
    return a.coeffs_ == b.coeffs_;
  }

private:
  static int check_order(int order);
  std::vector<Rat> coeffs_;
};

// a(b(x)); requires b(0) = 0.
Series compose(const Series& a, const Series& b);

// exp(a); requires a(0) = 0.
Series exp(const Series& a);

// log(a); requires a(0) = 1.
Series log(const Series& a);

// x -> -x.
Series flip_sign(const Series& a);

// Todd series x/(1 - e^{-x}) = 1 + x/2 + x^2/12 - x^4/720 + ...
Series todd_series(int order);

// Dual Todd series x/(e^x - 1); equals todd_series with x -> -x.
Series todd_dual_series(int order);

// Bismut E series (x - sinh x) / (2x(1 - cosh x)); even, E(0) = 1/6.
Series bismut_e_series(int order);

// f(x) = (Td(x)^{-1} - 1)/x, the fiberwise factor of the alpha integrand.
Series todd_quot_series(int order);

// f_-(x) = (f(x) - f(-x))/(2x); even, constant term 1/6.
Series todd_quot_odd_series(int order);

// a_1 = 0, a_k = (1/k) sum_{j<k} 1/j.  Coefficient sequence of the
// Bott-Chern comparison series; equals -int_0^inf log(rho)/(1+rho)^{k+1} drho.
Rat scaled_harmonic(long k);

}  // namespace torsion

#endif
