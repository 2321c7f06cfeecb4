#ifndef TORSION_RATIONAL_HPP
#define TORSION_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <type_traits>
#include <iosfwd>
#include <string>
#include <string_view>

#include "torsion/errors.hpp"

namespace torsion {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar.  Always reduced, denominator always positive.
// Every class computation in the library runs over this type; floating
// point appears only in the numeric fitting / quadrature code.
class Rat {
public:
  Rat() : num_(0), den_(1) {}
  template <typename T, std::enable_if_t<std::is_integral_v<T>, int> = 0>
  Rat(T n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  explicit Rat(BigInt n) : num_(std::move(n)), den_(1) {}
  Rat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  // Accepts "p", "-p", "p/q".
  static Rat parse(std::string_view s);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rat& operator+=(const Rat& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rat& operator-=(const Rat& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rat& operator*=(const Rat& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rat& operator/=(const Rat& o) {
    if (o.num_.is_zero()) throw InputError("rational division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  Rat abs() const { return sign() < 0 ? -*this : *this; }

  // Integer power, negative exponents allowed for nonzero values.
  static Rat pow(const Rat& base, long e);

  // Rounds toward -infinity.
  BigInt floor() const;

  double to_double() const;
  std::string str() const;  // "p" or "p/q"

private:
  void normalize();

  BigInt num_;
  BigInt den_;  // > 0
};

inline Rat abs(const Rat& a) { return a.abs(); }

std::ostream& operator<<(std::ostream& os, const Rat& r);

BigInt lcm(const BigInt& a, const BigInt& b);

// Exact factorial, used by the k!-normalized class formulas.
BigInt factorial(unsigned n);

}  // namespace torsion

namespace Eigen {

// Rat plugs into Eigen dense containers; the exact elimination routines in
// this project run on Matrix<Rat, Dynamic, Dynamic>.
template <>
struct NumTraits<torsion::Rat> : GenericNumTraits<torsion::Rat> {
  typedef torsion::Rat Real;
  typedef torsion::Rat NonInteger;
  typedef torsion::Rat Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 30,
    MulCost = 30,
  };
  static inline Real epsilon() { return torsion::Rat(0); }
  static inline Real dummy_precision() { return torsion::Rat(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif
