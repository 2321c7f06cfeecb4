#include "torsion/rational.hpp"

#include <ostream>

namespace torsion {

void Rat::normalize() {
  if (den_.is_zero()) throw InputError("rational with zero denominator");
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rat Rat::parse(std::string_view s) {
  if (s.empty()) throw InputError("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rat(BigInt(std::string(s)));
    }
    BigInt num{std::string(s.substr(0, slash))};
    BigInt den{std::string(s.substr(slash + 1))};
    return Rat(std::move(num), std::move(den));
  } catch (const std::exception&) {
    throw InputError("malformed rational literal: " + std::string(s));
  }
}

Rat Rat::pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base.is_zero()) {
    if (e < 0) throw InputError("zero to a negative power");
    return Rat(0);
  }
  bool invert = e < 0;
  unsigned long n = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Rat acc(1);
  Rat b = base;
  while (n) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  if (invert) return Rat(1) / acc;
  return acc;
}

BigInt Rat::floor() const {
  BigInt q = num_ / den_;
  if (num_.sign() < 0 && q * den_ != num_) q -= 1;
  return q;
}

double Rat::to_double() const {
  if (num_.is_zero()) return 0.0;
  // Shift both operands down so the conversion cannot overflow even when
  // numerator and denominator are individually huge.
  BigInt n = num_ < 0 ? BigInt(-num_) : num_;
  BigInt d = den_;
  auto bits = [](const BigInt& v) -> long {
    return v.is_zero() ? 0 : static_cast<long>(boost::multiprecision::msb(v)) + 1;
  };
  long excess = std::max(bits(n), bits(d)) - 512;
  if (excess > 0) {
    n >>= excess;
    d >>= excess;
    if (d.is_zero()) d = 1;
  }
  double v = n.convert_to<double>() / d.convert_to<double>();
  return num_.sign() < 0 ? -v : v;
}

std::string Rat::str() const {
  std::string s = num_.str();
  if (den_ != 1) {
    s += "/";
    s += den_.str();
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  return boost::multiprecision::abs(a / boost::multiprecision::gcd(a, b) * b);
}

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace torsion
