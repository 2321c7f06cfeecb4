#ifndef TORSION_EXPONENTS_HPP
#define TORSION_EXPONENTS_HPP

#include <map>
#include <vector>

#include "torsion/rational.hpp"

namespace torsion {

// Eigenvalue angles of the semisimple monodromy on the top limiting Hodge
// piece, per cohomological degree q = 0..n.  Angles are rationals in [0,1);
// quasi-unipotency makes irrational angles malformed input.
struct MonodromySpec {
  int n = 0;
  std::map<int, std::vector<Rat>> per_degree;

  void validate() const {
    if (n < 0) throw InputError("fiber dimension must be non-negative");
    for (const auto& [q, angles] : per_degree) {
      if (q < 0 || q > n) throw InputError("monodromy degree out of range");
      for (const auto& a : angles)
        if (a.sign() < 0 || a >= Rat(1))
          throw InputError("monodromy angle outside [0,1): " + a.str());
    }
  }
};

// Colengths of the direct-image comparison at t = 0, divided by deg mu.
struct ColengthSpec {
  long deg_mu = 1;
  std::map<int, long> colengths;

  void validate() const {
    if (deg_mu < 1) throw InputError("deg mu must be positive");
    for (const auto& [q, c] : colengths) {
      if (q < 0) throw InputError("colength degree out of range");
      if (c < 0) throw InputError("colengths are non-negative");
    }
  }
};

// delta^q = trace of (2 pi i)^{-1} log M_s in degree q = sum of the angles.
inline Rat delta_q(const MonodromySpec& spec, int q) {
  spec.validate();
  if (q < 0 || q > spec.n) throw InputError("delta_q degree out of range");
  Rat total;
  auto it = spec.per_degree.find(q);
  if (it != spec.per_degree.end())
    for (const auto& a : it->second) total += a;
  return total;
}

// epsilon = sum_q (-1)^q delta^q.
inline Rat epsilon_pi(const MonodromySpec& spec) {
  spec.validate();
  Rat total;
  for (int q = 0; q <= spec.n; ++q) {
    Rat d = delta_q(spec, q);
    total += (q % 2 == 0) ? d : -d;
  }
  return total;
}

// delta = (1/deg mu) sum_q (-1)^q colength_q.
inline Rat delta_from_colength(const ColengthSpec& spec) {
  spec.validate();
  Rat total;
  for (const auto& [q, c] : spec.colengths) {
    Rat term(BigInt(c), BigInt(spec.deg_mu));
    total += (q % 2 == 0) ? term : -term;
  }
  return total;
}

}  // namespace torsion

#endif
