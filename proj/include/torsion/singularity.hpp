#ifndef TORSION_SINGULARITY_HPP
#define TORSION_SINGULARITY_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "torsion/rational.hpp"

namespace torsion {

// Multivariate polynomial as exponent/coefficient pairs; the germ of a
// holomorphic function at the origin, truncated view.
struct MultiPoly {
  int nvars = 0;
  std::vector<std::pair<std::vector<int>, Rat>> terms;

  void validate() const;
  MultiPoly partial(int var) const;
  int min_total_degree() const;  // throws on zero polynomial
};

// x_0^{a_0} + ... + x_n^{a_n}, each a_i >= 2.
struct BrieskornPham {
  std::vector<long> exponents;
};

// Weighted-homogeneous of weight one for weights in (0, 1/2].
struct QuasiHomogeneous {
  std::vector<Rat> weights;
  MultiPoly poly;  // optional; empty terms means weights-only input
};

// Vertex set of a convenient Newton diagram.
struct NewtonConvenient {
  int nvars = 0;
  std::vector<std::vector<long>> vertices;
};

// Arbitrary polynomial germ, handled by the Macaulay-matrix oracle up to
// the given truncation degree.
struct ExplicitGerm {
  MultiPoly poly;
  int degree_bound = 0;
};

using Germ = std::variant<BrieskornPham, QuasiHomogeneous, NewtonConvenient, ExplicitGerm>;

int germ_nvars(const Germ& g);
std::string germ_kind(const Germ& g);

// ---- Milnor number backends (each independently testable) ----

BigInt milnor_brieskorn_pham(const std::vector<long>& exponents);

// Kouchnirenko's alternating-volume formula for a convenient diagram.
BigInt newton_number(const NewtonConvenient& g);

// dim_Q of O/(J_f + m^{d+1}); monotone non-decreasing in d, stabilizes to
// the Milnor number for isolated singularities.
long local_algebra_dim(const MultiPoly& f, int degree_bound);

// Macaulay oracle with the stabilization check at d and d+2.
BigInt milnor_macaulay(const MultiPoly& f, int degree_bound);

// Dispatches on the germ variant.
BigInt milnor_number(const Germ& g);

// ---- Spectrum and derived invariants ----

// Multiset of rationals in (0, n+1), symmetric about (n+1)/2; size mu.
struct Spectrum {
  std::vector<Rat> entries;  // sorted ascending
};

// Supported for BrieskornPham and QuasiHomogeneous germs only.
Spectrum spectrum(const Germ& g);

enum class SpectrumConvention {
  // Top Hodge piece at alpha in (0,1]; log branch with imaginary part in
  // [0,2pi) gives contribution 1-alpha for alpha in (0,1), 0 at alpha = 1.
  Steenbrink,
  // Mirror normalization: contribution alpha for alpha in (0,1).
  Alt,
};

Rat spectral_genus(const Spectrum& sp, SpectrumConvention conv = SpectrumConvention::Steenbrink);
Rat spectral_genus(const Germ& g, SpectrumConvention conv = SpectrumConvention::Steenbrink);

// Angle theta in [0,1) of the eigenvalue e^{-2 pi i alpha} for each
// spectrum entry, as a sorted multiset.
std::vector<Rat> monodromy_angles(const Germ& g);

}  // namespace torsion

#endif
