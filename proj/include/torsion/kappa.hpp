#ifndef TORSION_KAPPA_HPP
#define TORSION_KAPPA_HPP

#include <string>
#include <vector>

#include "torsion/chern.hpp"
#include "torsion/singularity.hpp"

namespace torsion {

enum class EClassConvention {
  EvenSubstitution,  // default: x^2 -> -c_2, constant term E(0)
  AdditiveRoots,     // sum over the two Chern roots, doubling every term
};

// kappa = -rank * sum_x ( mu(x)/(n+2)! - spectral_genus(x) ) for a central
// fiber with isolated hypersurface singularities in dimension n.
Rat kappa_ihs(const std::vector<Germ>& germs, long rank, int n,
              SpectrumConvention conv = SpectrumConvention::Steenbrink);

// kappa = rank * (alpha + epsilon) when the twist is topologically trivial
// near the singular locus.
Rat kappa_toptrivial(const Rat& alpha, const Rat& epsilon, long rank);

// Configuration for a family that is locally z_0 z_1 near its critical
// locus Sigma: bundles over Sigma plus the integration functional.
struct QuadraticRank2Config {
  int dim_sigma = 0;
  BundleData tangent;  // T Sigma, rank = dim_sigma
  BundleData normal;   // rank 2, c_1 = 0
  BundleData xi;       // the twist
  BundleData hyperplane;  // polarization line bundle H
  IntersectionData intersections;
  long m = 0;  // twist by H^m

  void validate() const;
};

// kappa = -(1/2) Int_Sigma Td(T Sigma) E(N) ch(K_Sigma ox xi ox H^m).
// series_order < 0 picks the default truncation 2*dim Sigma + 2; anything
// >= dim Sigma gives the same exact answer.
Rat kappa_quadratic(const QuadraticRank2Config& cfg,
                    EClassConvention conv = EClassConvention::EvenSubstitution,
                    int series_order = -1);

// kappa = (alpha_f + beta)/deg mu through a semi-stable reduction.
Rat kappa_semistable(const Rat& alpha_f, const Rat& beta, long deg_mu);

// kappa = alpha + delta.
Rat kappa_decomposition(const Rat& alpha, const Rat& delta);

// One boundary stratum of the resolved Gauss map: the pushed-forward class
// q*{Td(TX) ch(K_X(xi))} restricted to the stratum, the stratum's
// integration functional, and the name of the degree-one generator playing
// c_1(H^dual).
struct AlphaStratum {
  GradedElt cls;
  IntersectionData data;
  std::string hdual_gen;
};

// alpha = sum over strata of Int f(c_1(H^dual)) * cls with
// f(x) = (Td(x)^{-1} - 1)/x.
Rat alpha_eval(const std::vector<AlphaStratum>& strata);

// Dense polynomial over Q in the twist degree m.
struct RatPoly {
  std::vector<Rat> coeffs;  // coeffs[k] multiplies m^k; normalized, no trailing zeros

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Rat eval(const Rat& x) const;
};

// Interpolates m -> kappa_quadratic(cfg with twist H^m) from the given
// sample points and certifies degree <= dim Sigma on 2*dim Sigma + 4 points.
RatPoly kappa_polynomial_in_m(const QuadraticRank2Config& cfg,
                              const std::vector<long>& m_points,
                              EClassConvention conv = EClassConvention::EvenSubstitution);

}  // namespace torsion

#endif
