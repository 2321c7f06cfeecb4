#ifndef TORSION_CHERN_HPP
#define TORSION_CHERN_HPP

#include <map>
#include <string>
#include <vector>

#include "torsion/rational.hpp"
#include "torsion/series.hpp"

namespace torsion {

// Ambient graded ring: named generators with degrees, truncated above `dim`.
struct RingCtx {
  struct Gen {
    std::string name;
    int degree = 1;
  };

  int dim = 0;
  std::vector<Gen> gens;

  RingCtx() = default;
  RingCtx(int dim, std::vector<Gen> gens);

  int gen_index(const std::string& name) const;  // throws InputError if absent

  friend bool operator==(const RingCtx& a, const RingCtx& b);
  friend bool operator!=(const RingCtx& a, const RingCtx& b) { return !(a == b); }
};

// Exponent vector over the context generators.
using Mono = std::vector<int>;

// Element of the truncated graded ring: monomial -> coefficient, with zero
// coefficients never stored and total degree bounded by ctx.dim.
class GradedElt {
public:
  GradedElt() = default;
  explicit GradedElt(RingCtx ctx) : ctx_(std::move(ctx)) {}

  static GradedElt zero(const RingCtx& ctx) { return GradedElt(ctx); }
  static GradedElt unit(const RingCtx& ctx);
  static GradedElt generator(const RingCtx& ctx, const std::string& name);
  static GradedElt monomial(const RingCtx& ctx, Mono m, const Rat& c);

  const RingCtx& ctx() const { return ctx_; }
  const std::map<Mono, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int mono_degree(const Mono& m) const;
  Rat coeff(const Mono& m) const;
  int min_degree() const;  // dim+1 when zero

  GradedElt graded_part(int degree) const;
  bool is_homogeneous(int degree) const;

  void add_term(const Mono& m, const Rat& c);

  friend GradedElt operator+(const GradedElt& a, const GradedElt& b);
  friend GradedElt operator-(const GradedElt& a, const GradedElt& b);
  friend GradedElt operator*(const GradedElt& a, const GradedElt& b);
  friend GradedElt operator*(const Rat& c, const GradedElt& a);
  friend bool operator==(const GradedElt& a, const GradedElt& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }

private:
  void require_same_ctx(const GradedElt& other) const;

  RingCtx ctx_;
  std::map<Mono, Rat> terms_;
};

// exp of an element with positive minimal degree (nilpotent in the
// truncation), including the constant 1.
GradedElt exp_nilpotent(const GradedElt& a);

// sum_k phi_k x^k for x of positive minimal degree; the constant phi_0
// contributes phi_0 * 1.
GradedElt series_at(const Series& phi, const GradedElt& x);

// Chern data of a bundle: c_1 .. c_k as homogeneous elements of degree i+1.
struct BundleData {
  std::string name;
  int rank = 0;
  RingCtx ctx;
  std::vector<GradedElt> chern;

  void validate() const;  // throws InputError on malformed data
  GradedElt chern_class(int i) const;  // c_i, zero when beyond stored list
  GradedElt total_chern() const;       // 1 + c_1 + c_2 + ...
};

// Top-degree integration functional; unspecified monomials integrate to 0.
struct IntersectionData {
  RingCtx ctx;
  std::map<Mono, Rat> values;

  void validate() const;
};

// Power sums of the Chern roots via Newton's identities:
// p_k = c_1 p_{k-1} - c_2 p_{k-2} + ... + (-1)^{k-1} k c_k.
std::vector<GradedElt> power_sums(const BundleData& b, int upto);

// ch(b) = rank + sum_{k>=1} p_k / k!, truncated at `order`.
GradedElt chern_character(const BundleData& b, int order);
GradedElt chern_character(const BundleData& b);

// prod_i phi(x_i) over the Chern roots, for phi with phi(0) = 1; computed as
// exp(sum_k log(phi)_k p_k).
GradedElt multiplicative_genus(const Series& phi, const BundleData& b);

// Rank-two, c_1 = 0 substitution x^2 -> -c_2 for an even series psi.  This
// is the convention of the quadratic-rank-two kappa formula; psi(0) enters
// once, not once per Chern root.
GradedElt even_series_class(const Series& psi, const BundleData& b);

// Same input contract, but summing over the two Chern roots +-x, which
// doubles every term of the even substitution.
GradedElt even_series_class_additive(const Series& psi, const BundleData& b);

// Pairs the top-degree part against the intersection functional.
Rat integrate(const GradedElt& e, const IntersectionData& data);

}  // namespace torsion

#endif
