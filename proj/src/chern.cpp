#include "torsion/chern.hpp"

#include <algorithm>
#include <set>

namespace torsion {

RingCtx::RingCtx(int dim_, std::vector<Gen> gens_) : dim(dim_), gens(std::move(gens_)) {
  if (dim < 0) throw InputError("ring dimension must be non-negative");
  std::set<std::string> seen;
  for (const auto& g : gens) {
    if (g.degree < 1 || g.degree > std::max(dim, 1))
      throw InputError("generator degree out of range: " + g.name);
    if (!seen.insert(g.name).second)
      throw InputError("duplicate generator name: " + g.name);
  }
}

int RingCtx::gen_index(const std::string& name) const {
  for (size_t i = 0; i < gens.size(); ++i)
    if (gens[i].name == name) return static_cast<int>(i);
  throw InputError("unknown generator: " + name);
}

bool operator==(const RingCtx& a, const RingCtx& b) {
  if (a.dim != b.dim || a.gens.size() != b.gens.size()) return false;
  for (size_t i = 0; i < a.gens.size(); ++i)
    if (a.gens[i].name != b.gens[i].name || a.gens[i].degree != b.gens[i].degree)
      return false;
  return true;
}

GradedElt GradedElt::unit(const RingCtx& ctx) {
  GradedElt e(ctx);
  e.add_term(Mono(ctx.gens.size(), 0), Rat(1));
  return e;
}

GradedElt GradedElt::generator(const RingCtx& ctx, const std::string& name) {
  Mono m(ctx.gens.size(), 0);
  m[static_cast<size_t>(ctx.gen_index(name))] = 1;
  return monomial(ctx, std::move(m), Rat(1));
}

GradedElt GradedElt::monomial(const RingCtx& ctx, Mono m, const Rat& c) {
  GradedElt e(ctx);
  e.add_term(m, c);
  return e;
}

int GradedElt::mono_degree(const Mono& m) const {
  if (m.size() != ctx_.gens.size())
    throw InputError("monomial length does not match generator count");
  int d = 0;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 0) throw InputError("negative exponent in monomial");
    d += m[i] * ctx_.gens[i].degree;
  }
  return d;
}

Rat GradedElt::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

int GradedElt::min_degree() const {
  int d = ctx_.dim + 1;
  for (const auto& [m, c] : terms_) d = std::min(d, mono_degree(m));
  return d;
}

GradedElt GradedElt::graded_part(int degree) const {
  GradedElt r(ctx_);
  for (const auto& [m, c] : terms_)
    if (mono_degree(m) == degree) r.add_term(m, c);
  return r;
}

bool GradedElt::is_homogeneous(int degree) const {
  for (const auto& [m, c] : terms_)
    if (mono_degree(m) != degree) return false;
  return true;
}

void GradedElt::add_term(const Mono& m, const Rat& c) {
  if (c.is_zero()) return;
  if (mono_degree(m) > ctx_.dim) return;  // truncated away
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void GradedElt::require_same_ctx(const GradedElt& other) const {
  if (ctx_ != other.ctx_) throw InputError("graded elements live in different rings");
}

GradedElt operator+(const GradedElt& a, const GradedElt& b) {
  a.require_same_ctx(b);
  GradedElt r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

GradedElt operator-(const GradedElt& a, const GradedElt& b) {
  a.require_same_ctx(b);
  GradedElt r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
  return r;
}

GradedElt operator*(const GradedElt& a, const GradedElt& b) {
  a.require_same_ctx(b);
  GradedElt r(a.ctx_);
  for (const auto& [ma, ca] : a.terms_) {
    int da = a.mono_degree(ma);
    for (const auto& [mb, cb] : b.terms_) {
      if (da + b.mono_degree(mb) > a.ctx_.dim) continue;
      Mono m(ma.size());
      for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

GradedElt operator*(const Rat& c, const GradedElt& a) {
  GradedElt r(a.ctx_);
  for (const auto& [m, v] : a.terms_) r.add_term(m, c * v);
  return r;
}

GradedElt exp_nilpotent(const GradedElt& a) {
  if (a.min_degree() < 1)
    throw InputError("exp_nilpotent requires positive minimal degree");
  GradedElt acc = GradedElt::unit(a.ctx());
  GradedElt pow = GradedElt::unit(a.ctx());
  BigInt kfact = 1;
  for (int k = 1; k <= a.ctx().dim; ++k) {
    pow = pow * a;
    if (pow.is_zero()) break;
    kfact *= k;
    acc = acc + Rat(BigInt(1), kfact) * pow;
  }
  return acc;
}

GradedElt series_at(const Series& phi, const GradedElt& x) {
  if (!x.is_zero() && x.min_degree() < 1)
    throw InputError("series_at requires an argument of positive degree");
  GradedElt acc = phi[0] * GradedElt::unit(x.ctx());
  GradedElt pow = GradedElt::unit(x.ctx());
  int dmin = std::max(x.min_degree(), 1);
  for (int k = 1; k <= phi.order() && k * dmin <= x.ctx().dim; ++k) {
    pow = pow * x;
    if (pow.is_zero()) break;
    acc = acc + phi[k] * pow;
  }
  return acc;
}

void BundleData::validate() const {
  if (rank < 0) throw InputError("bundle rank must be non-negative: " + name);
  if (static_cast<int>(chern.size()) > (rank > 0 ? std::min(rank, std::max(ctx.dim, 1)) : 0))
    throw InputError("too many Chern classes for bundle: " + name);
  for (size_t i = 0; i < chern.size(); ++i) {
    if (chern[i].ctx() != ctx)
      throw InputError("Chern class in wrong ring for bundle: " + name);
    if (!chern[i].is_homogeneous(static_cast<int>(i) + 1))
      throw InputError("c_" + std::to_string(i + 1) + " of " + name +
                       " is not homogeneous of its degree");
  }
}

GradedElt BundleData::chern_class(int i) const {
  if (i < 1 || i > static_cast<int>(chern.size())) return GradedElt::zero(ctx);
  return chern[static_cast<size_t>(i) - 1];
}

GradedElt BundleData::total_chern() const {
  GradedElt c = GradedElt::unit(ctx);
  for (const auto& ci : chern) c = c + ci;
  return c;
}

void IntersectionData::validate() const {
  GradedElt probe(ctx);
  for (const auto& [m, v] : values) {
    (void)v;
    if (probe.mono_degree(m) != ctx.dim)
      throw InputError("intersection functional key is not top degree");
  }
}

std::vector<GradedElt> power_sums(const BundleData& b, int upto) {
  b.validate();
  std::vector<GradedElt> p;
  p.reserve(static_cast<size_t>(upto) + 1);
  p.push_back(Rat(b.rank) * GradedElt::unit(b.ctx));  // p_0 = rank
  for (int k = 1; k <= upto; ++k) {
    GradedElt pk = GradedElt::zero(b.ctx);
    Rat sign(1);
    for (int i = 1; i < k; ++i) {
      pk = pk + sign * (b.chern_class(i) * p[static_cast<size_t>(k - i)]);
      sign = -sign;
    }
    pk = pk + (sign * Rat(k)) * b.chern_class(k);
    p.push_back(std::move(pk));
  }
  return p;
}

GradedElt chern_character(const BundleData& b, int order) {
  if (order > b.ctx.dim) throw InputError("chern_character order exceeds ring dimension");
  auto p = power_sums(b, order);
  GradedElt ch = Rat(b.rank) * GradedElt::unit(b.ctx);
  BigInt kfact = 1;
  for (int k = 1; k <= order; ++k) {
    kfact *= k;
    ch = ch + Rat(BigInt(1), kfact) * p[static_cast<size_t>(k)];
  }
  return ch;
}

GradedElt chern_character(const BundleData& b) { return chern_character(b, b.ctx.dim); }

GradedElt multiplicative_genus(const Series& phi, const BundleData& b) {
  if (phi[0] != Rat(1))
    throw InputError("multiplicative genus requires phi(0) = 1");
  b.validate();
  int upto = std::min(b.ctx.dim, phi.order());
  Series l = log(phi.truncated(upto));
  auto p = power_sums(b, upto);
  GradedElt acc = GradedElt::zero(b.ctx);
  for (int k = 1; k <= upto; ++k) acc = acc + l[k] * p[static_cast<size_t>(k)];
  return exp_nilpotent(acc);
}

namespace {

void check_even_rank2(const Series& psi, const BundleData& b) {
  b.validate();
  for (int k = 1; k <= psi.order(); k += 2)
    if (!psi[k].is_zero())
      throw InputError("even_series_class requires an even series");
  if (b.rank != 2)
    throw InputError("even_series_class requires a rank-two bundle: " + b.name);
  if (!b.chern_class(1).is_zero())
    throw InputError("even_series_class requires c_1 = 0: " + b.name);
}

}  // namespace

GradedElt even_series_class(const Series& psi, const BundleData& b) {
  check_even_rank2(psi, b);
  GradedElt c2 = b.chern_class(2);
  GradedElt acc = psi[0] * GradedElt::unit(b.ctx);
  GradedElt pow = GradedElt::unit(b.ctx);
  for (int j = 1; 2 * j <= psi.order() && 2 * j <= b.ctx.dim; ++j) {
    pow = pow * (Rat(-1) * c2);
    if (pow.is_zero()) break;
    acc = acc + psi[2 * j] * pow;
  }
  return acc;
}

GradedElt even_series_class_additive(const Series& psi, const BundleData& b) {
  return Rat(2) * even_series_class(psi, b);
}

Rat integrate(const GradedElt& e, const IntersectionData& data) {
  if (e.ctx() != data.ctx)
    throw InputError("integrate: element and functional contexts differ");
  data.validate();
  Rat total;
  for (const auto& [m, c] : e.terms()) {
    if (e.mono_degree(m) != e.ctx().dim) continue;
    auto it = data.values.find(m);
    if (it != data.values.end()) total += c * it->second;
  }
  return total;
}

}  // namespace torsion
