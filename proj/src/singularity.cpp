#include "torsion/singularity.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "torsion/polytope.hpp"

namespace torsion {

void MultiPoly::validate() const {
  if (nvars < 1) throw InputError("polynomial needs at least one variable");
  for (const auto& [exps, c] : terms) {
    (void)c;
    if (static_cast<int>(exps.size()) != nvars)
      throw InputError("polynomial term arity mismatch");
    for (int e : exps)
      if (e < 0) throw InputError("negative exponent in polynomial");
  }
}

MultiPoly MultiPoly::partial(int var) const {
  MultiPoly d;
  d.nvars = nvars;
  for (const auto& [exps, c] : terms) {
    if (exps[static_cast<size_t>(var)] == 0) continue;
    auto e = exps;
    Rat nc = c * Rat(e[static_cast<size_t>(var)]);
    e[static_cast<size_t>(var)] -= 1;
    d.terms.emplace_back(std::move(e), std::move(nc));
  }
  return d;
}

int MultiPoly::min_total_degree() const {
  int best = -1;
  for (const auto& [exps, c] : terms) {
    if (c.is_zero()) continue;
    int d = 0;
    for (int e : exps) d += e;
    if (best < 0 || d < best) best = d;
  }
  if (best < 0) throw InputError("zero polynomial");
  return best;
}

int germ_nvars(const Germ& g) {
  return std::visit(
      [](const auto& v) -> int {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, BrieskornPham>)
          return static_cast<int>(v.exponents.size());
        else if constexpr (std::is_same_v<T, QuasiHomogeneous>)
          return static_cast<int>(v.weights.size());
        else if constexpr (std::is_same_v<T, NewtonConvenient>)
          return v.nvars;
        else
          return v.poly.nvars;
      },
      g);
}

std::string germ_kind(const Germ& g) {
  switch (g.index()) {
    case 0: return "brieskorn-pham";
    case 1: return "quasi-homogeneous";
    case 2: return "newton";
    default: return "explicit";
  }
}

BigInt milnor_brieskorn_pham(const std::vector<long>& exponents) {
  if (exponents.empty()) throw InputError("Brieskorn-Pham germ needs exponents");
  BigInt mu = 1;
  for (long a : exponents) {
    if (a < 2) throw InputError("Brieskorn-Pham exponents must be >= 2");
    mu *= (a - 1);
  }
  return mu;
}

// ---------------------------------------------------------------------------
// Kouchnirenko

namespace {

// Volume under the diagram restricted to the coordinate subspace spanned by
// `coords`, as the union of the simplices {x >= 0, <a,x> <= 1} over all
// supporting functionals a > 0 of the restricted point set.
Rat under_diagram_volume(const std::vector<std::vector<long>>& pts,
                         const std::vector<int>& coords) {
  const int k = static_cast<int>(coords.size());
  std::vector<std::vector<Rat>> restricted;
  for (const auto& p : pts) {
    bool supported = true;
    for (size_t i = 0; i < p.size() && supported; ++i) {
      if (p[i] == 0) continue;
      if (std::find(coords.begin(), coords.end(), static_cast<int>(i)) == coords.end())
        supported = false;
    }
    if (!supported) continue;
    std::vector<Rat> q(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) q[static_cast<size_t>(i)] = Rat(p[static_cast<size_t>(coords[static_cast<size_t>(i)])]);
    restricted.push_back(std::move(q));
  }
  // Supporting functionals a > 0 with <a,p> = 1 on some k-subset and
  // <a,q> >= 1 for every restricted point.
  std::set<std::vector<std::string>> seen;
  std::vector<std::vector<Rat>> normals;
  const int npts = static_cast<int>(restricted.size());
  if (npts < k) throw InputError("Newton diagram is not convenient");
  std::vector<int> pick(static_cast<size_t>(k));
  std::function<void(int, int)> choose = [&](int start, int depth) {
    if (depth == k) {
      RatMatrix A(k, k);
      RatVector ones(k);
      for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) A(r, c) = restricted[static_cast<size_t>(pick[static_cast<size_t>(r)])][static_cast<size_t>(c)];
        ones(r) = Rat(1);
      }
      RatVector a;
      if (!rat_solve(A, ones, a)) return;
      for (int c = 0; c < k; ++c)
        if (a(c).sign() <= 0) return;
      for (const auto& q : restricted) {
        Rat dot;
        for (int c = 0; c < k; ++c) dot += a(c) * q[static_cast<size_t>(c)];
        if (dot < Rat(1)) return;
      }
      std::vector<std::string> key;
      for (int c = 0; c < k; ++c) key.push_back(a(c).str());
      if (seen.insert(key).second) {
        std::vector<Rat> v(static_cast<size_t>(k));
        for (int c = 0; c < k; ++c) v[static_cast<size_t>(c)] = a(c);
        normals.push_back(std::move(v));
      }
      return;
    }
    for (int i = start; i < npts; ++i) {
      pick[static_cast<size_t>(depth)] = i;
      choose(i + 1, depth + 1);
    }
  };
  choose(0, 0);
  if (normals.empty()) throw InputError("Newton diagram has no supporting facet");
  if (normals.size() > 20)
    throw InputError("Newton diagram too complex for desk-scale evaluation");

  // Inclusion-exclusion over the simplices cut out by the functionals.
  Rat total;
  const size_t nf = normals.size();
  for (size_t mask = 1; mask < (size_t{1} << nf); ++mask) {
    int bits = 0;
    std::vector<size_t> members;
    for (size_t i = 0; i < nf; ++i)
      if (mask & (size_t{1} << i)) {
        ++bits;
        members.push_back(i);
      }
    RatMatrix A(static_cast<Eigen::Index>(members.size()) + k, k);
    RatVector b(static_cast<Eigen::Index>(members.size()) + k);
    for (size_t r = 0; r < members.size(); ++r) {
      for (int c = 0; c < k; ++c) A(static_cast<Eigen::Index>(r), c) = normals[members[r]][static_cast<size_t>(c)];
      b(static_cast<Eigen::Index>(r)) = Rat(1);
    }
    for (int i = 0; i < k; ++i) {
      for (int c = 0; c < k; ++c)
        A(static_cast<Eigen::Index>(members.size()) + i, c) = (c == i) ? Rat(-1) : Rat(0);
      b(static_cast<Eigen::Index>(members.size()) + i) = Rat(0);
    }
    Rat v = polytope_volume(A, b);
    total += (bits % 2 == 1) ? v : -v;
  }
  return total;
}

}  // namespace

BigInt newton_number(const NewtonConvenient& g) {
  const int n = g.nvars;
  if (n < 1) throw InputError("Newton diagram needs at least one variable");
  if (g.vertices.empty()) throw InputError("Newton diagram has no vertices");
  for (const auto& p : g.vertices) {
    if (static_cast<int>(p.size()) != n)
      throw InputError("Newton diagram vertex arity mismatch");
    long total = 0;
    for (long e : p) {
      if (e < 0) throw InputError("Newton diagram vertex with negative entry");
      total += e;
    }
    if (total == 0) throw InputError("Newton diagram contains the origin");
  }
  // Convenient: an axis vertex for every variable.
  for (int i = 0; i < n; ++i) {
    bool found = false;
    for (const auto& p : g.vertices) {
      bool axis = p[static_cast<size_t>(i)] > 0;
      for (int j = 0; j < n && axis; ++j)
        if (j != i && p[static_cast<size_t>(j)] != 0) axis = false;
      if (axis) {
        found = true;
        break;
      }
    }
    if (!found)
      throw InputError("Newton diagram misses coordinate axis " + std::to_string(i));
  }

  // mu = sum over coordinate subsets I of (-1)^{n-|I|} |I|! Vol_{|I|}.
  Rat mu((n % 2 == 0) ? 1 : -1);  // empty-subset term
  for (size_t mask = 1; mask < (size_t{1} << n); ++mask) {
    std::vector<int> coords;
    for (int i = 0; i < n; ++i)
      if (mask & (size_t{1} << i)) coords.push_back(i);
    const int k = static_cast<int>(coords.size());
    Rat vol = under_diagram_volume(g.vertices, coords);
    Rat term = Rat(factorial(static_cast<unsigned>(k))) * vol;
    mu += ((n - k) % 2 == 0) ? term : -term;
  }
  if (!mu.is_integer() || mu.sign() < 0)
    throw InvariantError("Kouchnirenko sum is not a non-negative integer: " + mu.str());
  return mu.num();
}

// ---------------------------------------------------------------------------
// Macaulay-matrix oracle

namespace {

void enumerate_monomials(int nvars, int max_deg, std::vector<int>& cur, int pos,
                         int used, std::vector<std::vector<int>>& out) {
  if (pos == nvars) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e + used <= max_deg; ++e) {
    cur[static_cast<size_t>(pos)] = e;
    enumerate_monomials(nvars, max_deg, cur, pos + 1, used + e, out);
  }
  cur[static_cast<size_t>(pos)] = 0;
}

std::vector<std::vector<int>> monomials_up_to(int nvars, int max_deg) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<size_t>(nvars), 0);
  enumerate_monomials(nvars, max_deg, cur, 0, 0, out);
  return out;
}

// Sparse row echelon over Q; rows are (column -> coefficient) maps.
long sparse_rank(std::vector<std::map<int, Rat>> rows) {
  std::map<int, std::map<int, Rat>> pivots;  // leading column -> reduced row
  long rank = 0;
  for (auto& row : rows) {
    while (!row.empty()) {
      int lead = row.begin()->first;
      auto piv = pivots.find(lead);
      if (piv == pivots.end()) break;
      Rat factor = row.begin()->second;
      for (const auto& [c, v] : piv->second) {
        auto it = row.find(c);
        if (it == row.end()) {
          row.emplace(c, -factor * v);
        } else {
          it->second -= factor * v;
          if (it->second.is_zero()) row.erase(it);
        }
      }
    }
    if (row.empty()) continue;
    Rat lead = row.begin()->second;
    for (auto& [c, v] : row) v /= lead;
    pivots.emplace(row.begin()->first, std::move(row));
    ++rank;
  }
  return rank;
}

}  // namespace

long local_algebra_dim(const MultiPoly& f, int degree_bound) {
  f.validate();
  if (degree_bound < 1) throw InputError("degree bound must be positive");
  const int n = f.nvars;

  std::vector<MultiPoly> partials;
  for (int i = 0; i < n; ++i) partials.push_back(f.partial(i));

  auto mons = monomials_up_to(n, degree_bound);
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < mons.size(); ++i) index.emplace(mons[i], static_cast<int>(i));

  std::vector<std::map<int, Rat>> rows;
  for (const auto& p : partials) {
    if (p.terms.empty()) continue;
    int mindeg = p.min_total_degree();
    auto shifts = monomials_up_to(n, degree_bound - mindeg);
    for (const auto& shift : shifts) {
      std::map<int, Rat> row;
      for (const auto& [exps, c] : p.terms) {
        std::vector<int> m(static_cast<size_t>(n));
        int total = 0;
        for (int i = 0; i < n; ++i) {
          m[static_cast<size_t>(i)] = exps[static_cast<size_t>(i)] + shift[static_cast<size_t>(i)];
          total += m[static_cast<size_t>(i)];
        }
        if (total > degree_bound) continue;
        auto it = index.find(m);
        row[it->second] += c;
        if (row[it->second].is_zero()) row.erase(it->second);
      }
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }
  long rank = sparse_rank(std::move(rows));
  return static_cast<long>(mons.size()) - rank;
}

BigInt milnor_macaulay(const MultiPoly& f, int degree_bound) {
  long d1 = local_algebra_dim(f, degree_bound);
  long d2 = local_algebra_dim(f, degree_bound + 2);
  if (d1 != d2)
    throw InputError(
        "local algebra dimension does not stabilize (non-isolated singularity "
        "or degree bound too small): dim(" +
        std::to_string(degree_bound) + ") = " + std::to_string(d1) + ", dim(" +
        std::to_string(degree_bound + 2) + ") = " + std::to_string(d2));
  return BigInt(d1);
}

// ---------------------------------------------------------------------------
// Spectrum

namespace {

void validate_weights(const std::vector<Rat>& w) {
  if (w.empty()) throw InputError("quasi-homogeneous germ needs weights");
  for (const auto& wi : w)
    if (wi.sign() <= 0 || wi > Rat(1, 2))
      throw InputError("weights must lie in (0, 1/2]");
}

void validate_quasi_homogeneous(const QuasiHomogeneous& qh) {
  validate_weights(qh.weights);
  if (qh.poly.terms.empty()) return;  // weights-only input
  qh.poly.validate();
  if (qh.poly.nvars != static_cast<int>(qh.weights.size()))
    throw InputError("weight count does not match polynomial arity");
  for (const auto& [exps, c] : qh.poly.terms) {
    (void)c;
    Rat wdeg;
    for (size_t i = 0; i < exps.size(); ++i)
      wdeg += Rat(exps[i]) * qh.weights[i];
    if (wdeg != Rat(1))
      throw InputError("polynomial is not weighted-homogeneous of weight one");
  }
}

// Integer-coefficient polynomial helpers in the variable T^{1/Q}.
using ZPoly = std::vector<BigInt>;

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  ZPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// T^e - 1.
ZPoly zp_cyclic(long e) {
  ZPoly p(static_cast<size_t>(e) + 1);
  p[0] = -1;
  p[static_cast<size_t>(e)] = 1;
  return p;
}

// Exact division; throws InvariantError when the division is not exact.
ZPoly zp_div(ZPoly num, const ZPoly& den) {
  size_t dd = den.size();
  while (dd > 0 && den[dd - 1].is_zero()) --dd;
  if (dd == 0) throw InvariantError("division by zero polynomial");
  if (num.size() < dd) {
    for (const auto& c : num)
      if (!c.is_zero()) throw InvariantError("inexact polynomial division");
    return {BigInt(0)};
  }
  ZPoly q(num.size() - dd + 1);
  for (size_t i = q.size(); i-- > 0;) {
    BigInt lead = num[i + dd - 1];
    if (lead.is_zero()) continue;
    if (lead % den[dd - 1] != 0) throw InvariantError("inexact polynomial division");
    BigInt qi = lead / den[dd - 1];
    q[i] = qi;
    for (size_t j = 0; j < dd; ++j) num[i + j] -= qi * den[j];
  }
  for (const auto& c : num)
    if (!c.is_zero()) throw InvariantError("inexact polynomial division");
  return q;
}

Spectrum spectrum_from_weights(const std::vector<Rat>& w) {
  validate_weights(w);
  BigInt q = 1;
  for (const auto& wi : w) q = lcm(q, wi.den());
  long Q = q.convert_to<long>();
  std::vector<long> P;
  for (const auto& wi : w) {
    Rat scaled = wi * Rat(BigInt(Q));
    P.push_back(scaled.num().convert_to<long>());
  }
  // Milnor-algebra Poincare polynomial prod (T^{Q-P_i} - 1)/(T^{P_i} - 1),
  // shifted by sum w_i.  Exponents are in units of 1/Q.
  ZPoly num = {BigInt(1)};
  for (long p : P) num = zp_mul(num, zp_cyclic(Q - p));
  ZPoly den = {BigInt(1)};
  for (long p : P) den = zp_mul(den, zp_cyclic(p));
  ZPoly poincare;
  try {
    poincare = zp_div(std::move(num), den);
  } catch (const InvariantError&) {
    throw InputError("weights do not define an isolated quasi-homogeneous singularity");
  }
  long shift = 0;
  for (long p : P) shift += p;
  Spectrum sp;
  for (size_t e = 0; e < poincare.size(); ++e) {
    if (poincare[e].is_zero()) continue;
    if (poincare[e].sign() < 0)
      throw InputError("weights do not define an isolated quasi-homogeneous singularity");
    long mult = poincare[e].convert_to<long>();
    Rat alpha(BigInt(static_cast<long>(e) + shift), BigInt(Q));
    for (long m = 0; m < mult; ++m) sp.entries.push_back(alpha);
  }
  std::sort(sp.entries.begin(), sp.entries.end());
  return sp;
}

}  // namespace

BigInt milnor_number(const Germ& g) {
  return std::visit(
      [](const auto& v) -> BigInt {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, BrieskornPham>) {
          return milnor_brieskorn_pham(v.exponents);
        } else if constexpr (std::is_same_v<T, QuasiHomogeneous>) {
          validate_quasi_homogeneous(v);
          Rat mu(1);
          for (const auto& w : v.weights) mu *= (Rat(1) / w - Rat(1));
          if (!mu.is_integer())
            throw InputError("weights do not define an isolated quasi-homogeneous singularity");
          return mu.num();
        } else if constexpr (std::is_same_v<T, NewtonConvenient>) {
          return newton_number(v);
        } else {
          return milnor_macaulay(v.poly, v.degree_bound);
        }
      },
      g);
}

Spectrum spectrum(const Germ& g) {
  const int nvars = germ_nvars(g);
  Spectrum sp;
  if (const auto* bp = std::get_if<BrieskornPham>(&g)) {
    std::vector<Rat> w;
    for (long a : bp->exponents) {
      if (a < 2) throw InputError("Brieskorn-Pham exponents must be >= 2");
      w.emplace_back(BigInt(1), BigInt(a));
    }
    sp = spectrum_from_weights(w);
  } else if (const auto* qh = std::get_if<QuasiHomogeneous>(&g)) {
    validate_quasi_homogeneous(*qh);
    sp = spectrum_from_weights(qh->weights);
  } else {
    throw InputError("spectrum unsupported for germ kind '" + germ_kind(g) + "'");
  }
  // Structural checks: range (0, n+1) and Steenbrink symmetry.
  const Rat top(nvars);  // n+1 = number of variables
  for (const auto& a : sp.entries)
    if (a.sign() <= 0 || a >= top)
      throw InvariantError("spectrum entry out of range: " + a.str());
  for (size_t i = 0; i < sp.entries.size(); ++i) {
    const Rat mirror = top - sp.entries[sp.entries.size() - 1 - i];
    if (mirror != sp.entries[i])
      throw InvariantError("spectrum is not symmetric");
  }
  return sp;
}

Rat spectral_genus(const Spectrum& sp, SpectrumConvention conv) {
  Rat total;
  for (const auto& a : sp.entries) {
    if (a.sign() > 0 && a < Rat(1)) {
      total += (conv == SpectrumConvention::Steenbrink) ? Rat(1) - a : a;
    }
  }
  return total;
}

Rat spectral_genus(const Germ& g, SpectrumConvention conv) {
  return spectral_genus(spectrum(g), conv);
}

std::vector<Rat> monodromy_angles(const Germ& g) {
  Spectrum sp = spectrum(g);
  std::vector<Rat> angles;
  angles.reserve(sp.entries.size());
  for (const auto& a : sp.entries) {
    Rat neg = -a;
    Rat theta = neg - Rat(neg.floor());
    angles.push_back(theta);
  }
  std::sort(angles.begin(), angles.end());
  return angles;
}

}  // namespace torsion
