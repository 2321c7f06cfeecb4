#include "torsion/polytope.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace torsion {

namespace {

// Canonical form of a half-space a.x <= b: scale so the first nonzero entry
// of a is +-1.  Returns nullopt for the trivial constraint 0 <= b with
// b >= 0, and flags an infeasible one (0 <= b, b < 0) via the bool.
struct CanonRow {
  std::vector<Rat> a;
  Rat b;
};

std::optional<CanonRow> canonicalize(std::vector<Rat> a, Rat b, bool& infeasible) {
  int lead = -1;
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) {
      lead = static_cast<int>(i);
      break;
    }
  if (lead < 0) {
    if (b.sign() < 0) infeasible = true;
    return std::nullopt;
  }
  Rat scale = a[static_cast<size_t>(lead)].abs();
  for (auto& v : a) v /= scale;
  b /= scale;
  return CanonRow{std::move(a), std::move(b)};
}

Rat volume_rec(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b, int depth);

// One-dimensional base case: interval length.
Rat interval_length(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b) {
  bool has_lo = false, has_hi = false;
  Rat lo, hi;
  for (size_t i = 0; i < A.size(); ++i) {
    const Rat& a = A[i][0];
    if (a.is_zero()) {
      if (b[i].sign() < 0) return Rat(0);
      continue;
    }
    Rat bound = b[i] / a;
    if (a.sign() > 0) {
      if (!has_hi || bound < hi) hi = bound;
      has_hi = true;
    } else {
      if (!has_lo || bound > lo) lo = bound;
      has_lo = true;
    }
  }
  if (!has_lo || !has_hi) throw InputError("polytope_volume: unbounded region");
  Rat len = hi - lo;
  return len.sign() > 0 ? len : Rat(0);
}

Rat volume_rec(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b, int depth) {
  const int d = static_cast<int>(A.empty() ? 0 : A[0].size());
  if (depth > 64) throw InvariantError("polytope_volume: recursion too deep");
  if (d == 0) return Rat(0);
  if (d == 1) return interval_length(A, b);

  // Deduplicate parallel half-spaces, keeping the tightest.
  bool infeasible = false;
  std::map<std::vector<std::string>, std::pair<std::vector<Rat>, Rat>> rows;
  for (size_t i = 0; i < A.size(); ++i) {
    auto canon = canonicalize(A[i], b[i], infeasible);
    if (infeasible) return Rat(0);
    if (!canon) continue;
    std::vector<std::string> key;
    key.reserve(canon->a.size());
    for (const auto& v : canon->a) key.push_back(v.str());
    auto it = rows.find(key);
    if (it == rows.end())
      rows.emplace(std::move(key), std::make_pair(canon->a, canon->b));
    else if (canon->b < it->second.second)
      it->second.second = canon->b;
  }

  Rat total;
  size_t idx = 0;
  for (const auto& [key, row] : rows) {
    (void)key;
    ++idx;
    const auto& a = row.first;
    const Rat& bi = row.second;
    // Eliminate the variable with the leading nonzero coefficient.
    int j = -1;
    for (size_t k = 0; k < a.size(); ++k)
      if (!a[k].is_zero()) {
        j = static_cast<int>(k);
        break;
      }
    // Substitute x_j = (bi - sum_{l != j} a_l x_l)/a_j into the others.
    std::vector<std::vector<Rat>> subA;
    std::vector<Rat> subB;
    size_t idx2 = 0;
    for (const auto& [key2, row2] : rows) {
      (void)key2;
      ++idx2;
      if (idx2 == idx) continue;
      const auto& c = row2.first;
      Rat factor = c[static_cast<size_t>(j)] / a[static_cast<size_t>(j)];
      std::vector<Rat> nrow;
      nrow.reserve(a.size() - 1);
      for (size_t l = 0; l < a.size(); ++l) {
        if (static_cast<int>(l) == j) continue;
        nrow.push_back(c[l] - factor * a[l]);
      }
      subA.push_back(std::move(nrow));
      subB.push_back(row2.second - factor * bi);
    }
    Rat face = subA.empty() ? Rat(0) : volume_rec(subA, subB, depth + 1);
    if (face.is_zero()) continue;
    total += bi / a[static_cast<size_t>(j)].abs() * face;
  }
  return total / Rat(d);
}

}  // namespace

Rat polytope_volume(const RatMatrix& A, const RatVector& b) {
  if (A.rows() != b.rows()) throw InputError("polytope_volume: shape mismatch");
  std::vector<std::vector<Rat>> rows(static_cast<size_t>(A.rows()));
  std::vector<Rat> rhs(static_cast<size_t>(A.rows()));
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    rows[static_cast<size_t>(i)].resize(static_cast<size_t>(A.cols()));
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = A(i, j);
    rhs[static_cast<size_t>(i)] = b(i);
  }
  return volume_rec(rows, rhs, 0);
}

int rat_rank(RatMatrix m) {
  int rank = 0;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r)
      if (!m(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    for (Eigen::Index r = row + 1; r < m.rows(); ++r) {
      if (m(r, col).is_zero()) continue;
      Rat factor = m(r, col) / m(row, col);
      for (Eigen::Index c = col; c < m.cols(); ++c)
        m(r, c) -= factor * m(row, c);
    }
    ++row;
    ++rank;
  }
  return rank;
}

bool rat_solve(RatMatrix A, RatVector b, RatVector& x) {
  const Eigen::Index n = A.rows();
  if (A.cols() != n || b.rows() != n) throw InputError("rat_solve: shape mismatch");
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = col; r < n; ++r)
      if (!A(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return false;
    if (pivot != col) {
      A.row(pivot).swap(A.row(col));
      std::swap(b(pivot), b(col));
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || A(r, col).is_zero()) continue;
      Rat factor = A(r, col) / A(col, col);
      for (Eigen::Index c = col; c < n; ++c) A(r, c) -= factor * A(col, c);
      b(r) -= factor * b(col);
    }
  }
  x.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) x(i) = b(i) / A(i, i);
  return true;
}

}  // namespace torsion
