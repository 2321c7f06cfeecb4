#ifndef TORSION_POLYTOPE_HPP
#define TORSION_POLYTOPE_HPP

#include <Eigen/Core>

#include <vector>

#include "torsion/rational.hpp"

namespace torsion {

using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

// Exact volume of the (bounded) H-polytope {x : A x <= b} by Lasserre's
// recursion with coordinate projections: d V = sum_i b_i/|a_{ij}| * V_{d-1}
// of the i-th facet projected along coordinate j.  Throws InputError on an
// unbounded region.
Rat polytope_volume(const RatMatrix& A, const RatVector& b);

// Exact rank of a rational matrix by Gauss elimination.
int rat_rank(RatMatrix m);

// Solves A x = b exactly; returns false when A is singular.
bool rat_solve(RatMatrix A, RatVector b, RatVector& x);

}  // namespace torsion

#endif
