#ifndef POLYSPHERE_POLYTOPE_HPP
#define POLYSPHERE_POLYTOPE_HPP

#include "polysphere/rational.hpp"

namespace polysphere {

/// Extreme rays (as rows) of the pointed cone {x : cone x >= 0}, computed by
/// the double description method. `cone` must have full column rank.
Mat extreme_rays(const Mat& cone);

/// Vertices (as rows, lexicographically sorted) of the polytope
/// {y : a y <= b}. Returns an empty matrix when the system is infeasible and
/// throws DegenerateInput with a recession direction when it is unbounded.
Mat polytope_vertices(const Mat& a, const Vec& b);

/// Vertices of {y : a y <= b, e y = f}, bounded. Same conventions as above.
Mat polytope_vertices(const Mat& a, const Vec& b, const Mat& e, const Vec& f);

}  // namespace polysphere

#endif  // POLYSPHERE_POLYTOPE_HPP
