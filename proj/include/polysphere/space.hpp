#ifndef POLYSPHERE_SPACE_HPP
#define POLYSPHERE_SPACE_HPP

#include <optional>
#include <string>
#include <vector>

#include "polysphere/rational.hpp"

namespace polysphere {

/// Desk-scale limits for vertex enumeration.
struct Limits {
    Eigen::Index max_dim = 6;
    Eigen::Index max_facets = 200;
};

/**
 * A finite-dimensional real normed space whose unit ball is a centrally
 * symmetric polytope with the origin in its interior.
 *
 * Both representations are kept: `hrep()` holds one facet functional per row
 * (the norm is the maximum of these functionals), `vrep()` one unit-ball
 * vertex per row. They are mutually polar, irredundant and closed under
 * negation. Instances are immutable.
 */
class PolyhedralSpace {
  public:
    /// Builds the space whose ball is {x : f(x) <= 1 for every row f}.
    /// Duplicate and redundant rows are dropped; the input must be symmetric.
    static PolyhedralSpace from_functionals(const Mat& functionals, std::string name = {}, const Limits& limits = {});

    /// Builds the space whose ball is the convex hull of the rows.
    /// Non-extreme points are dropped; the input must be symmetric.
    static PolyhedralSpace from_vertices(const Mat& vertices, std::string name = {}, const Limits& limits = {});

    /// Both representations given and already known to be consistent
    /// (used by polarity). Incidence is recomputed.
    static PolyhedralSpace from_polar_pair(Mat functionals, Mat vertices, std::string name = {});

    Eigen::Index dim() const { return hrep_.cols(); }
    const Mat& hrep() const { return hrep_; }
    const Mat& vrep() const { return vrep_; }
    Eigen::Index facet_count() const { return hrep_.rows(); }
    Eigen::Index vertex_count() const { return vrep_.rows(); }

    Vec functional(Eigen::Index facet) const { return hrep_.row(facet).transpose(); }
    Vec vertex(Eigen::Index v) const { return vrep_.row(v).transpose(); }

    /// Vertex ids lying on each facet, ascending.
    const std::vector<std::vector<Eigen::Index>>& facet_index() const { return facet_index_; }
    const std::vector<Eigen::Index>& facet_vertices(Eigen::Index facet) const {
        return facet_index_[static_cast<std::size_t>(facet)];
    }

    Eigen::Index negated_facet(Eigen::Index facet) const { return neg_facet_[static_cast<std::size_t>(facet)]; }
    Eigen::Index negated_vertex(Eigen::Index v) const { return neg_vertex_[static_cast<std::size_t>(v)]; }

    std::optional<Eigen::Index> find_vertex(const Vec& v) const;
    std::optional<Eigen::Index> find_facet(const Vec& f) const;

    const std::string& name() const { return name_; }
    PolyhedralSpace renamed(std::string name) const;

  private:
    PolyhedralSpace(Mat hrep, Mat vrep, std::string name);

    Mat hrep_;
    Mat vrep_;
    std::vector<std::vector<Eigen::Index>> facet_index_;
    std::vector<Eigen::Index> neg_facet_;
    std::vector<Eigen::Index> neg_vertex_;
    std::string name_;
};

/// max over facet functionals f of f(x).
Rational norm(const PolyhedralSpace& space, const Vec& x);

/// Minkowski gauge of the vertex polytope, min {t : x in t * conv(vrep)},
/// computed by linear programming. Equals norm() for a consistent space.
Rational gauge(const PolyhedralSpace& space, const Vec& x);

/// The polar space: functionals and vertices swap roles.
PolyhedralSpace dual_space(const PolyhedralSpace& space);

/// Same vertex set and same functional set, ignoring order.
bool same_space(const PolyhedralSpace& a, const PolyhedralSpace& b);

/// Row-order-insensitive equality of point sets.
bool same_rows(const Mat& a, const Mat& b);

/// Removes duplicate rows, keeping first occurrences.
Mat unique_rows(const Mat& m);

}  // namespace polysphere

#endif  // POLYSPHERE_SPACE_HPP
