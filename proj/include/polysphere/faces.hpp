#ifndef POLYSPHERE_FACES_HPP
#define POLYSPHERE_FACES_HPP

#include <vector>

#include "polysphere/space.hpp"

namespace polysphere {

/// A facet of the unit ball, i.e. a maximal convex subset
/// {x in S_X : f(x) = 1} of the unit sphere.
struct Face {
    Eigen::Index index = -1;                 // row of space.hrep()
    Vec functional;
    std::vector<Eigen::Index> vertex_ids;    // rows of space.vrep()

    friend bool operator==(const Face& a, const Face& b) { return a.index == b.index; }
};

/// St(x) = {y in S_X : ||x + y|| = 2}, stored as the facets containing x.
struct Star {
    Vec center;
    std::vector<Eigen::Index> face_ids;

    bool convex() const { return face_ids.size() == 1; }
};

std::vector<Face> facets(const PolyhedralSpace& space);
Face facet(const PolyhedralSpace& space, Eigen::Index index);
Face negated(const PolyhedralSpace& space, const Face& face);

/// Rows are the facet's vertices.
Mat face_vertices(const PolyhedralSpace& space, const Face& face);

/// Mean of the facet's vertices; lies in its relative interior.
Vec barycenter(const PolyhedralSpace& space, const Face& face);

bool on_sphere(const PolyhedralSpace& space, const Vec& x);

/// Facet ids whose functional equals 1 at x, ascending.
std::vector<Eigen::Index> active_facets(const PolyhedralSpace& space, const Vec& x);

/// Throws NotOnSphere unless norm(x) == 1.
Star star(const PolyhedralSpace& space, const Vec& x);

/// y in St(x) iff some facet containing x also contains y.
bool in_star(const PolyhedralSpace& space, const Star& st, const Vec& y);

bool is_smooth(const PolyhedralSpace& space, const Vec& x);

/// St(x) is convex, hence a maximal convex subset of the sphere. For a
/// polytope ball this happens exactly when St(x) is a single facet.
bool is_star_maximal_convex(const PolyhedralSpace& space, const Vec& x);

Vec supporting_functional(const Face& face);

/// The space E = span(basis columns) with the restricted norm, in
/// coordinates relative to the basis: ||c||_E = ||basis * c||.
PolyhedralSpace subspace_section(const PolyhedralSpace& space, const Mat& basis);

/// Vertices (rows, ambient coordinates) of face ∩ span(basis columns).
/// Empty when they do not meet.
Mat face_section(const PolyhedralSpace& space, const Face& face, const Mat& basis);

/// Columns of the list, checked for ambient dimension.
Mat basis_from(const std::vector<Vec>& vectors, Eigen::Index dim);

}  // namespace polysphere

#endif  // POLYSPHERE_FACES_HPP
