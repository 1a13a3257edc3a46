#include "polysphere/faces.hpp"

#include <algorithm>

#include "polysphere/errors.hpp"
#include "polysphere/linalg.hpp"
#include "polysphere/polytope.hpp"

namespace polysphere {

namespace {

void require_unit(const PolyhedralSpace& space, const Vec& x) {
    const Rational n = norm(space, x);
    if (n != 1)
        throw NotOnSphere("point " + format_point(x) + " has norm " + to_string(n) + ", not 1");
}

void require_independent(const PolyhedralSpace& space, const Mat& basis) {
    if (basis.rows() != space.dim())
        throw DimensionMismatch("basis vectors have dimension " + std::to_string(basis.rows()) +
                                ", space has dimension " + std::to_string(space.dim()));
    if (basis.cols() == 0 || rank(basis) < basis.cols())
        throw DependentBasis("section basis is empty or linearly dependent");
}

}  // namespace

Face facet(const PolyhedralSpace& space, Eigen::Index index) {
    return Face{index, space.functional(index), space.facet_vertices(index)};
}

std::vector<Face> facets(const PolyhedralSpace& space) {
    std::vector<Face> out;
    out.reserve(static_cast<std::size_t>(space.facet_count()));
    for (Eigen::Index i = 0; i < space.facet_count(); ++i)
        out.push_back(facet(space, i));
    return out;
}

Face negated(const PolyhedralSpace& space, const Face& face) {
    return facet(space, space.negated_facet(face.index));
}

Mat face_vertices(const PolyhedralSpace& space, const Face& face) {
    Mat out(static_cast<Eigen::Index>(face.vertex_ids.size()), space.dim());
    for (std::size_t k = 0; k < face.vertex_ids.size(); ++k)
        out.row(static_cast<Eigen::Index>(k)) = space.vrep().row(face.vertex_ids[k]);
    return out;
}

Vec barycenter(const PolyhedralSpace& space, const Face& face) {
    const Mat verts = face_vertices(space, face);
    Vec sum = verts.colwise().sum().transpose();
    return sum / Rational(verts.rows());
}

bool on_sphere(const PolyhedralSpace& space, const Vec& x) {
    return norm(space, x) == 1;
}

std::vector<Eigen::Index> active_facets(const PolyhedralSpace& space, const Vec& x) {
    const Vec values = space.hrep() * x;
    std::vector<Eigen::Index> ids;
    for (Eigen::Index i = 0; i < values.size(); ++i)
        if (values(i) == 1)
            ids.push_back(i);
    return ids;
}

Star star(const PolyhedralSpace& space, const Vec& x) {
    require_unit(space, x);
    return Star{x, active_facets(space, x)};
}

bool in_star(const PolyhedralSpace& space, const Star& st, const Vec& y) {
    return std::any_of(st.face_ids.begin(), st.face_ids.end(),
                       [&](Eigen::Index f) { return space.hrep().row(f).dot(y.transpose()) == 1; });
}

bool is_smooth(const PolyhedralSpace& space, const Vec& x) {
    require_unit(space, x);
    return active_facets(space, x).size() == 1;
}

bool is_star_maximal_convex(const PolyhedralSpace& space, const Vec& x) {
    return star(space, x).convex();
}

Vec supporting_functional(const Face& face) {
    return face.functional;
}

PolyhedralSpace subspace_section(const PolyhedralSpace& space, const Mat& basis) {
    require_independent(space, basis);
    // f restricted to E, in basis coordinates: c -> f(basis c).
    const Mat restricted = space.hrep() * basis;
    std::string name = space.name().empty() ? std::string() : "section(" + space.name() + ")";
    return PolyhedralSpace::from_functionals(restricted, std::move(name));
}

Mat face_section(const PolyhedralSpace& space, const Face& face, const Mat& basis) {
    require_independent(space, basis);
    const Mat a = space.hrep() * basis;
    const Mat e = face.functional.transpose() * basis;
    const Mat coords = polytope_vertices(a, Vec::Ones(a.rows()), e, Vec::Ones(1));
    Mat out(coords.rows(), space.dim());
    for (Eigen::Index k = 0; k < coords.rows(); ++k)
        out.row(k) = (basis * coords.row(k).transpose()).transpose();
    return out;
}

Mat basis_from(const std::vector<Vec>& vectors, Eigen::Index dim) {
    Mat b(dim, static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t k = 0; k < vectors.size(); ++k) {
        if (vectors[k].size() != dim)
            throw DimensionMismatch("basis vector " + std::to_string(k) + " has dimension " +
                                    std::to_string(vectors[k].size()) + ", expected " + std::to_string(dim));
        b.col(static_cast<Eigen::Index>(k)) = vectors[k];
    }
    return b;
}

}  // namespace polysphere
