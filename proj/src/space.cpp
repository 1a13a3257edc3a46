#include "polysphere/space.hpp"

#include <algorithm>
#include <map>

#include "polysphere/errors.hpp"
#include "polysphere/linalg.hpp"
#include "polysphere/lp.hpp"
#include "polysphere/polytope.hpp"

namespace polysphere {

namespace {

struct LexCompare {
    bool operator()(const Vec& a, const Vec& b) const { return lex_less(a, b); }
};

std::optional<Eigen::Index> find_row(const Mat& m, const Vec& v) {
    if (v.size() != m.cols())
        return std::nullopt;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        if (m.row(i).transpose() == v)
            return i;
    return std::nullopt;
}

Mat drop_zero_rows(const Mat& m) {
    std::vector<Vec> rows;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        if (!m.row(i).isZero())
            rows.emplace_back(m.row(i).transpose());
    return rows_to_matrix(rows, m.cols());
}

void check_limits(const Mat& m, const Limits& limits, const char* what) {
    if (m.cols() < 1)
        throw DimensionMismatch("dimension must be at least 1");
    if (m.cols() > limits.max_dim)
        throw LimitExceeded("dimension " + std::to_string(m.cols()) + " exceeds the limit of " +
                            std::to_string(limits.max_dim));
    if (m.rows() > limits.max_facets)
        throw LimitExceeded(std::string("number of ") + what + " " + std::to_string(m.rows()) +
                            " exceeds the limit of " + std::to_string(limits.max_facets));
}

void check_symmetric(const Mat& m, const char* what) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        const Vec neg = -m.row(i).transpose();
        if (!find_row(m, neg))
            throw AsymmetricInput(std::string(what) + " " + format_point(m.row(i).transpose()) +
                                  " has no negated counterpart " + format_point(neg));
    }
}

// Rows of `candidates` whose active set in `partner` (rows p with
// <candidate, p> = 1) has full rank.
Mat full_rank_active(const Mat& candidates, const Mat& partner) {
    std::vector<Vec> kept;
    const Eigen::Index d = candidates.cols();
    for (Eigen::Index i = 0; i < candidates.rows(); ++i) {
        std::vector<Vec> active;
        for (Eigen::Index j = 0; j < partner.rows(); ++j)
            if (candidates.row(i).dot(partner.row(j)) == 1)
                active.emplace_back(partner.row(j).transpose());
        if (static_cast<Eigen::Index>(active.size()) >= d && rank(rows_to_matrix(active, d)) == d)
            kept.emplace_back(candidates.row(i).transpose());
    }
    return rows_to_matrix(kept, d);
}

}  // namespace

Mat unique_rows(const Mat& m) {
    std::vector<Vec> rows;
    std::map<Vec, bool, LexCompare> seen;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Vec r = m.row(i).transpose();
        if (seen.emplace(r, true).second)
            rows.push_back(std::move(r));
    }
    return rows_to_matrix(rows, m.cols());
}

bool same_rows(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    auto ra = matrix_rows(a);
    auto rb = matrix_rows(b);
    std::sort(ra.begin(), ra.end(), lex_less);
    std::sort(rb.begin(), rb.end(), lex_less);
    return ra == rb;
}

PolyhedralSpace::PolyhedralSpace(Mat hrep, Mat vrep, std::string name)
    : hrep_(std::move(hrep)), vrep_(std::move(vrep)), name_(std::move(name)) {
    facet_index_.resize(static_cast<std::size_t>(hrep_.rows()));
    for (Eigen::Index f = 0; f < hrep_.rows(); ++f)
        for (Eigen::Index v = 0; v < vrep_.rows(); ++v)
            if (hrep_.row(f).dot(vrep_.row(v)) == 1)
                facet_index_[static_cast<std::size_t>(f)].push_back(v);
    for (Eigen::Index f = 0; f < hrep_.rows(); ++f)
        neg_facet_.push_back(*find_row(hrep_, -hrep_.row(f).transpose()));
    for (Eigen::Index v = 0; v < vrep_.rows(); ++v)
        neg_vertex_.push_back(*find_row(vrep_, -vrep_.row(v).transpose()));
}

PolyhedralSpace PolyhedralSpace::from_functionals(const Mat& functionals, std::string name, const Limits& limits) {
    check_limits(functionals, limits, "functionals");
    const Mat fs = unique_rows(drop_zero_rows(functionals));
    check_symmetric(fs, "functional");
    const Eigen::Index d = fs.cols();
    if (rank(fs) < d) {
        Mat probe = fs.rows() ? fs : Mat(Mat::Zero(1, d));
        throw DegenerateInput("unit ball is unbounded along " + format_point(nullspace(probe).col(0)),
                              nullspace(probe).col(0));
    }
    const Mat verts = polytope_vertices(fs, Vec::Ones(fs.rows()));
    const Mat facets = full_rank_active(fs, verts);
    return PolyhedralSpace(facets, verts, std::move(name));
}

PolyhedralSpace PolyhedralSpace::from_vertices(const Mat& vertices, std::string name, const Limits& limits) {
    check_limits(vertices, limits, "points");
    const Mat vs = unique_rows(drop_zero_rows(vertices));
    check_symmetric(vs, "point");
    const Eigen::Index d = vs.cols();
    if (rank(vs) < d) {
        Mat probe = vs.rows() ? vs : Mat(Mat::Zero(1, d));
        throw DegenerateInput("points span a lower-dimensional subspace; functional " +
                                  format_point(nullspace(probe).col(0)) + " vanishes on all of them",
                              nullspace(probe).col(0));
    }
    const Mat facets = polytope_vertices(vs, Vec::Ones(vs.rows()));
    if (facets.rows() > limits.max_facets)
        throw LimitExceeded("hull has " + std::to_string(facets.rows()) + " facets, exceeding the limit of " +
                            std::to_string(limits.max_facets));
    const Mat verts = full_rank_active(vs, facets);
    return PolyhedralSpace(facets, verts, std::move(name));
}

PolyhedralSpace PolyhedralSpace::from_polar_pair(Mat functionals, Mat vertices, std::string name) {
    return PolyhedralSpace(std::move(functionals), std::move(vertices), std::move(name));
}

std::optional<Eigen::Index> PolyhedralSpace::find_vertex(const Vec& v) const {
    return find_row(vrep_, v);
}

std::optional<Eigen::Index> PolyhedralSpace::find_facet(const Vec& f) const {
    return find_row(hrep_, f);
}

PolyhedralSpace PolyhedralSpace::renamed(std::string name) const {
    PolyhedralSpace copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

Rational norm(const PolyhedralSpace& space, const Vec& x) {
    if (x.size() != space.dim())
        throw DimensionMismatch("point has dimension " + std::to_string(x.size()) + ", space has dimension " +
                                std::to_string(space.dim()));
    return (space.hrep() * x).maxCoeff();
}

Rational gauge(const PolyhedralSpace& space, const Vec& x) {
    if (x.size() != space.dim())
        throw DimensionMismatch("point has dimension " + std::to_string(x.size()) + ", space has dimension " +
                                std::to_string(space.dim()));
    // minimize sum(mu) subject to vrep^T mu = x, mu >= 0.
    const Eigen::Index n = space.vertex_count();
    LpProblem<Rational> lp(n);
    lp.minimize(Vec::Ones(n)).set_all_nonnegative();
    for (Eigen::Index i = 0; i < space.dim(); ++i)
        lp.add_constraint(space.vrep().col(i), Relation::Equal, x(i));
    const auto sol = solve_lp(lp);
    if (!sol.optimal())
        throw Error("gauge LP did not reach an optimum: " + std::string(to_string(sol.status)));
    return sol.value;
}

PolyhedralSpace dual_space(const PolyhedralSpace& space) {
    const std::string name = space.name().empty() ? std::string() : "dual(" + space.name() + ")";
    return PolyhedralSpace::from_polar_pair(space.vrep(), space.hrep(), name);
}

bool same_space(const PolyhedralSpace& a, const PolyhedralSpace& b) {
    return same_rows(a.vrep(), b.vrep()) && same_rows(a.hrep(), b.hrep());
}

}  // namespace polysphere
