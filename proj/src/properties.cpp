#include "polysphere/properties.hpp"

#include "polysphere/errors.hpp"
#include "polysphere/lp.hpp"

namespace polysphere {

FaceDistance distance_to_face(const PolyhedralSpace& space, const Vec& x, const Face& face) {
    const Mat verts = face_vertices(space, face);
    const Eigen::Index k = verts.rows();
    // Variables: convex weights w (k of them, >= 0), then t (free).
    // minimize t  s.t.  g(x) - g(verts^T w) <= t  for every facet functional g.
    LpProblem<Rational> lp(k + 1);
    Vec obj = Vec::Zero(k + 1);
    obj(k) = 1;
    lp.minimize(obj);
    for (Eigen::Index i = 0; i < k; ++i)
        lp.set_nonnegative(i);
    const Mat gv = space.hrep() * verts.transpose();
    const Vec gx = space.hrep() * x;
    for (Eigen::Index g = 0; g < space.facet_count(); ++g) {
        Vec row(k + 1);
        row.head(k) = -gv.row(g).transpose();
        row(k) = -1;
        lp.add_constraint(row, Relation::LessEqual, -gx(g));
    }
    Vec simplex = Vec::Ones(k + 1);
    simplex(k) = 0;
    lp.add_constraint(simplex, Relation::Equal, Rational(1));
    const auto sol = solve_lp(lp);
    if (!sol.optimal())
        throw Error("face distance LP is " + std::string(to_string(sol.status)));
    return FaceDistance{sol.value, verts.transpose() * sol.point.head(k)};
}

std::optional<Vec> hull_weights(const Mat& points, const Vec& x) {
    const Eigen::Index k = points.rows();
    LpProblem<Rational> lp(k);
    lp.minimize(Vec::Zero(k)).set_all_nonnegative();
    for (Eigen::Index i = 0; i < points.cols(); ++i)
        lp.add_constraint(points.col(i), Relation::Equal, x(i));
    lp.add_constraint(Vec::Ones(k), Relation::Equal, Rational(1));
    const auto sol = solve_lp(lp);
    if (!sol.optimal())
        return std::nullopt;
    return sol.point;
}

namespace {

Mat face_pair_vertices(const PolyhedralSpace& space, const Face& face) {
    const Mat plus = face_vertices(space, face);
    const Mat minus = face_vertices(space, negated(space, face));
    Mat both(plus.rows() + minus.rows(), space.dim());
    both << plus, minus;
    return both;
}

}  // namespace

ClReport check_cl(const PolyhedralSpace& space) {
    ClReport report;
    for (const Face& face : facets(space)) {
        ClFacetVerdict verdict{face.index, true, std::nullopt};
        const Mat hull = face_pair_vertices(space, face);
        const Vec values = space.vrep() * face.functional;
        for (Eigen::Index v = 0; v < space.vertex_count(); ++v) {
            // Vertices on C or -C are trivially inside.
            if (values(v) == 1 || values(v) == -1)
                continue;
            if (!hull_weights(hull, space.vertex(v))) {
                verdict.passes = false;
                verdict.outside_vertex = v;
                break;
            }
        }
        if (!verdict.passes && report.is_cl) {
            report.is_cl = false;
            report.counterexample_facet = face.index;
            report.counterexample_vertex = verdict.outside_vertex;
        }
        report.facets.push_back(verdict);
    }
    report.is_almost_cl = report.is_cl;
    return report;
}

SmoothPointReport admits_smooth_points(const PolyhedralSpace& space) {
    SmoothPointReport report;
    for (const Face& face : facets(space)) {
        const Vec b = barycenter(space, face);
        SmoothWitness w{face.index, b, active_facets(space, b).size()};
        report.admits = report.admits && w.smooth();
        report.witnesses.push_back(std::move(w));
    }
    return report;
}

ConditionIiiValue condition_iii_value(const PolyhedralSpace& space, const Vec& x, const Face& face) {
    if (norm(space, x) != 1)
        throw NotOnSphere("point " + format_point(x) + " is not on the unit sphere");
    const FaceDistance plus = distance_to_face(space, x, face);
    const FaceDistance minus = distance_to_face(space, x, negated(space, face));
    return ConditionIiiValue{plus.distance + minus.distance, plus.nearest, minus.nearest};
}

std::vector<Vec> default_candidates(const PolyhedralSpace& space) {
    std::vector<Vec> out;
    for (const Face& face : facets(space))
        out.push_back(barycenter(space, face));
    return out;
}

TPropertyReport check_t_property(const PolyhedralSpace& space, const std::optional<std::vector<Vec>>& candidates) {
    TPropertyReport report;
    const std::vector<Vec> points = candidates ? *candidates : default_candidates(space);
    for (const Vec& p : points) {
        const Star st = star(space, p);
        TCandidate c{p, st.convex(), std::nullopt};
        if (c.maximal_star)
            c.star_facet = st.face_ids.front();
        report.candidates.push_back(std::move(c));
    }

    report.condition_i = !report.candidates.empty();
    for (const auto& c : report.candidates)
        report.condition_i = report.condition_i && c.maximal_star;

    report.covering.assign(static_cast<std::size_t>(space.facet_count()), std::nullopt);
    for (std::size_t k = 0; k < report.candidates.size(); ++k) {
        const auto& sf = report.candidates[k].star_facet;
        if (sf && !report.covering[static_cast<std::size_t>(*sf)])
            report.covering[static_cast<std::size_t>(*sf)] = k;
    }
    report.condition_ii = true;
    for (Eigen::Index f = 0; f < space.facet_count(); ++f) {
        if (!report.covering[static_cast<std::size_t>(f)]) {
            report.condition_ii = false;
            report.uncovered_facet = f;
            break;
        }
    }

    // Condition (iii) on every ball vertex: the checked quantity is convex in
    // x, so its maximum over the ball is attained at a vertex.
    report.condition_iii = true;
    for (Eigen::Index v = 0; v < space.vertex_count(); ++v) {
        for (std::size_t k = 0; k < report.candidates.size(); ++k) {
            const auto& sf = report.candidates[k].star_facet;
            if (!sf)
                continue;
            TRecord rec{v, k, condition_iii_value(space, space.vertex(v), facet(space, *sf))};
            if (!rec.ok() && report.condition_iii) {
                report.condition_iii = false;
                report.violation = report.records.size();
            }
            report.records.push_back(std::move(rec));
        }
    }
    report.holds = report.condition_i && report.condition_ii && report.condition_iii;
    return report;
}

ClDecomposition cl_decomposition(const PolyhedralSpace& space, const Vec& x, const Face& face, const Rational& eps) {
    if (eps < 0)
        throw std::invalid_argument("decomposition tolerance must be nonnegative");
    if (norm(space, x) != 1)
        throw NotOnSphere("point " + format_point(x) + " is not on the unit sphere");
    if (!check_cl(space).is_almost_cl)
        throw PreconditionFailed("space is not almost-CL; a decomposition need not exist");

    const Mat plus = face_vertices(space, face);
    const Mat minus = face_vertices(space, negated(space, face));
    const Mat hull = face_pair_vertices(space, face);
    const auto w = hull_weights(hull, x);
    if (!w)
        throw Error("point " + format_point(x) + " is outside conv(C ∪ -C)");
    const Eigen::Index k = plus.rows();
    const Vec wp = w->head(k);
    const Vec wm = w->tail(minus.rows());

    ClDecomposition d;
    d.lambda = wp.sum();
    d.y1 = d.lambda == 0 ? Vec(plus.row(0).transpose()) : Vec(plus.transpose() * wp / d.lambda);
    d.y2 = d.lambda == 1 ? Vec(minus.row(0).transpose())
                         : Vec(minus.transpose() * wm / Rational(1 - d.lambda));
    d.residual = norm(space, Vec(d.lambda * d.y1 + (1 - d.lambda) * d.y2 - x));
    return d;
}

}  // namespace polysphere
