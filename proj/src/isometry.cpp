#include "polysphere/isometry.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "polysphere/linalg.hpp"

namespace polysphere {

namespace {

struct LexCompare {
    bool operator()(const Vec& a, const Vec& b) const { return lex_less(a, b); }
};

Rational abs_max(const Mat& functionals, const Vec& z) {
    return (functionals * z).cwiseAbs().maxCoeff();
}

std::vector<Eigen::Index> image_of(const SphereMap& map, const std::vector<Eigen::Index>& ids) {
    std::vector<Eigen::Index> out;
    for (auto v : ids)
        out.push_back(map.vertex_map[static_cast<std::size_t>(v)]);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_permutation_of_range(const std::vector<Eigen::Index>& m, Eigen::Index n) {
    if (static_cast<Eigen::Index>(m.size()) != n)
        return false;
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (auto x : m) {
        if (x < 0 || x >= n || hit[static_cast<std::size_t>(x)])
            return false;
        hit[static_cast<std::size_t>(x)] = true;
    }
    return true;
}

// Linear map sending the rows of `from` to the rows of `to`, if one exists.
std::optional<Mat> fit_linear(const Mat& from, const Mat& to) {
    const auto ids = independent_rows(from);
    const Eigen::Index d = from.cols();
    if (static_cast<Eigen::Index>(ids.size()) != d)
        return std::nullopt;
    Mat src(d, d), dst(d, to.cols());
    for (Eigen::Index k = 0; k < d; ++k) {
        src.row(k) = from.row(ids[static_cast<std::size_t>(k)]);
        dst.row(k) = to.row(ids[static_cast<std::size_t>(k)]);
    }
    // m src^T = dst^T
    const Mat m = dst.transpose() * *inverse(Mat(src.transpose()));
    for (Eigen::Index r = 0; r < from.rows(); ++r)
        if (m * from.row(r).transpose() != to.row(r).transpose())
            return std::nullopt;
    return m;
}

Mat image_rows(const SphereMap& map, const std::vector<Eigen::Index>& ids) {
    Mat out(static_cast<Eigen::Index>(ids.size()), map.codomain.dim());
    for (std::size_t k = 0; k < ids.size(); ++k)
        out.row(static_cast<Eigen::Index>(k)) = map.codomain.vrep().row(map.vertex_map[static_cast<std::size_t>(ids[k])]);
    return out;
}

Mat domain_rows(const SphereMap& map, const std::vector<Eigen::Index>& ids) {
    Mat out(static_cast<Eigen::Index>(ids.size()), map.domain.dim());
    for (std::size_t k = 0; k < ids.size(); ++k)
        out.row(static_cast<Eigen::Index>(k)) = map.domain.vrep().row(ids[k]);
    return out;
}

IsometryVerdict malformed(std::string reason) {
    IsometryVerdict v;
    v.status = IsometryStatus::Malformed;
    v.reason = std::move(reason);
    return v;
}

}  // namespace

const char* to_string(IsometryStatus s) {
    switch (s) {
        case IsometryStatus::Isometry: return "isometry";
        case IsometryStatus::Malformed: return "malformed";
        case IsometryStatus::NotIsometry: return "not-isometry";
    }
    return "unknown";
}

SphereMap make_sphere_map(PolyhedralSpace domain, PolyhedralSpace codomain, std::vector<Eigen::Index> vertex_map,
                          std::optional<std::vector<Eigen::Index>> facet_map) {
    SphereMap map{std::move(domain), std::move(codomain), std::move(vertex_map), {}};
    if (facet_map) {
        map.facet_map = std::move(*facet_map);
        return map;
    }
    const bool in_range = std::all_of(map.vertex_map.begin(), map.vertex_map.end(), [&](Eigen::Index w) {
        return w >= 0 && w < map.codomain.vertex_count();
    });
    for (Eigen::Index f = 0; f < map.domain.facet_count(); ++f) {
        Eigen::Index match = -1;
        if (in_range && static_cast<Eigen::Index>(map.vertex_map.size()) == map.domain.vertex_count()) {
            const auto img = image_of(map, map.domain.facet_vertices(f));
            for (Eigen::Index g = 0; g < map.codomain.facet_count() && match < 0; ++g)
                if (map.codomain.facet_vertices(g) == img)
                    match = g;
        }
        map.facet_map.push_back(match);
    }
    return map;
}

SphereMap sphere_map_from_matrix(const PolyhedralSpace& domain, const PolyhedralSpace& codomain, const Mat& matrix) {
    if (matrix.rows() != codomain.dim() || matrix.cols() != domain.dim())
        throw DimensionMismatch("matrix shape does not match the spaces");
    std::vector<Eigen::Index> vm;
    for (Eigen::Index v = 0; v < domain.vertex_count(); ++v) {
        const Vec img = matrix * domain.vertex(v);
        const auto w = codomain.find_vertex(img);
        if (!w)
            throw Error("matrix sends vertex " + format_point(domain.vertex(v)) + " to " + format_point(img) +
                        ", which is not a codomain vertex");
        vm.push_back(*w);
    }
    return make_sphere_map(domain, codomain, std::move(vm));
}

std::optional<Mat> facet_linear_map(const SphereMap& map, Eigen::Index facet) {
    const auto& ids = map.domain.facet_vertices(facet);
    return fit_linear(domain_rows(map, ids), image_rows(map, ids));
}

Vec evaluate(const SphereMap& map, const Vec& x) {
    const auto active = active_facets(map.domain, x);
    if (norm(map.domain, x) != 1 || active.empty())
        throw NotOnSphere("point " + format_point(x) + " is not on the domain sphere");
    const auto m = facet_linear_map(map, active.front());
    if (!m)
        throw Error("sphere map is not linear on facet " + std::to_string(active.front()));
    return *m * x;
}

IsometryVerdict verify_isometry(const SphereMap& map, std::uint64_t seed) {
    const auto& X = map.domain;
    const auto& Y = map.codomain;
    if (X.dim() != Y.dim())
        return malformed("domain has dimension " + std::to_string(X.dim()) + ", codomain has dimension " +
                         std::to_string(Y.dim()));
    if (X.vertex_count() != Y.vertex_count() || !is_permutation_of_range(map.vertex_map, Y.vertex_count()))
        return malformed("vertex map is not a bijection between ball vertices");

    IsometryVerdict verdict;
    auto mismatch = [&](const Vec& x, const Vec& y, const Vec& tx, const Vec& ty) {
        const Rational dx = norm(X, Vec(x - y));
        const Rational dy = norm(Y, Vec(tx - ty));
        ++verdict.checked_pairs;
        if (dx == dy)
            return false;
        verdict.status = IsometryStatus::NotIsometry;
        verdict.reason = "distance not preserved";
        verdict.counterexample = std::make_pair(x, y);
        verdict.domain_distance = dx;
        verdict.codomain_distance = dy;
        return true;
    };

    // (b) vertex pair distances
    std::vector<Vec> tv;
    for (Eigen::Index v = 0; v < X.vertex_count(); ++v)
        tv.push_back(Y.vertex(map.vertex_map[static_cast<std::size_t>(v)]));
    for (Eigen::Index i = 0; i < X.vertex_count(); ++i)
        for (Eigen::Index j = i + 1; j < X.vertex_count(); ++j)
            if (mismatch(X.vertex(i), X.vertex(j), tv[static_cast<std::size_t>(i)], tv[static_cast<std::size_t>(j)]))
                return verdict;

    // (a) antipodality on vertices
    for (Eigen::Index v = 0; v < X.vertex_count(); ++v) {
        const auto image_of_neg = map.vertex_map[static_cast<std::size_t>(X.negated_vertex(v))];
        if (image_of_neg != Y.negated_vertex(map.vertex_map[static_cast<std::size_t>(v)])) {
            verdict.status = IsometryStatus::NotIsometry;
            verdict.reason = "T(-v) != -T(v)";
            verdict.counterexample = std::make_pair(X.vertex(v), Vec(-X.vertex(v)));
            verdict.domain_distance = 2;
            verdict.codomain_distance = norm(Y, Vec(tv[static_cast<std::size_t>(v)] - Y.vertex(image_of_neg)));
            return verdict;
        }
    }

    // (c) facet correspondence consistent with the vertex map
    if (X.facet_count() != Y.facet_count() || !is_permutation_of_range(map.facet_map, Y.facet_count()))
        return malformed("facet map is not a bijection between facets");
    std::vector<Mat> pieces;
    for (Eigen::Index f = 0; f < X.facet_count(); ++f) {
        const auto g = map.facet_map[static_cast<std::size_t>(f)];
        if (image_of(map, X.facet_vertices(f)) != Y.facet_vertices(g))
            return malformed("facet " + std::to_string(f) + " " + format_point(X.functional(f)) +
                             " is mapped to facet " + std::to_string(g) + " " + format_point(Y.functional(g)) +
                             " but its vertices are not sent onto that facet's vertices");
        auto piece = facet_linear_map(map, f);
        if (!piece)
            return malformed("vertex images on facet " + std::to_string(f) + " are not affinely consistent");
        pieces.push_back(std::move(*piece));
    }

    // (d) deterministic facet samples
    std::set<Vec, LexCompare> samples;
    RationalSampler sampler(seed);
    for (const Face& face : facets(X)) {
        const auto& ids = face.vertex_ids;
        for (std::size_t a = 0; a < ids.size(); ++a)
            for (std::size_t b = a + 1; b < ids.size(); ++b)
                samples.insert(Vec((X.vertex(ids[a]) + X.vertex(ids[b])) / Rational(2)));
        samples.insert(barycenter(X, face));
        for (int k = 0; k < 2; ++k) {
            const Vec p = sampler.face_point(X, face);
            samples.insert(p);
            samples.insert(Vec(-p));
        }
    }
    std::vector<Vec> points, images;
    for (Eigen::Index v = 0; v < X.vertex_count(); ++v) {
        points.push_back(X.vertex(v));
        images.push_back(tv[static_cast<std::size_t>(v)]);
    }
    std::map<Vec, Vec, LexCompare> image_by_point;
    for (const Vec& p : samples) {
        const auto active = active_facets(X, p);
        const Vec img = pieces[static_cast<std::size_t>(active.front())] * p;
        for (auto f : active)
            if (pieces[static_cast<std::size_t>(f)] * p != img)
                return malformed("images of " + format_point(p) + " under facets " + std::to_string(active.front()) +
                                 " and " + std::to_string(f) + " disagree");
        image_by_point.emplace(p, img);
        points.push_back(p);
        images.push_back(img);
    }
    verdict.sample_points = samples.size();

    for (const auto& [p, img] : image_by_point) {
        const auto it = image_by_point.find(Vec(-p));
        if (it != image_by_point.end() && it->second != -img) {
            verdict.status = IsometryStatus::NotIsometry;
            verdict.reason = "T(-x) != -T(x)";
            verdict.counterexample = std::make_pair(p, Vec(-p));
            verdict.domain_distance = 2;
            verdict.codomain_distance = norm(Y, Vec(img - it->second));
            return verdict;
        }
    }

    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (mismatch(points[i], points[j], images[i], images[j]))
                return verdict;
    return verdict;
}

TransportReport transported_functionals(const SphereMap& map) {
    const auto& X = map.domain;
    const auto& Y = map.codomain;
    if (static_cast<Eigen::Index>(map.facet_map.size()) != X.facet_count())
        throw PreconditionFailed("facet map does not cover every domain facet");
    TransportReport report;
    for (Eigen::Index f = 0; f < X.facet_count(); ++f) {
        const auto g = map.facet_map[static_cast<std::size_t>(f)];
        if (g < 0 || g >= Y.facet_count())
            throw PreconditionFailed("facet " + std::to_string(f) + " has no image facet");
        FunctionalPair pair{f, X.functional(f), Y.functional(g)};
        for (Eigen::Index v = 0; v < X.vertex_count() && report.certified; ++v) {
            const Vec tv = Y.vertex(map.vertex_map[static_cast<std::size_t>(v)]);
            if (pair.y_star.dot(tv) != pair.x_star.dot(X.vertex(v))) {
                report.certified = false;
                report.offending = std::make_pair(f, v);
            }
        }
        report.pairs.push_back(std::move(pair));
    }
    return report;
}

ExtensionCertificate extend(const SphereMap& map, std::uint64_t seed) {
    const auto verdict = verify_isometry(map, seed);
    if (!verdict.passed())
        throw PreconditionFailed(std::string("sphere map is not a verified isometry (") + to_string(verdict.status) +
                                 "): " + verdict.reason);
    const auto transport = transported_functionals(map);
    if (!transport.certified)
        throw NotExtendable("y*(Tv) != x*(v) for facet " + std::to_string(transport.offending->first) + " and vertex " +
                                std::to_string(transport.offending->second),
                            transport.offending->second);

    const auto& X = map.domain;
    const auto& Y = map.codomain;
    const Eigen::Index d = X.dim();
    ExtensionCertificate cert;
    cert.functional_pairs = transport.pairs;

    const auto basis = independent_rows(X.vrep());
    Mat src(d, d), dst(d, d);
    for (Eigen::Index k = 0; k < d; ++k) {
        const auto v = basis[static_cast<std::size_t>(k)];
        src.col(k) = X.vertex(v);
        dst.col(k) = Y.vertex(map.vertex_map[static_cast<std::size_t>(v)]);
    }
    const Mat src_inv = *inverse(src);
    cert.matrix = dst * src_inv;

    // (a) agreement on all vertices
    for (Eigen::Index v = 0; v < X.vertex_count(); ++v) {
        const Vec tv = Y.vertex(map.vertex_map[static_cast<std::size_t>(v)]);
        if (cert.matrix * X.vertex(v) != tv)
            throw NotExtendable("vertex " + format_point(X.vertex(v)) +
                                    " is a combination of the basis vertices but its image is not the same "
                                    "combination of their images",
                                v, basis, src_inv * X.vertex(v));
    }
    cert.agrees_on_vertices = true;

    // (b) norm formula through the transported functionals
    Mat xs(static_cast<Eigen::Index>(cert.functional_pairs.size()), d), ys(xs.rows(), d);
    for (std::size_t k = 0; k < cert.functional_pairs.size(); ++k) {
        xs.row(static_cast<Eigen::Index>(k)) = cert.functional_pairs[k].x_star.transpose();
        ys.row(static_cast<Eigen::Index>(k)) = cert.functional_pairs[k].y_star.transpose();
    }
    std::vector<Vec> zs;
    for (Eigen::Index i = 0; i < X.vertex_count(); ++i) {
        zs.push_back(X.vertex(i));
        for (Eigen::Index j = 0; j < X.vertex_count(); ++j) {
            if (i == j)
                continue;
            zs.push_back(X.vertex(i) - X.vertex(j));
            zs.push_back(X.vertex(i) - Rational(1, 2) * X.vertex(j));
        }
    }
    RationalSampler sampler(seed);
    for (int k = 0; k < 16; ++k)
        zs.push_back(sampler.vector(d));
    for (const Vec& z : zs) {
        const Vec mz = cert.matrix * z;
        const Rational nx = abs_max(xs, z);
        const Rational ny = abs_max(ys, mz);
        if (nx != norm(X, z) || ny != norm(Y, mz) || nx != ny)
            throw NotExtendable("norm formula fails at " + format_point(z));
    }
    cert.norm_samples = zs.size();
    cert.norm_formula = true;

    // (c) vertices onto vertices
    const Mat mapped = (cert.matrix * X.vrep().transpose()).transpose();
    if (!same_rows(mapped, Y.vrep()))
        throw NotExtendable("extension does not map the domain ball vertices onto the codomain ball vertices");
    cert.isometry = true;
    return cert;
}

NormFormulaReport norm_formula_check(const PolyhedralSpace& space, std::uint64_t seed) {
    NormFormulaReport report;
    std::vector<Vec> zs;
    for (Eigen::Index i = 0; i < space.vertex_count(); ++i) {
        zs.push_back(space.vertex(i));
        for (Eigen::Index j = i + 1; j < space.vertex_count(); ++j)
            zs.push_back(space.vertex(i) - space.vertex(j));
    }
    RationalSampler sampler(seed);
    for (int k = 0; k < 16; ++k)
        zs.push_back(sampler.vector(space.dim()));
    for (const Vec& z : zs) {
        ++report.samples;
        if (abs_max(space.hrep(), z) != gauge(space, z)) {
            report.holds = false;
            report.counterexample = z;
            return report;
        }
    }
    return report;
}

}  // namespace polysphere
