#include "polysphere/polytope.hpp"

#include <algorithm>

#include <boost/dynamic_bitset.hpp>

#include "polysphere/errors.hpp"
#include "polysphere/linalg.hpp"

namespace polysphere {

namespace {

using ZeroSet = boost::dynamic_bitset<>;

struct Ray {
    Vec coords;
    ZeroSet zeros;
};

void normalize(Vec& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v(i) != 0) {
            const Rational s = abs(v(i));
            if (s != 1)
                v /= s;
            return;
        }
    }
}

}  // namespace

Mat extreme_rays(const Mat& cone) {
    const Eigen::Index n = cone.cols();
    const auto rows = static_cast<std::size_t>(cone.rows());
    const auto initial = independent_rows(cone);
    if (static_cast<Eigen::Index>(initial.size()) != n)
        throw DegenerateInput("cone is not pointed", nullspace(cone).col(0));

    Mat basis(n, n);
    for (Eigen::Index k = 0; k < n; ++k)
        basis.row(k) = cone.row(initial[static_cast<std::size_t>(k)]);
    const Mat inv = *inverse(basis);

    ZeroSet processed(rows);
    for (auto i : initial)
        processed.set(static_cast<std::size_t>(i));

    std::vector<Ray> rays;
    for (Eigen::Index k = 0; k < n; ++k) {
        Ray r{inv.col(k), ZeroSet(rows)};
        normalize(r.coords);
        for (Eigen::Index j = 0; j < n; ++j)
            if (j != k)
                r.zeros.set(static_cast<std::size_t>(initial[static_cast<std::size_t>(j)]));
        rays.push_back(std::move(r));
    }

    for (std::size_t row = 0; row < rows; ++row) {
        if (processed.test(row))
            continue;
        const auto a = cone.row(static_cast<Eigen::Index>(row));
        std::vector<Rational> value(rays.size());
        std::vector<std::size_t> plus, minus;
        std::vector<Ray> next;
        for (std::size_t k = 0; k < rays.size(); ++k) {
            value[k] = a.dot(rays[k].coords.transpose());
            if (value[k] > 0)
                plus.push_back(k);
            else if (value[k] < 0)
                minus.push_back(k);
        }
        if (minus.empty()) {
            for (std::size_t k = 0; k < rays.size(); ++k)
                if (value[k] == 0)
                    rays[k].zeros.set(row);
            processed.set(row);
            continue;
        }
        for (std::size_t k = 0; k < rays.size(); ++k) {
            if (value[k] >= 0) {
                Ray r = rays[k];
                if (value[k] == 0)
                    r.zeros.set(row);
                next.push_back(std::move(r));
            }
        }
        for (auto p : plus) {
            for (auto q : minus) {
                ZeroSet common = rays[p].zeros & rays[q].zeros;
                if (static_cast<Eigen::Index>(common.count()) < n - 2)
                    continue;
                bool adjacent = true;
                for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
                    if (k != p && k != q && common.is_subset_of(rays[k].zeros))
                        adjacent = false;
                }
                if (!adjacent)
                    continue;
                Ray r{value[p] * rays[q].coords - value[q] * rays[p].coords, std::move(common)};
                normalize(r.coords);
                r.zeros.set(row);
                next.push_back(std::move(r));
            }
        }
        rays = std::move(next);
        processed.set(row);
    }

    Mat out(static_cast<Eigen::Index>(rays.size()), n);
    for (std::size_t k = 0; k < rays.size(); ++k)
        out.row(static_cast<Eigen::Index>(k)) = rays[k].coords.transpose();
    return out;
}

Mat polytope_vertices(const Mat& a, const Vec& b) {
    const Eigen::Index d = a.cols();
    if (d == 0) {
        // Zero-dimensional: the single point exists iff every bound is >= 0.
        return (b.size() == 0 || b.minCoeff() >= 0) ? Mat(1, 0) : Mat(0, 0);
    }
    Mat cone(a.rows() + 1, d + 1);
    cone.setZero();
    cone(0, 0) = Rational(1);
    cone.block(1, 0, a.rows(), 1) = b;
    cone.block(1, 1, a.rows(), d) = -a;
    if (rank(cone) < d + 1) {
        const Mat ns = nullspace(a);
        throw DegenerateInput("polyhedron contains a line", ns.col(0));
    }
    const Mat rays = extreme_rays(cone);
    std::vector<Vec> verts;
    for (Eigen::Index k = 0; k < rays.rows(); ++k) {
        const Rational t = rays(k, 0);
        if (t == 0)
            throw DegenerateInput("polyhedron is unbounded", rays.row(k).tail(d).transpose());
        verts.emplace_back(rays.row(k).tail(d).transpose() / t);
    }
    std::sort(verts.begin(), verts.end(), lex_less);
    return rows_to_matrix(verts, d);
}

Mat polytope_vertices(const Mat& a, const Vec& b, const Mat& e, const Vec& f) {
    const auto base = solve(e, f);
    if (!base)
        return Mat(0, a.cols());
    const Mat dirs = nullspace(e);
    const Vec slack = b - a * *base;
    const Mat z = polytope_vertices(Mat(a * dirs), slack);
    std::vector<Vec> verts;
    for (Eigen::Index k = 0; k < z.rows(); ++k)
        verts.emplace_back(*base + dirs * z.row(k).transpose());
    std::sort(verts.begin(), verts.end(), lex_less);
    return rows_to_matrix(verts, a.cols());
}

}  // namespace polysphere
