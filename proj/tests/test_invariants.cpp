// Seeded property tests over the catalog.

#include <doctest.h>

#include "oracles.hpp"
#include "polysphere/catalog.hpp"
#include "polysphere/faces.hpp"
#include "polysphere/properties.hpp"
#include "polysphere/sampler.hpp"

using namespace polysphere;

namespace {

std::vector<PolyhedralSpace> small_catalog() {
    return {hexagon_space(), l1_space(2), linf_space(2), l1_space(3), linf_space(3), remark_section().section,
            linf_sum(l1_space(2), l1_space(1))};
}

}  // namespace

TEST_CASE("property: polarity is an involution") {
    for (const PolyhedralSpace& s : small_catalog()) {
        const PolyhedralSpace d = dual_space(s);
        CHECK(same_rows(d.vrep(), s.hrep()));
        CHECK(same_rows(d.hrep(), s.vrep()));
        CHECK(same_space(dual_space(d), s));
    }
}

TEST_CASE("property: norm axioms on samples") {
    RationalSampler rng(51);
    for (const PolyhedralSpace& s : small_catalog()) {
        for (int i = 0; i < 50; ++i) {
            const Vec x = rng.vector(s.dim());
            const Vec y = rng.vector(s.dim());
            const Rational t = rng.rational();
            CHECK(norm(s, Vec(x + y)) <= norm(s, x) + norm(s, y));
            CHECK(norm(s, Vec(t * x)) == oracle::abs(t) * norm(s, x));
            CHECK(norm(s, Vec(-x)) == norm(s, x));
        }
    }
}

TEST_CASE("property: star membership law") {
    RationalSampler rng(52);
    for (const PolyhedralSpace& s : small_catalog()) {
        CAPTURE(s.name());
        int shared_count = 0;
        for (int i = 0; i < 300; ++i) {
            // Mix boundary points (faces, ridges, vertices) and radial projections.
            const Vec x = (i % 2) ? rng.boundary_point(s) : rng.sphere_point(s);
            const Vec y = (i % 3) ? rng.boundary_point(s) : rng.sphere_point(s);
            bool shared = false;
            for (Eigen::Index f = 0; f < s.facet_count(); ++f)
                shared = shared || (s.functional(f).dot(x) == 1 && s.functional(f).dot(y) == 1);
            shared_count += shared;
            CHECK((norm(s, Vec(x + y)) == 2) == shared);
            CHECK(in_star(s, star(s, x), y) == shared);
        }
        CHECK(shared_count > 0);
    }
}

TEST_CASE("property: smooth iff star is maximal convex") {
    RationalSampler rng(53);
    for (const PolyhedralSpace& s : small_catalog()) {
        int smooth = 0;
        for (int i = 0; i < 100; ++i) {
            const Vec x = (i % 2) ? rng.boundary_point(s) : rng.sphere_point(s);
            CHECK(is_smooth(s, x) == is_star_maximal_convex(s, x));
            smooth += is_smooth(s, x);
            // A smooth point has its unique facet as its star.
            if (is_smooth(s, x))
                CHECK(star(s, x).face_ids == active_facets(s, x));
        }
        CHECK(smooth > 0);
        CHECK(smooth < 100);
    }
}

TEST_CASE("property: facets cover the sphere and are not nested") {
    RationalSampler rng(54);
    for (const PolyhedralSpace& s : small_catalog()) {
        for (Eigen::Index v = 0; v < s.vertex_count(); ++v)
            CHECK_FALSE(active_facets(s, s.vertex(v)).empty());
        for (int i = 0; i < 50; ++i)
            CHECK_FALSE(active_facets(s, rng.sphere_point(s)).empty());
        const auto& idx = s.facet_index();
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = 0; b < idx.size(); ++b)
                if (a != b)
                    CHECK_FALSE(std::includes(idx[b].begin(), idx[b].end(), idx[a].begin(), idx[a].end()));
    }
}

TEST_CASE("property: vertex sufficiency for condition (iii)") {
    RationalSampler rng(55);
    for (const PolyhedralSpace& s : {hexagon_space(), l1_space(2), linf_space(2), l1_space(3)}) {
        for (const Face& f : facets(s)) {
            Rational vmax = 0;
            for (Eigen::Index v = 0; v < s.vertex_count(); ++v)
                vmax = std::max(vmax, condition_iii_value(s, s.vertex(v), f).value);
            for (int i = 0; i < 10; ++i) {
                const Rational val = condition_iii_value(s, rng.sphere_point(s), f).value;
                CHECK(val <= vmax);
                CHECK(val >= 2);
            }
        }
    }
}

TEST_CASE("property: reports are symmetric under negation") {
    const PolyhedralSpace hex = hexagon_space();
    RationalSampler rng(56);
    for (int i = 0; i < 20; ++i) {
        const Vec x = rng.sphere_point(hex);
        for (const Face& f : facets(hex))
            CHECK(condition_iii_value(hex, x, f).value == condition_iii_value(hex, Vec(-x), negated(hex, f)).value);
    }
}

TEST_CASE("property: catalog expectations, and CL with smooth points gives (T)") {
    for (const CatalogEntry& e : catalog_entries()) {
        CAPTURE(e.name);
        const PolyhedralSpace s = resolve_catalog(e.name);
        const ClReport cl = check_cl(s);
        const TPropertyReport t = check_t_property(s);
        if (e.cl)
            CHECK(cl.is_cl == *e.cl);
        if (e.t_property)
            CHECK(t.holds == *e.t_property);
        if (cl.is_almost_cl && admits_smooth_points(s).admits)
            CHECK(t.holds);
    }
}
