#include <doctest.h>

#include "oracles.hpp"
#include "polysphere/catalog.hpp"
#include "polysphere/errors.hpp"
#include "polysphere/faces.hpp"
#include "polysphere/isometry.hpp"
#include "polysphere/sampler.hpp"

using namespace polysphere;

namespace {

Vec v2(Rational a, Rational b) { return make_vec({a, b}); }

Mat diag(std::initializer_list<int> d) {
    Mat m = Mat::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
    Eigen::Index i = 0;
    for (int x : d) {
        m(i, i) = x;
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("identity and antipodal maps of the hexagon") {
    const PolyhedralSpace hex = hexagon_space();
    const SphereMap id = sphere_map_from_matrix(hex, hex, diag({1, 1}));
    CHECK(verify_isometry(id).passed());
    const ExtensionCertificate c = extend(id);
    CHECK(c.matrix == diag({1, 1}));
    CHECK(c.agrees_on_vertices);
    CHECK(c.norm_formula);
    CHECK(c.isometry);
    for (const FunctionalPair& p : transported_functionals(id).pairs)
        CHECK(oracle::equal_vec(p.x_star, p.y_star));

    CHECK(extend(sphere_map_from_matrix(hex, hex, diag({-1, -1}))).matrix == diag({-1, -1}));
}

TEST_CASE("signed permutation of linf:3") {
    const PolyhedralSpace cube = linf_space(3);
    Mat m = Mat::Zero(3, 3);  // (x, y, z) -> (y, -x, z)
    m(0, 1) = 1;
    m(1, 0) = -1;
    m(2, 2) = 1;
    const SphereMap map = sphere_map_from_matrix(cube, cube, m);
    CHECK(verify_isometry(map).passed());
    const TransportReport t = transported_functionals(map);
    CHECK(t.certified);
    for (const FunctionalPair& p : t.pairs) {
        // y* = x* o M^-1, i.e. M^T y* = x*
        CHECK(oracle::equal_vec(Vec(m.transpose() * p.y_star), p.x_star));
        if (oracle::equal_vec(p.x_star, make_vec({0, 0, 1})))
            CHECK(oracle::equal_vec(p.y_star, make_vec({0, 0, 1})));
        if (oracle::equal_vec(p.x_star, make_vec({1, 0, 0})))
            CHECK(oracle::equal_vec(p.y_star, make_vec({0, -1, 0})));
    }
    CHECK(extend(map).matrix == m);
}

TEST_CASE("inconsistent facet map on l1:2 is malformed") {
    const PolyhedralSpace l1 = l1_space(2);
    std::vector<Eigen::Index> vm(static_cast<std::size_t>(l1.vertex_count()));
    for (std::size_t i = 0; i < vm.size(); ++i)
        vm[i] = static_cast<Eigen::Index>(i);
    std::vector<Eigen::Index> fm(static_cast<std::size_t>(l1.facet_count()));
    for (std::size_t i = 0; i < fm.size(); ++i)
        fm[i] = static_cast<Eigen::Index>(i);
    const auto a = *l1.find_facet(v2(1, 1));
    const auto b = *l1.find_facet(v2(1, -1));
    std::swap(fm[static_cast<std::size_t>(a)], fm[static_cast<std::size_t>(b)]);
    const IsometryVerdict v = verify_isometry(make_sphere_map(l1, l1, vm, fm));
    CHECK(v.status == IsometryStatus::Malformed);
    CHECK_THROWS_AS(extend(make_sphere_map(l1, l1, vm, fm)), PreconditionFailed);
}

TEST_CASE("non-bijective vertex map is malformed") {
    const PolyhedralSpace hex = hexagon_space();
    std::vector<Eigen::Index> vm(6, 0);
    CHECK(verify_isometry(make_sphere_map(hex, hex, vm)).status == IsometryStatus::Malformed);
}

TEST_CASE("hexagon symmetry group: twelve linear isometries") {
    const PolyhedralSpace hex = hexagon_space();
    const auto group = oracle::planar_symmetries(oracle::rows(hex.vrep()));
    REQUIRE(group.size() == 12);
    for (const Mat& m : group) {
        const SphereMap map = sphere_map_from_matrix(hex, hex, m);
        REQUIRE(verify_isometry(map).passed());
        const ExtensionCertificate c = extend(map);
        CHECK(c.matrix == m);
        const TransportReport t = transported_functionals(map);
        CHECK(t.certified);
        // The six functionals are permuted.
        std::vector<Vec> ys;
        for (const auto& p : t.pairs)
            ys.push_back(p.y_star);
        CHECK(oracle::same_set(ys, oracle::rows(hex.hrep())));
    }
}

TEST_CASE("one-dimensional spheres") {
    const PolyhedralSpace line = linf_space(1);
    const SphereMap flip = sphere_map_from_matrix(line, line, diag({-1}));
    CHECK(verify_isometry(flip).passed());
    CHECK(extend(flip).matrix == diag({-1}));
}

TEST_CASE("evaluate, star preservation and functional transport on sampled points") {
    std::mt19937_64 perm_rng(31);
    RationalSampler rng(32);
    for (const PolyhedralSpace& s : {linf_space(3), l1_space(3)}) {
        for (int trial = 0; trial < 5; ++trial) {
            const Mat m = oracle::signed_permutation(3, perm_rng);
            const SphereMap map = sphere_map_from_matrix(s, s, m);
            REQUIRE(verify_isometry(map).passed());
            const TransportReport t = transported_functionals(map);
            for (const Face& f : facets(s)) {
                const Vec x = barycenter(s, f);
                const Star st = star(s, evaluate(map, x));
                REQUIRE(st.face_ids.size() == 1);
                CHECK(st.face_ids[0] == map.facet_map[static_cast<std::size_t>(f.index)]);
            }
            for (int i = 0; i < 20; ++i) {
                const Vec x = rng.boundary_point(s);
                const Vec tx = evaluate(map, x);
                CHECK(oracle::equal_vec(tx, Vec(m * x)));
                CHECK(oracle::equal_vec(evaluate(map, Vec(-x)), Vec(-tx)));
                for (const FunctionalPair& p : t.pairs)
                    CHECK(p.y_star.dot(tx) == p.x_star.dot(x));
            }
        }
    }
}

TEST_CASE("a swapped vertex pair is refuted with a vertex pair") {
    const PolyhedralSpace hex = hexagon_space();
    std::vector<Eigen::Index> vm(6);
    for (std::size_t i = 0; i < 6; ++i)
        vm[i] = static_cast<Eigen::Index>(i);
    const auto a = *hex.find_vertex(v2(1, 0));
    const auto b = *hex.find_vertex(v2(Rational(1, 2), 1));
    std::swap(vm[static_cast<std::size_t>(a)], vm[static_cast<std::size_t>(b)]);
    const SphereMap map = make_sphere_map(hex, hex, vm);
    const IsometryVerdict v = verify_isometry(map);
    CHECK(v.status == IsometryStatus::NotIsometry);
    REQUIRE(v.counterexample);
    CHECK(v.domain_distance != v.codomain_distance);
    CHECK(hex.find_vertex(v.counterexample->first));
    CHECK(hex.find_vertex(v.counterexample->second));
}

TEST_CASE("norm_formula_check") {
    CHECK(norm_formula_check(hexagon_space()).holds);
    CHECK(norm_formula_check(l1_sum(linf_space(2), l1_space(1))).holds);
    CHECK(norm(hexagon_space(), v2(Rational(3, 4), Rational(-3, 2))) == Rational(3, 2));
    CHECK(norm(l1_space(2), v2(1, 1)) == 2);
}

TEST_CASE("sphere_map_from_matrix rejects non-isometries") {
    const PolyhedralSpace hex = hexagon_space();
    CHECK_THROWS(sphere_map_from_matrix(hex, hex, diag({2, 1})));
}
