// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact rational equalities (tolerance 0).

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "polysphere/polysphere.hpp"

using namespace polysphere;

namespace {

struct Failure {
    std::string what;
};

void require(bool cond, const std::string& what) {
    if (!cond)
        throw Failure{what};
}

Vec v2(Rational a, Rational b) { return make_vec({a, b}); }

std::vector<PolyhedralSpace> catalog_spaces() {
    std::vector<PolyhedralSpace> out;
    for (const CatalogEntry& e : catalog_entries())
        out.push_back(resolve_catalog(e.name).renamed(e.name));
    return out;
}

// --------------------------------------------------------------------------

std::string hexagon_t_property() {
    const PolyhedralSpace hex = hexagon_space();
    const Vec x1 = v2(0, 1), x2 = v2(Rational(3, 4), Rational(1, 2)), x3 = v2(Rational(-3, 4), Rational(1, 2));
    const std::vector<Vec> a{x1, Vec(-x1), x2, Vec(-x2), x3, Vec(-x3)};

    const TPropertyReport r = check_t_property(hex, a);
    require(r.condition_i && r.condition_ii && r.condition_iii && r.holds, "check_t_property does not hold");
    require(r.records.size() == 36, "expected 6 x 6 records");
    for (const TRecord& rec : r.records)
        require(rec.value.value == 2, "record value " + to_string(rec.value.value) + " != 2");

    std::ostringstream out, err;
    require(run_cli({"check-t", "hex"}, out, err) == kExitHolds, "check-t hex did not exit 0");

    // Case 1: x in St(x1) against the face St(x2), and likewise St(x3).
    // Case 2: x in St(x2) against St(x1) and St(x3).
    const Face st_x1 = facet(hex, *star(hex, x1).face_ids.begin());
    const Face st_x2 = facet(hex, *star(hex, x2).face_ids.begin());
    const Face st_x3 = facet(hex, *star(hex, x3).face_ids.begin());
    const std::vector<std::pair<Face, std::vector<std::tuple<Face, Vec, Vec>>>> cases{
        {st_x1, {{st_x2, v2(Rational(1, 2), 1), v2(-1, 0)}, {st_x3, v2(Rational(-1, 2), 1), v2(1, 0)}}},
        {st_x2, {{st_x1, v2(Rational(1, 2), 1), v2(Rational(1, 2), -1)}, {st_x3, v2(Rational(-1, 2), 1), v2(1, 0)}}},
    };
    RationalSampler rng;
    std::size_t checked = 0;
    for (const auto& [home, targets] : cases) {
        std::vector<Vec> xs;
        for (auto v : home.vertex_ids)
            xs.push_back(hex.vertex(v));
        xs.push_back(barycenter(hex, home));
        for (int k = 0; k < 8; ++k)
            xs.push_back(rng.face_point(hex, home));
        for (const auto& [face, plus, minus] : targets) {
            require(face.functional.dot(plus) == 1, "witness " + format_point(plus) + " not in the star");
            require(face.functional.dot(minus) == -1, "witness " + format_point(minus) + " not in the opposite star");
            for (const Vec& x : xs) {
                const Rational direct = oracle::hex_norm(Vec(x - plus)) + oracle::hex_norm(Vec(x - minus));
                require(direct == 2, "witness sum at " + format_point(x) + " is " + to_string(direct));
                require(condition_iii_value(hex, x, face).value == 2, "minimum at " + format_point(x) + " != 2");
                ++checked;
            }
        }
    }
    return "36 records equal 2; published witnesses give 2 at " + std::to_string(checked) + " points";
}

std::string hexagon_not_almost_cl() {
    const PolyhedralSpace hex = hexagon_space();
    const ClReport r = check_cl(hex);
    require(!r.is_cl && !r.is_almost_cl, "hexagon reported almost-CL");
    require(r.counterexample_facet && r.counterexample_vertex, "no counterexample");
    const Face f = facet(hex, *r.counterexample_facet);
    std::vector<Vec> pts;
    for (auto v : f.vertex_ids) {
        pts.push_back(hex.vertex(v));
        pts.push_back(-hex.vertex(v));
    }
    const Vec v = hex.vertex(*r.counterexample_vertex);
    require(!oracle::in_hull_2d(pts, v), "counterexample vertex is inside conv(C u -C)");
    return "vertex " + format_point(v) + " outside conv(C u -C) for C = F" + format_point(f.functional);
}

std::string remark_regression() {
    const RemarkSection r = remark_section();
    require(r.face_trace.rows() == 1, "trace has " + std::to_string(r.face_trace.rows()) + " vertices");
    require(oracle::equal_vec(r.face_trace.row(0).transpose(), make_vec({1, 1, 1})), "trace is not (1,1,1)");
    for (const Vec& c : {v2(1, 0), v2(0, 1), v2(Rational(1, 2), Rational(1, 2))}) {
        require(norm(r.section, c) == 1, "section norm at " + format_point(c) + " is " + to_string(norm(r.section, c)));
        require(oracle::linf_norm(Vec(r.basis * c)) == 1, "ambient norm differs at " + format_point(c));
    }
    return "C_E = {(1, 1, 1)}; endpoints and midpoint have section norm 1";
}

std::string cl_catalog() {
    std::size_t spaces = 0;
    for (int n = 1; n <= 4; ++n) {
        for (const PolyhedralSpace& s : {l1_space(n), linf_space(n)}) {
            require(check_cl(s).is_cl, s.name() + " not CL");
            require(check_t_property(s).holds, s.name() + " (T) not established");
            ++spaces;
        }
    }
    std::size_t planar = 0;
    for (const PolyhedralSpace& s : catalog_spaces()) {
        if (s.dim() != 2)
            continue;
        bool expected = true;
        for (const Face& f : facets(s)) {
            std::vector<Vec> pts;
            for (auto v : f.vertex_ids) {
                pts.push_back(s.vertex(v));
                pts.push_back(-s.vertex(v));
            }
            for (Eigen::Index v = 0; v < s.vertex_count(); ++v)
                expected = expected && oracle::in_hull_2d(pts, s.vertex(v));
        }
        require(check_cl(s).is_cl == expected, "hull oracle disagrees on " + s.name());
        ++planar;
    }
    return std::to_string(spaces) + " spaces CL with (T); hull oracle agrees on " + std::to_string(planar) +
           " planar spaces";
}

void check_round_trip(const PolyhedralSpace& s, const std::string& ref, const Mat& m) {
    const SphereMap restricted = sphere_map_from_matrix(s, s, m);
    const SphereMap encoded = parse_map(serialize_map(restricted, ref, ref));
    const ExtensionCertificate c = extend(encoded);
    require(c.matrix == m, "recovered matrix differs on " + ref);
    require(c.agrees_on_vertices && c.norm_formula && c.isometry, "certificate incomplete on " + ref);
    // ||v_i - t v_j|| = max |x*(.)| = max |y*(M .)| = ||M v_i - t M v_j||
    for (Eigen::Index i = 0; i < s.vertex_count(); ++i) {
        for (Eigen::Index j = 0; j < s.vertex_count(); ++j) {
            for (const Rational& t : {Rational(1), Rational(1, 2), Rational(-1, 3), Rational(2)}) {
                const Vec z = s.vertex(i) - t * s.vertex(j);
                const Vec mz = m * z;
                Rational lhs = 0, rhs = 0;
                for (const FunctionalPair& p : c.functional_pairs) {
                    lhs = std::max(lhs, oracle::abs(p.x_star.dot(z)));
                    rhs = std::max(rhs, oracle::abs(p.y_star.dot(mz)));
                }
                require(lhs == norm(s, z) && rhs == norm(s, mz) && lhs == rhs,
                        "norm formula fails at " + format_point(z) + " on " + ref);
            }
        }
    }
}

std::string extension_round_trip() {
    const PolyhedralSpace hex = hexagon_space();
    const auto group = oracle::planar_symmetries(oracle::rows(hex.vrep()));
    require(group.size() == 12, "hexagon group has " + std::to_string(group.size()) + " elements");
    for (const Mat& m : group)
        check_round_trip(hex, "hex", m);
    std::mt19937_64 rng(kDefaultSeed);
    std::size_t perms = 0;
    for (const auto& [s, ref] : {std::pair{linf_space(3), std::string("linf:3")}, std::pair{l1_space(3), std::string("l1:3")}}) {
        for (int k = 0; k < 20; ++k) {
            check_round_trip(s, ref, oracle::signed_permutation(3, rng));
            ++perms;
        }
    }
    return "12 hexagon symmetries and " + std::to_string(perms) + " signed permutations recovered exactly";
}

std::string negative_soundness() {
    const PolyhedralSpace hex = hexagon_space();
    const auto hex_group = oracle::planar_symmetries(oracle::rows(hex.vrep()));
    const std::vector<std::pair<PolyhedralSpace, int>> spaces{
        {hex, 0}, {linf_space(3), 3}, {l1_space(3), 3}, {linf_space(2), 2}, {l1_space(2), 2}};
    std::mt19937_64 rng(kDefaultSeed + 1);
    int rejected = 0;
    while (rejected < 50) {
        const auto& [s, n] = spaces[rng() % spaces.size()];
        const Mat m = n == 0 ? hex_group[rng() % hex_group.size()] : oracle::signed_permutation(n, rng);
        std::vector<Eigen::Index> vm = sphere_map_from_matrix(s, s, m).vertex_map;
        const auto count = static_cast<std::size_t>(s.vertex_count());
        const std::size_t i = rng() % count;
        std::size_t j = rng() % count;
        if (i == j)
            continue;
        std::swap(vm[i], vm[j]);

        // Independent check that the swap breaks some vertex distance.
        const auto fs = oracle::brute_facets(s.vrep());
        bool isometric = true;
        for (std::size_t a = 0; a < count && isometric; ++a)
            for (std::size_t b = a + 1; b < count && isometric; ++b)
                isometric = oracle::norm(fs, Vec(s.vertex(a) - s.vertex(b))) ==
                            oracle::norm(fs, Vec(s.vertex(vm[a]) - s.vertex(vm[b])));
        if (isometric)
            continue;

        const IsometryVerdict v = verify_isometry(make_sphere_map(s, s, vm));
        require(v.status == IsometryStatus::NotIsometry, "swap accepted on " + s.name());
        require(v.counterexample.has_value(), "no counterexample on " + s.name());
        const auto a = s.find_vertex(v.counterexample->first);
        const auto b = s.find_vertex(v.counterexample->second);
        require(a && b, "counterexample is not a vertex pair");
        const Rational dx = oracle::norm(fs, Vec(s.vertex(*a) - s.vertex(*b)));
        const Rational dy = oracle::norm(fs, Vec(s.vertex(vm[static_cast<std::size_t>(*a)]) -
                                                s.vertex(vm[static_cast<std::size_t>(*b)])));
        require(dx != dy && dx == v.domain_distance && dy == v.codomain_distance,
                "counterexample distances do not reproduce");
        ++rejected;
    }
    return "50 perturbed bijections rejected with reproducible vertex-pair counterexamples";
}

std::string structural_invariants() {
    RationalSampler rng;
    std::size_t pairs = 0, points = 0, records = 0;
    for (const PolyhedralSpace& s : catalog_spaces()) {
        require(same_space(dual_space(dual_space(s)), s), "polarity not an involution on " + s.name());
        require(same_rows(dual_space(s).vrep(), s.hrep()), "dual vertices differ on " + s.name());

        for (int k = 0; k < 1000; ++k) {
            const Vec x = rng.boundary_point(s);
            Vec y;
            if (k % 2) {
                const auto act = active_facets(s, x);
                y = rng.face_point(s, facet(s, act[static_cast<std::size_t>(k) % act.size()]));
            } else {
                y = rng.sphere_point(s);
            }
            bool shared = false;
            for (Eigen::Index f = 0; f < s.facet_count(); ++f)
                shared = shared || (s.functional(f).dot(x) == 1 && s.functional(f).dot(y) == 1);
            require((norm(s, Vec(x + y)) == 2) == shared, "membership law fails on " + s.name());
            require(in_star(s, star(s, x), y) == shared, "in_star disagrees on " + s.name());
            ++pairs;
        }
        for (int k = 0; k < 200; ++k) {
            const Vec x = (k % 2) ? rng.boundary_point(s) : rng.sphere_point(s);
            require(is_smooth(s, x) == is_star_maximal_convex(s, x), "smooth/maximal mismatch on " + s.name());
            ++points;
        }
        for (const TRecord& rec : check_t_property(s).records) {
            require(rec.value.value >= 2, "condition (iii) value below 2 on " + s.name());
            ++records;
        }
    }
    return std::to_string(pairs) + " star pairs, " + std::to_string(points) + " smoothness points, " +
           std::to_string(records) + " condition (iii) records";
}

std::string sum_stability() {
    const std::vector<PolyhedralSpace> factors{l1_space(2), linf_space(2), l1_space(1)};
    std::size_t sums = 0;
    for (const auto& a : factors) {
        for (const auto& b : factors) {
            for (const PolyhedralSpace& s : {linf_sum(a, b), l1_sum(a, b)}) {
                require(check_cl(s).is_cl, s.name() + " not CL");
                require(check_t_property(s).holds, s.name() + " (T) not established");
                ++sums;
            }
            require(same_space(l1_sum(a, b), dual_space(linf_sum(dual_space(a), dual_space(b)))),
                    "dual-sum identity fails for " + a.name() + ", " + b.name());
        }
    }
    return std::to_string(sums) + " sums CL with (T); dual-sum identity exact";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
        {"hexagon-t-property", hexagon_t_property},
        {"hexagon-not-almost-cl", hexagon_not_almost_cl},
        {"remark-section", remark_regression},
        {"cl-catalog", cl_catalog},
        {"extension-round-trip", extension_round_trip},
        {"negative-soundness", negative_soundness},
        {"structural-invariants", structural_invariants},
        {"sum-stability", sum_stability},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string status = "PASS", detail;
        try {
            detail = run();
        } catch (const Failure& f) {
            status = "FAIL";
            detail = f.what;
        } catch (const std::exception& e) {
            status = "FAIL";
            detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs >= 10.0 && status == "PASS") {
            status = "FAIL";
            detail += " (exceeded 10 s)";
        }
        failed += status == "FAIL";
        char t[32];
        std::snprintf(t, sizeof t, "%.2fs", secs);
        std::cout << status << "  " << name << "  [" << t << "]  " << detail << "\n";
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
