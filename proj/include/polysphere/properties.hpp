#ifndef POLYSPHERE_PROPERTIES_HPP
#define POLYSPHERE_PROPERTIES_HPP

#include <optional>
#include <vector>

#include "polysphere/faces.hpp"

namespace polysphere {

/// Distance ||x - y|| from x to the nearest point y of a facet, in the
/// space's own norm, with a nearest point.
struct FaceDistance {
    Rational distance;
    Vec nearest;
};

FaceDistance distance_to_face(const PolyhedralSpace& space, const Vec& x, const Face& face);

/// x lies in conv(points rows)? Returns convex weights when it does.
std::optional<Vec> hull_weights(const Mat& points, const Vec& x);

// ---------------------------------------------------------------- CL

struct ClFacetVerdict {
    Eigen::Index facet = -1;
    bool passes = true;
    std::optional<Eigen::Index> outside_vertex;  // a vertex of B_X outside conv(C ∪ -C)
};

struct ClReport {
    bool is_cl = true;
    bool is_almost_cl = true;   // coincides with is_cl for polytopes
    std::vector<ClFacetVerdict> facets;
    std::optional<Eigen::Index> counterexample_facet;
    std::optional<Eigen::Index> counterexample_vertex;
};

/// Decides B_X = conv(C ∪ -C) for every facet C by hull membership of each
/// ball vertex.
ClReport check_cl(const PolyhedralSpace& space);

struct SmoothWitness {
    Eigen::Index facet = -1;
    Vec point;                 // facet barycenter
    std::size_t active = 0;    // number of facet functionals equal to 1 there
    bool smooth() const { return active == 1; }
};

struct SmoothPointReport {
    bool admits = true;
    std::vector<SmoothWitness> witnesses;
};

SmoothPointReport admits_smooth_points(const PolyhedralSpace& space);

// ---------------------------------------------------------------- (T)

/// min over y+ in face, y- in -face of ||x - y+|| + ||x - y-||.
struct ConditionIiiValue {
    Rational value;
    Vec witness_plus;
    Vec witness_minus;
};

ConditionIiiValue condition_iii_value(const PolyhedralSpace& space, const Vec& x, const Face& face);

struct TCandidate {
    Vec point;
    bool maximal_star = false;               // condition (i)
    std::optional<Eigen::Index> star_facet;  // set when maximal_star
};

struct TRecord {
    Eigen::Index vertex = -1;
    std::size_t candidate = 0;
    ConditionIiiValue value;
    bool ok() const { return value.value <= 2; }
};

enum class TVerdict { Holds, NotEstablished };

struct TPropertyReport {
    bool holds = false;
    std::vector<TCandidate> candidates;
    bool condition_i = false;
    bool condition_ii = false;
    bool condition_iii = false;
    std::vector<std::optional<std::size_t>> covering;  // facet -> candidate whose star it is
    std::optional<Eigen::Index> uncovered_facet;
    std::vector<TRecord> records;                      // (vertex, candidate) grid, vertex-major
    std::optional<std::size_t> violation;              // index into records

    TVerdict verdict() const { return holds ? TVerdict::Holds : TVerdict::NotEstablished; }
};

/// Certificate search for the (T)-property with the given candidate points
/// (default: one barycenter per facet). A failed search means "not
/// established", never "fails".
TPropertyReport check_t_property(const PolyhedralSpace& space, const std::optional<std::vector<Vec>>& candidates = {});

std::vector<Vec> default_candidates(const PolyhedralSpace& space);

// ---------------------------------------------------------------- decomposition

struct ClDecomposition {
    Rational lambda;
    Vec y1;   // in face
    Vec y2;   // in -face
    Rational residual;   // ||lambda y1 + (1 - lambda) y2 - x||
};

/// Writes x as lambda y1 + (1 - lambda) y2 with y1 in face, y2 in -face.
/// Requires an almost-CL space; the representation is exact (residual 0).
ClDecomposition cl_decomposition(const PolyhedralSpace& space, const Vec& x, const Face& face,
                                 const Rational& eps = Rational(0));

}  // namespace polysphere

#endif  // POLYSPHERE_PROPERTIES_HPP
