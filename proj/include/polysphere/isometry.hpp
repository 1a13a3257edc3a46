#ifndef POLYSPHERE_ISOMETRY_HPP
#define POLYSPHERE_ISOMETRY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polysphere/errors.hpp"
#include "polysphere/faces.hpp"
#include "polysphere/sampler.hpp"

namespace polysphere {

/**
 * A piecewise-linear map between two unit spheres, given by a bijection of
 * ball vertices and a matching bijection of facets. A point of a domain
 * facet F is sent to the image of the unique linear map that agrees with
 * `vertex_map` on the vertices of F.
 */
struct SphereMap {
    PolyhedralSpace domain;
    PolyhedralSpace codomain;
    std::vector<Eigen::Index> vertex_map;   // domain vertex -> codomain vertex
    std::vector<Eigen::Index> facet_map;    // domain facet -> codomain facet, -1 if unmatched
};

/// Builds a SphereMap. When `facet_map` is omitted each domain facet is
/// matched to the codomain facet whose vertex set is its image (or -1).
SphereMap make_sphere_map(PolyhedralSpace domain, PolyhedralSpace codomain, std::vector<Eigen::Index> vertex_map,
                          std::optional<std::vector<Eigen::Index>> facet_map = {});

/// Restriction of a linear map to the sphere. Throws Error if `matrix` does
/// not send vertices to vertices.
SphereMap sphere_map_from_matrix(const PolyhedralSpace& domain, const PolyhedralSpace& codomain, const Mat& matrix);

/// The linear map agreeing with the vertex map on the given domain facet,
/// or nullopt when no such map exists.
std::optional<Mat> facet_linear_map(const SphereMap& map, Eigen::Index facet);

/// T(x) for a point on the domain sphere.
Vec evaluate(const SphereMap& map, const Vec& x);

enum class IsometryStatus { Isometry, Malformed, NotIsometry };
const char* to_string(IsometryStatus s);

struct IsometryVerdict {
    IsometryStatus status = IsometryStatus::Isometry;
    std::string reason;
    std::optional<std::pair<Vec, Vec>> counterexample;   // domain points x, y
    Rational domain_distance;
    Rational codomain_distance;
    std::size_t checked_pairs = 0;
    std::size_t sample_points = 0;

    bool passed() const { return status == IsometryStatus::Isometry; }
};

/// Checks the map is a well-formed surjective isometry of spheres: vertex
/// distances, antipodality, facet correspondence, and distances among a
/// deterministic set of facet samples (midpoints, barycenters, seeded
/// random points).
IsometryVerdict verify_isometry(const SphereMap& map, std::uint64_t seed = kDefaultSeed);

/// Domain facet functional x* paired with the functional y* of its image facet.
struct FunctionalPair {
    Eigen::Index domain_facet = -1;
    Vec x_star;
    Vec y_star;
};

struct TransportReport {
    bool certified = true;
    std::vector<FunctionalPair> pairs;
    std::optional<std::pair<Eigen::Index, Eigen::Index>> offending;  // (facet, vertex)
};

/// Pairs each domain facet functional with its image functional and checks
/// y*(T v) = x*(v) on every domain vertex.
TransportReport transported_functionals(const SphereMap& map);

struct ExtensionCertificate {
    Mat matrix;
    std::vector<FunctionalPair> functional_pairs;
    bool agrees_on_vertices = false;
    bool norm_formula = false;
    bool isometry = false;
    std::size_t norm_samples = 0;
};

/// The vertex images admit no linear map: `vertex` equals `coefficients`
/// times the basis vertices, but its image is not the same combination of
/// their images.
class NotExtendable : public Error {
  public:
    NotExtendable(const std::string& what, std::optional<Eigen::Index> vertex = {},
                  std::vector<Eigen::Index> basis = {}, Vec coefficients = {})
        : Error(what), vertex_(vertex), basis_(std::move(basis)), coefficients_(std::move(coefficients)) {}

    const std::optional<Eigen::Index>& vertex() const { return vertex_; }
    const std::vector<Eigen::Index>& basis() const { return basis_; }
    const Vec& coefficients() const { return coefficients_; }

  private:
    std::optional<Eigen::Index> vertex_;
    std::vector<Eigen::Index> basis_;
    Vec coefficients_;
};

/// Constructs the linear extension from vertex images and certifies it with
/// the transported functionals. Throws PreconditionFailed when the map is not
/// a verified isometry and NotExtendable when a certification step fails.
ExtensionCertificate extend(const SphereMap& map, std::uint64_t seed = kDefaultSeed);

struct NormFormulaReport {
    bool holds = true;
    std::size_t samples = 0;
    std::optional<Vec> counterexample;
};

/// ||z|| as the maximum of |x*(z)| over facet functionals agrees with the
/// gauge of the vertex polytope on vertices, pairwise vertex differences and
/// seeded random combinations.
NormFormulaReport norm_formula_check(const PolyhedralSpace& space, std::uint64_t seed = kDefaultSeed);

}  // namespace polysphere

#endif  // POLYSPHERE_ISOMETRY_HPP
