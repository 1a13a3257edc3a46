#ifndef POLYSPHERE_SAMPLER_HPP
#define POLYSPHERE_SAMPLER_HPP

#include <cstdint>
#include <random>

#include "polysphere/faces.hpp"

namespace polysphere {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2012u;

/// Seeded generator of small rational points. Identical seeds give identical
/// sequences, so every sampled check is reproducible.
class RationalSampler {
  public:
    explicit RationalSampler(std::uint64_t seed = kDefaultSeed) : rng_(seed) {}

    int integer(int lo, int hi);

    /// p/q with |p| <= max_num and 1 <= q <= max_den.
    Rational rational(int max_num = 8, int max_den = 6);

    Vec vector(Eigen::Index dim, int max_num = 8, int max_den = 6);

    /// Positive weights summing to 1.
    Vec convex_weights(Eigen::Index count);

    /// x / ||x|| for a random nonzero rational x.
    Vec sphere_point(const PolyhedralSpace& space);

    /// Convex combination of a random nonempty subset of the facet's
    /// vertices; lands on ridges and vertices as well as in the interior.
    Vec face_point(const PolyhedralSpace& space, const Face& face);

    /// face_point on a uniformly chosen facet.
    Vec boundary_point(const PolyhedralSpace& space);

    std::mt19937_64& engine() { return rng_; }

  private:
    std::mt19937_64 rng_;
};

}  // namespace polysphere

#endif  // POLYSPHERE_SAMPLER_HPP
