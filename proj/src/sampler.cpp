#include "polysphere/sampler.hpp"

namespace polysphere {

int RationalSampler::integer(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

Rational RationalSampler::rational(int max_num, int max_den) {
    const int p = integer(-max_num, max_num);
    const int q = integer(1, max_den);
    return Rational(p, q);
}

Vec RationalSampler::vector(Eigen::Index dim, int max_num, int max_den) {
    Vec v(dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        v(i) = rational(max_num, max_den);
    return v;
}

Vec RationalSampler::convex_weights(Eigen::Index count) {
    Vec w(count);
    for (Eigen::Index i = 0; i < count; ++i)
        w(i) = integer(1, 9);
    return w / w.sum();
}

Vec RationalSampler::sphere_point(const PolyhedralSpace& space) {
    Vec v;
    do {
        v = vector(space.dim());
    } while (v.isZero());
    return v / norm(space, v);
}

Vec RationalSampler::face_point(const PolyhedralSpace& space, const Face& face) {
    const auto& ids = face.vertex_ids;
    std::vector<Eigen::Index> chosen;
    while (chosen.empty()) {
        for (auto id : ids)
            if (integer(0, 1) == 1)
                chosen.push_back(id);
    }
    const Vec w = convex_weights(static_cast<Eigen::Index>(chosen.size()));
    Vec p = Vec::Zero(space.dim());
    for (std::size_t k = 0; k < chosen.size(); ++k)
        p += w(static_cast<Eigen::Index>(k)) * space.vertex(chosen[k]);
    return p;
}

Vec RationalSampler::boundary_point(const PolyhedralSpace& space) {
    const auto f = integer(0, static_cast<int>(space.facet_count()) - 1);
    return face_point(space, facet(space, f));
}

}  // namespace polysphere
