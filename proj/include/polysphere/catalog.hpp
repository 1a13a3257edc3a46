#ifndef POLYSPHERE_CATALOG_HPP
#define POLYSPHERE_CATALOG_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polysphere/faces.hpp"

namespace polysphere {

/// ℓ1ⁿ: vertices ±eᵢ, facets all sign vectors. 1 <= n <= 6.
PolyhedralSpace l1_space(int n);

/// ℓ∞ⁿ: vertices all sign vectors, facets ±eᵢ*. 1 <= n <= 6.
PolyhedralSpace linf_space(int n);

/// ℝ² with ||(ξ, η)|| = max{|η|, |ξ| + |η|/2}.
PolyhedralSpace hexagon_space();

/// ||(a, b)|| = max(||a||_A, ||b||_B).
PolyhedralSpace linf_sum(const PolyhedralSpace& a, const PolyhedralSpace& b, const Limits& limits = {});

/// ||(a, b)|| = ||a||_A + ||b||_B.
PolyhedralSpace l1_sum(const PolyhedralSpace& a, const PolyhedralSpace& b, const Limits& limits = {});

/// Every f ⊕ g for f in hrep(A), g in hrep(B), before deduplication.
Mat l1_sum_functionals(const PolyhedralSpace& a, const PolyhedralSpace& b);

/// ℓ∞³ cut by E = span{(1,1,1), (1,-1,0)}, with the z = 1 facet's trace.
struct RemarkSection {
    PolyhedralSpace ambient;
    Mat basis;                 // columns (1,1,1) and (1,-1,0)
    PolyhedralSpace section;   // in basis coordinates
    Face top_facet;            // z = 1
    Mat face_trace;            // vertices of top_facet ∩ E, ambient coordinates
};

RemarkSection remark_section();

struct CatalogEntry {
    std::string name;
    std::string description;
    std::optional<bool> cl;            // expected check_cl verdict
    std::optional<bool> t_property;    // expected check_t_property verdict (default candidates)
    bool exploratory = false;          // expectation observed, not a known theorem
};

std::vector<CatalogEntry> catalog_entries();

/// Resolves a catalog expression:
///   hex | l1:N | linf:N | linfsum(E,E) | l1sum(E,E) | dual(E)
/// Throws ParseError (Syntax) with the offending column.
PolyhedralSpace resolve_catalog(std::string_view expr, const Limits& limits = {});

}  // namespace polysphere

#endif  // POLYSPHERE_CATALOG_HPP
