#ifndef POLYSPHERE_REPORT_HPP
#define POLYSPHERE_REPORT_HPP

#include <iosfwd>
#include <optional>

#include "polysphere/catalog.hpp"
#include "polysphere/isometry.hpp"
#include "polysphere/properties.hpp"

namespace polysphere {

// Plain-text reports. Output depends only on the inputs.

void write_space_summary(std::ostream& os, const PolyhedralSpace& space);
void write_facets(std::ostream& os, const PolyhedralSpace& space);
void write_star(std::ostream& os, const PolyhedralSpace& space, const Star& st);
void write_cl(std::ostream& os, const PolyhedralSpace& space, const ClReport& report);
void write_decomposition(std::ostream& os, const Face& face, const ClDecomposition& d);
void write_t_property(std::ostream& os, const PolyhedralSpace& space, const TPropertyReport& report);
void write_isometry(std::ostream& os, const SphereMap& map, const IsometryVerdict& verdict);
void write_extension(std::ostream& os, const ExtensionCertificate& cert);
void write_matrix(std::ostream& os, const Mat& m);
void write_catalog(std::ostream& os, const std::vector<CatalogEntry>& entries);

/// Static SVG. Two-dimensional spaces are drawn as the unit sphere with its
/// facets, the candidate points and the condition-(iii) witnesses; higher
/// dimensions as the facet adjacency graph.
std::string render_svg(const PolyhedralSpace& space, const std::optional<TPropertyReport>& t_report = {});

}  // namespace polysphere

#endif  // POLYSPHERE_REPORT_HPP
