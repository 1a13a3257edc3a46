#include "polysphere/report.hpp"

#include <ostream>

namespace polysphere {

namespace {

std::string facet_label(const PolyhedralSpace& space, Eigen::Index f) {
    return "F" + std::to_string(f) + " " + format_point(space.functional(f));
}

}  // namespace

void write_space_summary(std::ostream& os, const PolyhedralSpace& space) {
    os << "space " << (space.name().empty() ? "<unnamed>" : space.name()) << ": dim " << space.dim() << ", "
       << space.facet_count() << " facets, " << space.vertex_count() << " vertices\n";
}

void write_facets(std::ostream& os, const PolyhedralSpace& space) {
    write_space_summary(os, space);
    for (Eigen::Index f = 0; f < space.facet_count(); ++f) {
        os << facet_label(space, f) << "  vertices:";
        for (auto v : space.facet_vertices(f))
            os << " " << format_point(space.vertex(v));
        os << "\n";
    }
}

void write_star(std::ostream& os, const PolyhedralSpace& space, const Star& st) {
    os << "star of " << format_point(st.center) << ": " << st.face_ids.size() << " facet(s)\n";
    for (auto f : st.face_ids)
        os << "  " << facet_label(space, f) << "\n";
    os << "smooth: " << (st.face_ids.size() == 1 ? "yes" : "no") << "\n";
    os << "verdict: " << (st.convex() ? "star is a maximal convex subset" : "star is not convex") << "\n";
}

void write_cl(std::ostream& os, const PolyhedralSpace& space, const ClReport& report) {
    write_space_summary(os, space);
    for (const auto& v : report.facets) {
        os << facet_label(space, v.facet) << ": ";
        if (v.passes)
            os << "ball = conv(C u -C)\n";
        else
            os << "vertex " << format_point(space.vertex(*v.outside_vertex)) << " outside conv(C u -C)\n";
    }
    os << "CL: " << (report.is_cl ? "yes" : "no") << "\n";
    os << "almost-CL: " << (report.is_almost_cl ? "yes" : "no") << "\n";
    if (report.counterexample_vertex)
        os << "counterexample: vertex " << format_point(space.vertex(*report.counterexample_vertex)) << " for "
           << facet_label(space, *report.counterexample_facet) << "\n";
    os << "verdict: " << (report.is_cl ? "holds" : "fails") << "\n";
}

void write_decomposition(std::ostream& os, const Face& face, const ClDecomposition& d) {
    os << "decomposition against " << format_point(face.functional) << ": lambda = " << to_string(d.lambda)
       << ", y1 = " << format_point(d.y1) << ", y2 = " << format_point(d.y2)
       << ", residual = " << to_string(d.residual) << "\n";
}

void write_t_property(std::ostream& os, const PolyhedralSpace& space, const TPropertyReport& report) {
    write_space_summary(os, space);
    os << "candidates:\n";
    for (std::size_t k = 0; k < report.candidates.size(); ++k) {
        const auto& c = report.candidates[k];
        os << "  x" << k << " = " << format_point(c.point) << "  ";
        if (c.maximal_star)
            os << "St = " << facet_label(space, *c.star_facet) << "\n";
        else
            os << "St not convex\n";
    }
    os << "condition (i) stars maximal convex: " << (report.condition_i ? "yes" : "no") << "\n";
    os << "condition (ii) stars cover the sphere: " << (report.condition_ii ? "yes" : "no");
    if (report.uncovered_facet)
        os << " (uncovered " << facet_label(space, *report.uncovered_facet) << ")";
    os << "\n";
    os << "condition (iii) min ||v - x+|| + ||v - x-|| per (vertex, candidate):\n";
    os << "  vertex";
    for (std::size_t k = 0; k < report.candidates.size(); ++k)
        if (report.candidates[k].maximal_star)
            os << "\tx" << k;
    os << "\n";
    std::size_t r = 0;
    for (Eigen::Index v = 0; v < space.vertex_count(); ++v) {
        os << "  " << format_point(space.vertex(v));
        while (r < report.records.size() && report.records[r].vertex == v) {
            os << "\t" << to_string(report.records[r].value.value);
            ++r;
        }
        os << "\n";
    }
    os << "condition (iii) all values <= 2: " << (report.condition_iii ? "yes" : "no") << "\n";
    if (report.violation) {
        const auto& rec = report.records[*report.violation];
        os << "  violation at vertex " << format_point(space.vertex(rec.vertex)) << ", candidate x" << rec.candidate
           << ": " << to_string(rec.value.value) << " with x+ = " << format_point(rec.value.witness_plus)
           << ", x- = " << format_point(rec.value.witness_minus) << "\n";
    }
    os << "verdict: " << (report.holds ? "holds" : "not established") << "\n";
}

void write_isometry(std::ostream& os, const SphereMap& map, const IsometryVerdict& verdict) {
    os << "map " << (map.domain.name().empty() ? "<domain>" : map.domain.name()) << " -> "
       << (map.codomain.name().empty() ? "<codomain>" : map.codomain.name()) << "\n";
    os << "checked pairs: " << verdict.checked_pairs << ", facet samples: " << verdict.sample_points << "\n";
    os << "status: " << to_string(verdict.status) << "\n";
    if (!verdict.reason.empty())
        os << "reason: " << verdict.reason << "\n";
    if (verdict.counterexample) {
        const auto& [x, y] = *verdict.counterexample;
        os << "counterexample: x = " << format_point(x) << ", y = " << format_point(y) << ", ||x - y|| = "
           << to_string(verdict.domain_distance) << ", ||Tx - Ty|| = " << to_string(verdict.codomain_distance) << "\n";
    }
    os << "verdict: " << (verdict.passed() ? "surjective isometry" : "rejected") << "\n";
}

void write_matrix(std::ostream& os, const Mat& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        os << "  [";
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            os << (j ? " " : "") << to_string(m(i, j));
        os << "]\n";
    }
}

void write_extension(std::ostream& os, const ExtensionCertificate& cert) {
    os << "linear extension:\n";
    write_matrix(os, cert.matrix);
    os << "transported functionals:\n";
    for (const auto& p : cert.functional_pairs)
        os << "  " << format_point(p.x_star) << " -> " << format_point(p.y_star) << "\n";
    os << "agrees on all vertices: " << (cert.agrees_on_vertices ? "yes" : "no") << "\n";
    os << "norm formula on " << cert.norm_samples << " samples: " << (cert.norm_formula ? "yes" : "no") << "\n";
    os << "maps ball vertices onto ball vertices: " << (cert.isometry ? "yes" : "no") << "\n";
    os << "verdict: certified\n";
}

void write_catalog(std::ostream& os, const std::vector<CatalogEntry>& entries) {
    auto verdict = [](const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "-"; };
    os << "name\tCL\t(T)\tnote\n";
    for (const auto& e : entries)
        os << e.name << "\t" << verdict(e.cl) << "\t" << verdict(e.t_property) << "\t" << e.description
           << (e.exploratory ? " (exploratory)" : "") << "\n";
}

}  // namespace polysphere
