#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "polysphere/linalg.hpp"
#include "polysphere/report.hpp"

namespace polysphere {

namespace {

constexpr double kSize = 480.0;
constexpr double kMargin = 70.0;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s(buf);
    return s == "-0.00" ? "0.00" : s;
}

struct Canvas {
    double scale;
    double px(const Rational& x) const { return kSize / 2 + to_double(x) * scale; }
    double py(const Rational& y) const { return kSize / 2 - to_double(y) * scale; }
};

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += c;
        }
    }
    return out;
}

void header(std::ostringstream& os, const std::string& title) {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
       << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    os << "<title>" << escape(title) << "</title>\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void render_planar(std::ostringstream& os, const PolyhedralSpace& space, const std::optional<TPropertyReport>& t) {
    double extent = 0;
    for (Eigen::Index v = 0; v < space.vertex_count(); ++v)
        for (Eigen::Index i = 0; i < 2; ++i)
            extent = std::max(extent, std::abs(to_double(space.vrep()(v, i))));
    const Canvas c{(kSize / 2 - kMargin) / extent};

    os << "<line x1=\"" << fmt(kMargin / 2) << "\" y1=\"" << fmt(kSize / 2) << "\" x2=\"" << fmt(kSize - kMargin / 2)
       << "\" y2=\"" << fmt(kSize / 2) << "\" stroke=\"#ccc\"/>\n";
    os << "<line x1=\"" << fmt(kSize / 2) << "\" y1=\"" << fmt(kMargin / 2) << "\" x2=\"" << fmt(kSize / 2)
       << "\" y2=\"" << fmt(kSize - kMargin / 2) << "\" stroke=\"#ccc\"/>\n";

    for (const Face& face : facets(space)) {
        const Vec a = space.vertex(face.vertex_ids.front());
        const Vec b = space.vertex(face.vertex_ids.back());
        os << "<line class=\"facet\" x1=\"" << fmt(c.px(a(0))) << "\" y1=\"" << fmt(c.py(a(1))) << "\" x2=\""
           << fmt(c.px(b(0))) << "\" y2=\"" << fmt(c.py(b(1))) << "\" stroke=\"#1f4e9c\" stroke-width=\"2\"/>\n";
        const Vec mid = (a + b) / Rational(2);
        const double lx = c.px(mid(0)) + to_double(face.functional(0)) * 26;
        const double ly = c.py(mid(1)) - to_double(face.functional(1)) * 26;
        os << "<text x=\"" << fmt(lx) << "\" y=\"" << fmt(ly) << "\" text-anchor=\"middle\" fill=\"#1f4e9c\">F"
           << face.index << " " << escape(format_point(face.functional)) << "</text>\n";
    }
    for (Eigen::Index v = 0; v < space.vertex_count(); ++v) {
        const Vec p = space.vertex(v);
        os << "<circle class=\"vertex\" cx=\"" << fmt(c.px(p(0))) << "\" cy=\"" << fmt(c.py(p(1)))
           << "\" r=\"3\" fill=\"#1f4e9c\"/>\n";
    }
    if (!t)
        return;
    std::set<Vec, bool (*)(const Vec&, const Vec&)> witnesses(lex_less);
    for (const auto& rec : t->records) {
        witnesses.insert(rec.value.witness_plus);
        witnesses.insert(rec.value.witness_minus);
    }
    for (const Vec& w : witnesses) {
        os << "<rect class=\"witness\" x=\"" << fmt(c.px(w(0)) - 3) << "\" y=\"" << fmt(c.py(w(1)) - 3)
           << "\" width=\"6\" height=\"6\" fill=\"none\" stroke=\"#2e8b57\"/>\n";
    }
    for (std::size_t k = 0; k < t->candidates.size(); ++k) {
        const Vec& p = t->candidates[k].point;
        os << "<circle class=\"candidate\" cx=\"" << fmt(c.px(p(0))) << "\" cy=\"" << fmt(c.py(p(1)))
           << "\" r=\"5\" fill=\"" << (t->candidates[k].maximal_star ? "#d2691e" : "#b22222") << "\"/>\n";
        os << "<text x=\"" << fmt(c.px(p(0)) + 7) << "\" y=\"" << fmt(c.py(p(1)) + 4) << "\" fill=\"#d2691e\">x" << k
           << "</text>\n";
    }
    os << "<text x=\"10\" y=\"" << fmt(kSize - 10) << "\">(T)-property: "
       << (t->holds ? "holds" : "not established") << "</text>\n";
}

void render_graph(std::ostringstream& os, const PolyhedralSpace& space) {
    const Eigen::Index n = space.facet_count();
    const double radius = kSize / 2 - kMargin;
    const double pi = std::acos(-1.0);
    auto node = [&](Eigen::Index f) {
        const double angle = 2 * pi * static_cast<double>(f) / static_cast<double>(n);
        return std::pair<double, double>{kSize / 2 + radius * std::cos(angle), kSize / 2 - radius * std::sin(angle)};
    };
    for (Eigen::Index f = 0; f < n; ++f) {
        for (Eigen::Index g = f + 1; g < n; ++g) {
            std::vector<Vec> shared;
            const auto& a = space.facet_vertices(f);
            const auto& b = space.facet_vertices(g);
            for (auto v : a)
                if (std::find(b.begin(), b.end(), v) != b.end())
                    shared.push_back(space.vertex(v));
            if (shared.empty() || rank(rows_to_matrix(shared, space.dim())) != space.dim() - 1)
                continue;
            const auto [x1, y1] = node(f);
            const auto [x2, y2] = node(g);
            os << "<line class=\"ridge\" x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2)
               << "\" y2=\"" << fmt(y2) << "\" stroke=\"#999\"/>\n";
        }
    }
    for (Eigen::Index f = 0; f < n; ++f) {
        const auto [x, y] = node(f);
        os << "<circle class=\"facet-node\" cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
           << "\" r=\"6\" fill=\"#1f4e9c\"/>\n";
        os << "<text x=\"" << fmt(x + 8) << "\" y=\"" << fmt(y - 8) << "\">F" << f << " "
           << escape(format_point(space.functional(f))) << "</text>\n";
    }
    os << "<text x=\"10\" y=\"" << fmt(kSize - 10) << "\">facet adjacency, dim " << space.dim() << "</text>\n";
}

}  // namespace

std::string render_svg(const PolyhedralSpace& space, const std::optional<TPropertyReport>& t_report) {
    std::ostringstream os;
    header(os, space.name().empty() ? "unit sphere" : "unit sphere of " + space.name());
    if (space.dim() == 2)
        render_planar(os, space, t_report);
    else
        render_graph(os, space);
    os << "</svg>\n";
    return os.str();
}

}  // namespace polysphere
