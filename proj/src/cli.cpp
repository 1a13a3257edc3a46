#include "polysphere/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "polysphere/io.hpp"
#include "polysphere/report.hpp"

namespace polysphere {

namespace {

struct Options {
    std::string space;
    std::string space_b;
    std::string sum_kind;
    std::string map_path;
    std::vector<std::string> point;
    std::string candidates;
    std::string eps = "0";
    std::string decompose;
    std::string svg;
    std::string kind = "H";
    int max_dim = 6;
    std::uint64_t seed = kDefaultSeed;
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw ParseError(ParseErrorKind::Io, "cannot write " + path);
    f << content;
}

std::optional<std::vector<Vec>> candidate_points(const Options& o, const PolyhedralSpace& space) {
    if (o.candidates.empty())
        return std::nullopt;
    return load_points(o.candidates, space.dim());
}

int cmd_facets(const Options& o, const Limits& lim, std::ostream& out) {
    write_facets(out, load_space(o.space, lim));
    return kExitHolds;
}

int cmd_star(const Options& o, const Limits& lim, std::ostream& out) {
    const PolyhedralSpace space = load_space(o.space, lim);
    const Vec x = parse_point(o.point);
    if (x.size() != space.dim())
        throw DimensionMismatch("point has " + std::to_string(x.size()) + " coordinates, space has dimension " +
                                std::to_string(space.dim()));
    const Star st = star(space, x);
    write_star(out, space, st);
    return st.convex() ? kExitHolds : kExitFails;
}

int cmd_check_cl(const Options& o, const Limits& lim, std::ostream& out) {
    const PolyhedralSpace space = load_space(o.space, lim);
    const ClReport report = check_cl(space);
    write_cl(out, space, report);
    if (!o.decompose.empty() && report.is_almost_cl) {
        const Vec x = parse_point({o.decompose});
        const Rational eps = parse_rational(o.eps);
        for (const Face& face : facets(space))
            write_decomposition(out, face, cl_decomposition(space, x, face, eps));
    }
    return report.is_cl ? kExitHolds : kExitFails;
}

int cmd_check_t(const Options& o, const Limits& lim, std::ostream& out) {
    const PolyhedralSpace space = load_space(o.space, lim);
    const TPropertyReport report = check_t_property(space, candidate_points(o, space));
    write_t_property(out, space, report);
    if (!o.svg.empty())
        write_file(o.svg, render_svg(space, report));
    return report.holds ? kExitHolds : kExitNotEstablished;
}

int cmd_verify(const Options& o, const Limits& lim, std::ostream& out) {
    const SphereMap map = load_map(o.map_path, lim);
    const IsometryVerdict verdict = verify_isometry(map, o.seed);
    write_isometry(out, map, verdict);
    return verdict.passed() ? kExitHolds : kExitFails;
}

int cmd_extend(const Options& o, const Limits& lim, std::ostream& out, std::ostream& err) {
    const SphereMap map = load_map(o.map_path, lim);
    try {
        write_extension(out, extend(map, o.seed));
    } catch (const PreconditionFailed& e) {
        write_isometry(out, map, verify_isometry(map, o.seed));
        err << "extend: " << e.what() << "\n";
        return kExitFails;
    } catch (const NotExtendable& e) {
        out << "verdict: not extendable\n";
        if (e.vertex()) {
            out << "witness: vertex " << format_point(map.domain.vertex(*e.vertex())) << " = ";
            for (std::size_t k = 0; k < e.basis().size(); ++k)
                out << (k ? " + " : "") << to_string(e.coefficients()(static_cast<Eigen::Index>(k))) << " * "
                    << format_point(map.domain.vertex(e.basis()[k]));
            out << "\n";
        }
        err << "extend: " << e.what() << "\n";
        return kExitFails;
    }
    return kExitHolds;
}

int cmd_sum(const Options& o, const Limits& lim, std::ostream& out) {
    const PolyhedralSpace a = load_space(o.space, lim);
    const PolyhedralSpace b = load_space(o.space_b, lim);
    const PolyhedralSpace s = o.sum_kind == "linf" ? linf_sum(a, b, lim) : l1_sum(a, b, lim);
    out << serialize_space(s, o.kind == "V" ? RepKind::V : RepKind::H);
    return kExitHolds;
}

int cmd_render(const Options& o, const Limits& lim, std::ostream& out) {
    const PolyhedralSpace space = load_space(o.space, lim);
    std::optional<TPropertyReport> t;
    if (space.dim() == 2)
        t = check_t_property(space, candidate_points(o, space));
    const std::string svg = render_svg(space, t);
    if (o.svg.empty())
        out << svg;
    else
        write_file(o.svg, svg);
    return kExitHolds;
}

int cmd_catalog(const Options& o, const Limits& lim, std::ostream& out) {
    if (o.space.empty()) {
        write_catalog(out, catalog_entries());
        return kExitHolds;
    }
    out << serialize_space(load_space(o.space, lim), o.kind == "V" ? RepKind::V : RepKind::H);
    return kExitHolds;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Polyhedral unit-sphere geometry: faces, stars, CL and (T)-property checks, sphere isometries"};
    app.name("polysphere");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--max-dim", o.max_dim, "Dimension cap for vertex enumeration (1..6)")->check(CLI::Range(1, 6));
    app.add_option("--seed", o.seed, "Seed of the sampled checks");

    auto space_arg = [&](CLI::App* sub) { sub->add_option("space", o.space, "Catalog expression or space file")->required(); };

    auto* facets_cmd = app.add_subcommand("facets", "List the facets (maximal convex subsets of the sphere)");
    space_arg(facets_cmd);

    auto* star_cmd = app.add_subcommand("star", "Star of a unit vector; exit 0 when it is a maximal convex set");
    space_arg(star_cmd);
    star_cmd->add_option("point", o.point, "Coordinates (use -- before a negative first coordinate)")->required();

    auto* cl_cmd = app.add_subcommand("check-cl", "Decide whether the ball is conv(C u -C) for every facet C");
    space_arg(cl_cmd);
    cl_cmd->add_option("--decompose", o.decompose, "Unit vector to decompose against every facet, \"x,y,...\"");
    cl_cmd->add_option("--eps", o.eps, "Decomposition tolerance (rational, default 0)");

    auto* t_cmd = app.add_subcommand("check-t", "Search a (T)-property certificate");
    space_arg(t_cmd);
    t_cmd->add_option("--candidates", o.candidates, "File with one candidate point per line");
    t_cmd->add_option("--svg", o.svg, "Also write an SVG rendering to this path");

    auto* verify_cmd = app.add_subcommand("verify-iso", "Verify a sphere map is a surjective isometry");
    verify_cmd->add_option("map", o.map_path, "Map file")->required();

    auto* extend_cmd = app.add_subcommand("extend", "Construct and certify the linear extension of a sphere map");
    extend_cmd->add_option("map", o.map_path, "Map file")->required();

    auto* sum_cmd = app.add_subcommand("sum", "Print the max-sum (linf) or l1-sum of two spaces");
    sum_cmd->add_option("type", o.sum_kind, "linf or l1")->required()->check(CLI::IsMember({"linf", "l1"}));
    sum_cmd->add_option("a", o.space, "First factor")->required();
    sum_cmd->add_option("b", o.space_b, "Second factor")->required();
    sum_cmd->add_option("--kind", o.kind, "Output representation H or V")->check(CLI::IsMember({"H", "V"}));

    auto* render_cmd = app.add_subcommand("render", "Render the sphere (2D) or facet adjacency graph as SVG");
    space_arg(render_cmd);
    render_cmd->add_option("--candidates", o.candidates, "File with one candidate point per line");
    render_cmd->add_option("--svg", o.svg, "Output path (default: standard output)");

    auto* catalog_cmd = app.add_subcommand("catalog", "List built-in spaces, or print one as a space file");
    catalog_cmd->add_option("space", o.space, "Catalog expression");
    catalog_cmd->add_option("--kind", o.kind, "Output representation H or V")->check(CLI::IsMember({"H", "V"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitHolds;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitHolds;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    const Limits lim{o.max_dim, 200};
    try {
        if (*facets_cmd) return cmd_facets(o, lim, out);
        if (*star_cmd) return cmd_star(o, lim, out);
        if (*cl_cmd) return cmd_check_cl(o, lim, out);
        if (*t_cmd) return cmd_check_t(o, lim, out);
        if (*verify_cmd) return cmd_verify(o, lim, out);
        if (*extend_cmd) return cmd_extend(o, lim, out, err);
        if (*sum_cmd) return cmd_sum(o, lim, out);
        if (*render_cmd) return cmd_render(o, lim, out);
        if (*catalog_cmd) return cmd_catalog(o, lim, out);
    } catch (const ParseError& e) {
        err << "parse error (" << to_string(e.kind()) << "): " << e.what() << "\n";
        return kExitUsage;
    } catch (const LimitExceeded& e) {
        err << "limit exceeded: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace polysphere
