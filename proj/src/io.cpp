#include "polysphere/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

#include "polysphere/catalog.hpp"

namespace polysphere {

namespace {

struct Token {
    std::string text;
    int column = 0;   // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    const auto end = line.find('#');
    const std::string body = line.substr(0, end);
    std::size_t i = 0;
    while (i < body.size()) {
        while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i])))
            ++i;
        if (i >= body.size())
            break;
        const auto start = i;
        while (i < body.size() && !std::isspace(static_cast<unsigned char>(body[i])))
            ++i;
        out.push_back({body.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

bool numeric_start(const std::string& t) {
    const char c = t.front();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.';
}

[[noreturn]] void syntax(const std::string& msg, int line, int column) {
    throw ParseError(ParseErrorKind::Syntax, msg, line, column);
}

Vec parse_row(const std::vector<Token>& toks, std::size_t begin, std::size_t end, int line) {
    Vec v(static_cast<Eigen::Index>(end - begin));
    for (std::size_t k = begin; k < end; ++k)
        v(static_cast<Eigen::Index>(k - begin)) = parse_rational(toks[k].text, line, toks[k].column);
    return v;
}

// Reads the magic first line "<magic> <version>"; returns the next line number.
void expect_magic(const std::vector<Token>& toks, const std::string& magic, int line) {
    if (toks.empty() || toks[0].text != magic)
        syntax("expected '" + magic + " <version>' as the first line", line, toks.empty() ? 1 : toks[0].column);
    if (toks.size() != 2 || toks[1].text != "1")
        syntax("unsupported " + magic + " format version", line, toks.size() > 1 ? toks[1].column : 1);
}

std::filesystem::path ref_path(const std::string& ref, const std::filesystem::path& base_dir) {
    std::filesystem::path p(ref);
    if (p.is_relative() && !base_dir.empty())
        p = base_dir / p;
    return p;
}

}  // namespace

SpaceFile read_space_file(std::istream& in) {
    SpaceFile file;
    std::string raw;
    int line = 0;
    bool seen_magic = false;
    bool seen_dim = false;
    bool seen_kind = false;
    std::vector<Vec> rows;
    while (std::getline(in, raw)) {
        ++line;
        const auto toks = tokenize(raw);
        if (toks.empty())
            continue;
        if (!seen_magic) {
            expect_magic(toks, "polysphere-space", line);
            seen_magic = true;
            continue;
        }
        const std::string& key = toks[0].text;
        if (numeric_start(key)) {
            if (!seen_dim)
                syntax("'dim' must precede the data rows", line, toks[0].column);
            if (static_cast<Eigen::Index>(toks.size()) != file.dim)
                throw ParseError(ParseErrorKind::DimensionMismatch,
                                 "row has " + std::to_string(toks.size()) + " entries, expected " +
                                     std::to_string(file.dim),
                                 line, toks[0].column);
            rows.push_back(parse_row(toks, 0, toks.size(), line));
            continue;
        }
        if (!rows.empty())
            syntax("header key '" + key + "' after data rows", line, toks[0].column);
        if (key == "dim") {
            if (toks.size() != 2)
                syntax("expected 'dim <n>'", line, toks[0].column);
            try {
                file.dim = std::stoi(toks[1].text);
            } catch (const std::exception&) {
                syntax("dimension must be a positive integer", line, toks[1].column);
            }
            if (file.dim < 1)
                syntax("dimension must be a positive integer", line, toks[1].column);
            seen_dim = true;
        } else if (key == "kind") {
            if (toks.size() != 2 || (toks[1].text != "H" && toks[1].text != "V"))
                syntax("expected 'kind H' or 'kind V'", line, toks.size() > 1 ? toks[1].column : toks[0].column);
            file.kind = toks[1].text == "H" ? RepKind::H : RepKind::V;
            seen_kind = true;
        } else if (key == "name") {
            if (toks.size() != 2)
                syntax("expected 'name <identifier>'", line, toks[0].column);
            file.name = toks[1].text;
        } else if (key == "symmetric") {
            if (toks.size() != 1)
                syntax("'symmetric' takes no value", line, toks[1].column);
            file.symmetric_closure = true;
        } else {
            syntax("unknown header key '" + key + "'", line, toks[0].column);
        }
    }
    if (!seen_magic)
        syntax("empty space file", line, 1);
    if (!seen_dim || !seen_kind)
        syntax("space file needs both 'dim' and 'kind'", line, 1);
    if (rows.empty())
        syntax("space file has no data rows", line, 1);
    file.rows = rows_to_matrix(rows, file.dim);
    return file;
}

PolyhedralSpace build_space(const SpaceFile& file, const Limits& limits) {
    Mat rows = file.rows;
    if (file.symmetric_closure) {
        Mat both(2 * rows.rows(), rows.cols());
        both << rows, -rows;
        rows = both;
    }
    try {
        return file.kind == RepKind::H ? PolyhedralSpace::from_functionals(rows, file.name, limits)
                                       : PolyhedralSpace::from_vertices(rows, file.name, limits);
    } catch (const AsymmetricInput& e) {
        throw ParseError(ParseErrorKind::Asymmetric, std::string(e.what()) + " (add 'symmetric' to imply negations)");
    } catch (const DegenerateInput& e) {
        throw ParseError(ParseErrorKind::Degenerate, e.what());
    }
}

PolyhedralSpace parse_space(std::istream& in, const Limits& limits) {
    return build_space(read_space_file(in), limits);
}

PolyhedralSpace parse_space(const std::string& text, const Limits& limits) {
    std::istringstream in(text);
    return parse_space(in, limits);
}

PolyhedralSpace load_space(const std::string& ref, const Limits& limits, const std::filesystem::path& base_dir) {
    const auto path = ref_path(ref, base_dir);
    std::error_code ec;
    if (std::filesystem::is_regular_file(path, ec)) {
        std::ifstream in(path);
        if (!in)
            throw ParseError(ParseErrorKind::Io, "cannot read " + path.string());
        try {
            PolyhedralSpace s = parse_space(in, limits);
            return s.name().empty() ? s.renamed(path.filename().string()) : s;
        } catch (const ParseError& e) {
            throw ParseError(e, path.string());
        }
    }
    return resolve_catalog(ref, limits);
}

std::string serialize_space(const PolyhedralSpace& space, RepKind kind) {
    std::ostringstream os;
    os << "polysphere-space 1\n";
    os << "dim " << space.dim() << "\n";
    os << "kind " << (kind == RepKind::H ? "H" : "V") << "\n";
    if (!space.name().empty() && space.name().find_first_of(" \t#") == std::string::npos)
        os << "name " << space.name() << "\n";
    const Mat& rows = kind == RepKind::H ? space.hrep() : space.vrep();
    for (Eigen::Index i = 0; i < rows.rows(); ++i)
        os << to_string(Vec(rows.row(i).transpose())) << "\n";
    return os.str();
}

SphereMap parse_map(std::istream& in, const std::filesystem::path& base_dir, const Limits& limits) {
    std::string raw;
    int line = 0;
    bool seen_magic = false;
    std::optional<PolyhedralSpace> domain, codomain;
    struct Pair {
        std::vector<Token> lhs, rhs;
        int line;
    };
    std::vector<Pair> vertex_pairs, facet_pairs;

    while (std::getline(in, raw)) {
        ++line;
        const auto toks = tokenize(raw);
        if (toks.empty())
            continue;
        if (!seen_magic) {
            expect_magic(toks, "polysphere-map", line);
            seen_magic = true;
            continue;
        }
        const std::string& key = toks[0].text;
        if (key == "domain" || key == "codomain") {
            if (toks.size() != 2)
                syntax("expected '" + key + " <space>'", line, toks[0].column);
            PolyhedralSpace s = [&] {
                try {
                    return load_space(toks[1].text, limits, base_dir);
                } catch (const ParseError& e) {
                    throw ParseError(e.kind(), key + " '" + toks[1].text + "': " + e.what(), line, toks[1].column);
                }
            }();
            (key == "domain" ? domain : codomain) = std::move(s);
            continue;
        }
        const bool is_facet = key == "facet";
        std::size_t arrow = toks.size();
        for (std::size_t k = 0; k < toks.size(); ++k)
            if (toks[k].text == "->")
                arrow = k;
        if (arrow == toks.size())
            syntax("expected '<source> -> <target>'", line, toks[0].column);
        Pair p{{toks.begin() + (is_facet ? 1 : 0), toks.begin() + static_cast<long>(arrow)},
               {toks.begin() + static_cast<long>(arrow) + 1, toks.end()},
               line};
        if (p.lhs.empty() || p.rhs.empty())
            syntax("empty side of '->'", line, toks[arrow].column);
        (is_facet ? facet_pairs : vertex_pairs).push_back(std::move(p));
    }
    if (!seen_magic)
        syntax("empty map file", line, 1);
    if (!domain || !codomain)
        syntax("map file needs both 'domain' and 'codomain'", line, 1);

    auto resolve = [&](const std::vector<Token>& side, const PolyhedralSpace& space, char prefix, bool facet,
                       int ln) -> Eigen::Index {
        const Eigen::Index count = facet ? space.facet_count() : space.vertex_count();
        if (side.size() == 1 && !side[0].text.empty() &&
            (side[0].text[0] == prefix || (std::isdigit(static_cast<unsigned char>(side[0].text[0])) &&
                                           (facet || space.dim() != 1)))) {
            const std::string digits = side[0].text[0] == prefix ? side[0].text.substr(1) : side[0].text;
            if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
                syntax("malformed index '" + side[0].text + "'", ln, side[0].column);
            const Eigen::Index idx = std::stol(digits);
            if (idx < 0 || idx >= count)
                syntax("index " + digits + " out of range 0.." + std::to_string(count - 1), ln, side[0].column);
            return idx;
        }
        if (static_cast<Eigen::Index>(side.size()) != space.dim())
            throw ParseError(ParseErrorKind::DimensionMismatch,
                             "point has " + std::to_string(side.size()) + " coordinates, expected " +
                                 std::to_string(space.dim()),
                             ln, side[0].column);
        const Vec v = parse_row(side, 0, side.size(), ln);
        const auto idx = facet ? space.find_facet(v) : space.find_vertex(v);
        if (!idx)
            syntax(format_point(v) + " is not a " + (facet ? "facet functional" : "ball vertex") + " of " +
                       (space.name().empty() ? std::string("the space") : space.name()),
                   ln, side[0].column);
        return *idx;
    };

    std::vector<Eigen::Index> vm(static_cast<std::size_t>(domain->vertex_count()), -1);
    std::vector<bool> explicit_pair(vm.size(), false);
    for (const auto& p : vertex_pairs) {
        const auto v = resolve(p.lhs, *domain, 'v', false, p.line);
        const auto w = resolve(p.rhs, *codomain, 'w', false, p.line);
        if (explicit_pair[static_cast<std::size_t>(v)])
            syntax("vertex " + std::to_string(v) + " is mapped twice", p.line, p.lhs[0].column);
        vm[static_cast<std::size_t>(v)] = w;
        explicit_pair[static_cast<std::size_t>(v)] = true;
    }
    for (Eigen::Index v = 0; v < domain->vertex_count(); ++v) {
        const auto nv = static_cast<std::size_t>(domain->negated_vertex(v));
        if (vm[static_cast<std::size_t>(v)] >= 0 && !explicit_pair[nv])
            vm[nv] = codomain->negated_vertex(vm[static_cast<std::size_t>(v)]);
    }
    for (Eigen::Index v = 0; v < domain->vertex_count(); ++v)
        if (vm[static_cast<std::size_t>(v)] < 0)
            syntax("domain vertex " + std::to_string(v) + " " + format_point(domain->vertex(v)) + " has no image",
                   line, 1);

    std::optional<std::vector<Eigen::Index>> fm;
    if (!facet_pairs.empty()) {
        fm.emplace(static_cast<std::size_t>(domain->facet_count()), -1);
        for (const auto& p : facet_pairs) {
            const auto f = resolve(p.lhs, *domain, 'f', true, p.line);
            const auto g = resolve(p.rhs, *codomain, 'g', true, p.line);
            (*fm)[static_cast<std::size_t>(f)] = g;
        }
        // Facets not listed follow the vertex map.
        const SphereMap derived = make_sphere_map(*domain, *codomain, vm);
        for (std::size_t f = 0; f < fm->size(); ++f)
            if ((*fm)[f] < 0)
                (*fm)[f] = derived.facet_map[f];
    }
    return make_sphere_map(std::move(*domain), std::move(*codomain), std::move(vm), std::move(fm));
}

SphereMap parse_map(const std::string& text, const std::filesystem::path& base_dir, const Limits& limits) {
    std::istringstream in(text);
    return parse_map(in, base_dir, limits);
}

SphereMap load_map(const std::filesystem::path& path, const Limits& limits) {
    std::ifstream in(path);
    if (!in)
        throw ParseError(ParseErrorKind::Io, "cannot read " + path.string());
    return parse_map(in, path.parent_path(), limits);
}

std::string serialize_map(const SphereMap& map, const std::string& domain_ref, const std::string& codomain_ref) {
    std::ostringstream os;
    os << "polysphere-map 1\n";
    os << "domain " << domain_ref << "\n";
    os << "codomain " << codomain_ref << "\n";
    for (Eigen::Index v = 0; v < map.domain.vertex_count(); ++v)
        os << to_string(map.domain.vertex(v)) << " -> "
           << to_string(map.codomain.vertex(map.vertex_map[static_cast<std::size_t>(v)])) << "\n";
    for (std::size_t f = 0; f < map.facet_map.size(); ++f)
        if (map.facet_map[f] >= 0)
            os << "facet " << to_string(map.domain.functional(static_cast<Eigen::Index>(f))) << " -> "
               << to_string(map.codomain.functional(map.facet_map[f])) << "\n";
    return os.str();
}

std::vector<Vec> parse_points(std::istream& in, Eigen::Index dim) {
    std::vector<Vec> out;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::replace(raw.begin(), raw.end(), ',', ' ');
        const auto toks = tokenize(raw);
        if (toks.empty())
            continue;
        if (static_cast<Eigen::Index>(toks.size()) != dim)
            throw ParseError(ParseErrorKind::DimensionMismatch,
                             "point has " + std::to_string(toks.size()) + " coordinates, expected " +
                                 std::to_string(dim),
                             line, toks[0].column);
        out.push_back(parse_row(toks, 0, toks.size(), line));
    }
    return out;
}

std::vector<Vec> load_points(const std::filesystem::path& path, Eigen::Index dim) {
    std::ifstream in(path);
    if (!in)
        throw ParseError(ParseErrorKind::Io, "cannot read " + path.string());
    return parse_points(in, dim);
}

Vec parse_point(const std::vector<std::string>& tokens) {
    std::vector<Token> toks;
    for (const auto& t : tokens) {
        std::string s = t;
        for (char& c : s)
            if (c == ',')
                c = ' ';
        for (auto& tok : tokenize(s))
            toks.push_back(std::move(tok));
    }
    if (toks.empty())
        throw ParseError(ParseErrorKind::Syntax, "expected point coordinates");
    return parse_row(toks, 0, toks.size(), 0);
}

}  // namespace polysphere
