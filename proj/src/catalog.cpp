#include "polysphere/catalog.hpp"

#include <cctype>

#include "polysphere/errors.hpp"

namespace polysphere {

namespace {

void check_n(int n) {
    if (n < 1 || n > 6)
        throw LimitExceeded("dimension " + std::to_string(n) + " is outside 1..6");
}

// All sign vectors of length n, (1,...,1) first, in binary counting order.
Mat sign_vectors(int n) {
    const int count = 1 << n;
    Mat m(count, n);
    for (int k = 0; k < count; ++k)
        for (int i = 0; i < n; ++i)
            m(k, i) = (k >> (n - 1 - i)) & 1 ? Rational(-1) : Rational(1);
    return m;
}

Mat signed_units(int n) {
    Mat m = Mat::Zero(2 * n, n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = 1;
        m(n + i, i) = -1;
    }
    return m;
}

void check_sum_dim(const PolyhedralSpace& a, const PolyhedralSpace& b, const Limits& limits) {
    if (a.dim() + b.dim() > limits.max_dim)
        throw LimitExceeded("sum has dimension " + std::to_string(a.dim() + b.dim()) + ", exceeding the limit of " +
                            std::to_string(limits.max_dim));
}

std::string sum_name(const char* op, const PolyhedralSpace& a, const PolyhedralSpace& b) {
    return std::string(op) + "(" + a.name() + "," + b.name() + ")";
}

class CatalogParser {
  public:
    CatalogParser(std::string_view text, const Limits& limits) : text_(text), limits_(limits) {}

    PolyhedralSpace parse() {
        PolyhedralSpace s = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return s;
    }

  private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError(ParseErrorKind::Syntax,
                         "in space expression '" + std::string(text_) + "': " + why, 1, static_cast<int>(pos_) + 1);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    std::string ident() {
        skip_ws();
        const auto start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    int number() {
        skip_ws();
        const auto start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a dimension");
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    PolyhedralSpace expr() {
        const auto at = pos_;
        const std::string id = ident();
        if (id == "hex")
            return hexagon_space();
        if (id == "remark")
            return remark_section().section.renamed("remark");
        if (id == "l1" || id == "linf") {
            expect(':');
            const int n = number();
            if (n < 1 || n > limits_.max_dim)
                fail("dimension " + std::to_string(n) + " is outside 1.." + std::to_string(limits_.max_dim));
            return id == "l1" ? l1_space(n) : linf_space(n);
        }
        if (id == "linfsum" || id == "l1sum") {
            expect('(');
            PolyhedralSpace a = expr();
            expect(',');
            PolyhedralSpace b = expr();
            expect(')');
            return id == "linfsum" ? linf_sum(a, b, limits_) : l1_sum(a, b, limits_);
        }
        if (id == "dual") {
            expect('(');
            PolyhedralSpace a = expr();
            expect(')');
            return dual_space(a);
        }
        pos_ = at;
        fail(id.empty() ? "expected a space name" : "unknown space '" + id + "'");
    }

    std::string_view text_;
    const Limits& limits_;
    std::size_t pos_ = 0;
};

}  // namespace

PolyhedralSpace l1_space(int n) {
    check_n(n);
    return PolyhedralSpace::from_polar_pair(sign_vectors(n), signed_units(n), "l1:" + std::to_string(n));
}

PolyhedralSpace linf_space(int n) {
    check_n(n);
    return PolyhedralSpace::from_polar_pair(signed_units(n), sign_vectors(n), "linf:" + std::to_string(n));
}

PolyhedralSpace hexagon_space() {
    Mat fs(6, 2);
    fs << Rational(0), Rational(1),
          Rational(1), Rational(1, 2),
          Rational(-1), Rational(1, 2),
          Rational(0), Rational(-1),
          Rational(-1), Rational(-1, 2),
          Rational(1), Rational(-1, 2);
    return PolyhedralSpace::from_functionals(fs, "hex");
}

PolyhedralSpace linf_sum(const PolyhedralSpace& a, const PolyhedralSpace& b, const Limits& limits) {
    check_sum_dim(a, b, limits);
    Mat fs = Mat::Zero(a.facet_count() + b.facet_count(), a.dim() + b.dim());
    fs.topLeftCorner(a.facet_count(), a.dim()) = a.hrep();
    fs.bottomRightCorner(b.facet_count(), b.dim()) = b.hrep();
    return PolyhedralSpace::from_functionals(fs, sum_name("linfsum", a, b), limits);
}

Mat l1_sum_functionals(const PolyhedralSpace& a, const PolyhedralSpace& b) {
    Mat fs(a.facet_count() * b.facet_count(), a.dim() + b.dim());
    Eigen::Index row = 0;
    for (Eigen::Index i = 0; i < a.facet_count(); ++i) {
        for (Eigen::Index j = 0; j < b.facet_count(); ++j) {
            fs.row(row).head(a.dim()) = a.hrep().row(i);
            fs.row(row).tail(b.dim()) = b.hrep().row(j);
            ++row;
        }
    }
    return fs;
}

PolyhedralSpace l1_sum(const PolyhedralSpace& a, const PolyhedralSpace& b, const Limits& limits) {
    check_sum_dim(a, b, limits);
    return PolyhedralSpace::from_functionals(l1_sum_functionals(a, b), sum_name("l1sum", a, b), limits);
}

RemarkSection remark_section() {
    PolyhedralSpace ambient = linf_space(3);
    Mat basis(3, 2);
    basis << Rational(1), Rational(1),
             Rational(1), Rational(-1),
             Rational(1), Rational(0);
    PolyhedralSpace section = subspace_section(ambient, basis);
    Face top = facet(ambient, *ambient.find_facet(make_vec({0, 0, 1})));
    Mat trace = face_section(ambient, top, basis);
    return RemarkSection{std::move(ambient), std::move(basis), std::move(section), std::move(top), std::move(trace)};
}

std::vector<CatalogEntry> catalog_entries() {
    std::vector<CatalogEntry> out;
    for (int n = 1; n <= 4; ++n) {
        out.push_back({"l1:" + std::to_string(n), "cross-polytope ball, sum of absolute values", true, true, false});
        out.push_back({"linf:" + std::to_string(n), "cube ball, maximum of absolute values", true, true, false});
    }
    out.push_back({"hex", "hexagonal norm max{|y|, |x| + |y|/2}", false, true, false});
    out.push_back({"remark", "linf:3 cut by span{(1,1,1),(1,-1,0)}, basis coordinates", std::nullopt, std::nullopt, false});
    for (const char* a : {"l1:2", "linf:2", "l1:1"}) {
        for (const char* b : {"l1:2", "linf:2", "l1:1"}) {
            out.push_back({std::string("linfsum(") + a + "," + b + ")", "max-sum of CL factors", true, true, false});
            out.push_back({std::string("l1sum(") + a + "," + b + ")", "l1-sum of CL factors", true, true, false});
        }
    }
    out.push_back({"linfsum(hex,linf:1)", "max-sum with a hexagonal factor", std::nullopt, std::nullopt, true});
    out.push_back({"l1sum(hex,l1:1)", "l1-sum with a hexagonal factor", std::nullopt, std::nullopt, true});
    return out;
}

PolyhedralSpace resolve_catalog(std::string_view expr, const Limits& limits) {
    return CatalogParser(expr, limits).parse();
}

}  // namespace polysphere
