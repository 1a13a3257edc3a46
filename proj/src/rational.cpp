#include "polysphere/rational.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "polysphere/errors.hpp"

namespace polysphere {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

Rational parse_rational(std::string_view token, int line, int column) {
    auto fail = [&](const std::string& why) {
        throw ParseError(ParseErrorKind::MalformedRational,
                         "malformed rational '" + std::string(token) + "': " + why, line, column);
    };
    if (token.empty())
        fail("empty token");
    if (token.find_first_of(".eE") != std::string_view::npos)
        fail("decimals are not accepted, write p/q");

    std::string_view body = token;
    bool negative = false;
    if (body.front() == '+' || body.front() == '-') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        fail("expected integer or p/q");

    Integer p{std::string(num)};
    Integer q{std::string(den)};
    if (q == 0)
        fail("zero denominator");
    Rational r(p, q);
    return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r) {
    // boost prints canonical reduced form: "p" or "p/q".
    return r.str();
}

std::string to_string(const Vec& v, std::string_view sep) {
    std::string out;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i)
            out += sep;
        out += to_string(v(i));
    }
    return out;
}

std::string format_point(const Vec& v) {
    return "(" + to_string(v, ", ") + ")";
}

Vec make_vec(std::initializer_list<Rational> coords) {
    Vec v(static_cast<Eigen::Index>(coords.size()));
    Eigen::Index i = 0;
    for (const auto& c : coords)
        v(i++) = c;
    return v;
}

Mat rows_to_matrix(const std::vector<Vec>& rows, Eigen::Index cols) {
    Mat m(static_cast<Eigen::Index>(rows.size()), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw DimensionMismatch("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                                    " coordinates, expected " + std::to_string(cols));
        m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
    }
    return m;
}

std::vector<Vec> matrix_rows(const Mat& m) {
    std::vector<Vec> rows;
    rows.reserve(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        rows.emplace_back(m.row(i).transpose());
    return rows;
}

bool lex_less(const Vec& a, const Vec& b) {
    const Eigen::Index n = std::min(a.size(), b.size());
    for (Eigen::Index i = 0; i < n; ++i) {
        if (a(i) < b(i))
            return true;
        if (b(i) < a(i))
            return false;
    }
    return a.size() < b.size();
}

double to_double(const Rational& r) {
    return r.convert_to<double>();
}

const char* to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::Syntax: return "syntax";
        case ParseErrorKind::MalformedRational: return "malformed-rational";
        case ParseErrorKind::DimensionMismatch: return "dimension-mismatch";
        case ParseErrorKind::Asymmetric: return "asymmetric";
        case ParseErrorKind::Degenerate: return "degenerate";
        case ParseErrorKind::Io: return "io";
    }
    return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, const std::string& message, int line, int column)
    : Error([&] {
          std::ostringstream os;
          if (line > 0)
              os << "line " << line << ", column " << column << ": ";
          os << message;
          return os.str();
      }()),
      kind_(kind),
      line_(line),
      column_(column) {}

}  // namespace polysphere
