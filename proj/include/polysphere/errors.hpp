#ifndef POLYSPHERE_ERRORS_HPP
#define POLYSPHERE_ERRORS_HPP

#include <stdexcept>
#include <string>

#include "polysphere/rational.hpp"

namespace polysphere {

/// Base class of everything this library throws.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

/// Input exceeds the supported desk-scale limits (dimension or facet count).
class LimitExceeded : public Error {
  public:
    using Error::Error;
};

/// The input is not centrally symmetric.
class AsymmetricInput : public Error {
  public:
    using Error::Error;
};

/// The described ball is unbounded or lower-dimensional. `direction` is a
/// witness: a recession direction (unbounded) or a nonzero functional that
/// vanishes on every input point (flat).
class DegenerateInput : public Error {
  public:
    DegenerateInput(const std::string& what, Vec direction)
        : Error(what), direction_(std::move(direction)) {}
    const Vec& direction() const { return direction_; }

  private:
    Vec direction_;
};

/// A point was required to lie on the unit sphere and does not.
class NotOnSphere : public Error {
  public:
    using Error::Error;
};

/// Basis vectors passed to a section are linearly dependent.
class DependentBasis : public Error {
  public:
    using Error::Error;
};

/// A precondition on a space property failed (e.g. decomposition requested
/// in a space that is not almost-CL).
class PreconditionFailed : public Error {
  public:
    using Error::Error;
};

enum class ParseErrorKind { Syntax, MalformedRational, DimensionMismatch, Asymmetric, Degenerate, Io };

const char* to_string(ParseErrorKind kind);

class ParseError : public Error {
  public:
    ParseError(ParseErrorKind kind, const std::string& message, int line = 0, int column = 0);
    /// Same error with `context` (e.g. a file name) prepended to the message.
    ParseError(const ParseError& inner, const std::string& context)
        : Error(context + ": " + inner.what()), kind_(inner.kind_), line_(inner.line_), column_(inner.column_) {}

    ParseErrorKind kind() const { return kind_; }
    int line() const { return line_; }
    int column() const { return column_; }

  private:
    ParseErrorKind kind_;
    int line_;
    int column_;
};

}  // namespace polysphere

#endif  // POLYSPHERE_ERRORS_HPP
