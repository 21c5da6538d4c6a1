#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace circlekit {

enum class ErrorKind {
    // kernel
    CoincidentPoints,
    CoincidentLines,
    CollinearPoints,
    ConcentricCircles,
    PoleAtCenter,
    LineThroughCenter,
    InfinitePointUnsupported,
    ImaginaryCircle,
    IrrationalValue,
    // triangle constructions
    DegenerateTriangle,
    OnCircumcircle,
    AtVertex,
    NotOnLine,
    AtEndpoint,
    OnSideLine,
    RightAngle,
    IsoscelesDegenerate,
    OutsideAngle,
    PointOutsideTriangle,
    IsoscelesUndefined,
    FootAtInfinity,
    RightAngleCase,
    ConstructionMismatch,
    // registry
    UnknownCheck,
    BackendUnsupported,
    // ruler
    SyntaxError,
    UnknownIdentifier,
    ArityError,
    DegenerateStep,
    MissingGiven,
    // scene documents
    MalformedDocument,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Ruler parse errors carry a 1-based source position.
class ParseError : public Error {
public:
    ParseError(ErrorKind kind, int line, int column, const std::string& what)
        : Error(kind, std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace circlekit
