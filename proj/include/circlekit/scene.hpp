#pragma once

// The JSON scene document shared by the CLI, check reports and the SVG
// renderer. Keys are emitted sorted and numbers in shortest round-trip form,
// so emit(parse(emit(doc))) == emit(doc).

#include <array>
#include <map>
#include <string>

#include "circlekit/kernel.hpp"

namespace circlekit {

struct CircleEntry {
    std::array<double, 2> center{};
    double r2 = 0;
    bool operator==(const CircleEntry&) const = default;
};

struct StyleEntry {
    std::string stroke;
    std::string label;
    bool operator==(const StyleEntry&) const = default;
};

struct SceneDocument {
    std::string version = "1";
    std::map<std::string, std::array<double, 2>> points;
    std::map<std::string, std::array<double, 3>> lines;
    std::map<std::string, CircleEntry> circles;
    std::map<std::string, StyleEntry> styles;
    // Named scalars: check parameters or circle metadata.
    std::map<std::string, double> params;
    // Exact values as "p/q" strings, present on the rational backend.
    std::map<std::string, std::array<std::string, 2>> points_exact;
    std::map<std::string, std::string> params_exact;

    bool empty() const { return points.empty() && lines.empty() && circles.empty(); }
    bool operator==(const SceneDocument&) const = default;

    void put(const std::string& name, const Point<double>& p);
    void put(const std::string& name, const Point<Rational>& p);
    void put(const std::string& name, const Line<double>& l);
    void put(const std::string& name, const Circle<double>& c);

    // Throws MalformedDocument when the name is missing.
    Point<double> point(const std::string& name) const;
    Point<Rational> exact_point(const std::string& name) const;
    double param(const std::string& name) const;
};

std::string emit_json(const SceneDocument& doc);
SceneDocument parse_json(const std::string& text);

// Canonical number text: shortest decimal that round-trips.
std::string format_number(double v);

// Parses "p/q" or an integer.
Rational parse_rational(const std::string& text);

}  // namespace circlekit
