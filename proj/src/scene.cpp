#include "circlekit/scene.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "scene_json.hpp"

namespace circlekit {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& what) { fail(ErrorKind::MalformedDocument, what); }

double number_at(const json& j, const std::string& where) {
    if (!j.is_number()) malformed(where + " is not a number");
    return j.get<double>();
}

template <std::size_t N>
std::array<double, N> numbers(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != N) malformed(where + " must be an array of " + std::to_string(N) + " numbers");
    std::array<double, N> out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = number_at(j[i], where);
    return out;
}

void check_finite(double v, const std::string& where) {
    if (!std::isfinite(v)) malformed(where + " is not finite");
}

}  // namespace

void SceneDocument::put(const std::string& name, const Point<double>& p) {
    if (p.at_infinity) return;
    points[name] = {p.x, p.y};
}

void SceneDocument::put(const std::string& name, const Point<Rational>& p) {
    if (p.at_infinity) return;
    points[name] = {to_double(p.x), to_double(p.y)};
    points_exact[name] = {p.x.str(), p.y.str()};
}

void SceneDocument::put(const std::string& name, const Line<double>& l) { lines[name] = {l.a(), l.b(), l.c()}; }

void SceneDocument::put(const std::string& name, const Circle<double>& c) {
    circles[name] = CircleEntry{{c.center.x, c.center.y}, c.radius_squared};
}

Point<double> SceneDocument::point(const std::string& name) const {
    auto it = points.find(name);
    if (it == points.end()) malformed("missing point " + name);
    return Point<double>::at(it->second[0], it->second[1]);
}

Point<Rational> SceneDocument::exact_point(const std::string& name) const {
    auto it = points_exact.find(name);
    if (it == points_exact.end()) malformed("missing exact point " + name);
    return Point<Rational>::at(parse_rational(it->second[0]), parse_rational(it->second[1]));
}

double SceneDocument::param(const std::string& name) const {
    auto it = params.find(name);
    if (it == params.end()) malformed("missing parameter " + name);
    return it->second;
}

std::string format_number(double v) {
    if (v == 0) v = 0;  // no "-0"
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) return "nan";
    return std::string(buf, end);
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    auto integer = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos || s.find('-', 1) != std::string::npos)
            malformed("bad rational '" + text + "'");
        return BigInt(s);
    };
    if (slash == std::string::npos) return Rational(integer(text));
    const BigInt den = integer(text.substr(slash + 1));
    if (den == 0) malformed("zero denominator in '" + text + "'");
    return Rational(integer(text.substr(0, slash)), den);
}

namespace detail {

// Drops the sign of zero.
double num(double v) { return v == 0 ? 0.0 : v; }

json scene_to_json(const SceneDocument& doc) {
    json j = json::object();
    j["version"] = doc.version;
    json pts = json::object();
    for (const auto& [name, p] : doc.points) pts[name] = {num(p[0]), num(p[1])};
    j["points"] = pts;
    json lines = json::object();
    for (const auto& [name, l] : doc.lines) lines[name] = {num(l[0]), num(l[1]), num(l[2])};
    j["lines"] = lines;
    json circles = json::object();
    for (const auto& [name, c] : doc.circles) circles[name] = {{"center", {num(c.center[0]), num(c.center[1])}}, {"r2", num(c.r2)}};
    j["circles"] = circles;
    if (!doc.styles.empty()) {
        json styles = json::object();
        for (const auto& [name, s] : doc.styles) {
            json e = json::object();
            if (!s.stroke.empty()) e["stroke"] = s.stroke;
            if (!s.label.empty()) e["label"] = s.label;
            styles[name] = e;
        }
        j["styles"] = styles;
    }
    if (!doc.params.empty()) {
        json params = json::object();
        for (const auto& [name, v] : doc.params) params[name] = num(v);
        j["params"] = params;
    }
    if (!doc.points_exact.empty()) {
        json pe = json::object();
        for (const auto& [name, p] : doc.points_exact) pe[name] = {p[0], p[1]};
        j["points_exact"] = pe;
    }
    if (!doc.params_exact.empty()) j["params_exact"] = doc.params_exact;
    return j;
}

SceneDocument scene_from_json(const json& j) {
    if (!j.is_object()) malformed("document is not an object");
    SceneDocument doc;
    if (!j.contains("version") || !j["version"].is_string()) malformed("missing version");
    doc.version = j["version"].get<std::string>();
    if (doc.version != "1") malformed("unsupported version " + doc.version);
    static const std::array<const char*, 8> known = {"version", "points", "lines", "circles", "styles",
                                                     "params", "points_exact", "params_exact"};
    for (const auto& [key, _] : j.items())
        if (std::find(known.begin(), known.end(), key) == known.end()) malformed("unknown field " + key);

    auto object_at = [&](const char* key) -> const json* {
        if (!j.contains(key)) return nullptr;
        if (!j[key].is_object()) malformed(std::string(key) + " must be an object");
        return &j[key];
    };
    if (const json* o = object_at("points"))
        for (const auto& [name, v] : o->items()) {
            doc.points[name] = numbers<2>(v, "point " + name);
            for (double x : doc.points[name]) check_finite(x, "point " + name);
        }
    if (const json* o = object_at("lines"))
        for (const auto& [name, v] : o->items()) {
            auto l = numbers<3>(v, "line " + name);
            for (double x : l) check_finite(x, "line " + name);
            if (l[0] == 0 && l[1] == 0 && l[2] == 0) malformed("line " + name + " has all coefficients zero");
            doc.lines[name] = l;
        }
    if (const json* o = object_at("circles"))
        for (const auto& [name, v] : o->items()) {
            if (!v.is_object() || !v.contains("center") || !v.contains("r2")) malformed("circle " + name + " needs center and r2");
            CircleEntry c{numbers<2>(v["center"], "circle " + name), number_at(v["r2"], "circle " + name)};
            if (!(c.r2 >= 0)) malformed("circle " + name + " has negative r2");
            doc.circles[name] = c;
        }
    if (const json* o = object_at("styles"))
        for (const auto& [name, v] : o->items()) {
            if (!v.is_object()) malformed("style " + name + " must be an object");
            StyleEntry s;
            if (v.contains("stroke")) s.stroke = v["stroke"].get<std::string>();
            if (v.contains("label")) s.label = v["label"].get<std::string>();
            doc.styles[name] = s;
        }
    if (const json* o = object_at("params"))
        for (const auto& [name, v] : o->items()) doc.params[name] = number_at(v, "param " + name);
    if (const json* o = object_at("points_exact"))
        for (const auto& [name, v] : o->items()) {
            if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_string())
                malformed("exact point " + name + " must be two strings");
            doc.points_exact[name] = {v[0].get<std::string>(), v[1].get<std::string>()};
        }
    if (const json* o = object_at("params_exact"))
        for (const auto& [name, v] : o->items()) {
            if (!v.is_string()) malformed("exact param " + name + " must be a string");
            doc.params_exact[name] = v.get<std::string>();
        }
    return doc;
}

}  // namespace detail

std::string emit_json(const SceneDocument& doc) { return detail::scene_to_json(doc).dump(); }

SceneDocument parse_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        malformed(std::string("invalid JSON: ") + e.what());
    }
    try {
        return detail::scene_from_json(j);
    } catch (const json::exception& e) {
        malformed(std::string("wrong value type: ") + e.what());
    }
}

}  // namespace circlekit
