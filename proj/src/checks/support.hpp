#pragma once

// Shared pieces of the check catalog: the check table entry and residual
// measures. All measures are dimensionless. On doubles they are sines,
// distances over the scene scale, and unit-normalized determinants; on
// rationals they are the squares of the same quantities, so that zero means
// exactly zero without a square root.

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "circlekit/circles.hpp"
#include "circlekit/registry.hpp"
#include "circlekit/sampling.hpp"

namespace circlekit::checks {

struct CheckDef {
    CheckInfo info;
    std::function<SceneDocument(Rng&)> generate;
    // (scene, mutate) -> residual. Throws Error on a degenerate scene.
    std::function<double(const SceneDocument&, bool)> residual;
    std::function<SceneDocument(Rng&)> generate_exact;
    std::function<double(const SceneDocument&)> residual_exact;
};

using Catalog = std::vector<CheckDef>;

void add_lemoine_checks(Catalog& out);
void add_radical_checks(Catalog& out);
void add_droz_farny_checks(Catalog& out);
void add_neuberg_lucas_checks(Catalog& out);
void add_ruler_theorem_checks(Catalog& out);
void add_apollonius_checks(Catalog& out);
void add_quadrilateral_checks(Catalog& out);

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// ---------------------------------------------------------------------------
// Scene I/O
// ---------------------------------------------------------------------------

template <class T>
Point<T> get(const SceneDocument& s, const std::string& name) {
    if constexpr (is_exact_v<T>) {
        return s.exact_point(name);
    } else {
        return s.point(name);
    }
}

template <class T>
Triangle<T> triangle_of(const SceneDocument& s) {
    return Triangle<T>(get<T>(s, "A"), get<T>(s, "B"), get<T>(s, "C"));
}

template <class T>
void put_triangle(SceneDocument& s, const Triangle<T>& t) {
    s.put("A", t.A());
    s.put("B", t.B());
    s.put("C", t.C());
}

// ---------------------------------------------------------------------------
// Frame: origin at the centroid of the scene's points, length unit the
// bounding-box diameter (doubles) or its square (rationals: largest squared
// pairwise distance).
// ---------------------------------------------------------------------------

template <class T>
struct Frame {
    Point<T> origin;
    T unit2{};       // squared length unit
    double scale = 1;  // length unit as a double
};

template <class T>
Frame<T> frame_of(const SceneDocument& s) {
    std::vector<Point<T>> pts;
    if constexpr (is_exact_v<T>) {
        for (const auto& [name, _] : s.points_exact) pts.push_back(s.exact_point(name));
    } else {
        for (const auto& [name, _] : s.points) pts.push_back(s.point(name));
    }
    if (pts.empty()) fail(ErrorKind::MalformedDocument, "scene has no points");
    Frame<T> f;
    T sx(0), sy(0);
    for (const auto& p : pts) { sx += p.x; sy += p.y; }
    f.origin = Point<T>::at(sx / T(static_cast<int>(pts.size())), sy / T(static_cast<int>(pts.size())));
    if constexpr (is_exact_v<T>) {
        T best(0);
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::max(best, distance_squared(pts[i], pts[j]));
        f.unit2 = best;
        f.scale = std::sqrt(to_double(best));
    } else {
        f.scale = bounding_diameter(pts);
        f.unit2 = f.scale * f.scale;
    }
    if (!(f.scale > 0)) fail(ErrorKind::CoincidentPoints, "scene points coincide");
    return f;
}

// |p - q| over the unit.
template <class T>
T rel_dist(const Frame<T>& f, const Point<T>& p, const Point<T>& q) {
    if (p.at_infinity || q.at_infinity) fail(ErrorKind::InfinitePointUnsupported, "distance to a point at infinity");
    if constexpr (is_exact_v<T>) {
        return distance_squared(p, q) / f.unit2;
    } else {
        return distance(p, q) / f.scale;
    }
}

// Area-like quantity (squared length) over the squared unit; squared again on rationals.
template <class T>
T rel_area(const Frame<T>& f, const T& v) {
    if constexpr (is_exact_v<T>) {
        return (v / f.unit2) * (v / f.unit2);
    } else {
        return std::fabs(v) / f.unit2;
    }
}

// Relative difference of two like quantities.
template <class T>
T rel_diff(const T& x, const T& y) {
    const T m = std::max(abs_value(x), abs_value(y));
    if (m == 0) return T(0);
    if constexpr (is_exact_v<T>) {
        return ((x - y) / m) * ((x - y) / m);
    } else {
        return std::fabs(x - y) / m;
    }
}

namespace detail {

// Homogeneous row of a point in frame units, scaled so that the first two
// entries are divided by the unit: returns (dx, dy, w) and the squared row
// norm is (dx^2 + dy^2) / unit2 + w^2.
template <class T>
std::array<T, 3> frame_row(const Frame<T>& f, const Point<T>& p) {
    if (p.at_infinity) return {p.x, p.y, T(0)};
    return {p.x - f.origin.x, p.y - f.origin.y, T(1)};
}

template <class T>
T det3(const std::array<T, 3>& u, const std::array<T, 3>& v, const std::array<T, 3>& w) {
    return u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) + u[2] * (v[0] * w[1] - v[1] * w[0]);
}

}  // namespace detail

// Determinant of the three unit homogeneous frame vectors: the sine-like
// measure of collinearity. Points at infinity are allowed. Rows are
// (dx / unit, dy / unit, w); scaling the first two columns divides the raw
// determinant by unit^2, and each row is then normalized.
template <class T>
T collinear_res(const Frame<T>& f, const Point<T>& p, const Point<T>& q, const Point<T>& r) {
    const std::array<std::array<T, 3>, 3> rows = {detail::frame_row(f, p), detail::frame_row(f, q), detail::frame_row(f, r)};
    T norms(1);
    for (const auto& row : rows) norms *= (row[0] * row[0] + row[1] * row[1]) / f.unit2 + row[2] * row[2];
    const T d = detail::det3(rows[0], rows[1], rows[2]) / f.unit2;
    if constexpr (is_exact_v<T>) {
        return d * d / norms;
    } else {
        return std::fabs(d) / std::sqrt(norms);
    }
}

// Determinant of three lines, each normalized as a unit vector in frame
// coordinates: zero iff concurrent (or all parallel).
template <class T>
T concurrent_res(const Frame<T>& f, const Line<T>& l1, const Line<T>& l2, const Line<T>& l3) {
    auto row = [&](const Line<T>& l) -> std::array<T, 3> {
        // a x + b y + c with x = ox + s x'  ->  (a s) x' + (b s) y' + l(o).
        if constexpr (is_exact_v<T>) {
            return {l.a(), l.b(), l.eval(f.origin)};
        } else {
            std::array<double, 3> r = {l.a() * f.scale, l.b() * f.scale, l.is_at_infinity() ? l.c() : l.eval(f.origin)};
            const double n = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
            for (auto& x : r) x /= n;
            return r;
        }
    };
    const auto r1 = row(l1), r2 = row(l2), r3 = row(l3);
    const T d = detail::det3(r1, r2, r3);
    if constexpr (is_exact_v<T>) {
        auto n2 = [&](const std::array<T, 3>& r) { return (r[0] * r[0] + r[1] * r[1]) * f.unit2 + r[2] * r[2]; };
        return d * d * f.unit2 * f.unit2 / (n2(r1) * n2(r2) * n2(r3));
    } else {
        return std::fabs(d);
    }
}

// Sine of the angle between two directions.
template <class T>
T parallel_res(const Vec2<T>& u, const Vec2<T>& v) {
    if constexpr (is_exact_v<T>) {
        const T c = cross(u, v);
        return c * c / (norm2(u) * norm2(v));
    } else {
        return std::fabs(cross(u, v)) / std::sqrt(norm2(u) * norm2(v));
    }
}

// Cosine of the angle between two directions.
template <class T>
T perp_res(const Vec2<T>& u, const Vec2<T>& v) {
    if constexpr (is_exact_v<T>) {
        const T c = dot(u, v);
        return c * c / (norm2(u) * norm2(v));
    } else {
        return std::fabs(dot(u, v)) / std::sqrt(norm2(u) * norm2(v));
    }
}

template <class T>
T on_line_res(const Frame<T>& f, const Point<T>& p, const Line<T>& l) {
    if (p.at_infinity) return parallel_res(p.vec(), l.direction());
    if constexpr (is_exact_v<T>) {
        const T e = l.eval(p);
        return e * e / (norm2(l.normal()) * f.unit2);
    } else {
        return std::fabs(l.eval(p)) / std::sqrt(norm2(l.normal())) / f.scale;
    }
}

// |d - r| over the unit (doubles); squared power over unit^4 (rationals).
template <class T>
T on_circle_res(const Frame<T>& f, const Point<T>& p, const Circle<T>& c) {
    if constexpr (is_exact_v<T>) {
        const T pw = power_of_point(p, c);
        return pw * pw / (f.unit2 * f.unit2);
    } else {
        return std::fabs(distance(p, c.center) - std::sqrt(std::max(c.radius_squared, 0.0))) / f.scale;
    }
}

// Concyclicity of a point set: fit the circle through the best-conditioned
// triple, then the largest radial deviation over the unit.
inline double concyclic_res(const Frame<double>& f, const std::vector<Point<double>>& pts) {
    if (pts.size() < 4) return 0;
    double best = -1;
    std::array<std::size_t, 3> pick{0, 1, 2};
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            for (std::size_t k = j + 1; k < pts.size(); ++k) {
                const double a = std::fabs(signed_area2(pts[i], pts[j], pts[k]));
                if (a > best) { best = a; pick = {i, j, k}; }
            }
    const Circle<double> c = circle_through(pts[pick[0]], pts[pick[1]], pts[pick[2]],
                                            ToleranceContext{}.with_scale(f.scale));
    double worst = 0;
    for (const auto& p : pts) worst = std::max(worst, on_circle_res(f, p, c));
    return worst;
}

// Largest measure of a list.
inline double worst_of(std::initializer_list<double> xs) {
    double w = 0;
    for (double x : xs) {
        if (std::isnan(x)) return kInf;
        w = std::max(w, x);
    }
    return w;
}

// Controls: a perturbed configuration that must NOT satisfy the claim.
// Returns 1 when the perturbed residual is suspiciously small.
inline double control_penalty(double perturbed_residual) { return perturbed_residual <= 1e-6 ? 1.0 : 0.0; }

// Random point in the frame of a triangle: centroid + diameter * (u, v),
// u, v uniform in [-spread, spread].
inline Point<double> random_near(Rng& rng, const Triangle<double>& t, double spread) {
    const Point<double> g = center(t, CenterId::Centroid);
    const double d = t.tolerance().scale;
    return Point<double>::at(g.x + d * rng.uniform(-spread, spread), g.y + d * rng.uniform(-spread, spread));
}

// Distance from p to the nearest side line over the triangle scale.
inline double side_clearance(const Triangle<double>& t, const Point<double>& p) {
    double m = kInf;
    for (int i = 0; i < 3; ++i) {
        const Line<double> l = join(t.vertex(i + 1), t.vertex(i + 2));
        m = std::min(m, std::fabs(l.eval(p)));
    }
    return m / t.tolerance().scale;
}

template <class T>
Line<T> side(const Triangle<T>& t, int i) { return join(t.vertex(i + 1), t.vertex(i + 2), t.tolerance()); }

// Circle on the segment between the feet of the internal and external
// cevians from vertex i that divide the opposite side NP in the ratio
// wn : wp (wn = |vN|^k, wp = |vP|^k for the rank-k circle).
template <class T>
Circle<T> apollonius_by_weights(const Triangle<T>& t, int i, const T& wn, const T& wp) {
    if (rel_diff(wn, wp) <= T(is_exact_v<T> ? 0 : 1e-3))
        fail(ErrorKind::IsoscelesUndefined, "equal weights: the external foot is at infinity");
    const Point<T>& n = t.vertex(i + 1);
    const Point<T>& p = t.vertex(i + 2);
    const Point<T> in = Point<T>::at((wp * n.x + wn * p.x) / (wn + wp), (wp * n.y + wn * p.y) / (wn + wp));
    const Point<T> ex = Point<T>::at((wp * n.x - wn * p.x) / (wp - wn), (wp * n.y - wn * p.y) / (wp - wn));
    return circle_with_diameter(in, ex);
}

// Rank-k circle of vertex i for an integer k (exact on rational sides).
template <class T>
Circle<T> apollonius_circle(const Triangle<T>& t, int i, int k) {
    return apollonius_by_weights(t, i, ipow(t.side(i + 2), k), ipow(t.side(i + 1), k));
}

// Rank-k circle for real k.
inline Circle<double> apollonius_circle_real(const Triangle<double>& t, int i, double k) {
    return apollonius_by_weights(t, i, std::pow(t.side(i + 2), k), std::pow(t.side(i + 1), k));
}

}  // namespace circlekit::checks
