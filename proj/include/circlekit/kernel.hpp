#pragma once

// Points, lines and circles over a scalar backend (double or Rational),
// plus the incidence and power operations everything else is built on.

#include <array>
#include <utility>
#include <vector>

#include "circlekit/scalar.hpp"

namespace circlekit {

template <class T>
struct Vec2 {
    T x{};
    T y{};
    bool operator==(const Vec2&) const = default;
};

template <class T> Vec2<T> operator+(const Vec2<T>& u, const Vec2<T>& v) { return {u.x + v.x, u.y + v.y}; }
template <class T> Vec2<T> operator-(const Vec2<T>& u, const Vec2<T>& v) { return {u.x - v.x, u.y - v.y}; }
template <class T> Vec2<T> operator*(const T& k, const Vec2<T>& v) { return {k * v.x, k * v.y}; }
template <class T> Vec2<T> operator-(const Vec2<T>& v) { return {-v.x, -v.y}; }
template <class T> T dot(const Vec2<T>& u, const Vec2<T>& v) { return u.x * v.x + u.y * v.y; }
template <class T> T cross(const Vec2<T>& u, const Vec2<T>& v) { return u.x * v.y - u.y * v.x; }
template <class T> T norm2(const Vec2<T>& v) { return dot(v, v); }
// Counterclockwise quarter turn.
template <class T> Vec2<T> perp(const Vec2<T>& v) { return {-v.y, v.x}; }

// A finite point, or a point at infinity carrying a direction.
template <class T>
struct Point {
    T x{};
    T y{};
    bool at_infinity = false;

    static Point at(T px, T py) { return Point{std::move(px), std::move(py), false}; }

    // Directions are stored up to sign and scale: unit length with the first
    // clearly nonzero component positive on floats, first nonzero component
    // equal to one on rationals.
    static Point direction(T dx, T dy) {
        if constexpr (is_exact_v<T>) {
            if (dx == 0 && dy == 0) fail(ErrorKind::CoincidentPoints, "zero direction");
            if (dx != 0) return Point{T(1), dy / dx, true};
            return Point{T(0), T(1), true};
        } else {
            const double n = std::hypot(dx, dy);
            if (n == 0.0) fail(ErrorKind::CoincidentPoints, "zero direction");
            dx /= n;
            dy /= n;
            if (dx < -1e-12 || (std::fabs(dx) <= 1e-12 && dy < 0)) {
                dx = -dx;
                dy = -dy;
            }
            return Point{dx, dy, true};
        }
    }

    Vec2<T> vec() const { return {x, y}; }
};

template <class T> Vec2<T> operator-(const Point<T>& p, const Point<T>& q) { return {p.x - q.x, p.y - q.y}; }
template <class T> Point<T> operator+(const Point<T>& p, const Vec2<T>& v) { return Point<T>::at(p.x + v.x, p.y + v.y); }
template <class T> Point<T> operator-(const Point<T>& p, const Vec2<T>& v) { return Point<T>::at(p.x - v.x, p.y - v.y); }

template <class T>
bool operator==(const Point<T>& p, const Point<T>& q) {
    return p.at_infinity == q.at_infinity && p.x == q.x && p.y == q.y;
}

// Line a*x + b*y + c = 0. Invariant: (a, b) != (0, 0) except for the line at
// infinity, stored as (0, 0, 1).
template <class T>
class Line {
public:
    static Line from(T a, T b, T c) {
        Line l;
        l.assign(std::move(a), std::move(b), std::move(c));
        return l;
    }
    static Line at_infinity() { return from(T(0), T(0), T(1)); }

    const T& a() const { return a_; }
    const T& b() const { return b_; }
    const T& c() const { return c_; }
    bool is_at_infinity() const { return a_ == 0 && b_ == 0; }

    // Signed value of the line equation at p (a distance on floats).
    T eval(const Point<T>& p) const { return a_ * p.x + b_ * p.y + c_; }
    // Direction vector (-b, a).
    Vec2<T> direction() const { return {-b_, a_}; }
    Vec2<T> normal() const { return {a_, b_}; }

    friend bool operator==(const Line& l, const Line& m) { return l.a_ == m.a_ && l.b_ == m.b_ && l.c_ == m.c_; }

private:
    void assign(T a, T b, T c);

    T a_{}, b_{}, c_{};
};

template <class T>
void Line<T>::assign(T a, T b, T c) {
    if constexpr (is_exact_v<T>) {
        if (a == 0 && b == 0) {
            if (c == 0) fail(ErrorKind::CoincidentPoints, "all line coefficients vanish");
            a_ = 0; b_ = 0; c_ = 1;
            return;
        }
        BigInt l = mp::lcm(mp::lcm(mp::denominator(a), mp::denominator(b)), mp::denominator(c));
        BigInt na = mp::numerator(a) * (l / mp::denominator(a));
        BigInt nb = mp::numerator(b) * (l / mp::denominator(b));
        BigInt nc = mp::numerator(c) * (l / mp::denominator(c));
        BigInt g = mp::gcd(mp::gcd(mp::abs(na), mp::abs(nb)), mp::abs(nc));
        na /= g; nb /= g; nc /= g;
        if (na < 0 || (na == 0 && nb < 0)) { na = -na; nb = -nb; nc = -nc; }
        a_ = Rational(na); b_ = Rational(nb); c_ = Rational(nc);
    } else {
        const double n = std::hypot(a, b);
        // A line farther than 1e12 from the origin is the line at infinity.
        if (n <= 1e-12 * std::fabs(c)) {
            if (c == 0.0) fail(ErrorKind::CoincidentPoints, "all line coefficients vanish");
            a_ = 0; b_ = 0; c_ = 1;
            return;
        }
        a /= n; b /= n; c /= n;
        if (a < -1e-12 || (std::fabs(a) <= 1e-12 && b < 0)) { a = -a; b = -b; c = -c; }
        a_ = a; b_ = b; c_ = c;
    }
}

template <class T>
struct Circle {
    Point<T> center;
    T radius_squared{};

    bool operator==(const Circle&) const = default;

    static Circle make(Point<T> c, T r2, const ToleranceContext& tol = {}) {
        if (c.at_infinity) fail(ErrorKind::InfinitePointUnsupported, "circle center at infinity");
        if (r2 < 0) {
            if (!negligible(r2, tol, Dim::Area)) fail(ErrorKind::ImaginaryCircle, "negative squared radius");
            r2 = T(0);
        }
        return Circle{std::move(c), std::move(r2)};
    }
};

template <class T>
struct Segment {
    Point<T> p;
    Point<T> q;
};

// ---------------------------------------------------------------------------
// Basic metric helpers
// ---------------------------------------------------------------------------

template <class T>
T distance_squared(const Point<T>& p, const Point<T>& q) { return norm2(p - q); }

inline double distance(const Point<double>& p, const Point<double>& q) { return std::hypot(p.x - q.x, p.y - q.y); }

template <class T>
Point<T> midpoint(const Point<T>& p, const Point<T>& q) {
    return Point<T>::at((p.x + q.x) / 2, (p.y + q.y) / 2);
}

// Twice the signed area of (p, q, r); positive when counterclockwise.
template <class T>
T signed_area2(const Point<T>& p, const Point<T>& q, const Point<T>& r) {
    return cross(q - p, r - p);
}

// p + t (q - p)
template <class T>
Point<T> lerp(const Point<T>& p, const Point<T>& q, const T& t) {
    return Point<T>::at(p.x + t * (q.x - p.x), p.y + t * (q.y - p.y));
}

// Weighted mean; weights must not sum to zero.
template <class T>
Point<T> weighted(const std::array<Point<T>, 3>& pts, const std::array<T, 3>& w) {
    T s = w[0] + w[1] + w[2];
    return Point<T>::at((w[0] * pts[0].x + w[1] * pts[1].x + w[2] * pts[2].x) / s,
                        (w[0] * pts[0].y + w[1] * pts[1].y + w[2] * pts[2].y) / s);
}

template <class T>
bool coincident(const Point<T>& p, const Point<T>& q, const ToleranceContext& tol = {}) {
    if constexpr (is_exact_v<T>) {
        return p == q;
    } else {
        if (p.at_infinity != q.at_infinity) return false;
        if (p.at_infinity) return negligible(cross(p.vec(), q.vec()), tol, Dim::Ratio);
        return distance(p, q) <= tol.threshold(Dim::Length);
    }
}

// ---------------------------------------------------------------------------
// Homogeneous coordinates
// ---------------------------------------------------------------------------

template <class T>
struct Homogeneous {
    T x{}, y{}, w{};
};

template <class T>
Homogeneous<T> homogeneous(const Point<T>& p) {
    return {p.x, p.y, p.at_infinity ? T(0) : T(1)};
}

template <class T>
Homogeneous<T> cross3(const Homogeneous<T>& u, const Homogeneous<T>& v) {
    return {u.y * v.w - u.w * v.y, u.w * v.x - u.x * v.w, u.x * v.y - u.y * v.x};
}

// ---------------------------------------------------------------------------
// Incidence
// ---------------------------------------------------------------------------

template <class T>
Line<T> join(const Point<T>& p, const Point<T>& q, const ToleranceContext& tol = {}) {
    if (p.at_infinity && q.at_infinity) {
        if (negligible(cross(p.vec(), q.vec()), tol, Dim::Ratio))
            fail(ErrorKind::CoincidentPoints, "join of one point at infinity with itself");
        return Line<T>::at_infinity();
    }
    if (!p.at_infinity && !q.at_infinity && coincident(p, q, tol))
        fail(ErrorKind::CoincidentPoints, "join of coincident points");
    Homogeneous<T> h = cross3(homogeneous(p), homogeneous(q));
    return Line<T>::from(h.x, h.y, h.w);
}

template <class T>
Line<T> line_through(const Point<T>& p, const Vec2<T>& dir) {
    if (p.at_infinity) fail(ErrorKind::InfinitePointUnsupported, "line through a point at infinity with a direction");
    Vec2<T> n = perp(dir);
    return Line<T>::from(n.x, n.y, -(n.x * p.x + n.y * p.y));
}

template <class T>
Line<T> parallel_through(const Line<T>& l, const Point<T>& p) { return line_through(p, l.direction()); }

template <class T>
Line<T> perpendicular_through(const Line<T>& l, const Point<T>& p) { return line_through(p, l.normal()); }

template <class T>
Line<T> perpendicular_bisector(const Point<T>& p, const Point<T>& q) {
    return line_through(midpoint(p, q), perp(q - p));
}

template <class T>
Point<T> meet_lines(const Line<T>& l, const Line<T>& m, const ToleranceContext& tol = {}) {
    const T det = l.a() * m.b() - l.b() * m.a();
    bool parallel;
    if constexpr (is_exact_v<T>) {
        parallel = det == 0;
    } else {
        // Float lines have unit normals, so det is the sine of the angle.
        parallel = negligible(det, tol, Dim::Ratio);
    }
    if (parallel) {
        if (l.is_at_infinity() && m.is_at_infinity()) fail(ErrorKind::CoincidentLines, "both lines at infinity");
        if (l.is_at_infinity()) return Point<T>::direction(-m.b(), m.a());
        if (m.is_at_infinity()) return Point<T>::direction(-l.b(), l.a());
        bool same;
        if constexpr (is_exact_v<T>) {
            same = (l.a() * m.c() == m.a() * l.c()) && (l.b() * m.c() == m.b() * l.c());
        } else {
            const double s = (l.a() * m.a() + l.b() * m.b()) < 0 ? -1.0 : 1.0;
            same = negligible(l.c() - s * m.c(), tol, Dim::Length);
        }
        if (same) fail(ErrorKind::CoincidentLines, "meet of coincident lines");
        return Point<T>::direction(-l.b(), l.a());
    }
    return Point<T>::at((l.b() * m.c() - m.b() * l.c()) / det, (m.a() * l.c() - l.a() * m.c()) / det);
}

template <class T>
Point<T> foot(const Point<T>& p, const Line<T>& l) {
    if (l.is_at_infinity()) fail(ErrorKind::InfinitePointUnsupported, "foot on the line at infinity");
    const T k = l.eval(p) / norm2(l.normal());
    return p - k * l.normal();
}

template <class T>
Point<T> reflect(const Point<T>& p, const Line<T>& l) {
    const T k = 2 * l.eval(p) / norm2(l.normal());
    return p - k * l.normal();
}

// Squared distance from p to l, exact on both backends.
template <class T>
T distance_squared(const Point<T>& p, const Line<T>& l) {
    T e = l.eval(p);
    return e * e / norm2(l.normal());
}

template <class T>
bool point_on_line(const Point<T>& p, const Line<T>& l, const ToleranceContext& tol = {}) {
    if constexpr (is_exact_v<T>) {
        return l.eval(p) == 0;
    } else {
        return negligible(l.eval(p), tol, Dim::Length);
    }
}

// ---------------------------------------------------------------------------
// Circles
// ---------------------------------------------------------------------------

template <class T>
Circle<T> circle_through(const Point<T>& p, const Point<T>& q, const Point<T>& r, const ToleranceContext& tol = {}) {
    if (p.at_infinity || q.at_infinity || r.at_infinity)
        fail(ErrorKind::InfinitePointUnsupported, "circle through a point at infinity");
    const Vec2<T> u = q - p;
    const Vec2<T> v = r - p;
    const T d = 2 * cross(u, v);
    bool collinear;
    if constexpr (is_exact_v<T>) {
        collinear = d == 0;
    } else {
        // Compare twice the area against the longest side: a relative height.
        const double longest = std::sqrt(std::max({norm2(u), norm2(v), norm2(r - q)}));
        collinear = longest == 0.0 || std::fabs(d) / 2 <= tol.threshold(Dim::Ratio) * longest * longest;
    }
    if (collinear) fail(ErrorKind::CollinearPoints, "circle through collinear points");
    const T uu = norm2(u);
    const T vv = norm2(v);
    const T ox = (v.y * uu - u.y * vv) / d;
    const T oy = (u.x * vv - v.x * uu) / d;
    return Circle<T>{Point<T>::at(p.x + ox, p.y + oy), ox * ox + oy * oy};
}

template <class T>
Circle<T> circle_with_diameter(const Point<T>& p, const Point<T>& q) {
    return Circle<T>{midpoint(p, q), distance_squared(p, q) / 4};
}

template <class T>
T power_of_point(const Point<T>& p, const Circle<T>& c) {
    if (p.at_infinity) fail(ErrorKind::InfinitePointUnsupported, "power of a point at infinity");
    return distance_squared(p, c.center) - c.radius_squared;
}

template <class T>
Line<T> radical_axis(const Circle<T>& c1, const Circle<T>& c2, const ToleranceContext& tol = {}) {
    const Vec2<T> d = c2.center - c1.center;
    if (coincident(c1.center, c2.center, tol))
        fail(ErrorKind::ConcentricCircles, "radical axis of concentric circles");
    const T k1 = norm2(c1.center.vec()) - c1.radius_squared;
    const T k2 = norm2(c2.center.vec()) - c2.radius_squared;
    return Line<T>::from(2 * d.x, 2 * d.y, k1 - k2);
}

template <class T>
Point<T> radical_center(const Circle<T>& c1, const Circle<T>& c2, const Circle<T>& c3, const ToleranceContext& tol = {}) {
    return meet_lines(radical_axis(c1, c2, tol), radical_axis(c2, c3, tol), tol);
}

template <class T>
Line<T> polar_line(const Point<T>& p, const Circle<T>& c, const ToleranceContext& tol = {}) {
    if (p.at_infinity) {
        // Polar of a direction: the diameter perpendicular to it.
        return line_through(c.center, perp(p.vec()));
    }
    const Vec2<T> d = p - c.center;
    if (coincident(p, c.center, tol))
        fail(ErrorKind::PoleAtCenter, "polar of the center");
    return Line<T>::from(d.x, d.y, -(d.x * c.center.x + d.y * c.center.y) - c.radius_squared);
}

template <class T>
Point<T> pole_of_line(const Line<T>& l, const Circle<T>& c, const ToleranceContext& tol = {}) {
    if (l.is_at_infinity()) return c.center;
    const T e = l.eval(c.center);
    bool through;
    if constexpr (is_exact_v<T>) {
        through = e == 0;
    } else {
        through = negligible(e, tol, Dim::Length);
    }
    if (through) fail(ErrorKind::LineThroughCenter, "pole of a line through the center");
    // The pole sits on the normal through the center at signed distance
    // -r^2 / e (lines are unit-normal on floats; divide by |n|^2 in general).
    const T k = -c.radius_squared / e;
    return c.center + k * l.normal();
}

// d^2 - r1^2 - r2^2; zero exactly when the circles are orthogonal.
template <class T>
T circles_orthogonal(const Circle<T>& c1, const Circle<T>& c2) {
    return distance_squared(c1.center, c2.center) - c1.radius_squared - c2.radius_squared;
}

// Largest deviation of the points from the circle through the first three,
// measured as |d^2 - r^2| / scale^2.
template <class T>
T concyclicity_residual(const std::vector<Point<T>>& pts, const ToleranceContext& tol = {}) {
    if (pts.size() < 3) fail(ErrorKind::CollinearPoints, "need at least three points");
    const Circle<T> c = circle_through(pts[0], pts[1], pts[2], tol);
    T worst(0);
    for (std::size_t i = 3; i < pts.size(); ++i) {
        T r = abs_value(T(power_of_point(pts[i], c)));
        if (r > worst) worst = r;
    }
    const T s = from_double<T>(tol.scale);
    return worst / (s * s);
}

// Intersections ordered along the line direction (-b, a). Empty when the
// line misses the circle; one point when tangent within tolerance.
template <class T>
std::vector<Point<T>> intersect_line_circle(const Line<T>& l, const Circle<T>& c, const ToleranceContext& tol = {}) {
    if (l.is_at_infinity()) return {};
    const T n2 = norm2(l.normal());
    const T e = l.eval(c.center);
    const Point<T> f = c.center - (e / n2) * l.normal();
    const T h2 = c.radius_squared - e * e / n2;
    bool tangent;
    if constexpr (is_exact_v<T>) {
        if (h2 < 0) return {};
        tangent = h2 == 0;
    } else {
        // Half-chord below the length tolerance counts as tangency.
        if (h2 < 0 && !negligible(h2, tol, Dim::Area)) return {};
        tangent = std::sqrt(std::max(h2 / n2, 0.0)) <= tol.threshold(Dim::Length);
    }
    if (tangent) return {f};
    const T t = root(T(h2 / n2));
    const Vec2<T> dir = l.direction();
    return {f - t * dir, f + t * dir};
}

template <class T>
std::vector<Point<T>> intersect_circles(const Circle<T>& c1, const Circle<T>& c2, const ToleranceContext& tol = {}) {
    return intersect_line_circle(radical_axis(c1, c2, tol), c1, tol);
}

// Second intersection of a line through a point p already on the circle.
// Exact on both backends: the parameter follows from the sum of the roots.
template <class T>
Point<T> second_intersection(const Line<T>& l, const Circle<T>& c, const Point<T>& p) {
    const Vec2<T> d = l.direction();
    const T t = -2 * dot(d, p - c.center) / norm2(d);
    return p + t * d;
}

// Tangent line to a circle at a point on it.
template <class T>
Line<T> tangent_at(const Circle<T>& c, const Point<T>& p) {
    return line_through(p, perp(p - c.center));
}

}  // namespace circlekit
