#pragma once

// Triangles, barycentric centers and the point/line maps attached to them.

#include <array>
#include <optional>
#include <string_view>

#include "circlekit/kernel.hpp"

namespace circlekit {

enum class Vertex { A = 0, B = 1, C = 2 };

inline int index_of(Vertex v) { return static_cast<int>(v); }
inline Vertex vertex_at(int i) { return static_cast<Vertex>(((i % 3) + 3) % 3); }

// A non-degenerate triangle stored counterclockwise. Construction swaps B and
// C when the input is clockwise; `swapped()` reports it.
template <class T>
class Triangle {
public:
    Triangle(Point<T> a, Point<T> b, Point<T> c, std::optional<ToleranceContext> tol = std::nullopt);

    // Places B at the origin and C on the positive x-axis.
    static Triangle from_sides(double a, double b, double c)
        requires(!is_exact_v<T>);

    const Point<T>& A() const { return v_[0]; }
    const Point<T>& B() const { return v_[1]; }
    const Point<T>& C() const { return v_[2]; }
    const Point<T>& vertex(Vertex v) const { return v_[index_of(v)]; }
    const Point<T>& vertex(int i) const { return v_[((i % 3) + 3) % 3]; }
    const std::array<Point<T>, 3>& vertices() const { return v_; }

    // Squared side opposite vertex i.
    const T& side2(int i) const { return s2_[((i % 3) + 3) % 3]; }
    const T& a2() const { return s2_[0]; }
    const T& b2() const { return s2_[1]; }
    const T& c2() const { return s2_[2]; }
    // Side lengths; the exact backend throws IrrationalValue unless the
    // squared side is a rational square.
    T side(int i) const { return root(side2(i)); }
    T a() const { return side(0); }
    T b() const { return side(1); }
    T c() const { return side(2); }
    T semiperimeter() const { return (a() + b() + c()) / 2; }

    const T& area() const { return area_; }
    bool swapped() const { return swapped_; }
    const ToleranceContext& tolerance() const { return tol_; }

private:
    std::array<Point<T>, 3> v_;
    std::array<T, 3> s2_;
    T area_;
    bool swapped_ = false;
    ToleranceContext tol_;
};

// Diameter of the axis-aligned bounding box.
template <class T>
double bounding_diameter(const std::vector<Point<T>>& pts) {
    bool any = false;
    double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
    for (const auto& p : pts) {
        if (p.at_infinity) continue;
        const double x = to_double(p.x), y = to_double(p.y);
        if (!any) { lo_x = hi_x = x; lo_y = hi_y = y; any = true; continue; }
        lo_x = std::min(lo_x, x); hi_x = std::max(hi_x, x);
        lo_y = std::min(lo_y, y); hi_y = std::max(hi_y, y);
    }
    return std::hypot(hi_x - lo_x, hi_y - lo_y);
}

template <class T>
Triangle<T>::Triangle(Point<T> a, Point<T> b, Point<T> c, std::optional<ToleranceContext> tol) {
    if (a.at_infinity || b.at_infinity || c.at_infinity)
        fail(ErrorKind::DegenerateTriangle, "vertex at infinity");
    tol_ = tol ? *tol : ToleranceContext{}.with_scale(bounding_diameter<T>({a, b, c}));
    T s2 = signed_area2(a, b, c);
    if (s2 < 0) {
        std::swap(b, c);
        s2 = -s2;
        swapped_ = true;
    }
    v_ = {a, b, c};
    s2_ = {distance_squared(b, c), distance_squared(c, a), distance_squared(a, b)};
    bool degenerate;
    if constexpr (is_exact_v<T>) {
        degenerate = s2 == 0;
    } else {
        // Relative height: twice the area over the squared longest side.
        const double longest2 = std::max({s2_[0], s2_[1], s2_[2]});
        degenerate = longest2 == 0.0 || s2 <= 2 * tol_.relative * longest2;
    }
    if (degenerate) fail(ErrorKind::DegenerateTriangle, "vertices are collinear");
    area_ = s2 / 2;
}

template <class T>
Triangle<T> Triangle<T>::from_sides(double a, double b, double c)
    requires(!is_exact_v<T>)
{
    if (!(a > 0 && b > 0 && c > 0) || a + b <= c || b + c <= a || c + a <= b)
        fail(ErrorKind::DegenerateTriangle, "side lengths violate the triangle inequality");
    // B at the origin, C = (a, 0), A above the x-axis.
    const double x = (a * a + c * c - b * b) / (2 * a);
    const double y = std::sqrt(std::max(c * c - x * x, 0.0));
    return Triangle(Point<T>::at(x, y), Point<T>::at(0.0, 0.0), Point<T>::at(a, 0.0));
}

// ---------------------------------------------------------------------------
// Barycentrics
// ---------------------------------------------------------------------------

// Point with barycentric weights (u : v : w). Weights summing to zero give
// the point at infinity in the direction u*A + v*B + w*C.
template <class T>
Point<T> from_barycentric(const Triangle<T>& t, const T& u, const T& v, const T& w) {
    const T s = u + v + w;
    bool infinite;
    if constexpr (is_exact_v<T>) {
        infinite = s == 0;
    } else {
        infinite = std::fabs(s) <= 1e-12 * (std::fabs(u) + std::fabs(v) + std::fabs(w));
    }
    if (infinite) {
        const T dx = u * t.A().x + v * t.B().x + w * t.C().x;
        const T dy = u * t.A().y + v * t.B().y + w * t.C().y;
        return Point<T>::direction(dx, dy);
    }
    return weighted(t.vertices(), {u, v, w});
}

// Normalized barycentrics of a finite point (signed sub-areas over the area).
template <class T>
std::array<T, 3> barycentric_of(const Triangle<T>& t, const Point<T>& p) {
    const T s = 2 * t.area();
    return {signed_area2(p, t.B(), t.C()) / s, signed_area2(p, t.C(), t.A()) / s,
            signed_area2(p, t.A(), t.B()) / s};
}

// Homogeneous coordinates of the point with barycentrics (u : v : w).
template <class T>
Homogeneous<T> barycentric_homogeneous(const Triangle<T>& t, const T& u, const T& v, const T& w) {
    return {u * t.A().x + v * t.B().x + w * t.C().x, u * t.A().y + v * t.B().y + w * t.C().y, u + v + w};
}

template <class T>
Line<T> join_homogeneous(const Homogeneous<T>& p, const Homogeneous<T>& q) {
    const Homogeneous<T> h = cross3(p, q);
    return Line<T>::from(h.x, h.y, h.w);
}

// ---------------------------------------------------------------------------
// Named centers
// ---------------------------------------------------------------------------

enum class CenterId {
    Centroid,
    Incenter,
    Circumcenter,
    Orthocenter,
    NinePointCenter,
    Symmedian,
    Spieker,
    Brocard1,
    Brocard2,
    ExcenterA,
    ExcenterB,
    ExcenterC,
};

inline constexpr std::array<CenterId, 12> kAllCenters = {
    CenterId::Centroid,  CenterId::Incenter, CenterId::Circumcenter, CenterId::Orthocenter,
    CenterId::NinePointCenter, CenterId::Symmedian, CenterId::Spieker, CenterId::Brocard1,
    CenterId::Brocard2, CenterId::ExcenterA, CenterId::ExcenterB, CenterId::ExcenterC,
};

std::string_view center_name(CenterId id);
std::optional<CenterId> parse_center(std::string_view name);

// S_A = (b^2 + c^2 - a^2) / 2 and its cyclic companions.
template <class T>
T conway(const Triangle<T>& t, int i) {
    return (t.side2(i + 1) + t.side2(i + 2) - t.side2(i)) / 2;
}

template <class T>
Point<T> circumcenter(const Triangle<T>& t) {
    return from_barycentric(t, T(t.a2() * conway(t, 0)), T(t.b2() * conway(t, 1)), T(t.c2() * conway(t, 2)));
}

template <class T>
T circumradius_squared(const Triangle<T>& t) {
    return t.a2() * t.b2() * t.c2() / (16 * t.area() * t.area());
}

template <class T>
Circle<T> circumcircle(const Triangle<T>& t) {
    return Circle<T>{circumcenter(t), circumradius_squared(t)};
}

template <class T>
Point<T> orthocenter(const Triangle<T>& t) {
    // A + B + C - 2 O avoids the S_B S_C weights vanishing in right triangles.
    const Point<T> o = circumcenter(t);
    return Point<T>::at(t.A().x + t.B().x + t.C().x - 2 * o.x, t.A().y + t.B().y + t.C().y - 2 * o.y);
}

template <class T>
Point<T> excenter(const Triangle<T>& t, Vertex v) {
    std::array<T, 3> w = {t.a(), t.b(), t.c()};
    w[index_of(v)] = -w[index_of(v)];
    return from_barycentric(t, w[0], w[1], w[2]);
}

template <class T>
Point<T> center(const Triangle<T>& t, CenterId id) {
    switch (id) {
        case CenterId::Centroid: return from_barycentric(t, T(1), T(1), T(1));
        case CenterId::Incenter: return from_barycentric(t, t.a(), t.b(), t.c());
        case CenterId::Circumcenter: return circumcenter(t);
        case CenterId::Orthocenter: return orthocenter(t);
        case CenterId::NinePointCenter: return midpoint(circumcenter(t), orthocenter(t));
        case CenterId::Symmedian: return from_barycentric(t, t.a2(), t.b2(), t.c2());
        case CenterId::Spieker: {
            const T a = t.a(), b = t.b(), c = t.c();
            return from_barycentric(t, T(b + c), T(c + a), T(a + b));
        }
        case CenterId::Brocard1:
            return from_barycentric(t, T(t.a2() * t.c2()), T(t.a2() * t.b2()), T(t.b2() * t.c2()));
        case CenterId::Brocard2:
            return from_barycentric(t, T(t.a2() * t.b2()), T(t.b2() * t.c2()), T(t.c2() * t.a2()));
        case CenterId::ExcenterA: return excenter(t, Vertex::A);
        case CenterId::ExcenterB: return excenter(t, Vertex::B);
        case CenterId::ExcenterC: return excenter(t, Vertex::C);
    }
    fail(ErrorKind::DegenerateTriangle, "unknown center");
}

template <class T>
T inradius(const Triangle<T>& t) { return t.area() / t.semiperimeter(); }

template <class T>
T exradius(const Triangle<T>& t, Vertex v) { return t.area() / (t.semiperimeter() - t.side(index_of(v))); }

// cot of the Brocard angle, (a^2 + b^2 + c^2) / (4 S). Exact on both backends.
template <class T>
T brocard_cot(const Triangle<T>& t) {
    return (t.a2() + t.b2() + t.c2()) / (4 * t.area());
}

inline double brocard_angle(const Triangle<double>& t) { return std::atan2(4 * t.area(), t.a2() + t.b2() + t.c2()); }

// ---------------------------------------------------------------------------
// Point maps
// ---------------------------------------------------------------------------

template <class T>
Point<T> isogonal_conjugate(const Triangle<T>& t, const Point<T>& p) {
    if (p.at_infinity) fail(ErrorKind::InfinitePointUnsupported, "isogonal conjugate of a point at infinity");
    const auto& tol = t.tolerance();
    for (int i = 0; i < 3; ++i)
        if (coincident(p, t.vertex(i), tol)) fail(ErrorKind::AtVertex, "isogonal conjugate of a vertex");
    const auto [u, v, w] = barycentric_of(t, p);
    // (a^2/u : b^2/v : c^2/w) multiplied through by u v w; a weight of zero
    // then yields the vertex opposite the side line holding p.
    const T x = t.a2() * v * w, y = t.b2() * w * u, z = t.c2() * u * v;
    const T s = x + y + z;
    bool on_circle;
    if constexpr (is_exact_v<T>) {
        on_circle = s == 0;
    } else {
        on_circle = std::fabs(s) <= tol.relative * (std::fabs(x) + std::fabs(y) + std::fabs(z));
    }
    if (on_circle) fail(ErrorKind::OnCircumcircle, "isogonal conjugate of a point on the circumcircle");
    return from_barycentric(t, x, y, z);
}

// Ratio NX/XP for the rank-k cevian from v, where N and P follow v
// counterclockwise: (|vN| / |vP|)^k. Exact backend requires integer k.
template <class T>
T rank_ratio(const Triangle<T>& t, Vertex v, const T& k) {
    const int i = index_of(v);
    const T q = t.side2(i + 2) / t.side2(i + 1);  // |vN|^2 / |vP|^2
    if constexpr (is_exact_v<T>) {
        if (mp::denominator(k) != 1) fail(ErrorKind::IrrationalValue, "non-integer rank on the exact backend");
        const int e = static_cast<int>(mp::numerator(k));
        if (e % 2 == 0) return ipow(q, e / 2);
        return ipow(sqrt_exact(q), e);
    } else {
        return std::pow(q, k / 2);
    }
}

template <class T>
Point<T> cevian_foot_rank_k(const Triangle<T>& t, Vertex v, const T& k) {
    const int i = index_of(v);
    const T r = rank_ratio(t, v, k);
    const Point<T>& n = t.vertex(i + 1);
    const Point<T>& p = t.vertex(i + 2);
    return Point<T>::at((n.x + r * p.x) / (1 + r), (n.y + r * p.y) / (1 + r));
}

// Harmonic conjugate of p with respect to b and c. The midpoint and the
// point at infinity of line bc are exchanged.
template <class T>
Point<T> harmonic_conjugate(const Point<T>& p, const Point<T>& b, const Point<T>& c, const ToleranceContext& tol = {}) {
    const Vec2<T> d = c - b;
    bool on_base;
    if constexpr (is_exact_v<T>) {
        on_base = p.at_infinity ? cross(p.vec(), d) == 0 : cross(d, p - b) == 0;
    } else {
        const double len = std::sqrt(norm2(d));
        on_base = p.at_infinity ? std::fabs(cross(p.vec(), d)) / len <= tol.threshold(Dim::Ratio)
                                : std::fabs(cross(d, p - b)) / len <= tol.threshold(Dim::Length);
    }
    if (!on_base) fail(ErrorKind::NotOnLine, "point is not on the base line");
    if (p.at_infinity) return midpoint(b, c);
    if (coincident(p, b, tol) || coincident(p, c, tol)) fail(ErrorKind::AtEndpoint, "point coincides with an endpoint");
    const T s = dot(p - b, d) / norm2(d);
    const T den = 2 * s - 1;
    bool at_mid;
    if constexpr (is_exact_v<T>) {
        at_mid = den == 0;
    } else {
        at_mid = std::fabs(den) <= tol.threshold(Dim::Ratio);
    }
    if (at_mid) return Point<T>::direction(d.x, d.y);
    return lerp(b, c, T(s / den));
}

// Trilinear polar of p: the line through the three harmonic conjugates of
// its cevian feet. The centroid maps to the line at infinity.
template <class T>
Line<T> trilinear_polar(const Triangle<T>& t, const Point<T>& p) {
    if (p.at_infinity) fail(ErrorKind::InfinitePointUnsupported, "trilinear polar of a point at infinity");
    const auto& tol = t.tolerance();
    for (int i = 0; i < 3; ++i)
        if (coincident(p, t.vertex(i), tol)) fail(ErrorKind::AtVertex, "trilinear polar of a vertex");
    const auto [u, v, w] = barycentric_of(t, p);
    for (const T* x : {&u, &v, &w})
        if (negligible(*x, tol, Dim::Ratio)) fail(ErrorKind::OnSideLine, "trilinear polar of a point on a side line");
    // Harmonic conjugates of the feet: (0 : v : -w) and (-u : 0 : w).
    const Homogeneous<T> x = barycentric_homogeneous(t, T(0), v, T(-w));
    const Homogeneous<T> y = barycentric_homogeneous(t, T(-u), T(0), w);
    return join_homogeneous(x, y);
}

// ---------------------------------------------------------------------------
// Derived triangles
// ---------------------------------------------------------------------------

enum class DerivedTriangleId { Medial, Tangential, SecondBrocard, Excentral, Lucas };

inline constexpr std::array<DerivedTriangleId, 5> kAllDerivedTriangles = {
    DerivedTriangleId::Medial, DerivedTriangleId::Tangential, DerivedTriangleId::SecondBrocard,
    DerivedTriangleId::Excentral, DerivedTriangleId::Lucas,
};

std::string_view derived_triangle_name(DerivedTriangleId id);
std::optional<DerivedTriangleId> parse_derived_triangle(std::string_view name);

template <class T>
bool has_right_angle(const Triangle<T>& t) {
    for (int i = 0; i < 3; ++i)
        if (negligible(conway(t, i), t.tolerance(), Dim::Area)) return true;
    return false;
}

template <class T>
bool has_equal_sides(const Triangle<T>& t) {
    for (int i = 0; i < 3; ++i)
        if (negligible(T(t.side2(i) - t.side2(i + 1)), t.tolerance(), Dim::Area)) return true;
    return false;
}

// Lucas radius for vertex v: R h / (side + h), h the altitude from v.
template <class T>
T lucas_radius(const Triangle<T>& t, Vertex v) {
    const T side = t.side(index_of(v));
    const T h = 2 * t.area() / side;
    return root(circumradius_squared(t)) * h / (side + h);
}

template <class T>
Point<T> lucas_center(const Triangle<T>& t, Vertex v) {
    // Homothety at the vertex with ratio h / (side + h) maps the
    // circumcircle onto the Lucas circle.
    const T side = t.side(index_of(v));
    const T h = 2 * t.area() / side;
    return lerp(t.vertex(v), circumcenter(t), T(h / (side + h)));
}

// Vertices of a derived triangle, in correspondence with A, B, C.
template <class T>
std::array<Point<T>, 3> derived_vertices(const Triangle<T>& t, DerivedTriangleId id) {
    switch (id) {
        case DerivedTriangleId::Medial:
            return {midpoint(t.B(), t.C()), midpoint(t.C(), t.A()), midpoint(t.A(), t.B())};
        case DerivedTriangleId::Tangential: {
            if (has_right_angle(t)) fail(ErrorKind::RightAngle, "tangential triangle of a right triangle");
            const T a2 = t.a2(), b2 = t.b2(), c2 = t.c2();
            return {from_barycentric(t, T(-a2), b2, c2), from_barycentric(t, a2, T(-b2), c2),
                    from_barycentric(t, a2, b2, T(-c2))};
        }
        case DerivedTriangleId::SecondBrocard: {
            if (has_equal_sides(t)) fail(ErrorKind::IsoscelesDegenerate, "second Brocard triangle needs a scalene triangle");
            const Point<T> o = circumcenter(t);
            const Point<T> k = center(t, CenterId::Symmedian);
            std::array<Point<T>, 3> out;
            for (int i = 0; i < 3; ++i) out[i] = foot(o, join(t.vertex(i), k, t.tolerance()));
            return out;
        }
        case DerivedTriangleId::Excentral:
            return {excenter(t, Vertex::A), excenter(t, Vertex::B), excenter(t, Vertex::C)};
        case DerivedTriangleId::Lucas:
            return {lucas_center(t, Vertex::A), lucas_center(t, Vertex::B), lucas_center(t, Vertex::C)};
    }
    fail(ErrorKind::DegenerateTriangle, "unknown derived triangle");
}

template <class T>
Triangle<T> derived_triangle(const Triangle<T>& t, DerivedTriangleId id) {
    const auto v = derived_vertices(t, id);
    return Triangle<T>(v[0], v[1], v[2]);
}

// Line through p antiparallel to the side opposite v with respect to the
// angle at v; its direction is that of the circumcircle tangent at v.
template <class T>
Line<T> antiparallel_through(const Triangle<T>& t, Vertex v, const Point<T>& p) {
    const int i = index_of(v);
    const Point<T>& x = t.vertex(i);
    const T s1 = cross(t.vertex(i + 1) - x, p - x);
    const T s2 = cross(p - x, t.vertex(i + 2) - x);
    const auto& tol = t.tolerance();
    if (s1 <= 0 || s2 <= 0 || negligible(s1, tol, Dim::Area) || negligible(s2, tol, Dim::Area))
        fail(ErrorKind::OutsideAngle, "point is not strictly inside the angle");
    return line_through(p, perp(x - circumcenter(t)));
}

}  // namespace circlekit
