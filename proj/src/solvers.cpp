#include <cmath>
#include <numbers>

#include "circlekit/circles.hpp"
#include "circlekit/registry.hpp"

namespace circlekit {

namespace {

using P = Point<double>;

double inradius_of(const P& a, const P& b, const P& c) {
    const double ab = distance(a, b), bc = distance(b, c), ca = distance(c, a);
    return std::fabs(signed_area2(a, b, c)) / (ab + bc + ca);
}

// Parameter of p along b -> c.
double param_on(const P& b, const P& c, const P& p) { return dot(p - b, c - b) / norm2(c - b); }

double bisect_cevian(const Triangle<double>& t) {
    double lo = 0, hi = 1;
    for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
        const double mid = (lo + hi) / 2;
        (incircle_difference(t, mid) < 0 ? lo : hi) = mid;
    }
    return (lo + hi) / 2;
}

// The point of line l on circle c that lies on the same side of line m as q.
P meet_on_side(const Line<double>& l, const Circle<double>& c, const Line<double>& m, const P& q,
               const ToleranceContext& tol) {
    const auto pts = intersect_line_circle(l, c, tol);
    const double side_q = m.eval(q);
    for (const P& p : pts)
        if (m.eval(p) * side_q > 0) return p;
    fail(ErrorKind::ConstructionMismatch, "no intersection on the required side");
}

// Steps 1-6 of the straightedge-and-compass construction.
double construct_cevian(const Triangle<double>& t) {
    const auto& tol = t.tolerance();
    const P &a = t.A(), &b = t.B(), &c = t.C();
    const P in = center(t, CenterId::Incenter);
    const Circle<double> cc = circumcircle(t);
    const Line<double> bisector = join(a, in, tol);
    const Line<double> base = join(b, c, tol);
    // 1: P, the midpoint of arc BC.
    const P arc_mid = second_intersection(bisector, cc, a);
    // 2: O1 on the perpendicular at C to CP and on the mediator of BC.
    const P o1 = meet_lines(line_through(c, perp(arc_mid - c)), perpendicular_bisector(b, c), tol);
    // 3: A' on circle (O1, O1C) and on AI, on A's side of BC.
    const Circle<double> seen{o1, distance_squared(o1, c)};
    const P a_prime = meet_on_side(bisector, seen, base, a, tol);
    // 4: O1' on IO1 with AO1' parallel to A'O1.
    const P o1_prime = meet_lines(line_through(a, o1 - a_prime), join(in, o1, tol), tol);
    // 5: I1, I2 on circle (O1', O1'A) and on BI, CI; the incenters lie
    //    between the vertex and I.
    const Circle<double> small{o1_prime, distance_squared(o1_prime, a)};
    auto between = [&](const P& v) {
        for (const P& p : intersect_line_circle(join(v, in, tol), small, tol)) {
            const double s = param_on(v, in, p);
            if (s > 0 && s < 1) return p;
        }
        fail(ErrorKind::ConstructionMismatch, "incenter not between vertex and I");
    };
    const P i1 = between(b), i2 = between(c);
    // 6: D = AM . BC with M the midpoint of I1I2.
    const P d = meet_lines(join(a, midpoint(i1, i2), tol), base, tol);
    return param_on(b, c, d);
}

}  // namespace

double incircle_difference(const Triangle<double>& t, double s) {
    const P d = lerp(t.B(), t.C(), s);
    return inradius_of(t.A(), t.B(), d) - inradius_of(t.A(), d, t.C());
}

CevianSolution equal_incircle_cevian(const Triangle<double>& t) {
    CevianSolution out;
    if (t.b2() == t.c2()) {
        out.t_construction = out.t_bisection = 0.5;
    } else {
        out.t_construction = construct_cevian(t);
        out.t_bisection = bisect_cevian(t);
        if (std::fabs(out.t_construction - out.t_bisection) > 1e-9)
            fail(ErrorKind::ConstructionMismatch, "construction and bisection disagree");
    }
    out.d = out.t_construction == 0.5 ? midpoint(t.B(), t.C()) : lerp(t.B(), t.C(), out.t_construction);
    out.r_common = inradius_of(t.A(), t.B(), out.d);
    return out;
}

Point<double> fixed_point(const Point<double>& a, const Point<double>& b, double gamma) {
    constexpr double half_pi = std::numbers::pi / 2;
    if (!(gamma > 0 && gamma < std::numbers::pi)) fail(ErrorKind::OutsideAngle, "gamma must lie in (0, pi)");
    if (std::fabs(gamma - half_pi) < 1e-12) fail(ErrorKind::RightAngleCase, "ABPQ is a parallelogram at 90 degrees");
    const double half = distance(a, b) / 2;
    if (half == 0) fail(ErrorKind::CoincidentPoints, "A and B coincide");
    // Unit normal into the half-plane of C (left of A -> B).
    const Vec2<double> n = (1 / (2 * half)) * perp(b - a);
    // Angle ADB is 90 - gamma opposite C, or gamma - 90 on C's side.
    const double apex = std::fabs(gamma - half_pi);
    const double h = half / std::tan(apex / 2);
    const double side = gamma < half_pi ? -1.0 : 1.0;
    return midpoint(a, b) + (side * h) * n;
}

FixedPointTrial fixed_point_trial(const Point<double>& a, const Point<double>& b, double gamma, double u) {
    if (!(u > 0 && u < 1)) fail(ErrorKind::OutsideAngle, "arc parameter must lie in (0, 1)");
    const double len = distance(a, b);
    const double half = len / 2;
    const Vec2<double> n = (1 / len) * perp(b - a);
    // Arc of points seeing AB under gamma, left of A -> B.
    const P arc_center = midpoint(a, b) + (half / std::tan(gamma)) * n;
    const double radius = half / std::sin(gamma);
    const double from = std::atan2(b.y - arc_center.y, b.x - arc_center.x);
    double to = std::atan2(a.y - arc_center.y, a.x - arc_center.x);
    while (to <= from) to += 2 * std::numbers::pi;
    const double phi = from + u * (to - from);

    FixedPointTrial out;
    out.c = arc_center + radius * Vec2<double>{std::cos(phi), std::sin(phi)};
    const Triangle<double> t(a, b, out.c);
    const P in = center(t, CenterId::Incenter);
    const double sa = distance(b, out.c), sb = distance(out.c, a);
    const double p = (sa + sb + len) / 2;
    const double af = p - sa, be = p - sb;
    out.e = lerp(b, out.c, be / sa);
    out.f = lerp(a, out.c, af / sb);
    out.p = out.e + (af / distance(out.e, in)) * (out.e - in);
    out.q = out.f + (be / distance(out.f, in)) * (out.f - in);
    out.pb_qa = std::fabs(distance(out.p, b) - distance(out.q, a)) / len;
    const Vec2<double> pq = out.p - out.q;
    out.trapezoid = std::fabs(cross(pq, b - a)) / (distance(out.p, out.q) * len);
    const Vec2<double> gap = (out.p - out.q) - (b - a);
    out.parallelogram = std::sqrt(norm2(gap)) / len;
    if (std::fabs(gamma - std::numbers::pi / 2) >= 1e-12) {
        const P d = fixed_point(a, b, gamma);
        const Line<double> mediator = perpendicular_bisector(out.p, out.q);
        out.mediator = std::fabs(mediator.eval(d)) / std::sqrt(norm2(mediator.normal())) / len;
    }
    return out;
}

}  // namespace circlekit
