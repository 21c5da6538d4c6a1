// Droz-Farny circles: circles about H cutting the midlines, circles about
// the altitude feet and the side midpoints cutting the sides, and the
// radical-center characterizations with their controls.

#include "checks/support.hpp"

namespace circlekit::checks {

namespace {

using P = Point<double>;
using L = Line<double>;

SceneDocument triangle_scene(Rng& rng, TriangleShape shape) {
    SceneDocument s;
    put_triangle(s, random_triangle(rng, shape));
    return s;
}

// Points of side line i at squared distance r2 from c (c on that line).
std::array<P, 2> side_points(const Triangle<double>& t, int i, const P& c, double r2) {
    if (r2 <= 0) fail(ErrorKind::ImaginaryCircle, "circle misses its side");
    const Vec2<double> d = t.vertex(i + 2) - t.vertex(i + 1);
    const double k = std::sqrt(r2 / norm2(d));
    return {c - k * d, c + k * d};
}

P altitude_foot(const Triangle<double>& t, int i) { return foot(t.vertex(i), side(t, i)); }

// Largest deviation of |HX|^2 from `expected`, over the squared unit.
double squared_radius_res(const Frame<double>& f, const P& h, const std::vector<P>& pts, double expected) {
    double w = 0;
    for (const P& p : pts) w = std::max(w, rel_area(f, distance_squared(h, p) - expected));
    return w;
}

double common_distance_res(const Frame<double>& f, const P& h, const std::vector<P>& pts) {
    double lo = kInf, hi = 0;
    for (const P& p : pts) {
        lo = std::min(lo, distance(h, p));
        hi = std::max(hi, distance(h, p));
    }
    return (hi - lo) / f.scale;
}

double midline_circle(const SceneDocument& s, bool) {
    const auto t = triangle_of<double>(s);
    const auto f = frame_of<double>(s);
    const auto& tol = t.tolerance();
    const P h = orthocenter(t), o = circumcenter(t);
    std::array<L, 3> midlines;
    double dmax = 0;
    for (int i = 0; i < 3; ++i) {
        const P& v = t.vertex(i);
        midlines[i] = join(midpoint(v, t.vertex(i + 1)), midpoint(v, t.vertex(i + 2)), tol);
        dmax = std::max(dmax, std::fabs(midlines[i].eval(h)));
    }
    const double rh = dmax * (1.05 + s.param("u"));
    const double expected = rh * rh + (circumradius_squared(t) - distance_squared(o, h)) / 2;
    double w = 0;
    for (int i = 0; i < 3; ++i) {
        const auto pts = intersect_line_circle(midlines[i], Circle<double>{h, rh * rh}, tol);
        if (pts.size() != 2) fail(ErrorKind::ImaginaryCircle, "circle about H misses a midline");
        for (const P& p : pts) w = std::max(w, rel_area(f, distance_squared(t.vertex(i), p) - expected));
    }
    return w;
}

// Circles about the altitude feet through O (or, mutated, through G).
double feet_circles_through_o(const SceneDocument& s, bool mutate) {
    const auto t = triangle_of<double>(s);
    const auto f = frame_of<double>(s);
    const P h = orthocenter(t), o = circumcenter(t);
    const P through = mutate ? center(t, CenterId::Centroid) : o;
    std::vector<P> pts;
    for (int i = 0; i < 3; ++i) {
        const P c = altitude_foot(t, i);
        for (const P& p : side_points(t, i, c, distance_squared(c, through))) pts.push_back(p);
    }
    const double expected = (circumradius_squared(t) + distance_squared(o, h)) / 2;
    return worst_of({squared_radius_res(f, h, pts, expected), concyclic_res(f, pts)});
}

// Feet circles with common power -kappa R^2 at O; scale factors on the
// squared radii for the control.
std::vector<P> feet_circle_points(const Triangle<double>& t, double kappa, const std::array<double, 3>& stretch) {
    const P o = circumcenter(t);
    std::vector<P> pts;
    for (int i = 0; i < 3; ++i) {
        const P c = altitude_foot(t, i);
        const double r2 = (distance_squared(c, o) + kappa * circumradius_squared(t)) * stretch[i];
        for (const P& p : side_points(t, i, c, r2)) pts.push_back(p);
    }
    return pts;
}

double feet_circles_radical_center(const SceneDocument& s, bool) {
    const auto t = triangle_of<double>(s);
    const auto f = frame_of<double>(s);
    const double kappa = s.param("kappa"), delta = s.param("delta");
    const auto pts = feet_circle_points(t, kappa, {1, 1, 1});
    const auto off = feet_circle_points(t, kappa, {1 + delta, 1, 1});
    return worst_of({common_distance_res(f, orthocenter(t), pts), concyclic_res(f, pts)}) +
           control_penalty(concyclic_res(f, off));
}

// Circles about the side midpoints through H.
template <class T>
T midpoint_circles_through_h(const SceneDocument& s, bool) {
    const auto t = triangle_of<T>(s);
    const auto f = frame_of<T>(s);
    const Point<T> h = orthocenter(t), o = circumcenter(t);
    const T sigma = t.a2() + t.b2() + t.c2();
    const T r2 = circumradius_squared(t);
    const T expected = 5 * r2 - sigma / 2;
    if constexpr (is_exact_v<T>) {
        // |OX|^2 = |OM|^2 + |MX|^2 with OM perpendicular to the side and
        // |MX| = |MH|: no square root needed.
        T w(0);
        for (int i = 0; i < 3; ++i) {
            const Point<T> m = midpoint(t.vertex(i + 1), t.vertex(i + 2));
            w = std::max(w, rel_area(f, T(distance_squared(o, m) + distance_squared(m, h) - expected)));
        }
        const T oh2 = distance_squared(o, h);
        w = std::max(w, rel_area(f, T(expected - (r2 + oh2) / 2)));
        w = std::max(w, rel_area(f, T(oh2 - (9 * r2 - sigma))));
        return w;
    } else {
        std::vector<P> pts;
        for (int i = 0; i < 3; ++i) {
            const P m = midpoint(t.vertex(i + 1), t.vertex(i + 2));
            for (const P& p : side_points(t, i, m, distance_squared(m, h))) pts.push_back(p);
        }
        return worst_of({squared_radius_res(f, o, pts, expected), concyclic_res(f, pts)});
    }
}

std::vector<P> midpoint_circle_points(const Triangle<double>& t, double k, const std::array<double, 3>& stretch) {
    std::vector<P> pts;
    for (int i = 0; i < 3; ++i) {
        const P m = midpoint(t.vertex(i + 1), t.vertex(i + 2));
        for (const P& p : side_points(t, i, m, (k + t.side2(i)) / 4 * stretch[i])) pts.push_back(p);
    }
    return pts;
}

double midpoint_circles_family(const SceneDocument& s, bool) {
    const auto t = triangle_of<double>(s);
    const auto f = frame_of<double>(s);
    const double k = s.param("kappa") * std::min({t.a2(), t.b2(), t.c2()});
    const double delta = s.param("delta");
    const auto pts = midpoint_circle_points(t, k, {1, 1, 1});
    const auto off = midpoint_circle_points(t, k, {1 + delta, 1, 1});
    return worst_of({common_distance_res(f, circumcenter(t), pts), concyclic_res(f, pts)}) +
           control_penalty(concyclic_res(f, off));
}

}  // namespace

void add_droz_farny_checks(Catalog& out) {
    out.push_back({{"DF1.T1", "circle about H cuts the midlines at equal distances from the vertices",
                    BackendSupport::Float},
                   [](Rng& r) {
                       SceneDocument s = triangle_scene(r, {});
                       s.params["u"] = r.uniform(0, 1);
                       return s;
                   },
                   midline_circle, nullptr, nullptr});
    out.push_back({{"DF1.T3", "circles about the altitude feet through O cut the sides on the first Droz-Farny circle",
                    BackendSupport::Float, true},
                   [](Rng& r) { return triangle_scene(r, {AngleShape::Acute, false, false}); }, feet_circles_through_o,
                   nullptr, nullptr});
    out.push_back({{"DF1.T4", "altitude-foot circles with radical center O cut the sides in six points about H",
                    BackendSupport::Float},
                   [](Rng& r) {
                       SceneDocument s = triangle_scene(r, {AngleShape::Acute, false, false});
                       s.params["kappa"] = r.uniform(0, 1);
                       s.params["delta"] = r.uniform(0.05, 0.3);
                       return s;
                   },
                   feet_circles_radical_center, nullptr, nullptr});
    out.push_back({{"DF2.T1", "midpoint circles through H cut the sides on a circle about O, R2^2 = 5R^2 - (a^2+b^2+c^2)/2",
                    BackendSupport::Both},
                   [](Rng& r) { return triangle_scene(r, {}); }, midpoint_circles_through_h<double>,
                   [](Rng& r) {
                       SceneDocument s;
                       put_triangle(s, random_rational_triangle(r));
                       return s;
                   },
                   [](const SceneDocument& s) { return to_double(midpoint_circles_through_h<Rational>(s, false)); }});
    out.push_back({{"DF2.P2", "midpoint circles of radii sqrt(k + side^2) / 2 cut the sides in six concyclic points",
                    BackendSupport::Float},
                   [](Rng& r) {
                       SceneDocument s = triangle_scene(r, {});
                       s.params["kappa"] = r.uniform(-0.9, 3);
                       s.params["delta"] = r.uniform(0.05, 0.3);
                       return s;
                   },
                   midpoint_circles_family, nullptr, nullptr});
}

}  // namespace circlekit::checks
