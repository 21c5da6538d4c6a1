// Transversals from a circumcircle point: generalized Simson line, the
// Aubert and M'Kensie theorems, Beltrami's isogonal parallels.

#include "checks/support.hpp"

namespace circlekit::checks {

namespace {

using P = Point<double>;
using L = Line<double>;
using V = Vec2<double>;

V rotate(const V& v, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
}

P on_circumcircle(const Triangle<double>& t, double theta) {
    const P o = circumcenter(t);
    const double r = std::sqrt(circumradius_squared(t));
    return o + r * V{std::cos(theta), std::sin(theta)};
}

// M must keep away from the vertices, where the lines through M degenerate.
void require_clear_of_vertices(const Triangle<double>& t, const P& m) {
    for (const P& v : t.vertices())
        if (distance(m, v) < 0.05 * t.tolerance().scale) fail(ErrorKind::CoincidentPoints, "M too close to a vertex");
}

SceneDocument circle_point_scene(Rng& rng, bool with_angle) {
    SceneDocument s;
    const auto t = random_triangle(rng);
    put_triangle(s, t);
    s.put("M", on_circumcircle(t, rng.uniform(0, 6.283185307179586)));
    // Directed angle with the sides, kept off 0 so the lines meet the sides.
    if (with_angle) s.params["phi"] = rng.uniform(0.2, 2.94);
    return s;
}

SceneDocument direction_scene(Rng& rng) {
    SceneDocument s = circle_point_scene(rng, false);
    s.params["direction"] = rng.uniform(0, 3.141592653589793);
    return s;
}

// Second intersection of the line through v with direction d and the circle.
P second_point(const Circle<double>& c, const P& v, const V& d) {
    return second_intersection(line_through(v, d), c, v);
}

// Feet of the three lines through M at directed angle phi with the sides.
std::array<P, 3> equal_angle_feet(const Triangle<double>& t, const P& m, double phi) {
    const auto& tol = t.tolerance();
    std::array<P, 3> feet;
    for (int i = 0; i < 3; ++i) {
        const V d = rotate(t.vertex(i + 2) - t.vertex(i + 1), phi);
        feet[i] = meet_lines(line_through(m, d), side(t, i), tol);
        if (feet[i].at_infinity) fail(ErrorKind::InfinitePointUnsupported, "line through M parallel to a side");
    }
    return feet;
}

double generalized_simson(const SceneDocument& s, bool) {
    const auto t = triangle_of<double>(s);
    const auto f = frame_of<double>(s);
    const P m = s.point("M");
    require_clear_of_vertices(t, m);
    const auto feet = equal_angle_feet(t, m, s.param("phi"));
    return collinear_res(f, feet[0], feet[1], feet[2]);
}

double second_intersection_parallel(const SceneDocument& s, bool) {
    const auto t = triangle_of<double>(s);
    const auto f = frame_of<double>(s);
    const P m = s.point("M");
    require_clear_of_vertices(t, m);
    const auto feet = equal_angle_feet(t, m, s.param("phi"));
    if (distance(feet[0], feet[1]) < 1e-3 * f.scale) fail(ErrorKind::CoincidentPoints, "feet coincide");
    const P a2 = second_point(circumcircle(t), m, feet[0] - m);
    if (distance(a2, t.A()) < 1e-3 * f.scale) fail(ErrorKind::CoincidentPoints, "A' coincides with A");
    return parallel_res(a2 - t.A(), feet[1] - feet[0]);
}

// Chords through the vertices in a common direction.
std::array<P, 3> parallel_chords(const Triangle<double>& t, const V& d) {
    const Circle<double> cc = circumcircle(t);
    std::array<P, 3> ends;
    for (int i = 0; i < 3; ++i) ends[i] = second_point(cc, t.vertex(i), d);
    return ends;
}

V unit_direction(double angle) { return {std::cos(angle), std::sin(angle)}; }

double aubert_transversal(const SceneDocument& s, bool) {
    const auto t = triangle_of<double>(s);
    const auto f = frame_of<double>(s);
    const auto& tol = t.tolerance();
    const P m = s.point("M");
    require_clear_of_vertices(t, m);
    const V d = unit_direction(s.param("direction"));
    const auto ends = parallel_chords(t, d);
    std::array<P, 3> cut;
    for (int i = 0; i < 3; ++i) {
        if (distance(m, ends[i]) < 0.05 * f.scale) fail(ErrorKind::CoincidentPoints, "M too close to a chord end");
        cut[i] = meet_lines(join(m, ends[i], tol), side(t, i), tol);
        if (cut[i].at_infinity) fail(ErrorKind::InfinitePointUnsupported, "MA' parallel to its side");
    }
    const int far = distance(cut[0], cut[1]) > distance(cut[0], cut[2]) ? 1 : 2;
    return worst_of({collinear_res(f, cut[0], cut[1], cut[2]), parallel_res(cut[far] - cut[0], d)});
}

// A transversal through two random side points; chords parallel to it from
// the vertices. The lines A'A1, B'B1, C'C1 concur on the circumcircle.
double mkensie_concurrence(const SceneDocument& s, bool) {
    const auto t = triangle_of<double>(s);
    const auto f = frame_of<double>(s);
    const auto& tol = t.tolerance();
    const P a1 = lerp(t.B(), t.C(), s.param("u"));
    const P b1 = lerp(t.C(), t.A(), s.param("v"));
    const L transversal = join(a1, b1, tol);
    const P c1 = meet_lines(transversal, side(t, 2), tol);
    if (c1.at_infinity) fail(ErrorKind::InfinitePointUnsupported, "transversal parallel to AB");
    const auto ends = parallel_chords(t, transversal.direction());
    const std::array<P, 3> foot_pts = {a1, b1, c1};
    std::array<L, 3> lines;
    for (int i = 0; i < 3; ++i) {
        if (distance(ends[i], foot_pts[i]) < 0.02 * f.scale) fail(ErrorKind::CoincidentPoints, "chord end on the transversal");
        lines[i] = join(ends[i], foot_pts[i], tol);
    }
    const P m = meet_lines(lines[0], lines[1], tol);
    if (m.at_infinity) fail(ErrorKind::InfinitePointUnsupported, "lines parallel");
    return worst_of({concurrent_res(f, lines[0], lines[1], lines[2]), on_circle_res(f, m, circumcircle(t))});
}

// Reflection of a direction in the bisector of the angle at vertex i.
V isogonal_direction(const Triangle<double>& t, int i, const V& d) {
    const V u = t.vertex(i + 1) - t.vertex(i), w = t.vertex(i + 2) - t.vertex(i);
    V b = (1 / std::sqrt(norm2(u))) * u + (1 / std::sqrt(norm2(w))) * w;
    b = (1 / std::sqrt(norm2(b))) * b;
    return 2 * dot(d, b) * b - d;
}

double beltrami_isogonals(const SceneDocument& s, bool) {
    const auto t = triangle_of<double>(s);
    const auto f = frame_of<double>(s);
    const auto& tol = t.tolerance();
    const V d = unit_direction(s.param("direction"));
    std::array<L, 3> iso;
    for (int i = 0; i < 3; ++i) iso[i] = line_through(t.vertex(i), isogonal_direction(t, i, d));
    const P m = meet_lines(iso[0], iso[1], tol);
    if (m.at_infinity) fail(ErrorKind::InfinitePointUnsupported, "isogonals parallel");
    const double forward = worst_of({concurrent_res(f, iso[0], iso[1], iso[2]), on_circle_res(f, m, circumcircle(t))});
    // Converse: the isogonals of the cevians to a circumcircle point are parallel.
    const P q = s.point("M");
    require_clear_of_vertices(t, q);
    std::array<V, 3> back;
    for (int i = 0; i < 3; ++i) back[i] = isogonal_direction(t, i, q - t.vertex(i));
    return worst_of({forward, parallel_res(back[0], back[1]), parallel_res(back[0], back[2])});
}

}  // namespace

void add_ruler_theorem_checks(Catalog& out) {
    out.push_back({{"R.L1", "lines from a circumcircle point at equal directed angles with the sides meet them in collinear points",
                    BackendSupport::Float},
                   [](Rng& r) { return circle_point_scene(r, true); }, generalized_simson, nullptr, nullptr});
    out.push_back({{"R.L2", "AA' is parallel to the generalized Simson line", BackendSupport::Float},
                   [](Rng& r) { return circle_point_scene(r, true); }, second_intersection_parallel, nullptr, nullptr});
    out.push_back({{"R.T1", "Aubert: MA', MB', MC' cut the sides on a line parallel to AA'", BackendSupport::Float},
                   direction_scene, aubert_transversal, nullptr, nullptr});
    out.push_back({{"R.T2", "M'Kensie: chords parallel to a transversal lead to a common point on the circumcircle",
                    BackendSupport::Float},
                   [](Rng& r) {
                       SceneDocument s;
                       put_triangle(s, random_triangle(r));
                       s.params["u"] = r.uniform(0.1, 0.9);
                       s.params["v"] = r.uniform(-0.8, 0.2);
                       return s;
                   },
                   mkensie_concurrence, nullptr, nullptr});
    out.push_back({{"R.T3", "Beltrami: isogonals of three parallels through the vertices concur on the circumcircle",
                    BackendSupport::Float},
                   direction_scene, beltrami_isogonals, nullptr, nullptr});
}

}  // namespace circlekit::checks
