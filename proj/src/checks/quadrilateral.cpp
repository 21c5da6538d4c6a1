// Harmonic quadrilateral, six-point circle, the medial/tangential orthology,
// the dual-orthocenter theorems and the Aubert line with Bobillier
// transversals.

#include "checks/support.hpp"

namespace circlekit::checks {

namespace {

using P = Point<double>;
using L = Line<double>;
using V = Vec2<double>;

template <class T>
SceneDocument triangle_scene(Rng& rng, TriangleShape shape = {}) {
    SceneDocument s;
    if constexpr (is_exact_v<T>) {
        put_triangle(s, random_rational_triangle(rng, shape));
    } else {
        put_triangle(s, random_triangle(rng, shape));
    }
    return s;
}

template <class T>
SceneDocument quadrilateral_scene(Rng& rng) {
    SceneDocument s;
    const auto q = [&] {
        if constexpr (is_exact_v<T>) {
            return random_rational_quadrilateral(rng);
        } else {
            return random_convex_quadrilateral(rng);
        }
    }();
    const char* names[] = {"A", "B", "C", "D"};
    for (int i = 0; i < 4; ++i) s.put(names[i], q[i]);
    return s;
}

template <class T>
std::array<Point<T>, 4> quadrilateral_of(const SceneDocument& s) {
    return {get<T>(s, "A"), get<T>(s, "B"), get<T>(s, "C"), get<T>(s, "D")};
}

double max_spread(const Frame<double>& f, const P& c, const std::vector<P>& pts) {
    double lo = kInf, hi = 0;
    for (const P& p : pts) {
        lo = std::min(lo, distance(c, p));
        hi = std::max(hi, distance(c, p));
    }
    return (hi - lo) / f.scale;
}

// ---------------------------------------------------------------------------
// Harmonic quadrilateral
// ---------------------------------------------------------------------------

double dist_to_line(const P& p, const P& a, const P& b) {
    return std::fabs(cross(b - a, p - a)) / distance(a, b);
}

double sum_sq_dist(const std::array<P, 4>& q, const P& m) {
    double sum = 0;
    for (int i = 0; i < 4; ++i) {
        const double d = dist_to_line(m, q[i], q[(i + 1) % 4]);
        sum += d * d;
    }
    return sum;
}

// A scalene triangle and the second meeting D of the A-symmedian (mutated:
// A-median) with the circumcircle; the quadrilateral is A, B, D, C in order.
double harmonic_quadrilateral(const SceneDocument& s, bool mutate) {
    const auto t = triangle_of<double>(s);
    const auto f = frame_of<double>(s);
    const auto& tol = t.tolerance();
    const Circle<double> cc = circumcircle(t);
    const P o = cc.center;
    const P through = center(t, mutate ? CenterId::Centroid : CenterId::Symmedian);
    const P d = second_intersection(join(t.A(), through, tol), cc, t.A());
    const std::array<P, 4> q = {t.A(), t.B(), d, t.C()};
    auto len = [&](int i) { return distance(q[i % 4], q[(i + 1) % 4]); };

    std::vector<double> res;
    res.push_back(rel_diff(len(0) * len(2), len(1) * len(3)));

    const P k = meet_lines(join(q[0], q[2], tol), join(q[1], q[3], tol), tol);
    if (k.at_infinity) fail(ErrorKind::InfinitePointUnsupported, "diagonals parallel");
    for (int i = 0; i < 4; ++i) {
        const Triangle<double> sub(q[i], q[(i + 3) % 4], q[(i + 1) % 4]);
        res.push_back(on_line_res(f, center(sub, CenterId::Symmedian), join(q[i], q[(i + 2) % 4], tol)));
    }

    std::array<double, 4> ratio{};
    for (int i = 0; i < 4; ++i) ratio[i] = dist_to_line(k, q[i], q[(i + 1) % 4]) / len(i);
    for (int i = 1; i < 4; ++i) res.push_back(rel_diff(ratio[0], ratio[i]));

    // Least sum of squared distances to the sides, at K.
    const double area2 = std::fabs(signed_area2(q[0], q[1], q[2])) + std::fabs(signed_area2(q[0], q[2], q[3]));
    double sides2 = 0;
    for (int i = 0; i < 4; ++i) sides2 += len(i) * len(i);
    const double at_k = sum_sq_dist(q, k);
    res.push_back(rel_diff(at_k, area2 * area2 / sides2));
    Rng probe = Rng::for_trial(static_cast<std::uint64_t>(s.param("probe")), 0);
    double undercut = 0;
    for (int n = 0; n < 200; ++n) {
        std::array<double, 4> w{};
        double total = 0;
        for (double& x : w) total += (x = probe.uniform(0.01, 1));
        P m = P::at(0, 0);
        for (int i = 0; i < 4; ++i) m = m + (w[i] / total) * (q[i] - P::at(0, 0));
        undercut = std::max(undercut, (at_k - sum_sq_dist(q, m)) / at_k);
    }
    res.push_back(std::max(undercut, 0.0));

    const Line<double> tangents[4] = {tangent_at(cc, q[0]), tangent_at(cc, q[1]), tangent_at(cc, q[2]), tangent_at(cc, q[3])};
    const P p_pole = meet_lines(tangents[1], tangents[3], tol);
    const P q_pole = meet_lines(tangents[0], tangents[2], tol);
    if (p_pole.at_infinity || q_pole.at_infinity) fail(ErrorKind::InfinitePointUnsupported, "a diagonal is a diameter");
    res.push_back(on_line_res(f, p_pole, join(q[0], q[2], tol)));
    res.push_back(on_line_res(f, q_pole, join(q[1], q[3], tol)));
    res.push_back(rel_dist(f, orthocenter(Triangle<double>(p_pole, k, q_pole)), o));

    const Circle<double> ap_a = apollonius_circle(t, 0, 1);
    res.push_back(rel_dist(f, ap_a.center, meet_lines(tangents[0], side(t, 0), tol)));
    res.push_back(on_circle_res(f, d, ap_a));

    // Apollonius circles of the two ends of each diagonal, in the triangles
    // they form with the other diagonal.
    std::array<Circle<double>, 2> common;
    for (int i = 0; i < 2; ++i) {
        const Circle<double> c1 = apollonius_circle(Triangle<double>(q[i], q[i + 1], q[(i + 3) % 4]), 0, 1);
        const Circle<double> c2 = apollonius_circle(Triangle<double>(q[i + 2], q[i + 1], q[(i + 3) % 4]), 0, 1);
        res.push_back(rel_dist(f, c1.center, c2.center));
        res.push_back(std::fabs(std::sqrt(c1.radius_squared) - std::sqrt(c2.radius_squared)) / f.scale);
        common[i] = c1;
    }
    const L axis = radical_axis(common[0], common[1], tol);
    res.push_back(on_line_res(f, o, axis));
    res.push_back(on_line_res(f, k, axis));

    double w = 0;
    for (double r : res) {
        if (std::isnan(r)) return kInf;
        w = std::max(w, r);
    }
    return w;
}

// ---------------------------------------------------------------------------
// Six-point circle
// ---------------------------------------------------------------------------

std::vector<P> projections(const Triangle<double>& t, const P& p) {
    std::vector<P> out;
    for (int i = 0; i < 3; ++i) out.push_back(foot(p, side(t, i)));
    return out;
}

double six_points(const SceneDocument& s, bool) {
    const auto t = triangle_of<double>(s);
    const auto f = frame_of<double>(s);
    const P p1 = s.point("P");
    if (side_clearance(t, p1) < 0.02) fail(ErrorKind::OnSideLine, "P too close to a side line");
    if (std::fabs(power_of_point(p1, circumcircle(t))) < 0.05 * f.unit2)
        fail(ErrorKind::OnCircumcircle, "P too close to the circumcircle");
    const P p2 = isogonal_conjugate(t, p1);
    if (distance(p2, center(t, CenterId::Centroid)) > 20 * f.scale) fail(ErrorKind::OnCircumcircle, "conjugate too far");
    auto pts = projections(t, p1);
    for (const P& p : projections(t, p2)) pts.push_back(p);
    return max_spread(f, midpoint(p1, p2), pts);
}

double nine_points(const SceneDocument& s, bool) {
    const auto t = triangle_of<double>(s);
    const auto f = frame_of<double>(s);
    const P h = orthocenter(t), o = circumcenter(t);
    auto pts = projections(t, h);
    for (const P& p : projections(t, o)) pts.push_back(p);
    for (const P& v : t.vertices()) pts.push_back(midpoint(v, h));
    return worst_of({max_spread(f, midpoint(o, h), pts), concyclic_res(f, pts)});
}

// ---------------------------------------------------------------------------
// Medial and tangential triangles
// ---------------------------------------------------------------------------

template <class T>
T medial_tangential(const SceneDocument& s, bool) {
    const auto t = triangle_of<T>(s);
    const auto f = frame_of<T>(s);
    const auto& tol = t.tolerance();
    const auto m = derived_vertices(t, DerivedTriangleId::Medial);
    const auto tv = derived_vertices(t, DerivedTriangleId::Tangential);
    const Point<T> o = circumcenter(t), h = orthocenter(t);
    const Point<T> o9 = midpoint(o, h);
    T w(0);
    std::array<Point<T>, 3> axis_pts;
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        w = std::max(w, on_line_res(f, o9, line_through(m[i], perp(tv[k] - tv[j]))));
        w = std::max(w, on_line_res(f, o, line_through(tv[i], perp(m[k] - m[j]))));
        axis_pts[i] = meet_lines(join(tv[j], tv[k], tol), join(m[j], m[k], tol), tol);
        if (axis_pts[i].at_infinity) fail(ErrorKind::InfinitePointUnsupported, "homology axis point at infinity");
    }
    w = std::max(w, collinear_res(f, axis_pts[0], axis_pts[1], axis_pts[2]));
    // Two farthest axis points carry the direction.
    int a = 0, b = 1;
    T best = distance_squared(axis_pts[0], axis_pts[1]);
    if (distance_squared(axis_pts[0], axis_pts[2]) > best) { best = distance_squared(axis_pts[0], axis_pts[2]); b = 2; }
    if (distance_squared(axis_pts[1], axis_pts[2]) > best) { a = 1; b = 2; }
    return std::max(w, perp_res(h - o, axis_pts[b] - axis_pts[a]));
}

// ---------------------------------------------------------------------------
// Dual orthocenter theorems and Bobillier transversals
// ---------------------------------------------------------------------------

double cevian_perpendiculars(const SceneDocument& s, bool) {
    const auto t = triangle_of<double>(s);
    const auto f = frame_of<double>(s);
    const auto& tol = t.tolerance();
    const P h = orthocenter(t), q = s.point("Q");
    if (distance(q, h) < 0.05 * f.scale) fail(ErrorKind::CoincidentPoints, "Q too close to H");
    if (side_clearance(t, q) < 0.02) fail(ErrorKind::OnSideLine, "Q too close to a side line");
    std::array<P, 3> cut;
    for (int i = 0; i < 3; ++i) {
        if (distance(q, t.vertex(i)) < 0.05 * f.scale) fail(ErrorKind::CoincidentPoints, "Q too close to a vertex");
        cut[i] = meet_lines(line_through(h, perp(q - t.vertex(i))), side(t, i), tol);
        if (cut[i].at_infinity) fail(ErrorKind::InfinitePointUnsupported, "perpendicular parallel to its side");
    }
    return collinear_res(f, cut[0], cut[1], cut[2]);
}

// Points where the perpendiculars at m to m-v_i meet the opposite sides.
std::array<P, 3> bobillier_points(const std::array<P, 3>& v, const P& m, double scale) {
    const ToleranceContext tol = ToleranceContext{}.with_scale(scale);
    std::array<P, 3> out;
    for (int i = 0; i < 3; ++i) {
        if (distance(m, v[i]) < 0.05 * scale) fail(ErrorKind::CoincidentPoints, "point too close to a vertex");
        const L opposite = join(v[(i + 1) % 3], v[(i + 2) % 3], tol);
        const L normal = line_through(m, perp(v[i] - m));
        if (parallel_res(normal.direction(), opposite.direction()) < 0.02)
            fail(ErrorKind::InfinitePointUnsupported, "Bobillier transversal undefined");
        out[i] = meet_lines(normal, opposite, tol);
        if (distance(out[i], m) > 50 * scale) fail(ErrorKind::InfinitePointUnsupported, "Bobillier point too far");
    }
    return out;
}

// Line through the two farthest of three (collinear) points.
L line_of(const std::array<P, 3>& p, double scale) {
    int a = 0, b = 1;
    double best = distance(p[0], p[1]);
    if (distance(p[0], p[2]) > best) { best = distance(p[0], p[2]); b = 2; }
    if (distance(p[1], p[2]) > best) { best = distance(p[1], p[2]); a = 1; b = 2; }
    if (best < 0.05 * scale) fail(ErrorKind::CoincidentPoints, "transversal points coincide");
    return join(p[a], p[b], ToleranceContext{}.with_scale(scale));
}

double bobillier_collinear(const SceneDocument& s, bool) {
    const auto t = triangle_of<double>(s);
    const auto f = frame_of<double>(s);
    const auto pts = bobillier_points(t.vertices(), s.point("M"), f.scale);
    return collinear_res(f, pts[0], pts[1], pts[2]);
}

double dual_cevians(const SceneDocument& s, bool) {
    const auto t = triangle_of<double>(s);
    const auto f = frame_of<double>(s);
    const auto& tol = t.tolerance();
    const P m = s.point("M");
    const L bob = line_of(bobillier_points(t.vertices(), m, f.scale), f.scale);
    const P a2 = lerp(t.B(), t.C(), s.param("u"));
    const P b2 = lerp(t.C(), t.A(), s.param("v"));
    const L transversal = join(a2, b2, tol);
    const P c2 = meet_lines(transversal, side(t, 2), tol);
    if (c2.at_infinity) fail(ErrorKind::InfinitePointUnsupported, "transversal parallel to AB");
    const std::array<P, 3> on = {a2, b2, c2};
    std::array<L, 3> cevians;
    for (int i = 0; i < 3; ++i) {
        if (distance(on[i], m) < 0.05 * f.scale) fail(ErrorKind::CoincidentPoints, "transversal point at M");
        const P a3 = meet_lines(line_through(m, perp(on[i] - m)), bob, tol);
        if (a3.at_infinity || distance(a3, t.vertex(i)) < 0.05 * f.scale || distance(a3, m) > 50 * f.scale)
            fail(ErrorKind::InfinitePointUnsupported, "cevian undefined");
        cevians[i] = join(t.vertex(i), a3, tol);
    }
    return concurrent_res(f, cevians[0], cevians[1], cevians[2]);
}

// Four triangles of the complete quadrilateral ABCD with E = AB.CD and
// F = BC.AD: ABF, AED, BCE, CDF.
template <class T>
std::array<std::array<Point<T>, 3>, 4> complete_quadrilateral_triangles(const std::array<Point<T>, 4>& q,
                                                                       const ToleranceContext& tol) {
    const Point<T> e = meet_lines(join(q[0], q[1], tol), join(q[2], q[3], tol), tol);
    const Point<T> g = meet_lines(join(q[1], q[2], tol), join(q[0], q[3], tol), tol);
    if (e.at_infinity || g.at_infinity) fail(ErrorKind::InfinitePointUnsupported, "opposite sides parallel");
    return {{{q[0], q[1], g}, {q[0], e, q[3]}, {q[1], q[2], e}, {q[2], q[3], g}}};
}

template <class T>
T aubert_line(const SceneDocument& s, bool mutate) {
    const auto f = frame_of<T>(s);
    const auto q = quadrilateral_of<T>(s);
    const ToleranceContext tol = ToleranceContext{}.with_scale(f.scale);
    std::array<Point<T>, 4> h;
    const auto tris = complete_quadrilateral_triangles(q, tol);
    for (int i = 0; i < 4; ++i) {
        const Triangle<T> tri(tris[i][0], tris[i][1], tris[i][2], tol);
        h[i] = mutate ? center(tri, CenterId::Centroid) : orthocenter(tri);
    }
    int a = 0, b = 1;
    T best = distance_squared(h[0], h[1]);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (distance_squared(h[i], h[j]) > best) { best = distance_squared(h[i], h[j]); a = i; b = j; }
    T w(0);
    for (int i = 0; i < 4; ++i)
        if (i != a && i != b) w = std::max(w, collinear_res(f, h[a], h[b], h[i]));
    const Point<T> e = tris[1][1], g = tris[0][2];
    const Point<T> m1 = midpoint(q[0], q[2]), m2 = midpoint(q[1], q[3]), m3 = midpoint(e, g);
    // Newton-Gauss direction from its two farthest midpoints.
    Vec2<T> ng = m2 - m1;
    if (norm2(m3 - m1) > norm2(ng)) ng = m3 - m1;
    return std::max(w, perp_res(h[b] - h[a], ng));
}

double bobillier_concurrent(const SceneDocument& s, bool) {
    const auto f = frame_of<double>(s);
    const auto q = quadrilateral_of<double>(s);
    const P m = s.point("M");
    std::array<L, 4> lines;
    for (int i = 0; i < 4; ++i) {
        const std::array<P, 3> tri = {q[i], q[(i + 1) % 4], q[(i + 2) % 4]};
        const Triangle<double> t(tri[0], tri[1], tri[2]);
        if (distance(m, orthocenter(t)) < 0.05 * f.scale) fail(ErrorKind::CoincidentPoints, "M at an orthocenter");
        lines[i] = line_of(bobillier_points(tri, m, f.scale), f.scale);
    }
    return std::max(concurrent_res(f, lines[0], lines[1], lines[2]), concurrent_res(f, lines[0], lines[1], lines[3]));
}

}  // namespace

void add_quadrilateral_checks(Catalog& out) {
    const TriangleShape scalene{AngleShape::Any, true, true};
    out.push_back({{"HQ.ALL", "harmonic quadrilateral: products, symmedian diagonals, K minimizes distances, tangents, Apollonius circles",
                    BackendSupport::Float, true},
                   [scalene](Rng& r) {
                       SceneDocument s = triangle_scene<double>(r, scalene);
                       s.params["probe"] = static_cast<double>(r.integer(0, 1 << 30));
                       return s;
                   },
                   harmonic_quadrilateral, nullptr, nullptr});
    out.push_back({{"SP.T1", "projections of two isogonal points on the sides lie on a circle about their midpoint",
                    BackendSupport::Float},
                   [](Rng& r) {
                       SceneDocument s = triangle_scene<double>(r);
                       s.put("P", random_near(r, triangle_of<double>(s), 0.6));
                       return s;
                   },
                   six_points, nullptr, nullptr});
    out.push_back({{"SP.P2", "for H and O the six projections and the midpoints of AH, BH, CH are concyclic",
                    BackendSupport::Float},
                   [](Rng& r) { return triangle_scene<double>(r, {AngleShape::Any, false, true}); }, nine_points,
                   nullptr, nullptr});
    out.push_back({{"OR.P", "medial and tangential triangles are orthological with centers O9 and O; OH is perpendicular to the homology axis",
                    BackendSupport::Both},
                   [scalene](Rng& r) { return triangle_scene<double>(r, scalene); }, medial_tangential<double>,
                   [scalene](Rng& r) { return triangle_scene<Rational>(r, scalene); },
                   [](const SceneDocument& s) { return to_double(medial_tangential<Rational>(s, false)); }});
    out.push_back({{"DO.T1", "perpendiculars from H to concurrent cevians meet the sides in collinear points",
                    BackendSupport::Float},
                   [scalene](Rng& r) {
                       SceneDocument s = triangle_scene<double>(r, scalene);
                       s.put("Q", random_near(r, triangle_of<double>(s), 0.6));
                       return s;
                   },
                   cevian_perpendiculars, nullptr, nullptr});
    out.push_back({{"DO.T2", "perpendiculars at M to M-A2, M-B2, M-C2 meet the Bobillier transversal on concurrent cevians",
                    BackendSupport::Float},
                   [](Rng& r) {
                       SceneDocument s = triangle_scene<double>(r);
                       s.put("M", random_near(r, triangle_of<double>(s), 0.6));
                       s.params["u"] = r.uniform(0.1, 0.9);
                       s.params["v"] = r.uniform(-0.8, 0.2);
                       return s;
                   },
                   dual_cevians, nullptr, nullptr});
    out.push_back({{"AU.T1", "Bobillier: perpendiculars at M to MA, MB, MC meet the opposite sides in collinear points",
                    BackendSupport::Float},
                   [](Rng& r) {
                       SceneDocument s = triangle_scene<double>(r);
                       s.put("M", random_near(r, triangle_of<double>(s), 0.6));
                       return s;
                   },
                   bobillier_collinear, nullptr, nullptr});
    out.push_back({{"AU.T3", "orthocenters of the four triangles of a complete quadrilateral lie on a line perpendicular to the Newton-Gauss line",
                    BackendSupport::Both, true},
                   quadrilateral_scene<double>, aubert_line<double>, quadrilateral_scene<Rational>,
                   [](const SceneDocument& s) { return to_double(aubert_line<Rational>(s, false)); }});
    out.push_back({{"AU.T4", "Bobillier transversals of ABC, BCD, CDA, DAB with respect to M are concurrent",
                    BackendSupport::Float},
                   [](Rng& r) {
                       SceneDocument s = quadrilateral_scene<double>(r);
                       const auto q = quadrilateral_of<double>(s);
                       const Triangle<double> t(q[0], q[1], q[2]);
                       s.put("M", random_near(r, t, 0.8));
                       return s;
                   },
                   bobillier_concurrent, nullptr, nullptr});
}

}  // namespace circlekit::checks
