// Apollonius circles of rank k, the Newton-Gauss line, and the second-rank
// circle with the adjoint circles and the second Brocard triangle.

#include "checks/support.hpp"

namespace circlekit::checks {

namespace {

using P = Point<double>;
using L = Line<double>;
using V = Vec2<double>;

constexpr double kTwoPi = 6.283185307179586;

// Rank exponent away from 0, where the circle degenerates.
double random_rank(Rng& rng) {
    const double k = rng.uniform(0.5, 3);
    return rng.coin() ? k : -k;
}

SceneDocument scalene_scene(Rng& rng, AngleShape angles = AngleShape::Any) {
    SceneDocument s;
    put_triangle(s, random_triangle(rng, {angles, true, true}));
    return s;
}

// Foot on side i of the internal cevian of real rank k, and its harmonic
// conjugate.
std::array<P, 2> rank_feet(const Triangle<double>& t, int i, double k) {
    const double wn = std::pow(t.side(i + 2), k), wp = std::pow(t.side(i + 1), k);
    const P& n = t.vertex(i + 1);
    const P& p = t.vertex(i + 2);
    return {P::at((wp * n.x + wn * p.x) / (wn + wp), (wp * n.y + wn * p.y) / (wn + wp)),
            P::at((wp * n.x - wn * p.x) / (wp - wn), (wp * n.y - wn * p.y) / (wp - wn))};
}

double rank_k_locus(const SceneDocument& s, bool) {
    const auto t = triangle_of<double>(s);
    const auto f = frame_of<double>(s);
    const double k = s.param("k");
    const Circle<double> ap = apollonius_circle_real(t, 0, k);
    const double r = std::sqrt(ap.radius_squared);
    if (r > 20 * f.scale) fail(ErrorKind::IsoscelesUndefined, "rank-k circle nearly a line");
    const double th = s.param("direction");
    const P m = ap.center + r * V{std::cos(th), std::sin(th)};
    const double ratio = std::pow(t.c() / t.b(), k);
    const double center_ratio = distance(ap.center, t.B()) / distance(ap.center, t.C());
    return worst_of({
        rel_diff(distance(m, t.B()) / distance(m, t.C()), ratio),
        rel_area(f, circles_orthogonal(ap, circumcircle(t))),
        rel_diff(center_ratio, ratio * ratio),
    });
}

// Midpoints of the three diagonals of the complete quadrilateral ABCD.
template <class T>
T newton_gauss(const SceneDocument& s, bool) {
    const auto f = frame_of<T>(s);
    const Point<T> a = get<T>(s, "A"), b = get<T>(s, "B"), c = get<T>(s, "C"), d = get<T>(s, "D");
    const ToleranceContext tol = ToleranceContext{}.with_scale(f.scale);
    const Point<T> e = meet_lines(join(a, b, tol), join(c, d, tol), tol);
    const Point<T> g = meet_lines(join(b, c, tol), join(a, d, tol), tol);
    if (e.at_infinity || g.at_infinity) fail(ErrorKind::InfinitePointUnsupported, "opposite sides parallel");
    return collinear_res(f, midpoint(a, c), midpoint(b, d), midpoint(e, g));
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
    s.put("A", q[0]);
    s.put("B", q[1]);
    s.put("C", q[2]);
    s.put("D", q[3]);
    return s;
}

double coaxial_circles(const Triangle<double>& t, const Frame<double>& f, double k) {
    std::array<Circle<double>, 3> cs;
    for (int i = 0; i < 3; ++i) cs[i] = apollonius_circle_real(t, i, k);
    const auto& tol = t.tolerance();
    const L ab = radical_axis(cs[0], cs[1], tol), ac = radical_axis(cs[0], cs[2], tol);
    const P o = circumcenter(t);
    double w = worst_of({
        collinear_res(f, cs[0].center, cs[1].center, cs[2].center),
        parallel_res(ab.direction(), ac.direction()),
        on_line_res(f, o, ab),
        on_line_res(f, o, ac),
    });
    // Isodynamic points of rank k, when the circles meet transversally.
    const auto meet = intersect_circles(cs[0], cs[1], tol);
    if (meet.size() == 2 && distance(meet[0], meet[1]) > 1e-3 * f.scale) {
        for (const P& p : meet) {
            std::array<double, 3> v{};
            for (int i = 0; i < 3; ++i) v[i] = distance(p, t.vertex(i)) * std::pow(t.side(i), k);
            w = std::max({w, rel_diff(v[0], v[1]), rel_diff(v[0], v[2])});
        }
    }
    return w;
}

double rank_k_fascicle(const SceneDocument& s, bool) {
    const auto t = triangle_of<double>(s);
    const auto f = frame_of<double>(s);
    double w = 0;
    for (double k : {1.0, 2.0, 3.0, s.param("k1"), s.param("k2")}) w = std::max(w, coaxial_circles(t, f, k));
    return w;
}

// Reflection of a direction in the bisector at vertex i.
V isogonal_direction(const Triangle<double>& t, int i, const V& d) {
    const V u = t.vertex(i + 1) - t.vertex(i), w = t.vertex(i + 2) - t.vertex(i);
    V b = (1 / std::sqrt(norm2(u))) * u + (1 / std::sqrt(norm2(w))) * w;
    b = (1 / std::sqrt(norm2(b))) * b;
    return 2 * dot(d, b) * b - d;
}

double second_rank_meets_circumcircle(const SceneDocument& s, bool) {
    const auto t = triangle_of<double>(s);
    const auto f = frame_of<double>(s);
    const auto& tol = t.tolerance();
    const auto meet = intersect_circles(apollonius_circle(t, 0, 2), circumcircle(t), tol);
    if (meet.size() != 2) fail(ErrorKind::ImaginaryCircle, "circles do not meet");
    const auto feet3 = rank_feet(t, 0, 3);
    const L internal = join(t.A(), feet3[0], tol), external = join(t.A(), feet3[1], tol);
    const double straight = std::max(on_line_res(f, meet[0], internal), on_line_res(f, meet[1], external));
    const double swapped = std::max(on_line_res(f, meet[1], internal), on_line_res(f, meet[0], external));
    // The rank-3 cevian is the isogonal of the antibisector (isotomic of the bisector).
    const P bisector_foot = rank_feet(t, 0, 1)[0];
    const P anti = P::at(t.B().x + t.C().x - bisector_foot.x, t.B().y + t.C().y - bisector_foot.y);
    return worst_of({std::min(straight, swapped),
                     parallel_res(isogonal_direction(t, 0, anti - t.A()), feet3[0] - t.A())});
}

// Q and P: meetings of the second-rank A-circle with the circumcircle, Q on
// A's side of BC.
std::array<P, 2> second_rank_points(const Triangle<double>& t) {
    const auto meet = intersect_circles(apollonius_circle(t, 0, 2), circumcircle(t), t.tolerance());
    if (meet.size() != 2) fail(ErrorKind::ImaginaryCircle, "circles do not meet");
    const double side0 = signed_area2(t.B(), t.C(), meet[0]);
    return side0 > 0 ? std::array<P, 2>{meet[0], meet[1]} : std::array<P, 2>{meet[1], meet[0]};
}

double second_rank_bisector(const SceneDocument& s, bool) {
    const auto t = triangle_of<double>(s);
    const auto pts = second_rank_points(t);
    const P q = pts[0], p = pts[1];
    const P sym_foot = rank_feet(t, 0, 2)[0];
    const V u = (1 / distance(q, t.B())) * (t.B() - q), w = (1 / distance(q, t.C())) * (t.C() - q);
    const Triangle<double> qbc(q, t.B(), t.C());
    const int qi = 0;  // Q keeps index 0: the constructor only swaps B and C
    const V median = midpoint(t.B(), t.C()) - q;
    return worst_of({parallel_res(u + w, sym_foot - q),
                     parallel_res(isogonal_direction(qbc, qi, median), p - q)});
}

// Center of the circle through `through` and `a`, tangent at a to line a-`along`.
P adjoint_center(const P& a, const P& through, const P& along) {
    return meet_lines(line_through(a, perp(along - a)), perpendicular_bisector(a, through));
}

double adjoint_circles_brocard(const SceneDocument& s, bool) {
    const auto t = triangle_of<double>(s);
    const auto f = frame_of<double>(s);
    const auto& tol = t.tolerance();
    const P o = circumcenter(t);
    const P c_ba = adjoint_center(t.A(), t.B(), t.C());
    const P c_ca = adjoint_center(t.A(), t.C(), t.B());
    // Second common point: reflection of A in the line of centers.
    const P a2 = reflect(t.A(), join(c_ba, c_ca, tol));
    const auto feet = rank_feet(t, 0, 2);
    const P chord_end = second_intersection(join(t.A(), feet[0], tol), circumcircle(t), t.A());
    const Circle<double> boc = circle_through(t.B(), o, t.C(), tol);
    return worst_of({
        on_circle_res(f, a2, apollonius_circle(t, 0, 2)),
        on_circle_res(f, a2, boc),
        perp_res(a2 - o, feet[0] - t.A()),
        rel_dist(f, a2, midpoint(t.A(), chord_end)),
        collinear_res(f, o, a2, feet[1]),
        rel_dist(f, a2, derived_vertices(t, DerivedTriangleId::SecondBrocard)[0]),
    });
}

}  // namespace

void add_apollonius_checks(Catalog& out) {
    out.push_back({{"AK.T1", "the rank-k circle is the locus MB/MC = (AB/AC)^k, orthogonal to the circumcircle",
                    BackendSupport::Float},
                   [](Rng& r) {
                       SceneDocument s = scalene_scene(r);
                       s.params["k"] = random_rank(r);
                       s.params["direction"] = r.uniform(0, kTwoPi);
                       return s;
                   },
                   rank_k_locus, nullptr, nullptr});
    out.push_back({{"AK.T2", "Newton-Gauss: midpoints of the diagonals of a complete quadrilateral are collinear",
                    BackendSupport::Both},
                   quadrilateral_scene<double>, newton_gauss<double>, quadrilateral_scene<Rational>,
                   [](const SceneDocument& s) { return to_double(newton_gauss<Rational>(s, false)); }});
    out.push_back({{"AK.T3", "the three rank-k Apollonius circles are coaxial", BackendSupport::Float},
                   [](Rng& r) {
                       SceneDocument s = scalene_scene(r);
                       s.params["k1"] = random_rank(r);
                       s.params["k2"] = random_rank(r);
                       return s;
                   },
                   rank_k_fascicle, nullptr, nullptr});
    out.push_back({{"AK.T7", "the rank-2 circle meets the circumcircle on the rank-3 cevians",
                    BackendSupport::Float},
                   [](Rng& r) { return scalene_scene(r); }, second_rank_meets_circumcircle, nullptr, nullptr});
    out.push_back({{"A2.P1", "QS bisects angle BQC and QP is a symmedian of QBC", BackendSupport::Float},
                   [](Rng& r) { return scalene_scene(r); }, second_rank_bisector, nullptr, nullptr});
    out.push_back({{"A2.P2", "adjoint circles of A, the rank-2 circle and (BOC) pass through the second Brocard vertex",
                    BackendSupport::Float},
                   [](Rng& r) { return scalene_scene(r, AngleShape::Acute); }, adjoint_circles_brocard, nullptr,
                   nullptr});
}

}  // namespace circlekit::checks
