// Neuberg circles and triangle; Lucas inner circles with the Apollonius
// circles and the tangential triangle.

#include "checks/support.hpp"

namespace circlekit::checks {

namespace {

using P = Point<double>;
using L = Line<double>;

template <class T>
SceneDocument any_triangle(Rng& rng, TriangleShape shape) {
    SceneDocument s;
    if constexpr (is_exact_v<T>) {
        put_triangle(s, random_rational_triangle(rng, shape));
    } else {
        put_triangle(s, random_triangle(rng, shape));
    }
    return s;
}

// cot of the Brocard angle as cot A + cot B + cot C, from the angles.
double cot_brocard_from_angles(const Triangle<double>& t) {
    const auto ang = triangle_angles(t);
    return 1 / std::tan(ang[0]) + 1 / std::tan(ang[1]) + 1 / std::tan(ang[2]);
}

// Center of the Neuberg circle of vertex i: on the perpendicular bisector of
// the opposite side, on the vertex's side, seeing that side under 2 omega.
template <class T>
Point<T> neuberg_center(const Triangle<T>& t, int i, const T& cot) {
    const Point<T>& n = t.vertex(i + 1);
    const Point<T>& p = t.vertex(i + 2);
    return midpoint(n, p) + T(cot / 2) * perp(p - n);
}

template <class T>
T neuberg_radius_squared(const Triangle<T>& t, int i, const T& cot) {
    return t.side2(i) / 4 * (cot * cot - 3);
}

double neuberg_distances(const SceneDocument& s, bool) {
    const auto t = triangle_of<double>(s);
    const double cot = cot_brocard_from_angles(t);
    const P o = circumcenter(t);
    std::array<double, 3> on{}, side{};
    for (int i = 0; i < 3; ++i) {
        on[i] = distance(o, neuberg_center(t, i, cot));
        side[i] = t.side(i);
    }
    const double r = std::sqrt(circumradius_squared(t));
    auto ratio = [&](int i) { return on[i] / std::pow(side[i], 3); };
    return worst_of({
        rel_diff(ratio(0), ratio(1)), rel_diff(ratio(1), ratio(2)), rel_diff(ratio(0), ratio(2)),
        rel_diff(on[0] * on[1] * on[2], r * r * r),
        rel_diff(on[0] / side[0] + on[1] / side[1] + on[2] / side[2], cot),
    });
}

template <class T>
T neuberg_side_formula(const SceneDocument& s, bool) {
    const auto t = triangle_of<T>(s);
    const T cot = brocard_cot(t);
    const T heron = 2 * t.a2() * t.b2() + 2 * t.b2() * t.c2() + 2 * t.c2() * t.a2() - t.a2() * t.a2() -
                    t.b2() * t.b2() - t.c2() * t.c2();
    T w(0);
    for (int i = 0; i < 3; ++i) {
        const T x2 = t.side2(i), y2 = t.side2(i + 1), z2 = t.side2(i + 2);
        const T formula = ((x2 + y2) * (x2 * x2 + y2 * y2) - x2 * y2 * z2) / heron;
        const T measured = distance_squared(neuberg_center(t, i, cot), neuberg_center(t, i + 1, cot));
        w = std::max(w, rel_diff(measured, formula));
    }
    return w;
}

template <class T>
T neuberg_orthogonal(const SceneDocument& s, bool) {
    const auto t = triangle_of<T>(s);
    const auto f = frame_of<T>(s);
    if (!negligible(conway(t, 0), t.tolerance(), Dim::Area)) fail(ErrorKind::RightAngle, "angle A is not right");
    const T cot = brocard_cot(t);
    const Circle<T> nb{neuberg_center(t, 1, cot), neuberg_radius_squared(t, 1, cot)};
    const Circle<T> nc{neuberg_center(t, 2, cot), neuberg_radius_squared(t, 2, cot)};
    return rel_area(f, circles_orthogonal(nb, nc));
}

// A point M on the A-Neuberg circle on A's side of BC: MBC has the same
// Brocard angle.
double neuberg_locus(const SceneDocument& s, bool) {
    const auto t = triangle_of<double>(s);
    const double cot = cot_brocard_from_angles(t);
    const P c = neuberg_center(t, 0, cot);
    const double r = std::sqrt(neuberg_radius_squared(t, 0, cot));
    const Vec2<double> u = (1 / t.a()) * (t.C() - t.B());
    const double th = s.param("theta");
    const P m = c + r * Vec2<double>{std::cos(th) * u.x - std::sin(th) * u.y, std::sin(th) * u.x + std::cos(th) * u.y};
    if (signed_area2(m, t.B(), t.C()) <= 0.05 * t.a2()) fail(ErrorKind::OnSideLine, "M not clearly on A's side of BC");
    const Triangle<double> mbc(m, t.B(), t.C());
    return rel_diff(cot_brocard_from_angles(mbc), cot);
}

// ---------------------------------------------------------------------------
// Lucas circles
// ---------------------------------------------------------------------------

// The inner circle of vertex i from the square construction: a square with
// a corner on the side toward vertex i+1 and two corners on the base is
// projected from vertex i+1 so that its fourth corner lands on the other side.
Circle<double> lucas_by_square(const Triangle<double>& t, int i) {
    const auto& tol = t.tolerance();
    const P& x = t.vertex(i);
    const P& n = t.vertex(i + 1);
    const P& p = t.vertex(i + 2);
    const L base = join(n, p, tol);
    const P a1 = midpoint(n, x);
    const P b1 = foot(a1, base);
    const Vec2<double> along = (1 / distance(n, p)) * (p - n);
    const P c1 = b1 + distance(a1, b1) * along;
    const P d1 = c1 + (a1 - b1);
    const P d = meet_lines(join(n, d1, tol), join(x, p, tol), tol);
    const P a = meet_lines(parallel_through(base, d), join(x, n, tol), tol);
    return circle_through(x, a, d, tol);
}

template <class T>
Circle<T> lucas_by_formula(const Triangle<T>& t, int i) {
    const T r = lucas_radius(t, vertex_at(i));
    return Circle<T>{lucas_center(t, vertex_at(i)), r * r};
}

double lucas_tangencies(const SceneDocument& s, bool) {
    const auto t = triangle_of<double>(s);
    const auto f = frame_of<double>(s);
    const double rr = std::sqrt(circumradius_squared(t));
    const P o = circumcenter(t);
    std::array<Circle<double>, 3> lc;
    std::array<double, 3> lr{};
    double w = 0;
    for (int i = 0; i < 3; ++i) {
        lc[i] = lucas_by_square(t, i);
        lr[i] = std::sqrt(lc[i].radius_squared);
        const double h = 2 * t.area() / t.side(i);
        w = std::max(w, rel_diff(lr[i], rr * h / (t.side(i) + h)));
        w = std::max(w, rel_diff(lr[i], rr / (1 + 2 * t.side(i) * rr / (t.side(i + 1) * t.side(i + 2)))));
        w = std::max(w, std::fabs(distance(o, lc[i].center) - (rr - lr[i])) / f.scale);
    }
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3;
        w = std::max(w, std::fabs(distance(lc[i].center, lc[j].center) - (lr[i] + lr[j])) / f.scale);
    }
    return w;
}

double apollonius_lucas_pencil(const SceneDocument& s, bool mutate) {
    const auto t = triangle_of<double>(s);
    const auto f = frame_of<double>(s);
    const Circle<double> lb = lucas_by_square(t, 1), lc = lucas_by_square(t, 2);
    const double rb = std::sqrt(lb.radius_squared);
    // Contact point of the B- and C-circles.
    const P n1 = lb.center + (rb / distance(lb.center, lc.center)) * (lc.center - lb.center);
    // Mutation: rank-2 circle in place of the bisector-feet circle.
    const Circle<double> ap = apollonius_circle(t, 0, mutate ? 2 : 1);
    const double ratio = distance(ap.center, t.B()) / distance(ap.center, t.C());
    return worst_of({
        on_circle_res(f, n1, ap),
        collinear_res(f, ap.center, lb.center, lc.center),
        // B-side over C-side is c^2 / b^2, as for any external symmedian foot.
        rel_diff(ratio, t.c2() / t.b2()),
    });
}

double lucas_homology(const SceneDocument& s, bool) {
    const auto t = triangle_of<double>(s);
    const auto f = frame_of<double>(s);
    const auto& tol = t.tolerance();
    const P o = circumcenter(t);
    std::array<P, 3> lc;
    for (int i = 0; i < 3; ++i) lc[i] = lucas_by_square(t, i).center;
    double w = 0;
    std::array<P, 3> cut;
    for (int i = 0; i < 3; ++i) {
        w = std::max(w, on_line_res(f, o, join(t.vertex(i), lc[i], tol)));
        cut[i] = meet_lines(join(lc[(i + 1) % 3], lc[(i + 2) % 3], tol), side(t, i), tol);
        if (cut[i].at_infinity) fail(ErrorKind::InfinitePointUnsupported, "Lucas side parallel to the base");
        w = std::max(w, rel_dist(f, cut[i], apollonius_circle(t, i, 1).center));
    }
    return std::max(w, collinear_res(f, cut[0], cut[1], cut[2]));
}

double tangential_lucas_orthology(const SceneDocument& s, bool) {
    const auto t = triangle_of<double>(s);
    const auto f = frame_of<double>(s);
    const auto tv = derived_vertices(t, DerivedTriangleId::Tangential);
    std::array<P, 3> lc;
    for (int i = 0; i < 3; ++i) lc[i] = lucas_by_square(t, i).center;
    auto perps = [&](const std::array<P, 3>& from, const std::array<P, 3>& to) {
        std::array<L, 3> out;
        for (int i = 0; i < 3; ++i)
            out[i] = line_through(from[i], perp(to[(i + 2) % 3] - to[(i + 1) % 3]));
        return out;
    };
    const auto a = perps(tv, lc), b = perps(lc, tv);
    return std::max(concurrent_res(f, a[0], a[1], a[2]), concurrent_res(f, b[0], b[1], b[2]));
}

template <class T>
T apollonius_lucas_orthogonal(const SceneDocument& s, bool) {
    const auto t = triangle_of<T>(s);
    const auto f = frame_of<T>(s);
    return rel_area(f, circles_orthogonal(apollonius_circle(t, 0, 1), lucas_by_formula(t, 0)));
}

}  // namespace

void add_neuberg_lucas_checks(Catalog& out) {
    const TriangleShape scalene{AngleShape::Any, true, false};
    const TriangleShape clean{AngleShape::Any, true, true};
    const TriangleShape right{AngleShape::RightAtA, false, false};
    out.push_back({{"N.P1", "ON_a : ON_b : ON_c = a^3 : b^3 : c^3, product R^3, sum ON_a / a = cot omega",
                    BackendSupport::Float},
                   [](Rng& r) { return any_triangle<double>(r, {}); }, neuberg_distances, nullptr, nullptr});
    out.push_back({{"N.P2", "closed form of the Neuberg triangle's squared sides", BackendSupport::Both},
                   [](Rng& r) { return any_triangle<double>(r, {}); }, neuberg_side_formula<double>,
                   [](Rng& r) { return any_triangle<Rational>(r, {}); },
                   [](const SceneDocument& s) { return to_double(neuberg_side_formula<Rational>(s, false)); }});
    out.push_back({{"N.P4", "right angle at A makes the B- and C-Neuberg circles orthogonal", BackendSupport::Both},
                   [right](Rng& r) { return any_triangle<double>(r, right); }, neuberg_orthogonal<double>,
                   [right](Rng& r) { return any_triangle<Rational>(r, right); },
                   [](const SceneDocument& s) { return to_double(neuberg_orthogonal<Rational>(s, false)); }});
    out.push_back({{"N.LOC", "points of the A-Neuberg circle form with BC triangles of the same Brocard angle",
                    BackendSupport::Float},
                   [](Rng& r) {
                       SceneDocument s = any_triangle<double>(r, {});
                       s.params["theta"] = r.uniform(0, 6.283185307179586);
                       return s;
                   },
                   neuberg_locus, nullptr, nullptr});
    out.push_back({{"LU.T1", "Lucas circles touch the circumcircle internally and each other externally",
                    BackendSupport::Float},
                   [](Rng& r) { return any_triangle<double>(r, {}); }, lucas_tangencies, nullptr, nullptr});
    out.push_back({{"LU.T3", "A-Apollonius, B-Lucas and C-Lucas circles touch at one point", BackendSupport::Float,
                    true},
                   [clean](Rng& r) { return any_triangle<double>(r, clean); }, apollonius_lucas_pencil, nullptr,
                   nullptr});
    out.push_back({{"LU.P1", "ABC and the Lucas triangle are homological with center O and the Apollonius axis",
                    BackendSupport::Float},
                   [clean](Rng& r) { return any_triangle<double>(r, clean); }, lucas_homology, nullptr, nullptr});
    out.push_back({{"LU.P2", "tangential and Lucas triangles are orthological", BackendSupport::Float},
                   [clean](Rng& r) { return any_triangle<double>(r, clean); }, tangential_lucas_orthology, nullptr,
                   nullptr});
    out.push_back({{"LU.R2", "A-Apollonius and A-Lucas circles are orthogonal", BackendSupport::Both},
                   [scalene](Rng& r) { return any_triangle<double>(r, scalene); }, apollonius_lucas_orthogonal<double>,
                   [scalene](Rng& r) { return any_triangle<Rational>(r, scalene); },
                   [](const SceneDocument& s) { return to_double(apollonius_lucas_orthogonal<Rational>(s, false)); }});
}

}  // namespace circlekit::checks
