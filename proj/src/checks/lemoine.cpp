// Lemoine circles: the parallel and antiparallel chains through the
// symmedian point, chord ratios, the radical axis of the two circles and the
// generalized construction along the A-symmedian.

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

// Direction of the circumcircle tangent at vertex i: antiparallels to the
// opposite side have this direction.
template <class T>
Vec2<T> tangent_direction(const Triangle<T>& t, int i) {
    return perp(t.vertex(i) - circumcenter(t));
}

// The six points where the parallels to the sides through K meet the other
// sides, named as in the first-circle chain: A1 on AB and A2 on AC from the
// parallel to BC, B1 on BC and B2 on AB from the parallel to CA, C1 on CA
// and C2 on BC from the parallel to AB.
template <class T>
struct ParallelPoints {
    Point<T> a1, a2, b1, b2, c1, c2;
};

template <class T>
ParallelPoints<T> lemoine_parallels(const Triangle<T>& t, const Point<T>& k) {
    const auto& tol = t.tolerance();
    const Line<T> bc = side(t, 0), ca = side(t, 1), ab = side(t, 2);
    const Line<T> pa = parallel_through(bc, k), pb = parallel_through(ca, k), pc = parallel_through(ab, k);
    return {meet_lines(pa, ab, tol), meet_lines(pa, ca, tol), meet_lines(pb, bc, tol),
            meet_lines(pb, ab, tol), meet_lines(pc, ca, tol), meet_lines(pc, bc, tol)};
}

// Same naming for the antiparallels through K.
template <class T>
ParallelPoints<T> lemoine_antiparallels(const Triangle<T>& t, const Point<T>& k) {
    const auto& tol = t.tolerance();
    const Line<T> bc = side(t, 0), ca = side(t, 1), ab = side(t, 2);
    const Line<T> qa = line_through(k, tangent_direction(t, 0));
    const Line<T> qb = line_through(k, tangent_direction(t, 1));
    const Line<T> qc = line_through(k, tangent_direction(t, 2));
    return {meet_lines(qa, ab, tol), meet_lines(qa, ca, tol), meet_lines(qb, bc, tol),
            meet_lines(qb, ab, tol), meet_lines(qc, ca, tol), meet_lines(qc, bc, tol)};
}

// First circle: the chain parallel / antiparallel / parallel / ... started
// from the parallel to BC through K. Only the first step uses K.
double first_circle_chain(const SceneDocument& s, bool) {
    const auto t = triangle_of<double>(s);
    const auto f = frame_of<double>(s);
    const auto& tol = t.tolerance();
    const L bc = side(t, 0), ca = side(t, 1), ab = side(t, 2);
    const P k = center(t, CenterId::Symmedian);
    const L l1 = parallel_through(bc, k);
    const P a1 = meet_lines(l1, ab, tol), a2 = meet_lines(l1, ca, tol);
    const L l2 = line_through(a2, tangent_direction(t, 2));
    const P b1 = meet_lines(l2, bc, tol);
    const L l3 = parallel_through(ca, b1);
    const P b2 = meet_lines(l3, ab, tol);
    const L l4 = line_through(b2, tangent_direction(t, 0));
    const P c1 = meet_lines(l4, ca, tol);
    const L l5 = parallel_through(ab, c1);
    const P c2 = meet_lines(l5, bc, tol);
    return worst_of({
        parallel_res(c2 - a1, tangent_direction(t, 1)),
        on_line_res(f, k, l3),
        on_line_res(f, k, l5),
        concyclic_res(f, {a1, a2, b1, b2, c1, c2}),
    });
}

// Second circle: antiparallel to BC through K, then parallel / antiparallel
// alternately.
double second_circle_chain(const SceneDocument& s, bool) {
    const auto t = triangle_of<double>(s);
    const auto f = frame_of<double>(s);
    const auto& tol = t.tolerance();
    const L bc = side(t, 0), ca = side(t, 1), ab = side(t, 2);
    const P k = center(t, CenterId::Symmedian);
    const L l1 = line_through(k, tangent_direction(t, 0));
    const P a1 = meet_lines(l1, ab, tol), a2 = meet_lines(l1, ca, tol);
    const L l2 = parallel_through(ab, a2);
    const P b1 = meet_lines(l2, bc, tol);
    const L l3 = line_through(b1, tangent_direction(t, 1));
    const P b2 = meet_lines(l3, ab, tol);
    const L l4 = parallel_through(bc, b2);
    const P c1 = meet_lines(l4, ca, tol);
    const L l5 = line_through(c1, tangent_direction(t, 2));
    const P c2 = meet_lines(l5, bc, tol);
    const double r = distance(k, a1);
    double equal = 0;
    for (const P& p : {a2, b1, b2, c1, c2}) equal = std::max(equal, std::fabs(distance(k, p) - r) / f.scale);
    return worst_of({
        parallel_res(c2 - a1, t.A() - t.C()),
        on_line_res(f, k, l3),
        on_line_res(f, k, l5),
        equal,
    });
}

double first_circle_center(const SceneDocument& s, bool) {
    const auto t = triangle_of<double>(s);
    const auto f = frame_of<double>(s);
    const P k = center(t, CenterId::Symmedian);
    const auto q = lemoine_parallels(t, k);
    const Circle<double> c = circle_through(q.a1, q.b1, q.c1, t.tolerance());
    return worst_of({
        rel_dist(f, c.center, midpoint(circumcenter(t), k)),
        concyclic_res(f, {q.a1, q.a2, q.b1, q.b2, q.c1, q.c2}),
    });
}

// Points of the first circle on the sides divide each side in ratios of
// squared sides.
double side_division(const SceneDocument& s, bool) {
    const auto t = triangle_of<double>(s);
    const auto q = lemoine_parallels(t, center(t, CenterId::Symmedian));
    const double a2 = t.a2(), b2 = t.b2(), c2 = t.c2();
    auto triple = [](double x, double y, double z) {
        return worst_of({rel_diff(x, y), rel_diff(y, z), rel_diff(x, z)});
    };
    // Along BC: B, C2, B1, C. Along CA: C, A2, C1, A. Along AB: A, B2, A1, B.
    return worst_of({
        triple(distance(t.B(), q.c2) / c2, distance(q.c2, q.b1) / a2, distance(q.b1, t.C()) / b2),
        triple(distance(t.C(), q.a2) / a2, distance(q.a2, q.c1) / b2, distance(q.c1, t.A()) / c2),
        triple(distance(t.A(), q.b2) / b2, distance(q.b2, q.a1) / c2, distance(q.a1, t.B()) / a2),
    });
}

double chord_cubes(const SceneDocument& s, bool) {
    const auto t = triangle_of<double>(s);
    const auto q = lemoine_parallels(t, center(t, CenterId::Symmedian));
    const double x = distance(q.b1, q.c2) / std::pow(t.a(), 3);
    const double y = distance(q.c1, q.a2) / std::pow(t.b(), 3);
    const double z = distance(q.a1, q.b2) / std::pow(t.c(), 3);
    return worst_of({rel_diff(x, y), rel_diff(y, z), rel_diff(x, z)});
}

// Second-circle chords over the cosine of the opposite angle all equal
// 2 abc / (a^2 + b^2 + c^2).
double chord_cosines(const SceneDocument& s, bool) {
    const auto t = triangle_of<double>(s);
    const auto q = lemoine_antiparallels(t, center(t, CenterId::Symmedian));
    const double a = t.a(), b = t.b(), c = t.c();
    const double diameter = 2 * a * b * c / (t.a2() + t.b2() + t.c2());
    const double cos_a = (t.b2() + t.c2() - t.a2()) / (2 * b * c);
    const double cos_b = (t.c2() + t.a2() - t.b2()) / (2 * c * a);
    const double cos_c = (t.a2() + t.b2() - t.c2()) / (2 * a * b);
    return worst_of({
        rel_diff(distance(q.c2, q.b1) / cos_a, diameter),
        rel_diff(distance(q.a2, q.c1) / cos_b, diameter),
        rel_diff(distance(q.b2, q.a1) / cos_c, diameter),
    });
}

// Both circles are rebuilt through three of their own chord points.
template <class T>
T lemoine_radical_axis(const SceneDocument& s, bool mutate) {
    const auto t = triangle_of<T>(s);
    const auto f = frame_of<T>(s);
    const auto& tol = t.tolerance();
    const Point<T> k = center(t, CenterId::Symmedian);
    const auto p = lemoine_parallels(t, k);
    const auto q = lemoine_antiparallels(t, k);
    const Circle<T> first = circle_through(p.a1, p.b1, p.c1, tol);
    const Circle<T> second = circle_through(q.a1, q.b1, q.c1, tol);
    const Line<T> axis = radical_axis(first, second, tol);
    // Mutation: claim the axis passes through the centroid instead.
    const Point<T> claimed = mutate ? center(t, CenterId::Centroid) : k;
    return std::max(on_line_res(f, claimed, axis), perp_res(axis.direction(), claimed - circumcenter(t)));
}

// Two circles with power(O1, C2) = -R1^2: the radical axis is the
// perpendicular at O1 to O1O2.
template <class T>
SceneDocument power_premise_scene(Rng& rng) {
    SceneDocument s;
    if constexpr (is_exact_v<T>) {
        auto r = [&](long lo, long hi) { return Rational(rng.integer(lo, hi), rng.integer(1, 6)); };
        const Point<T> o2 = Point<T>::at(r(-12, 12), r(-12, 12));
        const Point<T> q = o2 + Vec2<T>{r(-12, 12), r(-12, 12)};
        const Point<T> o1 = lerp(o2, q, Rational(rng.integer(1, 9), 10)) + Vec2<T>{r(-2, 2), r(-2, 2)};
        s.put("O2", o2);
        s.put("Q", q);
        s.put("O1", o1);
    } else {
        const P o2 = P::at(rng.uniform(-1, 1), rng.uniform(-1, 1));
        const double rad = rng.uniform(0.3, 1.5), phi = rng.uniform(0, 6.283185307179586);
        const P q = o2 + Vec2<double>{rad * std::cos(phi), rad * std::sin(phi)};
        const double d = rad * rng.uniform(0.05, 0.9), psi = rng.uniform(0, 6.283185307179586);
        s.put("O2", o2);
        s.put("Q", q);
        s.put("O1", o2 + Vec2<double>{d * std::cos(psi), d * std::sin(psi)});
    }
    return s;
}

template <class T>
T power_premise(const SceneDocument& s, bool) {
    const auto f = frame_of<T>(s);
    const Point<T> o1 = get<T>(s, "O1"), o2 = get<T>(s, "O2"), q = get<T>(s, "Q");
    const T r2 = distance_squared(o2, q);
    const T d2 = distance_squared(o1, o2);
    if (!(d2 < r2)) fail(ErrorKind::ImaginaryCircle, "O1 must be inside the second circle");
    const Circle<T> c2{o2, r2};
    const Circle<T> c1{o1, T(r2 - d2)};
    const T premise = power_of_point(o1, c2) + c1.radius_squared;
    const Line<T> axis = radical_axis(c1, c2, ToleranceContext{}.with_scale(f.scale));
    return std::max({rel_area(f, premise), on_line_res(f, o1, axis), perp_res(axis.direction(), o2 - o1)});
}

// Midpoint of a chord through AB and AC lies on the A-symmedian exactly when
// the chord is antiparallel to BC.
double antiparallel_midpoint(const SceneDocument& s, bool) {
    const auto t = triangle_of<double>(s);
    const auto f = frame_of<double>(s);
    const auto& tol = t.tolerance();
    const P k = center(t, CenterId::Symmedian);
    const L symmedian = join(t.A(), k, tol);
    const P foot_s = meet_lines(symmedian, side(t, 0), tol);
    // Forward: P on AS, chord MN through AB and AC with midpoint P.
    const P p = lerp(t.A(), foot_s, s.param("p"));
    const double sm = 2 * cross(t.C() - t.A(), p - t.A()) / cross(t.C() - t.A(), t.B() - t.A());
    const P m = lerp(t.A(), t.B(), sm);
    const P n = P::at(2 * p.x - m.x, 2 * p.y - m.y);
    // Converse: an antiparallel through a point of AB.
    const P x = lerp(t.A(), t.B(), s.param("q"));
    const L anti = line_through(x, tangent_direction(t, 0));
    const P y = meet_lines(anti, side(t, 1), tol);
    return worst_of({
        on_line_res(f, n, side(t, 1)),
        parallel_res(n - m, tangent_direction(t, 0)),
        on_line_res(f, midpoint(x, y), symmedian),
    });
}

// M on AK, MN parallel to AB with N on BK, MP parallel to AC with P on CK.
double generalized_construction(const SceneDocument& s, bool) {
    const auto t = triangle_of<double>(s);
    const auto f = frame_of<double>(s);
    const auto& tol = t.tolerance();
    const L bc = side(t, 0), ca = side(t, 1), ab = side(t, 2);
    const P k = center(t, CenterId::Symmedian);
    const P m = lerp(t.A(), k, s.param("t"));
    const L mn = parallel_through(ab, m), mp = parallel_through(ca, m);
    const P n = meet_lines(mn, join(t.B(), k, tol), tol);
    const P p = meet_lines(mp, join(t.C(), k, tol), tol);
    if (coincident(n, p, tol)) fail(ErrorKind::CoincidentPoints, "M at the symmedian point");
    const L np = join(n, p, tol);
    const std::vector<P> six = {meet_lines(np, ab, tol), meet_lines(mp, ab, tol), meet_lines(mn, bc, tol),
                                meet_lines(mp, bc, tol), meet_lines(np, ca, tol), meet_lines(mn, ca, tol)};
    const Circle<double> c = circle_through(six[1], six[2], six[4], tol);
    return worst_of({
        parallel_res(p - n, t.C() - t.B()),
        concyclic_res(f, six),
        on_line_res(f, c.center, join(circumcenter(t), k, tol)),
    });
}

}  // namespace

void add_lemoine_checks(Catalog& out) {
    const TriangleShape scalene{AngleShape::Any, true, false};
    out.push_back({{"L1.T1", "parallel/antiparallel chain through K closes; six points concyclic", BackendSupport::Float},
                   [](Rng& r) { return triangle_scene(r, {}); }, first_circle_chain, nullptr, nullptr});
    out.push_back({{"L1.T2", "antiparallel/parallel chain through K closes; six points equidistant from K",
                    BackendSupport::Float},
                   [scalene](Rng& r) { return triangle_scene(r, scalene); }, second_circle_chain, nullptr, nullptr});
    out.push_back({{"L1.R", "first Lemoine center is the midpoint of OK", BackendSupport::Float},
                   [scalene](Rng& r) { return triangle_scene(r, scalene); }, first_circle_center, nullptr, nullptr});
    out.push_back({{"L2.T1", "first Lemoine circle divides each side in ratios of squared sides", BackendSupport::Float},
                   [](Rng& r) { return triangle_scene(r, {}); }, side_division, nullptr, nullptr});
    out.push_back({{"L2.C2", "first Lemoine chords are proportional to the cubes of the sides", BackendSupport::Float},
                   [](Rng& r) { return triangle_scene(r, {}); }, chord_cubes, nullptr, nullptr});
    out.push_back({{"L2.P3", "second Lemoine chords are proportional to the cosines of the opposite angles",
                    BackendSupport::Float},
                   [](Rng& r) { return triangle_scene(r, {AngleShape::Acute, false, false}); }, chord_cosines, nullptr,
                   nullptr});
    out.push_back({{"L3.P1", "radical axis of the Lemoine circles is perpendicular to OK at K", BackendSupport::Both,
                    true},
                   [scalene](Rng& r) { return triangle_scene(r, scalene); }, lemoine_radical_axis<double>,
                   [scalene](Rng& r) {
                       SceneDocument s;
                       put_triangle(s, random_rational_triangle(r, scalene));
                       return s;
                   },
                   [](const SceneDocument& s) { return to_double(lemoine_radical_axis<Rational>(s, false)); }});
    out.push_back({{"L3.P2", "power(O1, C2) = -R1^2 puts the radical axis perpendicular to O1O2 at O1",
                    BackendSupport::Both},
                   power_premise_scene<double>, power_premise<double>, power_premise_scene<Rational>,
                   [](const SceneDocument& s) { return to_double(power_premise<Rational>(s, false)); }});
    out.push_back({{"L4.L1", "chord midpoint on the symmedian iff the chord is antiparallel", BackendSupport::Float},
                   [](Rng& r) {
                       SceneDocument s = triangle_scene(r, {AngleShape::Any, true, false});
                       s.params["p"] = r.uniform(0.1, 0.9);
                       s.params["q"] = r.uniform(0.1, 0.9);
                       return s;
                   },
                   antiparallel_midpoint, nullptr, nullptr});
    out.push_back({{"L4.T2", "generalized construction: NP parallel to BC, six points concyclic, center on OK",
                    BackendSupport::Float},
                   [scalene](Rng& r) {
                       SceneDocument s = triangle_scene(r, scalene);
                       s.params["t"] = r.uniform(0.15, 1.0);
                       return s;
                   },
                   generalized_construction, nullptr, nullptr});
}

}  // namespace circlekit::checks
