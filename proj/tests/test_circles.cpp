#include <doctest.h>

#include <numbers>

#include "circlekit/circles.hpp"
#include "circlekit/sampling.hpp"
#include "oracle.hpp"

using namespace circlekit;

namespace {

using Pd = Point<double>;
using Pq = Point<Rational>;
using Td = Triangle<double>;
using Tq = Triangle<Rational>;

Pd pt(double x, double y) { return Pd::at(x, y); }
Pq pq(long a, long b, long c = 1, long d = 1) { return Pq::at(Rational(a, c), Rational(b, d)); }
oracle::P op(const Pd& p) { return {p.x, p.y}; }

Td reference() { return Td(pt(0, 3), pt(0, 0), pt(4, 0)); }
Tq reference_exact() { return Tq(pq(0, 3), pq(0, 0), pq(4, 0)); }
// Side length 2.
Td equilateral() { return Td(pt(0, std::sqrt(3.0)), pt(-1, 0), pt(1, 0)); }

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::MalformedDocument;
}

bool near(const Pd& p, double x, double y, double eps = 1e-12) {
    return !p.at_infinity && std::fabs(p.x - x) <= eps && std::fabs(p.y - y) <= eps;
}

template <class T>
std::vector<Point<T>> witness_points(const NamedCircleResult<T>& r) {
    std::vector<Point<T>> out;
    for (const auto& [n, p] : r.witnesses) out.push_back(p);
    return out;
}

double max_power(const NamedCircleResult<double>& r) {
    double worst = 0;
    for (const auto& [n, p] : r.witnesses) worst = std::max(worst, std::fabs(power_of_point(p, r.circle)));
    return worst;
}

double off_line(const Pd& p, const Pd& q, Vec2<double> d) { return std::fabs(cross(d, p - q)) / std::sqrt(norm2(d)); }

}  // namespace

TEST_SUITE("circles") {

TEST_CASE("Lemoine circles of the reference triangle") {
    const Td t = reference();
    const auto second = lemoine_second(t);
    CHECK(near(second.circle.center, 0.72, 0.96));
    CHECK(second.metadata.at("R_L2") == doctest::Approx(1.2).epsilon(1e-14));
    CHECK(second.metadata.at("tan_omega") == doctest::Approx(0.48).epsilon(1e-14));
    CHECK(std::sqrt(second.metadata.at("R_tan_omega_squared")) == doctest::Approx(1.2).epsilon(1e-14));

    const auto first = lemoine_first(t);
    const double expected = 0.5 * std::sqrt(7.69);
    CHECK(std::fabs(first.metadata.at("R_L1") - expected) <= 1e-12);
    CHECK(std::fabs(first.metadata.at("R_L1_closed_form") - expected) <= 1e-12);
    CHECK(std::fabs(first.metadata.at("R_L1_power_route") - expected) <= 1e-12);
    CHECK(near(first.circle.center, 1.36, 1.23));

    // Oracle: circle through three parallel-cut points.
    const auto a = op(t.A()), b = op(t.B()), c = op(t.C()), k = oracle::symmedian(a, b, c);
    const auto a1 = oracle::meet(k, oracle::sub(c, b), a, oracle::sub(b, a));
    const auto a2 = oracle::meet(k, oracle::sub(c, b), a, oracle::sub(c, a));
    const auto b1 = oracle::meet(k, oracle::sub(a, c), b, oracle::sub(c, b));
    const auto oc = oracle::circumcenter(a1, a2, b1);
    CHECK(oracle::dist(oc, a1) == doctest::Approx(expected).epsilon(1e-12));

    const Tq e = reference_exact();
    CHECK(lemoine_second(e).circle.radius_squared == Rational(36, 25));
    const auto fe = lemoine_first(e);
    CHECK(fe.circle.radius_squared == Rational(769, 400));
    CHECK(fe.metadata.at("R_L1_closed_form_squared") == fe.circle.radius_squared);
    CHECK(fe.metadata.at("R_L1_power_route_squared") == fe.circle.radius_squared);
}

TEST_CASE("Lemoine circles of an equilateral triangle") {
    const Td t = equilateral();
    const double r = 2 / std::sqrt(3.0);
    const auto f = lemoine_first(t), s = lemoine_second(t);
    CHECK(distance(f.circle.center, s.circle.center) <= 1e-12);
    CHECK(std::sqrt(f.circle.radius_squared) == doctest::Approx(r / std::sqrt(3.0)).epsilon(1e-12));
    CHECK(std::sqrt(s.circle.radius_squared) == doctest::Approx(r / std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("Lemoine chord properties") {
    Rng rng(61);
    for (int trial = 0; trial < 300; ++trial) {
        const Td t = random_triangle(rng);
        const auto f = lemoine_first(t);
        CHECK(concyclicity_residual(witness_points(f)) <= 1e-9);
        const double a2 = t.a2(), b2 = t.b2(), c2 = t.c2();
        const Pd &A1 = f.witness("A1"), &A2 = f.witness("A2"), &B1 = f.witness("B1"), &B2 = f.witness("B2"),
                 &C1 = f.witness("C1"), &C2 = f.witness("C2");
        // Segments on BC in order B, C2, B1, C are proportional to c^2, a^2, b^2.
        const double u = distance(t.B(), C2) / c2, v = distance(C2, B1) / a2, w = distance(B1, t.C()) / b2;
        CHECK(u == doctest::Approx(v).epsilon(1e-9));
        CHECK(v == doctest::Approx(w).epsilon(1e-9));
        // Triplicate ratio: middle chords over the cubes of their sides.
        const double ka = distance(B1, C2) / (a2 * t.a()), kb = distance(C1, A2) / (b2 * t.b()),
                     kc = distance(A1, B2) / (c2 * t.c());
        CHECK(ka == doctest::Approx(kb).epsilon(1e-9));
        CHECK(kb == doctest::Approx(kc).epsilon(1e-9));

        const auto s = lemoine_second(t);
        CHECK(concyclicity_residual(witness_points(s)) <= 1e-9);
        const auto ang = triangle_angles(t);
        const double twice = 2 * std::sqrt(s.circle.radius_squared);
        CHECK(distance(s.witness("C2"), s.witness("B1")) / std::fabs(std::cos(ang[0])) == doctest::Approx(twice).epsilon(1e-9));
        CHECK(distance(s.witness("A2"), s.witness("C1")) / std::fabs(std::cos(ang[1])) == doctest::Approx(twice).epsilon(1e-9));
        CHECK(distance(s.witness("B2"), s.witness("A1")) / std::fabs(std::cos(ang[2])) == doctest::Approx(twice).epsilon(1e-9));
        // R tan(omega) = R_L2.
        CHECK(s.metadata.at("R_tan_omega_squared") == doctest::Approx(s.circle.radius_squared).epsilon(1e-12));
        CHECK(f.metadata.at("R_L1_closed_form") == doctest::Approx(f.metadata.at("R_L1")).epsilon(1e-12));
    }
}

TEST_CASE("power of K with respect to the first Lemoine circle") {
    Rng rng(67);
    for (int trial = 0; trial < 100; ++trial) {
        const Tq t = random_rational_triangle(rng);
        const auto f = lemoine_first(t);
        const auto s = lemoine_second(t);
        const Pq k = center(t, CenterId::Symmedian);
        CHECK(power_of_point(k, f.circle) == -s.circle.radius_squared);
        // K on the radical axis, which is perpendicular to OK.
        const Line<Rational> axis = radical_axis(f.circle, s.circle);
        CHECK(point_on_line(k, axis));
        CHECK(dot(axis.direction(), k - circumcenter(t)) == 0);
        CHECK(f.metadata.at("R_L1_closed_form_squared") == f.circle.radius_squared);
    }
}

TEST_CASE("distance from O to K") {
    Rng rng(131);
    for (int trial = 0; trial < 100; ++trial) {
        const Tq t = random_rational_triangle(rng);
        const Rational sigma = t.a2() + t.b2() + t.c2();
        const Pq o = circumcenter(t), k = center(t, CenterId::Symmedian), g = center(t, CenterId::Centroid);
        CHECK(distance_squared(o, k) == circumradius_squared(t) - 3 * t.a2() * t.b2() * t.c2() / (sigma * sigma));
        CHECK(distance_squared(o, orthocenter(t)) == 9 * distance_squared(o, g));
    }
}

TEST_CASE("generalized Lemoine circles") {
    Rng rng(71);
    for (int trial = 0; trial < 300; ++trial) {
        const Td t = random_triangle(rng);
        const double s = rng.uniform(0.05, 1.0);
        const auto g = generalized_lemoine(t, s);
        CHECK(concyclicity_residual(witness_points(g)) <= 1e-9);
        CHECK(g.metadata.at("np_bc_cross_squared") <= 1e-18);
        const Pd o = circumcenter(t), k = center(t, CenterId::Symmedian);
        CHECK(off_line(g.circle.center, o, k - o) <= 1e-9 * std::max(1.0, distance(g.circle.center, o)));
    }
    const Td t = reference();
    const auto at_k = generalized_lemoine(t, 1.0);
    const auto first = lemoine_first(t);
    CHECK(distance(at_k.circle.center, first.circle.center) <= 1e-12);
    CHECK(at_k.circle.radius_squared == doctest::Approx(first.circle.radius_squared).epsilon(1e-12));
    CHECK(kind_of([&] { generalized_lemoine(t, 0.0); }) == ErrorKind::PointOutsideTriangle);
    CHECK(kind_of([&] { generalized_lemoine(t, -0.5); }) == ErrorKind::PointOutsideTriangle);
    const auto ex = generalized_lemoine(reference_exact(), Rational(1, 2));
    CHECK(ex.metadata.at("np_bc_cross_squared") == 0);
}

TEST_CASE("Droz-Farny circles") {
    const Td t = reference();
    const auto f = droz_farny_first(t), s = droz_farny_second(t);
    CHECK(std::fabs(std::sqrt(f.circle.radius_squared) - 2.5) <= 1e-12);
    CHECK(std::fabs(std::sqrt(s.circle.radius_squared) - 2.5) <= 1e-12);
    CHECK(near(f.circle.center, 0, 0));
    CHECK(near(s.circle.center, 2, 1.5));
    CHECK(droz_farny_radius_squared(reference_exact()) == Rational(25, 4));

    const double side = 2;
    CHECK(std::sqrt(droz_farny_radius_squared(equilateral())) == doctest::Approx(side / std::sqrt(6.0)).epsilon(1e-12));

    Rng rng(73);
    for (int trial = 0; trial < 300; ++trial) {
        const Td r = random_triangle(rng, {.angles = AngleShape::Acute});
        const auto a = droz_farny_first(r), b = droz_farny_second(r);
        CHECK(a.witnesses.size() == 6);
        CHECK(b.witnesses.size() == 6);
        CHECK(max_power(a) <= 1e-9);
        CHECK(max_power(b) <= 1e-9);
    }
    for (int trial = 0; trial < 300; ++trial) {
        const Tq r = random_rational_triangle(rng, {.angles = AngleShape::Acute});
        const auto a = droz_farny_second(r);
        CHECK(a.circle.radius_squared == a.metadata.at("half_R2_plus_OH2"));
        CHECK(a.metadata.at("OH_squared") == 9 * circumradius_squared(r) - (r.a2() + r.b2() + r.c2()));
    }
}

TEST_CASE("Droz-Farny family") {
    const Td t = reference();
    CHECK(droz_farny_family(t, 1.0).circle.radius_squared == doctest::Approx(1).epsilon(1e-14));
    CHECK(droz_farny_family_radius_squared(reference_exact(), Rational(1)) == 1);
    CHECK(droz_farny_family_radius_squared(reference_exact(), Rational(0)) == 0);
    CHECK(kind_of([] { droz_farny_family(equilateral(), 0.1); }) == ErrorKind::ImaginaryCircle);

    Rng rng(79);
    for (int trial = 0; trial < 100; ++trial) {
        const Tq r = random_rational_triangle(rng);
        const Rational oh2 = distance_squared(circumcenter(r), orthocenter(r));
        // rho = 0: 4R^2 - sum/2 = (OH^2 - R^2) / 2.
        CHECK(droz_farny_family_radius_squared(r, Rational(0)) == (oh2 - circumradius_squared(r)) / 2);
    }
    for (int trial = 0; trial < 300; ++trial) {
        const Td r = random_triangle(rng, {.angles = AngleShape::Acute});
        const double big = std::sqrt(circumradius_squared(r));
        const auto at_r = droz_farny_family(r, big);
        CHECK(at_r.circle.radius_squared == doctest::Approx(droz_farny_radius_squared(r)).epsilon(1e-12));
        const auto fam = droz_farny_family(r, big * rng.uniform(1.0, 2.0));
        CHECK(fam.witnesses.size() == 6);
        CHECK(max_power(fam) <= 1e-9);
    }
}

TEST_CASE("radical circle of the excircles") {
    const auto c = radical_circle_excircles(reference());
    CHECK(near(c.circle.center, 1.5, 1));
    CHECK(std::fabs(std::sqrt(c.circle.radius_squared) - 0.5 * std::sqrt(37.0)) <= 1e-12);

    const auto e = radical_circle_excircles(reference_exact());
    CHECK(e.circle.radius_squared == Rational(37, 4));
    CHECK(e.metadata.at("power_A") == e.metadata.at("power_B"));
    CHECK(e.metadata.at("power_B") == e.metadata.at("power_C"));

    const double s = 2;
    const auto q = radical_circle_excircles(equilateral());
    CHECK(distance(q.circle.center, center(equilateral(), CenterId::Centroid)) <= 1e-12);
    CHECK(q.circle.radius_squared == doctest::Approx((s * s / 12 + 9 * s * s / 4) / 4).epsilon(1e-12));

    Rng rng(83);
    for (int trial = 0; trial < 100; ++trial) {
        const auto r = radical_circle_excircles(random_rational_triangle(rng));
        CHECK(r.metadata.at("power_A") == r.circle.radius_squared);
        CHECK(r.metadata.at("power_B") == r.circle.radius_squared);
        CHECK(r.metadata.at("power_C") == r.circle.radius_squared);
    }
}

TEST_CASE("Neuberg circles") {
    const auto n = neuberg_circle(reference(), Vertex::A);
    CHECK(near(n.circle.center, 2, 25.0 / 6.0));
    CHECK(std::fabs(std::sqrt(n.circle.radius_squared) - std::sqrt(193.0) / 6) <= 1e-12);
    CHECK(std::fabs(n.metadata.at("ON") - 8.0 / 3.0) <= 1e-12);

    const auto e = neuberg_circle(reference_exact(), Vertex::A);
    CHECK(e.circle.center == pq(2, 25, 1, 6));
    CHECK(e.circle.radius_squared == Rational(193, 36));
    CHECK(e.metadata.at("ON") == Rational(8, 3));
    CHECK(e.metadata.at("ON_closed_form_squared") == Rational(64, 9));

    CHECK(neuberg_circle(equilateral(), Vertex::B).circle.radius_squared == doctest::Approx(0).epsilon(1e-12));

    Rng rng(89);
    for (int trial = 0; trial < 100; ++trial) {
        const Td t = random_triangle(rng);
        const double om = brocard_angle(t);
        const auto c = neuberg_circle(t, Vertex::A);
        const double rad = std::sqrt(c.circle.radius_squared);
        for (int j = 0; j < 50; ++j) {
            const double phi = rng.uniform(0, 2 * std::numbers::pi);
            const Pd m = c.circle.center + Vec2<double>{rad * std::cos(phi), rad * std::sin(phi)};
            if (std::fabs(signed_area2(m, t.B(), t.C())) < 1e-3 * t.a2()) continue;
            CHECK(brocard_angle(Td(m, t.B(), t.C())) == doctest::Approx(om).epsilon(1e-8));
        }
        // Products and sums over the three circles.
        double prod = 1, sum = 0;
        for (int i = 0; i < 3; ++i) {
            const auto ci = neuberg_circle(t, vertex_at(i));
            prod *= ci.metadata.at("ON");
            sum += ci.metadata.at("ON") / t.side(i);
        }
        CHECK(prod == doctest::Approx(std::pow(circumradius_squared(t), 1.5)).epsilon(1e-9));
        CHECK(sum == doctest::Approx(brocard_cot(t)).epsilon(1e-9));
    }
    for (int trial = 0; trial < 100; ++trial) {
        const Tq t = random_rational_triangle(rng);
        const Pq na = neuberg_circle(t, Vertex::A).circle.center, nb = neuberg_circle(t, Vertex::B).circle.center;
        const Rational a2 = t.a2(), b2 = t.b2(), c2 = t.c2();
        const Rational num = (a2 + b2) * (a2 * a2 + b2 * b2) - a2 * b2 * c2;
        const Rational den = 2 * a2 * b2 + 2 * b2 * c2 + 2 * c2 * a2 - a2 * a2 - b2 * b2 - c2 * c2;
        CHECK(distance_squared(na, nb) == num / den);
    }
}

TEST_CASE("Lucas circles") {
    const auto l = lucas_circle(reference(), Vertex::A);
    CHECK(std::sqrt(l.circle.radius_squared) == doctest::Approx(15.0 / 14.0).epsilon(1e-14));
    CHECK(l.metadata.at("radius_altitude_form") == doctest::Approx(15.0 / 14.0).epsilon(1e-14));
    CHECK(l.metadata.at("radius_side_form") == doctest::Approx(15.0 / 14.0).epsilon(1e-14));
    const auto le = lucas_circle(reference_exact(), Vertex::A);
    CHECK(le.metadata.at("radius_altitude_form") == Rational(15, 14));
    CHECK(le.metadata.at("radius_side_form") == Rational(15, 14));

    CHECK(std::sqrt(lucas_circle(equilateral(), Vertex::C).circle.radius_squared) ==
          doctest::Approx(2 / (2 + std::sqrt(3.0))).epsilon(1e-12));

    Rng rng(97);
    for (int trial = 0; trial < 300; ++trial) {
        const Td t = random_triangle(rng);
        const Circle<double> circ = circumcircle(t);
        const double big = std::sqrt(circ.radius_squared);
        std::array<NamedCircleResult<double>, 3> c = {lucas_circle(t, Vertex::A), lucas_circle(t, Vertex::B),
                                                      lucas_circle(t, Vertex::C)};
        for (int i = 0; i < 3; ++i) {
            const double ri = std::sqrt(c[i].circle.radius_squared);
            CHECK(std::fabs(distance(circ.center, c[i].circle.center) - (big - ri)) <= 1e-12 * std::max(1.0, big));
            CHECK(max_power(c[i]) <= 1e-9);
            const auto& cj = c[(i + 1) % 3];
            const double rj = std::sqrt(cj.circle.radius_squared);
            CHECK(std::fabs(distance(c[i].circle.center, cj.circle.center) - ri - rj) <= 1e-9);
        }
    }
}

TEST_CASE("Apollonius circles of rank k") {
    const Td t = reference();
    const auto a1 = apollonius_rank_k(t, Vertex::A, 1.0);
    CHECK(near(a1.circle.center, -2.25, 0));
    CHECK(std::sqrt(a1.circle.radius_squared) == doctest::Approx(3.75).epsilon(1e-14));
    const auto a2 = apollonius_rank_k(reference_exact(), Vertex::A, Rational(2));
    CHECK(a2.witness("internal_foot") == pq(18, 0, 17, 1));
    CHECK(a2.witness("external_foot") == pq(-9, 0, 4, 1));
    CHECK(kind_of([] { apollonius_rank_k(equilateral(), Vertex::B, 1.0); }) == ErrorKind::IsoscelesUndefined);

    Rng rng(103);
    for (double k : {1.0, 2.0, -1.0, 0.5, 3.0}) {
        for (int trial = 0; trial < 100; ++trial) {
            const Td r = random_triangle(rng, {.scalene = true});
            const auto c = apollonius_rank_k(r, Vertex::A, k);
            const double ratio = std::pow(std::sqrt(r.c2() / r.b2()), k);
            const double rad = std::sqrt(c.circle.radius_squared);
            for (int j = 0; j < 50; ++j) {
                const double phi = rng.uniform(0, 2 * std::numbers::pi);
                const Pd m = c.circle.center + Vec2<double>{rad * std::cos(phi), rad * std::sin(phi)};
                CHECK(distance(m, r.B()) / distance(m, r.C()) == doctest::Approx(ratio).epsilon(1e-8));
            }
            const Circle<double> circ = circumcircle(r);
            CHECK(std::fabs(circles_orthogonal(c.circle, circ)) <= 1e-9 * std::max(1.0, c.circle.radius_squared));
            // Center on the trilinear polar of the rank-2k point.
            const Pd p2k = from_barycentric(r, std::pow(r.a2(), k), std::pow(r.b2(), k), std::pow(r.c2(), k));
            CHECK(std::fabs(trilinear_polar(r, p2k).eval(c.circle.center)) <= 1e-9 * std::max(1.0, rad));
            // Circumcircle intersections lie on the rank-(k+1) cevians from A.
            const Pd f = cevian_foot_rank_k(r, Vertex::A, k + 1);
            const Pd g = harmonic_conjugate(f, r.B(), r.C());
            const Line<double> inner = join(r.A(), f);
            const Line<double> outer = g.at_infinity ? line_through(r.A(), g.vec()) : join(r.A(), g);
            for (const Pd& x : intersect_circles(c.circle, circ)) {
                const double res = std::min(std::fabs(inner.eval(x)), std::fabs(outer.eval(x)));
                CHECK(res <= 1e-9 * std::max(1.0, rad));
            }
        }
    }
}

TEST_CASE("six-point circles") {
    const Td t = reference();
    const auto in = six_point_circle(t, center(t, CenterId::Incenter));
    CHECK(near(in.circle.center, 1, 1));
    CHECK(in.circle.radius_squared == doctest::Approx(1).epsilon(1e-12));

    const Td s = Td(pt(0.2, 1.5), pt(-1, 0), pt(1.3, 0.1));
    const auto euler = six_point_circle(s, orthocenter(s));
    CHECK(distance(euler.circle.center, center(s, CenterId::NinePointCenter)) <= 1e-12);
    CHECK(euler.circle.radius_squared == doctest::Approx(circumradius_squared(s) / 4).epsilon(1e-12));

    Rng rng(107);
    for (int trial = 0; trial < 300; ++trial) {
        const Td r = random_triangle(rng, {.angles = AngleShape::Acute});
        const auto c = six_point_circle(r, random_interior_point(rng, r));
        const double rad = std::sqrt(c.circle.radius_squared);
        for (const auto& [name, p] : c.witnesses) CHECK(std::fabs(distance(p, c.circle.center) - rad) <= 1e-9);
    }
    const Tq e = reference_exact();
    CHECK(six_point_circle(e, pq(1, 1, 2, 2)).witnesses.size() == 6);
}

TEST_CASE("adjoint circles") {
    const Td t = reference();
    const auto c = adjoint_circle(t, Vertex::B, Vertex::A);
    CHECK(near(c.circle.center, -9.0 / 8.0, 1.5));
    CHECK(std::fabs(dot(c.circle.center - t.A(), t.C() - t.A())) <= 1e-12);
    CHECK(power_of_point(t.B(), c.circle) == doctest::Approx(0).epsilon(1e-12));
    const auto e = adjoint_circle(reference_exact(), Vertex::B, Vertex::A);
    CHECK(e.circle.center == pq(-9, 3, 8, 2));
    CHECK(e.circle.radius_squared == Rational(225, 64));

    const Td eq = equilateral();
    const auto q = adjoint_circle(eq, Vertex::B, Vertex::A);
    CHECK(std::fabs(dot(q.circle.center - eq.A(), eq.C() - eq.A())) <= 1e-12);

    Rng rng(109);
    for (int trial = 0; trial < 300; ++trial) {
        const Td r = random_triangle(rng);
        const auto c1 = adjoint_circle(r, Vertex::B, Vertex::A);
        const auto c2 = adjoint_circle(r, Vertex::C, Vertex::A);
        const Pd x = second_intersection(radical_axis(c1.circle, c2.circle), c1.circle, r.A());
        const Pd k = center(r, CenterId::Symmedian);
        CHECK(off_line(x, r.A(), k - r.A()) <= 1e-9);
    }
    CHECK(kind_of([&] { adjoint_circle(t, Vertex::A, Vertex::A); }) == ErrorKind::CoincidentPoints);
}

TEST_CASE("every constructor's witnesses are concyclic") {
    Rng rng(113);
    for (int trial = 0; trial < 300; ++trial) {
        const Td t = random_triangle(rng, {.scalene = true, .avoid_right = true});
        std::vector<NamedCircleResult<double>> all = {
            lemoine_first(t), lemoine_second(t), generalized_lemoine(t, 0.6), droz_farny_first(t),
            droz_farny_second(t), neuberg_circle(t, Vertex::B), lucas_circle(t, Vertex::C),
            apollonius_rank_k(t, Vertex::A, 1.0), adjoint_circle(t, Vertex::A, Vertex::B),
        };
        for (const auto& r : all) {
            auto pts = witness_points(r);
            if (pts.size() < 4) {
                CHECK(max_power(r) <= 1e-9);
                continue;
            }
            CHECK(concyclicity_residual(pts) <= 1e-9);
        }
    }
}

}  // TEST_SUITE
