#include <doctest.h>

#include "circlekit/kernel.hpp"
#include "oracle.hpp"

using namespace circlekit;

namespace {

using Pd = Point<double>;
using Pq = Point<Rational>;

Pd pt(double x, double y) { return Pd::at(x, y); }
Pq pq(long a, long b, long c = 1, long d = 1) { return Pq::at(Rational(a, c), Rational(b, d)); }

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::MalformedDocument;
}

}  // namespace

TEST_SUITE("kernel") {

TEST_CASE("circle through the reference triangle") {
    const auto c = circle_through(pt(0, 3), pt(0, 0), pt(4, 0));
    CHECK(c.center.x == doctest::Approx(2).epsilon(1e-15));
    CHECK(c.center.y == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(c.radius_squared == doctest::Approx(6.25).epsilon(1e-15));

    const auto q = circle_through(pq(0, 3), pq(0, 0), pq(4, 0));
    CHECK(q.center == pq(2, 3, 1, 2));
    CHECK(q.radius_squared == Rational(25, 4));
}

TEST_CASE("radical axis of two circles") {
    const Circle<double> c1{pt(0, 0), 1}, c2{pt(3, 0), 4};
    const auto l = radical_axis(c1, c2);
    CHECK(l.a() == doctest::Approx(1));
    CHECK(l.b() == doctest::Approx(0));
    CHECK(l.c() == doctest::Approx(-1));

    const Circle<Rational> e1{pq(0, 0), 1}, e2{pq(3, 0), 4};
    CHECK(radical_axis(e1, e2) == Line<Rational>::from(1, 0, -1));
}

TEST_CASE("polar and pole with respect to the unit circle") {
    const Circle<double> unit{pt(0, 0), 1};
    const auto l = polar_line(pt(2, 0), unit);
    CHECK(l.a() == doctest::Approx(1));
    CHECK(l.c() == doctest::Approx(-0.5));
    const auto p = pole_of_line(l, unit);
    CHECK(p.x == doctest::Approx(2));
    CHECK(p.y == doctest::Approx(0).epsilon(1e-15));

    const Circle<Rational> eu{pq(0, 0), 1};
    CHECK(polar_line(pq(2, 0), eu) == Line<Rational>::from(2, 0, -1));
    CHECK(pole_of_line(Line<Rational>::from(2, 0, -1), eu) == pq(2, 0));
}

TEST_CASE("concyclicity residual of a point off the unit circle") {
    // |(0,2)|^2 - 1 = 3 with unit scale.
    const double r = concyclicity_residual<double>({pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, 2)});
    CHECK(r == doctest::Approx(3).epsilon(1e-14));
    const Rational e = concyclicity_residual<Rational>({pq(1, 0), pq(0, 1), pq(-1, 0), pq(0, 2)});
    CHECK(e == 3);
}

TEST_CASE("error kinds") {
    const Line<double> x0 = Line<double>::from(1, 0, 0);
    CHECK(kind_of([&] { meet_lines(x0, Line<double>::from(2, 0, 0)); }) == ErrorKind::CoincidentLines);
    CHECK(kind_of([&] { circle_through(pt(0, 0), pt(1, 0), pt(2, 0)); }) == ErrorKind::CollinearPoints);
    CHECK(kind_of([&] { radical_axis(Circle<double>{pt(1, 1), 1}, Circle<double>{pt(1, 1), 4}); }) ==
          ErrorKind::ConcentricCircles);
    CHECK(kind_of([&] { polar_line(pt(0, 0), Circle<double>{pt(0, 0), 1}); }) == ErrorKind::PoleAtCenter);
    CHECK(kind_of([&] { pole_of_line(x0, Circle<double>{pt(0, 0), 1}); }) == ErrorKind::LineThroughCenter);
    CHECK(kind_of([&] { join(pt(1, 2), pt(1, 2)); }) == ErrorKind::CoincidentPoints);
    CHECK(kind_of([&] { Circle<double>::make(pt(0, 0), -1.0); }) == ErrorKind::ImaginaryCircle);
    CHECK(kind_of([&] { sqrt_exact(Rational(2)); }) == ErrorKind::IrrationalValue);
}

TEST_CASE("parallel lines meet at infinity") {
    const auto p = meet_lines(Line<double>::from(0, 1, 0), Line<double>::from(0, 2, -2));
    CHECK(p.at_infinity);
    CHECK(p.x == doctest::Approx(1));
    CHECK(p.y == doctest::Approx(0));
    // Two points at infinity span the line at infinity.
    const auto l = join(Pd::direction(1, 0), Pd::direction(1, 1));
    CHECK(l.is_at_infinity());
}

TEST_CASE("exact line normalization") {
    const auto l = join(pq(0, 0), pq(2, 4));
    CHECK(l == Line<Rational>::from(2, -1, 0));
    const auto m = Line<Rational>::from(Rational(-3, 4), Rational(3, 2), Rational(9, 8));
    CHECK(m.a() == 2);
    CHECK(m.b() == -4);
    CHECK(m.c() == -3);
}

TEST_CASE("float line normalization convention") {
    const auto l = Line<double>::from(-3, -4, 10);
    CHECK(l.a() == doctest::Approx(0.6));
    CHECK(l.b() == doctest::Approx(0.8));
    CHECK(l.c() == doctest::Approx(-2));
    const auto m = Line<double>::from(0, -2, 1);
    CHECK(m.b() == doctest::Approx(1));
}

TEST_CASE("line-circle intersection on the exact backend") {
    const Circle<Rational> c{pq(0, 0), Rational(25, 4)};
    const auto pts = intersect_line_circle(Line<Rational>::from(0, 1, 0), c);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0] == pq(5, 0, 2, 1));
    CHECK(pts[1] == pq(-5, 0, 2, 1));
    CHECK(intersect_line_circle(Line<Rational>::from(0, 1, -3), c).empty());
    // Tangent line.
    CHECK(intersect_line_circle(Line<Rational>::from(2, 0, -5), c).size() == 1);
}

TEST_CASE("incidence properties on random configurations") {
    auto g = oracle::rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Pd p = pt(oracle::uniform(g, -5, 5), oracle::uniform(g, -5, 5));
        const Pd q = pt(oracle::uniform(g, -5, 5), oracle::uniform(g, -5, 5));
        const Pd r = pt(oracle::uniform(g, -5, 5), oracle::uniform(g, -5, 5));
        const Pd s = pt(oracle::uniform(g, -5, 5), oracle::uniform(g, -5, 5));
        const auto l = join(p, q), m = join(r, s);
        const auto x = meet_lines(l, m);
        if (x.at_infinity) continue;
        const double scale = std::max(1.0, std::hypot(x.x, x.y));
        CHECK(std::fabs(l.eval(x)) <= 1e-12 * scale);
        CHECK(std::fabs(m.eval(x)) <= 1e-12 * scale);

        // Oracle meet.
        const auto o = oracle::meet({p.x, p.y}, {q.x - p.x, q.y - p.y}, {r.x, r.y}, {s.x - r.x, s.y - r.y});
        CHECK(std::hypot(o.x - x.x, o.y - x.y) <= 1e-9 * scale);

        // Pole-polar involution and power along the radical axis.
        const Circle<double> c1{r, 1 + oracle::uniform(g, 0, 4)};
        const Circle<double> c2{s, 1 + oracle::uniform(g, 0, 4)};
        if (distance(p, r) > 1e-3) {
            const auto back = pole_of_line(polar_line(p, c1), c1);
            CHECK(distance(back, p) <= 1e-9 * std::max(1.0, distance(p, r) + 1 / distance(p, r)));
        }
        if (distance(r, s) > 1e-3) {
            const auto ax = radical_axis(c1, c2);
            const auto on = foot(p, ax);
            CHECK(std::fabs(power_of_point(on, c1) - power_of_point(on, c2)) <= 1e-9 * (1 + norm2(on - r)));
        }
    }
}

TEST_CASE("circle through three points agrees with the oracle") {
    auto g = oracle::rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const oracle::P a{oracle::uniform(g, -3, 3), oracle::uniform(g, -3, 3)};
        const oracle::P b{oracle::uniform(g, -3, 3), oracle::uniform(g, -3, 3)};
        const oracle::P c{oracle::uniform(g, -3, 3), oracle::uniform(g, -3, 3)};
        if (std::fabs(oracle::crossp(oracle::sub(b, a), oracle::sub(c, a))) < 0.1) continue;
        const auto o = oracle::circumcenter(a, b, c);
        const auto k = circle_through(pt(a.x, a.y), pt(b.x, b.y), pt(c.x, c.y));
        CHECK(std::hypot(o.x - k.center.x, o.y - k.center.y) <= 1e-9 * (1 + oracle::dist(o, a)));
    }
}

TEST_CASE("exact circle operations have zero residuals") {
    std::mt19937_64 g(3);
    auto rq = [&] { return Rational(static_cast<long>(g() % 41) - 20, 1 + static_cast<long>(g() % 9)); };
    for (int trial = 0; trial < 50; ++trial) {
        const Pq a = Pq::at(rq(), rq()), b = Pq::at(rq(), rq()), c = Pq::at(rq(), rq());
        if (signed_area2(a, b, c) == 0) continue;
        const auto k = circle_through(a, b, c);
        CHECK(power_of_point(a, k) == 0);
        CHECK(power_of_point(b, k) == 0);
        CHECK(power_of_point(c, k) == 0);
        // Second intersection via the sum of roots stays on the circle.
        const Pq d = second_intersection(join(a, Pq::at(rq(), rq() + 100)), k, a);
        CHECK(power_of_point(d, k) == 0);
    }
}

}  // TEST_SUITE
