#include "circlekit/sampling.hpp"

#include <numbers>

namespace circlekit {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr double kDeg = std::numbers::pi / 180.0;

template <class T>
std::array<double, 3> angles_of(const Triangle<T>& t) {
    std::array<double, 3> out{};
    for (int i = 0; i < 3; ++i) {
        const double x = to_double(t.side2(i + 1)), y = to_double(t.side2(i + 2)), z = to_double(t.side2(i));
        out[i] = std::acos(std::clamp((x + y - z) / (2 * std::sqrt(x * y)), -1.0, 1.0));
    }
    return out;
}

template <class T>
bool shape_ok(const Triangle<T>& t, const TriangleShape& shape) {
    const auto ang = angles_of(t);
    const double lo = std::min({ang[0], ang[1], ang[2]});
    const double hi = std::max({ang[0], ang[1], ang[2]});
    if (lo < 10 * kDeg) return false;
    double smin = 1e300, smax = 0;
    for (int i = 0; i < 3; ++i) {
        const double s = std::sqrt(to_double(t.side2(i)));
        smin = std::min(smin, s);
        smax = std::max(smax, s);
    }
    if (smax > 6 * smin) return false;
    switch (shape.angles) {
        case AngleShape::Any: break;
        case AngleShape::Acute: if (hi > 85 * kDeg) return false; break;
        case AngleShape::Obtuse: if (hi < 95 * kDeg) return false; break;
        case AngleShape::RightAtA: break;
    }
    if (shape.avoid_right)
        for (double a : ang)
            if (std::fabs(a - 90 * kDeg) < 5 * kDeg) return false;
    if (shape.scalene) {
        for (int i = 0; i < 3; ++i) {
            const double d = std::fabs(std::sqrt(to_double(t.side2(i))) - std::sqrt(to_double(t.side2(i + 1))));
            if (d < 0.05 * smax) return false;
        }
    }
    return true;
}

Rational small_rational(Rng& rng, long num_lo, long num_hi, long den_hi) {
    return Rational(rng.integer(num_lo, num_hi), rng.integer(1, den_hi));
}

}  // namespace

Rng Rng::for_trial(std::uint64_t seed, std::uint64_t trial) {
    return Rng(splitmix64(splitmix64(seed) ^ (trial + 0x632be59bd9b4e019ULL)));
}

std::array<double, 3> triangle_angles(const Triangle<double>& t) { return angles_of(t); }

Triangle<double> random_triangle(Rng& rng, TriangleShape shape) {
    for (;;) {
        if (shape.angles == AngleShape::RightAtA) {
            const Point<double> b = Point<double>::at(rng.uniform(-1, 1), rng.uniform(-1, 1));
            const Point<double> c = Point<double>::at(rng.uniform(-1, 1), rng.uniform(-1, 1));
            if (distance(b, c) < 0.2) continue;
            // Thales: A on the circle with diameter BC, left of B->C.
            const double phi = rng.uniform(0.05, std::numbers::pi - 0.05);
            const Vec2<double> u = (0.5 / distance(b, c)) * (c - b);
            const double r = distance(b, c);
            const Point<double> m = midpoint(b, c);
            const Point<double> a = m + Vec2<double>{r * (std::cos(phi) * u.x - std::sin(phi) * u.y),
                                                     r * (std::cos(phi) * u.y + std::sin(phi) * u.x)};
            Triangle<double> t(a, b, c);
            if (shape_ok(t, shape)) return t;
            continue;
        }
        const Point<double> a = Point<double>::at(rng.uniform(-1, 1), rng.uniform(-1, 1));
        const Point<double> b = Point<double>::at(rng.uniform(-1, 1), rng.uniform(-1, 1));
        const Point<double> c = Point<double>::at(rng.uniform(-1, 1), rng.uniform(-1, 1));
        if (std::fabs(signed_area2(a, b, c)) < 1e-3) continue;
        Triangle<double> t(a, b, c);
        if (shape_ok(t, shape)) return t;
    }
}

Triangle<Rational> random_rational_triangle(Rng& rng, TriangleShape shape) {
    for (;;) {
        // u = tan(B/2), w = tan(C/2).
        const Rational u = Rational(rng.integer(1, 36), rng.integer(2, 12));
        Rational w;
        if (shape.angles == AngleShape::RightAtA) {
            if (u >= 1) continue;
            w = (1 - u) / (1 + u);
        } else {
            w = Rational(rng.integer(1, 36), rng.integer(2, 12));
        }
        if (u * w >= 1) continue;
        const Rational sb = 2 * u / (1 + u * u), cb = (1 - u * u) / (1 + u * u);
        const Rational sc = 2 * w / (1 + w * w), cc = (1 - w * w) / (1 + w * w);
        const Rational sa = sb * cc + cb * sc;
        if (sa <= 0) continue;
        const Rational side_c = sc / sa;  // with |BC| = 1
        const Point<Rational> a0 = Point<Rational>::at(side_c * cb, side_c * sb);

        // Rational rotation (1 - m^2, 2m) / (1 + m^2), scale and shift.
        const Rational m = small_rational(rng, -12, 12, 6);
        const Rational cr = (1 - m * m) / (1 + m * m), sr = 2 * m / (1 + m * m);
        const Rational k = Rational(rng.integer(2, 12), rng.integer(2, 6));
        const Rational tx = small_rational(rng, -8, 8, 4), ty = small_rational(rng, -8, 8, 4);
        auto map = [&](const Point<Rational>& p) {
            return Point<Rational>::at(k * (cr * p.x - sr * p.y) + tx, k * (sr * p.x + cr * p.y) + ty);
        };
        Triangle<Rational> t(map(a0), map(Point<Rational>::at(0, 0)), map(Point<Rational>::at(1, 0)));
        if (shape_ok(t, shape)) return t;
    }
}

std::array<Point<double>, 4> random_convex_quadrilateral(Rng& rng) {
    for (;;) {
        std::array<Point<double>, 4> q;
        for (auto& p : q) p = Point<double>::at(rng.uniform(-1, 1), rng.uniform(-1, 1));
        bool ok = true;
        int sign = 0;
        for (int i = 0; i < 4 && ok; ++i) {
            const Vec2<double> u = q[(i + 1) % 4] - q[i];
            const Vec2<double> v = q[(i + 2) % 4] - q[(i + 1) % 4];
            const double s = cross(u, v) / std::sqrt(norm2(u) * norm2(v));
            // Turning angle at each corner between 15 and 165 degrees.
            if (std::fabs(s) < std::sin(15 * kDeg) || norm2(u) < 0.04) ok = false;
            const int sg = s > 0 ? 1 : -1;
            if (sign != 0 && sg != sign) ok = false;
            sign = sg;
        }
        if (!ok) continue;
        if (sign < 0) std::swap(q[1], q[3]);
        return q;
    }
}

std::array<Point<Rational>, 4> random_rational_quadrilateral(Rng& rng) {
    for (;;) {
        std::array<Point<Rational>, 4> q;
        for (auto& p : q) p = Point<Rational>::at(small_rational(rng, -20, 20, 9), small_rational(rng, -20, 20, 9));
        std::array<Point<double>, 4> f;
        for (int i = 0; i < 4; ++i) f[i] = Point<double>::at(to_double(q[i].x), to_double(q[i].y));
        bool ok = true;
        int sign = 0;
        for (int i = 0; i < 4 && ok; ++i) {
            const Vec2<double> u = f[(i + 1) % 4] - f[i];
            const Vec2<double> v = f[(i + 2) % 4] - f[(i + 1) % 4];
            const double n = std::sqrt(norm2(u) * norm2(v));
            if (n == 0 || std::fabs(cross(u, v)) / n < std::sin(15 * kDeg)) ok = false;
            const int sg = cross(u, v) > 0 ? 1 : -1;
            if (sign != 0 && sg != sign) ok = false;
            sign = sg;
        }
        if (!ok) continue;
        if (sign < 0) std::swap(q[1], q[3]);
        return q;
    }
}

Point<double> random_interior_point(Rng& rng, const Triangle<double>& t) {
    const double u = rng.uniform(0.05, 1), v = rng.uniform(0.05, 1), w = rng.uniform(0.05, 1);
    return weighted(t.vertices(), {u, v, w});
}

}  // namespace circlekit
