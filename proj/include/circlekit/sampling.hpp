#pragma once

// Deterministic random scenes. Every trial draws from its own generator
// seeded by (seed, trial index), so results do not depend on scheduling.

#include <array>
#include <cstdint>
#include <random>

#include "circlekit/centers.hpp"

namespace circlekit {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    static Rng for_trial(std::uint64_t seed, std::uint64_t trial);

    std::uint64_t next() { return eng_(); }
    // Uniform in [0, 1) from the top 53 bits; identical on every platform,
    // unlike std::uniform_real_distribution.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    // Inclusive range.
    long integer(long lo, long hi) { return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
    bool coin() { return (eng_() >> 63) != 0; }

private:
    std::mt19937_64 eng_;
};

enum class AngleShape { Any, Acute, Obtuse, RightAtA };

struct TriangleShape {
    AngleShape angles = AngleShape::Any;
    bool scalene = false;       // pairwise side lengths differ by >= 5 % of the longest
    bool avoid_right = false;   // no angle within 5 degrees of 90
};

// Vertices in [-1, 1]^2, minimum angle 10 degrees, side ratio at most 6.
Triangle<double> random_triangle(Rng& rng, TriangleShape shape = {});

// Triangle with rational vertices and rational side lengths (rational
// half-angle tangents, then a rational similarity).
Triangle<Rational> random_rational_triangle(Rng& rng, TriangleShape shape = {});

// Strictly convex, counterclockwise, no side-angle below 15 degrees.
std::array<Point<double>, 4> random_convex_quadrilateral(Rng& rng);
std::array<Point<Rational>, 4> random_rational_quadrilateral(Rng& rng);

// Barycentric weights drawn from [0.05, 1].
Point<double> random_interior_point(Rng& rng, const Triangle<double>& t);

// Angles at A, B, C in radians.
std::array<double, 3> triangle_angles(const Triangle<double>& t);

}  // namespace circlekit
