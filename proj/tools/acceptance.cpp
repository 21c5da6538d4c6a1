// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "circlekit/circles.hpp"
#include "circlekit/registry.hpp"
#include "circlekit/ruler.hpp"
#include "circlekit/sampling.hpp"

using namespace circlekit;

namespace {

using Pd = Point<double>;
using Td = Triangle<double>;
using Tq = Triangle<Rational>;

Td reference() { return Td(Pd::at(0, 3), Pd::at(0, 0), Pd::at(4, 0)); }
Tq reference_exact() {
    return Tq(Point<Rational>::at(0, 3), Point<Rational>::at(0, 0), Point<Rational>::at(4, 0));
}

bool near(double x, double want, double tol = 1e-12) { return std::fabs(x - want) <= tol; }

// Collects the first failed condition of a criterion.
struct Verdict {
    std::ostringstream why;
    bool ok = true;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            why << what;
        }
    }
};

void lemoine(Verdict& v) {
    const auto first = lemoine_first(reference());
    const auto second = lemoine_second(reference());
    const auto& m2 = second.metadata;
    v.require(near(m2.at("R_L2"), 1.2), "R_L2");
    v.require(near(m2.at("tan_omega"), 0.48), "tan omega");
    v.require(near(m2.at("R") * m2.at("tan_omega"), m2.at("R_L2")), "R tan omega");
    const double want = 0.5 * std::sqrt(7.69);
    v.require(near(first.metadata.at("R_L1"), want), "R_L1");
    v.require(near(first.metadata.at("R_L1_closed_form"), want), "R_L1 closed form");
    v.require(near(first.metadata.at("R_L1_power_route"), want), "R_L1 through the power of B");
}

void droz_farny(Verdict& v) {
    v.require(near(std::sqrt(droz_farny_first(reference()).circle.radius_squared), 2.5), "first radius");
    v.require(near(std::sqrt(droz_farny_second(reference()).circle.radius_squared), 2.5), "second radius");
}

void excircle_radical(Verdict& v) {
    const auto c = radical_circle_excircles(reference()).circle;
    v.require(near(c.center.x, 1.5) && near(c.center.y, 1), "center");
    v.require(near(std::sqrt(c.radius_squared), 0.5 * std::sqrt(37.0)), "radius");
    const auto& m = radical_circle_excircles(reference_exact()).metadata;
    v.require(m.at("power_A") == m.at("power_B") && m.at("power_B") == m.at("power_C"), "exact powers differ");
}

void neuberg_lucas(Verdict& v) {
    const auto n = neuberg_circle(reference(), Vertex::A);
    v.require(near(n.circle.center.x, 2) && near(n.circle.center.y, 25.0 / 6), "Neuberg center");
    v.require(near(std::sqrt(n.circle.radius_squared), std::sqrt(193.0) / 6), "Neuberg radius");
    v.require(near(n.metadata.at("ON"), 8.0 / 3), "ON");
    const auto l = lucas_circle(reference(), Vertex::A);
    v.require(near(std::sqrt(l.circle.radius_squared), 15.0 / 14), "Lucas radius");
    v.require(near(l.metadata.at("radius_altitude_form"), 15.0 / 14), "Lucas altitude form");
    v.require(near(l.metadata.at("radius_side_form"), 15.0 / 14), "Lucas side form");
}

void check_all(Verdict& v) {
    const auto start = std::chrono::steady_clock::now();
    RunOptions opts;
    opts.threshold = 1e-7;
    for (const auto& c : list_checks()) {
        const auto r = run_check(c.id, 42, 300, opts);
        v.require(r.failures == 0, c.id + " failed " + std::to_string(r.failures) + " trials");
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    v.require(seconds <= 120, "took " + std::to_string(seconds) + " s");
    if (v.ok) v.why << list_checks().size() << " checks in " << seconds << " s";
}

void mutations(Verdict& v) {
    RunOptions opts;
    opts.mutate = true;
    for (const char* id : {"L3.P1", "DF1.T3", "LU.T3", "AU.T3", "HQ.ALL"}) {
        const auto r = run_check(id, 42, 300, opts);
        v.require(r.failures >= 295, std::string(id) + " caught only " + std::to_string(r.failures));
    }
}

void rational_subset(Verdict& v) {
    RunOptions opts;
    opts.backend = Backend::Rational;
    int count = 0;
    for (const auto& c : list_checks()) {
        if (c.backend == BackendSupport::Float) continue;
        ++count;
        const auto r = run_check(c.id, 42, 100, opts);
        v.require(r.max_residual == 0 && r.failures == 0, c.id + " is not exact");
    }
    // Menelaus: the external rank-k feet lie on one line.
    Rng rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        const Tq t = random_rational_triangle(rng);
        for (int k = 1; k <= 3; ++k) {
            std::array<Point<Rational>, 3> ext;
            bool finite = true;
            for (int i = 0; i < 3; ++i) {
                ext[i] = harmonic_conjugate(cevian_foot_rank_k(t, vertex_at(i), Rational(k)), t.vertex(i + 1),
                                            t.vertex(i + 2));
                finite = finite && !ext[i].at_infinity;
            }
            if (finite) v.require(signed_area2(ext[0], ext[1], ext[2]) == 0, "external feet not collinear");
        }
    }
    if (v.ok) v.why << count << " checks exact, external feet collinear";
}

void ruler_suite(Verdict& v) {
    using namespace circlekit::ruler;
    for (BuiltinId id : all_builtins()) {
        const auto r = verify(builtin(id), 300, 42);
        v.require(r.failures == 0, std::string(builtin_name(id)) + " failed verification");
        v.require(audit(builtin(id)).straightedge_only, std::string(builtin_name(id)) + " failed the audit");
    }
    // The constructed parallel is the same line whatever the free point.
    const Program p = builtin(BuiltinId::ParallelToDiameter);
    Rng rng(42);
    const Scene givens = sample_givens(p.target_predicate(), rng);
    const Line<double> base = execute(p, givens, 0).lines.at("parallel");
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const Line<double> l = execute(p, givens, seed).lines.at("parallel");
        v.require(std::fabs(cross(l.normal(), base.normal())) <= 1e-10 &&
                      distance(foot(Pd::at(0, 0), l), foot(Pd::at(0, 0), base)) <= 1e-10,
                  "free choice moved the output at seed " + std::to_string(seed));
    }
}

void cevian(Verdict& v) {
    Rng rng(42);
    for (int i = 0; i < 300; ++i) {
        const auto s = equal_incircle_cevian(random_triangle(rng));
        v.require(std::fabs(s.t_construction - s.t_bisection) <= 1e-9, "construction and bisection disagree");
    }
    const Td iso(Pd::at(0.3, 2), Pd::at(-1, 0.5), Pd::at(1.6, 0.5));
    v.require(equal_incircle_cevian(iso).d == midpoint(iso.B(), iso.C()), "isosceles foot is not the midpoint");
}

void fixed_point_criterion(Verdict& v) {
    Rng rng(42);
    const Pd a = Pd::at(-1, 0), b = Pd::at(1, 0);
    for (double deg : {30.0, 60.0, 120.0, 150.0})
        for (int i = 0; i < 100; ++i) {
            const auto r = fixed_point_trial(a, b, deg * std::numbers::pi / 180, rng.uniform(0.02, 0.98));
            v.require(r.mediator <= 1e-8, "mediator misses D at " + std::to_string(deg));
        }
    bool raised = false;
    try {
        fixed_point(a, b, std::numbers::pi / 2);
    } catch (const Error& e) {
        raised = e.kind() == ErrorKind::RightAngleCase;
    }
    v.require(raised, "90 degrees did not raise RightAngleCase");
    for (int i = 0; i < 100; ++i)
        v.require(fixed_point_trial(a, b, std::numbers::pi / 2, rng.uniform(0.02, 0.98)).parallelogram <= 1e-9,
                  "ABPQ is not a parallelogram");
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<void(Verdict&)>> criteria[] = {
        {"reference triangle: Lemoine radii", lemoine},
        {"reference triangle: Droz-Farny radii", droz_farny},
        {"reference triangle: circle orthogonal to the excircles", excircle_radical},
        {"reference triangle: Neuberg and Lucas", neuberg_lucas},
        {"check all --seed 42 --trials 300", check_all},
        {"mutation controls", mutations},
        {"rational subset is exact", rational_subset},
        {"straightedge programs", ruler_suite},
        {"equal incircle cevian", cevian},
        {"fixed point of the mediator", fixed_point_criterion},
    };
    int failed = 0, index = 0;
    for (const auto& [name, run] : criteria) {
        Verdict v;
        try {
            run(v);
        } catch (const std::exception& e) {
            v.require(false, std::string("threw ") + e.what());
        }
        failed += !v.ok;
        const std::string detail = v.why.str();
        std::printf("%s %2d %s%s%s\n", v.ok ? "PASS" : "FAIL", ++index, name, detail.empty() ? "" : ": ",
                    detail.c_str());
    }
    return failed == 0 ? 0 : 1;
}
