#include <doctest.h>

#include <cmath>
#include <regex>
#include <set>

#include <json.hpp>

#include "circlekit/registry.hpp"
#include "circlekit/sampling.hpp"
#include "oracle.hpp"

using namespace circlekit;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::MalformedDocument;
}

bool runs_exact(const CheckInfo& c) { return c.backend != BackendSupport::Float; }

// x -> scale * rotation * x + shift, applied to every point of the scene.
SceneDocument moved(SceneDocument s, double scale, double angle, double dx, double dy) {
    const double c = std::cos(angle), sn = std::sin(angle);
    for (auto& [name, p] : s.points) {
        const double x = p[0], y = p[1];
        p = {scale * (c * x - sn * y) + dx, scale * (sn * x + c * y) + dy};
    }
    // Absolute headings turn with the scene.
    if (auto it = s.params.find("direction"); it != s.params.end()) it->second += angle;
    return s;
}

// The same on the exact coordinates, with a rational rotation (3/5, 4/5).
SceneDocument moved_exact(SceneDocument s, const Rational& scale, const Rational& dx, const Rational& dy) {
    const Rational c(3, 5), sn(4, 5);
    for (auto& [name, p] : s.points_exact) {
        const Rational x = parse_rational(p[0]), y = parse_rational(p[1]);
        const Rational nx = scale * (c * x - sn * y) + dx, ny = scale * (sn * x + c * y) + dy;
        p = {nx.str(), ny.str()};
        s.points[name] = {to_double(nx), to_double(ny)};
    }
    return s;
}

const std::vector<std::string> kMutationChecks = {"L3.P1", "DF1.T3", "LU.T3", "AU.T3", "HQ.ALL"};

}  // namespace

TEST_SUITE("registry") {

TEST_CASE("catalog ids") {
    const auto& checks = list_checks();
    CHECK(checks.size() == 49);
    const std::regex pattern("^[A-Z0-9]+\\.[A-Za-z0-9]+$");
    std::set<std::string> seen;
    for (const auto& c : checks) {
        CHECK_MESSAGE(std::regex_match(c.id, pattern), c.id);
        CHECK_MESSAGE(seen.insert(c.id).second, "duplicate " << c.id);
        CHECK_FALSE(c.statement.empty());
    }
    for (const auto& id : kMutationChecks) {
        bool found = false;
        for (const auto& c : checks) found = found || (c.id == id && c.has_mutation);
        CHECK_MESSAGE(found, id);
    }
}

TEST_CASE("unknown checks and unsupported backends") {
    CHECK(kind_of([] { run_check("NOPE.X", 1, 10); }) == ErrorKind::UnknownCheck);
    RunOptions exact;
    exact.backend = Backend::Rational;
    CHECK(kind_of([&] { run_check("AK.T1", 1, 10, exact); }) == ErrorKind::BackendUnsupported);
    CHECK(kind_of([&] { run_check("AK.T1", 7, 10, exact); }) == ErrorKind::BackendUnsupported);
    CHECK(parse_backend("f64") == Backend::Float);
    CHECK(parse_backend("rational") == Backend::Rational);
    CHECK_FALSE(parse_backend("quad").has_value());
}

TEST_CASE("DF2.T1 passes on seed 1") {
    const auto r = run_check("DF2.T1", 1, 300);
    CHECK(r.failures == 0);
    CHECK(r.trials == 300);
    CHECK(r.passed());
}

TEST_CASE("every check passes at seed 42 with 300 trials") {
    for (const auto& c : list_checks()) {
        const auto r = run_check(c.id, 42, 300);
        CHECK_MESSAGE(r.failures == 0, c.id << " max residual " << r.max_residual);
        CHECK(r.max_residual <= 1e-7);
    }
}

TEST_CASE("reports are deterministic and schedule independent") {
    for (const auto& c : list_checks()) {
        const auto a = run_check(c.id, 5, 40);
        const auto b = run_check(c.id, 5, 40);
        const auto s = run_check_serial(c.id, 5, 40);
        CHECK_MESSAGE(a == b, c.id);
        CHECK_MESSAGE(a == s, c.id);
        CHECK(report_to_json(a) == report_to_json(s));
    }
    RunOptions exact;
    exact.backend = Backend::Rational;
    CHECK(run_check("DF2.T1", 3, 20, exact) == run_check_serial("DF2.T1", 3, 20, exact));
}

TEST_CASE("report JSON carries every field") {
    const auto r = run_check("L3.P1", 9, 20);
    const auto j = nlohmann::json::parse(report_to_json(r));
    CHECK(j["id"] == "L3.P1");
    CHECK(j["seed"] == 9);
    CHECK(j["trials"] == 20);
    CHECK(j["failures"] == 0);
    CHECK(j["max_residual"].get<double>() == r.max_residual);
    CHECK(j["mean_residual"].get<double>() == r.mean_residual);
    CHECK(j["worst_scene"]["version"] == "1");
    CHECK(parse_json(j["worst_scene"].dump()) == r.worst_scene);
}

TEST_CASE("the worst scene reproduces the max residual") {
    for (const char* id : {"LU.T1", "HQ.ALL", "AK.T3"}) {
        const auto r = run_check(id, 11, 50);
        CHECK(evaluate_scene(id, r.worst_scene) == r.max_residual);
    }
}

TEST_CASE("sample_scene is the scene run_check evaluates") {
    RunOptions opts;
    opts.threshold = -1;  // every trial counts as a failure; only residuals matter
    for (const char* id : {"N.P1", "R.T2"}) {
        const auto r = run_check(id, 4, 1, opts);
        CHECK(sample_scene(id, 4, 0) == r.worst_scene);
    }
}

TEST_CASE("mutations are caught") {
    RunOptions opts;
    opts.mutate = true;
    for (const auto& id : kMutationChecks) {
        const auto r = run_check(id, 42, 300, opts);
        CHECK_MESSAGE(r.failures >= 295, id << " failures " << r.failures);
    }
}

TEST_CASE("exact residuals vanish on rational triangles") {
    RunOptions exact;
    exact.backend = Backend::Rational;
    int exact_checks = 0;
    for (const auto& c : list_checks()) {
        if (!runs_exact(c)) continue;
        ++exact_checks;
        const auto r = run_check(c.id, 42, 100, exact);
        CHECK_MESSAGE(r.max_residual == 0, c.id);
        CHECK(r.failures == 0);
        CHECK_FALSE(r.worst_scene.points_exact.empty());
    }
    CHECK(exact_checks >= 10);
}

TEST_CASE("residuals are unchanged by power-of-two scaling") {
    for (const auto& c : list_checks()) {
        double worst = 0;
        for (int trial = 0; trial < 20; ++trial) {
            const SceneDocument s = sample_scene(c.id, 42, trial);
            const double r = evaluate_scene(c.id, s);
            for (double scale : {0.125, 2.0, 8.0}) worst = std::max(worst, std::fabs(evaluate_scene(c.id, moved(s, scale, 0, 0, 0)) - r));
        }
        CHECK_MESSAGE(worst < 1e-12, c.id << " changed by " << worst);
    }
}

TEST_CASE("residuals stay at round-off under general similarities") {
    // Rotations, translations and non-binary scales perturb round-off, so the
    // residual may move by its own magnitude; it must stay far below the
    // pass threshold.
    Rng rng(77);
    for (const auto& c : list_checks()) {
        double worst = 0;
        for (int trial = 0; trial < 20; ++trial) {
            const SceneDocument s = sample_scene(c.id, 42, trial);
            const double r = evaluate_scene(c.id, s);
            const double scale = std::exp(rng.uniform(std::log(0.1), std::log(10.0)));
            const SceneDocument t = moved(s, scale, rng.uniform(0, 6.283), rng.uniform(-5, 5), rng.uniform(-5, 5));
            const double r2 = evaluate_scene(c.id, t);
            CHECK(r2 <= 1e-9);
            worst = std::max(worst, std::fabs(r2 - r));
        }
        CHECK_MESSAGE(worst < 1e-9, c.id << " changed by " << worst);
    }
}

TEST_CASE("exact residuals are invariant under rational similarities") {
    for (const auto& c : list_checks()) {
        if (!runs_exact(c)) continue;
        for (int trial = 0; trial < 10; ++trial) {
            const SceneDocument s = sample_scene(c.id, 42, trial, Backend::Rational);
            const SceneDocument t = moved_exact(s, Rational(7, 3), Rational(-5, 2), Rational(11));
            CHECK_MESSAGE(evaluate_scene(c.id, t, Backend::Rational) == 0, c.id);
        }
    }
}

}  // TEST_SUITE

// ---------------------------------------------------------------------------

namespace {

using Pd = Point<double>;

double inradius_oracle(oracle::P a, oracle::P b, oracle::P c) {
    const double x = oracle::len(oracle::sub(b, c)), y = oracle::len(oracle::sub(c, a)), z = oracle::len(oracle::sub(a, b));
    const double s = (x + y + z) / 2;
    return std::sqrt(s * (s - x) * (s - y) * (s - z)) / s;  // Heron's area over s
}

// Parameter of D on BC from bisection of the inradius difference, computed
// with Heron's formula instead of the library.
double cevian_oracle(oracle::P a, oracle::P b, oracle::P c) {
    auto f = [&](double s) {
        const oracle::P d = oracle::add(b, oracle::mul(s, oracle::sub(c, b)));
        return inradius_oracle(a, b, d) - inradius_oracle(a, d, c);
    };
    double lo = 0, hi = 1;
    while (hi - lo > 1e-14) {
        const double mid = (lo + hi) / 2;
        (f(mid) < 0 ? lo : hi) = mid;
    }
    return (lo + hi) / 2;
}

oracle::P op(const Pd& p) { return {p.x, p.y}; }

oracle::P incenter_oracle(oracle::P a, oracle::P b, oracle::P c) {
    const double x = oracle::len(oracle::sub(b, c)), y = oracle::len(oracle::sub(c, a)), z = oracle::len(oracle::sub(a, b));
    return oracle::mul(1 / (x + y + z), oracle::add(oracle::add(oracle::mul(x, a), oracle::mul(y, b)), oracle::mul(z, c)));
}

constexpr double kDeg = 3.14159265358979323846 / 180;

}  // namespace

TEST_SUITE("solvers") {

TEST_CASE("isosceles triangles split at the midpoint") {
    const Triangle<double> t(Pd::at(0, 3), Pd::at(-2, 0), Pd::at(2, 0));
    const auto sol = equal_incircle_cevian(t);
    CHECK(sol.d == midpoint(t.B(), t.C()));
    CHECK(sol.t_construction == 0.5);
    CHECK(sol.r_common > 0);
}

TEST_CASE("reference triangle agrees with an independent bisection") {
    const Triangle<double> t(Pd::at(0, 3), Pd::at(0, 0), Pd::at(4, 0));
    const auto sol = equal_incircle_cevian(t);
    const double s = cevian_oracle({0, 3}, {0, 0}, {4, 0});
    CHECK(std::fabs(sol.t_construction - s) <= 1e-9);
    CHECK(std::fabs(sol.t_bisection - s) <= 1e-12);
    CHECK(sol.d.y == doctest::Approx(0).epsilon(1e-15));
    CHECK(sol.d.x == doctest::Approx(4 * s).epsilon(1e-9));
    CHECK(sol.r_common == doctest::Approx(inradius_oracle({0, 3}, {0, 0}, op(sol.d))).epsilon(1e-12));
    CHECK(sol.r_common == doctest::Approx(inradius_oracle({0, 3}, op(sol.d), {4, 0})).epsilon(1e-9));
}

TEST_CASE("the two incenters are parallel to the base at the solution") {
    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const auto t = random_triangle(rng, {AngleShape::Any, true, false});
        const auto sol = equal_incircle_cevian(t);
        const oracle::P i1 = incenter_oracle(op(t.A()), op(t.B()), op(sol.d));
        const oracle::P i2 = incenter_oracle(op(t.A()), op(sol.d), op(t.C()));
        const oracle::P base = op(Pd::at(t.C().x - t.B().x, t.C().y - t.B().y));
        const oracle::P link = oracle::sub(i2, i1);
        CHECK(std::fabs(oracle::crossp(link, base)) / (oracle::len(link) * oracle::len(base)) <= 1e-9);
    }
}

TEST_CASE("construction matches bisection on random triangles") {
    Rng rng(9);
    for (int trial = 0; trial < 300; ++trial) {
        const auto t = random_triangle(rng);
        const auto sol = equal_incircle_cevian(t);
        CHECK(std::fabs(sol.t_construction - sol.t_bisection) <= 1e-9);
        CHECK(std::fabs(incircle_difference(t, sol.t_construction)) <= 1e-9 * std::sqrt(t.a2()));
    }
}

TEST_CASE("the inradius difference is strictly increasing along BC") {
    Rng rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        const auto t = random_triangle(rng);
        double prev = incircle_difference(t, 0.005);
        bool increasing = true;
        for (int i = 1; i < 100; ++i) {
            const double cur = incircle_difference(t, 0.005 + 0.99 * i / 99);
            increasing = increasing && cur > prev;
            prev = cur;
        }
        CHECK(increasing);
    }
}

TEST_CASE("fixed point for 60 and 120 degrees") {
    const Pd a = Pd::at(-1, 0), b = Pd::at(1, 0);
    // Angle ADB = 30 degrees below AB: half-angle 15 degrees.
    const Pd d60 = fixed_point(a, b, 60 * kDeg);
    CHECK(d60.x == doctest::Approx(0).epsilon(1e-15));
    CHECK(d60.y == doctest::Approx(-1 / std::tan(15 * kDeg)).epsilon(1e-12));
    CHECK(d60.y == doctest::Approx(-(2 + std::sqrt(3.0))).epsilon(1e-12));

    const Pd d120 = fixed_point(a, b, 120 * kDeg);
    CHECK(d120.y > 0);
    const double angle = std::acos(dot(a - d120, b - d120) / (distance(a, d120) * distance(b, d120)));
    CHECK(angle == doctest::Approx(30 * kDeg).epsilon(1e-12));
}

TEST_CASE("fixed point errors") {
    const Pd a = Pd::at(-1, 0), b = Pd::at(1, 0);
    CHECK(kind_of([&] { fixed_point(a, b, 90 * kDeg); }) == ErrorKind::RightAngleCase);
    CHECK(kind_of([&] { fixed_point(a, b, 0); }) == ErrorKind::OutsideAngle);
    CHECK(kind_of([&] { fixed_point(a, b, 200 * kDeg); }) == ErrorKind::OutsideAngle);
}

TEST_CASE("the mediator of PQ passes through the fixed point") {
    Rng rng(21);
    for (double gamma : {30.0, 60.0, 120.0, 150.0}) {
        for (int i = 0; i < 100; ++i) {
            const Pd a = Pd::at(rng.uniform(-2, 2), rng.uniform(-2, 2));
            const Pd b = a + Vec2<double>{rng.uniform(0.5, 3), rng.uniform(-1, 1)};
            const auto trial = fixed_point_trial(a, b, gamma * kDeg, rng.uniform(0.02, 0.98));
            CHECK(trial.mediator <= 1e-8);
            CHECK(trial.pb_qa <= 1e-9);
        }
    }
}

TEST_CASE("at 90 degrees ABPQ is a parallelogram") {
    Rng rng(22);
    for (int i = 0; i < 100; ++i) {
        const auto trial = fixed_point_trial(Pd::at(-1, 0), Pd::at(1, 0), 90 * kDeg, rng.uniform(0.02, 0.98));
        CHECK(trial.parallelogram <= 1e-9);
        CHECK(trial.pb_qa <= 1e-9);
    }
}

TEST_CASE("ABPQ is a trapezoid only at the arc midpoint") {
    const auto mid = fixed_point_trial(Pd::at(-1, 0), Pd::at(1, 0), 60 * kDeg, 0.5);
    CHECK(mid.trapezoid <= 1e-12);
    const auto off = fixed_point_trial(Pd::at(-1, 0), Pd::at(1, 0), 60 * kDeg, 0.2);
    CHECK(off.trapezoid > 1e-3);
}

}  // TEST_SUITE
