#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "circlekit/ruler.hpp"

namespace circlekit::ruler {

namespace {

using P = Point<double>;
using L = Line<double>;
using V = Vec2<double>;

constexpr int kMaxAttempts = 100;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 2 * std::numbers::pi;

// |sin| of the angle between two directions.
double parallel_res(const V& u, const V& v) { return std::fabs(cross(u, v)) / std::sqrt(norm2(u) * norm2(v)); }

// Directed angle from direction u to direction v, as a line angle.
double line_angle(const V& u, const V& v) { return std::atan2(cross(u, v), dot(u, v)); }

// Two line angles agree mod pi exactly when this vanishes.
double angle_gap(double x, double y) { return std::fabs(std::sin(x - y)); }

struct Frame {
    P center;
    double radius;
};

Frame frame(const Scene& s) {
    if (s.circles.size() != 1) fail(ErrorKind::MissingGiven, "the scene needs exactly one circle");
    const auto& c = s.circles.begin()->second;
    return {c.center, std::sqrt(c.radius_squared)};
}

const P& pt(const Scene& s, const std::string& name) {
    const auto it = s.points.find(name);
    if (it == s.points.end()) fail(ErrorKind::UnknownIdentifier, "scene has no point '" + name + "'");
    return it->second;
}

const L& ln(const Scene& s, const std::string& name) {
    const auto it = s.lines.find(name);
    if (it == s.lines.end()) fail(ErrorKind::UnknownIdentifier, "scene has no line '" + name + "'");
    return it->second;
}

double off_line(const Frame& f, const P& p, const L& l) { return std::fabs(l.eval(p)) / f.radius; }

double off_circle(const Frame& f, const P& p) { return std::fabs(distance(p, f.center) - f.radius) / f.radius; }

double worst(std::initializer_list<double> xs) {
    double w = 0;
    for (double x : xs) {
        if (std::isnan(x)) return kInf;
        w = std::max(w, x);
    }
    return w;
}

// Residuals.

double parallel_to_diameter(const OutputDecl& out, const Scene& s) {
    const Frame f = frame(s);
    const L& l = ln(s, out.name);
    return worst({parallel_res(l.direction(), pt(s, "B") - pt(s, "A")), off_line(f, pt(s, "M"), l)});
}

double parallel_to_line(const OutputDecl& out, const Scene& s) {
    const Frame f = frame(s);
    const L& l = ln(s, out.name);
    return worst({parallel_res(l.direction(), pt(s, "F") - pt(s, "E")), off_line(f, pt(s, "M"), l)});
}

// Lines M-X1 make equal directed angles with the sides BC, CA, AB.
double equal_angles(const Scene& s, const P& m, const P& a1, const P& b1, const P& c1) {
    const P &a = pt(s, "A"), &b = pt(s, "B"), &c = pt(s, "C");
    const double ta = line_angle(c - b, a1 - m), tb = line_angle(a - c, b1 - m), tc = line_angle(b - a, c1 - m);
    return worst({angle_gap(ta, tb), angle_gap(ta, tc)});
}

double equal_angle_transversal(const OutputDecl& out, const Scene& s) {
    const Frame f = frame(s);
    const L& l = ln(s, out.name);
    const P &m = pt(s, "M"), &a1 = pt(s, "A1"), &b1 = pt(s, "B1"), &c1 = pt(s, "C1");
    return worst({equal_angles(s, m, a1, b1, c1), off_line(f, a1, l), off_line(f, b1, l), off_line(f, c1, l)});
}

double mkensie_point(const OutputDecl& out, const Scene& s) {
    const Frame f = frame(s);
    const P& m = pt(s, out.name);
    const P &a1 = pt(s, "A1"), &b1 = pt(s, "B1"), &c1 = pt(s, "C1");
    const Circle<double> circle{f.center, f.radius * f.radius};
    // Chords through B and C parallel to the transversal end on M-B1, M-C1.
    const V dir = b1 - a1;
    double concurrent = 0;
    for (const auto& [v, x1] : {std::pair{"B", b1}, std::pair{"C", c1}}) {
        const P& vertex = pt(s, v);
        const P end = second_intersection(line_through(vertex, dir), circle, vertex);
        concurrent = std::max(concurrent, std::fabs(signed_area2(m, end, x1)) / (f.radius * f.radius));
    }
    return worst({off_circle(f, m), equal_angles(s, m, a1, b1, c1), concurrent});
}

double isogonal_cevian(const OutputDecl& out, const Scene& s) {
    const Frame f = frame(s);
    const P &a = pt(s, "A"), &b = pt(s, "B"), &c = pt(s, "C"), &ap = pt(s, "Ap"), &a1 = pt(s, "A1");
    const L& l = ln(s, out.name);
    return worst({angle_gap(line_angle(b - a, ap - a), line_angle(a1 - a, c - a)), off_line(f, a, l),
                  off_line(f, a1, l), off_circle(f, a1)});
}

// Givens.

Circle<double> random_circle(Rng& rng) {
    const P c = P::at(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const double r = rng.uniform(0.5, 2);
    return {c, r * r};
}

P on(const Circle<double>& c, double phi) {
    return c.center + std::sqrt(c.radius_squared) * V{std::cos(phi), std::sin(phi)};
}

// Angles on the circle, pairwise at least `gap` apart.
std::vector<double> spread_angles(Rng& rng, int n, double gap) {
    for (;;) {
        std::vector<double> phi(static_cast<std::size_t>(n));
        for (double& x : phi) x = rng.uniform(0, kTwoPi);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j) {
                const double d = std::fabs(phi[i] - phi[j]);
                ok = std::min(d, kTwoPi - d) >= gap;
            }
        if (ok) return phi;
    }
}

// Point a fraction u along the arc from angle `from` to angle `to` that
// avoids angle `avoid`.
double arc_angle(double from, double to, double avoid, double u) {
    auto ccw = [](double x, double y) {
        double d = std::fmod(y - x, kTwoPi);
        return d < 0 ? d + kTwoPi : d;
    };
    const double sweep = ccw(from, to);
    return ccw(from, avoid) < sweep ? from - u * (kTwoPi - sweep) : from + u * sweep;
}

P random_in_disc(Rng& rng, const Circle<double>& c, double reach) {
    const double r = std::sqrt(c.radius_squared);
    return c.center + (reach * r) * V{rng.uniform(-1, 1), rng.uniform(-1, 1)};
}

Scene with_circle(const Circle<double>& c) {
    Scene s;
    s.circles["O"] = c;
    return s;
}

void add_triangle(Scene& s, const Circle<double>& c, const std::vector<double>& phi) {
    s.points["A"] = on(c, phi[0]);
    s.points["B"] = on(c, phi[1]);
    s.points["C"] = on(c, phi[2]);
}

Scene givens_parallel_to_diameter(Rng& rng) {
    const Circle<double> c = random_circle(rng);
    const double r = std::sqrt(c.radius_squared), phi = rng.uniform(0, kTwoPi);
    Scene s = with_circle(c);
    s.points["A"] = on(c, phi);
    s.points["B"] = on(c, phi + std::numbers::pi);
    const L ab = join(s.points["A"], s.points["B"]);
    do s.points["M"] = random_in_disc(rng, c, 1.5);
    while (std::fabs(ab.eval(s.points["M"])) < 0.1 * r);
    return s;
}

Scene givens_parallel_to_line(Rng& rng) {
    const Circle<double> c = random_circle(rng);
    const double r = std::sqrt(c.radius_squared);
    Scene s = with_circle(c);
    do {
        s.points["E"] = random_in_disc(rng, c, 1.5);
        s.points["F"] = random_in_disc(rng, c, 1.5);
    } while (distance(s.points["E"], s.points["F"]) < 0.3 * r);
    const L ef = join(s.points["E"], s.points["F"]);
    do s.points["M"] = random_in_disc(rng, c, 1.5);
    while (std::fabs(ef.eval(s.points["M"])) < 0.1 * r);
    return s;
}

Scene givens_problem1(Rng& rng) {
    const Circle<double> c = random_circle(rng);
    Scene s = with_circle(c);
    const auto phi = spread_angles(rng, 4, 0.2);
    add_triangle(s, c, phi);
    s.points["M"] = on(c, phi[3]);
    return s;
}

Scene givens_problem2(Rng& rng) {
    const Circle<double> c = random_circle(rng);
    Scene s = with_circle(c);
    add_triangle(s, c, spread_angles(rng, 3, 0.3));
    const P &a = s.points["A"], &b = s.points["B"], &cc = s.points["C"];
    s.points["A1"] = lerp(b, cc, rng.uniform(0.15, 0.85));
    // B1 inside CA or beyond A.
    s.points["B1"] = lerp(cc, a, rng.coin() ? rng.uniform(0.15, 0.85) : rng.uniform(1.2, 2.0));
    return s;
}

Scene givens_problem3(Rng& rng) {
    const Circle<double> c = random_circle(rng);
    Scene s = with_circle(c);
    const auto phi = spread_angles(rng, 3, 0.3);
    add_triangle(s, c, phi);
    const double u = rng.uniform(0.1, 0.9);
    if (rng.coin()) {
        s.tags.insert("small_arc");
        s.points["Ap"] = on(c, arc_angle(phi[1], phi[2], phi[0], u));
    } else {
        s.points["Ap"] = on(c, arc_angle(phi[0], phi[1], phi[2], u));
    }
    return s;
}

struct PredicateDef {
    std::string id;
    std::vector<std::string> inputs;
    std::function<Scene(Rng&)> sample;
    std::function<double(const OutputDecl&, const Scene&)> residual;
};

const std::vector<PredicateDef>& predicates() {
    static const std::vector<PredicateDef> defs = {
        {"parallel_to_diameter", {"O", "A", "B", "M"}, givens_parallel_to_diameter, parallel_to_diameter},
        {"parallel_to_line", {"O", "E", "F", "M"}, givens_parallel_to_line, parallel_to_line},
        {"equal_angle_transversal", {"O", "A", "B", "C", "M", "A1", "B1", "C1"}, givens_problem1,
         equal_angle_transversal},
        {"mkensie_point", {"O", "A", "B", "C", "A1", "B1", "C1"}, givens_problem2, mkensie_point},
        {"isogonal_cevian", {"O", "A", "B", "C", "Ap", "A1", "small_arc"}, givens_problem3, isogonal_cevian},
    };
    return defs;
}

const PredicateDef& find_predicate(const std::string& id) {
    for (const auto& d : predicates())
        if (d.id == id) return d;
    fail(ErrorKind::UnknownCheck, "unknown predicate '" + id + "'");
}

struct TrialResult {
    double residual = kInf;
    Scene scene;
};

TrialResult run_trial(const Program& p, const OutputDecl& out, const PredicateDef& pred, std::uint64_t seed, int trial) {
    Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(trial));
    TrialResult res;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        try {
            res.scene = execute(p, pred.sample(rng), rng);
        } catch (const Error&) {
            continue;
        }
        try {
            res.residual = pred.residual(out, res.scene);
        } catch (const Error&) {
            res.residual = kInf;
        }
        return res;
    }
    return res;
}

CheckReport fold(const std::string& id, std::uint64_t seed, std::vector<TrialResult>& results, double threshold) {
    CheckReport rep;
    rep.id = id;
    rep.seed = seed;
    rep.trials = static_cast<int>(results.size());
    double sum = 0;
    int worst_index = -1;
    for (int i = 0; i < rep.trials; ++i) {
        const double r = results[i].residual;
        if (!(r <= threshold)) ++rep.failures;
        sum += r;
        if (worst_index < 0 || r > rep.max_residual || (std::isnan(r) && !std::isnan(rep.max_residual))) {
            worst_index = i;
            rep.max_residual = r;
        }
    }
    rep.mean_residual = rep.trials > 0 ? sum / rep.trials : 0;
    if (worst_index >= 0) rep.worst_scene = results[worst_index].scene.to_document();
    return rep;
}

const OutputDecl& target(const Program& p) {
    if (p.outputs.empty()) fail(ErrorKind::MissingGiven, "program has no output");
    return p.outputs.back();
}

}  // namespace

const std::vector<std::string>& predicate_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& d : predicates()) out.push_back(d.id);
        return out;
    }();
    return ids;
}

std::vector<std::string> predicate_inputs(const std::string& predicate) { return find_predicate(predicate).inputs; }

Scene sample_givens(const std::string& predicate, Rng& rng) { return find_predicate(predicate).sample(rng); }

double predicate_residual(const OutputDecl& output, const Scene& scene) {
    return find_predicate(output.predicate).residual(output, scene);
}

Scene execute_sampled(const Program& p, std::uint64_t seed, int trial) {
    const PredicateDef& pred = find_predicate(target(p).predicate);
    Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(trial));
    for (int attempt = 1;; ++attempt) {
        try {
            return execute(p, pred.sample(rng), rng);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::DegenerateStep || attempt == kMaxAttempts) throw;
        }
    }
}

CheckReport verify(const Program& p, int trials, std::uint64_t seed, const VerifyOptions& opts) {
    const OutputDecl& out = target(p);
    const PredicateDef& pred = find_predicate(out.predicate);
    std::vector<TrialResult> results(static_cast<std::size_t>(std::max(trials, 0)));
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < trials; ++i) results[i] = run_trial(p, out, pred, seed, i);
    return fold(out.predicate, seed, results, opts.threshold);
}

CheckReport verify_serial(const Program& p, int trials, std::uint64_t seed, const VerifyOptions& opts) {
    const OutputDecl& out = target(p);
    const PredicateDef& pred = find_predicate(out.predicate);
    std::vector<TrialResult> results(static_cast<std::size_t>(std::max(trials, 0)));
    for (int i = 0; i < trials; ++i) results[i] = run_trial(p, out, pred, seed, i);
    return fold(out.predicate, seed, results, opts.threshold);
}

}  // namespace circlekit::ruler
