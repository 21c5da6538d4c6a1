#include <algorithm>
#include <cmath>
#include <numbers>

#include "circlekit/ruler.hpp"

namespace circlekit::ruler {

namespace {

using P = Point<double>;
using L = Line<double>;

// A meet farther than this many scene scales is treated as parallel lines.
constexpr double kFarMeet = 1e4;
// Lines meeting at a smaller sine are treated as parallel.
constexpr double kMinSine = 1e-7;

[[noreturn]] void degenerate(const Step& s, int index, const std::string& what) {
    fail(ErrorKind::DegenerateStep, "step " + std::to_string(index) + " (line " + std::to_string(s.line) + ", " +
                                        s.target + " = " + std::string(op_name(s.op)) + "): " + what);
}

double angle_of(const P& p, const P& center) { return std::atan2(p.y - center.y, p.x - center.x); }

// Angle in [0, 2 pi) swept counterclockwise from `from` to `to`.
double ccw_sweep(double from, double to) {
    double d = std::fmod(to - from, 2 * std::numbers::pi);
    if (d < 0) d += 2 * std::numbers::pi;
    return d;
}

class Interpreter {
public:
    Interpreter(const Program& p, const Scene& givens, Rng& rng) : prog_(p), givens_(givens), rng_(rng) {}

    Scene run() {
        bind_givens();
        for (std::size_t i = 0; i < prog_.steps.size(); ++i) {
            const Step& s = prog_.steps[i];
            if (s.condition && (out_.tags.count(s.condition->tag) > 0) == s.condition->negated) continue;
            apply(s, static_cast<int>(i) + 1);
        }
        return std::move(out_);
    }

private:
    void bind_givens() {
        std::vector<P> pts;
        for (const auto& g : prog_.givens) {
            switch (g.kind) {
                case GivenKind::Tag:
                    if (givens_.tags.count(g.name)) out_.tags.insert(g.name);
                    break;
                case GivenKind::Point: {
                    const auto it = givens_.points.find(g.name);
                    if (it == givens_.points.end()) fail(ErrorKind::MissingGiven, "point '" + g.name + "'");
                    out_.points[g.name] = it->second;
                    pts.push_back(it->second);
                    break;
                }
                case GivenKind::Line: {
                    const auto it = givens_.lines.find(g.name);
                    if (it == givens_.lines.end()) fail(ErrorKind::MissingGiven, "line '" + g.name + "'");
                    out_.lines[g.name] = it->second;
                    break;
                }
                case GivenKind::CircleWithCenter: {
                    const auto it = givens_.circles.find(g.name);
                    if (it == givens_.circles.end()) fail(ErrorKind::MissingGiven, "circle with center '" + g.name + "'");
                    circle_ = it->second;
                    out_.circles[g.name] = it->second;
                    out_.points[g.name] = it->second.center;
                    pts.push_back(it->second.center);
                    break;
                }
            }
            out_.provenance[g.name] = "given";
        }
        if (circle_) {
            scale_ = std::sqrt(circle_->radius_squared);
        } else if (!pts.empty()) {
            double lo_x = pts[0].x, hi_x = pts[0].x, lo_y = pts[0].y, hi_y = pts[0].y;
            for (const P& q : pts) {
                lo_x = std::min(lo_x, q.x);
                hi_x = std::max(hi_x, q.x);
                lo_y = std::min(lo_y, q.y);
                hi_y = std::max(hi_y, q.y);
            }
            scale_ = std::max(hi_x - lo_x, hi_y - lo_y);
        }
        if (!(scale_ > 0)) scale_ = 1;
        tol_ = ToleranceContext{}.with_scale(scale_);
    }

    const P& point(const std::string& name) const { return out_.points.at(name); }
    const L& line(const std::string& name) const { return out_.lines.at(name); }

    bool on_line(const P& p, const L& l) const { return std::fabs(l.eval(p)) <= 1e-9 * scale_; }
    bool on_circle(const P& p) const {
        return std::fabs(distance(p, circle_->center) - scale_) <= 1e-9 * scale_;
    }

    void apply(const Step& s, int index) {
        std::string origin = "step " + std::to_string(index);
        switch (s.op) {
            case Op::Join: {
                const P &p = point(s.args[0]), &q = point(s.args[1]);
                if (distance(p, q) <= 1e-9 * scale_) degenerate(s, index, "the points coincide");
                out_.lines[s.target] = join(p, q, tol_);
                break;
            }
            case Op::Meet: {
                const L &l = line(s.args[0]), &m = line(s.args[1]);
                if (std::fabs(cross(l.normal(), m.normal())) < kMinSine) degenerate(s, index, "the lines are parallel");
                const P x = meet_lines(l, m, tol_);
                if (x.at_infinity || std::hypot(x.x, x.y) > kFarMeet * scale_)
                    degenerate(s, index, "the lines meet too far away");
                out_.points[s.target] = x;
                break;
            }
            case Op::OnLine:
                out_.points[s.target] = free_on_line(s, index);
                origin = "free (" + origin + ")";
                break;
            case Op::OnCircle:
                out_.points[s.target] = free_on_circle(s, index);
                origin = "free (" + origin + ")";
                break;
            case Op::SecondMeet: {
                const L& l = line(s.args[0]);
                const P& x = point(s.args[1]);
                if (!on_circle(x)) degenerate(s, index, s.args[1] + " is not on the circle");
                if (!on_line(x, l)) degenerate(s, index, s.args[1] + " is not on " + s.args[0]);
                // Tangent lines give back the same point.
                out_.points[s.target] = second_intersection(l, *circle_, x);
                break;
            }
        }
        out_.provenance[s.target] = origin;
    }

    std::vector<std::string> hint_parts(const std::string& hint) const {
        std::vector<std::string> parts;
        std::size_t start = 0;
        for (;;) {
            const std::size_t colon = hint.find(':', start);
            parts.push_back(hint.substr(start, colon - start));
            if (colon == std::string::npos) break;
            start = colon + 1;
        }
        return parts;
    }

    P free_on_line(const Step& s, int index) {
        const L& l = line(s.args[0]);
        const auto parts = hint_parts(s.hint);
        if (parts[0] == "any") {
            // Around the foot of the circle center or the origin.
            const P anchor = foot(circle_ ? circle_->center : P::at(0, 0), l);
            const Vec2<double> d = l.direction();
            const double t = rng_.uniform(0.1, 1.0) * (rng_.coin() ? 1 : -1);
            return anchor + (t * scale_) * d;
        }
        const P &p = point(parts[1]), &q = point(parts[2]);
        if (!on_line(p, l) || !on_line(q, l)) degenerate(s, index, "hint points are not on " + s.args[0]);
        if (distance(p, q) <= 1e-9 * scale_) degenerate(s, index, "hint points coincide");
        if (parts[0] == "beyond") return p + rng_.uniform(0.25, 1.5) * (p - q);
        return lerp(p, q, rng_.uniform(0.15, 0.85));
    }

    P free_on_circle(const Step& s, int index) {
        const auto parts = hint_parts(s.hint);
        const P& c = circle_->center;
        const auto at = [&](double phi) { return c + scale_ * Vec2<double>{std::cos(phi), std::sin(phi)}; };
        if (parts[0] == "any") return at(rng_.uniform(0, 2 * std::numbers::pi));
        const P &p = point(parts[1]), &q = point(parts[2]);
        if (!on_circle(p) || !on_circle(q)) degenerate(s, index, "arc points are not on the circle");
        if (distance(p, q) <= 1e-9 * scale_) degenerate(s, index, "arc end points coincide");
        const double from = angle_of(p, c), sweep = ccw_sweep(from, angle_of(q, c));
        bool r_inside = false;
        if (parts.size() == 4) {
            const P& r = point(parts[3]);
            if (!on_circle(r)) degenerate(s, index, "arc points are not on the circle");
            // Go the other way round when R lies on the counterclockwise arc.
            r_inside = ccw_sweep(from, angle_of(r, c)) < sweep;
        }
        const double u = rng_.uniform(0.1, 0.9);
        return r_inside ? at(from - u * (2 * std::numbers::pi - sweep)) : at(from + u * sweep);
    }

    const Program& prog_;
    const Scene& givens_;
    Rng& rng_;
    Scene out_;
    std::optional<Circle<double>> circle_;
    double scale_ = 1;
    ToleranceContext tol_;
};

}  // namespace

Scene execute(const Program& p, const Scene& givens, Rng& rng) { return Interpreter(p, givens, rng).run(); }

Scene execute(const Program& p, const Scene& givens, std::uint64_t seed) {
    Rng rng = Rng::for_trial(seed, 0);
    return execute(p, givens, rng);
}

SceneDocument Scene::to_document() const {
    SceneDocument doc;
    for (const auto& [name, p] : points) doc.put(name, p);
    for (const auto& [name, l] : lines) doc.put(name, l);
    for (const auto& [name, c] : circles) doc.put(name, c);
    for (const auto& tag : tags) doc.params[tag] = 1;
    return doc;
}

Scene Scene::from_document(const SceneDocument& doc) {
    Scene s;
    for (const auto& [name, xy] : doc.points) {
        s.points[name] = P::at(xy[0], xy[1]);
        s.provenance[name] = "given";
    }
    for (const auto& [name, abc] : doc.lines) {
        s.lines[name] = L::from(abc[0], abc[1], abc[2]);
        s.provenance[name] = "given";
    }
    for (const auto& [name, c] : doc.circles) {
        s.circles[name] = Circle<double>::make(P::at(c.center[0], c.center[1]), c.r2);
        s.provenance[name] = "given";
    }
    for (const auto& [name, v] : doc.params)
        if (v != 0) s.tags.insert(name);
    return s;
}

}  // namespace circlekit::ruler
