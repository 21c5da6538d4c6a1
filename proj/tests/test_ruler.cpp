#include <doctest.h>

#include <cmath>

#include "circlekit/ruler.hpp"

using namespace circlekit;
using namespace circlekit::ruler;

namespace {

using P = Point<double>;

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::MalformedDocument;
}

std::string message_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

Scene unit_circle_givens(const P& m) {
    Scene s;
    s.circles["O"] = Circle<double>::make(P::at(0, 0), 1);
    s.points["A"] = P::at(-1, 0);
    s.points["B"] = P::at(1, 0);
    s.points["M"] = m;
    return s;
}

constexpr const char* kTwoLines = R"(# through the meet of two given lines
given A : point
given B : point
given m : line
l = join(A, B)
X = meet(l, m)
output X : point_marker
)";

}  // namespace

TEST_SUITE("ruler") {

TEST_CASE("parse the documented statement forms") {
    const Program p = parse(R"(
given O : circle_with_center
given A : point
given m : line
given flip : tag
X = on_circle("any")
l = join(A, X)   # trailing comment
Y = second_meet(l, X)
when flip
  Z = meet(l, m)
end
unless flip
  Z = on_line(m, "any")
end
k = join(Z, O)
output k : parallel_to_diameter
)");
    REQUIRE(p.givens.size() == 4);
    CHECK(p.givens[2].kind == GivenKind::Line);
    CHECK(p.givens[3].kind == GivenKind::Tag);
    REQUIRE(p.steps.size() == 6);
    CHECK(p.steps[0].op == Op::OnCircle);
    CHECK(p.steps[0].hint == "any");
    CHECK(p.steps[2].op == Op::SecondMeet);
    REQUIRE(p.steps[3].condition.has_value());
    CHECK(p.steps[3].condition->tag == "flip");
    CHECK_FALSE(p.steps[3].condition->negated);
    CHECK(p.steps[4].condition->negated);
    CHECK_FALSE(p.steps[5].condition.has_value());
    CHECK(p.target_predicate() == "parallel_to_diameter");
}

TEST_CASE("every builtin parses and round-trips through format") {
    for (BuiltinId id : all_builtins()) {
        const Program p = builtin(id);
        CHECK(parse(format(p)) == p);
        CHECK(format(parse(format(p))) == format(p));
        CHECK(parse_builtin(builtin_name(id)) == id);
    }
    CHECK_FALSE(parse_builtin("problem9").has_value());
}

TEST_CASE("builtin step counts") {
    CHECK(builtin(BuiltinId::ParallelToDiameter).steps.size() == 9);
    CHECK(builtin(BuiltinId::ParallelToLine).steps.size() == 37);
    CHECK(builtin(BuiltinId::Problem1).steps.size() == 43);
    CHECK(builtin(BuiltinId::Problem2).steps.size() == 43);
    CHECK(builtin(BuiltinId::Problem3).steps.size() == 67);
}

TEST_CASE("compass primitives are syntax errors with a position") {
    const std::string text = "given A : point\nc = circle(A, 3)\n";
    CHECK(kind_of([&] { parse(text); }) == ErrorKind::SyntaxError);
    CHECK(message_of([&] { parse(text); }).find("line 2, column 5") != std::string::npos);
    CHECK(kind_of([] { parse("given A : point\nX = compass(A)\n"); }) == ErrorKind::SyntaxError);
    CHECK(kind_of([] { parse("given A : blob\n"); }) == ErrorKind::SyntaxError);
    CHECK(kind_of([] { parse("given A : point\nl = join(A, A\n"); }) == ErrorKind::SyntaxError);
    CHECK(kind_of([] { parse("given A : point\nwhen t\nend\n"); }) != ErrorKind::MalformedDocument);
}

TEST_CASE("arity, identifiers and kinds") {
    CHECK(kind_of([] { parse("given m : line\nX = meet(m)\n"); }) == ErrorKind::ArityError);
    CHECK(kind_of([] { parse("given A : point\ngiven B : point\nl = join(A, B, A)\n"); }) == ErrorKind::ArityError);
    CHECK(kind_of([] { parse("given A : point\nl = join(A, Q)\n"); }) == ErrorKind::UnknownIdentifier);
    // Use before definition.
    CHECK(kind_of([] { parse("given A : point\nl = join(A, B)\ngiven B : point\n"); }) == ErrorKind::UnknownIdentifier);
    CHECK(kind_of([] { parse("given A : point\ngiven B : point\nl = join(A, B)\noutput q : point_marker\n"); }) ==
          ErrorKind::UnknownIdentifier);
    // A line where a point is expected.
    CHECK(kind_of([] { parse("given A : point\ngiven B : point\nl = join(A, B)\nk = join(l, A)\n"); }) ==
          ErrorKind::SyntaxError);
    // Redefinition.
    CHECK(kind_of([] { parse("given A : point\ngiven B : point\nl = join(A, B)\nl = join(B, A)\n"); }) ==
          ErrorKind::SyntaxError);
}

TEST_CASE("conditional definitions") {
    const char* head = "given A : point\ngiven B : point\ngiven m : line\ngiven t : tag\n";
    // Defined on one branch only: not visible after the block.
    CHECK(kind_of([&] { parse(std::string(head) + "when t\nX = meet(join(A, B), m)\nend\n"); }) == ErrorKind::SyntaxError);
    CHECK(kind_of([&] { parse(std::string(head) + "when t\nl = join(A, B)\nend\nX = meet(l, m)\n"); }) ==
          ErrorKind::UnknownIdentifier);
    // Defined on both branches: visible.
    CHECK_NOTHROW(parse(std::string(head) +
                        "when t\nl = join(A, B)\nend\nunless t\nl = join(B, A)\nend\nX = meet(l, m)\n"));
    // Twice on the same branch.
    CHECK(kind_of([&] { parse(std::string(head) + "when t\nl = join(A, B)\nend\nwhen t\nl = join(B, A)\nend\n"); }) ==
          ErrorKind::SyntaxError);
}

TEST_CASE("a given line meets a join") {
    const Program p = parse(kTwoLines);
    Scene g;
    g.points["A"] = P::at(0, 0);
    g.points["B"] = P::at(2, 2);
    g.lines["m"] = Line<double>::from(1, 0, -1);  // x = 1
    const Scene s = execute(p, g, 1);
    CHECK(s.points.at("X").x == doctest::Approx(1));
    CHECK(s.points.at("X").y == doctest::Approx(1));
    CHECK(s.provenance.at("m") == "given");
    CHECK(s.provenance.at("X") == "step 2");
}

TEST_CASE("parallel to a diameter on the unit circle") {
    const Program p = builtin(BuiltinId::ParallelToDiameter);
    const Scene s = execute(p, unit_circle_givens(P::at(0, 1)), 3);
    const Line<double>& out = s.lines.at("parallel");
    // Through M = (0, 1) and parallel to AB: the line y = 1.
    CHECK(std::fabs(out.eval(P::at(0, 1))) <= 1e-12);
    CHECK(std::fabs(out.eval(P::at(5, 1))) <= 1e-12);
    CHECK(std::fabs(cross(out.direction(), Vec2<double>{1, 0})) <= 1e-12);
    CHECK(predicate_residual(p.outputs.back(), s) <= 1e-12);
    CHECK(s.provenance.at("m_D") == "free (step 2)");
}

TEST_CASE("degenerate givens are reported") {
    const Program p = builtin(BuiltinId::ParallelToDiameter);
    CHECK(kind_of([&] { execute(p, unit_circle_givens(P::at(-1, 0)), 3); }) == ErrorKind::DegenerateStep);
    Scene missing = unit_circle_givens(P::at(0, 1));
    missing.points.erase("B");
    CHECK(kind_of([&] { execute(p, missing, 3); }) == ErrorKind::MissingGiven);
    Scene no_circle = unit_circle_givens(P::at(0, 1));
    no_circle.circles.clear();
    CHECK(kind_of([&] { execute(p, no_circle, 3); }) == ErrorKind::MissingGiven);
}

TEST_CASE("execution is deterministic per seed") {
    for (BuiltinId id : all_builtins()) {
        const Program p = builtin(id);
        CHECK(execute_sampled(p, 5, 2) == execute_sampled(p, 5, 2));
        CHECK(execute_sampled(p, 5, 2).to_document() == execute_sampled(p, 5, 2).to_document());
    }
}

TEST_CASE("the output does not depend on the free choices") {
    const Program p = builtin(BuiltinId::ParallelToLine);
    Rng rng(31);
    const Scene givens = sample_givens(p.target_predicate(), rng);
    const Line<double> first = execute(p, givens, 0).lines.at("parallel");
    const Vec2<double> n0 = first.normal();
    const P foot0 = foot(P::at(0, 0), first);
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const Line<double> l = execute(p, givens, seed).lines.at("parallel");
        CHECK(std::fabs(cross(l.normal(), n0)) <= 1e-10);
        CHECK(distance(foot(P::at(0, 0), l), foot0) <= 1e-10);
    }
}

TEST_CASE("builtins verify on 300 trials") {
    for (BuiltinId id : all_builtins()) {
        const auto r = verify(builtin(id), 300, 7);
        CHECK_MESSAGE(r.failures == 0, builtin_name(id) << " max residual " << r.max_residual);
        CHECK(r.trials == 300);
        CHECK(r.id == builtin(id).target_predicate());
        const double bound = id == BuiltinId::Problem2 ? 1e-8 : 1e-9;
        CHECK_MESSAGE(r.max_residual <= bound, builtin_name(id));
    }
}

TEST_CASE("problem3 covers both arc cases") {
    const Program p = builtin(BuiltinId::Problem3);
    int small = 0, large = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const Scene s = execute_sampled(p, 7, trial);
        (s.tags.count("small_arc") ? small : large) += 1;
        CHECK(predicate_residual(p.outputs.back(), s) <= 1e-9);
    }
    CHECK(small >= 20);
    CHECK(large >= 20);
}

TEST_CASE("a miswired construction fails verification") {
    std::string text = builtin_text(BuiltinId::ParallelToDiameter);
    const std::string good = "m_N = meet(m_dk, m_lp)";
    REQUIRE(text.find(good) != std::string::npos);
    text.replace(text.find(good), good.size(), "m_N = meet(m_dm, m_lp)");
    const auto r = verify(parse(text), 300, 7);
    CHECK(r.failures == 300);
}

TEST_CASE("verify is schedule independent") {
    for (BuiltinId id : {BuiltinId::ParallelToDiameter, BuiltinId::Problem3}) {
        CHECK(verify(builtin(id), 60, 11) == verify_serial(builtin(id), 60, 11));
    }
}

TEST_CASE("audit") {
    for (BuiltinId id : all_builtins()) {
        const auto a = audit(builtin(id));
        CHECK(a.straightedge_only);
        CHECK(a.problems.empty());
        CHECK(a.primitive_counts.at("join") > 0);
    }
    // Built by hand: circle access with no given circle.
    Program p;
    p.givens.push_back({"A", GivenKind::Point, 1});
    p.steps.push_back({"X", Op::OnCircle, {}, "any", std::nullopt, 2});
    const auto a = audit(p);
    CHECK_FALSE(a.straightedge_only);
    REQUIRE(a.problems.size() == 1);
    CHECK(a.problems[0].find("line 2") != std::string::npos);
    p.givens.push_back({"O", GivenKind::CircleWithCenter, 1});
    p.givens.push_back({"Q", GivenKind::CircleWithCenter, 1});
    CHECK_FALSE(audit(p).straightedge_only);
}

TEST_CASE("scenes survive the document form") {
    const Scene s = execute_sampled(builtin(BuiltinId::Problem3), 3, 0);
    const Scene back = Scene::from_document(s.to_document());
    CHECK(back.points == s.points);
    CHECK(back.tags == s.tags);
    REQUIRE(back.lines.size() == s.lines.size());
    for (const auto& [name, l] : s.lines) {
        CHECK(std::fabs(cross(back.lines.at(name).normal(), l.normal())) <= 1e-15);
        CHECK(std::fabs(back.lines.at(name).eval(P::at(0, 0)) - l.eval(P::at(0, 0))) <= 1e-15);
    }
    CHECK(parse_json(emit_json(s.to_document())) == s.to_document());
}

}  // TEST_SUITE
