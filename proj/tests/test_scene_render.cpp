#include <doctest.h>

#include <regex>

#include "circlekit/registry.hpp"
#include "circlekit/render.hpp"
#include "circlekit/scene.hpp"

using namespace circlekit;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::SyntaxError;
}

// Attribute value of the element with the given id.
std::string attribute(const std::string& svg, const std::string& id, const std::string& name) {
    const std::regex element("<[a-z]+ id=\"" + id + "\"[^>]*>");
    std::smatch m;
    if (!std::regex_search(svg, m, element)) return {};
    const std::string tag = m.str();
    const std::regex value(" " + name + "=\"([^\"]*)\"");
    return std::regex_search(tag, m, value) ? m[1].str() : std::string{};
}

SceneDocument sample_document() {
    SceneDocument d;
    d.points["A"] = {0.1, -2.5};
    d.points["B"] = {3, 4.25};
    d.lines["l"] = {0.6, 0.8, -1};
    d.circles["O"] = {{0.5, 0.5}, 2.25};
    d.styles["A"] = {"#aa0000", "vertex A"};
    d.params["t"] = 0.3;
    d.points_exact["A"] = {"1/10", "-5/2"};
    d.params_exact["t"] = "3/10";
    return d;
}

}  // namespace

TEST_SUITE("scene") {

TEST_CASE("JSON round trip") {
    const SceneDocument d = sample_document();
    const std::string text = emit_json(d);
    CHECK(parse_json(text) == d);
    CHECK(emit_json(parse_json(text)) == text);
}

TEST_CASE("worst scenes of checks round trip") {
    for (const char* id : {"L3.P1", "HQ.ALL", "DF2.T1"}) {
        const SceneDocument d = run_check(id, 2, 5).worst_scene;
        CHECK(parse_json(emit_json(d)) == d);
    }
}

TEST_CASE("number text") {
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(2) == "2");
    CHECK(format_number(-0.0) == "0");
    CHECK(std::stod(format_number(1.0 / 3)) == 1.0 / 3);
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(parse_rational("7") == Rational(7));
}

TEST_CASE("malformed documents") {
    CHECK(kind_of([] { parse_json("{"); }) == ErrorKind::MalformedDocument);
    CHECK(kind_of([] { parse_json(R"({"version":"1","points":{"A":[1]}})"); }) == ErrorKind::MalformedDocument);
    CHECK(kind_of([] { SceneDocument{}.point("A"); }) == ErrorKind::MalformedDocument);
}

TEST_CASE("empty scene") {
    const std::string svg = render_scene({});
    CHECK(svg.find("viewBox=\"0 0 1 1\"") != std::string::npos);
    CHECK(svg.find("<circle") == std::string::npos);
}

TEST_CASE("unit circle fills the canvas inside the margin") {
    SceneDocument d;
    d.circles["O"] = {{0, 0}, 1};
    const std::string svg = render_scene(d);
    CHECK(attribute(svg, "circle-O", "cx") == "300");
    CHECK(attribute(svg, "circle-O", "cy") == "300");
    // 600 px less 8% on each side, over a diameter of 2.
    CHECK(attribute(svg, "circle-O", "r") == "252");
    RenderOptions small;
    small.size = 100;
    small.margin = 0;
    CHECK(attribute(render_scene(d, small), "circle-O", "r") == "50");
}

TEST_CASE("y axis points up") {
    SceneDocument d;
    d.points["Low"] = {0, 0};
    d.points["High"] = {0, 1};
    const std::string svg = render_scene(d);
    CHECK(std::stod(attribute(svg, "point-High", "cy")) < std::stod(attribute(svg, "point-Low", "cy")));
    CHECK(attribute(svg, "point-High", "cx") == attribute(svg, "point-Low", "cx"));
}

TEST_CASE("rendering is deterministic and labels are optional") {
    const SceneDocument d = sample_document();
    CHECK(render_scene(d) == render_scene(parse_json(emit_json(d))));
    CHECK(render_scene(d).find(">vertex A<") != std::string::npos);
    RenderOptions bare;
    bare.labels = false;
    CHECK(render_scene(d, bare).find("<text") == std::string::npos);
    CHECK(render_scene(d).find("line-l") != std::string::npos);
}

}  // TEST_SUITE
