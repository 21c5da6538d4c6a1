// circlekit: triangle centers and circles, theorem checks, straightedge
// programs and SVG rendering from the command line.
//
// Exit codes: 0 success, 1 a check or verification failed, 2 bad input or a
// construction error, 3 unknown check id.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "circlekit/circles.hpp"
#include "circlekit/registry.hpp"
#include "circlekit/render.hpp"
#include "circlekit/ruler.hpp"
#include "circlekit/scene.hpp"

namespace ck = circlekit;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitUnknownCheck = 3;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::string backend = "f64";
    double tolerance = 1e-7;
    std::uint64_t seed = 42;
    bool json = false;
};

ck::Backend backend_of(const Globals& g) {
    const auto b = ck::parse_backend(g.backend);
    if (!b) throw InputError("unknown backend '" + g.backend + "' (use f64 or rational)");
    return *b;
}

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, sep)) out.push_back(part);
    return out;
}

// Decimal or "p/q" text as a scalar of the backend; decimals convert exactly
// on the rational backend.
template <class T>
T scalar_from(const std::string& text) {
    if constexpr (ck::is_exact_v<T>) {
        const auto dot = text.find('.');
        if (dot == std::string::npos) return ck::parse_rational(text);
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        std::string den = "1" + std::string(text.size() - dot - 1, '0');
        return ck::parse_rational(digits) / ck::parse_rational(den);
    } else {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(text, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != text.size() || text.empty()) throw InputError("bad number '" + text + "'");
        return v;
    }
}

template <class T>
ck::Point<T> point_from(const std::string& text) {
    const auto xy = split(text, ',');
    if (xy.size() != 2) throw InputError("expected a point x,y but got '" + text + "'");
    return ck::Point<T>::at(scalar_from<T>(xy[0]), scalar_from<T>(xy[1]));
}

struct TriangleSpec {
    std::vector<std::string> points;
    std::string sides;
};

void add_triangle_options(CLI::App* cmd, TriangleSpec& spec) {
    auto* pts = cmd->add_option("--points", spec.points, "three vertices A B C as x,y")->expected(3);
    auto* sides = cmd->add_option("--sides", spec.sides, "side lengths a,b,c; B at the origin, C on +x");
    pts->excludes(sides);
}

template <class T>
ck::Triangle<T> triangle_from(const TriangleSpec& spec) {
    if (!spec.points.empty())
        return ck::Triangle<T>(point_from<T>(spec.points[0]), point_from<T>(spec.points[1]),
                               point_from<T>(spec.points[2]));
    if (spec.sides.empty()) throw InputError("give the triangle with --points or --sides");
    const auto abc = split(spec.sides, ',');
    if (abc.size() != 3) throw InputError("expected --sides a,b,c");
    if constexpr (ck::is_exact_v<T>) {
        throw InputError("--sides needs square roots; use --points on the rational backend");
    } else {
        return ck::Triangle<double>::from_sides(scalar_from<double>(abc[0]), scalar_from<double>(abc[1]),
                                                scalar_from<double>(abc[2]));
    }
}

template <class T>
void put_point(ck::SceneDocument& doc, const std::string& name, const ck::Point<T>& p) {
    doc.put(name, p);
}

template <class T>
void put_scalar(ck::SceneDocument& doc, const std::string& name, const T& v) {
    doc.params[name] = ck::to_double(v);
    if constexpr (ck::is_exact_v<T>) doc.params_exact[name] = v.str();
}

template <class T>
void put_triangle(ck::SceneDocument& doc, const ck::Triangle<T>& t) {
    put_point(doc, "A", t.A());
    put_point(doc, "B", t.B());
    put_point(doc, "C", t.C());
    // The triangle is stored counterclockwise; clockwise input exchanges B and C.
    if (t.swapped()) doc.params["swapped"] = 1;
}

// ---- centers ---------------------------------------------------------------

template <class T>
ck::SceneDocument centers_doc(const TriangleSpec& spec) {
    const auto t = triangle_from<T>(spec);
    ck::SceneDocument doc;
    put_triangle(doc, t);
    for (ck::CenterId id : ck::kAllCenters) put_point(doc, std::string(ck::center_name(id)), ck::center(t, id));
    for (ck::DerivedTriangleId id : ck::kAllDerivedTriangles) {
        // Some derived triangles do not exist for every triangle (tangential
        // of a right triangle); those are left out.
        try {
            const auto v = ck::derived_vertices(t, id);
            for (int i = 0; i < 3; ++i)
                put_point(doc, std::string(ck::derived_triangle_name(id)) + "_" + "ABC"[i], v[i]);
        } catch (const ck::Error&) {
        }
    }
    return doc;
}

// ---- circle ------------------------------------------------------------------

struct CircleArgs {
    std::string id;
    std::string t = "0.5", rho = "1", vertex = "A", k = "2", p1, through = "B", tangent_at = "A";
};

ck::Vertex vertex_from(const std::string& s) {
    if (s == "A") return ck::Vertex::A;
    if (s == "B") return ck::Vertex::B;
    if (s == "C") return ck::Vertex::C;
    throw InputError("vertex must be A, B or C, not '" + s + "'");
}

template <class T>
ck::NamedCircleResult<T> named_circle(const ck::Triangle<T>& t, const CircleArgs& a) {
    if (a.id == "lemoine1") return ck::lemoine_first(t);
    if (a.id == "lemoine2") return ck::lemoine_second(t);
    if (a.id == "lemoine-gen") return ck::generalized_lemoine(t, scalar_from<T>(a.t));
    if (a.id == "droz-farny1") return ck::droz_farny_first(t);
    if (a.id == "droz-farny2") return ck::droz_farny_second(t);
    if (a.id == "df-family") return ck::droz_farny_family(t, scalar_from<T>(a.rho));
    if (a.id == "excircle-radical") return ck::radical_circle_excircles(t);
    if (a.id == "neuberg") return ck::neuberg_circle(t, vertex_from(a.vertex));
    if (a.id == "lucas") return ck::lucas_circle(t, vertex_from(a.vertex));
    if (a.id == "apollonius") return ck::apollonius_rank_k(t, vertex_from(a.vertex), scalar_from<T>(a.k));
    if (a.id == "six-point") {
        if (a.p1.empty()) throw InputError("six-point needs --p1 x,y");
        return ck::six_point_circle(t, point_from<T>(a.p1));
    }
    if (a.id == "adjoint") return ck::adjoint_circle(t, vertex_from(a.through), vertex_from(a.tangent_at));
    throw InputError("unknown circle '" + a.id + "'");
}

template <class T>
ck::SceneDocument circle_doc(const TriangleSpec& spec, const CircleArgs& args) {
    const auto t = triangle_from<T>(spec);
    const auto res = named_circle(t, args);
    ck::SceneDocument doc;
    put_triangle(doc, t);
    doc.circles[args.id] = ck::CircleEntry{{ck::to_double(res.circle.center.x), ck::to_double(res.circle.center.y)},
                                           ck::to_double(res.circle.radius_squared)};
    put_point(doc, args.id + "_center", res.circle.center);
    put_scalar(doc, args.id + "_r2", res.circle.radius_squared);
    for (const auto& [name, p] : res.witnesses) put_point(doc, name, p);
    for (const auto& [name, p] : res.auxiliary) put_point(doc, name, p);
    for (const auto& [name, v] : res.metadata) put_scalar(doc, name, v);
    return doc;
}

// ---- check -------------------------------------------------------------------

std::string residual_text(double v) {
    if (!std::isfinite(v)) return "inf";
    std::ostringstream ss;
    ss << std::scientific << std::setprecision(2) << v;
    return ss.str();
}

void print_report_row(const ck::CheckReport& r, const std::string& backend) {
    std::cout << std::left << std::setw(24) << r.id << std::setw(10) << backend << std::right << std::setw(7)
              << r.trials << std::setw(9) << r.failures << std::setw(11) << residual_text(r.max_residual)
              << std::setw(11) << residual_text(r.mean_residual) << "  " << (r.passed() ? "PASS" : "FAIL") << "\n";
}

void print_report_header() {
    std::cout << std::left << std::setw(24) << "id" << std::setw(10) << "backend" << std::right << std::setw(7)
              << "trials" << std::setw(9) << "failures" << std::setw(11) << "max" << std::setw(11) << "mean"
              << "  result\n";
}

int run_checks(const Globals& g, std::vector<std::string> ids, int trials, bool mutate, bool list) {
    if (list) {
        for (const auto& c : ck::list_checks())
            std::cout << std::left << std::setw(10) << c.id << std::setw(10)
                      << (c.backend == ck::BackendSupport::Both ? "both" : c.backend == ck::BackendSupport::Rational ? "rational" : "f64")
                      << c.statement << "\n";
        return 0;
    }
    const ck::Backend backend = backend_of(g);
    if (ids.empty()) throw InputError("name check ids or 'all'");
    if (ids.size() == 1 && ids[0] == "all") {
        ids.clear();
        for (const auto& c : ck::list_checks()) {
            const bool runs = backend == ck::Backend::Float ? c.backend != ck::BackendSupport::Rational
                                                            : c.backend != ck::BackendSupport::Float;
            if (runs) ids.push_back(c.id);
        }
    }
    std::sort(ids.begin(), ids.end());
    ck::RunOptions opts;
    opts.backend = backend;
    opts.threshold = g.tolerance;
    opts.mutate = mutate;
    // Resolve every id before running anything.
    for (const auto& id : ids) {
        bool known = false;
        for (const auto& c : ck::list_checks()) known = known || c.id == id;
        if (!known) ck::fail(ck::ErrorKind::UnknownCheck, "unknown check '" + id + "'");
    }
    if (!g.json) print_report_header();
    bool all_passed = true;
    for (const auto& id : ids) {
        const ck::CheckReport r = ck::run_check(id, g.seed, trials, opts);
        all_passed = all_passed && r.passed();
        if (g.json)
            std::cout << ck::report_to_json(r) << "\n";
        else
            print_report_row(r, std::string(ck::backend_name(backend)));
    }
    return all_passed ? 0 : kExitFailed;
}

// ---- ruler -------------------------------------------------------------------

struct RulerArgs {
    std::string action;
    std::string path;
    std::string builtin;
    std::string givens;
    int trials = 300;
};

ck::ruler::Program load_program(const RulerArgs& a) {
    if (!a.builtin.empty()) {
        const auto id = ck::ruler::parse_builtin(a.builtin);
        if (!id) {
            std::string names;
            for (auto b : ck::ruler::all_builtins()) names += " " + std::string(ck::ruler::builtin_name(b));
            throw InputError("unknown builtin '" + a.builtin + "'; known:" + names);
        }
        return ck::ruler::builtin(*id);
    }
    if (a.path.empty()) throw InputError("give a program file or --builtin");
    return ck::ruler::parse(read_file(a.path));
}

int run_ruler(const Globals& g, const RulerArgs& a) {
    const ck::ruler::Program p = load_program(a);
    if (a.action == "print") {
        std::cout << ck::ruler::format(p);
        return 0;
    }
    if (a.action == "audit") {
        const auto rep = ck::ruler::audit(p);
        for (const auto& [op, n] : rep.primitive_counts) std::cout << op << " " << n << "\n";
        for (const auto& problem : rep.problems) std::cout << "problem: " << problem << "\n";
        std::cout << (rep.straightedge_only ? "straightedge only" : "NOT straightedge only") << "\n";
        return rep.straightedge_only ? 0 : kExitFailed;
    }
    if (a.action == "run") {
        ck::ruler::Scene scene;
        if (!a.givens.empty()) {
            const auto givens = ck::ruler::Scene::from_document(ck::parse_json(read_file(a.givens)));
            scene = ck::ruler::execute(p, givens, g.seed);
        } else {
            scene = ck::ruler::execute_sampled(p, g.seed);
        }
        ck::SceneDocument doc = scene.to_document();
        if (!p.outputs.empty()) {
            const auto& out = p.outputs.back();
            doc.params["residual"] = ck::ruler::predicate_residual(out, scene);
            doc.styles[out.name] = ck::StyleEntry{"#c0392b", out.name};
        }
        std::cout << ck::emit_json(doc) << "\n";
        return 0;
    }
    // verify
    ck::ruler::VerifyOptions opts;
    opts.threshold = g.tolerance;
    const ck::CheckReport r = ck::ruler::verify(p, a.trials, g.seed, opts);
    if (g.json) {
        std::cout << ck::report_to_json(r) << "\n";
    } else {
        print_report_header();
        print_report_row(r, "f64");
    }
    return r.passed() ? 0 : kExitFailed;
}

// ---- render ------------------------------------------------------------------

struct RenderArgs {
    std::string input = "-";
    std::string output;
    ck::RenderOptions opts;
    bool no_labels = false;
};

int run_render(const RenderArgs& a) {
    ck::RenderOptions opts = a.opts;
    opts.labels = !a.no_labels;
    if (!(opts.margin >= 0 && opts.margin < 0.5)) throw InputError("--margin must lie in [0, 0.5)");
    const std::string svg = ck::render_scene(ck::parse_json(read_file(a.input)), opts);
    if (a.output.empty()) {
        std::cout << svg;
    } else {
        std::ofstream out(a.output, std::ios::binary);
        if (!out) throw InputError("cannot write '" + a.output + "'");
        out << svg;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Triangle circles: constructions, theorem checks, straightedge programs and SVG."};
    app.require_subcommand(1);
    // Global flags may also follow the subcommand.
    app.fallthrough();
    Globals g;
    app.add_option("--backend", g.backend, "f64 or rational")->capture_default_str();
    app.add_option("--tolerance,--threshold", g.tolerance, "residual threshold for checks")->capture_default_str();
    app.add_option("--seed", g.seed, "random seed")->capture_default_str();
    app.add_flag("--json", g.json, "JSON lines instead of a table");

    TriangleSpec centers_spec;
    auto* centers = app.add_subcommand("centers", "triangle centers and derived triangles as a scene document");
    add_triangle_options(centers, centers_spec);

    TriangleSpec circle_spec;
    CircleArgs circle_args;
    auto* circle = app.add_subcommand("circle", "one named circle with its witness points");
    add_triangle_options(circle, circle_spec);
    circle->add_option("id", circle_args.id,
                       "lemoine1 lemoine2 lemoine-gen droz-farny1 droz-farny2 df-family excircle-radical neuberg "
                       "lucas apollonius six-point adjoint")
        ->required();
    circle->add_option("--t", circle_args.t, "lemoine-gen: position on the symmedian")->capture_default_str();
    circle->add_option("--rho", circle_args.rho, "df-family: radius about the vertices")->capture_default_str();
    circle->add_option("--vertex", circle_args.vertex, "neuberg, lucas, apollonius: A, B or C")->capture_default_str();
    circle->add_option("--k", circle_args.k, "apollonius: rank")->capture_default_str();
    circle->add_option("--p1", circle_args.p1, "six-point: the point x,y");
    circle->add_option("--through", circle_args.through, "adjoint: vertex on the circle")->capture_default_str();
    circle->add_option("--tangent-at", circle_args.tangent_at, "adjoint: vertex of tangency")->capture_default_str();

    std::vector<std::string> check_ids;
    int check_trials = 300;
    bool mutate = false, list = false;
    auto* check = app.add_subcommand("check", "run randomized theorem checks");
    check->add_option("ids", check_ids, "check ids or 'all'");
    check->add_option("--trials", check_trials, "trials per check")->capture_default_str();
    check->add_flag("--mutate", mutate, "evaluate the perturbed construction");
    check->add_flag("--list", list, "list the catalog");

    RulerArgs ruler_args;
    auto* ruler = app.add_subcommand("ruler", "straightedge programs: run, verify, print, audit");
    ruler->add_option("action", ruler_args.action, "run, verify, print or audit")
        ->required()
        ->check(CLI::IsMember({"run", "verify", "print", "audit"}));
    ruler->add_option("program", ruler_args.path, "program file (.ruler)");
    ruler->add_option("--builtin", ruler_args.builtin, "built-in program id");
    ruler->add_option("--givens", ruler_args.givens, "scene document with the givens (run)");
    ruler->add_option("--trials", ruler_args.trials, "verification trials")->capture_default_str();

    RenderArgs render_args;
    auto* render = app.add_subcommand("render", "render a scene document to SVG");
    render->add_option("scene", render_args.input, "scene JSON file, '-' for stdin")->capture_default_str();
    render->add_option("-o,--output", render_args.output, "SVG file; stdout when omitted");
    render->add_option("--size", render_args.opts.size, "canvas size in pixels")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    render->add_option("--margin", render_args.opts.margin, "margin fraction")->capture_default_str();
    render->add_flag("--no-labels", render_args.no_labels, "omit point labels");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (centers->parsed()) {
            const auto doc = backend_of(g) == ck::Backend::Rational ? centers_doc<ck::Rational>(centers_spec)
                                                                     : centers_doc<double>(centers_spec);
            std::cout << ck::emit_json(doc) << "\n";
            return 0;
        }
        if (circle->parsed()) {
            const auto doc = backend_of(g) == ck::Backend::Rational ? circle_doc<ck::Rational>(circle_spec, circle_args)
                                                                     : circle_doc<double>(circle_spec, circle_args);
            std::cout << ck::emit_json(doc) << "\n";
            return 0;
        }
        if (check->parsed()) return run_checks(g, check_ids, check_trials, mutate, list);
        if (ruler->parsed()) return run_ruler(g, ruler_args);
        if (render->parsed()) return run_render(render_args);
    } catch (const ck::Error& e) {
        std::cerr << "circlekit: " << e.what() << "\n";
        return e.kind() == ck::ErrorKind::UnknownCheck ? kExitUnknownCheck : kExitInput;
    } catch (const InputError& e) {
        std::cerr << "circlekit: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
