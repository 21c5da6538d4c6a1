#pragma once

// Straightedge-only construction programs: a line-oriented DSL, its
// interpreter, the built-in programs and randomized verification of their
// target predicates.
//
//   given O : circle_with_center   # O names the center; the circle is implicit
//   given A : point
//   given m : line
//   given small : tag              # set by the givens, selects when/unless blocks
//   l = join(A, B)
//   P = meet(l, m)
//   D = on_line(l, "beyond:M:B")   # also "between:P:Q", "any"
//   X = on_circle("arc:P:Q:R")     # arc PQ avoiding R; also "arc:P:Q", "any"
//   Y = second_meet(l, A)          # other point of l on the given circle
//   when small ... end / unless small ... end
//   output l : parallel_to_diameter

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "circlekit/registry.hpp"
#include "circlekit/sampling.hpp"

namespace circlekit::ruler {

enum class Op { Join, Meet, OnLine, OnCircle, SecondMeet };
enum class GivenKind { Point, Line, CircleWithCenter, Tag };
enum class ObjectKind { Point, Line };

std::string_view op_name(Op op);

struct Condition {
    std::string tag;
    bool negated = false;
    bool operator==(const Condition&) const = default;
};

struct Step {
    std::string target;
    Op op = Op::Join;
    std::vector<std::string> args;  // identifiers
    std::string hint;               // OnLine / OnCircle only
    std::optional<Condition> condition;
    int line = 0;  // source line; ignored by ==
    bool operator==(const Step& o) const {
        return target == o.target && op == o.op && args == o.args && hint == o.hint && condition == o.condition;
    }
};

struct GivenDecl {
    std::string name;
    GivenKind kind = GivenKind::Point;
    int line = 0;
    bool operator==(const GivenDecl& o) const { return name == o.name && kind == o.kind; }
};

struct OutputDecl {
    std::string name;
    std::string predicate;
    int line = 0;
    bool operator==(const OutputDecl& o) const { return name == o.name && predicate == o.predicate; }
};

struct Program {
    std::vector<GivenDecl> givens;
    std::vector<Step> steps;
    std::vector<OutputDecl> outputs;

    // Predicate of the last output; empty when there is none.
    std::string target_predicate() const;
    bool operator==(const Program&) const = default;
};

// Throws SyntaxError (message carries "line L, column C"), UnknownIdentifier
// or ArityError.
Program parse(std::string_view text);

// Canonical text of a program; parse(format(p)) == p.
std::string format(const Program& p);

// Objects of an executed program with where each came from: "given",
// "step N" or "free (step N)".
struct Scene {
    std::map<std::string, Point<double>> points;
    std::map<std::string, Line<double>> lines;
    std::map<std::string, Circle<double>> circles;  // keyed by the center's name
    std::set<std::string> tags;
    std::map<std::string, std::string> provenance;

    SceneDocument to_document() const;
    // Tags are params with a nonzero value.
    static Scene from_document(const SceneDocument& doc);
    bool operator==(const Scene&) const = default;
};

// Throws MissingGiven or DegenerateStep. Free choices come from
// Rng::for_trial(seed, 0).
Scene execute(const Program& p, const Scene& givens, std::uint64_t seed);
Scene execute(const Program& p, const Scene& givens, Rng& rng);

// Samples givens for the program's target predicate and executes, drawing
// again after a DegenerateStep; up to 100 attempts from
// Rng::for_trial(seed, trial).
Scene execute_sampled(const Program& p, std::uint64_t seed, int trial = 0);

// Static proof that only straightedge primitives are used and that every
// circle access goes through the single given circle.
struct AuditReport {
    bool straightedge_only = true;
    std::map<std::string, int> primitive_counts;
    std::vector<std::string> problems;
};
AuditReport audit(const Program& p);

enum class BuiltinId { ParallelToDiameter, ParallelToLine, Problem1, Problem2, Problem3 };
std::string_view builtin_name(BuiltinId id);
std::optional<BuiltinId> parse_builtin(std::string_view name);
const std::vector<BuiltinId>& all_builtins();
std::string builtin_text(BuiltinId id);
Program builtin(BuiltinId id);

// Target predicates: each samples admissible givens and measures a
// dimensionless residual on an executed scene. Besides the output object,
// a predicate reads the givens and the named intermediate points listed by
// predicate_inputs, so programs targeting it must use those names.
const std::vector<std::string>& predicate_ids();
std::vector<std::string> predicate_inputs(const std::string& predicate);
Scene sample_givens(const std::string& predicate, Rng& rng);
double predicate_residual(const OutputDecl& output, const Scene& scene);

struct VerifyOptions {
    double threshold = 1e-7;
};

// Trials run in parallel; a DegenerateStep rejects the draw and resamples, up
// to 100 times per trial. The report id is the predicate name.
CheckReport verify(const Program& p, int trials, std::uint64_t seed, const VerifyOptions& opts = {});
CheckReport verify_serial(const Program& p, int trials, std::uint64_t seed, const VerifyOptions& opts = {});

}  // namespace circlekit::ruler
