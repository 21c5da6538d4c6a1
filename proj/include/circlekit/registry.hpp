#pragma once

// Catalog of randomized theorem checks. A check pairs a seeded scene
// generator with a residual: a dimensionless number that is zero when the
// claim holds. Residuals are recomputed from the scene's input points and
// parameters only, so a similarity applied to the scene leaves them unchanged.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circlekit/centers.hpp"
#include "circlekit/scene.hpp"

namespace circlekit {

enum class Backend { Float, Rational };
enum class BackendSupport { Float, Rational, Both };

std::string_view backend_name(Backend b);  // "f64" or "rational"
std::optional<Backend> parse_backend(std::string_view name);

struct CheckInfo {
    std::string id;
    std::string statement;
    BackendSupport backend = BackendSupport::Float;
    // A one-line perturbation of the construction exists for this check.
    bool has_mutation = false;
};

struct CheckReport {
    std::string id;
    std::uint64_t seed = 0;
    int trials = 0;
    double max_residual = 0;
    double mean_residual = 0;
    int failures = 0;
    SceneDocument worst_scene;

    bool passed() const { return failures == 0; }
    bool operator==(const CheckReport&) const = default;
};

struct RunOptions {
    Backend backend = Backend::Float;
    double threshold = 1e-7;
    // Evaluate the perturbed construction instead of the real one.
    bool mutate = false;
};

const std::vector<CheckInfo>& list_checks();

// Throws UnknownCheck or BackendUnsupported.
CheckReport run_check(const std::string& id, std::uint64_t seed, int trials, const RunOptions& opts = {});
// Single-threaded reference with the same report.
CheckReport run_check_serial(const std::string& id, std::uint64_t seed, int trials, const RunOptions& opts = {});

// One accepted scene for (seed, trial), the same one run_check evaluates.
SceneDocument sample_scene(const std::string& id, std::uint64_t seed, int trial, Backend backend = Backend::Float);
// Residual of a given scene; throws the construction's Error when the scene
// is degenerate for the check.
double evaluate_scene(const std::string& id, const SceneDocument& scene, Backend backend = Backend::Float,
                      bool mutate = false);

std::string report_to_json(const CheckReport& r);

// Solvers.

struct CevianSolution {
    Point<double> d;
    double r_common = 0;
    // Parameter of D along BC from the construction and from bisection.
    double t_construction = 0;
    double t_bisection = 0;
};

// D on BC such that ABD and ACD have equal inradii. Computed by the
// classical construction and cross-checked against bisection; throws
// ConstructionMismatch if they disagree by more than 1e-9 of |BC|.
CevianSolution equal_incircle_cevian(const Triangle<double>& t);

// r(ABD) - r(ACD) for D = B + s (C - B).
double incircle_difference(const Triangle<double>& t, double s);

// Fixed point of the mediator of PQ for the chord AB seen under angle gamma.
Point<double> fixed_point(const Point<double>& a, const Point<double>& b, double gamma);

struct FixedPointTrial {
    Point<double> c, e, f, p, q;
    double pb_qa = 0;        // |PB - QA| / |AB|
    double trapezoid = 0;    // |sin| between PQ and AB
    double mediator = 0;     // distance from D to the mediator of PQ over |AB|
    double parallelogram = 0;  // at gamma = 90 degrees: |P - A + B - Q| over |AB|
};

// Builds the configuration for C on the arc at parameter u in (0, 1).
FixedPointTrial fixed_point_trial(const Point<double>& a, const Point<double>& b, double gamma, double u);

}  // namespace circlekit
