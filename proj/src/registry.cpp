#include "circlekit/registry.hpp"

#include <json.hpp>

#include "checks/support.hpp"
#include "scene_json.hpp"

namespace circlekit {

using checks::CheckDef;

namespace {

constexpr int kMaxAttempts = 100;

const std::vector<CheckDef>& catalog() {
    static const std::vector<CheckDef> all = [] {
        checks::Catalog c;
        checks::add_lemoine_checks(c);
        checks::add_radical_checks(c);
        checks::add_droz_farny_checks(c);
        checks::add_neuberg_lucas_checks(c);
        checks::add_ruler_theorem_checks(c);
        checks::add_apollonius_checks(c);
        checks::add_quadrilateral_checks(c);
        return c;
    }();
    return all;
}

const CheckDef& find_check(const std::string& id) {
    for (const auto& c : catalog())
        if (c.info.id == id) return c;
    fail(ErrorKind::UnknownCheck, "no check named " + id);
}

void require_backend(const CheckDef& c, Backend b) {
    const BackendSupport s = c.info.backend;
    const bool ok = s == BackendSupport::Both || (b == Backend::Float && s == BackendSupport::Float) ||
                    (b == Backend::Rational && s == BackendSupport::Rational);
    if (!ok)
        fail(ErrorKind::BackendUnsupported, c.info.id + " does not run on the " + std::string(backend_name(b)) + " backend");
}

struct TrialResult {
    double residual = checks::kInf;
    SceneDocument scene;
};

double evaluate(const CheckDef& c, const SceneDocument& s, Backend b, bool mutate) {
    if (b == Backend::Rational) return c.residual_exact(s);
    return c.residual(s, mutate);
}

// Draws scenes until one evaluates without a construction error. In mutate
// mode the scene must be valid for the real construction first; an error in
// the perturbed construction then counts as an infinite residual.
TrialResult run_trial(const CheckDef& c, std::uint64_t seed, int trial, const RunOptions& opts) {
    Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(trial));
    TrialResult out;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        SceneDocument s;
        double r;
        try {
            s = opts.backend == Backend::Rational ? c.generate_exact(rng) : c.generate(rng);
            r = evaluate(c, s, opts.backend, false);
        } catch (const Error&) {
            continue;
        }
        if (opts.mutate) {
            try {
                r = evaluate(c, s, opts.backend, true);
            } catch (const Error&) {
                r = checks::kInf;
            }
        }
        out.residual = r;
        out.scene = std::move(s);
        return out;
    }
    return out;
}

CheckReport fold(const std::string& id, std::uint64_t seed, std::vector<TrialResult>& results, double threshold) {
    CheckReport rep;
    rep.id = id;
    rep.seed = seed;
    rep.trials = static_cast<int>(results.size());
    double sum = 0;
    int worst = -1;
    for (int i = 0; i < rep.trials; ++i) {
        const double r = results[i].residual;
        if (!(r <= threshold)) ++rep.failures;
        sum += r;
        if (worst < 0 || r > rep.max_residual || (std::isnan(r) && !std::isnan(rep.max_residual))) {
            worst = i;
            rep.max_residual = r;
        }
    }
    rep.mean_residual = rep.trials > 0 ? sum / rep.trials : 0;
    if (worst >= 0) rep.worst_scene = std::move(results[worst].scene);
    return rep;
}

}  // namespace

std::string_view backend_name(Backend b) { return b == Backend::Rational ? "rational" : "f64"; }

std::optional<Backend> parse_backend(std::string_view name) {
    if (name == "f64" || name == "float") return Backend::Float;
    if (name == "rational") return Backend::Rational;
    return std::nullopt;
}

const std::vector<CheckInfo>& list_checks() {
    static const std::vector<CheckInfo> infos = [] {
        std::vector<CheckInfo> out;
        for (const auto& c : catalog()) out.push_back(c.info);
        return out;
    }();
    return infos;
}

CheckReport run_check(const std::string& id, std::uint64_t seed, int trials, const RunOptions& opts) {
    const CheckDef& c = find_check(id);
    require_backend(c, opts.backend);
    std::vector<TrialResult> results(static_cast<std::size_t>(std::max(trials, 0)));
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < trials; ++i) results[i] = run_trial(c, seed, i, opts);
    return fold(id, seed, results, opts.threshold);
}

CheckReport run_check_serial(const std::string& id, std::uint64_t seed, int trials, const RunOptions& opts) {
    const CheckDef& c = find_check(id);
    require_backend(c, opts.backend);
    std::vector<TrialResult> results(static_cast<std::size_t>(std::max(trials, 0)));
    for (int i = 0; i < trials; ++i) results[i] = run_trial(c, seed, i, opts);
    return fold(id, seed, results, opts.threshold);
}

SceneDocument sample_scene(const std::string& id, std::uint64_t seed, int trial, Backend backend) {
    const CheckDef& c = find_check(id);
    require_backend(c, backend);
    RunOptions opts;
    opts.backend = backend;
    return run_trial(c, seed, trial, opts).scene;
}

double evaluate_scene(const std::string& id, const SceneDocument& scene, Backend backend, bool mutate) {
    const CheckDef& c = find_check(id);
    require_backend(c, backend);
    return evaluate(c, scene, backend, mutate);
}

std::string report_to_json(const CheckReport& r) {
    nlohmann::json j = nlohmann::json::object();
    j["id"] = r.id;
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    j["failures"] = r.failures;
    // JSON has no infinity; a trial that never produced a scene reports null.
    auto number = [](double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); };
    j["max_residual"] = number(r.max_residual);
    j["mean_residual"] = number(r.mean_residual);
    j["worst_scene"] = detail::scene_to_json(r.worst_scene);
    return j.dump();
}

}  // namespace circlekit
