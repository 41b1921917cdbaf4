#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "common.hpp"

namespace hypmaj::harness {

using detail::Context;
using detail::TrialKind;
using detail::TrialOutcome;

namespace {

const TrialKind* find_kind(const std::vector<TrialKind>& kinds, const std::string& name) {
    for (const auto& k : kinds) {
        if (k.name == name) return &k;
    }
    return nullptr;
}

const TrialKind& lookup(const std::string& name) {
    if (const auto* k = find_kind(detail::suites(), name)) return *k;
    if (const auto* k = find_kind(detail::hunts(), name)) return *k;
    fail(ErrorCode::UnknownSuite, "no suite or problem named '" + name + "'");
}

Context make_context(const TrialKind& kind, const ExperimentConfig& c) {
    Context ctx;
    ctx.mode = c.mode.value_or(Mode::Rational);
    if (kind.exact_only && ctx.mode == Mode::Float) {
        fail(ErrorCode::FloatModeUnsupported, "'" + kind.name + "' runs in rational mode only");
    }
    ctx.tol = c.tol.value_or(kind.default_tol);
    if (!(ctx.tol >= 0.0)) fail(ErrorCode::Config, "tolerance must be nonnegative");
    ctx.min_degree = c.min_degree != 0 ? c.min_degree : kind.min_degree;
    ctx.max_degree = c.max_degree != 0 ? c.max_degree : kind.max_degree;
    if (c.min_degree != 0 && c.max_degree == 0) ctx.max_degree = std::max(ctx.max_degree, ctx.min_degree);
    if (c.max_degree != 0 && c.min_degree == 0) ctx.min_degree = std::min(ctx.min_degree, ctx.max_degree);
    if (ctx.min_degree < kind.min_degree) {
        fail(ErrorCode::Config, "'" + kind.name + "' needs degree >= " + std::to_string(kind.min_degree));
    }
    if (ctx.min_degree > ctx.max_degree) fail(ErrorCode::Config, "min_degree exceeds max_degree");
    if (ctx.max_degree > 24) fail(ErrorCode::Config, "degrees above 24 are not supported");
    ctx.chain_cap = c.chain_cap;
    ctx.family = c.family;
    return ctx;
}

struct TrialResult {
    TrialOutcome outcome;
    json inputs;  // kept for failures only
};

// Float inputs are dyadic rationals, so this conversion is exact.
json exact_inputs(const json& j) {
    if (j.is_number_float()) return format_rational(from_double<Rational>(j.get<double>()));
    if (j.is_array()) {
        json out = json::array();
        for (const auto& e : j) out.push_back(exact_inputs(e));
        return out;
    }
    if (j.is_object()) {
        json out = json::object();
        for (const auto& [key, value] : j.items()) out[key] = key == "mode" ? json("rational") : exact_inputs(value);
        return out;
    }
    return j;
}

TrialOutcome checked(const TrialKind& kind, const json& inputs, const Context& ctx) {
    try {
        return kind.check(inputs, ctx);
    } catch (const std::exception& e) {
        TrialOutcome out;
        out.ok = false;
        out.message = e.what();
        return out;
    }
}

TrialResult run_trial(const TrialKind& kind, const Context& ctx, std::uint64_t seed, std::size_t trial) {
    TrialResult r;
    Rng rng = Rng::for_trial(seed, trial);
    json inputs;
    try {
        inputs = kind.generate(rng, ctx);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::GeneratorExhausted) throw;
        r.outcome.skipped = true;
        detail::add_counter(r.outcome.counters, "generator_exhausted");
        return r;
    }
    r.outcome = checked(kind, inputs, ctx);
    if (!r.outcome.ok && ctx.mode == Mode::Float) {
        // a float-only violation counts only if the same inputs fail exactly
        Context exact = ctx;
        exact.mode = Mode::Rational;
        const auto confirm = checked(kind, exact_inputs(inputs), exact);
        if (confirm.ok) {
            r.outcome = confirm;
            detail::add_counter(r.outcome.counters, "float_noise_resolved");
        }
    }
    if (!r.outcome.ok) r.inputs = std::move(inputs);
    return r;
}

SuiteReport run_kind(const TrialKind& kind, const ExperimentConfig& config) {
    const Context ctx = make_context(kind, config);
    const auto start = std::chrono::steady_clock::now();
    std::vector<TrialResult> results(config.trials);

    const std::size_t threads = std::max<std::size_t>(1, std::min(config.threads, config.trials));
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < config.trials; i = next++) {
            try {
                results[i] = run_trial(kind, ctx, config.seed, i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                next = config.trials;
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (first_error) std::rethrow_exception(first_error);

    SuiteReport rep;
    rep.suite = kind.name;
    rep.seed = config.seed;
    rep.mode = ctx.mode;
    rep.tol = ctx.tol;
    rep.trials = config.trials;
    for (std::size_t i = 0; i < results.size(); ++i) {
        auto& r = results[i];
        if (r.outcome.skipped) ++rep.skipped;
        rep.worst_slack = std::min(rep.worst_slack, r.outcome.worst_slack);
        for (const auto& [key, value] : r.outcome.counters.items()) {
            detail::add_counter(rep.evidence, key, value.get<long>());
        }
        if (!r.outcome.ok) {
            rep.failures.push_back({i, std::move(r.inputs), std::move(r.outcome.certificate), r.outcome.message});
        }
    }
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& k : detail::suites()) out.push_back(k.name);
    return out;
}

std::vector<std::string> hunt_names() {
    std::vector<std::string> out;
    for (const auto& k : detail::hunts()) out.push_back(k.name);
    return out;
}

SuiteReport run_suite(const ExperimentConfig& config) {
    const auto* kind = find_kind(detail::suites(), config.suite);
    if (!kind) fail(ErrorCode::UnknownSuite, "no suite named '" + config.suite + "'");
    return run_kind(*kind, config);
}

SuiteReport run_hunt(const std::string& problem, const ExperimentConfig& config) {
    const auto* kind = find_kind(detail::hunts(), problem);
    if (!kind) fail(ErrorCode::UnknownSuite, "no open problem named '" + problem + "'");
    auto rep = run_kind(*kind, config);
    if (rep.trials > 0 && rep.skipped == rep.trials) {
        fail(ErrorCode::GeneratorExhausted, "no admissible operator found in any trial");
    }
    return rep;
}

json generate_inputs(const std::string& name, const ExperimentConfig& config, std::size_t trial) {
    const auto& kind = lookup(name);
    Rng rng = Rng::for_trial(config.seed, trial);
    return kind.generate(rng, make_context(kind, config));
}

RecheckResult recheck(const std::string& name, const json& inputs, const ExperimentConfig& config) {
    const auto& kind = lookup(name);
    ExperimentConfig c = config;
    c.mode = detail::inputs_mode(inputs);
    Context ctx = make_context(kind, c);
    RecheckResult r;
    try {
        auto out = kind.check(inputs, ctx);
        r.ok = out.ok;
        r.certificate = std::move(out.certificate);
        r.message = std::move(out.message);
    } catch (const std::exception& e) {
        r.ok = false;
        r.message = e.what();
    }
    return r;
}

json SuiteReport::summary() const {
    return json{{"type", "summary"},
                {"suite", suite},
                {"seed", seed},
                {"mode", std::string(to_string(mode))},
                {"tol", tol},
                {"trials", trials},
                {"skipped", skipped},
                {"failures", failures.size()},
                {"passed", passed()},
                {"worst_slack", worst_slack},
                {"evidence", evidence}};
}

void SuiteReport::write_jsonl(std::ostream& os) const {
    for (const auto& f : failures) {
        os << json{{"type", "failure"},
                   {"suite", suite},
                   {"trial", f.trial},
                   {"inputs", f.inputs},
                   {"certificate", f.certificate},
                   {"message", f.message}}
                  .dump()
           << '\n';
    }
    os << summary().dump() << '\n';
}

namespace {

template <class V>
V typed(const json& j, const char* key) {
    try {
        return j.at(key).get<V>();
    } catch (const json::exception&) {
        fail(ErrorCode::Config, std::string("config key '") + key + "' has the wrong type");
    }
}

}  // namespace

ExperimentConfig config_from_json(const json& j, ExperimentConfig c) {
    if (!j.is_object()) fail(ErrorCode::Config, "config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (key == "suite") {
            c.suite = typed<std::string>(j, "suite");
        } else if (key == "trials") {
            if (!value.is_number_unsigned()) fail(ErrorCode::Config, "trials must be a nonnegative integer");
            c.trials = value.get<std::size_t>();
        } else if (key == "degree") {
            if (!value.is_number_unsigned()) fail(ErrorCode::Config, "degree must be a positive integer");
            c.min_degree = c.max_degree = value.get<std::size_t>();
        } else if (key == "min_degree") {
            if (!value.is_number_unsigned()) fail(ErrorCode::Config, "min_degree must be a positive integer");
            c.min_degree = value.get<std::size_t>();
        } else if (key == "max_degree") {
            if (!value.is_number_unsigned()) fail(ErrorCode::Config, "max_degree must be a positive integer");
            c.max_degree = value.get<std::size_t>();
        } else if (key == "seed") {
            if (!value.is_number_unsigned()) fail(ErrorCode::Config, "seed must be a nonnegative integer");
            c.seed = value.get<std::uint64_t>();
        } else if (key == "mode") {
            try {
                c.mode = parse_mode(typed<std::string>(j, "mode"));
            } catch (const Error& e) {
                fail(ErrorCode::Config, e.what());
            }
        } else if (key == "tol") {
            if (!value.is_number()) fail(ErrorCode::Config, "tol must be a number");
            c.tol = value.get<double>();
        } else if (key == "out") {
            c.out = typed<std::string>(j, "out");
        } else if (key == "threads") {
            if (!value.is_number_unsigned()) fail(ErrorCode::Config, "threads must be a positive integer");
            c.threads = value.get<std::size_t>();
        } else if (key == "family") {
            c.family = typed<std::string>(j, "family");
        } else if (key == "chain_cap") {
            if (!value.is_number_unsigned()) fail(ErrorCode::Config, "chain_cap must be a positive integer");
            c.chain_cap = value.get<std::size_t>();
        } else {
            fail(ErrorCode::Config, "unknown config key '" + key + "'");
        }
    }
    return c;
}

json config_to_json(const ExperimentConfig& c) {
    json j{{"suite", c.suite}, {"trials", c.trials}, {"seed", c.seed}, {"threads", c.threads},
           {"chain_cap", c.chain_cap}};
    if (c.min_degree) j["min_degree"] = c.min_degree;
    if (c.max_degree) j["max_degree"] = c.max_degree;
    if (c.mode) j["mode"] = std::string(to_string(*c.mode));
    if (c.tol) j["tol"] = *c.tol;
    if (!c.out.empty()) j["out"] = c.out;
    if (!c.family.empty()) j["family"] = c.family;
    return j;
}

}  // namespace hypmaj::harness
