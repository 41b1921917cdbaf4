// Command-line front end: verification suites, counterexample hunts and the
// individual operations on hyperbolic polynomials.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "hypmaj/contraction.hpp"
#include "hypmaj/harness.hpp"
#include "hypmaj/json_io.hpp"
#include "hypmaj/lp_operators.hpp"
#include "hypmaj/pencil.hpp"
#include "hypmaj/witness.hpp"

namespace {

using namespace hypmaj;
using json = nlohmann::json;

constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct Globals {
    std::uint64_t seed = 1;
    std::size_t trials = 100;
    std::string mode;
    double tol = 0.0;
    std::string out;
    std::string config;
    std::size_t threads = 1;
    std::size_t degree = 0;
    std::size_t min_degree = 0;
    std::size_t max_degree = 0;
    std::string family;
    std::size_t chain_cap = kDefaultChainCap;
};

struct Flags {
    CLI::Option* seed;
    CLI::Option* trials;
    CLI::Option* mode;
    CLI::Option* tol;
    CLI::Option* out;
    CLI::Option* threads;
    CLI::Option* degree;
    CLI::Option* min_degree;
    CLI::Option* max_degree;
    CLI::Option* family;
    CLI::Option* chain_cap;
};

harness::ExperimentConfig build_config(const Globals& g, const Flags& f) {
    harness::ExperimentConfig c;
    if (!g.config.empty()) c = harness::config_from_json(io::load_document(g.config), c);
    if (f.seed->count()) c.seed = g.seed;
    if (f.trials->count()) c.trials = g.trials;
    if (f.mode->count()) c.mode = parse_mode(g.mode);
    if (f.tol->count()) c.tol = g.tol;
    if (f.out->count()) c.out = g.out;
    if (f.threads->count()) c.threads = g.threads;
    if (f.degree->count()) c.min_degree = c.max_degree = g.degree;
    if (f.min_degree->count()) c.min_degree = g.min_degree;
    if (f.max_degree->count()) c.max_degree = g.max_degree;
    if (f.family->count()) c.family = g.family;
    if (f.chain_cap->count()) c.chain_cap = g.chain_cap;
    return c;
}

// Writes to the --out path when given, else to stdout.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) fail(ErrorCode::Config, "cannot write '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

void emit(const harness::ExperimentConfig& c, const json& j) {
    Output out(c.out);
    out.stream() << j.dump(2) << '\n';
}

template <Scalar T>
T parse_scalar(const std::string& text) {
    const Rational q = parse_rational(text);
    if constexpr (is_exact_v<T>) {
        return q;
    } else {
        return to_double(q);
    }
}

template <Scalar T>
json polynomial_output(const Polynomial<T>& p, bool with_roots) {
    json j = io::coeffs_to_json(p);
    if (with_roots && p.degree() >= 1) j["roots"] = real_roots(p.monic());
    return j;
}

int report_run(const harness::SuiteReport& rep, const harness::ExperimentConfig& c) {
    {
        Output out(c.out);
        rep.write_jsonl(out.stream());
    }
    std::cerr << rep.suite << ": " << rep.trials << " trials, " << rep.failures.size() << " failures";
    if (rep.skipped) std::cerr << ", " << rep.skipped << " skipped";
    std::cerr << ", worst slack " << rep.worst_slack << ", " << std::fixed << std::setprecision(2) << rep.wall_seconds
              << " s" << std::defaultfloat << (rep.passed() ? "  PASS" : "  FAIL") << '\n';
    return rep.passed() ? kPass : kViolation;
}

template <class F>
decltype(auto) dispatch(Mode mode, F&& f) {
    if (mode == Mode::Rational) return f.template operator()<Rational>();
    return f.template operator()<double>();
}

std::optional<Mode> mode_flag(const Globals& g, const Flags& f, const harness::ExperimentConfig& c) {
    if (f.mode->count()) return parse_mode(g.mode);
    return c.mode;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral order on hyperbolic polynomials: checks, chains, operators and property suites"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    Flags f{};
    f.seed = app.add_option("--seed", g.seed, "Base seed; trial i uses a stream derived from seed xor i");
    f.trials = app.add_option("--trials", g.trials, "Number of trials");
    f.mode = app.add_option("--mode", g.mode, "Scalar mode")->check(CLI::IsMember({"rational", "float"}));
    f.tol = app.add_option("--tol", g.tol, "Relative slack tolerance")->check(CLI::NonNegativeNumber);
    f.out = app.add_option("--out", g.out, "Output file (default stdout)");
    app.add_option("--config", g.config, "JSON config with the same keys as the flags; flags win");
    f.threads = app.add_option("--threads", g.threads, "Worker threads for trials")->check(CLI::PositiveNumber);
    f.degree = app.add_option("--degree", g.degree, "Fix the degree")->check(CLI::PositiveNumber);
    f.min_degree = app.add_option("--min-degree", g.min_degree, "Smallest degree")->check(CLI::PositiveNumber);
    f.max_degree = app.add_option("--max-degree", g.max_degree, "Largest degree")->check(CLI::PositiveNumber);
    f.family = app.add_option("--family", g.family, "Generator family for hunts");
    f.chain_cap = app.add_option("--chain-cap", g.chain_cap, "Maximum chain length")->check(CLI::PositiveNumber);

    std::function<int()> action;

    // verify / hunt / list
    auto* verify = app.add_subcommand("verify", "Run a verification suite ('all' runs every suite)");
    std::string suite;
    std::string inputs_path;
    verify->add_option("suite", suite, "Suite name")->required();
    verify->add_option("--inputs", inputs_path, "Re-check one recorded failure (a report line or its inputs)");
    verify->callback([&] {
        action = [&] {
            auto c = build_config(g, f);
            if (!inputs_path.empty()) {
                json doc = io::load_document(inputs_path);
                const json& in = doc.contains("inputs") ? doc["inputs"] : doc;
                const auto r = harness::recheck(suite, in, c);
                emit(c, json{{"ok", r.ok}, {"message", r.message}, {"certificate", r.certificate}});
                return r.ok ? kPass : kViolation;
            }
            std::vector<std::string> names = suite == "all" ? harness::suite_names() : std::vector<std::string>{suite};
            int code = kPass;
            const std::string base_out = c.out;
            for (const auto& name : names) {
                c.suite = name;
                if (names.size() > 1 && !base_out.empty()) c.out = base_out + "." + name + ".jsonl";
                code = std::max(code, report_run(harness::run_suite(c), c));
            }
            return code;
        };
    });

    auto* hunt = app.add_subcommand("hunt", "Search for counterexamples to an open problem");
    std::string problem;
    hunt->add_option("problem", problem, "pb1, pb2 or pb3")->required()->check(CLI::IsMember({"pb1", "pb2", "pb3"}));
    hunt->callback([&] {
        action = [&] {
            auto c = build_config(g, f);
            c.suite = problem;
            return report_run(harness::run_hunt(problem, c), c);
        };
    });

    auto* list = app.add_subcommand("list", "List suites and hunts");
    list->callback([&] {
        action = [&] {
            std::cout << "suites:";
            for (const auto& s : harness::suite_names()) std::cout << ' ' << s;
            std::cout << "\nhunts:";
            for (const auto& s : harness::hunt_names()) std::cout << ' ' << s;
            std::cout << '\n';
            return kPass;
        };
    });

    // majorize
    auto* majorize = app.add_subcommand("majorize", "Majorization of root tuples");
    majorize->require_subcommand(1);
    std::string x_doc, y_doc, p_doc, q_doc;
    auto* mcheck = majorize->add_subcommand("check", "Certificate for X ≺ Y");
    mcheck->add_option("--x", x_doc, "Polynomial JSON (file or inline)")->required();
    mcheck->add_option("--y", y_doc, "Polynomial JSON (file or inline)")->required();
    mcheck->callback([&] {
        action = [&] {
            const auto c = build_config(g, f);
            const auto want = mode_flag(g, f, c);
            const auto x = io::poly_from_json(io::load_document(x_doc), want);
            const auto y = io::poly_from_json(io::load_document(y_doc), want ? want : std::optional{io::mode_of(x)});
            return std::visit(
                [&]<class PX>(const PX& px) {
                    using T = typename PX::scalar_type;
                    const auto& py = std::get<HyperbolicPoly<T>>(y);
                    const T tol = c.tol ? from_double<T>(*c.tol) : T(-1);
                    const auto cert = check_majorization(px, py, tol);
                    emit(c, io::certificate_to_json(cert));
                    return is_majorized(cert.verdict) ? kPass : kViolation;
                },
                x);
        };
    });

    auto* mwitness = majorize->add_subcommand("witness", "Doubly stochastic A with X = A·Y (rational mode)");
    mwitness->add_option("--x", x_doc, "Polynomial JSON")->required();
    mwitness->add_option("--y", y_doc, "Polynomial JSON")->required();
    mwitness->callback([&] {
        action = [&] {
            const auto c = build_config(g, f);
            const auto want = mode_flag(g, f, c);
            const auto x = io::poly_from_json(io::load_document(x_doc), want);
            const auto y = io::poly_from_json(io::load_document(y_doc), io::mode_of(x));
            if (io::mode_of(x) != Mode::Rational) fail(ErrorCode::FloatModeUnsupported, "witnesses are exact objects");
            const auto& px = std::get<HyperbolicPoly<Rational>>(x);
            const auto& py = std::get<HyperbolicPoly<Rational>>(y);
            emit(c, io::witness_to_json(build_witness(px.roots(), py.roots())));
            return kPass;
        };
    });

    DecomposeOptions dopts;
    std::string perturb;
    auto decompose_action = [&] {
        auto c = build_config(g, f);
        const auto want = mode_flag(g, f, c).value_or(Mode::Rational);
        if (want != Mode::Rational) fail(ErrorCode::FloatModeUnsupported, "decomposition runs in rational mode");
        const auto p = io::poly_as<Rational>(io::load_document(p_doc));
        const auto q = io::poly_as<Rational>(io::load_document(q_doc));
        dopts.cap = c.chain_cap;
        if (!perturb.empty()) dopts.perturb_eps = parse_rational(perturb);
        emit(c, io::chain_to_json(decompose_majorization(p, q, dopts)));
        return kPass;
    };
    auto* mchain = majorize->add_subcommand("chain", "Contraction chain from P down to Q");
    mchain->add_option("--p", p_doc, "Upper polynomial")->required();
    mchain->add_option("--q", q_doc, "Lower polynomial")->required();
    mchain->add_option("--perturb", perturb, "Perturb multiple roots by this epsilon first");
    mchain->callback([&] { action = decompose_action; });

    // chain
    auto* chain = app.add_subcommand("chain", "Contraction chains");
    chain->require_subcommand(1);
    auto* cdecomp = chain->add_subcommand("decompose", "Contraction chain from P down to Q");
    cdecomp->add_option("--p", p_doc, "Upper polynomial")->required();
    cdecomp->add_option("--q", q_doc, "Lower polynomial")->required();
    cdecomp->add_option("--perturb", perturb, "Perturb multiple roots by this epsilon first");
    cdecomp->callback([&] { action = decompose_action; });

    std::string chain_doc;
    auto* cverify = chain->add_subcommand("verify", "Replay a chain exactly");
    cverify->add_option("--chain", chain_doc, "Chain JSON")->required();
    cverify->callback([&] {
        action = [&] {
            const auto c = build_config(g, f);
            const auto ch = io::chain_from_json(io::load_document(chain_doc));
            bool simple = true;
            for (const auto& s : ch.steps) simple = simple && s.simple();
            const bool ok = verify_chain(ch);
            emit(c, json{{"valid", ok}, {"steps", ch.steps.size()}, {"all_simple", simple}});
            return ok ? kPass : kViolation;
        };
    });

    std::size_t budget = 4;
    auto* cpair = chain->add_subcommand("random-pair", "Random strict P and a contraction Q of it");
    cpair->add_option("--budget", budget, "Number of random contractions");
    cpair->callback([&] {
        action = [&] {
            const auto c = build_config(g, f);
            const std::size_t n = c.min_degree ? c.min_degree : 4;
            const auto mode = c.mode.value_or(Mode::Rational);
            json j;
            if (mode == Mode::Rational) {
                const auto [p, q] = random_comparable_pair<Rational>(c.seed, n, budget);
                j = json{{"p", io::poly_to_json(p)}, {"q", io::poly_to_json(q)}};
            } else {
                const auto [p, q] = random_comparable_pair<double>(c.seed, n, budget);
                j = json{{"p", io::poly_to_json(p)}, {"q", io::poly_to_json(q)}};
            }
            emit(c, j);
            return kPass;
        };
    });

    // op
    auto* op = app.add_subcommand("op", "Differential and diagonal operators");
    op->require_subcommand(1);
    std::string phi_doc, poly_doc, lambda_text, a_text, s_doc, gamma_doc;
    std::size_t op_degree = 0;
    bool normalized = false;
    bool with_roots = false;
    std::vector<std::size_t> laguerre;

    // Polynomial documents: {"roots"} or {"coeffs"}; coefficient documents need
    // not be real-rooted here.
    auto doc_mode = [&](const harness::ExperimentConfig& c, const json& doc) {
        if (auto m = mode_flag(g, f, c)) return *m;
        return io::declared_mode(doc);
    };
    auto load_coeffs = [&]<Scalar T>(const json& doc) {
        if (doc.is_object() && doc.contains("roots")) return io::poly_as<T>(doc).coefficients();
        return io::coeffs_from_json<T>(doc);
    };

    auto* oapply = op->add_subcommand("apply", "f(D)[P], optionally normalised by k_n");
    oapply->add_option("--phi", phi_doc, "LP function JSON")->required();
    oapply->add_option("--poly", poly_doc, "Polynomial JSON (roots or coeffs)")->required();
    oapply->add_flag("--normalized", normalized, "Scale by k_n so monic inputs give monic outputs");
    oapply->add_flag("--roots", with_roots, "Also extract the roots");
    oapply->callback([&] {
        action = [&] {
            const auto c = build_config(g, f);
            const auto doc = io::load_document(poly_doc);
            const auto phi_j = io::load_document(phi_doc);
            return dispatch(doc_mode(c, doc), [&]<Scalar T>() {
                const auto p = load_coeffs.template operator()<T>(doc);
                const auto phi = io::lp_from_json<T>(phi_j);
                const auto n = static_cast<std::size_t>(std::max(p.degree(), 0L));
                const auto opr = DiffOperator<T>::from_lp(phi, n);
                emit(c, polynomial_output(normalized ? apply_normalized(opr, p) : apply(opr, p), with_roots));
                return kPass;
            });
        };
    });

    auto* oappell = op->add_subcommand("appell", "Appell polynomial f(D)[x^n]");
    oappell->add_option("--phi", phi_doc, "LP function JSON")->required();
    oappell->add_option("--degree", op_degree, "Degree n")->required();
    oappell->add_flag("--normalized", normalized, "Scale by k_n");
    oappell->add_flag("--roots", with_roots, "Also extract the roots");
    oappell->callback([&] {
        action = [&] {
            const auto c = build_config(g, f);
            const auto phi_j = io::load_document(phi_doc);
            return dispatch(c.mode.value_or(Mode::Rational), [&]<Scalar T>() {
                const auto phi = io::lp_from_json<T>(phi_j);
                emit(c, polynomial_output(appell(phi, op_degree, normalized), with_roots));
                return kPass;
            });
        };
    });

    auto* oshift = op->add_subcommand("shift-pencil", "P - lambda P'");
    oshift->add_option("--poly", poly_doc, "Polynomial JSON")->required();
    oshift->add_option("--lambda", lambda_text, "lambda (\"p/q\" or decimal)")->required();
    oshift->add_flag("--roots", with_roots, "Also extract the roots");
    oshift->callback([&] {
        action = [&] {
            const auto c = build_config(g, f);
            const auto doc = io::load_document(poly_doc);
            return dispatch(doc_mode(c, doc), [&]<Scalar T>() {
                const auto p = load_coeffs.template operator()<T>(doc);
                emit(c, polynomial_output(shift_pencil(p, parse_scalar<T>(lambda_text)), with_roots));
                return kPass;
            });
        };
    });

    auto* ogauss = op->add_subcommand("gaussian", "exp(-a D^2)[P]");
    ogauss->add_option("--poly", poly_doc, "Polynomial JSON")->required();
    ogauss->add_option("--a", a_text, "a (\"p/q\" or decimal)")->required();
    ogauss->add_flag("--roots", with_roots, "Also extract the roots");
    ogauss->callback([&] {
        action = [&] {
            const auto c = build_config(g, f);
            const auto doc = io::load_document(poly_doc);
            return dispatch(doc_mode(c, doc), [&]<Scalar T>() {
                const auto p = load_coeffs.template operator()<T>(doc);
                const T a = parse_scalar<T>(a_text);
                if (!gaussian_in_lp(a)) std::cerr << "note: a < 0, the operator is outside the class\n";
                emit(c, polynomial_output(gaussian_op(p, a), with_roots));
                return kPass;
            });
        };
    });

    auto* odeform = op->add_subcommand("deform", "Deformed LP function: a -> s_0 a, alpha_k -> s_k alpha_k");
    odeform->add_option("--phi", phi_doc, "LP function JSON")->required();
    odeform->add_option("--s", s_doc, "JSON array s_0, s_1, ...")->required();
    odeform->callback([&] {
        action = [&] {
            const auto c = build_config(g, f);
            const auto phi_j = io::load_document(phi_doc);
            const auto s_j = io::load_document(s_doc);
            return dispatch(c.mode.value_or(Mode::Rational), [&]<Scalar T>() {
                const auto phi = io::lp_from_json<T>(phi_j);
                const DeformationVector<T> s{io::scalars_from_json<T>(s_j)};
                emit(c, io::lp_to_json(deform(phi, s)));
                return kPass;
            });
        };
    });

    auto* omult = op->add_subcommand("multiplier", "Diagonal operator x^k -> gamma_k x^k");
    omult->add_option("--poly", poly_doc, "Polynomial JSON")->required();
    auto* gamma_opt = omult->add_option("--gamma", gamma_doc, "JSON array gamma_0, gamma_1, ...");
    omult->add_option("--laguerre", laguerre, "m p: gamma_k = H(k + p), H(x) = x(x-1)...(x-m+1)")
        ->expected(2)
        ->excludes(gamma_opt);
    omult->add_flag("--normalized", normalized, "Divide by gamma_n");
    omult->add_flag("--roots", with_roots, "Also extract the roots");
    omult->callback([&] {
        action = [&] {
            const auto c = build_config(g, f);
            if (gamma_doc.empty() && laguerre.empty()) fail(ErrorCode::Config, "give --gamma or --laguerre");
            const auto doc = io::load_document(poly_doc);
            return dispatch(doc_mode(c, doc), [&]<Scalar T>() {
                const auto p = load_coeffs.template operator()<T>(doc);
                const auto len = static_cast<std::size_t>(std::max(p.degree(), 0L)) + 1;
                const auto gam = laguerre.empty() ? MultiplierSequence<T>{io::scalars_from_json<T>(io::load_document(gamma_doc))}
                                                  : laguerre_ms<T>(laguerre[0], laguerre[1], len);
                emit(c, polynomial_output(multiplier_apply(gam, p, normalized), with_roots));
                return kPass;
            });
        };
    });

    // pencil
    auto* pencil = app.add_subcommand("pencil", "The pencil P - lambda P'");
    pencil->require_subcommand(1);
    std::vector<double> grid_spec;
    auto* pscan = pencil->add_subcommand("scan", "CSV of roots and partial sums over a lambda grid");
    pscan->add_option("--poly", poly_doc, "Polynomial JSON")->required();
    pscan->add_option("--grid", grid_spec, "L N: N uniform points on [-L, L] (default 1 + 2 max|x|, 201)")
        ->expected(2);
    pscan->callback([&] {
        action = [&] {
            const auto c = build_config(g, f);
            const auto p = to_float(io::poly_as<double>(io::load_document(poly_doc)));
            std::vector<double> grid;
            if (grid_spec.empty()) {
                grid = default_grid(p);
            } else {
                if (grid_spec[0] <= 0 || grid_spec[1] < 2) fail(ErrorCode::Config, "--grid needs L > 0 and N >= 2");
                grid = uniform_grid(grid_spec[0], static_cast<std::size_t>(grid_spec[1]));
            }
            Output out(c.out);
            write_pencil_csv(out.stream(), p, grid);
            const auto rep = scan_monotonicity(p, grid, c.tol.value_or(1e-7));
            std::cerr << "monotonicity violations: " << rep.total_violations()
                      << ", constancy error: " << rep.constancy_error << '\n';
            return rep.total_violations() == 0 ? kPass : kViolation;
        };
    });

    auto* pcheck = pencil->add_subcommand("check", "Certificate for Z(Q - lambda Q') ≺ Z(P - lambda P')");
    pcheck->add_option("--p", p_doc, "Upper polynomial")->required();
    pcheck->add_option("--q", q_doc, "Lower polynomial")->required();
    pcheck->add_option("--lambda", lambda_text, "lambda")->required();
    pcheck->callback([&] {
        action = [&] {
            const auto c = build_config(g, f);
            const auto p = io::poly_as<double>(io::load_document(p_doc));
            const auto q = io::poly_as<double>(io::load_document(q_doc));
            const double tol = c.tol ? *c.tol * (1.0 + std::max(std::fabs(p.roots().front()), std::fabs(p.roots().back())))
                                     : -1.0;
            const auto cert = pencil_majorization_check(p, q, to_double(parse_rational(lambda_text)), tol);
            emit(c, io::certificate_to_json(cert));
            return is_majorized(cert.verdict) ? kPass : kViolation;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    try {
        return action ? action() : kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::NotMajorized ? kViolation : kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
