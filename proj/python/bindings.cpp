#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hypmaj/contraction.hpp"
#include "hypmaj/harness.hpp"
#include "hypmaj/json_io.hpp"
#include "hypmaj/lp_operators.hpp"
#include "hypmaj/pencil.hpp"
#include "hypmaj/real_roots.hpp"
#include "hypmaj/witness.hpp"

namespace py = pybind11;
using namespace hypmaj;
using json = nlohmann::json;

namespace {

// Python values cross the boundary as JSON: Fractions become "p/q" strings.
json to_json(const py::handle& obj) {
    const py::object fraction = py::module_::import("fractions").attr("Fraction");
    if (obj.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
    if (py::isinstance<py::int_>(obj)) return json::parse(py::str(obj).cast<std::string>());
    if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
    if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
    if (py::isinstance(obj, fraction)) return py::str(obj).cast<std::string>();
    if (py::isinstance<py::dict>(obj)) {
        json out = json::object();
        for (const auto& [k, v] : obj.cast<py::dict>()) out[py::str(k).cast<std::string>()] = to_json(v);
        return out;
    }
    if (py::isinstance<py::iterable>(obj)) {
        json out = json::array();
        for (const auto& v : obj) out.push_back(to_json(v));
        return out;
    }
    throw py::type_error("unsupported value: " + py::repr(obj).cast<std::string>());
}

py::object from_json(const json& j) {
    const py::object loads = py::module_::import("json").attr("loads");
    return loads(j.dump());
}

py::object to_py(const Rational& q) {
    const py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(format_rational(q));
}
py::object to_py(double x) { return py::float_(x); }

template <Scalar T>
py::list to_py_list(std::span<const T> v) {
    py::list out;
    for (const T& x : v) out.append(to_py(x));
    return out;
}

// Rational unless some entry is a float, or the caller says otherwise.
Mode infer_mode(const json& values, const std::optional<std::string>& mode) {
    if (mode) return parse_mode(*mode);
    bool any_float = false;
    std::function<void(const json&)> walk = [&](const json& v) {
        if (v.is_number_float()) any_float = true;
        if (v.is_structured()) {
            for (const auto& e : v) walk(e);
        }
    };
    walk(values);
    return any_float ? Mode::Float : Mode::Rational;
}

template <class F>
decltype(auto) dispatch(Mode mode, F&& f) {
    if (mode == Mode::Rational) return f.template operator()<Rational>();
    return f.template operator()<double>();
}

template <Scalar T>
HyperbolicPoly<T> poly_of(const json& roots) {
    return HyperbolicPoly<T>::from_roots(io::scalars_from_json<T>(roots));
}

using Opt = std::optional<std::string>;

harness::ExperimentConfig config_of(const std::string& name, const py::kwargs& kw) {
    json j = to_json(kw);
    j["suite"] = name;
    return harness::config_from_json(j);
}

py::dict report_of(const harness::SuiteReport& r) {
    py::dict d = from_json(r.summary());
    py::list failures;
    for (const auto& f : r.failures) {
        failures.append(from_json(json{{"trial", f.trial}, {"inputs", f.inputs}, {"certificate", f.certificate},
                                       {"message", f.message}}));
    }
    d["failure_records"] = failures;
    d["wall_seconds"] = r.wall_seconds;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hyperbolic polynomials under the spectral order";

    py::register_exception<Error>(m, "HypmajError", PyExc_ValueError);

    m.def(
        "coefficients",
        [](const py::iterable& roots, const Opt& mode) {
            const json r = to_json(roots);
            return dispatch(infer_mode(r, mode),
                            [&]<Scalar T>() { return to_py_list<T>(poly_of<T>(r).coefficients().coeffs()); });
        },
        py::arg("roots"), py::arg("mode") = py::none(), "Coefficients, low degree first, of the monic polynomial with these roots.");

    m.def(
        "real_roots",
        [](const py::iterable& coeffs, double tol) {
            const json c = to_json(coeffs);
            if (infer_mode(c, std::nullopt) == Mode::Rational) {
                return real_roots(Polynomial<Rational>(io::scalars_from_json<Rational>(c)), tol);
            }
            return real_roots(io::scalars_from_json<double>(c), tol);
        },
        py::arg("coeffs"), py::arg("tol") = 0.0, "Real roots of a real-rooted polynomial, ascending.");

    m.def(
        "is_real_rooted",
        [](const py::iterable& coeffs) {
            return is_real_rooted(Polynomial<Rational>(io::scalars_from_json<Rational>(to_json(coeffs))));
        },
        py::arg("coeffs"), "Exact real-rootedness test on rational coefficients.");

    m.def(
        "derivative_roots",
        [](const py::iterable& roots) {
            const json r = to_json(roots);
            return dispatch(infer_mode(r, std::nullopt), [&]<Scalar T>() {
                const auto d = derivative(poly_of<T>(r));
                return std::vector<double>(d.roots().begin(), d.roots().end());
            });
        },
        py::arg("roots"));

    m.def(
        "check_majorization",
        [](const py::iterable& x, const py::iterable& y, std::optional<double> tol, const Opt& mode) {
            const json xs = to_json(x);
            const json ys = to_json(y);
            return dispatch(infer_mode(json::array({xs, ys}), mode), [&]<Scalar T>() {
                const auto a = io::scalars_from_json<T>(xs);
                const auto b = io::scalars_from_json<T>(ys);
                const T t = tol ? from_double<T>(*tol) : T(-1);
                return from_json(io::certificate_to_json(check_majorization<T>(a, b, t)));
            });
        },
        py::arg("x"), py::arg("y"), py::arg("tol") = py::none(), py::arg("mode") = py::none(),
        "Certificate for X ≺ Y: verdict, sum residual, top-k slacks and tolerance.");

    m.def(
        "hinge_oracle",
        [](const py::iterable& x, const py::iterable& y, const Opt& mode) {
            const json xs = to_json(x);
            const json ys = to_json(y);
            return dispatch(infer_mode(json::array({xs, ys}), mode), [&]<Scalar T>() {
                const auto a = io::scalars_from_json<T>(xs);
                const auto b = io::scalars_from_json<T>(ys);
                return hinge_oracle<T>(a, b).all_satisfied();
            });
        },
        py::arg("x"), py::arg("y"), py::arg("mode") = py::none());

    m.def(
        "witness",
        [](const py::iterable& x, const py::iterable& y) {
            const auto a = io::scalars_from_json<Rational>(to_json(x));
            const auto b = io::scalars_from_json<Rational>(to_json(y));
            py::list rows;
            for (const auto& row : build_witness(a, b).matrix) rows.append(to_py_list<Rational>(row));
            return rows;
        },
        py::arg("x"), py::arg("y"), "Doubly stochastic A with sorted X = A · sorted Y, exact.");

    m.def(
        "matching_distance",
        [](const py::iterable& x, const py::iterable& y) {
            const json xs = to_json(x);
            const json ys = to_json(y);
            return dispatch(infer_mode(json::array({xs, ys}), std::nullopt), [&]<Scalar T>() {
                const auto a = io::scalars_from_json<T>(xs);
                const auto b = io::scalars_from_json<T>(ys);
                return to_py(matching_distance<T>(a, b));
            });
        },
        py::arg("x"), py::arg("y"));

    m.def(
        "apply_contraction",
        [](const py::iterable& roots, std::size_t k, std::size_t l, const py::object& t) {
            const json r = to_json(roots);
            const json tj = to_json(t);
            return dispatch(infer_mode(json::array({r, tj}), std::nullopt), [&]<Scalar T>() {
                const auto out = apply_contraction(poly_of<T>(r), ContractionStep<T>{k, l, io::scalar_from_json<T>(tj)});
                return to_py_list<T>(out.roots());
            });
        },
        py::arg("roots"), py::arg("k"), py::arg("l"), py::arg("t"), "T(k, l; t) with 1-based indices.");

    m.def(
        "decompose",
        [](const py::iterable& p, const py::iterable& q, const py::object& perturb, std::size_t cap) {
            DecomposeOptions opt;
            opt.cap = cap;
            if (!perturb.is_none()) opt.perturb_eps = io::scalar_from_json<Rational>(to_json(perturb));
            const auto c = decompose_majorization(poly_of<Rational>(to_json(p)), poly_of<Rational>(to_json(q)), opt);
            return from_json(io::chain_to_json(c));
        },
        py::arg("p"), py::arg("q"), py::arg("perturb") = py::none(), py::arg("cap") = kDefaultChainCap,
        "Chain of simple nondegenerate contractions from P down to Q (chain JSON schema).");

    m.def(
        "verify_chain", [](const py::dict& chain) { return verify_chain(io::chain_from_json(to_json(chain))); },
        py::arg("chain"));

    m.def(
        "apply_operator",
        [](const py::dict& phi, const py::iterable& coeffs, bool normalized, const Opt& mode) {
            const json c = to_json(coeffs);
            const json f = to_json(phi);
            return dispatch(infer_mode(json::array({c, f}), mode), [&]<Scalar T>() {
                const Polynomial<T> p(io::scalars_from_json<T>(c));
                const auto op = DiffOperator<T>::from_lp(io::lp_from_json<T>(f), std::max(p.degree(), 0L));
                return to_py_list<T>((normalized ? apply_normalized(op, p) : apply(op, p)).coeffs());
            });
        },
        py::arg("phi"), py::arg("coeffs"), py::arg("normalized") = false, py::arg("mode") = py::none(),
        "φ(D)[P] for an LP function given as {c, m, a, b, alphas}.");

    m.def(
        "appell",
        [](const py::dict& phi, std::size_t n, bool normalized, const Opt& mode) {
            const json f = to_json(phi);
            return dispatch(infer_mode(f, mode), [&]<Scalar T>() {
                return to_py_list<T>(appell(io::lp_from_json<T>(f), n, normalized).coeffs());
            });
        },
        py::arg("phi"), py::arg("n"), py::arg("normalized") = false, py::arg("mode") = py::none());

    m.def(
        "shift_pencil",
        [](const py::iterable& coeffs, const py::object& lambda) {
            const json c = to_json(coeffs);
            const json l = to_json(lambda);
            return dispatch(infer_mode(json::array({c, l}), std::nullopt), [&]<Scalar T>() {
                return to_py_list<T>(shift_pencil(Polynomial<T>(io::scalars_from_json<T>(c)), io::scalar_from_json<T>(l)).coeffs());
            });
        },
        py::arg("coeffs"), py::arg("lam"));

    m.def(
        "gaussian",
        [](const py::iterable& coeffs, const py::object& a) {
            const json c = to_json(coeffs);
            const json aj = to_json(a);
            return dispatch(infer_mode(json::array({c, aj}), std::nullopt), [&]<Scalar T>() {
                return to_py_list<T>(gaussian_op(Polynomial<T>(io::scalars_from_json<T>(c)), io::scalar_from_json<T>(aj)).coeffs());
            });
        },
        py::arg("coeffs"), py::arg("a"), "e^{-aD²}[P].");

    m.def(
        "deform",
        [](const py::dict& phi, const py::iterable& s) {
            const json f = to_json(phi);
            const json sj = to_json(s);
            return dispatch(infer_mode(json::array({f, sj}), std::nullopt), [&]<Scalar T>() {
                return from_json(io::lp_to_json(deform(io::lp_from_json<T>(f), DeformationVector<T>{io::scalars_from_json<T>(sj)})));
            });
        },
        py::arg("phi"), py::arg("s"));

    m.def(
        "multiplier",
        [](const py::iterable& coeffs, const py::iterable& gammas, bool normalized) {
            const json c = to_json(coeffs);
            const json g = to_json(gammas);
            return dispatch(infer_mode(json::array({c, g}), std::nullopt), [&]<Scalar T>() {
                const MultiplierSequence<T> seq{io::scalars_from_json<T>(g)};
                return to_py_list<T>(multiplier_apply(seq, Polynomial<T>(io::scalars_from_json<T>(c)), normalized).coeffs());
            });
        },
        py::arg("coeffs"), py::arg("gammas"), py::arg("normalized") = false);

    m.def(
        "laguerre_ms",
        [](std::size_t mm, std::size_t p, std::size_t length) {
            return to_py_list<Rational>(laguerre_ms<Rational>(mm, p, length).gammas);
        },
        py::arg("m"), py::arg("p"), py::arg("length"));

    m.def(
        "pencil_at",
        [](const std::vector<double>& roots, double lambda) {
            const auto s = pencil_at(HyperbolicPoly<double>::from_roots(roots), lambda);
            py::dict d;
            d["lambda"] = s.lambda;
            d["roots"] = s.roots;
            d["critical"] = s.critical;
            d["partial_sums"] = s.partial_sums;
            return d;
        },
        py::arg("roots"), py::arg("lam"));

    m.def(
        "scan_monotonicity",
        [](const std::vector<double>& roots, std::optional<std::vector<double>> grid, double slack) {
            const auto p = HyperbolicPoly<double>::from_roots(roots);
            const auto g = grid ? *grid : default_grid(p);
            const auto rep = scan_monotonicity(p, g, slack);
            py::dict d;
            d["violations"] = rep.total_violations();
            d["constancy_error"] = rep.constancy_error;
            d["worst_concavity"] = rep.worst_concavity;
            return d;
        },
        py::arg("roots"), py::arg("grid") = py::none(), py::arg("slack") = 1e-7);

    m.def(
        "pencil_check",
        [](const std::vector<double>& p, const std::vector<double>& q, double lambda) {
            return from_json(io::certificate_to_json(pencil_majorization_check(
                HyperbolicPoly<double>::from_roots(p), HyperbolicPoly<double>::from_roots(q), lambda)));
        },
        py::arg("p"), py::arg("q"), py::arg("lam"), "Certificate for Z(Q - λQ') ≺ Z(P - λP').");

    m.def("suite_names", &harness::suite_names);
    m.def("hunt_names", &harness::hunt_names);

    m.def(
        "run_suite",
        [](const std::string& name, const py::kwargs& kw) {
            const auto c = config_of(name, kw);
            harness::SuiteReport rep;
            {
                py::gil_scoped_release release;
                rep = harness::run_suite(c);
            }
            return report_of(rep);
        },
        py::arg("name"), "Runs a suite; keyword arguments follow the config-file keys.");

    m.def(
        "run_hunt",
        [](const std::string& name, const py::kwargs& kw) {
            const auto c = config_of(name, kw);
            harness::SuiteReport rep;
            {
                py::gil_scoped_release release;
                rep = harness::run_hunt(name, c);
            }
            return report_of(rep);
        },
        py::arg("problem"));
}
