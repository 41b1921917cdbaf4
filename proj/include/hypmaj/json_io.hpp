#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hypmaj/contraction.hpp"
#include "hypmaj/errors.hpp"
#include "hypmaj/hyperbolic.hpp"
#include "hypmaj/lp_operators.hpp"
#include "hypmaj/majorization.hpp"
#include "hypmaj/polynomial.hpp"
#include "hypmaj/scalar.hpp"
#include "hypmaj/witness.hpp"

namespace hypmaj::io {

using json = nlohmann::json;

// Rationals travel as "p/q" strings, floats as JSON numbers.
inline json to_json_value(const Rational& q) { return format_rational(q); }
inline json to_json_value(double x) { return x; }

/// Reads a number or a "p/q" / decimal string into T. Numbers become exact
/// rationals in rational mode (the binary value of the double).
template <Scalar T>
T scalar_from_json(const json& j) {
    if (j.is_string()) {
        const Rational q = parse_rational(j.get<std::string>());
        if constexpr (is_exact_v<T>) {
            return q;
        } else {
            return to_double(q);
        }
    }
    if (j.is_number_integer()) {
        if constexpr (is_exact_v<T>) {
            return parse_rational(j.dump());
        } else {
            return j.get<double>();
        }
    }
    if (j.is_number()) {
        const double x = j.get<double>();
        if (!std::isfinite(x)) fail(ErrorCode::NonFinite, "non-finite number");
        return from_double<T>(x);
    }
    fail(ErrorCode::Parse, "expected a number or a rational string, got " + j.dump());
}

template <Scalar T>
json scalars_to_json(std::span<const T> v) {
    json out = json::array();
    for (const T& x : v) out.push_back(to_json_value(x));
    return out;
}

template <Scalar T>
std::vector<T> scalars_from_json(const json& j) {
    if (!j.is_array()) fail(ErrorCode::Parse, "expected an array of scalars");
    std::vector<T> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(scalar_from_json<T>(e));
    return out;
}

/// {"mode": ..., "roots": [...]}
template <Scalar T>
json poly_to_json(const HyperbolicPoly<T>& p) {
    return json{{"mode", std::string(to_string(mode_of_v<T>))}, {"roots", scalars_to_json<T>(p.roots())}};
}

/// {"mode": ..., "coeffs": [...]} low degree first.
template <Scalar T>
json coeffs_to_json(const Polynomial<T>& p) {
    return json{{"mode", std::string(to_string(mode_of_v<T>))}, {"coeffs", scalars_to_json<T>(p.coeffs())}};
}

template <Scalar T>
Polynomial<T> coeffs_from_json(const json& j) {
    const json& c = j.is_object() ? j.at("coeffs") : j;
    return Polynomial<T>(scalars_from_json<T>(c));
}

/// Mode declared by a polynomial document: the "mode" key, else rational when
/// any entry is a string, else float.
Mode declared_mode(const json& j);

using AnyPoly = std::variant<HyperbolicPoly<Rational>, HyperbolicPoly<double>>;

inline Mode mode_of(const AnyPoly& p) { return p.index() == 0 ? Mode::Rational : Mode::Float; }

/// Parses a polynomial document in the requested mode (or its declared one).
/// A "coeffs" document is factored numerically; in rational mode this only
/// succeeds when every root is recovered exactly. Throws ModeMismatch when an
/// explicit "mode" disagrees with `want`.
AnyPoly poly_from_json(const json& j, std::optional<Mode> want = std::nullopt);

template <Scalar T>
HyperbolicPoly<T> poly_as(const json& j) {
    return std::get<HyperbolicPoly<T>>(poly_from_json(j, mode_of_v<T>));
}

template <Scalar T>
json certificate_to_json(const MajorizationCertificate<T>& c) {
    return json{{"verdict", std::string(to_string(c.verdict))},
                {"sum_residual", to_json_value(c.sum_residual)},
                {"slacks", scalars_to_json<T>(c.slacks)},
                {"tol", to_json_value(c.tolerance)}};
}

template <Scalar T>
MajorizationCertificate<T> certificate_from_json(const json& j) {
    MajorizationCertificate<T> c;
    c.verdict = parse_verdict(j.at("verdict").get<std::string>());
    c.sum_residual = scalar_from_json<T>(j.at("sum_residual"));
    c.slacks = scalars_from_json<T>(j.at("slacks"));
    c.tolerance = scalar_from_json<T>(j.at("tol"));
    return c;
}

/// Row-major matrix of "p/q" strings.
json witness_to_json(const DoublyStochasticWitness& w);
DoublyStochasticWitness witness_from_json(const json& j);

template <Scalar T>
json chain_to_json(const ContractionChain<T>& c) {
    json steps = json::array();
    for (const auto& s : c.steps) steps.push_back(json{{"k", s.k}, {"l", s.l}, {"t", to_json_value(s.t)}});
    json out{{"source", poly_to_json(c.source)}, {"steps", std::move(steps)}, {"target", poly_to_json(c.target)}};
    if (!c.stage_ends.empty()) out["stage_ends"] = c.stage_ends;
    if (c.perturbation) out["perturbation"] = to_json_value(*c.perturbation);
    return out;
}

ContractionChain<Rational> chain_from_json(const json& j);

/// {"c", "m", "a", "b", "alphas"}; missing keys take the defaults c = 1,
/// m = a = b = 0, no alphas.
template <Scalar T>
json lp_to_json(const LPFunction<T>& phi) {
    return json{{"c", to_json_value(phi.c)},
                {"m", phi.m},
                {"a", to_json_value(phi.a)},
                {"b", to_json_value(phi.b)},
                {"alphas", scalars_to_json<T>(phi.alphas)}};
}

template <Scalar T>
LPFunction<T> lp_from_json(const json& j) {
    if (!j.is_object()) fail(ErrorCode::Parse, "LP function must be a JSON object");
    for (const auto& [key, _] : j.items()) {
        if (key != "c" && key != "m" && key != "a" && key != "b" && key != "alphas") {
            fail(ErrorCode::Parse, "unknown LP function key '" + key + "'");
        }
    }
    LPFunction<T> phi;
    if (j.contains("c")) phi.c = scalar_from_json<T>(j["c"]);
    if (j.contains("m")) {
        if (!j["m"].is_number_unsigned()) fail(ErrorCode::Parse, "m must be a nonnegative integer");
        phi.m = j["m"].get<std::size_t>();
    }
    if (j.contains("a")) phi.a = scalar_from_json<T>(j["a"]);
    if (j.contains("b")) phi.b = scalar_from_json<T>(j["b"]);
    if (j.contains("alphas")) phi.alphas = scalars_from_json<T>(j["alphas"]);
    phi.validate();
    return phi;
}

/// Loads a JSON document from a file path, or parses the argument itself when
/// it starts with '{' or '['.
json load_document(const std::string& path_or_inline);

}  // namespace hypmaj::io
