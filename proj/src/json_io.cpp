#include "hypmaj/json_io.hpp"

#include <fstream>
#include <sstream>

namespace hypmaj::io {

namespace {

bool any_string(const json& arr) {
    if (!arr.is_array()) return false;
    for (const auto& e : arr) {
        if (e.is_string()) return true;
    }
    return false;
}

const json& payload(const json& j) {
    if (j.is_array()) return j;
    if (j.contains("roots")) return j["roots"];
    if (j.contains("coeffs")) return j["coeffs"];
    fail(ErrorCode::Parse, "polynomial needs \"roots\" or \"coeffs\"");
}

// Exact roots of a rational polynomial whose roots all have small
// denominators, recovered from float estimates.
HyperbolicPoly<Rational> exact_roots_from_coeffs(const Polynomial<Rational>& p) {
    if (p.degree() < 1) fail(ErrorCode::DegreeZero, "polynomial is constant");
    const auto monic = p.monic();
    const auto approx = real_roots(monic);
    std::vector<Rational> roots;
    for (double x : approx) roots.push_back(nearest_rational(x, std::uint64_t{1} << 20));
    if (!(expand_roots<Rational>(roots) == monic)) {
        fail(ErrorCode::ModeMismatch, "coefficient import in rational mode needs exactly rational roots");
    }
    return HyperbolicPoly<Rational>::from_roots(std::move(roots));
}

}  // namespace

Mode declared_mode(const json& j) {
    if (j.is_object() && j.contains("mode")) return parse_mode(j["mode"].get<std::string>());
    return any_string(payload(j)) ? Mode::Rational : Mode::Float;
}

AnyPoly poly_from_json(const json& j, std::optional<Mode> want) {
    if (!j.is_object() && !j.is_array()) fail(ErrorCode::Parse, "polynomial must be an object or an array of roots");
    if (j.is_object()) {
        for (const auto& [key, _] : j.items()) {
            if (key != "mode" && key != "roots" && key != "coeffs") {
                fail(ErrorCode::Parse, "unknown polynomial key '" + key + "'");
            }
        }
        if (j.contains("roots") && j.contains("coeffs")) fail(ErrorCode::Parse, "give either roots or coeffs");
    }
    const bool explicit_mode = j.is_object() && j.contains("mode");
    const Mode declared = declared_mode(j);
    if (want && explicit_mode && *want != declared) {
        fail(ErrorCode::ModeMismatch, "polynomial is declared " + std::string(to_string(declared)) +
                                          " but " + std::string(to_string(*want)) + " mode was requested");
    }
    const Mode mode = want.value_or(declared);
    const bool coeff_form = j.is_object() && j.contains("coeffs");
    if (coeff_form) {
        if (mode == Mode::Rational) return exact_roots_from_coeffs(coeffs_from_json<Rational>(j));
        const auto c = coeffs_from_json<double>(j);
        if (c.degree() < 1) fail(ErrorCode::DegreeZero, "polynomial is constant");
        return hyperbolic_from_coefficients(c.monic());
    }
    if (mode == Mode::Rational) return HyperbolicPoly<Rational>::from_roots(scalars_from_json<Rational>(payload(j)));
    return HyperbolicPoly<double>::from_roots(scalars_from_json<double>(payload(j)));
}

json witness_to_json(const DoublyStochasticWitness& w) {
    json rows = json::array();
    for (const auto& row : w.matrix) rows.push_back(scalars_to_json<Rational>(row));
    return rows;
}

DoublyStochasticWitness witness_from_json(const json& j) {
    if (!j.is_array()) fail(ErrorCode::Parse, "witness must be an array of rows");
    DoublyStochasticWitness w;
    for (const auto& row : j) {
        w.matrix.push_back(scalars_from_json<Rational>(row));
        if (w.matrix.back().size() != j.size()) fail(ErrorCode::Parse, "witness matrix must be square");
    }
    return w;
}

ContractionChain<Rational> chain_from_json(const json& j) {
    ContractionChain<Rational> c{poly_as<Rational>(j.at("source")), {}, poly_as<Rational>(j.at("target")), {},
                                 std::nullopt};
    for (const auto& s : j.at("steps")) {
        c.steps.push_back({s.at("k").get<std::size_t>(), s.at("l").get<std::size_t>(),
                           scalar_from_json<Rational>(s.at("t"))});
    }
    if (j.contains("stage_ends")) c.stage_ends = j["stage_ends"].get<std::vector<std::size_t>>();
    if (j.contains("perturbation")) c.perturbation = scalar_from_json<Rational>(j["perturbation"]);
    return c;
}

json load_document(const std::string& path_or_inline) {
    const auto first = path_or_inline.find_first_not_of(" \t\r\n");
    try {
        if (first != std::string::npos && (path_or_inline[first] == '{' || path_or_inline[first] == '[')) {
            return json::parse(path_or_inline);
        }
        std::ifstream in(path_or_inline);
        if (!in) fail(ErrorCode::Config, "cannot open '" + path_or_inline + "'");
        return json::parse(in);
    } catch (const json::exception& e) {
        fail(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace hypmaj::io
