#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "hypmaj/hyperbolic.hpp"
#include "hypmaj/polynomial.hpp"
#include "hypmaj/scalar.hpp"

namespace hypmaj::test {

inline Rational q(const std::string& text) { return parse_rational(text); }

inline std::vector<Rational> qs(std::initializer_list<const char*> items) {
    std::vector<Rational> out;
    for (const char* s : items) out.push_back(parse_rational(s));
    return out;
}

inline HyperbolicPoly<Rational> rpoly(std::initializer_list<const char*> roots) {
    return HyperbolicPoly<Rational>::from_roots(qs(roots));
}

inline HyperbolicPoly<double> fpoly(std::vector<double> roots) {
    return HyperbolicPoly<double>::from_roots(std::move(roots));
}

inline Polynomial<Rational> rcoeffs(std::initializer_list<const char*> c) { return Polynomial<Rational>(qs(c)); }

}  // namespace hypmaj::test
