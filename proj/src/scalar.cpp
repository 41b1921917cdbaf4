#include "hypmaj/scalar.hpp"

#include <algorithm>
#include <cctype>

#include "hypmaj/errors.hpp"

namespace hypmaj {

std::string_view to_string(Mode mode) noexcept {
    return mode == Mode::Rational ? "rational" : "float";
}

Mode parse_mode(std::string_view text) {
    if (text == "rational" || text == "exact") return Mode::Rational;
    if (text == "float" || text == "double") return Mode::Float;
    fail(ErrorCode::Parse, "unknown scalar mode '" + std::string(text) + "'");
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

mpz_class parse_integer(std::string_view s) {
    if (!is_integer_literal(s)) fail(ErrorCode::Parse, "bad integer '" + std::string(s) + "'");
    std::string text(s[0] == '+' ? s.substr(1) : s);
    return mpz_class(text, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) fail(ErrorCode::Parse, "empty rational literal");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_integer(text.substr(0, slash));
        mpz_class den = parse_integer(text.substr(slash + 1));
        if (den == 0) fail(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    if (is_integer_literal(text)) return Rational(parse_integer(text));

    // decimal with optional exponent, e.g. -1.25e-3
    std::string_view mantissa = text;
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        mantissa = text.substr(0, e);
        exponent = parse_integer(text.substr(e + 1)).get_si();
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_dot = false;
    for (char c : mantissa) {
        if (c == '.') {
            if (seen_dot) fail(ErrorCode::Parse, "bad decimal '" + std::string(text) + "'");
            seen_dot = true;
        } else {
            digits.push_back(c);
            if (seen_dot) ++frac_digits;
        }
    }
    Rational q(parse_integer(digits));
    long shift = exponent - frac_digits;
    mpz_class ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    if (shift >= 0) {
        q *= Rational(ten_pow);
    } else {
        q /= Rational(ten_pow);
    }
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q) { return q.get_str(10); }

Rational nearest_rational(double x, std::uint64_t max_den) {
    if (!std::isfinite(x)) fail(ErrorCode::NonFinite, "cannot approximate a non-finite value");
    const Rational target(x);
    if (target.get_den() <= max_den) return target;

    const mpz_class cap(static_cast<unsigned long>(max_den));
    // convergents h/k of the continued fraction of target
    mpz_class h_prev2 = 0, h_prev1 = 1, k_prev2 = 1, k_prev1 = 0;
    Rational rest = target;
    while (true) {
        mpz_class a;
        mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
        mpz_class h = a * h_prev1 + h_prev2;
        mpz_class k = a * k_prev1 + k_prev2;
        if (k > cap) {
            // largest semiconvergent that still fits
            mpz_class t = (cap - k_prev2) / k_prev1;
            Rational semi(mpz_class(t * h_prev1 + h_prev2), mpz_class(t * k_prev1 + k_prev2));
            Rational conv(h_prev1, k_prev1);
            semi.canonicalize();
            conv.canonicalize();
            return abs(Rational(semi - target)) < abs(Rational(conv - target)) ? semi : conv;
        }
        h_prev2 = h_prev1;
        h_prev1 = h;
        k_prev2 = k_prev1;
        k_prev1 = k;
        Rational frac = rest - Rational(a);
        if (frac == 0) {
            Rational q(h, k);
            q.canonicalize();
            return q;
        }
        rest = 1 / frac;
    }
}

}  // namespace hypmaj
