#include "hypmaj/majorization.hpp"

#include <cmath>
#include <sstream>

namespace hypmaj {

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::Less: return "Less";
        case Verdict::Equal: return "Equal";
        case Verdict::Incomparable: return "Incomparable";
        case Verdict::SumMismatch: return "NotComparable_SumMismatch";
    }
    return "Incomparable";
}

Verdict parse_verdict(std::string_view text) {
    if (text == "Less") return Verdict::Less;
    if (text == "Equal") return Verdict::Equal;
    if (text == "Incomparable") return Verdict::Incomparable;
    if (text == "NotComparable_SumMismatch") return Verdict::SumMismatch;
    fail(ErrorCode::Parse, "unknown verdict '" + std::string(text) + "'");
}

namespace {

bool is_even_integer(double k) { return std::floor(k) == k && std::fmod(k, 2.0) == 0.0; }

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

}  // namespace

std::string describe(const SchurProbe& p) {
    std::ostringstream os;
    std::visit(overloaded{
                   [&](const probe::Hinge& h) { os << "hinge(" << h.t << ")"; },
                   [&](const probe::Power& q) { os << "power(" << q.k << ")"; },
                   [&](const probe::XLogX&) { os << "xlogx"; },
                   [&](const probe::SignedPower& s) { os << "signed_power(" << s.r << ")"; },
               },
               p);
    return os.str();
}

bool probe_valid(const SchurProbe& p, std::span<const double> x) {
    const auto all_positive = [&] {
        for (double v : x) {
            if (!(v > 0.0)) return false;
        }
        return true;
    };
    return std::visit(overloaded{
                          [&](const probe::Hinge&) { return true; },
                          [&](const probe::Power& q) {
                              if (!(q.k >= 1.0)) return false;
                              if (q.k == 1.0 || is_even_integer(q.k)) return true;
                              for (double v : x) {
                                  if (v < 0.0) return false;
                              }
                              return true;
                          },
                          [&](const probe::XLogX&) { return all_positive(); },
                          [&](const probe::SignedPower&) { return all_positive(); },
                      },
                      p);
}

double schur_eval(std::span<const double> x, const SchurProbe& p) {
    if (!probe_valid(p, x)) fail(ErrorCode::DomainViolation, describe(p) + " is not defined on this tuple");
    double acc = 0.0;
    std::visit(overloaded{
                   [&](const probe::Hinge& h) {
                       for (double v : x) acc += std::max(v - h.t, 0.0);
                   },
                   [&](const probe::Power& q) {
                       for (double v : x) acc += std::pow(v, q.k);
                   },
                   [&](const probe::XLogX&) {
                       for (double v : x) acc += v * std::log(v);
                   },
                   [&](const probe::SignedPower& s) {
                       for (double v : x) acc += std::pow(v, s.r);
                       acc *= s.r * (s.r - 1.0);
                   },
               },
               p);
    return acc;
}

}  // namespace hypmaj
