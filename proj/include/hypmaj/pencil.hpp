#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <vector>

#include "hypmaj/hyperbolic.hpp"
#include "hypmaj/majorization.hpp"

namespace hypmaj {

/// The pencil P_λ = P - λP' sampled at one λ.
struct PencilSample {
    double lambda = 0.0;
    std::vector<double> roots;         ///< x_1(λ) <= ... <= x_n(λ)
    std::vector<double> critical;      ///< w_1(λ) <= ... <= w_{n-1}(λ), roots of P_λ'
    std::vector<double> partial_sums;  ///< f_m(λ) = Σ_{i<=m} (x_i(λ) - λ), m = 1..n
};

/// P - λP' as coefficients (monic for monic P).
template <Scalar T>
Polynomial<T> pencil_polynomial(const Polynomial<T>& p, const T& lambda) {
    return p - p.derivative() * lambda;
}

PencilSample pencil_at(const HyperbolicPoly<double>& p, double lambda, double tol = 0.0);

/// 201 uniform points over [-L, L] with L = 1 + 2·max|x_i|.
std::vector<double> default_grid(const HyperbolicPoly<double>& p, std::size_t points = 201);

/// Uniform grid over [-half_width, half_width]; odd point counts contain 0.
std::vector<double> uniform_grid(double half_width, std::size_t points);

struct MonotonicityEntry {
    std::size_t m = 0;               ///< partial-sum index, 1..n-1
    std::size_t violations = 0;      ///< grid steps going the wrong way by more than the slack
    double worst_violation = 0.0;    ///< largest wrong-way step (0 if none)
};

struct MonotonicityReport {
    std::vector<MonotonicityEntry> entries;
    double constancy_error = 0.0;  ///< max_λ |f_n(λ) - f_n(0)|
    double worst_concavity = 0.0;  ///< max second difference of any f_m (informational)

    std::size_t total_violations() const {
        std::size_t s = 0;
        for (const auto& e : entries) s += e.violations;
        return s;
    }
};

/// Checks that each f_m, m < n, is nondecreasing on grid points <= 0 and
/// nonincreasing on grid points >= 0, up to `slack`. The grid must be sorted
/// and contain 0.
MonotonicityReport scan_monotonicity(const HyperbolicPoly<double>& p, std::span<const double> grid,
                                     double slack = 1e-7, double tol = 0.0);

/// Certificate for Z(Q - λQ') ≺ Z(P - λP'). A negative maj_tol selects the
/// default float tolerance.
MajorizationCertificate<double> pencil_majorization_check(const HyperbolicPoly<double>& p,
                                                          const HyperbolicPoly<double>& q, double lambda,
                                                          double maj_tol = -1.0, double root_tol = 0.0);

/// CSV with header "lambda,x_1..x_n,f_1..f_n".
void write_pencil_csv(std::ostream& os, const HyperbolicPoly<double>& p, std::span<const double> grid,
                      double tol = 0.0);

}  // namespace hypmaj
