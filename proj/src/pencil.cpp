#include "hypmaj/pencil.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>

namespace hypmaj {

PencilSample pencil_at(const HyperbolicPoly<double>& p, double lambda, double tol) {
    const auto coeffs = pencil_polynomial(p.coefficients(), lambda);
    PencilSample s;
    s.lambda = lambda;
    s.roots = real_roots(coeffs, tol);
    if (p.degree() >= 2) s.critical = real_roots(coeffs.derivative(), tol);
    double acc = 0.0;
    for (double x : s.roots) {
        acc += x - lambda;
        s.partial_sums.push_back(acc);
    }
    return s;
}

std::vector<double> uniform_grid(double half_width, std::size_t points) {
    if (points < 2) return {0.0};
    std::vector<double> g(points);
    const double step = 2.0 * half_width / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) g[i] = -half_width + step * static_cast<double>(i);
    if (points % 2 == 1) g[points / 2] = 0.0;
    return g;
}

std::vector<double> default_grid(const HyperbolicPoly<double>& p, std::size_t points) {
    double radius = 0.0;
    for (double x : p.roots()) radius = std::max(radius, std::fabs(x));
    return uniform_grid(1.0 + 2.0 * radius, points);
}

MonotonicityReport scan_monotonicity(const HyperbolicPoly<double>& p, std::span<const double> grid, double slack,
                                     double tol) {
    if (!std::is_sorted(grid.begin(), grid.end()) || std::find(grid.begin(), grid.end(), 0.0) == grid.end()) {
        fail(ErrorCode::PreconditionViolated, "grid must be sorted and contain 0");
    }
    const std::size_t n = p.degree();
    MonotonicityReport rep;
    for (std::size_t m = 1; m < n; ++m) rep.entries.push_back({m, 0, 0.0});

    std::vector<std::vector<double>> f;  // f[g][m-1]
    f.reserve(grid.size());
    for (double lam : grid) f.push_back(pencil_at(p, lam, tol).partial_sums);

    double f_n0 = 0.0;
    for (double x : p.roots()) f_n0 += x;
    for (const auto& row : f) rep.constancy_error = std::max(rep.constancy_error, std::fabs(row[n - 1] - f_n0));

    for (std::size_t g = 0; g + 1 < grid.size(); ++g) {
        const bool left = grid[g + 1] <= 0.0;  // both points in (-inf, 0]
        for (std::size_t m = 1; m < n; ++m) {
            const double step = f[g + 1][m - 1] - f[g][m - 1];
            const double wrong = left ? -step : step;
            auto& e = rep.entries[m - 1];
            if (wrong > slack) ++e.violations;
            e.worst_violation = std::max(e.worst_violation, std::max(wrong, 0.0));
        }
    }
    for (std::size_t g = 1; g + 1 < grid.size(); ++g) {
        for (std::size_t m = 1; m < n; ++m) {
            const double second = f[g + 1][m - 1] - 2.0 * f[g][m - 1] + f[g - 1][m - 1];
            rep.worst_concavity = std::max(rep.worst_concavity, second);
        }
    }
    return rep;
}

MajorizationCertificate<double> pencil_majorization_check(const HyperbolicPoly<double>& p,
                                                          const HyperbolicPoly<double>& q, double lambda,
                                                          double maj_tol, double root_tol) {
    if (p.degree() != q.degree()) fail(ErrorCode::DegreeMismatch, "pencils need equal degrees");
    const auto zp = real_roots(pencil_polynomial(p.coefficients(), lambda), root_tol);
    const auto zq = real_roots(pencil_polynomial(q.coefficients(), lambda), root_tol);
    return check_majorization<double>(zq, zp, maj_tol);
}

void write_pencil_csv(std::ostream& os, const HyperbolicPoly<double>& p, std::span<const double> grid, double tol) {
    const std::size_t n = p.degree();
    os << "lambda";
    for (std::size_t i = 1; i <= n; ++i) os << ",x_" << i;
    for (std::size_t i = 1; i <= n; ++i) os << ",f_" << i;
    os << '\n';
    os << std::setprecision(17);
    for (double lam : grid) {
        const auto s = pencil_at(p, lam, tol);
        os << lam;
        for (double x : s.roots) os << ',' << x;
        for (double f : s.partial_sums) os << ',' << f;
        os << '\n';
    }
}

}  // namespace hypmaj
