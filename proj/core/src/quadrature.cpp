#include "gfem/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace gfem {

namespace {

// P_n(x) and P_n'(x) via the three-term recurrence.
std::pair<double, double> legendre(int n, double x) {
    double p0 = 1.0, p1 = x;
    if (n == 0) return {1.0, 0.0};
    for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    double dp = n * (x * p1 - p0) / (x * x - 1.0);
    return {p1, dp};
}

// 1D Gauss-Legendre nodes/weights on [-1,1], symmetric by construction.
void gauss_1d(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev-like initial guess for the i-th root in (0, 1]
        double xi = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            auto [p, dp] = legendre(n, xi);
            double dx = p / dp;
            xi -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        auto [p, dp] = legendre(n, xi);
        (void)p;
        double wi = 2.0 / ((1.0 - xi * xi) * dp * dp);
        x[i] = -xi;  // roots come out in descending order; store ascending
        w[i] = wi;
        x[n - 1 - i] = xi;
        w[n - 1 - i] = wi;
    }
    if (n % 2 == 1) x[n / 2] = 0.0;
}

}  // namespace

QuadratureRule gauss_rule(int n, int dim) {
    if (n < 1 || n > 100) throw std::invalid_argument("gauss_rule: n must be in [1, 100]");
    if (dim != 1 && dim != 2) throw std::invalid_argument("gauss_rule: dim must be 1 or 2");

    std::vector<double> x, w;
    gauss_1d(n, x, w);

    QuadratureRule rule;
    if (dim == 1) {
        rule.points.resize(n);
        rule.weights.resize(n);
        for (int i = 0; i < n; ++i) {
            rule.points[i] = {x[i], 0.0};
            rule.weights[i] = w[i];
        }
    } else {
        rule.points.reserve(n * n);
        rule.weights.reserve(n * n);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                rule.points.push_back({x[i], x[j]});
                rule.weights.push_back(w[i] * w[j]);
            }
    }
    return rule;
}

QuadratureRule trapezoid_boundary_rule(const Vec2& a, const Vec2& b) {
    const double len = norm(b - a);
    if (!(len > 0.0)) throw std::invalid_argument("trapezoid_boundary_rule: degenerate segment");
    QuadratureRule rule;
    rule.points = {a, b};
    rule.weights = {0.5 * len, 0.5 * len};
    return rule;
}

}  // namespace gfem
