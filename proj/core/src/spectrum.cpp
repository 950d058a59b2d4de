#include "twopos/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace twopos {

namespace {

double offdiag_norm(const std::vector<std::vector<double>>& a) {
    double s = 0.0;
    int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += a[i][j] * a[i][j];
    return std::sqrt(s);
}

}  // namespace

Spectrum eigenvalues(const Graph& g, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
    int n = g.order();
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && g.adjacent(u, v)) a[u][v] = 1.0;

    while (offdiag_norm(a) >= tol) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (a[p][q] == 0.0) continue;
                double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = std::copysign(1.0, theta) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }

    Spectrum spec;
    spec.tolerance = tol;
    spec.values.resize(n);
    for (int i = 0; i < n; ++i) spec.values[i] = a[i][i];
    std::sort(spec.values.begin(), spec.values.end(), std::greater<>());
    return spec;
}

}  // namespace twopos
