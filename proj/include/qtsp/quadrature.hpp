#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace qtsp {

namespace detail {

// 15-point Kronrod extension of 7-point Gauss, positive half.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
// Gauss weights for Kronrod nodes 1, 3, 5, 7.
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

template <class F>
void gauss_kronrod(const F& f, double a, double b, double& kronrod, double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double gauss = kGaussWeights[3] * f(c);
    kronrod = kKronrodWeights[7] * f(c);
    for (std::size_t i = 0; i < 7; ++i) {
        const double lo = f(c - h * kKronrodNodes[i]);
        const double hi = f(c + h * kKronrodNodes[i]);
        kronrod += kKronrodWeights[i] * (lo + hi);
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * (lo + hi);
    }
    kronrod *= h;
    gauss *= h;
    err = std::abs(kronrod - gauss);
}

template <class F>
double integrate_rec(const F& f, double a, double b, double tol, int depth) {
    double value, err;
    gauss_kronrod(f, a, b, value, err);
    if (err <= tol || depth >= 48) return value;
    const double c = 0.5 * (a + b);
    return integrate_rec(f, a, c, 0.5 * tol, depth + 1) +
           integrate_rec(f, c, b, 0.5 * tol, depth + 1);
}

}  // namespace detail

// Adaptive Gauss-Kronrod quadrature of f over [a, b] to absolute tolerance.
// All integrands in this project are smooth Gaussians, so bisection with a
// G7-K15 error estimate converges quickly.
template <class F>
double integrate(const F& f, double a, double b, double abs_tol = 1e-10) {
    if (a == b) return 0.0;
    if (a > b) return -integrate(f, b, a, abs_tol);
    return detail::integrate_rec(f, a, b, abs_tol, 0);
}

}  // namespace qtsp
