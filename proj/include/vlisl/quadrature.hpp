#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

// Adaptive Simpson integration for smooth 1-D integrands.
//
// Spectral integrands here (Planck curves) are integrated over ranges that can
// span five decades of wavelength, where a naive 3-point bootstrap sees only
// near-zero samples and converges prematurely. The driver therefore pre-splits
// wide intervals on a logarithmic grid, takes a composite coarse estimate, and
// spends an absolute-error budget derived from that estimate on each panel.

namespace vlisl::quadrature {

namespace detail {

template <typename F>
double simpson(F&& f, double a, double fa, double b, double fb, double& fm) {
    const double m = 0.5 * (a + b);
    fm = f(m);
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <typename F>
double adapt(F&& f, double a, double fa, double m, double fm, double b,
             double fb, double whole, double tol, int depth) {
    double fml, fmr;
    const double left = simpson(f, a, fa, m, fm, fml);
    const double right = simpson(f, m, fm, b, fb, fmr);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adapt(f, a, fa, 0.5 * (a + m), fml, m, fm, left, 0.5 * tol,
                 depth - 1) +
           adapt(f, m, fm, 0.5 * (m + b), fmr, b, fb, right, 0.5 * tol,
                 depth - 1);
}

} // namespace detail

// Integrate f over [a, b] to the requested relative tolerance.
// Pre: a <= b, rel_tol > 0. Degenerate interval integrates to 0.
template <typename F>
double integrate(F&& f, double a, double b, double rel_tol = 1e-10) {
    if (!(a <= b)) throw std::domain_error("integrate: requires a <= b");
    if (!(rel_tol > 0.0)) throw std::domain_error("integrate: rel_tol <= 0");
    if (a == b) return 0.0;

    // Panel boundaries: logarithmic when the range spans more than a factor
    // of 4 (only possible for positive a), linear otherwise.
    std::vector<double> knots;
    const std::size_t panels = 64;
    knots.reserve(panels + 1);
    if (a > 0.0 && b / a > 4.0) {
        const double ratio = std::pow(b / a, 1.0 / double(panels));
        double x = a;
        for (std::size_t i = 0; i < panels; ++i, x *= ratio) knots.push_back(x);
        knots.push_back(b);
    } else {
        const double step = (b - a) / double(panels);
        for (std::size_t i = 0; i < panels; ++i) knots.push_back(a + step * double(i));
        knots.push_back(b);
    }

    // Coarse composite pass to scale the absolute budget.
    double coarse = 0.0;
    std::vector<double> fk(knots.size());
    for (std::size_t i = 0; i < knots.size(); ++i) fk[i] = f(knots[i]);
    std::vector<double> fmid(knots.size() - 1);
    std::vector<double> panel_est(knots.size() - 1);
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        panel_est[i] = detail::simpson(f, knots[i], fk[i], knots[i + 1],
                                       fk[i + 1], fmid[i]);
        coarse += panel_est[i];
    }

    const double budget = rel_tol * std::fabs(coarse);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        const double m = 0.5 * (knots[i] + knots[i + 1]);
        const double tol =
            budget > 0.0 ? budget / double(panel_est.size()) : rel_tol;
        total += detail::adapt(f, knots[i], fk[i], m, fmid[i], knots[i + 1],
                               fk[i + 1], panel_est[i], tol, 48);
    }
    return total;
}

// Fixed-grid composite Simpson; used as an independent cross-check oracle.
// Pre: intervals >= 1 (rounded up to even).
template <typename F>
double composite_simpson(F&& f, double a, double b, std::size_t intervals) {
    if (!(a <= b)) throw std::domain_error("composite_simpson: requires a <= b");
    if (intervals == 0)
        throw std::domain_error("composite_simpson: requires intervals >= 1");
    if (a == b) return 0.0;
    if (intervals % 2) ++intervals;
    const double h = (b - a) / double(intervals);
    double acc = f(a) + f(b);
    for (std::size_t i = 1; i < intervals; ++i)
        acc += f(a + h * double(i)) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

} // namespace vlisl::quadrature
