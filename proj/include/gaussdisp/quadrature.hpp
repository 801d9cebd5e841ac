#pragma once
/*
quadrature.hpp
--------------
Globally adaptive 15-point Gauss-Kronrod integration (QUADPACK QAG style):
keep a heap of subintervals ordered by error estimate and bisect the worst
one until the summed estimate meets max(abs_tol, rel_tol * |I|).

Half-line integrals are mapped onto [0, pi/2) with x = scale * tan(theta).
For integrands decaying like 1/x^2 the mapped integrand stays bounded at the
far end, so no cutoff or tail correction is needed.
*/

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gaussdisp {

struct QuadratureOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-12;
    std::size_t max_evaluations = 300000;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
};

/// Thrown when the evaluation cap is hit before the tolerance is met.
class QuadratureError : public std::runtime_error {
public:
    explicit QuadratureError(const QuadratureResult& partial)
        : std::runtime_error("quadrature did not converge: estimate " + std::to_string(partial.value) +
                             " +- " + std::to_string(partial.error_estimate) + " after " +
                             std::to_string(partial.evaluations) + " evaluations")
        , partial_(partial)
    {
    }

    [[nodiscard]] const QuadratureResult& partial() const noexcept { return partial_; }

private:
    QuadratureResult partial_;
};

namespace detail {

struct GkSegment {
    double lo, hi, value, error;
    bool operator<(const GkSegment& o) const noexcept { return error < o.error; }
};

// Nodes and weights from QUADPACK qk15. Gauss nodes are the odd entries.
inline constexpr std::array<double, 8> gk15_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> gk15_kronrod_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> gk15_gauss_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
GkSegment gk15(const F& f, double lo, double hi)
{
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);

    std::array<double, 15> fv{};
    fv[7] = f(center);
    for (int j = 0; j < 7; ++j) {
        const double dx = half * gk15_nodes[j];
        fv[j] = f(center - dx);
        fv[14 - j] = f(center + dx);
    }

    double kronrod = gk15_kronrod_weights[7] * fv[7];
    double gauss = gk15_gauss_weights[3] * fv[7];
    double abs_sum = std::abs(kronrod);
    for (int j = 0; j < 7; ++j) {
        const double pair = fv[j] + fv[14 - j];
        kronrod += gk15_kronrod_weights[j] * pair;
        abs_sum += gk15_kronrod_weights[j] * (std::abs(fv[j]) + std::abs(fv[14 - j]));
        if (j % 2 == 1)
            gauss += gk15_gauss_weights[j / 2] * pair;
    }
    const double mean = 0.5 * kronrod;
    double asc = gk15_kronrod_weights[7] * std::abs(fv[7] - mean);
    for (int j = 0; j < 7; ++j)
        asc += gk15_kronrod_weights[j] * (std::abs(fv[j] - mean) + std::abs(fv[14 - j] - mean));

    const double h = std::abs(half);
    double err = std::abs((kronrod - gauss) * half);
    asc *= h;
    abs_sum *= h;
    if (asc != 0.0 && err != 0.0)
        err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (abs_sum > std::numeric_limits<double>::min() / (50.0 * eps))
        err = std::max(50.0 * eps * abs_sum, err);
    if (!std::isfinite(kronrod * half))
        err = std::numeric_limits<double>::infinity();
    return {lo, hi, kronrod * half, err};
}

} // namespace detail

/// Integrate f over [lo, hi], with the initial partition split at any
/// breakpoints that fall strictly inside. Endpoint and breakpoint
/// singularities are fine as long as they are integrable.
template <class F>
QuadratureResult integrate(const F& f, double lo, double hi, std::span<const double> breakpoints = {},
                           const QuadratureOptions& opts = {})
{
    std::vector<double> edges{lo};
    for (double b : breakpoints)
        if (b > lo && b < hi)
            edges.push_back(b);
    edges.push_back(hi);
    std::sort(edges.begin(), edges.end());

    std::priority_queue<detail::GkSegment> heap;
    QuadratureResult r;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        if (edges[i + 1] == edges[i])
            continue;
        auto seg = detail::gk15(f, edges[i], edges[i + 1]);
        r.value += seg.value;
        r.error_estimate += seg.error;
        r.evaluations += 15;
        heap.push(seg);
    }

    auto converged = [&] {
        return r.error_estimate <= std::max(opts.abs_tol, opts.rel_tol * std::abs(r.value));
    };

    while (!heap.empty() && !converged()) {
        if (r.evaluations + 30 > opts.max_evaluations)
            throw QuadratureError(r);
        const auto worst = heap.top();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(mid > worst.lo && mid < worst.hi))
            throw QuadratureError(r); // interval cannot be split any further
        heap.pop();
        const auto left = detail::gk15(f, worst.lo, mid);
        const auto right = detail::gk15(f, mid, worst.hi);
        r.evaluations += 30;
        r.value += left.value + right.value - worst.value;
        r.error_estimate += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    // The running sums drift; resum once at the end.
    r.value = 0.0;
    r.error_estimate = 0.0;
    while (!heap.empty()) {
        r.value += heap.top().value;
        r.error_estimate += heap.top().error;
        heap.pop();
    }
    if (!std::isfinite(r.value) || !converged())
        throw QuadratureError(r);
    return r;
}

/// Integrate f over [0, inf) via x = scale * tan(theta). Breakpoints are in x.
template <class F>
QuadratureResult integrate_half_line(const F& f, double scale, std::span<const double> breakpoints = {},
                                     const QuadratureOptions& opts = {})
{
    if (!(scale > 0.0) || !std::isfinite(scale))
        throw std::invalid_argument("half-line mapping scale must be positive and finite");
    std::vector<double> mapped;
    mapped.reserve(breakpoints.size());
    for (double b : breakpoints)
        mapped.push_back(std::atan(b / scale));

    auto g = [&](double theta) {
        const double t = std::tan(theta);
        return f(scale * t) * scale * (1.0 + t * t);
    };
    return integrate(g, 0.0, 0.5 * std::numbers::pi, mapped, opts);
}

} // namespace gaussdisp
