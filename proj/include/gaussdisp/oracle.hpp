#pragma once
/*
oracle.hpp
----------
Brute-force route to the imaginary-frequency log integrals. Nothing here
calls the closed forms in potentials.hpp; the two are compared in tests.

The integrals are taken along the imaginary axis with ln|.| in place of
ln(.): where 1 + A/(1+x^2) changes sign the integrand has an integrable
logarithmic singularity at x* = sqrt(-1 - A), and the interval is split there.
*/

#include "gaussdisp/gaussian_tensor.hpp"
#include "gaussdisp/potentials.hpp"
#include "gaussdisp/quadrature.hpp"
#include "gaussdisp/quantities.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace gaussdisp {

namespace detail {

// ln|1 + A/(1+x^2)|. Near the zero of the argument the difference
// x^2 - x*^2 is formed as (x - x*)(x + x*) to keep the singular factor exact.
struct SingleLogIntegrand {
    double A;
    double x_star; // sqrt(-1 - A) when A <= -1, else unused

    double operator()(double x) const
    {
        const double den = 1.0 + x * x;
        const double q = A / den;
        if (A <= -1.0 && q < -0.5)
            return std::log(std::abs(x - x_star)) + std::log(x + x_star) - std::log1p(x * x);
        return std::log1p(q);
    }
};

// ln|1 - A^2/(1+x^2)^2| = ln|1 + q| + ln|1 - q|, q = A/(1+x^2).
struct PairLogIntegrand {
    double abs_A;
    double x_star; // sqrt(|A| - 1) when |A| >= 1

    double operator()(double x) const
    {
        const double den = 1.0 + x * x;
        const double q = abs_A / den;
        if (abs_A >= 1.0 && q > 0.5)
            return std::log(std::abs(x - x_star)) + std::log(x + x_star) + std::log(den + abs_A) -
                   2.0 * std::log1p(x * x);
        return std::log1p(-q * q);
    }
};

inline void require_finite_coupling(double A)
{
    if (!std::isfinite(A))
        throw std::invalid_argument("log integral: coupling A must be finite");
}

} // namespace detail

/// int_0^inf ln|1 + A/(1+x^2)| dx
inline QuadratureResult log_integral(double A, const QuadratureOptions& opts = {})
{
    detail::require_finite_coupling(A);
    const double x_star = A < -1.0 ? std::sqrt(-1.0 - A) : 0.0;
    const detail::SingleLogIntegrand f{A, x_star};
    const double scale = std::sqrt(1.0 + std::abs(A));
    std::vector<double> breaks;
    if (A < -1.0)
        breaks.push_back(x_star);
    return integrate_half_line(f, scale, breaks, opts);
}

/// int_0^inf ln|1 - A^2/(1+x^2)^2| dx, the ground-state integrand for one branch.
inline QuadratureResult pair_log_integral(double A, const QuadratureOptions& opts = {})
{
    detail::require_finite_coupling(A);
    const double abs_A = std::abs(A);
    const double x_star = abs_A > 1.0 ? std::sqrt(abs_A - 1.0) : 0.0;
    const detail::PairLogIntegrand f{abs_A, x_star};
    const double scale = std::sqrt(1.0 + abs_A);
    std::vector<double> breaks;
    if (abs_A > 1.0)
        breaks.push_back(x_star);
    return integrate_half_line(f, scale, breaks, opts);
}

/// Ground-state potential from
/// (hbar/2) sum_j int dxi/(2 pi) ln|1 - alpha(i xi)^2 T_jj^2|.
inline Energy cp_by_quadrature(const DipoleSpecies& s, Length rho, const QuadratureOptions& opts = {})
{
    double sum = 0.0;
    for (Branch b : all_branches)
        sum += pair_log_integral(s.field_coupling(rho, b), opts).value;
    return (0.5 * sum / std::numbers::pi) * s.hbar_omega0();
}

/// Resonance shift from hbar int dxi/(2 pi) ln|1 + alpha(i xi) T_jj|, in x = xi/w0.
inline Energy resonance_by_quadrature(const DipoleSpecies& s, Length rho, Branch b,
                                      const QuadratureOptions& opts = {})
{
    const double I = log_integral(s.field_coupling(rho, b), opts).value;
    return (I / std::numbers::pi) * s.hbar_omega0();
}

/// Same integral taken directly over xi (in hartree) with a unit mapping
/// scale, so the quadrature mesh differs from the reduced-variable route.
inline Energy resonance_by_frequency_quadrature(const DipoleSpecies& s, Length rho, Branch b,
                                                const QuadratureOptions& opts = {})
{
    const double A = s.field_coupling(rho, b);
    detail::require_finite_coupling(A);
    const double w0 = s.hbar_omega0().hartree();
    const double x_star = A < -1.0 ? std::sqrt(-1.0 - A) : 0.0;
    const detail::SingleLogIntegrand reduced{A, x_star};
    auto in_xi = [&](double xi) { return reduced(xi / w0); };
    std::vector<double> breaks;
    if (A < -1.0)
        breaks.push_back(w0 * x_star);
    const double I = integrate_half_line(in_xi, 1.0, breaks, opts).value;
    return Energy::from_hartree(I / std::numbers::pi);
}

} // namespace gaussdisp
