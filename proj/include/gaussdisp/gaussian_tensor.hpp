#pragma once
/*
gaussian_tensor.hpp
-------------------
Diagonal elements of the non-retarded dipole coupling tensor between two
identical Gaussian polarization clouds of radius a, separated by rho along z.

With t = rho/a:

  T_xx = T_yy = -[sqrt(pi) erf(t) - 2 t e^{-t^2}]            / (sqrt(pi) rho^3)
  T_zz        = -2 [-sqrt(pi) erf(t) + 2 t (1 + t^2) e^{-t^2}] / (sqrt(pi) rho^3)

Both brackets are O(t^3) built out of O(1) terms, so for t < tensor_series_switch
the bracket/t^3 ratio is taken from its power series instead:

  x:  4 sum_k (-1)^k t^{2k} / (k! (2k+3))
  z:  2 sum_k (-1)^k (2k+1) t^{2k} / (k! (2k+3))

These start at 4/3 and 2/3, and the z bracket carries the extra factor 2,
so every branch meets the common contact value -4/(3 sqrt(pi) a^3).
*/

#include "gaussdisp/quantities.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string_view>

namespace gaussdisp {

enum class Branch { x, y, z };

inline constexpr std::string_view to_string(Branch b) noexcept
{
    switch (b) {
    case Branch::x: return "x";
    case Branch::y: return "y";
    case Branch::z: return "z";
    }
    return "?";
}

inline constexpr Branch all_branches[] = {Branch::x, Branch::y, Branch::z};

/// A diagonal tensor value T_jj in bohr^-3, plus the reduced separation it was evaluated at.
struct TensorElement {
    Branch branch = Branch::x;
    double value = 0.0;
    double t = 0.0;
};

inline constexpr double tensor_series_switch = 0.5;

enum class TensorPath { automatic, series, direct };

/// erf on t >= 0. std::erf carries the accuracy; this adds the domain contract.
inline double erf(double t)
{
    if (!std::isfinite(t) || t < 0.0)
        throw std::invalid_argument("erf: argument must be finite and non-negative");
    return std::erf(t);
}

namespace detail {

inline constexpr double sqrt_pi = 1.0 / std::numbers::inv_sqrtpi_v<double>;

// Sum until the next term no longer moves the result. Converges for all
// finite t but is only used for t <= 1 or so.
template <class Coefficient>
double reduced_series(double t, Coefficient coeff)
{
    const double t2 = t * t;
    double power_over_factorial = 1.0; // (-t^2)^k / k!
    double sum = 0.0;
    for (int k = 0; k < 200; ++k) {
        const double term = power_over_factorial * coeff(k);
        sum += term;
        if (k > 2 && std::abs(term) <= 1e-18 * std::abs(sum))
            break;
        power_over_factorial *= -t2 / (k + 1);
    }
    return sum;
}

// bracket_x(t) / t^3
inline double x_bracket_ratio_series(double t)
{
    return 4.0 * reduced_series(t, [](int k) { return 1.0 / (2.0 * k + 3.0); });
}

inline double x_bracket_ratio_direct(double t)
{
    return (sqrt_pi * std::erf(t) - 2.0 * t * std::exp(-t * t)) / (t * t * t);
}

// bracket_z(t) / t^3 = [-sqrt(pi) erf(t) + 2t(1+t^2)e^{-t^2}] / t^3
inline double z_bracket_ratio_series(double t)
{
    return 2.0 * reduced_series(t, [](int k) { return (2.0 * k + 1.0) / (2.0 * k + 3.0); });
}

inline double z_bracket_ratio_direct(double t)
{
    const double t2 = t * t;
    return (2.0 * t * (1.0 + t2) * std::exp(-t2) - sqrt_pi * std::erf(t)) / (t2 * t);
}

inline bool use_series(double t, TensorPath path)
{
    switch (path) {
    case TensorPath::series: return true;
    case TensorPath::direct: return false;
    case TensorPath::automatic: break;
    }
    return t < tensor_series_switch;
}

inline double checked_ratio(double rho, double a)
{
    if (!std::isfinite(a) || a <= 0.0)
        throw std::invalid_argument("Gaussian radius a must be positive and finite");
    if (!std::isfinite(rho) || rho < 0.0)
        throw std::invalid_argument("separation rho must be non-negative and finite");
    return rho / a;
}

} // namespace detail

/// a^3 T_xx as a function of t = rho/a.
inline double reduced_xx(double t, TensorPath path = TensorPath::automatic)
{
    if (!std::isfinite(t) || t < 0.0)
        throw std::invalid_argument("reduced separation must be non-negative and finite");
    if (path == TensorPath::direct && t == 0.0)
        throw std::invalid_argument("direct tensor evaluation is singular at t = 0");
    const double ratio = detail::use_series(t, path) ? detail::x_bracket_ratio_series(t)
                                                     : detail::x_bracket_ratio_direct(t);
    return -ratio / detail::sqrt_pi;
}

/// a^3 T_zz as a function of t = rho/a.
inline double reduced_zz(double t, TensorPath path = TensorPath::automatic)
{
    if (!std::isfinite(t) || t < 0.0)
        throw std::invalid_argument("reduced separation must be non-negative and finite");
    if (path == TensorPath::direct && t == 0.0)
        throw std::invalid_argument("direct tensor evaluation is singular at t = 0");
    const double ratio = detail::use_series(t, path) ? detail::z_bracket_ratio_series(t)
                                                     : detail::z_bracket_ratio_direct(t);
    return -2.0 * ratio / detail::sqrt_pi;
}

inline double reduced_jj(double t, Branch b, TensorPath path = TensorPath::automatic)
{
    return b == Branch::z ? reduced_zz(t, path) : reduced_xx(t, path);
}

inline TensorElement t_jj(Length rho, Length a, Branch b)
{
    const double t = detail::checked_ratio(rho.bohr(), a.bohr());
    const double a3 = a.bohr() * a.bohr() * a.bohr();
    return {b, reduced_jj(t, b) / a3, t};
}

inline TensorElement t_xx(Length rho, Length a) { return t_jj(rho, a, Branch::x); }
inline TensorElement t_yy(Length rho, Length a) { return t_jj(rho, a, Branch::y); }
inline TensorElement t_zz(Length rho, Length a) { return t_jj(rho, a, Branch::z); }

/// Common rho -> 0 value of every diagonal element: -4/(3 sqrt(pi) a^3).
inline TensorElement t_contact(Length a, Branch b = Branch::x)
{
    if (!(a.bohr() > 0.0))
        throw std::invalid_argument("Gaussian radius a must be positive");
    const double a3 = a.bohr() * a.bohr() * a.bohr();
    return {b, -4.0 / (3.0 * detail::sqrt_pi * a3), 0.0};
}

} // namespace gaussdisp
