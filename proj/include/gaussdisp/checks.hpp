#pragma once
// Closed form vs quadrature self-check, shared by the CLI and the test suites.

#include "gaussdisp/oracle.hpp"
#include "gaussdisp/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace gaussdisp {

inline constexpr double log_integral_check_tolerance = 1e-7;
inline constexpr double energy_check_rel_tolerance = 1e-6;
inline constexpr double energy_check_abs_floor = 1e-10; ///< in units of hbar*w0

/// pi (Re sqrt(1 + A) - 1)
inline double log_integral_closed_form(double A) { return std::numbers::pi * root_shift(A); }

/// `count` magnitudes log-spaced over [lo, hi], each used with both signs.
inline std::vector<double> signed_log_grid(double lo, double hi, int count)
{
    std::vector<double> out;
    for (int i = 0; i < count; ++i) {
        const double m = lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1));
        out.push_back(m);
        out.push_back(-m);
    }
    return out;
}

inline std::vector<double> log_grid(double lo, double hi, int count)
{
    std::vector<double> out;
    for (int i = 0; i < count; ++i)
        out.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1)));
    return out;
}

/// |a - b| scaled so that <= 1 means within max(rel * |b|, floor).
inline double scaled_deviation(double a, double b, double rel, double floor)
{
    return std::abs(a - b) / std::max(rel * std::abs(b), floor);
}

struct OracleCheckReport {
    double max_log_integral_deviation = 0.0;
    double max_cp_scaled_deviation = 0.0;        ///< <= 1 passes
    double max_resonance_scaled_deviation = 0.0; ///< <= 1 passes
    std::size_t evaluations = 0;

    [[nodiscard]] bool pass() const noexcept
    {
        return max_log_integral_deviation <= log_integral_check_tolerance && max_cp_scaled_deviation <= 1.0 &&
               max_resonance_scaled_deviation <= 1.0;
    }
};

/// Throws QuadratureError when an integral does not converge.
inline OracleCheckReport run_oracle_check(const std::vector<double>& a_grid, const std::vector<DipoleSpecies>& species,
                                          const std::vector<double>& t_grid, const QuadratureOptions& opts = {})
{
    OracleCheckReport rep;
    for (double A : a_grid) {
        const auto q = log_integral(A, opts);
        rep.evaluations += q.evaluations;
        rep.max_log_integral_deviation =
            std::max(rep.max_log_integral_deviation, std::abs(q.value - log_integral_closed_form(A)));
    }
    for (const auto& s : species) {
        const double w = s.hbar_omega0().hartree();
        for (double t : t_grid) {
            const Length rho = Length::from_bohr(t * s.a.bohr());
            const double cp = cp_potential(s, rho).energy.hartree();
            const double cpq = cp_by_quadrature(s, rho, opts).hartree();
            rep.max_cp_scaled_deviation = std::max(
                rep.max_cp_scaled_deviation,
                scaled_deviation(cpq, cp, energy_check_rel_tolerance, energy_check_abs_floor * w));
            for (Branch b : all_branches) {
                const double r = resonance_potential(s, rho, b).hartree();
                const double rq = resonance_by_quadrature(s, rho, b, opts).hartree();
                rep.max_resonance_scaled_deviation = std::max(
                    rep.max_resonance_scaled_deviation,
                    scaled_deviation(rq, r, energy_check_rel_tolerance, energy_check_abs_floor * w));
            }
        }
    }
    return rep;
}

} // namespace gaussdisp
