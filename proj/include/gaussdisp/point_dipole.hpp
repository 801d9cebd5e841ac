#pragma once
/*
point_dipole.hpp
----------------
Two identical point dipoles with single-oscillator polarizability
alpha(i w) = alpha0 / (1 + w^2/w0^2), coupled at separation rho.

With u = alpha0/rho^3 the six coupled modes have squared frequencies
w0^2 (1 +- u) (twice each, transverse) and w0^2 (1 +- 2u) (once each, axial).
A mode whose squared frequency goes negative is frozen out: it has no real
zero-point energy and is dropped from the sum. That is what turns the
London attraction into a repulsion at small rho.
*/

#include "gaussdisp/quantities.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gaussdisp {

struct OscillatorModel {
    Polarizability alpha0;
    Energy omega0; ///< hbar*w0

    static OscillatorModel make(Polarizability alpha0, Energy omega0)
    {
        if (!(omega0.hartree() > 0.0))
            throw std::invalid_argument("oscillator frequency omega0 must be positive");
        return {alpha0, omega0};
    }
};

struct NormalMode {
    double frequency_squared_factor = 1.0; ///< (w/w0)^2
    int multiplicity = 1;
    bool is_real = true;

    [[nodiscard]] double frequency_factor() const noexcept
    {
        return is_real ? std::sqrt(frequency_squared_factor) : 0.0;
    }
};

struct ModeSpectrum {
    std::array<NormalMode, 4> modes{};

    [[nodiscard]] int real_mode_count() const noexcept
    {
        int n = 0;
        for (const auto& m : modes)
            n += m.is_real ? m.multiplicity : 0;
        return n;
    }
    [[nodiscard]] int total_multiplicity() const noexcept
    {
        int n = 0;
        for (const auto& m : modes)
            n += m.multiplicity;
        return n;
    }
};

/// u = alpha0 / rho^3
inline double coupling_ratio(const OscillatorModel& model, Length rho)
{
    if (!(rho.bohr() > 0.0))
        throw std::invalid_argument("point-dipole model is singular at rho = 0");
    const double r = rho.bohr();
    return model.alpha0.bohr3() / (r * r * r);
}

inline ModeSpectrum mode_spectrum_for_ratio(double u)
{
    if (!std::isfinite(u) || u < 0.0)
        throw std::invalid_argument("coupling ratio must be finite and non-negative");
    auto mode = [](double factor, int mult) { return NormalMode{factor, mult, factor >= 0.0}; };
    return {{mode(1.0 + u, 2), mode(1.0 - u, 2), mode(1.0 + 2.0 * u, 1), mode(1.0 - 2.0 * u, 1)}};
}

/// Mode-sum interaction energy in units of hbar*w0.
inline double reduced_mode_energy(double u)
{
    const ModeSpectrum spectrum = mode_spectrum_for_ratio(u);
    double sum = 0.0;
    for (const auto& m : spectrum.modes)
        sum += m.multiplicity * m.frequency_factor();
    return 0.5 * (sum - 6.0);
}

inline ModeSpectrum mode_spectrum(const OscillatorModel& model, Length rho)
{
    return mode_spectrum_for_ratio(coupling_ratio(model, rho));
}

inline Energy interaction_energy(const OscillatorModel& model, Length rho)
{
    return reduced_mode_energy(coupling_ratio(model, rho)) * model.omega0;
}

/// -(3/4) hbar w0 alpha0^2 / rho^6
inline Energy london_asymptote(const OscillatorModel& model, Length rho)
{
    const double u = coupling_ratio(model, rho);
    return (-0.75 * u * u) * model.omega0;
}

/// Large-u form once four of the six modes are frozen:
/// (hbar w0 / 2) [(2 + sqrt 2) sqrt(u) - 6].
inline Energy repulsive_asymptote(const OscillatorModel& model, Length rho)
{
    const double u = coupling_ratio(model, rho);
    return (0.5 * ((2.0 + std::numbers::sqrt2) * std::sqrt(u) - 6.0)) * model.omega0;
}

} // namespace gaussdisp
