#pragma once
/*
potentials.hpp
--------------
Closed-form non-retarded potentials for two identical Gaussian dipoles.

For the single-oscillator polarizability the imaginary-frequency log
integral has the closed form

  (1/pi) int_0^inf dx ln|1 + A/(1+x^2)| = Re sqrt(1 + A) - 1,

where Re sqrt of a negative radicand is 0: the mode has gone imaginary and no
longer contributes. Every non-perturbative quantity below is a sum of such
terms with A = +-alpha(0) T_jj. The truncated (single-scattering) forms keep
only the leading term of the logarithm.
*/

#include "gaussdisp/gaussian_tensor.hpp"
#include "gaussdisp/point_dipole.hpp"
#include "gaussdisp/quantities.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace gaussdisp {

/// g = alpha(0) / (sqrt(pi) a^3). At contact alpha(0) T_jj = -4g/3.
struct CouplingParameter {
    double value = 0.0;

    [[nodiscard]] double contact_argument() const noexcept { return 4.0 * value / 3.0; }
};

struct DipoleSpecies {
    std::string name;
    OscillatorModel model;
    Length a;

    static DipoleSpecies make(std::string name, Polarizability alpha0, Energy omega0, Length a)
    {
        if (!(a.bohr() > 0.0))
            throw std::invalid_argument("species '" + name + "': Gaussian radius a must be positive");
        DipoleSpecies s{std::move(name), OscillatorModel::make(alpha0, omega0), a};
        if (!std::isfinite(s.coupling().value))
            throw std::invalid_argument("species '" + s.name + "': coupling alpha0/(sqrt(pi) a^3) overflows");
        return s;
    }

    /// Builds the representative species for a (hbar*w0, g) pair. Only g and
    /// t = rho/a enter any potential, so the radius is a free unit.
    static DipoleSpecies from_coupling(std::string name, Energy omega0, double g,
                                       Length a = Length::from_bohr(1.0))
    {
        if (!std::isfinite(g) || g < 0.0)
            throw std::invalid_argument("coupling g must be finite and non-negative");
        const double a3 = a.bohr() * a.bohr() * a.bohr();
        return make(std::move(name), Polarizability::from_bohr3(g * detail::sqrt_pi * a3), omega0, a);
    }

    [[nodiscard]] CouplingParameter coupling() const noexcept
    {
        const double a3 = a.bohr() * a.bohr() * a.bohr();
        return {model.alpha0.bohr3() / (detail::sqrt_pi * a3)};
    }

    [[nodiscard]] Energy hbar_omega0() const noexcept { return model.omega0; }

    /// alpha(0) T_jj(rho), the dimensionless coupling that enters the logarithm.
    [[nodiscard]] double field_coupling(Length rho, Branch b) const
    {
        return model.alpha0.bohr3() * t_jj(rho, a, b).value;
    }
};

/// Re sqrt(w): the square root of a negative radicand has no real part.
inline double real_sqrt(double w) noexcept { return w >= 0.0 ? std::sqrt(w) : 0.0; }

/// Re sqrt(1 + w) - 1, without cancellation for small w.
inline double root_shift(double w) noexcept
{
    return w >= -1.0 ? w / (std::sqrt(1.0 + w) + 1.0) : -1.0;
}

/// Re sqrt(1 + y) + Re sqrt(1 - y) - 2. The two first-order terms cancel, so
/// for |y| <= 1 the rationalized second-order form is used.
inline double pair_root_shift(double y) noexcept
{
    if (std::abs(y) > 1.0)
        return root_shift(y) + root_shift(-y);
    const double p = std::sqrt(1.0 + y);
    const double m = std::sqrt(1.0 - y);
    return -2.0 * y * y / ((p + 1.0) * (m + 1.0) * (p + m));
}

struct BranchTerms {
    Branch branch = Branch::x;
    double field_coupling = 0.0;   ///< alpha(0) T_jj
    double symmetric = 0.0;        ///< Re sqrt(1 - alpha T) - 1
    double antisymmetric = 0.0;    ///< Re sqrt(1 + alpha T) - 1
    bool symmetric_dropped = false;
    bool antisymmetric_dropped = false;
};

using BranchBreakdown = std::array<BranchTerms, 3>;

struct CpPotential {
    Energy energy;
    BranchBreakdown breakdown;
};

inline BranchTerms branch_terms(Branch b, double field_coupling) noexcept
{
    const double sym = 1.0 - field_coupling;
    const double anti = 1.0 + field_coupling;
    return {b, field_coupling, root_shift(-field_coupling), root_shift(field_coupling), sym < 0.0, anti < 0.0};
}

/// Resonance shift of the antisymmetric excited pair state in branch j:
/// hbar w0 Re[-1 + sqrt(1 + alpha(0) T_jj)].
inline Energy resonance_potential(const DipoleSpecies& s, Length rho, Branch b)
{
    return root_shift(s.field_coupling(rho, b)) * s.hbar_omega0();
}

/// Leading-order resonance shift: hbar w0 alpha(0) T_jj / 2.
inline Energy resonance_perturbative(const DipoleSpecies& s, Length rho, Branch b)
{
    return (0.5 * s.field_coupling(rho, b)) * s.hbar_omega0();
}

inline CpPotential cp_potential(const DipoleSpecies& s, Length rho)
{
    CpPotential out;
    double sum = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        const Branch b = all_branches[i];
        const double y = s.field_coupling(rho, b);
        out.breakdown[i] = branch_terms(b, y);
        sum += pair_root_shift(y);
    }
    out.energy = (0.5 * sum) * s.hbar_omega0();
    return out;
}

/// -(hbar w0 alpha(0)^2 / 8) sum_j T_jj^2
inline Energy cp_potential_truncated(const DipoleSpecies& s, Length rho)
{
    double sum = 0.0;
    for (Branch b : all_branches) {
        const double y = s.field_coupling(rho, b);
        sum += y * y;
    }
    return (-0.125 * sum) * s.hbar_omega0();
}

/// (3 hbar w0 / 2) Re[-2 + sqrt(1 + 4g/3) + sqrt(1 - 4g/3)]
inline Energy cp_contact(const DipoleSpecies& s)
{
    const double c = s.coupling().contact_argument();
    return (1.5 * pair_root_shift(c)) * s.hbar_omega0();
}

/// (3 hbar w0 / 2) [-1 + sqrt(1 + 4g/3)]
inline Energy self_energy(const DipoleSpecies& s)
{
    const double c = s.coupling().contact_argument();
    return (1.5 * root_shift(c)) * s.hbar_omega0();
}

/// hbar w0 g
inline Energy self_energy_truncated(const DipoleSpecies& s)
{
    return s.coupling().value * s.hbar_omega0();
}

} // namespace gaussdisp
