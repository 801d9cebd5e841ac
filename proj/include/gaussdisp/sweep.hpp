#pragma once
/*
sweep.hpp
---------
Separation sweeps written as CSV. Output is byte-stable: fixed "%.12g"
formatting in the C locale, '\n' line endings, rows in grid order.
*/

#include "gaussdisp/point_dipole.hpp"
#include "gaussdisp/potentials.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gaussdisp {

enum class Quantity { cp, cp_truncated, res_x, res_z, point_modes, self_energy };

inline std::optional<Quantity> parse_quantity(std::string_view s)
{
    if (s == "cp") return Quantity::cp;
    if (s == "cp-truncated") return Quantity::cp_truncated;
    if (s == "res-x") return Quantity::res_x;
    if (s == "res-z") return Quantity::res_z;
    if (s == "point-modes") return Quantity::point_modes;
    if (s == "self-energy") return Quantity::self_energy;
    return std::nullopt;
}

inline constexpr int max_sweep_points = 1'000'000;

struct SweepRequest {
    DipoleSpecies species;
    Quantity quantity = Quantity::cp;
    Length rho_min;
    Length rho_max;
    int points = 50;
    bool log_spacing = false;

    void validate() const
    {
        if (!(rho_min < rho_max))
            throw std::invalid_argument("rho-min must be smaller than rho-max");
        if (points < 2 || points > max_sweep_points)
            throw std::invalid_argument("points must be in [2, " + std::to_string(max_sweep_points) + "]");
        if (quantity == Quantity::point_modes && !(rho_min.bohr() > 0.0))
            throw std::invalid_argument("point-modes needs rho-min > 0 (point dipoles are singular at contact)");
        if (log_spacing && !(rho_min.bohr() > 0.0))
            throw std::invalid_argument("log spacing needs rho-min > 0");
    }
};

inline std::vector<double> sweep_grid(const SweepRequest& req)
{
    req.validate();
    const double lo = req.rho_min.bohr();
    const double hi = req.rho_max.bohr();
    const int n = req.points;
    std::vector<double> rho(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double f = static_cast<double>(i) / (n - 1);
        rho[i] = req.log_spacing ? lo * std::pow(hi / lo, f) : lo + f * (hi - lo);
    }
    rho.front() = lo;
    rho.back() = hi;
    return rho;
}

inline std::string format_number(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline void write_sweep_csv(const SweepRequest& req, std::ostream& out)
{
    const auto grid = sweep_grid(req);
    const auto& sp = req.species;

    out << "rho_bohr,t,U_eV";
    if (req.quantity == Quantity::cp) {
        for (Branch b : all_branches) {
            const auto j = std::string(to_string(b));
            out << ',' << j << "_symmetric," << j << "_antisymmetric," << j << "_symmetric_dropped," << j
                << "_antisymmetric_dropped";
        }
    }
    if (req.quantity == Quantity::point_modes)
        out << ",real_modes";
    out << '\n';

    for (double r : grid) {
        const Length rho = Length::from_bohr(r);
        out << format_number(r) << ',' << format_number(r / sp.a.bohr()) << ',';
        switch (req.quantity) {
        case Quantity::cp: {
            const auto cp = cp_potential(sp, rho);
            out << format_number(cp.energy.ev());
            for (const auto& bt : cp.breakdown)
                out << ',' << format_number(bt.symmetric) << ',' << format_number(bt.antisymmetric) << ','
                    << int(bt.symmetric_dropped) << ',' << int(bt.antisymmetric_dropped);
            break;
        }
        case Quantity::cp_truncated: out << format_number(cp_potential_truncated(sp, rho).ev()); break;
        case Quantity::res_x: out << format_number(resonance_potential(sp, rho, Branch::x).ev()); break;
        case Quantity::res_z: out << format_number(resonance_potential(sp, rho, Branch::z).ev()); break;
        case Quantity::point_modes:
            out << format_number(interaction_energy(sp.model, rho).ev()) << ','
                << mode_spectrum(sp.model, rho).real_mode_count();
            break;
        case Quantity::self_energy: out << format_number(self_energy(sp).ev()); break;
        }
        out << '\n';
    }
}

} // namespace gaussdisp
