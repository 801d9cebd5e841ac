#pragma once
/*
quantities.hpp
--------------
Units and validated scalar wrappers.

Everything inside the library is in Hartree atomic units (hbar = 1, lengths
in bohr, energies in hartree, polarizabilities in bohr^3). Electron-volts
appear only at the I/O boundary through `hartree_in_ev`.
*/

#include <cmath>
#include <stdexcept>
#include <string>

namespace gaussdisp {

/// CODATA 2018 hartree energy in eV. The only place this number lives.
inline constexpr double hartree_in_ev = 27.211386245988;

namespace detail {

inline double require_finite(double v, const char* what)
{
    if (!std::isfinite(v))
        throw std::invalid_argument(std::string(what) + " must be finite");
    return v;
}

} // namespace detail

class Energy {
public:
    constexpr Energy() = default;

    static Energy from_hartree(double h)
    {
        return Energy(detail::require_finite(h, "energy"));
    }
    static Energy from_ev(double ev)
    {
        return Energy(detail::require_finite(ev, "energy") / hartree_in_ev);
    }

    [[nodiscard]] constexpr double hartree() const noexcept { return hartree_; }
    [[nodiscard]] constexpr double ev() const noexcept { return hartree_ * hartree_in_ev; }

    friend constexpr Energy operator+(Energy a, Energy b) noexcept { return Energy(a.hartree_ + b.hartree_); }
    friend constexpr Energy operator-(Energy a, Energy b) noexcept { return Energy(a.hartree_ - b.hartree_); }
    friend constexpr Energy operator-(Energy a) noexcept { return Energy(-a.hartree_); }
    friend constexpr Energy operator*(double s, Energy e) noexcept { return Energy(s * e.hartree_); }
    friend constexpr Energy operator*(Energy e, double s) noexcept { return Energy(s * e.hartree_); }
    friend constexpr double operator/(Energy a, Energy b) noexcept { return a.hartree_ / b.hartree_; }
    friend constexpr auto operator<=>(Energy, Energy) = default;

private:
    constexpr explicit Energy(double h) noexcept : hartree_(h) {}
    double hartree_ = 0.0;
};

/// Non-negative length in bohr. Radii additionally need a > 0; callers check that.
class Length {
public:
    constexpr Length() = default;

    static Length from_bohr(double b)
    {
        detail::require_finite(b, "length");
        if (b < 0.0)
            throw std::invalid_argument("length must be non-negative");
        return Length(b);
    }

    [[nodiscard]] constexpr double bohr() const noexcept { return bohr_; }

    friend constexpr auto operator<=>(Length, Length) = default;

private:
    constexpr explicit Length(double b) noexcept : bohr_(b) {}
    double bohr_ = 0.0;
};

/// Static polarizability as a volume (Gaussian units), bohr^3.
class Polarizability {
public:
    constexpr Polarizability() = default;

    static Polarizability from_bohr3(double v)
    {
        detail::require_finite(v, "polarizability");
        if (v < 0.0)
            throw std::invalid_argument("polarizability must be non-negative");
        return Polarizability(v);
    }

    [[nodiscard]] constexpr double bohr3() const noexcept { return bohr3_; }

    friend constexpr auto operator<=>(Polarizability, Polarizability) = default;

private:
    constexpr explicit Polarizability(double v) noexcept : bohr3_(v) {}
    double bohr3_ = 0.0;
};

inline Energy ev_to_internal(double ev) { return Energy::from_ev(ev); }
inline double internal_to_ev(Energy e) noexcept { return e.ev(); }

inline Length bohr(double b) { return Length::from_bohr(b); }
inline Energy electron_volts(double ev) { return Energy::from_ev(ev); }

} // namespace gaussdisp
