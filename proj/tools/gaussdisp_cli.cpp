// gaussdisp: sweeps, table reproduction, mode inspection and oracle self-checks.
//
// Exit codes: 0 success, 2 usage, 3 I/O, 4 numerical, 5 reproduction failure.

#include "gaussdisp/gaussdisp.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace gd = gaussdisp;

namespace {

enum Exit : int { ok = 0, usage = 2, io = 3, numerical = 4, reproduction = 5 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SpeciesOptions {
    std::string file;
    std::string name;
};

gd::DipoleSpecies resolve_species(const SpeciesOptions& opt)
{
    const auto pool = opt.file.empty() ? gd::published_species() : gd::load_species(opt.file);
    if (opt.name.empty()) {
        if (pool.size() == 1)
            return pool.front();
        throw UsageError("--species is required (choose one of the available species)");
    }
    for (const auto& s : pool)
        if (s.name == opt.name)
            return s;
    throw UsageError("unknown species '" + opt.name + "'");
}

void add_species_flags(CLI::App* cmd, SpeciesOptions& opt)
{
    cmd->add_option("--species-file", opt.file, "JSON species file (default: built-in He/Ne/Ar/Kr)");
    cmd->add_option("--species", opt.name, "species name");
}

std::vector<gd::TableRow> resolve_rows(const std::string& path)
{
    auto rows = path.empty() ? gd::published_table() : gd::load_table_rows(path);
    if (rows.empty())
        throw UsageError("no table rows in '" + path + "'");
    return rows;
}

std::string fmt(double v) { return gd::format_number(v); }

int cmd_sweep(const SpeciesOptions& sp, const std::string& quantity, double rho_min, double rho_max, int points,
              bool log_spacing, const std::string& out_path)
{
    const auto q = gd::parse_quantity(quantity);
    if (!q)
        throw UsageError("unknown quantity '" + quantity + "'");
    gd::SweepRequest req{resolve_species(sp), *q, {}, {}, points, log_spacing};
    try {
        req.rho_min = gd::Length::from_bohr(rho_min);
        req.rho_max = gd::Length::from_bohr(rho_max);
        req.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    if (out_path.empty() || out_path == "-") {
        gd::write_sweep_csv(req, std::cout);
        return std::cout.good() ? ok : io;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        return io;
    }
    gd::write_sweep_csv(req, out);
    out.close();
    return out ? ok : io;
}

int cmd_table(const std::string& rows_path)
{
    const auto report = gd::reproduce_table(resolve_rows(rows_path));
    std::cout << "element,column,published_eV,computed_eV,relative_deviation,status\n";
    for (const auto& row : report.rows) {
        for (const auto& c : row.cells)
            std::cout << row.element << ',' << c.column << ',' << fmt(c.published_ev) << ',' << fmt(c.computed_ev)
                      << ',' << fmt(c.relative_deviation) << ',' << (c.pass ? "ok" : "FAIL") << '\n';
        if (!row.error.empty())
            std::cerr << "note: " << row.error << '\n';
    }
    std::cout << (report.pass ? "table reproduced within tolerance\n" : "table NOT reproduced\n");
    return report.pass ? ok : reproduction;
}

int cmd_invert(const std::string& rows_path)
{
    int status = ok;
    std::cout << "element,hbar_omega0_eV,g,contact_argument,residual_u_s_full,residual_u_cp_trunc0,status\n";
    for (const auto& row : resolve_rows(rows_path)) {
        std::optional<gd::InvertedParams> p;
        std::string error;
        try {
            p = gd::invert_table_row(row);
        } catch (const gd::InversionError& e) {
            p = e.params();
            error = e.what();
            status = reproduction;
        }
        if (p)
            std::cout << row.element << ',' << fmt(p->hbar_omega0.ev()) << ',' << fmt(p->g.value) << ','
                      << fmt(p->g.contact_argument()) << ',' << fmt(p->residual_self_energy) << ','
                      << fmt(p->residual_cp_truncated) << ',' << (error.empty() ? "ok" : "inconsistent") << '\n';
        else
            std::cout << row.element << ",,,,,,failed\n";
        if (!error.empty())
            std::cerr << "note: " << error << '\n';
    }
    return status;
}

int cmd_modes(const SpeciesOptions& sp, double rho)
{
    const auto s = resolve_species(sp);
    gd::Length r;
    try {
        r = gd::Length::from_bohr(rho);
        if (!(rho > 0.0))
            throw std::invalid_argument("--rho must be > 0 for point dipoles");
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto spectrum = gd::mode_spectrum(s.model, r);
    std::cout << "u," << fmt(gd::coupling_ratio(s.model, r)) << '\n';
    std::cout << "frequency_squared_factor,multiplicity,real\n";
    for (const auto& m : spectrum.modes)
        std::cout << fmt(m.frequency_squared_factor) << ',' << m.multiplicity << ',' << (m.is_real ? 1 : 0) << '\n';
    std::cout << "real_modes," << spectrum.real_mode_count() << '\n';
    std::cout << "U_eV," << fmt(gd::interaction_energy(s.model, r).ev()) << '\n';
    std::cout << "london_eV," << fmt(gd::london_asymptote(s.model, r).ev()) << '\n';
    std::cout << "repulsive_asymptote_eV," << fmt(gd::repulsive_asymptote(s.model, r).ev()) << '\n';
    return ok;
}

int cmd_self_energy(const SpeciesOptions& sp)
{
    const auto s = resolve_species(sp);
    const auto contact = gd::Length::from_bohr(0.0);
    std::cout << "species," << s.name << '\n'
              << "hbar_omega0_eV," << fmt(s.hbar_omega0().ev()) << '\n'
              << "g," << fmt(s.coupling().value) << '\n'
              << "contact_argument," << fmt(s.coupling().contact_argument()) << '\n'
              << "u_s_full_eV," << fmt(gd::self_energy(s).ev()) << '\n'
              << "u_s_trunc_eV," << fmt(gd::self_energy_truncated(s).ev()) << '\n'
              << "u_cp_full0_eV," << fmt(gd::cp_contact(s).ev()) << '\n'
              << "u_cp_trunc0_eV," << fmt(gd::cp_potential_truncated(s, contact).ev()) << '\n';
    return ok;
}

int cmd_oracle_check(double tolerance, const std::vector<double>& a_values)
{
    gd::QuadratureOptions opts;
    opts.abs_tol = tolerance;
    opts.rel_tol = std::min(opts.rel_tol, tolerance);
    const auto a_grid = a_values.empty() ? gd::signed_log_grid(1e-4, 1e3, 100) : a_values;
    const auto t_grid = gd::log_grid(1e-3, 30.0, 50);
    try {
        const auto rep = gd::run_oracle_check(a_grid, gd::published_species(), t_grid, opts);
        std::cout << "log_integral_points," << a_grid.size() << '\n'
                  << "max_log_integral_deviation," << fmt(rep.max_log_integral_deviation) << '\n'
                  << "max_cp_scaled_deviation," << fmt(rep.max_cp_scaled_deviation) << '\n'
                  << "max_resonance_scaled_deviation," << fmt(rep.max_resonance_scaled_deviation) << '\n'
                  << "evaluations," << rep.evaluations << '\n'
                  << (rep.pass() ? "oracle check passed\n" : "oracle check FAILED\n");
        return rep.pass() ? ok : numerical;
    } catch (const gd::QuadratureError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return numerical;
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Dispersion interactions between finite-size Gaussian dipoles"};
    app.require_subcommand(1);

    SpeciesOptions species;
    std::string quantity = "cp";
    double rho_min = 0.0, rho_max = 0.0, rho = 0.0, tolerance = 1e-10;
    int points = 50;
    bool log_spacing = false;
    std::string out_path, rows_path;
    std::vector<double> a_values;

    auto* sweep = app.add_subcommand("sweep", "write a potential curve as CSV");
    add_species_flags(sweep, species);
    sweep->add_option("--quantity", quantity, "cp | cp-truncated | res-x | res-z | point-modes | self-energy");
    sweep->add_option("--rho-min", rho_min, "smallest separation (bohr)")->required();
    sweep->add_option("--rho-max", rho_max, "largest separation (bohr)")->required();
    sweep->add_option("--points", points, "number of samples");
    sweep->add_flag("--log", log_spacing, "logarithmic spacing");
    sweep->add_option("--out", out_path, "output CSV path (default stdout)");

    auto* table = app.add_subcommand("table", "reproduce the noble-gas contact/self-energy table");
    table->add_option("--rows", rows_path, "JSON table rows (default: built-in)");

    auto* invert = app.add_subcommand("invert", "recover hbar*w0 and g from table rows");
    invert->add_option("--rows", rows_path, "JSON table rows (default: built-in)");

    auto* modes = app.add_subcommand("modes", "point-dipole normal modes at one separation");
    add_species_flags(modes, species);
    modes->add_option("--rho", rho, "separation (bohr)")->required();

    auto* self = app.add_subcommand("self-energy", "self-energies and contact energies of one species");
    add_species_flags(self, species);

    auto* oracle = app.add_subcommand("oracle-check", "closed forms vs brute-force quadrature");
    oracle->add_option("--tolerance", tolerance, "absolute quadrature tolerance");
    oracle->add_option("--a-value", a_values, "override the log-integral coupling grid");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        if (*sweep)
            return cmd_sweep(species, quantity, rho_min, rho_max, points, log_spacing, out_path);
        if (*table)
            return cmd_table(rows_path);
        if (*invert)
            return cmd_invert(rows_path);
        if (*modes)
            return cmd_modes(species, rho);
        if (*self)
            return cmd_self_energy(species);
        if (*oracle)
            return cmd_oracle_check(tolerance, a_values);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const gd::DataFileError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return io;
    } catch (const gd::QuadratureError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return numerical;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}
