#include "nucav/materials.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "nucav/units.hpp"

namespace nucav {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream ss(line);
    while (std::getline(ss, cur, ',')) out.push_back(cur);
    return out;
}

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

void validate(const Material& m) {
    if (m.table.empty()) throw ConfigError("material " + m.name + ": empty table");
    double prev = -1;
    for (const auto& r : m.table) {
        if (!(r.energy_keV > prev))
            throw ConfigError("material " + m.name + ": energies not strictly increasing");
        if (r.beta < 0) throw ConfigError("material " + m.name + ": beta < 0");
        if (!std::isfinite(r.delta) || !std::isfinite(r.beta))
            throw ConfigError("material " + m.name + ": non-finite entry");
        prev = r.energy_keV;
    }
}

void validate(const Isotope& iso) {
    if (!(iso.omega_nuc_keV > 0)) throw ConfigError(iso.name + ": omega_nuc <= 0");
    if (!(iso.gamma0_neV > 0)) throw ConfigError(iso.name + ": gamma0 <= 0");
    if (iso.alpha_ic < 0) throw ConfigError(iso.name + ": alpha < 0");
    if (iso.f_LM < 0 || iso.f_LM > 1) throw ConfigError(iso.name + ": f_LM outside [0,1]");
    if (!(iso.abundance > 0) || iso.abundance > 1)
        throw ConfigError(iso.name + ": abundance outside (0,1]");
    if (!(iso.rho_V_per_nm3 > 0)) throw ConfigError(iso.name + ": rho_V <= 0");
}

}  // namespace

MaterialDB MaterialDB::load(const std::string& materials_csv,
                            const std::string& isotopes_csv) {
    MaterialDB db;
    {
        std::ifstream in(materials_csv);
        if (!in) throw ConfigError("cannot open " + materials_csv);
        std::string line;
        bool header_seen = false;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (is_comment_or_blank(line)) continue;
            if (!header_seen) {  // column header
                header_seen = true;
                continue;
            }
            auto f = split_csv(line);
            if (f.size() != 4) throw ConfigError("materials csv: bad row: " + line);
            auto& m = db.materials_[f[0]];
            m.name = f[0];
            m.table.push_back({std::stod(f[1]), std::stod(f[2]), std::stod(f[3])});
        }
    }
    for (auto& [name, m] : db.materials_) {
        std::sort(m.table.begin(), m.table.end(),
                  [](const auto& a, const auto& b) { return a.energy_keV < b.energy_keV; });
        validate(m);
    }
    {
        std::ifstream in(isotopes_csv);
        if (!in) throw ConfigError("cannot open " + isotopes_csv);
        std::string line;
        bool header_seen = false;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (is_comment_or_blank(line)) continue;
            if (!header_seen) {
                header_seen = true;
                continue;
            }
            auto f = split_csv(line);
            if (f.size() != 11) throw ConfigError("isotopes csv: bad row: " + line);
            Isotope iso;
            iso.name = f[0];
            iso.omega_nuc_keV = std::stod(f[1]);
            iso.gamma0_neV = std::stod(f[2]);
            iso.alpha_ic = std::stod(f[3]);
            iso.two_Ie = std::stoi(f[4]);
            iso.two_Ig = std::stoi(f[5]);
            iso.f_LM = std::stod(f[6]);
            iso.abundance = std::stod(f[7]);
            iso.rho_V_per_nm3 = std::stod(f[8]);
            iso.delta_el = std::stod(f[9]);
            iso.beta_el = std::stod(f[10]);
            db.add_isotope(iso);
        }
    }
    return db;
}

MaterialDB MaterialDB::load_dir(const std::string& dir) {
    return load(dir + "/materials.csv", dir + "/isotopes.csv");
}

void MaterialDB::add_material(Material m) {
    validate(m);
    materials_[m.name] = std::move(m);
}

void MaterialDB::add_isotope(Isotope iso) {
    validate(iso);
    // Register the resonant layer as a material too, so stacks can name the
    // isotope directly. A flat 3-node table spanning +-0.1% around omega_nuc
    // keeps the node at omega_nuc exact and forbids queries far away.
    if (!materials_.count(iso.name)) {
        Material m;
        m.name = iso.name;
        const double w = iso.omega_nuc_keV;
        m.table = {{w * 0.999, iso.delta_el, iso.beta_el},
                   {w, iso.delta_el, iso.beta_el},
                   {w * 1.001, iso.delta_el, iso.beta_el}};
        materials_[m.name] = std::move(m);
    }
    isotopes_[iso.name] = std::move(iso);
}

const Material& MaterialDB::material(const std::string& name) const {
    auto it = materials_.find(name);
    if (it == materials_.end()) throw UnknownMaterial(name);
    return it->second;
}

const Isotope& MaterialDB::isotope(const std::string& name) const {
    auto it = isotopes_.find(name);
    if (it == isotopes_.end()) throw UnknownIsotope(name);
    return it->second;
}

bool MaterialDB::has_material(const std::string& name) const {
    return name == "vacuum" || materials_.count(name) > 0;
}

std::vector<std::string> MaterialDB::material_names() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : materials_) out.push_back(k);
    return out;
}

std::vector<std::string> MaterialDB::isotope_names() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : isotopes_) out.push_back(k);
    return out;
}

namespace {

// Log-log linear in E for one column; falls back to linear interpolation when
// either endpoint is <= 0 (sign changes across the optical band, exact zeros).
double interp_column(double E, double E0, double E1, double v0, double v1) {
    if (E == E0) return v0;
    if (E == E1) return v1;
    if (v0 > 0 && v1 > 0) {
        const double t = std::log(E / E0) / std::log(E1 / E0);
        return std::exp(std::log(v0) + t * (std::log(v1) - std::log(v0)));
    }
    const double t = (E - E0) / (E1 - E0);
    return v0 + t * (v1 - v0);
}

}  // namespace

OpticalConstants optical_constants(const MaterialDB& db, const std::string& material,
                                   double energy_keV) {
    if (material == "vacuum") return {0.0, 0.0};
    const Material& m = db.material(material);
    const auto& t = m.table;
    if (energy_keV < t.front().energy_keV || energy_keV > t.back().energy_keV)
        throw EnergyOutOfRange(material + ": " + std::to_string(energy_keV) +
                               " keV outside table range");
    auto hi = std::lower_bound(t.begin(), t.end(), energy_keV,
                               [](const Material::Row& r, double E) { return r.energy_keV < E; });
    if (hi->energy_keV == energy_keV) return {hi->delta, hi->beta};
    auto lo = hi - 1;
    const double d = interp_column(energy_keV, lo->energy_keV, hi->energy_keV, lo->delta, hi->delta);
    const double b = interp_column(energy_keV, lo->energy_keV, hi->energy_keV, lo->beta, hi->beta);
    return {d, b};
}

std::complex<double> refractive_index(const MaterialDB& db,
                                      const std::string& material,
                                      double energy_keV) {
    const OpticalConstants oc = optical_constants(db, material, energy_keV);
    return {1.0 - oc.delta, oc.beta};
}

double dipole_strength(const Isotope& iso) {
    const double omega = units::wavenumber(iso.omega_nuc_keV);
    const double gamma0 = units::rate_from_neV(iso.gamma0_neV);
    return 2.0 * std::numbers::pi * gamma0 / (omega * omega * omega) /
           (2.0 * (1.0 + iso.alpha_ic)) * iso.multiplicity();
}

double areal_density(const Isotope& iso, double d3_nm) {
    if (!(d3_nm > 0)) throw NonPositiveThickness("areal_density: d3 <= 0");
    return d3_nm * iso.rho_V_per_nm3 * iso.abundance * iso.f_LM;
}

}  // namespace nucav
