#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "nucav/errors.hpp"

namespace nucav {

/// Tabulated electronic optical constants of one material,
/// n(E) = 1 - delta(E) + i*beta(E).
struct Material {
    std::string name;
    struct Row {
        double energy_keV;
        double delta;
        double beta;
    };
    std::vector<Row> table;  // energies strictly increasing, non-empty
};

/// Nuclear transition data of a Moessbauer isotope plus the electronic index
/// of the (enriched) layer material at the transition energy.
struct Isotope {
    std::string name;
    double omega_nuc_keV = 0;  // transition energy
    double gamma0_neV = 0;     // natural linewidth (absolute unit conversion only)
    double alpha_ic = 0;       // internal conversion coefficient
    int two_Ie = 0;            // 2 * excited-state spin
    int two_Ig = 0;            // 2 * ground-state spin
    double f_LM = 0;           // Lamb-Moessbauer factor
    double abundance = 0;      // resonant-isotope fraction of the layer
    double rho_V_per_nm3 = 0;  // atom number density of the layer material
    double delta_el = 0;       // electronic index at omega_nuc
    double beta_el = 0;

    /// (2Ie+1)/(2Ig+1)
    double multiplicity() const {
        return double(two_Ie + 1) / double(two_Ig + 1);
    }
};

/// Immutable after load; safe for concurrent reads.
class MaterialDB {
  public:
    /// Parse the two CSV files (see data/ for the shipped defaults).
    /// Isotope records additionally register their layer material under the
    /// isotope name, valid in a narrow band around omega_nuc.
    static MaterialDB load(const std::string& materials_csv,
                           const std::string& isotopes_csv);

    /// Load from a directory containing materials.csv and isotopes.csv.
    static MaterialDB load_dir(const std::string& dir);

    const Material& material(const std::string& name) const;
    const Isotope& isotope(const std::string& name) const;
    bool has_material(const std::string& name) const;

    std::vector<std::string> material_names() const;
    std::vector<std::string> isotope_names() const;

    void add_material(Material m);
    void add_isotope(Isotope iso);

  private:
    std::map<std::string, Material> materials_;
    std::map<std::string, Isotope> isotopes_;
};

/// Interpolated (delta, beta) pair; the small quantities are served directly
/// so wavevector computations can avoid forming 1 - delta.
struct OpticalConstants {
    double delta = 0;
    double beta = 0;
};

/// Log-log interpolation between tabulated nodes (linear fallback where a
/// value is non-positive, e.g. the optical band of diamond). "vacuum"
/// resolves to exactly (0, 0) at any energy. No extrapolation.
OpticalConstants optical_constants(const MaterialDB& db, const std::string& material,
                                   double energy_keV);

/// n(E) = 1 - delta + i*beta.
std::complex<double> refractive_index(const MaterialDB& db,
                                      const std::string& material,
                                      double energy_keV);

/// |d|^2 = (2 pi gamma0 / omega^3) * 1/(2(1+alpha)) * (2Ie+1)/(2Ig+1),
/// with gamma0 and omega in 1/nm, so the result is in nm^2.
double dipole_strength(const Isotope& iso);

/// Effective in-plane resonant number density N/A = d3 * rho_V * a * f_LM [1/nm^2].
double areal_density(const Isotope& iso, double d3_nm);

}  // namespace nucav
