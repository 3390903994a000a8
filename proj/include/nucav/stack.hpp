#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "nucav/materials.hpp"

namespace nucav {

/// One finite layer of the cavity.
struct Layer {
    std::string material;
    double d_nm = 0;
};

/// Layered cavity: finite layers from the top, on a semi-infinite substrate,
/// under an implicit vacuum half-space. At most one layer is resonant; nuclei
/// sit at depth z_rel * d inside it.
struct CavityStack {
    std::vector<Layer> layers;
    std::string substrate;
    int resonant = -1;   // index into layers, -1 = none
    double z_rel = 0.5;  // fraction of the resonant layer thickness, from its top

    bool has_resonant() const { return resonant >= 0; }
    const Layer& resonant_layer() const { return layers.at(static_cast<size_t>(resonant)); }

    /// Parse the JSON document described in the README
    /// ({"layers":[{"material":"Pt","d_nm":2.7},...],"substrate":"Si","resonant":2,"z_rel":0.5}).
    static CavityStack from_json(const std::string& text);
    static CavityStack from_json_file(const std::string& path);
    std::string to_json() const;

    /// Throws on negative thicknesses, bad resonant index, bad z_rel.
    void validate() const;
};

/// Probe geometry: energy and grazing angle measured from the surface plane.
struct Geometry {
    double omega_keV = 0;
    double theta_mrad = 0;  // in (0, pi/2]; pi/2 = normal incidence

    void validate() const;
};

/// In-plane wavevector k_par = (omega/hbar c) cos(theta) [1/nm].
/// Exactly 0 at theta = pi/2 (units::half_pi_mrad).
double k_parallel(const Geometry& geom);

/// Resolved per-medium wavevector data for one (stack, omega, theta):
/// index 0 is the vacuum half-space, 1..L the finite layers, L+1 the
/// substrate. Complex theta is supported for pole searches; all formulas are
/// analytic continuations of the real-angle ones.
struct LayerProfile {
    std::vector<std::complex<double>> beta;  // longitudinal wavevectors [1/nm]
    std::vector<double> d;                   // thicknesses [nm]; 0 for half-spaces
    int res = -1;                            // profile index of the resonant layer, -1 = none
    double z = 0;                            // nuclei depth below the resonant layer top [nm]

    size_t media() const { return beta.size(); }
    int last_layer() const { return static_cast<int>(beta.size()) - 2; }
};

/// beta_j = sqrt(k_j^2 - k_par^2) with k_j = n_j omega, branch Im >= 0
/// (and Re >= 0 on the real axis). Principal square root; for passive media
/// at real theta this is automatically the physical branch.
LayerProfile beta_profile(const MaterialDB& db, const CavityStack& stack,
                          double omega_keV, std::complex<double> theta_mrad);

inline LayerProfile beta_profile(const MaterialDB& db, const CavityStack& stack,
                                 const Geometry& geom) {
    geom.validate();
    return beta_profile(db, stack, geom.omega_keV, geom.theta_mrad);
}

/// Per-medium beta list including the vacuum and substrate half-spaces.
std::vector<std::complex<double>> layer_beta(const MaterialDB& db,
                                             const CavityStack& stack,
                                             const Geometry& geom);

/// Equivalent stack with all zero-thickness non-resonant layers removed.
/// Throws ResonantLayerZero if the resonant layer itself has zero thickness.
CavityStack collapse_zero_layers(const CavityStack& stack);

}  // namespace nucav
