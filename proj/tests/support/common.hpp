#pragma once

// Shared fixtures for the test suites: database loading, the reference
// cavities, a deterministic random-stack generator and helpers.

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "nucav/design.hpp"
#include "nucav/greens.hpp"
#include "nucav/modes.hpp"
#include "nucav/spectra.hpp"
#include "support/closed_form.hpp"

namespace testsupport {

using cplx = std::complex<double>;
using namespace nucav;

inline const MaterialDB& db() {
    static MaterialDB instance = MaterialDB::load_dir(NUCAV_DATA_DIR);
    return instance;
}

inline CavityStack make_stack(std::initializer_list<Layer> layers, std::string substrate,
                              int resonant, double z_rel = 0.5) {
    CavityStack s;
    s.layers = layers;
    s.substrate = std::move(substrate);
    s.resonant = resonant;
    s.z_rel = z_rel;
    return s;
}

// Reference cavities (thicknesses in nm)
inline CavityStack thick_cladding_cavity() {
    return make_stack({{"Pt", 80.4}, {"C", 46.0}, {"Fe-57", 0.574}, {"C", 46.1}, {"Pt", 17.8}},
                      "Si", 2);
}
inline CavityStack mid_visibility_cavity() {
    return make_stack({{"Pt", 2.7}, {"C", 45.7}, {"Fe-57", 0.574}, {"C", 46.1}, {"Pt", 307.3}},
                      "Si", 2);
}
inline CavityStack open_top_cavity() {
    return make_stack({{"C", 80.1}, {"Fe-57", 0.574}, {"C", 102.6}, {"Pt", 17.6}}, "Si", 1);
}

inline constexpr double kOmegaFe = 14.4;

// First-mode angles (sr maxima), located by the tests themselves via sweeps;
// these are just bracketing windows.
inline constexpr double kThickModeLo = 2.10, kThickModeHi = 2.32;
inline constexpr double kMidModeLo = 2.10, kMidModeHi = 2.32;
inline constexpr double kOpenModeLo = 2.05, kOpenModeHi = 2.28;

/// argmax of sr over a theta window
inline double sr_peak_theta(const CavityStack& stack, double lo, double hi, int n = 4001) {
    const Isotope& iso = db().isotope("Fe-57");
    double best = -1, best_th = lo;
    for (int i = 0; i < n; ++i) {
        const double th = lo + (hi - lo) * i / (n - 1.0);
        const TwoLevelParams tl = two_level_params(db(), stack, iso, {kOmegaFe, th});
        if (tl.sr > best) {
            best = tl.sr;
            best_th = th;
        }
    }
    return best_th;
}

/// Deterministic random cavity generator over the x-ray materials.
struct StackGen {
    design::Rng rng;
    explicit StackGen(std::uint64_t seed) : rng(seed) {}

    CavityStack next(bool with_resonant = true) {
        static const std::vector<std::string> mats = {"Pt", "Pd", "C", "Si", "B4C", "MgO",
                                                      "diamond"};
        CavityStack s;
        const int n = 1 + static_cast<int>(rng.below(7));  // 1..7 layers
        for (int i = 0; i < n; ++i)
            s.layers.push_back({mats[rng.below(mats.size())], 0.5 + 120.0 * rng.uniform01()});
        if (with_resonant) {
            const auto idx = rng.below(s.layers.size());
            s.layers[idx] = {"Fe-57", 0.2 + 2.0 * rng.uniform01()};
            s.resonant = static_cast<int>(idx);
        }
        s.substrate = (rng.below(2) == 0) ? "Si" : "Pt";
        s.z_rel = 0.1 + 0.8 * rng.uniform01();
        return s;
    }

    Geometry next_geometry() {
        return {kOmegaFe, 0.8 + 8.0 * rng.uniform01()};
    }
};

/// Closed-form oracle input from a five-layer stack resolved by the library's
/// beta machinery (the assembled formulas stay independent).
inline closed_form::FiveLayerInput oracle_input(const CavityStack& stack, const Geometry& geom) {
    const LayerProfile p = beta_profile(db(), stack, geom);
    closed_form::FiveLayerInput in;
    for (size_t i = 0; i < 7; ++i) in.beta[i] = p.beta[i];
    for (size_t i = 1; i <= 5; ++i) in.d[i] = p.d[i];
    in.z = p.z;
    return in;
}

inline double rel_err(cplx a, cplx b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

}  // namespace testsupport
