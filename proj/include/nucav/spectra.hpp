#pragma once

#include <complex>
#include <vector>

#include "nucav/effective.hpp"

namespace nucav {

/// Fano lineshape parameters of the nuclear feature on the electronic
/// background, in gamma0 units. The electronic background is frozen across
/// the nuclear line.
struct FanoParams {
    std::complex<double> r_el;      // electronic background
    std::complex<double> a_weight;  // complex nuclear weight A [gamma0]
    double phi = 0;                 // arg(A) - arg(r_el), in (-pi, pi]
    double center = 0;              // omega_nuc + cls offset [gamma0]
    double hwhm = 0.5;              // (gamma0 + sr)/2 [gamma0]
    bool zero_background = false;   // |r_el| < 1e-12, phi undefined
};

/// Sampled intensity spectrum (|r|^2 over detuning, or over theta for
/// rocking curves).
struct Spectrum {
    std::vector<double> grid;
    std::vector<double> intensity;
};

/// Nuclear contribution to the reflection amplitude, A/(Delta + i Gamma),
/// at detuning delta = omega - center in gamma0 units.
std::complex<double> nuclear_response(const FanoParams& fp, double delta_gamma0);

/// Full reflection amplitude r_el + A/(Delta + i Gamma).
std::complex<double> reflection_amplitude(const FanoParams& fp, double delta_gamma0);

/// Assemble FanoParams for resonant probing:
/// A = -(N/A) omega^2 |d|^2 G(0,z) E_in(z) / gamma0.
FanoParams fano_params(const MaterialDB& db, const CavityStack& stack,
                       const Isotope& iso, const Geometry& geom);

/// Closed-form extremum positions of |r(Delta)|^2, relative to center.
/// Requires |r_el| > 1e-12 and cos(phi) != 0.
struct FanoExtrema {
    double delta_plus;
    double delta_minus;
};
FanoExtrema visibility_extrema(const FanoParams& fp);

/// Bracketed 1-D numerical extremum search on |r(Delta)|^2 (grid scan plus
/// golden-section and parabolic refinement). Independent of the closed form.
FanoExtrema numeric_extrema(const FanoParams& fp);

/// Peak-to-peak amplitude | |r(D+)|^2 - |r(D-)|^2 |. Closed form where it
/// applies, numeric search when cos(phi) ~ 0, and the pure-Lorentzian peak
/// (|A|/Gamma)^2 on zero background. Total over all FanoParams.
double visibility(const FanoParams& fp);

/// |r|^2 sampled on a detuning grid [gamma0].
Spectrum fano_spectrum(const FanoParams& fp, const std::vector<double>& detuning);

/// Default detuning grid: +-200 gamma0, 4001 points.
std::vector<double> default_detuning_grid();

/// Electronically reflected intensity |r_el(theta)|^2 over a theta grid [mrad].
Spectrum rocking_curve(const MaterialDB& db, const CavityStack& stack,
                       double omega_keV, const std::vector<double>& theta_mrad);

}  // namespace nucav
