#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "nucav/greens.hpp"

namespace nucav {

/// Complex-angle cavity mode: zero of D(theta) = 1 - r_up r_down e^{2i b d}
/// with the residue of G(z,z) there.
struct Pole {
    std::complex<double> theta0_mrad;
    std::complex<double> residue;  // Res(G, theta0) [nm mrad]
    int order_index = 0;           // 1-based, sorted by Re(theta0)
    double contour_rel_err = 0;    // derivative-vs-contour residue check
    bool flagged = false;          // contour disagreement above 1e-4
};

struct PoleWindow {
    double lo_mrad = 0;
    double hi_mrad = 0;
    double im_height_mrad = 0.5;  // search strip |Im theta| <= height
    int n_seeds = 0;              // 0 = auto (grid step ~5e-4 mrad)
};

struct PoleSearchResult {
    std::vector<Pole> poles;
    int seeds = 0;
    int failed = 0;  // Newton runs dropped for non-convergence
};

/// Dispersion function D(theta) whose zeros are the poles of G, evaluated by
/// analytic continuation in theta (resonant-layer-centered factorization).
std::complex<double> dispersion_at(const MaterialDB& db, const CavityStack& stack,
                                   double omega_keV, std::complex<double> theta_mrad);

/// G(z,z) at complex angle.
std::complex<double> green_zz_at(const MaterialDB& db, const CavityStack& stack,
                                 double omega_keV, std::complex<double> theta_mrad);

/// Newton iteration seeded from a real-angle scan of |D|, deduplicated at
/// 1e-6 mrad, sorted by Re(theta0). Residues by N/D' with a contour
/// cross-check (radius 0.1 |Im theta0|, 64 nodes).
PoleSearchResult find_poles_detailed(const MaterialDB& db, const CavityStack& stack,
                                     double omega_keV, const PoleWindow& window);
std::vector<Pole> find_poles(const MaterialDB& db, const CavityStack& stack,
                             double omega_keV, const PoleWindow& window);

/// Res = N(theta0)/D'(theta0), derivative by Richardson-extrapolated central
/// differences of the analytically continued coefficients.
std::complex<double> residue_derivative(const MaterialDB& db, const CavityStack& stack,
                                        double omega_keV, std::complex<double> theta0_mrad);

/// (1/2pi i) contour integral of f around center, periodic trapezoid.
std::complex<double> contour_residue(
    const std::function<std::complex<double>(std::complex<double>)>& f,
    std::complex<double> center, double radius, int nodes = 64);

/// Contour residue of G(z,z) around the pole.
std::complex<double> residue_contour(const MaterialDB& db, const CavityStack& stack,
                                     double omega_keV, std::complex<double> theta0_mrad,
                                     double radius_mrad, int nodes = 64);

/// G(0) + sum Res (1/theta0 + 1/(theta - theta0)) over the supplied poles.
std::complex<double> mittag_leffler(std::span<const Pole> poles,
                                    std::complex<double> g_at_zero, double theta_mrad);

struct CircleFit {
    std::complex<double> center;
    double radius = 0;
    double residual = 0;  // rms radial deviation
};

/// Algebraic least-squares circle fit (Kasa).
CircleFit fit_circle(std::span<const std::complex<double>> pts);

/// Single-mode values C + Res/(theta - theta0) along a real sweep.
std::vector<std::complex<double>> single_mode_curve(const Pole& pole,
                                                    std::complex<double> C,
                                                    std::span<const double> thetas_mrad);

/// Evaluate the single-mode form along the sweep and fit a circle.
CircleFit single_mode_circle(const Pole& pole, std::complex<double> C,
                             std::span<const double> thetas_mrad);

/// The constant term fitted from two off-resonant samples,
/// mean of G(theta) - Res/(theta - theta0).
std::complex<double> fit_single_mode_constant(const MaterialDB& db,
                                              const CavityStack& stack,
                                              double omega_keV, const Pole& pole,
                                              double theta_a_mrad, double theta_b_mrad);

}  // namespace nucav
