#pragma once

#include <complex>

#include "nucav/fresnel.hpp"

namespace nucav {

/// In-plane Fourier-transformed Green's function evaluations at the nuclear
/// depth plus the intracavity driving field, all from one composite-
/// coefficient pass. The delta self-term of the layered-media Green's
/// function is absorbed into omega_nuc and gamma0 and therefore omitted.
struct GreensEval {
    std::complex<double> g_zz;    // G(z,z,k_par,omega) [nm]
    std::complex<double> g_0z;    // G(0,z,k_par,omega) [nm]
    std::complex<double> e_in_z;  // E_in(z,k_par), incident amplitude 1
    std::complex<double> e_in_0;  // E_in(0,k_par) = 1 + r_el
};

/// Single-pass evaluation; requires a resonant layer of nonzero thickness.
/// The fields treat the resonant layer electronically only.
GreensEval greens_eval(const LayerProfile& p);
GreensEval greens_eval(const MaterialDB& db, const CavityStack& stack,
                       const Geometry& geom);

std::complex<double> green_equal_z(const MaterialDB& db, const CavityStack& stack,
                                   const Geometry& geom);
std::complex<double> green_surface(const MaterialDB& db, const CavityStack& stack,
                                   const Geometry& geom);
std::complex<double> field_at_nuclei(const MaterialDB& db, const CavityStack& stack,
                                     const Geometry& geom);
std::complex<double> field_at_surface(const MaterialDB& db, const CavityStack& stack,
                                      const Geometry& geom);

}  // namespace nucav
