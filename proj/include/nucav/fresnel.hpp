#pragma once

#include <complex>

#include "nucav/stack.hpp"

namespace nucav {

/// s-polarization field-amplitude coefficients of one interface.
struct InterfaceCoeffs {
    std::complex<double> r;
    std::complex<double> t;
};

/// Composite coefficients seen from inside the resonant layer, plus the
/// electronic reflection of the whole stack. Phase convention: t_in and t_out
/// include the free propagation phases through the covering layers; the
/// resonant layer's own round trip enters only through the shared
/// denominator 1 - r_up r_down e^{2i beta d}.
struct CompositeCoeffs {
    std::complex<double> r_up;    // reflection toward the surface (r_{m/0})
    std::complex<double> r_down;  // reflection toward the substrate (r_{m/S})
    std::complex<double> t_in;    // vacuum -> top of the resonant layer (t_{0/m})
    std::complex<double> t_out;   // resonant layer -> vacuum (t_{m/0})
    std::complex<double> r_el;    // electronic reflection of the full stack
};

/// r = (beta_i - beta_j)/(beta_i + beta_j), t = 2 beta_i/(beta_i + beta_j).
/// Satisfies 1 + r = t. Throws DegenerateInterface when beta_i + beta_j = 0.
InterfaceCoeffs fresnel(std::complex<double> beta_i, std::complex<double> beta_j);

/// Pairwise two-term recursion applied from the outermost interfaces inward,
/// for arbitrary layer counts. Requires a resonant layer.
CompositeCoeffs composite_coeffs(const LayerProfile& p);
CompositeCoeffs composite_coeffs(const MaterialDB& db, const CavityStack& stack,
                                 const Geometry& geom);

/// Bottom-up Parratt recursion over all interfaces (resonant layer included
/// with its electronic index only). Works for stacks without a resonant layer.
std::complex<double> parratt(const LayerProfile& p);
std::complex<double> parratt(const MaterialDB& db, const CavityStack& stack,
                             const Geometry& geom);

}  // namespace nucav
