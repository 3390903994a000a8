#pragma once

#include <complex>

#include "nucav/greens.hpp"

namespace nucav {

/// Parameters of the artificial two-level system, in units of the isotope's
/// natural linewidth gamma0 where applicable.
struct TwoLevelParams {
    double cls = 0;  // collective Lamb shift [gamma0]
    double sr = 0;   // superradiant decay enhancement [gamma0]
    std::complex<double> rabi_rel;  // N/A-weighted driving field at the nuclei [1/nm^2]
    double fe = 0;   // |E_in(z)|^2 field enhancement
};

/// cls = -(N/A) omega^2 |d|^2 Re G(z,z)/gamma0,
/// sr  = 2 (N/A) omega^2 |d|^2 Im G(z,z)/gamma0 (mu0 = 1 units).
/// Requires resonant probing (geom.omega == iso.omega_nuc) and that the
/// resonant layer's material is the isotope.
TwoLevelParams two_level_params(const MaterialDB& db, const CavityStack& stack,
                                const Isotope& iso, const Geometry& geom);

/// Rescales cls and sr by the ratio of the nuclear prefactors
/// (N/A) (2Ie+1)/(2Ig+1) / ((1+alpha) omega^2) between isotopes, holding the
/// geometry fixed; the omega^2 carries the G ~ 1/omega scaling. This is the
/// estimate the full recomputation beats. fe and rabi_rel pass through.
TwoLevelParams naive_isotope_rescale(const TwoLevelParams& base,
                                     const Isotope& iso_from,
                                     const Isotope& iso_to, double d3_nm);

/// Shared coupling prefactor (N/A) omega^2 |d|^2 / gamma0 [1/nm].
double coupling_prefactor(const Isotope& iso, double d3_nm);

}  // namespace nucav
