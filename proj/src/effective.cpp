#include "nucav/effective.hpp"

#include <cmath>

#include "nucav/units.hpp"

namespace nucav {

double coupling_prefactor(const Isotope& iso, double d3_nm) {
    const double omega = units::wavenumber(iso.omega_nuc_keV);
    const double gamma0 = units::rate_from_neV(iso.gamma0_neV);
    return areal_density(iso, d3_nm) * omega * omega * dipole_strength(iso) / gamma0;
}

TwoLevelParams two_level_params(const MaterialDB& db, const CavityStack& stack,
                                const Isotope& iso, const Geometry& geom) {
    if (geom.omega_keV != iso.omega_nuc_keV)
        throw IsotopeMismatch("two_level_params: probe energy != omega_nuc of " + iso.name);
    if (!stack.has_resonant() || stack.resonant_layer().material != iso.name)
        throw IsotopeMismatch("two_level_params: resonant layer is not " + iso.name);

    const GreensEval g = greens_eval(db, stack, geom);
    const double pref = coupling_prefactor(iso, stack.resonant_layer().d_nm);

    TwoLevelParams out;
    out.cls = -pref * g.g_zz.real();
    out.sr = 2.0 * pref * g.g_zz.imag();
    out.fe = std::norm(g.e_in_z);
    out.rabi_rel = areal_density(iso, stack.resonant_layer().d_nm) * g.e_in_z;
    return out;
}

TwoLevelParams naive_isotope_rescale(const TwoLevelParams& base,
                                     const Isotope& iso_from,
                                     const Isotope& iso_to, double d3_nm) {
    auto factor = [d3_nm](const Isotope& iso) {
        const double omega = units::wavenumber(iso.omega_nuc_keV);
        return areal_density(iso, d3_nm) * iso.multiplicity() /
               ((1.0 + iso.alpha_ic) * omega * omega);
    };
    const double scale = factor(iso_to) / factor(iso_from);
    TwoLevelParams out = base;
    out.cls *= scale;
    out.sr *= scale;
    return out;
}

}  // namespace nucav
