#include "nucav/greens.hpp"

namespace nucav {

using cplx = std::complex<double>;

GreensEval greens_eval(const LayerProfile& p) {
    if (p.res < 1) throw ResonantLayerZero("greens_eval: stack has no resonant layer");
    const auto m = static_cast<size_t>(p.res);
    const double dm = p.d[m];
    if (!(dm > 0)) throw ResonantLayerZero("greens_eval: resonant layer has zero thickness");

    const CompositeCoeffs c = composite_coeffs(p);
    const cplx bm = p.beta[m];
    const cplx b0 = p.beta[0];
    const cplx I(0, 1);
    const double z = p.z;

    const cplx e_d = std::exp(I * bm * dm);
    // One shared round-trip denominator for all four quantities; the same
    // 2i*beta*d exponent is used in the field as in the Green's function.
    const cplx den = 1.0 - c.r_up * c.r_down * e_d * e_d;
    const cplx up = std::exp(I * bm * (z - dm)) + c.r_down * std::exp(-I * bm * (z - dm));
    const cplx down = std::exp(-I * bm * z) + c.r_up * std::exp(I * bm * z);

    GreensEval g;
    g.g_zz = I / (2.0 * bm) * e_d / den * up * down;
    g.g_0z = I / (2.0 * b0) * c.t_in * e_d / den * up;
    g.e_in_z = c.t_in * e_d / den * up;
    g.e_in_0 = 1.0 + c.r_el;
    return g;
}

GreensEval greens_eval(const MaterialDB& db, const CavityStack& stack,
                       const Geometry& geom) {
    return greens_eval(beta_profile(db, stack, geom));
}

std::complex<double> green_equal_z(const MaterialDB& db, const CavityStack& stack,
                                   const Geometry& geom) {
    return greens_eval(db, stack, geom).g_zz;
}

std::complex<double> green_surface(const MaterialDB& db, const CavityStack& stack,
                                   const Geometry& geom) {
    return greens_eval(db, stack, geom).g_0z;
}

std::complex<double> field_at_nuclei(const MaterialDB& db, const CavityStack& stack,
                                     const Geometry& geom) {
    return greens_eval(db, stack, geom).e_in_z;
}

std::complex<double> field_at_surface(const MaterialDB& db, const CavityStack& stack,
                                      const Geometry& geom) {
    // 1 + r_el also for stacks without a resonant layer.
    return 1.0 + parratt(db, stack, geom);
}

}  // namespace nucav
