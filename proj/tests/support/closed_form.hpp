#pragma once

// Hard-coded closed forms for the five-layer archetype
// vacuum(0)/1/2/3(resonant)/4/5/substrate(6), written out term by term as an
// oracle for the generic recursion. Deliberately self-contained: local
// Fresnel coefficients, no includes from the library under test.

#include <array>
#include <complex>

namespace closed_form {

using cplx = std::complex<double>;

struct FiveLayerInput {
    std::array<cplx, 7> beta;  // beta_0 .. beta_6
    std::array<double, 6> d;   // d[1..5] used; d[0] unused
    double z = 0;              // depth inside layer 3, from its top
};

struct FiveLayerOut {
    cplx r30, r36, r20, r46, t03, t02, t30, t31, r03, r13;
    cplx g_zz, g_0z, e_z, e_0, r_el;
};

inline cplx rij(const FiveLayerInput& in, int i, int j) {
    return (in.beta[static_cast<size_t>(i)] - in.beta[static_cast<size_t>(j)]) /
           (in.beta[static_cast<size_t>(i)] + in.beta[static_cast<size_t>(j)]);
}
inline cplx tij(const FiveLayerInput& in, int i, int j) {
    return 2.0 * in.beta[static_cast<size_t>(i)] /
           (in.beta[static_cast<size_t>(i)] + in.beta[static_cast<size_t>(j)]);
}
inline cplx e2(const FiveLayerInput& in, int j) {
    return std::exp(cplx(0, 2) * in.beta[static_cast<size_t>(j)] * in.d[static_cast<size_t>(j)]);
}
inline cplx e1(const FiveLayerInput& in, int j) {
    return std::exp(cplx(0, 1) * in.beta[static_cast<size_t>(j)] * in.d[static_cast<size_t>(j)]);
}

inline FiveLayerOut evaluate(const FiveLayerInput& in) {
    FiveLayerOut o;
    const cplx r01 = rij(in, 0, 1), r12 = rij(in, 1, 2), r23 = rij(in, 2, 3);
    const cplx r34 = rij(in, 3, 4), r45 = rij(in, 4, 5), r56 = rij(in, 5, 6);
    const cplx t01 = tij(in, 0, 1), t12 = tij(in, 1, 2), t23 = tij(in, 2, 3);
    const cplx t10 = tij(in, 1, 0), t21 = tij(in, 2, 1), t32 = tij(in, 3, 2);

    o.r20 = -(r12 + r01 * e2(in, 1)) / (1.0 + r12 * r01 * e2(in, 1));
    o.r30 = (-r23 + o.r20 * e2(in, 2)) / (1.0 - r23 * o.r20 * e2(in, 2));
    o.r46 = (r45 + r56 * e2(in, 5)) / (1.0 + r45 * r56 * e2(in, 5));
    o.r36 = (r34 + o.r46 * e2(in, 4)) / (1.0 + r34 * o.r46 * e2(in, 4));

    o.t02 = t01 * t12 * e1(in, 1) / (1.0 + r01 * r12 * e2(in, 1));
    o.t03 = o.t02 * t23 * e1(in, 2) / (1.0 - o.r20 * r23 * e2(in, 2));

    o.r13 = (r12 + r23 * e2(in, 2)) / (1.0 + r12 * r23 * e2(in, 2));
    o.r03 = (r01 + o.r13 * e2(in, 1)) / (1.0 + r01 * o.r13 * e2(in, 1));
    o.t31 = t32 * t21 * e1(in, 2) / (1.0 + r23 * r12 * e2(in, 2));
    o.t30 = o.t31 * t10 * e1(in, 1) / (1.0 + o.r13 * r01 * e2(in, 1));

    const cplx b3 = in.beta[3];
    const double d3 = in.d[3], z = in.z;
    const cplx I(0, 1);
    const cplx den = 1.0 - o.r30 * o.r36 * std::exp(cplx(0, 2) * b3 * d3);
    const cplx up = std::exp(I * b3 * (z - d3)) + o.r36 * std::exp(-I * b3 * (z - d3));
    const cplx down = std::exp(-I * b3 * z) + o.r30 * std::exp(I * b3 * z);

    o.g_zz = I / (2.0 * b3) * std::exp(I * b3 * d3) / den * up * down;
    o.g_0z = I / (2.0 * in.beta[0]) * o.t03 * std::exp(I * b3 * d3) / den *
             (std::exp(-I * b3 * (d3 - z)) + o.r36 * std::exp(I * b3 * (d3 - z)));
    // the field uses the same 2i beta3 d3 round-trip exponent as the
    // Green's function
    o.e_z = o.t03 * std::exp(I * b3 * d3) / den * up;
    o.r_el = (o.r03 + (o.t03 * o.t30 - o.r03 * o.r30) * o.r36 * std::exp(cplx(0, 2) * b3 * d3)) / den;
    o.e_0 = 1.0 + o.r_el;
    return o;
}

}  // namespace closed_form
