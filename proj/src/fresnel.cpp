/* Composite reflection/transmission coefficients for a layered stack.

Conventions (media indexed 0..S: 0 = vacuum half-space, 1..L finite layers,
S = L+1 substrate half-space; m = resonant layer):

  r_ab = (beta_a - beta_b)/(beta_a + beta_b)   wave in a, reflected at b
  t_ab = 2 beta_a/(beta_a + beta_b)            wave in a, transmitted into b

  D(j)  reflection of a down-going wave in j by everything below j
        D(L) = r_{L,S}
        D(j) = (r_{j,j+1} + D(j+1) e^{2i beta_{j+1} d_{j+1}})
             / (1 + r_{j,j+1} D(j+1) e^{2i beta_{j+1} d_{j+1}})

  U(j)  reflection of an up-going wave in j by everything above j
        U(1) = r_{1,0}
        U(j) = (r_{j,j-1} + U(j-1) e^{2i beta_{j-1} d_{j-1}})
             / (1 + r_{j,j-1} U(j-1) e^{2i beta_{j-1} d_{j-1}})

  T(j)  down-going amplitude at the top of layer j per unit incident wave,
        with nothing below j reflecting (sub-stack truncated at j)
        T(1) = t_{01}
        T(j+1) = T(j) t_{j,j+1} e^{i beta_j d_j}
               / (1 - U(j) r_{j,j+1} e^{2i beta_j d_j})

  and the mirrored upward transmission t_{m/0} built against Dm(j), the
  down-composite truncated at m. All phases accumulate as e^{+i beta d}.

r_el of the full stack is assembled from r_{0/m}, t_{0/m}, t_{m/0}, r_{m/0},
r_{m/S} with the shared resonant-layer denominator; it agrees with the plain
bottom-up Parratt recursion to ~1e-12 (enforced by the test suite).

Up/down Fresnel coefficients at the same interface differ by sign
(r_{ji} = -r_{ij}); keeping them oriented reproduces the leading minus signs
of the reference closed forms.
*/

#include "nucav/fresnel.hpp"

#include <cmath>
#include <vector>

namespace nucav {

using cplx = std::complex<double>;

InterfaceCoeffs fresnel(cplx beta_i, cplx beta_j) {
    const cplx s = beta_i + beta_j;
    if (s == cplx(0.0, 0.0)) throw DegenerateInterface("fresnel: beta_i + beta_j = 0");
    return {(beta_i - beta_j) / s, 2.0 * beta_i / s};
}

namespace {

inline cplx phase2(const LayerProfile& p, int j) {
    return std::exp(cplx(0, 2) * p.beta[static_cast<size_t>(j)] * p.d[static_cast<size_t>(j)]);
}
inline cplx phase1(const LayerProfile& p, int j) {
    return std::exp(cplx(0, 1) * p.beta[static_cast<size_t>(j)] * p.d[static_cast<size_t>(j)]);
}
inline cplx r_of(const LayerProfile& p, int a, int b) {
    return fresnel(p.beta[static_cast<size_t>(a)], p.beta[static_cast<size_t>(b)]).r;
}
inline cplx t_of(const LayerProfile& p, int a, int b) {
    return fresnel(p.beta[static_cast<size_t>(a)], p.beta[static_cast<size_t>(b)]).t;
}

// D(from) with the stack truncated at medium `stop` (treated semi-infinite).
cplx down_composite(const LayerProfile& p, int from, int stop) {
    cplx D = r_of(p, stop - 1, stop);
    for (int j = stop - 2; j >= from; --j) {
        const cplx e = phase2(p, j + 1);
        const cplx r = r_of(p, j, j + 1);
        D = (r + D * e) / (1.0 + r * D * e);
    }
    return D;
}

// U(upto): up composite from the vacuum interface down to layer `upto`.
cplx up_composite(const LayerProfile& p, int upto) {
    cplx U = r_of(p, 1, 0);
    for (int j = 2; j <= upto; ++j) {
        const cplx e = phase2(p, j - 1);
        const cplx r = r_of(p, j, j - 1);
        U = (r + U * e) / (1.0 + r * U * e);
    }
    return U;
}

}  // namespace

CompositeCoeffs composite_coeffs(const LayerProfile& p) {
    if (p.res < 1) throw ConfigError("composite_coeffs: stack has no resonant layer");
    const int m = p.res;
    const int S = static_cast<int>(p.media()) - 1;

    CompositeCoeffs c;
    c.r_down = down_composite(p, m, S);
    c.r_up = up_composite(p, m);

    // t_{0/m}: march down, collecting each covering layer's internal multiples
    // between its up-composite and its bare lower interface.
    std::vector<cplx> U(static_cast<size_t>(m) + 1);
    if (m >= 1) {
        U[1] = r_of(p, 1, 0);
        for (int j = 2; j <= m; ++j) {
            const cplx e = phase2(p, j - 1);
            const cplx r = r_of(p, j, j - 1);
            U[static_cast<size_t>(j)] =
                (r + U[static_cast<size_t>(j - 1)] * e) / (1.0 + r * U[static_cast<size_t>(j - 1)] * e);
        }
    }
    cplx T = t_of(p, 0, 1);
    for (int j = 1; j < m; ++j) {
        T *= t_of(p, j, j + 1) * phase1(p, j) /
             (1.0 - U[static_cast<size_t>(j)] * r_of(p, j, j + 1) * phase2(p, j));
    }
    c.t_in = T;

    // t_{m/0}: march up against the down-composites truncated at m.
    cplx Sout = t_of(p, m, m - 1);
    for (int j = m - 1; j >= 1; --j) {
        const cplx Dm = down_composite(p, j, m);
        Sout *= phase1(p, j) * t_of(p, j, j - 1) / (1.0 - r_of(p, j, j - 1) * Dm * phase2(p, j));
    }
    c.t_out = Sout;

    // Electronic reflection: surface composite truncated at m, then the
    // round trips across the resonant layer.
    const cplx r0m = (m >= 1) ? down_composite(p, 0, m) : r_of(p, 0, 1);
    const cplx em = phase2(p, m);
    const cplx den = 1.0 - c.r_up * c.r_down * em;
    c.r_el = (r0m + (c.t_in * c.t_out - r0m * c.r_up) * c.r_down * em) / den;
    return c;
}

CompositeCoeffs composite_coeffs(const MaterialDB& db, const CavityStack& stack,
                                 const Geometry& geom) {
    return composite_coeffs(beta_profile(db, stack, geom));
}

std::complex<double> parratt(const LayerProfile& p) {
    const int S = static_cast<int>(p.media()) - 1;
    return down_composite(p, 0, S);
}

std::complex<double> parratt(const MaterialDB& db, const CavityStack& stack,
                             const Geometry& geom) {
    return parratt(beta_profile(db, stack, geom));
}

}  // namespace nucav
