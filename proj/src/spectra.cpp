#include "nucav/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nucav/units.hpp"

namespace nucav {

using cplx = std::complex<double>;

std::complex<double> nuclear_response(const FanoParams& fp, double delta_gamma0) {
    return fp.a_weight / cplx(delta_gamma0, fp.hwhm);
}

std::complex<double> reflection_amplitude(const FanoParams& fp, double delta_gamma0) {
    return fp.r_el + nuclear_response(fp, delta_gamma0);
}

FanoParams fano_params(const MaterialDB& db, const CavityStack& stack,
                       const Isotope& iso, const Geometry& geom) {
    if (geom.omega_keV != iso.omega_nuc_keV)
        throw IsotopeMismatch("fano_params: probe energy != omega_nuc of " + iso.name);
    if (!stack.has_resonant() || stack.resonant_layer().material != iso.name)
        throw IsotopeMismatch("fano_params: resonant layer is not " + iso.name);

    const GreensEval g = greens_eval(db, stack, geom);
    const double pref = coupling_prefactor(iso, stack.resonant_layer().d_nm);

    FanoParams fp;
    fp.r_el = g.e_in_0 - 1.0;
    fp.a_weight = -pref * g.g_0z * g.e_in_z;
    fp.center = -pref * g.g_zz.real();
    fp.hwhm = (1.0 + 2.0 * pref * g.g_zz.imag()) / 2.0;
    fp.zero_background = std::abs(fp.r_el) < 1e-12;
    fp.phi = fp.zero_background ? 0.0 : std::arg(fp.a_weight) - std::arg(fp.r_el);
    if (fp.phi <= -std::numbers::pi) fp.phi += 2.0 * std::numbers::pi;
    if (fp.phi > std::numbers::pi) fp.phi -= 2.0 * std::numbers::pi;
    return fp;
}

FanoExtrema visibility_extrema(const FanoParams& fp) {
    const double a = std::abs(fp.a_weight);
    const double r = std::abs(fp.r_el);
    const double G = fp.hwhm;
    const double sec = 1.0 / std::cos(fp.phi);
    const double tan = std::tan(fp.phi);
    const double root =
        std::sqrt(a * a + 4.0 * r * r * G * G + 4.0 * a * r * G * std::sin(fp.phi));
    const double dp = -(a * sec + 2.0 * r * G * tan + sec * root) / (2.0 * r);
    const double dm = -(a * sec + 2.0 * r * G * tan - sec * root) / (2.0 * r);
    return {dp, dm};
}

namespace {

double intensity_at(const FanoParams& fp, double d) {
    return std::norm(reflection_amplitude(fp, d));
}

// d|r|^2/dDelta straight from the defining expression.
double intensity_slope(const FanoParams& fp, double d) {
    const cplx den(d, fp.hwhm);
    const cplx damp = -fp.a_weight / (den * den);
    return 2.0 * (std::conj(reflection_amplitude(fp, d)) * damp).real();
}

// All stationary points of |r|^2 inside [-span, span]: scan for sign changes
// of the slope, then bisect each bracket to machine precision.
std::vector<double> stationary_points(const FanoParams& fp, double span) {
    const int n = 8001;
    std::vector<double> roots;
    double x_prev = -span;
    double s_prev = intensity_slope(fp, x_prev);
    for (int i = 1; i < n; ++i) {
        const double x = -span + 2.0 * span * i / (n - 1.0);
        const double s = intensity_slope(fp, x);
        if (s_prev == 0.0) roots.push_back(x_prev);
        if (s_prev * s < 0.0) {
            double lo = x_prev, hi = x, slo = s_prev;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (mid == lo || mid == hi) break;
                const double sm = intensity_slope(fp, mid);
                if (sm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if (slo * sm < 0.0)
                    hi = mid;
                else {
                    lo = mid;
                    slo = sm;
                }
            }
            roots.push_back(0.5 * (lo + hi));
        }
        x_prev = x;
        s_prev = s;
    }
    return roots;
}

double scan_span(const FanoParams& fp) {
    const double a = std::abs(fp.a_weight);
    const double r = std::max(std::abs(fp.r_el), 1e-300);
    const double G = fp.hwhm;
    // root sum of the stationarity quadratic is bounded by
    // (|A| + 2 Gamma |r_el|)/(|r_el| |cos phi|), root product by Gamma^2
    const double cphi = std::max(std::abs(std::cos(fp.phi)), 1e-3);
    return 4.0 * ((a + 2.0 * G * r) / (r * cphi) + G);
}

}  // namespace

FanoExtrema numeric_extrema(const FanoParams& fp) {
    const auto roots = stationary_points(fp, scan_span(fp));
    if (roots.empty()) return {0.0, 0.0};
    double best_max = -std::numeric_limits<double>::infinity();
    double best_min = std::numeric_limits<double>::infinity();
    double at_max = roots.front(), at_min = roots.front();
    for (double x : roots) {
        const double v = intensity_at(fp, x);
        if (v > best_max) {
            best_max = v;
            at_max = x;
        }
        if (v < best_min) {
            best_min = v;
            at_min = x;
        }
    }
    return {at_max, at_min};
}

double visibility(const FanoParams& fp) {
    const double G = fp.hwhm;
    if (fp.zero_background || std::abs(fp.r_el) < 1e-12) {
        const double a = std::abs(fp.a_weight);
        return (a / G) * (a / G);  // Lorentzian peak minus tail
    }
    if (std::abs(std::cos(fp.phi)) < 1e-9) {
        // degenerate closed form: one extremum plus the flat background tail
        const auto roots = stationary_points(fp, scan_span(fp));
        const double tail = std::norm(fp.r_el);
        double v = 0;
        for (double x : roots) v = std::max(v, std::abs(intensity_at(fp, x) - tail));
        if (roots.size() >= 2) {
            double lo = intensity_at(fp, roots.front()), hi = lo;
            for (double x : roots) {
                lo = std::min(lo, intensity_at(fp, x));
                hi = std::max(hi, intensity_at(fp, x));
            }
            v = std::max(v, hi - lo);
        }
        return v;
    }
    const auto ex = visibility_extrema(fp);
    if (!std::isfinite(ex.delta_plus) || !std::isfinite(ex.delta_minus)) {
        const auto nu = numeric_extrema(fp);
        return std::abs(intensity_at(fp, nu.delta_plus) - intensity_at(fp, nu.delta_minus));
    }
    return std::abs(intensity_at(fp, ex.delta_plus) - intensity_at(fp, ex.delta_minus));
}

Spectrum fano_spectrum(const FanoParams& fp, const std::vector<double>& detuning) {
    Spectrum s;
    s.grid = detuning;
    s.intensity.reserve(detuning.size());
    for (double d : detuning) s.intensity.push_back(intensity_at(fp, d));
    return s;
}

std::vector<double> default_detuning_grid() {
    std::vector<double> g(4001);
    for (size_t i = 0; i < g.size(); ++i)
        g[i] = -200.0 + 400.0 * static_cast<double>(i) / 4000.0;
    return g;
}

Spectrum rocking_curve(const MaterialDB& db, const CavityStack& stack,
                       double omega_keV, const std::vector<double>& theta_mrad) {
    Spectrum s;
    s.grid = theta_mrad;
    s.intensity.reserve(theta_mrad.size());
    for (double th : theta_mrad) {
        Geometry g{omega_keV, th};
        s.intensity.push_back(std::norm(parratt(db, stack, g)));
    }
    return s;
}

}  // namespace nucav
