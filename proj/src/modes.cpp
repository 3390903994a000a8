#include "nucav/modes.hpp"

#include <algorithm>
#include <cmath>

#include "nucav/units.hpp"

namespace nucav {

using cplx = std::complex<double>;

namespace {

struct GreenParts {
    cplx numerator;   // N with G = N/D
    cplx dispersion;  // D = 1 - r_up r_down e^{2i b d}
};

GreenParts green_parts(const LayerProfile& p) {
    if (p.res < 1) throw ResonantLayerZero("green_parts: stack has no resonant layer");
    const auto m = static_cast<size_t>(p.res);
    const double dm = p.d[m];
    if (!(dm > 0)) throw ResonantLayerZero("green_parts: resonant layer has zero thickness");
    const CompositeCoeffs c = composite_coeffs(p);
    const cplx bm = p.beta[m];
    const cplx I(0, 1);
    const double z = p.z;
    const cplx e_d = std::exp(I * bm * dm);
    const cplx up = std::exp(I * bm * (z - dm)) + c.r_down * std::exp(-I * bm * (z - dm));
    const cplx down = std::exp(-I * bm * z) + c.r_up * std::exp(I * bm * z);
    return {I / (2.0 * bm) * e_d * up * down, 1.0 - c.r_up * c.r_down * e_d * e_d};
}

}  // namespace

cplx dispersion_at(const MaterialDB& db, const CavityStack& stack,
                   double omega_keV, cplx theta_mrad) {
    return green_parts(beta_profile(db, stack, omega_keV, theta_mrad)).dispersion;
}

cplx green_zz_at(const MaterialDB& db, const CavityStack& stack,
                 double omega_keV, cplx theta_mrad) {
    const GreenParts gp = green_parts(beta_profile(db, stack, omega_keV, theta_mrad));
    return gp.numerator / gp.dispersion;
}

namespace {

cplx dispersion_derivative(const MaterialDB& db, const CavityStack& stack,
                           double omega_keV, cplx th, double h) {
    auto D = [&](cplx t) { return dispersion_at(db, stack, omega_keV, t); };
    const cplx d1 = (D(th + h) - D(th - h)) / (2.0 * h);
    const cplx d2 = (D(th + 0.5 * h) - D(th - 0.5 * h)) / h;
    return (4.0 * d2 - d1) / 3.0;  // Richardson
}

}  // namespace

cplx residue_derivative(const MaterialDB& db, const CavityStack& stack,
                        double omega_keV, cplx theta0_mrad) {
    const GreenParts gp = green_parts(beta_profile(db, stack, omega_keV, theta0_mrad));
    const double h = std::max(1e-6, 1e-6 * std::abs(theta0_mrad));
    return gp.numerator / dispersion_derivative(db, stack, omega_keV, theta0_mrad, h);
}

cplx contour_residue(const std::function<cplx(cplx)>& f, cplx center, double radius,
                     int nodes) {
    cplx acc = 0;
    for (int k = 0; k < nodes; ++k) {
        const double phi = 2.0 * std::numbers::pi * k / nodes;
        const cplx dz = radius * std::exp(cplx(0, phi));
        acc += f(center + dz) * dz;
    }
    return acc / static_cast<double>(nodes);  // (1/2pi i) * integral, trapezoid
}

cplx residue_contour(const MaterialDB& db, const CavityStack& stack,
                     double omega_keV, cplx theta0_mrad, double radius_mrad, int nodes) {
    return contour_residue(
        [&](cplx th) { return green_zz_at(db, stack, omega_keV, th); }, theta0_mrad,
        radius_mrad, nodes);
}

PoleSearchResult find_poles_detailed(const MaterialDB& db, const CavityStack& stack,
                                     double omega_keV, const PoleWindow& window) {
    if (!(window.hi_mrad > window.lo_mrad)) throw EmptyWindow("find_poles: empty window");
    const int n = window.n_seeds > 0
                      ? window.n_seeds
                      : std::max(1000, static_cast<int>((window.hi_mrad - window.lo_mrad) / 5e-4));

    // One real-angle pass provides both seeding signals: dips of |D| mark the
    // narrow modes (including ones that barely couple to the nuclear plane),
    // peaks of |G| mark modes whose D-zero hides behind a factorization pole.
    std::vector<double> absd(static_cast<size_t>(n)), absg(static_cast<size_t>(n));
    std::vector<double> grid(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        grid[static_cast<size_t>(i)] =
            window.lo_mrad + (window.hi_mrad - window.lo_mrad) * i / (n - 1.0);
        const GreenParts gp =
            green_parts(beta_profile(db, stack, omega_keV, grid[static_cast<size_t>(i)]));
        absd[static_cast<size_t>(i)] = std::abs(gp.dispersion);
        absg[static_cast<size_t>(i)] = std::abs(gp.numerator / gp.dispersion);
    }

    PoleSearchResult res;
    std::vector<cplx> found;
    // Two Newton targets: D itself resolves narrow modes including ones that
    // barely couple to the nuclear plane; 1/G (regular across D's own
    // factorization poles, zero exactly at the poles of G) resolves modes
    // whose D-zero hides behind a nearby D-pole.
    auto inv_g = [&](cplx th) {
        const GreenParts gp = green_parts(beta_profile(db, stack, omega_keV, th));
        return gp.dispersion / gp.numerator;
    };
    auto disp = [&](cplx th) { return dispersion_at(db, stack, omega_keV, th); };
    auto newton = [&](cplx th, const std::function<cplx(cplx)>& f) {
        for (int it = 0; it < 80; ++it) {
            const cplx F = f(th);
            const double h = std::max(1e-7, 1e-7 * std::abs(th));
            const cplx d1 = (f(th + h) - f(th - h)) / (2.0 * h);
            if (d1 == cplx(0.0)) break;
            const cplx step = F / d1;
            th -= step;
            if (th.real() != th.real()) break;  // NaN guard
            if (std::abs(step) < 1e-12 * (1.0 + std::abs(th)))
                return std::pair<bool, cplx>{true, th};
        }
        return std::pair<bool, cplx>{false, th};
    };

    auto try_seed = [&](double th_seed, bool use_inv_g) {
        ++res.seeds;
        auto [ok, th] = newton(th_seed, use_inv_g ? std::function<cplx(cplx)>(inv_g)
                                                  : std::function<cplx(cplx)>(disp));
        if (!ok || std::abs(disp(th)) > 1e-10) {
            ++res.failed;
            return;
        }
        if (th.real() < window.lo_mrad || th.real() > window.hi_mrad ||
            std::abs(th.imag()) > window.im_height_mrad)
            return;
        for (const cplx& prev : found)
            if (std::abs(prev - th) < 1e-6) return;
        found.push_back(th);
    };

    for (int i = 1; i + 1 < n; ++i) {
        const auto k = static_cast<size_t>(i);
        if (absd[k] <= absd[k - 1] && absd[k] <= absd[k + 1] && absd[k] < 0.9)
            try_seed(grid[k], false);
        if (absg[k] >= absg[k - 1] && absg[k] >= absg[k + 1]) try_seed(grid[k], true);
    }

    std::sort(found.begin(), found.end(),
              [](const cplx& a, const cplx& b) { return a.real() < b.real(); });
    int idx = 1;
    for (const cplx& th : found) {
        Pole p;
        p.theta0_mrad = th;
        p.order_index = idx++;
        p.residue = residue_derivative(db, stack, omega_keV, th);
        const double radius = 0.1 * std::abs(th.imag());
        if (radius > 0) {
            const cplx rc = residue_contour(db, stack, omega_keV, th, radius);
            p.contour_rel_err = std::abs(rc - p.residue) / std::max(std::abs(rc), 1e-300);
            p.flagged = p.contour_rel_err > 1e-4;
        }
        res.poles.push_back(p);
    }
    return res;
}

std::vector<Pole> find_poles(const MaterialDB& db, const CavityStack& stack,
                             double omega_keV, const PoleWindow& window) {
    return find_poles_detailed(db, stack, omega_keV, window).poles;
}

cplx mittag_leffler(std::span<const Pole> poles, cplx g_at_zero, double theta_mrad) {
    cplx g = g_at_zero;
    for (const Pole& p : poles)
        g += p.residue * (1.0 / p.theta0_mrad + 1.0 / (theta_mrad - p.theta0_mrad));
    return g;
}

CircleFit fit_circle(std::span<const cplx> pts) {
    // Kasa: minimize sum (|p - c|^2 - r^2)^2, linear in (cx, cy, r^2-|c|^2).
    double sxx = 0, sxy = 0, syy = 0, sx = 0, sy = 0, sxz = 0, syz = 0, sz = 0;
    const double n = static_cast<double>(pts.size());
    for (const cplx& p : pts) {
        const double x = p.real(), y = p.imag(), zz = x * x + y * y;
        sxx += x * x;
        sxy += x * y;
        syy += y * y;
        sx += x;
        sy += y;
        sxz += x * zz;
        syz += y * zz;
        sz += zz;
    }
    // Solve [2sxx 2sxy sx; 2sxy 2syy sy; 2sx 2sy n] [cx cy t]' = [sxz syz sz]'
    double A[3][4] = {{2 * sxx, 2 * sxy, sx, sxz},
                      {2 * sxy, 2 * syy, sy, syz},
                      {2 * sx, 2 * sy, n, sz}};
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
        std::swap(A[col], A[piv]);
        for (int r = 0; r < 3; ++r) {
            if (r == col || A[col][col] == 0) continue;
            const double f = A[r][col] / A[col][col];
            for (int c2 = col; c2 < 4; ++c2) A[r][c2] -= f * A[col][c2];
        }
    }
    const double cx = A[0][3] / A[0][0];
    const double cy = A[1][3] / A[1][1];
    const double t = A[2][3] / A[2][2];
    CircleFit fit;
    fit.center = {cx, cy};
    fit.radius = std::sqrt(std::max(t + cx * cx + cy * cy, 0.0));
    double acc = 0;
    for (const cplx& p : pts) {
        const double d = std::abs(p - fit.center) - fit.radius;
        acc += d * d;
    }
    fit.residual = std::sqrt(acc / n);
    return fit;
}

std::vector<cplx> single_mode_curve(const Pole& pole, cplx C,
                                    std::span<const double> thetas_mrad) {
    std::vector<cplx> out;
    out.reserve(thetas_mrad.size());
    for (double th : thetas_mrad) out.push_back(C + pole.residue / (th - pole.theta0_mrad));
    return out;
}

CircleFit single_mode_circle(const Pole& pole, cplx C,
                             std::span<const double> thetas_mrad) {
    const auto pts = single_mode_curve(pole, C, thetas_mrad);
    return fit_circle(pts);
}

cplx fit_single_mode_constant(const MaterialDB& db, const CavityStack& stack,
                              double omega_keV, const Pole& pole,
                              double theta_a_mrad, double theta_b_mrad) {
    auto sample = [&](double th) {
        return green_zz_at(db, stack, omega_keV, th) - pole.residue / (th - pole.theta0_mrad);
    };
    return 0.5 * (sample(theta_a_mrad) + sample(theta_b_mrad));
}

}  // namespace nucav
