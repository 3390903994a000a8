#include "nucav/design.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <json.hpp>

#include "nucav/units.hpp"

namespace nucav::design {

using json = nlohmann::json;

Var var_from_name(const std::string& name) {
    if (name == "d_top") return Var::d_top;
    if (name == "d_guide_up") return Var::d_guide_up;
    if (name == "d_guide_down") return Var::d_guide_down;
    if (name == "d_bottom") return Var::d_bottom;
    if (name == "z_rel") return Var::z_rel;
    if (name == "theta") return Var::theta;
    if (name == "omega") return Var::omega;
    throw ConfigError("unknown design variable: " + name);
}

std::string var_name(Var v) {
    switch (v) {
        case Var::d_top: return "d_top";
        case Var::d_guide_up: return "d_guide_up";
        case Var::d_guide_down: return "d_guide_down";
        case Var::d_bottom: return "d_bottom";
        case Var::z_rel: return "z_rel";
        case Var::theta: return "theta";
        case Var::omega: return "omega";
    }
    return "?";
}

StackTemplate StackTemplate::fabry_perot() {
    StackTemplate t;
    t.kind = Kind::fabry_perot;
    t.cladding = "diamond";
    t.guide = "gap";
    t.isotope.clear();
    t.substrate = "vacuum";
    t.d_res_nm = 1.0;
    t.d_top = 72.9;
    t.d_bottom = 72.9;
    t.d_guide_up = 174.5;
    t.d_guide_down = 174.5;
    t.theta_mrad = units::half_pi_mrad;
    t.omega_keV = 1.239842e0 / 700.0;  // ~700 nm
    return t;
}

void DesignSpace::validate() const {
    if (variables.empty()) throw ConfigError("design space has no variables");
    for (const auto& b : variables) {
        if (!(b.lo < b.hi) || !std::isfinite(b.lo) || !std::isfinite(b.hi))
            throw ConfigError("bad bounds for " + var_name(b.var));
        if ((b.var == Var::d_top || b.var == Var::d_guide_up || b.var == Var::d_guide_down ||
             b.var == Var::d_bottom) &&
            b.lo < 0)
            throw ConfigError("negative thickness bound for " + var_name(b.var));
        if (b.var == Var::theta && (b.lo <= 0 || b.hi > units::half_pi_mrad))
            throw ConfigError("theta bounds outside (0, pi/2]");
    }
}

DesignSpace DesignSpace::archetype(const std::string& cladding, const std::string& guide,
                                   const std::string& isotope, bool with_z_rel) {
    DesignSpace s;
    s.tmpl.cladding = cladding;
    s.tmpl.guide = guide;
    s.tmpl.isotope = isotope;
    s.variables = {{Var::d_top, 0, 400},
                   {Var::d_guide_up, 1, 400},
                   {Var::d_guide_down, 1, 400},
                   {Var::d_bottom, 1, 400},
                   {Var::theta, 0.5, 10}};
    if (with_z_rel) s.variables.push_back({Var::z_rel, 0.05, 0.95});
    return s;
}

std::pair<CavityStack, Geometry> realize(const MaterialDB& db, const DesignSpace& space,
                                         const std::vector<double>& x) {
    if (x.size() != space.dim()) throw ConfigError("variable vector has wrong length");
    const StackTemplate& t = space.tmpl;
    double d_top = t.d_top, d_gu = t.d_guide_up, d_gd = t.d_guide_down, d_bot = t.d_bottom;
    double z_rel = t.z_rel, theta = t.theta_mrad, omega = t.omega_keV;
    for (size_t i = 0; i < x.size(); ++i) {
        const Bound& b = space.variables[i];
        if (x[i] < b.lo || x[i] > b.hi)
            throw OutOfBounds(var_name(b.var) + " = " + std::to_string(x[i]) + " outside bounds");
        switch (b.var) {
            case Var::d_top: d_top = x[i]; break;
            case Var::d_guide_up: d_gu = x[i]; break;
            case Var::d_guide_down: d_gd = x[i]; break;
            case Var::d_bottom: d_bot = x[i]; break;
            case Var::z_rel: z_rel = x[i]; break;
            case Var::theta: theta = x[i]; break;
            case Var::omega: omega = x[i]; break;
        }
    }

    CavityStack stack;
    std::string res_material;
    if (t.kind == StackTemplate::Kind::archetype) {
        res_material = t.isotope;
        if (omega <= 0) omega = db.isotope(t.isotope).omega_nuc_keV;
    } else {
        res_material = t.guide;
        theta = units::half_pi_mrad;
    }
    stack.layers = {{t.cladding, d_top},
                    {t.guide, d_gu},
                    {res_material, t.d_res_nm},
                    {t.guide, d_gd},
                    {t.cladding, d_bot}};
    stack.substrate = t.substrate;
    stack.resonant = 2;
    stack.z_rel = z_rel;
    return {stack, Geometry{omega, theta}};
}

DesignPoint evaluate(const MaterialDB& db, const DesignSpace& space,
                     const std::vector<double>& x) {
    auto [stack, geom] = realize(db, space, x);
    DesignPoint p;
    p.x = x;
    try {
        if (space.tmpl.kind == StackTemplate::Kind::archetype) {
            const Isotope& iso = db.isotope(space.tmpl.isotope);
            const TwoLevelParams tl = two_level_params(db, stack, iso, geom);
            const FanoParams fp = fano_params(db, stack, iso, geom);
            p.obj = {tl.cls, tl.sr, visibility(fp), tl.fe};
        } else {
            // Fabry-Perot: shift/decay relative to the free-space rate at the
            // probe energy; no nuclear layer, so no visibility.
            const GreensEval g = greens_eval(db, stack, geom);
            const double k = units::wavenumber(geom.omega_keV);
            p.obj = {-2.0 * k * g.g_zz.real(), 2.0 * k * g.g_zz.imag(), 0.0,
                     std::norm(g.e_in_z)};
        }
        p.feasible = std::isfinite(p.obj.cls) && std::isfinite(p.obj.sr) &&
                     std::isfinite(p.obj.vis) && std::isfinite(p.obj.fe);
    } catch (const Error&) {
        p.feasible = false;
    }
    return p;
}

double Objectives::get(const std::string& name) const {
    if (name == "cls") return cls;
    if (name == "sr") return sr;
    if (name == "vis") return vis;
    if (name == "fe") return fe;
    throw ConfigError("unknown objective: " + name);
}

std::uint64_t Rng::next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double Rng::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::size_t Rng::below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

std::vector<std::vector<double>> latin_hypercube(int n, size_t dim, Rng& rng) {
    std::vector<std::vector<double>> pts(static_cast<size_t>(n), std::vector<double>(dim));
    std::vector<int> perm(static_cast<size_t>(n));
    for (size_t d = 0; d < dim; ++d) {
        std::iota(perm.begin(), perm.end(), 0);
        for (size_t i = perm.size(); i > 1; --i)  // Fisher-Yates
            std::swap(perm[i - 1], perm[rng.below(i)]);
        for (size_t i = 0; i < perm.size(); ++i)
            pts[i][d] = (perm[i] + rng.uniform01()) / n;
    }
    return pts;
}

namespace {

struct ScaledEval {
    const EvalFn& eval;
    const DesignSpace& space;
    const CostFn& cost;
    mutable int evals = 0;

    std::vector<double> denorm(const std::vector<double>& xn) const {
        std::vector<double> x(xn.size());
        for (size_t i = 0; i < xn.size(); ++i) {
            const Bound& b = space.variables[i];
            x[i] = b.lo + xn[i] * (b.hi - b.lo);
        }
        return x;
    }

    std::pair<double, DesignPoint> operator()(const std::vector<double>& xn) const {
        ++evals;
        DesignPoint p = eval(denorm(xn));
        if (!p.feasible) return {std::numeric_limits<double>::infinity(), p};
        double c = cost(p.obj);
        if (!std::isfinite(c)) {
            p.feasible = false;
            return {std::numeric_limits<double>::infinity(), p};
        }
        return {c, p};
    }
};

// Fold proposals back into the unit box by reflection; plain clamping piles
// simplex vertices onto the active face and degenerates the search there.
void fold01(std::vector<double>& xn) {
    for (double& v : xn) {
        if (v < 0) v = -v;
        if (v > 1) v = 2.0 - v;
        v = std::min(1.0, std::max(0.0, v));
    }
}

struct NmBest {
    double f = std::numeric_limits<double>::infinity();
    DesignPoint point;
};

// Standard Nelder-Mead on the unit box with reflected proposals.
NmBest nelder_mead(const ScaledEval& se, std::vector<double> start, int max_evals,
                   double tol, double step = 0.05) {
    const size_t d = start.size();
    struct Vertex {
        std::vector<double> xn;
        double f;
        DesignPoint p;
    };
    std::vector<Vertex> simplex;
    auto make_vertex = [&](std::vector<double> xn) {
        fold01(xn);
        auto [f, p] = se(xn);
        return Vertex{std::move(xn), f, std::move(p)};
    };
    simplex.push_back(make_vertex(start));
    for (size_t i = 0; i < d; ++i) {
        auto xn = start;
        xn[i] += (xn[i] <= 1.0 - step) ? step : -step;
        simplex.push_back(make_vertex(xn));
    }

    NmBest best;
    auto track = [&](const Vertex& v) {
        if (v.p.feasible && v.f < best.f) {
            best.f = v.f;
            best.point = v.p;
        }
    };
    for (const auto& v : simplex) track(v);

    const int start_evals = se.evals;
    while (se.evals - start_evals < max_evals) {
        std::sort(simplex.begin(), simplex.end(),
                  [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
        double diam = 0;
        for (size_t i = 1; i < simplex.size(); ++i)
            for (size_t k = 0; k < d; ++k)
                diam = std::max(diam, std::abs(simplex[i].xn[k] - simplex[0].xn[k]));
        if (diam < tol) break;

        std::vector<double> centroid(d, 0.0);
        for (size_t i = 0; i + 1 < simplex.size(); ++i)
            for (size_t k = 0; k < d; ++k) centroid[k] += simplex[i].xn[k] / static_cast<double>(d);
        const Vertex& worst = simplex.back();

        auto blend = [&](double coef) {
            std::vector<double> xn(d);
            for (size_t k = 0; k < d; ++k) xn[k] = centroid[k] + coef * (centroid[k] - worst.xn[k]);
            return make_vertex(std::move(xn));
        };

        Vertex refl = blend(1.0);
        track(refl);
        if (refl.f < simplex[0].f) {
            Vertex exp_ = blend(2.0);
            track(exp_);
            simplex.back() = (exp_.f < refl.f) ? std::move(exp_) : std::move(refl);
            continue;
        }
        if (refl.f < simplex[simplex.size() - 2].f) {
            simplex.back() = std::move(refl);
            continue;
        }
        Vertex contr = (refl.f < worst.f) ? blend(0.5) : blend(-0.5);
        track(contr);
        if (contr.f < std::min(refl.f, worst.f)) {
            simplex.back() = std::move(contr);
            continue;
        }
        for (size_t i = 1; i < simplex.size(); ++i) {  // shrink
            std::vector<double> xn(d);
            for (size_t k = 0; k < d; ++k) xn[k] = 0.5 * (simplex[0].xn[k] + simplex[i].xn[k]);
            simplex[i] = make_vertex(std::move(xn));
            track(simplex[i]);
        }
    }
    return best;
}

DesignPoint optimize_with_starts(const EvalFn& eval, const DesignSpace& space,
                                 const CostFn& cost,
                                 const std::vector<std::vector<double>>& starts,
                                 const OptimizeConfig& cfg) {
    space.validate();
    ScaledEval se{eval, space, cost};
    auto normalized = [&](const DesignPoint& p) {
        std::vector<double> xn(p.x.size());
        for (size_t i = 0; i < xn.size(); ++i) {
            const Bound& b = space.variables[i];
            xn[i] = (p.x[i] - b.lo) / (b.hi - b.lo);
        }
        return xn;
    };
    NmBest global;
    for (const auto& s : starts) {
        se.evals = 0;
        NmBest b = nelder_mead(se, s, cfg.max_evals_per_restart, cfg.simplex_tol);
        // refine stage: a narrow simplex rides resonance ridges the wide one
        // steps across
        if (b.point.feasible) {
            se.evals = 0;
            NmBest r = nelder_mead(se, normalized(b.point), cfg.max_evals_per_restart,
                                   cfg.simplex_tol, 0.004);
            if (r.point.feasible && r.f < b.f) b = r;
        }
        if (b.point.feasible && b.f < global.f) global = b;
    }
    if (!global.point.feasible) throw AllInfeasible("optimize: no feasible point found");
    se.evals = 0;
    NmBest polished = nelder_mead(se, normalized(global.point), 2 * cfg.max_evals_per_restart,
                                  cfg.simplex_tol, 0.002);
    if (polished.point.feasible && polished.f < global.f) global = polished;
    return global.point;
}

}  // namespace

DesignPoint optimize(const EvalFn& eval, const DesignSpace& space, const CostFn& cost,
                     const OptimizeConfig& cfg) {
    if (cfg.restarts < 1) throw ConfigError("restarts must be >= 1");
    space.validate();
    Rng rng(cfg.seed);
    // Pre-screen an oversampled Latin-hypercube cloud and descend from the
    // best `restarts` seeds. The guided-mode resonances form a dense comb in
    // the angle, so the angle coordinate of every screened sample is tuned
    // over a sub-grid before ranking.
    const int screen = cfg.restarts * std::max(1, cfg.screen_factor);
    auto samples = latin_hypercube(screen, space.dim(), rng);
    int theta_idx = -1;
    for (size_t i = 0; i < space.variables.size(); ++i)
        if (space.variables[i].var == Var::theta || space.variables[i].var == Var::omega)
            theta_idx = static_cast<int>(i);
    ScaledEval se{eval, space, cost};
    std::vector<std::pair<double, size_t>> ranked;
    ranked.reserve(samples.size());
    for (size_t i = 0; i < samples.size(); ++i) {
        if (theta_idx >= 0) {
            const int ns = 24;
            const double frac = samples[i][static_cast<size_t>(theta_idx)];
            double best = std::numeric_limits<double>::infinity();
            double best_t = frac;
            for (int j = 0; j < ns; ++j) {
                auto probe = samples[i];
                probe[static_cast<size_t>(theta_idx)] = (j + frac) / ns;
                const double c = se(probe).first;
                if (c < best) {
                    best = c;
                    best_t = probe[static_cast<size_t>(theta_idx)];
                }
            }
            samples[i][static_cast<size_t>(theta_idx)] = best_t;
            ranked.emplace_back(best, i);
        } else {
            ranked.emplace_back(se(samples[i]).first, i);
        }
    }
    std::sort(ranked.begin(), ranked.end());
    std::vector<std::vector<double>> starts;
    for (int i = 0; i < cfg.restarts && i < static_cast<int>(ranked.size()); ++i)
        starts.push_back(samples[ranked[static_cast<size_t>(i)].second]);
    return optimize_with_starts(eval, space, cost, starts, cfg);
}

DesignPoint optimize(const MaterialDB& db, const DesignSpace& space, const CostFn& cost,
                     const OptimizeConfig& cfg) {
    EvalFn eval = [&db, &space](const std::vector<double>& x) {
        return evaluate(db, space, x);
    };
    return optimize(eval, space, cost, cfg);
}

Normalizer Normalizer::pilot(const EvalFn& eval, const DesignSpace& space,
                             std::uint64_t seed, int samples) {
    Rng rng(seed);
    auto pts = latin_hypercube(samples, space.dim(), rng);
    Normalizer n;
    double vmax = 0, fmax = 0;
    for (const auto& pn : pts) {
        std::vector<double> x(pn.size());
        for (size_t i = 0; i < pn.size(); ++i) {
            const Bound& b = space.variables[i];
            x[i] = b.lo + pn[i] * (b.hi - b.lo);
        }
        DesignPoint p = eval(x);
        if (!p.feasible) continue;
        vmax = std::max(vmax, std::abs(p.obj.vis));
        fmax = std::max(fmax, std::abs(p.obj.fe));
    }
    n.s_vis = std::max(vmax, 1e-9);
    n.s_fe = std::max(fmax, 1e-9);
    return n;
}

double Normalizer::scale(const std::string& obj) const {
    if (obj == "cls") return s_cls;
    if (obj == "sr") return s_sr;
    if (obj == "vis") return s_vis;
    if (obj == "fe") return s_fe;
    throw ConfigError("unknown objective: " + obj);
}

BoundaryTrace trace_boundary_linear(const EvalFn& eval, const DesignSpace& space,
                                    const std::pair<std::string, std::string>& pair,
                                    int n_directions, const Normalizer& norm,
                                    const OptimizeConfig& cfg) {
    if (n_directions < 4) throw ConfigError("trace_boundary_linear: need >= 4 directions");
    BoundaryTrace tr;
    tr.method = "linear";
    const double s1 = norm.scale(pair.first), s2 = norm.scale(pair.second);
    for (int k = 0; k < n_directions; ++k) {
        const double phi = 2.0 * std::numbers::pi * k / n_directions;
        CostFn cost = [&, phi](const Objectives& o) {
            return -(std::cos(phi) * o.get(pair.first) / s1 +
                     std::sin(phi) * o.get(pair.second) / s2);
        };
        OptimizeConfig c = cfg;
        c.seed = cfg.seed + static_cast<std::uint64_t>(k);
        tr.points.push_back(optimize(eval, space, cost, c));
        tr.angles.push_back(phi);
    }
    return tr;
}

BoundaryTrace trace_boundary_linear(const MaterialDB& db, const DesignSpace& space,
                                    const std::pair<std::string, std::string>& pair,
                                    int n_directions, const OptimizeConfig& cfg) {
    EvalFn eval = [&db, &space](const std::vector<double>& x) {
        return evaluate(db, space, x);
    };
    Normalizer norm = Normalizer::pilot(eval, space, cfg.seed);
    return trace_boundary_linear(eval, space, pair, n_directions, norm, cfg);
}

BoundaryTrace trace_boundary_parabola(const EvalFn& eval, const DesignSpace& space,
                                      const std::pair<std::string, std::string>& pair,
                                      std::pair<double, double> anchor, int n_rotations,
                                      const Normalizer& norm, const OptimizeConfig& cfg,
                                      double kappa) {
    if (n_rotations < 4) throw ConfigError("trace_boundary_parabola: need >= 4 rotations");
    BoundaryTrace tr;
    tr.method = "parabola";
    const double s1 = norm.scale(pair.first), s2 = norm.scale(pair.second);
    const double ax = anchor.first / s1, ay = anchor.second / s2;
    for (int k = 0; k < n_rotations; ++k) {
        const double psi = 2.0 * std::numbers::pi * k / n_rotations;
        const double c = std::cos(psi), s = std::sin(psi);
        CostFn cost = [&, c, s](const Objectives& o) {
            const double dx = o.get(pair.first) / s1 - ax;
            const double dy = o.get(pair.second) / s2 - ay;
            const double xp = c * dx + s * dy;   // R^{-1} (p - anchor)
            const double yp = -s * dx + c * dy;
            return -(yp - kappa * xp * xp);
        };
        OptimizeConfig cc = cfg;
        cc.seed = cfg.seed + static_cast<std::uint64_t>(k);
        tr.points.push_back(optimize(eval, space, cost, cc));
        tr.angles.push_back(psi);
    }
    return tr;
}

BoundaryTrace trace_boundary_parabola(const MaterialDB& db, const DesignSpace& space,
                                      const std::pair<std::string, std::string>& pair,
                                      std::pair<double, double> anchor, int n_rotations,
                                      const OptimizeConfig& cfg, double kappa) {
    EvalFn eval = [&db, &space](const std::vector<double>& x) {
        return evaluate(db, space, x);
    };
    Normalizer norm = Normalizer::pilot(eval, space, cfg.seed);
    return trace_boundary_parabola(eval, space, pair, anchor, n_rotations, norm, cfg, kappa);
}

DesignPoint constrained_best(const EvalFn& eval, const DesignSpace& space,
                             std::pair<double, double> target_cls_sr,
                             const std::string& maximize, double tol,
                             const Normalizer& norm, const OptimizeConfig& cfg) {
    const double s_obj = norm.scale(maximize);
    const double s_cls = norm.scale("cls"), s_sr = norm.scale("sr");
    auto excess = [&](const Objectives& o) {
        const double ec = std::max(0.0, std::abs(o.cls - target_cls_sr.first) - tol);
        const double es = std::max(0.0, std::abs(o.sr - target_cls_sr.second) - tol);
        return ec / s_cls + es / s_sr;
    };
    DesignPoint best;
    std::vector<std::vector<double>> warm;
    double w = 10.0;
    for (int stage = 0; stage < 3; ++stage, w *= 10.0) {
        CostFn cost = [&, w](const Objectives& o) {
            return -o.get(maximize) / s_obj + w * excess(o);
        };
        Rng rng(cfg.seed + static_cast<std::uint64_t>(stage));
        auto starts = latin_hypercube(cfg.restarts, space.dim(), rng);
        for (const auto& ws : warm) starts.push_back(ws);
        best = optimize_with_starts(eval, space, cost, starts, cfg);
        // warm-start the next stage from the current optimum (normalized)
        std::vector<double> xn(best.x.size());
        for (size_t i = 0; i < xn.size(); ++i) {
            const Bound& b = space.variables[i];
            xn[i] = (best.x[i] - b.lo) / (b.hi - b.lo);
        }
        warm = {xn};
    }
    if (excess(best.obj) > 0)
        throw TargetUnreachable("constrained_best: penalty active at final stage");
    return best;
}

DesignPoint constrained_best(const MaterialDB& db, const DesignSpace& space,
                             std::pair<double, double> target_cls_sr,
                             const std::string& maximize, double tol,
                             const OptimizeConfig& cfg) {
    EvalFn eval = [&db, &space](const std::vector<double>& x) {
        return evaluate(db, space, x);
    };
    Normalizer norm = Normalizer::pilot(eval, space, cfg.seed);
    return constrained_best(eval, space, target_cls_sr, maximize, tol, norm, cfg);
}

std::vector<SurveyRow> survey(const MaterialDB& db,
                              const std::vector<std::string>& claddings,
                              const std::vector<std::string>& guides,
                              const std::vector<std::string>& isotopes,
                              const OptimizeConfig& cfg) {
    std::vector<SurveyRow> rows;
    for (const auto& iso : isotopes) {
        for (const auto& clad : claddings) {
            for (const auto& gd : guides) {
                DesignSpace space = DesignSpace::archetype(clad, gd, iso);
                SurveyRow row{clad, gd, iso, 0, 0};
                try {
                    row.max_sr =
                        optimize(db, space, [](const Objectives& o) { return -o.sr; }, cfg).obj.sr;
                    row.max_fe =
                        optimize(db, space, [](const Objectives& o) { return -o.fe; }, cfg).obj.fe;
                } catch (const AllInfeasible&) {
                    // combination unusable at this energy (e.g. table range)
                }
                rows.push_back(row);
            }
        }
    }
    return rows;
}

DesignSpace DesignSpace::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("design json: ") + e.what());
    }
    DesignSpace s;
    const auto& jt = j.at("template");
    const std::string kind = jt.value("kind", "archetype");
    if (kind == "fabry_perot")
        s.tmpl = StackTemplate::fabry_perot();
    else if (kind != "archetype")
        throw ConfigError("unknown template kind: " + kind);
    if (jt.contains("cladding")) s.tmpl.cladding = jt["cladding"].get<std::string>();
    if (jt.contains("guide")) s.tmpl.guide = jt["guide"].get<std::string>();
    if (jt.contains("isotope")) s.tmpl.isotope = jt["isotope"].get<std::string>();
    if (jt.contains("substrate")) s.tmpl.substrate = jt["substrate"].get<std::string>();
    if (jt.contains("d_res_nm")) s.tmpl.d_res_nm = jt["d_res_nm"].get<double>();
    if (jt.contains("fixed")) {
        const auto& jf = jt["fixed"];
        if (jf.contains("d_top")) s.tmpl.d_top = jf["d_top"].get<double>();
        if (jf.contains("d_guide_up")) s.tmpl.d_guide_up = jf["d_guide_up"].get<double>();
        if (jf.contains("d_guide_down")) s.tmpl.d_guide_down = jf["d_guide_down"].get<double>();
        if (jf.contains("d_bottom")) s.tmpl.d_bottom = jf["d_bottom"].get<double>();
        if (jf.contains("z_rel")) s.tmpl.z_rel = jf["z_rel"].get<double>();
        if (jf.contains("theta")) s.tmpl.theta_mrad = jf["theta"].get<double>();
        if (jf.contains("omega")) s.tmpl.omega_keV = jf["omega"].get<double>();
    }
    for (const auto& jv : j.at("variables")) {
        Bound b;
        b.var = var_from_name(jv.at("name").get<std::string>());
        b.lo = jv.at("lo").get<double>();
        b.hi = jv.at("hi").get<double>();
        s.variables.push_back(b);
    }
    s.validate();
    return s;
}

std::string DesignSpace::to_json() const {
    json j;
    j["template"] = {
        {"kind", tmpl.kind == StackTemplate::Kind::archetype ? "archetype" : "fabry_perot"},
        {"cladding", tmpl.cladding},
        {"guide", tmpl.guide},
        {"isotope", tmpl.isotope},
        {"substrate", tmpl.substrate},
        {"d_res_nm", tmpl.d_res_nm},
        {"fixed",
         {{"d_top", tmpl.d_top},
          {"d_guide_up", tmpl.d_guide_up},
          {"d_guide_down", tmpl.d_guide_down},
          {"d_bottom", tmpl.d_bottom},
          {"z_rel", tmpl.z_rel},
          {"theta", tmpl.theta_mrad},
          {"omega", tmpl.omega_keV}}}};
    j["variables"] = json::array();
    for (const auto& b : variables)
        j["variables"].push_back({{"name", var_name(b.var)}, {"lo", b.lo}, {"hi", b.hi}});
    return j.dump();
}

}  // namespace nucav::design
