#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nucav/spectra.hpp"

namespace nucav::design {

/// Design variables of the archetype cavity (and, reinterpreted, of the
/// normal-incidence Fabry-Perot comparison: d_top/d_bottom = mirrors,
/// d_guide_* = gap halves, omega = probe energy).
enum class Var { d_top, d_guide_up, d_guide_down, d_bottom, z_rel, theta, omega };

Var var_from_name(const std::string& name);
std::string var_name(Var v);

struct Bound {
    Var var;
    double lo = 0;
    double hi = 0;
};

/// Stack template: cladding(d_top)/guide(d_guide_up)/resonant(d_res)/
/// guide(d_guide_down)/cladding(d_bottom)/substrate. The Fabry-Perot kind
/// freezes theta at pi/2 and has no isotope (decay and shift are reported
/// relative to free space).
struct StackTemplate {
    enum class Kind { archetype, fabry_perot };
    Kind kind = Kind::archetype;
    std::string cladding = "Pt";
    std::string guide = "C";
    std::string isotope = "Fe-57";
    std::string substrate = "Si";
    double d_res_nm = 0.574;
    // defaults for variables not in the design space
    double d_top = 0, d_guide_up = 45, d_guide_down = 45, d_bottom = 100;
    double z_rel = 0.5, theta_mrad = 3.0, omega_keV = 0;  // 0 = isotope energy

    static StackTemplate fabry_perot();
};

struct DesignSpace {
    StackTemplate tmpl;
    std::vector<Bound> variables;  // ordered; x vectors follow this order

    size_t dim() const { return variables.size(); }
    void validate() const;

    /// Archetype space over the five standard knobs with the default bounds
    /// (thickness [0,400] nm, theta [0.5,10] mrad, z_rel [0.05,0.95]).
    static DesignSpace archetype(const std::string& cladding = "Pt",
                                 const std::string& guide = "C",
                                 const std::string& isotope = "Fe-57",
                                 bool with_z_rel = false);

    static DesignSpace from_json(const std::string& text);
    std::string to_json() const;
};

struct Objectives {
    double cls = 0, sr = 0, vis = 0, fe = 0;

    double get(const std::string& name) const;
};

struct DesignPoint {
    std::vector<double> x;
    Objectives obj;
    bool feasible = false;
};

/// Builds the stack and geometry for a variable vector (no clamping; bounds
/// are inclusive and violations are a hard error).
std::pair<CavityStack, Geometry> realize(const MaterialDB& db, const DesignSpace& space,
                                         const std::vector<double>& x);

/// Forward model: all four objectives at x. Errors from the forward model
/// mark the point infeasible rather than throwing.
DesignPoint evaluate(const MaterialDB& db, const DesignSpace& space,
                     const std::vector<double>& x);

using EvalFn = std::function<DesignPoint(const std::vector<double>&)>;
using CostFn = std::function<double(const Objectives&)>;

/// Objective normalization for scalarized costs: cls and sr by 100 gamma0,
/// vis and fe by pilot-sweep maxima (refreshed once).
struct Normalizer {
    double s_cls = 100, s_sr = 100, s_vis = 1, s_fe = 1;

    static Normalizer pilot(const EvalFn& eval, const DesignSpace& space,
                            std::uint64_t seed, int samples = 128);
    double scale(const std::string& obj) const;
};

struct OptimizeConfig {
    int restarts = 32;
    std::uint64_t seed = 1;
    int max_evals_per_restart = 2000;
    double simplex_tol = 1e-6;  // normalized simplex diameter
    int screen_factor = 64;     // LHS oversampling before the descents
};

/// Bounded Nelder-Mead simplex descent from Latin-hypercube restarts;
/// deterministic for a fixed seed. Minimizes the cost; returns the best
/// feasible point. Throws AllInfeasible if nothing evaluates.
DesignPoint optimize(const EvalFn& eval, const DesignSpace& space, const CostFn& cost,
                     const OptimizeConfig& cfg);
DesignPoint optimize(const MaterialDB& db, const DesignSpace& space, const CostFn& cost,
                     const OptimizeConfig& cfg);

struct BoundaryTrace {
    std::vector<DesignPoint> points;
    std::vector<double> angles;  // direction (linear) or rotation (parabola), rad
    std::string method;          // "linear" | "parabola"
};

/// Supporting points of the objective set under linear scalarization over
/// n_directions angles uniform on [0, 2pi). Convex boundary only.
BoundaryTrace trace_boundary_linear(const EvalFn& eval, const DesignSpace& space,
                                    const std::pair<std::string, std::string>& pair,
                                    int n_directions, const Normalizer& norm,
                                    const OptimizeConfig& cfg);
BoundaryTrace trace_boundary_linear(const MaterialDB& db, const DesignSpace& space,
                                    const std::pair<std::string, std::string>& pair,
                                    int n_directions, const OptimizeConfig& cfg);

/// Rotated-parabola scalarization f = y' - kappa x'^2 in anchor-centered
/// rotated (normalized) coordinates; recovers star-convex boundaries.
BoundaryTrace trace_boundary_parabola(const EvalFn& eval, const DesignSpace& space,
                                      const std::pair<std::string, std::string>& pair,
                                      std::pair<double, double> anchor, int n_rotations,
                                      const Normalizer& norm, const OptimizeConfig& cfg,
                                      double kappa = 50.0);
BoundaryTrace trace_boundary_parabola(const MaterialDB& db, const DesignSpace& space,
                                      const std::pair<std::string, std::string>& pair,
                                      std::pair<double, double> anchor, int n_rotations,
                                      const OptimizeConfig& cfg, double kappa = 50.0);

/// Maximize vis or fe subject to |cls - cls*| < tol and |sr - sr*| < tol,
/// exact-penalty scalarization with the weight ramped x10 over 3 stages.
/// Throws TargetUnreachable if the penalty is still active at the end.
DesignPoint constrained_best(const EvalFn& eval, const DesignSpace& space,
                             std::pair<double, double> target_cls_sr,
                             const std::string& maximize, double tol,
                             const Normalizer& norm, const OptimizeConfig& cfg);
DesignPoint constrained_best(const MaterialDB& db, const DesignSpace& space,
                             std::pair<double, double> target_cls_sr,
                             const std::string& maximize, double tol,
                             const OptimizeConfig& cfg);

struct SurveyRow {
    std::string cladding, guide, isotope;
    double max_sr = 0, max_fe = 0;
};

/// Batch driver: optimize max-sr and max-fe per material/isotope combination.
std::vector<SurveyRow> survey(const MaterialDB& db,
                              const std::vector<std::string>& claddings,
                              const std::vector<std::string>& guides,
                              const std::vector<std::string>& isotopes,
                              const OptimizeConfig& cfg);

/// Deterministic helpers shared with the tests.
struct Rng {
    explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next();
    double uniform01();                 // [0, 1)
    std::size_t below(std::size_t n);   // [0, n)
  private:
    std::uint64_t state;
};

/// Latin-hypercube sample of n points in [0,1]^dim.
std::vector<std::vector<double>> latin_hypercube(int n, size_t dim, Rng& rng);

}  // namespace nucav::design
