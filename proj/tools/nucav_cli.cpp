// Command-line front end: forward simulations, pole analysis, design runs.
// Emits CSV / JSON-lines with the resolved configuration echoed in a header
// comment; numbers at 17 significant digits. Exit codes: 0 success,
// 1 configuration error, 2 numerical failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nucav/io.hpp"
#include "nucav/units.hpp"

using nlohmann::json;
using namespace nucav;

namespace {

struct SweepSpec {
    double start = 0, stop = 0;
    int count = 0;
};

// "start:stop:count" in the unit of the swept variable
SweepSpec parse_sweep(const std::string& s) {
    SweepSpec sp;
    char c1 = 0, c2 = 0;
    std::istringstream ss(s);
    if (!(ss >> sp.start >> c1 >> sp.stop >> c2 >> sp.count) || c1 != ':' || c2 != ':' ||
        sp.count < 2)
        throw ConfigError("bad sweep spec '" + s + "', expected start:stop:count");
    return sp;
}

std::vector<double> sweep_grid(const SweepSpec& sp) {
    std::vector<double> g(static_cast<size_t>(sp.count));
    for (int i = 0; i < sp.count; ++i)
        g[static_cast<size_t>(i)] = sp.start + (sp.stop - sp.start) * i / (sp.count - 1.0);
    return g;
}

std::string db_dir(const std::string& override_dir) {
    if (!override_dir.empty()) return override_dir;
    if (const char* env = std::getenv("NUCAV_DB")) return env;
    return "data";
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw ConfigError("cannot open output file " + path);
    return file;
}

// "sr=-1,vis=2" -> weighted sum of objectives
design::CostFn parse_cost(const std::string& spec) {
    std::vector<std::pair<std::string, double>> terms;
    std::istringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw ConfigError("bad cost term '" + item + "'");
        terms.emplace_back(item.substr(0, eq), std::stod(item.substr(eq + 1)));
    }
    if (terms.empty()) throw ConfigError("empty cost spec");
    return [terms](const design::Objectives& o) {
        double acc = 0;
        for (const auto& [name, w] : terms) acc += w * o.get(name);
        return acc;
    };
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nucav - thin-film x-ray cavity forward simulation and inverse design"};
    app.require_subcommand(1);
    std::string db_override;
    app.add_option("--db", db_override, "material/isotope database directory (env NUCAV_DB)");

    std::string stack_path, out_path, isotope = "Fe-57";
    double theta = 0, omega = 0;
    std::string sweep, grid_spec;

    auto* spectrum = app.add_subcommand("spectrum", "Fano reflectance over detuning");
    spectrum->add_option("--stack", stack_path, "stack JSON file")->required();
    spectrum->add_option("--isotope", isotope, "resonant isotope name");
    spectrum->add_option("--theta", theta, "grazing angle [mrad]")->required();
    spectrum->add_option("--grid", grid_spec, "detuning grid start:stop:count [gamma0]");
    spectrum->add_option("-o,--out", out_path, "output CSV (default stdout)");

    auto* rocking = app.add_subcommand("rocking", "electronic rocking curve over theta");
    rocking->add_option("--stack", stack_path, "stack JSON file")->required();
    rocking->add_option("--omega", omega, "probe energy [keV]")->required();
    rocking->add_option("--grid", grid_spec, "theta grid start:stop:count [mrad]")->required();
    rocking->add_option("-o,--out", out_path, "output CSV (default stdout)");

    std::string theta_sweep;
    auto* params = app.add_subcommand("params", "two-level parameters (one angle or a sweep)");
    params->add_option("--stack", stack_path, "stack JSON file")->required();
    params->add_option("--isotope", isotope, "resonant isotope name");
    params->add_option("--theta", theta, "grazing angle [mrad]");
    params->add_option("--theta-sweep", theta_sweep, "theta sweep start:stop:count [mrad]");
    params->add_option("-o,--out", out_path, "output CSV (default stdout)");

    std::string window_spec;
    double im_height = 0.5;
    int n_seeds = 0;
    auto* poles_cmd = app.add_subcommand("poles", "complex-angle pole report");
    poles_cmd->add_option("--stack", stack_path, "stack JSON file")->required();
    poles_cmd->add_option("--omega", omega, "probe energy [keV]")->required();
    poles_cmd->add_option("--window", window_spec, "real-theta window lo:hi [mrad]")->required();
    poles_cmd->add_option("--im-height", im_height, "search strip height [mrad]");
    poles_cmd->add_option("--seeds", n_seeds, "seed grid points (0 = auto)");
    poles_cmd->add_option("-o,--out", out_path, "output JSON (default stdout)");

    std::string space_path, cost_spec, pair_spec = "cls,sr", anchor_spec, method = "linear";
    std::string points_path;
    int restarts = 32, directions = 16;
    std::uint64_t seed = 1;
    double kappa = 50.0;
    auto* trace = app.add_subcommand("trace", "boundary trace (linear or parabola)");
    trace->add_option("--space", space_path, "design-space JSON file")->required();
    trace->add_option("--pair", pair_spec, "objective pair, e.g. cls,sr");
    trace->add_option("--method", method, "linear | parabola");
    trace->add_option("--directions", directions, "number of directions/rotations");
    trace->add_option("--anchor", anchor_spec, "parabola anchor x,y (objective units)");
    trace->add_option("--kappa", kappa, "parabola narrowness");
    trace->add_option("--restarts", restarts, "multistart count");
    trace->add_option("--seed", seed, "rng seed");
    trace->add_option("-o,--out", out_path, "summary CSV (default stdout)");
    trace->add_option("--points", points_path, "also write DesignPoints as JSON lines");

    auto* optimize_cmd = app.add_subcommand("optimize", "scalar design run");
    optimize_cmd->add_option("--space", space_path, "design-space JSON file")->required();
    optimize_cmd->add_option("--cost", cost_spec,
                             "cost spec, e.g. sr=-1 (minimized; may also live in the file)");
    optimize_cmd->add_option("--restarts", restarts, "multistart count");
    optimize_cmd->add_option("--seed", seed, "rng seed");
    optimize_cmd->add_option("-o,--out", out_path, "output JSON lines (default stdout)");

    std::string mirror_spec = "40:110:71", omega_rel_spec = "0.85:1.15:301";
    double gap_nm = 350.0, lambda_nm = 700.0;
    auto* fp = app.add_subcommand("fp", "Fabry-Perot comparison scan (normal incidence)");
    fp->add_option("--mirror-grid", mirror_spec, "mirror thickness grid start:stop:count [nm]");
    fp->add_option("--omega-grid", omega_rel_spec, "energy grid start:stop:count [relative]");
    fp->add_option("--gap", gap_nm, "total gap [nm]");
    fp->add_option("--lambda", lambda_nm, "reference wavelength [nm]");
    fp->add_option("-o,--out", out_path, "output CSV (default stdout)");

    std::string clads = "Pt,Pd,MgO,B4C", guides = "C,B4C", isotopes_spec = "Fe-57";
    auto* survey_cmd = app.add_subcommand("survey", "material/isotope batch optimization");
    survey_cmd->add_option("--claddings", clads, "comma list of cladding materials");
    survey_cmd->add_option("--guides", guides, "comma list of guide materials");
    survey_cmd->add_option("--isotopes", isotopes_spec, "comma list of isotopes");
    survey_cmd->add_option("--restarts", restarts, "multistart count");
    survey_cmd->add_option("--seed", seed, "rng seed");
    survey_cmd->add_option("-o,--out", out_path, "output CSV (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    auto split_list = [](const std::string& s) {
        std::vector<std::string> out;
        std::istringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(item);
        return out;
    };

    try {
        const MaterialDB db = MaterialDB::load_dir(db_dir(db_override));
        std::ofstream file;

        if (*spectrum) {
            const CavityStack stack = CavityStack::from_json_file(stack_path);
            const Isotope& iso = db.isotope(isotope);
            const Geometry geom{iso.omega_nuc_keV, theta};
            const FanoParams fpar = fano_params(db, stack, iso, geom);
            const auto grid =
                grid_spec.empty() ? default_detuning_grid() : sweep_grid(parse_sweep(grid_spec));
            const Spectrum s = fano_spectrum(fpar, grid);
            json cfg = {{"command", "spectrum"}, {"stack", json::parse(stack.to_json())},
                        {"isotope", isotope},    {"theta_mrad", theta},
                        {"grid", grid_spec},     {"db", db_dir(db_override)}};
            std::ostream& os = open_out(file, out_path);
            io::write_spectrum_csv(
                os, s, "detuning_gamma0", "intensity", {"config: " + cfg.dump()},
                {"visibility: " + io::fmt(visibility(fpar)),
                 "r_el: " + io::fmt(fpar.r_el.real()) + " " + io::fmt(fpar.r_el.imag()) + "i",
                 "center_gamma0: " + io::fmt(fpar.center),
                 "hwhm_gamma0: " + io::fmt(fpar.hwhm)});
        } else if (*rocking) {
            const CavityStack stack = CavityStack::from_json_file(stack_path);
            const auto grid = sweep_grid(parse_sweep(grid_spec));
            const Spectrum s = rocking_curve(db, stack, omega, grid);
            json cfg = {{"command", "rocking"}, {"stack", json::parse(stack.to_json())},
                        {"omega_keV", omega},   {"grid", grid_spec},
                        {"db", db_dir(db_override)}};
            std::ostream& os = open_out(file, out_path);
            io::write_spectrum_csv(os, s, "theta_mrad", "intensity", {"config: " + cfg.dump()});
        } else if (*params) {
            const CavityStack stack = CavityStack::from_json_file(stack_path);
            const Isotope& iso = db.isotope(isotope);
            std::vector<double> grid;
            if (!theta_sweep.empty())
                grid = sweep_grid(parse_sweep(theta_sweep));
            else if (theta > 0)
                grid = {theta};
            else
                throw ConfigError("params: need --theta or --theta-sweep");
            json cfg = {{"command", "params"}, {"stack", json::parse(stack.to_json())},
                        {"isotope", isotope},  {"sweep", theta_sweep},
                        {"theta_mrad", theta}, {"db", db_dir(db_override)}};
            std::ostream& os = open_out(file, out_path);
            os << "# config: " << cfg.dump() << "\n";
            os << "theta_mrad,cls_gamma0,sr_gamma0,fe,vis\n";
            for (double th : grid) {
                const Geometry geom{iso.omega_nuc_keV, th};
                const TwoLevelParams tl = two_level_params(db, stack, iso, geom);
                const double vis = visibility(fano_params(db, stack, iso, geom));
                os << io::fmt(th) << "," << io::fmt(tl.cls) << "," << io::fmt(tl.sr) << ","
                   << io::fmt(tl.fe) << "," << io::fmt(vis) << "\n";
            }
        } else if (*poles_cmd) {
            const CavityStack stack = CavityStack::from_json_file(stack_path);
            auto colon = window_spec.find(':');
            if (colon == std::string::npos) throw ConfigError("poles: window must be lo:hi");
            PoleWindow w;
            w.lo_mrad = std::stod(window_spec.substr(0, colon));
            w.hi_mrad = std::stod(window_spec.substr(colon + 1));
            w.im_height_mrad = im_height;
            w.n_seeds = n_seeds;
            const PoleSearchResult res = find_poles_detailed(db, stack, omega, w);
            json out;
            out["config"] = {{"command", "poles"},   {"stack", json::parse(stack.to_json())},
                             {"omega_keV", omega},   {"window", window_spec},
                             {"im_height", im_height}, {"seeds", n_seeds},
                             {"db", db_dir(db_override)}};
            out["seeds_tried"] = res.seeds;
            out["seeds_failed"] = res.failed;
            out["poles"] = json::parse(io::poles_to_json(res.poles));
            std::ostream& os = open_out(file, out_path);
            os << out.dump(2) << "\n";
        } else if (*trace) {
            const std::string space_text = read_file(space_path);
            const auto space = design::DesignSpace::from_json(space_text);
            // run parameters may live in the config file; flags override
            const json jrun = json::parse(space_text);
            if (!trace->count("--restarts")) restarts = jrun.value("restarts", restarts);
            if (!trace->count("--seed")) seed = jrun.value("seed", seed);
            auto pair_list = split_list(pair_spec);
            if (pair_list.size() != 2) throw ConfigError("pair must name two objectives");
            const std::pair<std::string, std::string> pair{pair_list[0], pair_list[1]};
            design::OptimizeConfig cfg;
            cfg.restarts = restarts;
            cfg.seed = seed;
            design::BoundaryTrace tr;
            if (method == "linear") {
                tr = design::trace_boundary_linear(db, space, pair, directions, cfg);
            } else if (method == "parabola") {
                std::pair<double, double> anchor{0, 0};
                if (!anchor_spec.empty()) {
                    auto parts = split_list(anchor_spec);
                    if (parts.size() != 2) throw ConfigError("anchor must be x,y");
                    anchor = {std::stod(parts[0]), std::stod(parts[1])};
                }
                design::EvalFn eval = [&db, &space](const std::vector<double>& x) {
                    return design::evaluate(db, space, x);
                };
                auto norm = design::Normalizer::pilot(eval, space, seed);
                tr = design::trace_boundary_parabola(eval, space, pair, anchor, directions, norm,
                                                     cfg, kappa);
            } else {
                throw ConfigError("method must be linear or parabola");
            }
            json cfg_j = {{"command", "trace"},   {"space", json::parse(space.to_json())},
                          {"pair", pair_spec},    {"method", method},
                          {"directions", directions}, {"kappa", kappa},
                          {"anchor", anchor_spec},    {"restarts", restarts},
                          {"seed", seed},         {"db", db_dir(db_override)}};
            std::ostream& os = open_out(file, out_path);
            io::write_trace_csv(os, space, tr, {"config: " + cfg_j.dump()});
            if (!points_path.empty()) {
                std::ofstream pf(points_path);
                if (!pf) throw ConfigError("cannot open " + points_path);
                pf << json{{"config", cfg_j}}.dump() << "\n";
                io::write_design_jsonl(pf, space, tr.points);
            }
        } else if (*optimize_cmd) {
            const std::string space_text = read_file(space_path);
            const auto space = design::DesignSpace::from_json(space_text);
            const json jrun = json::parse(space_text);
            if (!optimize_cmd->count("--restarts")) restarts = jrun.value("restarts", restarts);
            if (!optimize_cmd->count("--seed")) seed = jrun.value("seed", seed);
            if (!optimize_cmd->count("--cost") && jrun.contains("cost"))
                cost_spec = jrun["cost"].get<std::string>();
            if (cost_spec.empty())
                throw ConfigError("optimize: no cost given (flag --cost or config key)");
            design::OptimizeConfig cfg;
            cfg.restarts = restarts;
            cfg.seed = seed;
            const auto best = design::optimize(db, space, parse_cost(cost_spec), cfg);
            json cfg_j = {{"command", "optimize"}, {"space", json::parse(space.to_json())},
                          {"cost", cost_spec},     {"restarts", restarts},
                          {"seed", seed},          {"db", db_dir(db_override)}};
            std::ostream& os = open_out(file, out_path);
            os << json{{"config", cfg_j}}.dump() << "\n";
            io::write_design_jsonl(os, space, {best});
        } else if (*fp) {
            const auto mg = sweep_grid(parse_sweep(mirror_spec));
            const auto og = sweep_grid(parse_sweep(omega_rel_spec));
            const double E0 = 1.239842e0 / lambda_nm;
            design::DesignSpace space;
            space.tmpl = design::StackTemplate::fabry_perot();
            space.tmpl.d_guide_up = (gap_nm - space.tmpl.d_res_nm) / 2;
            space.tmpl.d_guide_down = (gap_nm - space.tmpl.d_res_nm) / 2;
            space.variables = {{design::Var::d_top, mg.front(), mg.back() + 1},
                               {design::Var::d_bottom, mg.front(), mg.back() + 1},
                               {design::Var::omega, E0 * 0.5, E0 * 2.0}};
            json cfg_j = {{"command", "fp"},        {"mirror_grid", mirror_spec},
                          {"omega_grid", omega_rel_spec}, {"gap_nm", gap_nm},
                          {"lambda_nm", lambda_nm}, {"db", db_dir(db_override)}};
            std::ostream& os = open_out(file, out_path);
            os << "# config: " << cfg_j.dump() << "\n";
            os << "d_mirror_nm,omega_rel,gamma_rel,fe\n";
            for (double dm : mg) {
                for (double orel : og) {
                    const auto p = design::evaluate(db, space, {dm, dm, orel * E0});
                    os << io::fmt(dm) << "," << io::fmt(orel) << "," << io::fmt(p.obj.sr) << ","
                       << io::fmt(p.obj.fe) << "\n";
                }
            }
        } else if (*survey_cmd) {
            design::OptimizeConfig cfg;
            cfg.restarts = restarts;
            cfg.seed = seed;
            const auto rows = design::survey(db, split_list(clads), split_list(guides),
                                             split_list(isotopes_spec), cfg);
            json cfg_j = {{"command", "survey"},   {"claddings", clads},
                          {"guides", guides},      {"isotopes", isotopes_spec},
                          {"restarts", restarts},  {"seed", seed},
                          {"db", db_dir(db_override)}};
            std::ostream& os = open_out(file, out_path);
            os << "# config: " << cfg_j.dump() << "\n";
            os << "cladding,guide,isotope,max_sr_gamma0,max_fe\n";
            for (const auto& r : rows)
                os << r.cladding << "," << r.guide << "," << r.isotope << ","
                   << io::fmt(r.max_sr) << "," << io::fmt(r.max_fe) << "\n";
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
