#include "nucav/io.hpp"

#include <charconv>
#include <cstdio>

#include <json.hpp>

namespace nucav::io {

using json = nlohmann::json;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_spectrum_csv(std::ostream& os, const Spectrum& s,
                        const std::string& grid_column, const std::string& value_column,
                        const std::vector<std::string>& header_lines,
                        const std::vector<std::string>& footer_lines) {
    for (const auto& h : header_lines) os << "# " << h << "\n";
    os << grid_column << "," << value_column << "\n";
    for (size_t i = 0; i < s.grid.size(); ++i)
        os << fmt(s.grid[i]) << "," << fmt(s.intensity[i]) << "\n";
    for (const auto& f : footer_lines) os << "# " << f << "\n";
}

std::string poles_to_json(const std::vector<Pole>& poles) {
    json arr = json::array();
    for (const Pole& p : poles) {
        arr.push_back({{"re_theta0_mrad", p.theta0_mrad.real()},
                       {"im_theta0_mrad", p.theta0_mrad.imag()},
                       {"re_residue", p.residue.real()},
                       {"im_residue", p.residue.imag()},
                       {"order_index", p.order_index},
                       {"contour_check_rel_err", p.contour_rel_err}});
    }
    return arr.dump(2);
}

void write_design_jsonl(std::ostream& os, const design::DesignSpace& space,
                        const std::vector<design::DesignPoint>& points) {
    for (const auto& p : points) {
        json j;
        j["x"] = json::object();
        for (size_t i = 0; i < p.x.size(); ++i)
            j["x"][design::var_name(space.variables[i].var)] = p.x[i];
        j["objectives"] = {{"cls", p.obj.cls}, {"sr", p.obj.sr}, {"vis", p.obj.vis}, {"fe", p.obj.fe}};
        j["feasible"] = p.feasible;
        os << j.dump() << "\n";
    }
}

void write_trace_csv(std::ostream& os, const design::DesignSpace& space,
                     const design::BoundaryTrace& trace,
                     const std::vector<std::string>& header_lines) {
    for (const auto& h : header_lines) os << "# " << h << "\n";
    os << "angle_rad";
    for (const auto& b : space.variables) os << "," << design::var_name(b.var);
    os << ",cls,sr,vis,fe\n";
    for (size_t i = 0; i < trace.points.size(); ++i) {
        const auto& p = trace.points[i];
        os << fmt(trace.angles[i]);
        for (double v : p.x) os << "," << fmt(v);
        os << "," << fmt(p.obj.cls) << "," << fmt(p.obj.sr) << "," << fmt(p.obj.vis) << ","
           << fmt(p.obj.fe) << "\n";
    }
}

}  // namespace nucav::io
