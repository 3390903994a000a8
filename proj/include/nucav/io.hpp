#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "nucav/design.hpp"
#include "nucav/modes.hpp"
#include "nucav/spectra.hpp"

namespace nucav::io {

/// All numeric output is written with 17 significant digits (round-trip safe).
std::string fmt(double v);

/// CSV writer with '#'-prefixed header lines (the resolved config is echoed
/// there by the callers) and optional summary footer lines.
void write_spectrum_csv(std::ostream& os, const Spectrum& s,
                        const std::string& grid_column, const std::string& value_column,
                        const std::vector<std::string>& header_lines,
                        const std::vector<std::string>& footer_lines = {});

/// Pole report JSON: one object per pole with re/im of theta0 and residue,
/// the order index and the contour cross-check.
std::string poles_to_json(const std::vector<Pole>& poles);

/// One DesignPoint per line (JSON lines).
void write_design_jsonl(std::ostream& os, const design::DesignSpace& space,
                        const std::vector<design::DesignPoint>& points);

/// Boundary-trace summary CSV (angle, x, objectives).
void write_trace_csv(std::ostream& os, const design::DesignSpace& space,
                     const design::BoundaryTrace& trace,
                     const std::vector<std::string>& header_lines);

}  // namespace nucav::io
