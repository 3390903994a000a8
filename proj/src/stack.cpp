#include "nucav/stack.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nucav/units.hpp"

namespace nucav {

using json = nlohmann::json;

void CavityStack::validate() const {
    for (const auto& l : layers)
        if (l.d_nm < 0)
            throw NonPositiveThickness("layer " + l.material + ": negative thickness");
    if (resonant < -1 || resonant >= static_cast<int>(layers.size()))
        throw ConfigError("resonant index out of range");
    if (z_rel < 0 || z_rel > 1) throw ConfigError("z_rel outside [0,1]");
    if (substrate.empty()) throw ConfigError("missing substrate");
}

void Geometry::validate() const {
    if (!(omega_keV > 0)) throw ConfigError("omega <= 0");
    if (!(theta_mrad > 0) || theta_mrad > units::half_pi_mrad)
        throw ConfigError("theta outside (0, pi/2]");
}

CavityStack CavityStack::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("stack json: ") + e.what());
    }
    CavityStack s;
    for (const auto& jl : j.at("layers")) {
        Layer l;
        l.material = jl.at("material").get<std::string>();
        l.d_nm = jl.at("d_nm").get<double>();
        s.layers.push_back(l);
    }
    s.substrate = j.at("substrate").get<std::string>();
    s.resonant = j.value("resonant", -1);
    s.z_rel = j.value("z_rel", 0.5);
    s.validate();
    return s;
}

CavityStack CavityStack::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

std::string CavityStack::to_json() const {
    json j;
    j["layers"] = json::array();
    for (const auto& l : layers) j["layers"].push_back({{"material", l.material}, {"d_nm", l.d_nm}});
    j["substrate"] = substrate;
    j["resonant"] = resonant;
    j["z_rel"] = z_rel;
    return j.dump();
}

double k_parallel(const Geometry& geom) {
    geom.validate();
    if (geom.theta_mrad == units::half_pi_mrad) return 0.0;
    return units::wavenumber(geom.omega_keV) * std::cos(units::rad_from_mrad(geom.theta_mrad));
}

LayerProfile beta_profile(const MaterialDB& db, const CavityStack& stack,
                          double omega_keV, std::complex<double> theta_mrad) {
    stack.validate();
    const double k0 = units::wavenumber(omega_keV);
    // 1 - cos(theta) = 2 sin^2(theta/2), kept separate so that
    // n^2 - cos^2(theta) = (n - cos)(n + cos) never cancels at grazing angles
    // where delta and theta^2 are of the same (tiny) magnitude.
    std::complex<double> one_minus_cos;
    if (theta_mrad == std::complex<double>(units::half_pi_mrad, 0.0)) {
        one_minus_cos = 1.0;
    } else {
        const std::complex<double> sh = std::sin(0.5e-3 * theta_mrad);
        one_minus_cos = 2.0 * sh * sh;
    }
    const bool real_theta = theta_mrad.imag() == 0.0;

    LayerProfile p;
    const size_t L = stack.layers.size();
    p.beta.reserve(L + 2);
    p.d.reserve(L + 2);
    auto push = [&](const std::string& mat, double d) {
        const OpticalConstants oc = optical_constants(db, mat, omega_keV);
        const std::complex<double> n_minus_cos =
            one_minus_cos - oc.delta + std::complex<double>(0, oc.beta);
        const std::complex<double> n_plus_cos =
            2.0 - one_minus_cos - oc.delta + std::complex<double>(0, oc.beta);
        std::complex<double> b = k0 * std::sqrt(n_minus_cos * n_plus_cos);
        // Principal sqrt already lands in the closed upper-right quadrant for
        // passive media at real angles; the flip only guards signed zeros.
        if (real_theta && (b.imag() < 0 || (b.imag() == 0 && b.real() < 0))) b = -b;
        p.beta.push_back(b);
        p.d.push_back(d);
    };
    push("vacuum", 0.0);
    for (const auto& l : stack.layers) push(l.material, l.d_nm);
    push(stack.substrate, 0.0);
    if (stack.has_resonant()) {
        p.res = stack.resonant + 1;
        p.z = stack.z_rel * stack.layers[static_cast<size_t>(stack.resonant)].d_nm;
    }
    return p;
}

std::vector<std::complex<double>> layer_beta(const MaterialDB& db,
                                             const CavityStack& stack,
                                             const Geometry& geom) {
    return beta_profile(db, stack, geom).beta;
}

CavityStack collapse_zero_layers(const CavityStack& stack) {
    stack.validate();
    if (stack.has_resonant() && stack.resonant_layer().d_nm == 0)
        throw ResonantLayerZero("collapse_zero_layers: resonant layer has zero thickness");
    CavityStack out;
    out.substrate = stack.substrate;
    out.z_rel = stack.z_rel;
    out.resonant = -1;
    for (int i = 0; i < static_cast<int>(stack.layers.size()); ++i) {
        if (stack.layers[static_cast<size_t>(i)].d_nm == 0 && i != stack.resonant) continue;
        if (i == stack.resonant) out.resonant = static_cast<int>(out.layers.size());
        out.layers.push_back(stack.layers[static_cast<size_t>(i)]);
    }
    return out;
}

}  // namespace nucav
