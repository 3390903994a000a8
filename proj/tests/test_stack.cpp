#include <doctest.h>

#include <cmath>

#include "nucav/units.hpp"
#include "support/common.hpp"

using namespace nucav;
using testsupport::db;
using testsupport::cplx;

TEST_CASE("k_parallel") {
    SUBCASE("exactly zero at normal incidence") {
        CHECK(k_parallel({14.4, units::half_pi_mrad}) == 0.0);
    }
    SUBCASE("approaches omega/hbar c at grazing zero") {
        CHECK(k_parallel({14.4, 1e-8}) == doctest::Approx(72.98).epsilon(1e-3));
    }
    SUBCASE("strictly decreasing in theta") {
        design::Rng rng(7);
        for (int i = 0; i < 100; ++i) {
            const double a = 1e-3 + rng.uniform01() * 1500.0;
            const double b = a + 1e-3 + rng.uniform01() * (units::half_pi_mrad - a - 1e-3);
            CHECK(k_parallel({14.4, a}) > k_parallel({14.4, b}));
        }
    }
    SUBCASE("rejects bad geometry") {
        CHECK_THROWS_AS((void)k_parallel({14.4, 0.0}), ConfigError);
        CHECK_THROWS_AS((void)k_parallel({14.4, units::half_pi_mrad + 1.0}), ConfigError);
        CHECK_THROWS_AS((void)k_parallel({-1.0, 2.0}), ConfigError);
    }
}

TEST_CASE("layer_beta branch") {
    SUBCASE("vacuum at normal incidence") {
        auto s = testsupport::make_stack({{"vacuum", 10.0}}, "vacuum", -1);
        const auto betas = layer_beta(db(), s, {14.4, units::half_pi_mrad});
        CHECK(betas[0].imag() == 0.0);
        CHECK(betas[0].real() == doctest::Approx(72.98).epsilon(1e-3));
    }
    SUBCASE("absorptive layer has strictly positive Im beta") {
        auto s = testsupport::make_stack({{"Pt", 10.0}}, "Si", -1);
        for (double th : {1.0, 3.0, 5.0, 20.0, 500.0}) {
            const auto betas = layer_beta(db(), s, {14.4, th});
            CHECK(betas[1].imag() > 0.0);
            CHECK(betas[2].imag() > 0.0);
        }
    }
    SUBCASE("lossless medium below its critical angle gives purely imaginary beta") {
        MaterialDB local = MaterialDB::load_dir(NUCAV_DATA_DIR);
        Material lossless;
        lossless.name = "glassy";
        lossless.table = {{10.0, 1e-5, 0.0}, {20.0, 1e-5, 0.0}};
        local.add_material(lossless);
        auto s = testsupport::make_stack({{"glassy", 10.0}}, "glassy", -1);
        // critical angle sqrt(2 delta) = 4.47 mrad; probe below it
        const auto betas = layer_beta(local, s, {14.4, 2.0});
        const double k = units::wavenumber(14.4);
        const double kpar = k * std::cos(2.0e-3);
        const double expect = std::sqrt(kpar * kpar - (1.0 - 1e-5) * (1.0 - 1e-5) * k * k);
        CHECK(betas[1].real() == doctest::Approx(0.0));
        CHECK(betas[1].imag() == doctest::Approx(expect).epsilon(1e-9));
    }
    SUBCASE("branch invariant over random stacks") {
        testsupport::StackGen gen(11);
        for (int i = 0; i < 200; ++i) {
            const auto s = gen.next();
            const auto g = gen.next_geometry();
            for (const auto& b : layer_beta(db(), s, g)) {
                CHECK(b.imag() >= 0.0);
                if (b.imag() == 0.0) CHECK(b.real() >= 0.0);
            }
        }
    }
}

TEST_CASE("collapse_zero_layers") {
    SUBCASE("removes zero-thickness cladding and remaps the resonant index") {
        auto s = testsupport::make_stack(
            {{"Pt", 0.0}, {"C", 45.0}, {"Fe-57", 0.574}, {"C", 45.0}, {"Pt", 300.0}}, "Si", 2);
        const auto c = collapse_zero_layers(s);
        REQUIRE(c.layers.size() == 4);
        CHECK(c.layers[0].material == "C");
        CHECK(c.resonant == 1);
        CHECK(c.layers[1].material == "Fe-57");
    }
    SUBCASE("identity on stacks without zero layers, and idempotent") {
        const auto s = testsupport::thick_cladding_cavity();
        const auto c = collapse_zero_layers(s);
        CHECK(c.layers.size() == s.layers.size());
        CHECK(c.resonant == s.resonant);
        const auto cc = collapse_zero_layers(c);
        CHECK(cc.layers.size() == c.layers.size());
        CHECK(cc.to_json() == c.to_json());
    }
    SUBCASE("zero resonant layer is an error") {
        auto s = testsupport::make_stack({{"C", 45.0}, {"Fe-57", 0.0}}, "Si", 1);
        CHECK_THROWS_AS((void)collapse_zero_layers(s), ResonantLayerZero);
    }
    SUBCASE("negative thickness is a hard error, never clamped") {
        auto s = testsupport::make_stack({{"C", -1.0}}, "Si", -1);
        CHECK_THROWS_AS(s.validate(), NonPositiveThickness);
    }
    SUBCASE("forward model is unchanged by the collapse") {
        auto s = testsupport::make_stack({{"Pt", 0.0},
                                          {"C", 45.0},
                                          {"Fe-57", 0.574},
                                          {"B4C", 0.0},
                                          {"C", 45.0},
                                          {"Pt", 120.0}},
                                         "Si", 2);
        const auto c = collapse_zero_layers(s);
        for (double th : {2.0, 2.5, 3.3, 4.8}) {
            const Geometry g{14.4, th};
            CHECK(testsupport::rel_err(parratt(db(), s, g), parratt(db(), c, g)) < 1e-12);
            const auto ca = composite_coeffs(db(), s, g);
            const auto cb = composite_coeffs(db(), c, g);
            CHECK(testsupport::rel_err(ca.r_up, cb.r_up) < 1e-12);
            CHECK(testsupport::rel_err(ca.r_down, cb.r_down) < 1e-12);
            CHECK(testsupport::rel_err(ca.t_in, cb.t_in) < 1e-12);
            CHECK(testsupport::rel_err(ca.r_el, cb.r_el) < 1e-12);
            const auto ga = greens_eval(db(), s, g);
            const auto gb = greens_eval(db(), c, g);
            CHECK(testsupport::rel_err(ga.g_zz, gb.g_zz) < 1e-12);
            CHECK(testsupport::rel_err(ga.g_0z, gb.g_0z) < 1e-12);
            CHECK(testsupport::rel_err(ga.e_in_z, gb.e_in_z) < 1e-12);
        }
    }
}

TEST_CASE("stack json round trip") {
    const std::string text = R"({"layers":[{"material":"Pt","d_nm":2.7},
        {"material":"C","d_nm":45.7},{"material":"Fe-57","d_nm":0.574},
        {"material":"C","d_nm":46.1},{"material":"Pt","d_nm":307.3}],
        "substrate":"Si","resonant":2,"z_rel":0.5})";
    const auto s = CavityStack::from_json(text);
    CHECK(s.layers.size() == 5);
    CHECK(s.resonant == 2);
    const auto s2 = CavityStack::from_json(s.to_json());
    CHECK(s2.to_json() == s.to_json());
    CHECK_THROWS_AS((void)CavityStack::from_json("{"), ConfigError);
    CHECK_THROWS_AS((void)CavityStack::from_json(R"({"layers":[],"substrate":"Si","resonant":3})"),
                    ConfigError);
}
