#include <doctest.h>

#include <cmath>

#include "nucav/units.hpp"
#include "support/common.hpp"

using namespace nucav;
using testsupport::db;
using testsupport::cplx;

TEST_CASE("refractive index matches the reference table values exactly") {
    // resonant-layer electronic indices at their own transition energies
    CHECK(refractive_index(db(), "Fe-57", 14.4) == cplx(1.0 - 7.3e-6, 3.3e-7));
    CHECK(refractive_index(db(), "Sn-119", 23.9) == cplx(1.0 - 2.2e-6, 3.7e-8));
    CHECK(refractive_index(db(), "Sc-45", 12.4) == cplx(1.0 - 3.8e-6, 1.3e-7));
    // carbon guide at the three energies
    CHECK(refractive_index(db(), "C", 14.4) == cplx(1.0 - 2.3e-6, 1.2e-9));
    CHECK(refractive_index(db(), "C", 23.9) == cplx(1.0 - 0.82e-6, 2.8e-10));
    CHECK(refractive_index(db(), "C", 12.4) == cplx(1.0 - 3.1e-6, 2.2e-9));
}

TEST_CASE("vacuum resolves to exactly 1 at any energy") {
    CHECK(refractive_index(db(), "vacuum", 14.4) == cplx(1.0, 0.0));
    CHECK(refractive_index(db(), "vacuum", 0.001) == cplx(1.0, 0.0));
    CHECK(refractive_index(db(), "vacuum", 1e6) == cplx(1.0, 0.0));
}

TEST_CASE("unknown material and out-of-range energy are errors") {
    CHECK_THROWS_AS((void)refractive_index(db(), "Unobtainium", 14.4), UnknownMaterial);
    CHECK_THROWS_AS((void)refractive_index(db(), "C", 9.0), EnergyOutOfRange);
    CHECK_THROWS_AS((void)refractive_index(db(), "C", 26.5), EnergyOutOfRange);
    CHECK_THROWS_AS((void)refractive_index(db(), "Fe-57", 14.6), EnergyOutOfRange);
}

TEST_CASE("interpolation is continuous and keeps beta nonnegative") {
    design::Rng rng(42);
    for (const char* mat : {"Pt", "Pd", "C", "Si", "B4C", "MgO", "diamond"}) {
        for (int i = 0; i < 200; ++i) {
            const double E = 10.0 + 16.0 * rng.uniform01();
            const cplx n = refractive_index(db(), mat, E);
            CHECK(n.imag() >= 0.0);  // passivity of the data
            const cplx n2 = refractive_index(db(), mat, E + 1e-9);
            CHECK(std::abs(n2 - n) < 1e-9);  // continuity at non-node energies
        }
    }
}

TEST_CASE("dipole strength") {
    const double pi = std::numbers::pi;
    Isotope iso;
    iso.name = "toy";
    iso.omega_nuc_keV = 10.0;
    iso.gamma0_neV = 5.0;
    iso.alpha_ic = 0.0;
    iso.two_Ie = 3;
    iso.two_Ig = 3;  // I_e = I_g
    iso.f_LM = 1;
    iso.abundance = 1;
    iso.rho_V_per_nm3 = 1;

    SUBCASE("multiplicity ratio 1 and alpha 0 give pi gamma0 / omega^3") {
        const double omega = units::wavenumber(10.0);
        const double gamma0 = units::rate_from_neV(5.0);
        CHECK(dipole_strength(iso) ==
              doctest::Approx(pi * gamma0 / (omega * omega * omega)).epsilon(1e-15));
    }

    SUBCASE("linear in gamma0") {
        const double base = dipole_strength(iso);
        iso.gamma0_neV *= 2.0;
        CHECK(dipole_strength(iso) == doctest::Approx(2.0 * base).epsilon(1e-15));
    }

    SUBCASE("Fe-57 against an independent hand evaluation") {
        const Isotope& fe = db().isotope("Fe-57");
        // spelled out with its own unit conversion
        const double hbar_c = 0.1973269804;               // keV nm
        const double omega = 14.4 / hbar_c;               // 1/nm
        const double gamma0 = 4.66e-12 / hbar_c;          // 1/nm
        const double expected = 2.0 * pi * gamma0 / std::pow(omega, 3.0) /
                                (2.0 * (1.0 + 8.56)) * (4.0 / 2.0);
        CHECK(dipole_strength(fe) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("areal density") {
    Isotope iso;
    iso.name = "toy";
    iso.omega_nuc_keV = 14.4;
    iso.gamma0_neV = 4.66;
    iso.alpha_ic = 8.56;
    iso.two_Ie = 3;
    iso.two_Ig = 1;
    iso.rho_V_per_nm3 = 84.9;
    iso.abundance = 0.95;
    iso.f_LM = 0.8;

    CHECK(areal_density(iso, 0.574) == doctest::Approx(37.03).epsilon(1e-3));
    CHECK(areal_density(iso, 0.574) == 0.574 * 84.9 * 0.95 * 0.8);
    CHECK(areal_density(iso, 2 * 0.574) == doctest::Approx(2 * areal_density(iso, 0.574)));

    iso.f_LM = 0.0;
    CHECK(areal_density(iso, 0.574) == 0.0);

    CHECK_THROWS_AS((void)areal_density(iso, 0.0), NonPositiveThickness);
    CHECK_THROWS_AS((void)areal_density(iso, -1.0), NonPositiveThickness);
}

TEST_CASE("isotope records carry the reference data") {
    const Isotope& fe = db().isotope("Fe-57");
    CHECK(fe.omega_nuc_keV == 14.4);
    CHECK(fe.delta_el == 7.3e-6);
    CHECK(fe.beta_el == 3.3e-7);
    CHECK(fe.multiplicity() == 2.0);
    const Isotope& sn = db().isotope("Sn-119");
    CHECK(sn.omega_nuc_keV == 23.9);
    CHECK(sn.delta_el == 2.2e-6);
    CHECK(sn.beta_el == 3.7e-8);
    const Isotope& sc = db().isotope("Sc-45");
    CHECK(sc.omega_nuc_keV == 12.4);
    CHECK(sc.delta_el == 3.8e-6);
    CHECK(sc.beta_el == 1.3e-7);
    CHECK(sc.multiplicity() == 0.5);
    CHECK_THROWS_AS((void)db().isotope("Fe-58"), UnknownIsotope);
}
