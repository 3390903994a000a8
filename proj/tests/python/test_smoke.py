"""Python smoke tests for the bound core operations."""

import json
import math

import pytest

import nucav


@pytest.fixture(scope="module")
def db():
    return nucav.load_default_db()


OPEN_TOP = json.dumps(
    {
        "layers": [
            {"material": "C", "d_nm": 80.1},
            {"material": "Fe-57", "d_nm": 0.574},
            {"material": "C", "d_nm": 102.6},
            {"material": "Pt", "d_nm": 17.6},
        ],
        "substrate": "Si",
        "resonant": 1,
        "z_rel": 0.5,
    }
)


def test_database_and_index(db):
    assert "Pt" in db.material_names()
    assert set(db.isotope_names()) >= {"Fe-57", "Sn-119", "Sc-45"}
    n = nucav.refractive_index(db, "Fe-57", 14.4)
    assert n == complex(1 - 7.3e-6, 3.3e-7)
    assert nucav.refractive_index(db, "vacuum", 5.0) == 1.0
    with pytest.raises(nucav.NucavError):
        nucav.refractive_index(db, "C", 5.0)


def test_free_space_identities(db):
    stack = nucav.CavityStack.from_json(
        '{"layers":[{"material":"vacuum","d_nm":9.0}],"substrate":"vacuum","resonant":-1}'
    )
    geom = nucav.Geometry(14.4, 3.0)
    assert abs(nucav.parratt(db, stack, geom)) < 1e-14
    assert abs(nucav.field_at_surface(db, stack, geom) - 1.0) < 1e-14
    assert nucav.k_parallel(nucav.Geometry(14.4, 1570.7963267948966)) == 0.0


def test_two_level_params_and_visibility(db):
    stack = nucav.CavityStack.from_json(OPEN_TOP)
    iso = db.isotope("Fe-57")
    best = max(
        (nucav.two_level_params(db, stack, iso, nucav.Geometry(14.4, 2.1 + i * 2.0e-5)).sr
         for i in range(5000)),
    )
    assert 30.0 <= best <= 50.0
    fp = nucav.fano_params(db, stack, iso, nucav.Geometry(14.4, 2.1669))
    assert nucav.visibility(fp) >= 0.0
    spec = nucav.fano_spectrum(fp, nucav.default_detuning_grid())
    assert len(spec.grid) == 4001
    assert min(spec.intensity) >= 0.0


def test_poles_and_report(db):
    stack = nucav.CavityStack.from_json(OPEN_TOP)
    w = nucav.PoleWindow()
    w.lo_mrad, w.hi_mrad = 2.0, 3.0
    poles = nucav.find_poles(db, stack, 14.4, w)
    assert poles
    assert all(abs(nucav.dispersion_at(db, stack, 14.4, p.theta0_mrad)) < 1e-10 for p in poles)
    report = json.loads(nucav.poles_to_json(poles))
    assert {"re_theta0_mrad", "im_theta0_mrad", "re_residue", "im_residue",
            "order_index", "contour_check_rel_err"} <= set(report[0])


def test_design_evaluate_and_optimize(db):
    space = nucav.design.DesignSpace.archetype()
    p = nucav.design.evaluate(db, space, [2.7, 45.7, 46.1, 307.3, 2.2123])
    assert p.feasible
    assert 0.40 < p.obj.vis < 0.60
    cfg = nucav.design.OptimizeConfig()
    cfg.restarts = 4
    cfg.seed = 3
    cfg.max_evals_per_restart = 400
    best = nucav.design.optimize(db, space, lambda o: -o.sr, cfg)
    assert best.feasible
    assert best.obj.sr > 10.0
