#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nucav/design.hpp"
#include "nucav/io.hpp"
#include "nucav/modes.hpp"

namespace py = pybind11;
using namespace nucav;

PYBIND11_MODULE(_core, m) {
    m.doc() = "thin-film x-ray cavity forward simulation and inverse design";

    py::register_exception<Error>(m, "NucavError");

    py::class_<Material>(m, "Material")
        .def_readonly("name", &Material::name);

    py::class_<Isotope>(m, "Isotope")
        .def_readonly("name", &Isotope::name)
        .def_readonly("omega_nuc_keV", &Isotope::omega_nuc_keV)
        .def_readonly("gamma0_neV", &Isotope::gamma0_neV)
        .def_readonly("alpha_ic", &Isotope::alpha_ic)
        .def_readonly("two_Ie", &Isotope::two_Ie)
        .def_readonly("two_Ig", &Isotope::two_Ig)
        .def_readonly("f_LM", &Isotope::f_LM)
        .def_readonly("abundance", &Isotope::abundance)
        .def_readonly("rho_V_per_nm3", &Isotope::rho_V_per_nm3)
        .def_readonly("delta_el", &Isotope::delta_el)
        .def_readonly("beta_el", &Isotope::beta_el);

    py::class_<MaterialDB>(m, "MaterialDB")
        .def_static("load", &MaterialDB::load, py::arg("materials_csv"), py::arg("isotopes_csv"))
        .def_static("load_dir", &MaterialDB::load_dir, py::arg("dir"))
        .def("material_names", &MaterialDB::material_names)
        .def("isotope_names", &MaterialDB::isotope_names)
        .def("isotope", &MaterialDB::isotope, py::return_value_policy::reference_internal);

    py::class_<Layer>(m, "Layer")
        .def(py::init<>())
        .def_readwrite("material", &Layer::material)
        .def_readwrite("d_nm", &Layer::d_nm);

    py::class_<CavityStack>(m, "CavityStack")
        .def(py::init<>())
        .def_static("from_json", &CavityStack::from_json)
        .def_static("from_json_file", &CavityStack::from_json_file)
        .def("to_json", &CavityStack::to_json)
        .def_readwrite("layers", &CavityStack::layers)
        .def_readwrite("substrate", &CavityStack::substrate)
        .def_readwrite("resonant", &CavityStack::resonant)
        .def_readwrite("z_rel", &CavityStack::z_rel);

    py::class_<Geometry>(m, "Geometry")
        .def(py::init<double, double>(), py::arg("omega_keV"), py::arg("theta_mrad"))
        .def_readwrite("omega_keV", &Geometry::omega_keV)
        .def_readwrite("theta_mrad", &Geometry::theta_mrad);

    m.def("refractive_index", &refractive_index, py::arg("db"), py::arg("material"),
          py::arg("energy_keV"));
    m.def("dipole_strength", &dipole_strength);
    m.def("areal_density", &areal_density, py::arg("iso"), py::arg("d3_nm"));
    m.def("k_parallel", &k_parallel);
    m.def("collapse_zero_layers", &collapse_zero_layers);
    m.def("parratt",
          py::overload_cast<const MaterialDB&, const CavityStack&, const Geometry&>(&parratt));
    m.def("green_equal_z", &green_equal_z);
    m.def("green_surface", &green_surface);
    m.def("field_at_nuclei", &field_at_nuclei);
    m.def("field_at_surface", &field_at_surface);

    py::class_<TwoLevelParams>(m, "TwoLevelParams")
        .def_readonly("cls", &TwoLevelParams::cls)
        .def_readonly("sr", &TwoLevelParams::sr)
        .def_readonly("rabi_rel", &TwoLevelParams::rabi_rel)
        .def_readonly("fe", &TwoLevelParams::fe);
    m.def("two_level_params", &two_level_params);
    m.def("naive_isotope_rescale", &naive_isotope_rescale);

    py::class_<FanoParams>(m, "FanoParams")
        .def(py::init<>())
        .def_readwrite("r_el", &FanoParams::r_el)
        .def_readwrite("a_weight", &FanoParams::a_weight)
        .def_readwrite("phi", &FanoParams::phi)
        .def_readwrite("center", &FanoParams::center)
        .def_readwrite("hwhm", &FanoParams::hwhm)
        .def_readwrite("zero_background", &FanoParams::zero_background);
    py::class_<Spectrum>(m, "Spectrum")
        .def_readonly("grid", &Spectrum::grid)
        .def_readonly("intensity", &Spectrum::intensity);
    m.def("fano_params", &fano_params);
    m.def("nuclear_response", &nuclear_response);
    m.def("reflection_amplitude", &reflection_amplitude);
    m.def("visibility", &visibility);
    m.def("fano_spectrum", &fano_spectrum);
    m.def("default_detuning_grid", &default_detuning_grid);
    m.def("rocking_curve", &rocking_curve);

    py::class_<Pole>(m, "Pole")
        .def_readonly("theta0_mrad", &Pole::theta0_mrad)
        .def_readonly("residue", &Pole::residue)
        .def_readonly("order_index", &Pole::order_index)
        .def_readonly("contour_rel_err", &Pole::contour_rel_err)
        .def_readonly("flagged", &Pole::flagged);
    py::class_<PoleWindow>(m, "PoleWindow")
        .def(py::init<>())
        .def_readwrite("lo_mrad", &PoleWindow::lo_mrad)
        .def_readwrite("hi_mrad", &PoleWindow::hi_mrad)
        .def_readwrite("im_height_mrad", &PoleWindow::im_height_mrad)
        .def_readwrite("n_seeds", &PoleWindow::n_seeds);
    m.def("find_poles", &find_poles);
    m.def("green_zz_at", &green_zz_at);
    m.def("dispersion_at", &dispersion_at);
    m.def("mittag_leffler",
          [](const std::vector<Pole>& poles, std::complex<double> g0, double theta) {
              return mittag_leffler(poles, g0, theta);
          });
    m.def("poles_to_json", &io::poles_to_json);

    auto d = m.def_submodule("design");
    py::class_<design::Objectives>(d, "Objectives")
        .def_readonly("cls", &design::Objectives::cls)
        .def_readonly("sr", &design::Objectives::sr)
        .def_readonly("vis", &design::Objectives::vis)
        .def_readonly("fe", &design::Objectives::fe);
    py::class_<design::DesignPoint>(d, "DesignPoint")
        .def_readonly("x", &design::DesignPoint::x)
        .def_readonly("obj", &design::DesignPoint::obj)
        .def_readonly("feasible", &design::DesignPoint::feasible);
    py::class_<design::DesignSpace>(d, "DesignSpace")
        .def_static("archetype", &design::DesignSpace::archetype, py::arg("cladding") = "Pt",
                    py::arg("guide") = "C", py::arg("isotope") = "Fe-57",
                    py::arg("with_z_rel") = false)
        .def_static("from_json", &design::DesignSpace::from_json)
        .def("to_json", &design::DesignSpace::to_json);
    py::class_<design::OptimizeConfig>(d, "OptimizeConfig")
        .def(py::init<>())
        .def_readwrite("restarts", &design::OptimizeConfig::restarts)
        .def_readwrite("seed", &design::OptimizeConfig::seed)
        .def_readwrite("max_evals_per_restart", &design::OptimizeConfig::max_evals_per_restart)
        .def_readwrite("simplex_tol", &design::OptimizeConfig::simplex_tol);
    d.def("evaluate", &design::evaluate);
    d.def("optimize",
          [](const MaterialDB& db, const design::DesignSpace& space,
             const std::function<double(const design::Objectives&)>& cost,
             const design::OptimizeConfig& cfg) { return design::optimize(db, space, cost, cfg); });
}
