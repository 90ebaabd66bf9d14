#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "psphere/desitter.hpp"
#include "psphere/jones.hpp"
#include "psphere/poincare.hpp"
#include "psphere/stokes.hpp"
#include "psphere/suites.hpp"

namespace py = pybind11;
using namespace psphere;

namespace {

std::array<std::array<cplx, 2>, 2> mat2_rows(const Mat2c& m) {
  return {{{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}}};
}

std::array<std::array<double, 4>, 4> mueller_rows(const MuellerMatrix& m) {
  std::array<std::array<double, 4>, 4> rows{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) rows[i][j] = m(i, j);
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Two-beam polarization optics: SL(2,C) elements, Stokes four-vectors, "
            "Poincare-sphere reduction, and O(3,2) decoherence";

  py::register_exception<PureStateNotReducible>(m, "PureStateNotReducible",
                                                PyExc_ValueError);

  py::class_<Mat2c>(m, "Mat2c")
      .def(py::init<cplx, cplx, cplx, cplx>(), py::arg("a11"), py::arg("a12"), py::arg("a21"),
           py::arg("a22"))
      .def_static("identity", &Mat2c::identity)
      .def("entry", [](const Mat2c& s, int i, int j) { return s(i, j); })
      .def("rows", &mat2_rows)
      .def("det", &Mat2c::det)
      .def("adjoint", &Mat2c::adjoint)
      .def(
          "__matmul__", [](const Mat2c& a, const Mat2c& b) { return a * b; },
          py::is_operator())
      .def("__repr__", [](const Mat2c& s) {
        return "Mat2c(" + std::to_string(s(0, 0).real()) + "+" + std::to_string(s(0, 0).imag()) +
               "j, ...)";
      });

  py::class_<JonesVector>(m, "JonesVector")
      .def(py::init<cplx, cplx>(), py::arg("psi1"), py::arg("psi2"))
      .def_readonly("psi1", &JonesVector::psi1)
      .def_readonly("psi2", &JonesVector::psi2);

  py::class_<AttenuationResult>(m, "AttenuationResult")
      .def_readonly("overall_factor", &AttenuationResult::overall_factor)
      .def_readonly("relative", &AttenuationResult::relative);

  m.def("rotator", &rotator, py::arg("theta"));
  m.def("phase_shifter", &phase_shifter, py::arg("phi"));
  m.def("squeezer", &squeezer, py::arg("eta"));
  m.def("attenuator", &attenuator, py::arg("eta1"), py::arg("eta2"));
  m.def(
      "compose",
      [](const std::vector<Mat2c>& elements) {
        return compose(std::span<const Mat2c>(elements.data(), elements.size()));
      },
      py::arg("elements"));
  m.def("apply_jones", &apply_jones, py::arg("g"), py::arg("v"));

  py::class_<CoherencyMatrix>(m, "CoherencyMatrix")
      .def(py::init<const Mat2c&>(), py::arg("matrix"))
      .def_property_readonly("matrix", &CoherencyMatrix::matrix)
      .def("rows", [](const CoherencyMatrix& c) { return mat2_rows(c.matrix()); })
      .def("s11", &CoherencyMatrix::s11)
      .def("s22", &CoherencyMatrix::s22)
      .def("s12", &CoherencyMatrix::s12)
      .def("det", &CoherencyMatrix::det)
      .def("physical", &CoherencyMatrix::physical, py::arg("tol") = 1e-10);

  py::class_<StokesVector>(m, "StokesVector")
      .def(py::init<double, double, double, double>(), py::arg("s0"), py::arg("s1"),
           py::arg("s2"), py::arg("s3"))
      .def_readonly("s0", &StokesVector::s0)
      .def_readonly("s1", &StokesVector::s1)
      .def_readonly("s2", &StokesVector::s2)
      .def_readonly("s3", &StokesVector::s3)
      .def("physical", &StokesVector::physical, py::arg("tol") = 1e-10)
      .def("__repr__", [](const StokesVector& s) {
        return "StokesVector(" + std::to_string(s.s0) + ", " + std::to_string(s.s1) + ", " +
               std::to_string(s.s2) + ", " + std::to_string(s.s3) + ")";
      });

  py::class_<MuellerMatrix>(m, "MuellerMatrix")
      .def_static("identity", &MuellerMatrix::identity)
      .def("entry", [](const MuellerMatrix& s, int i, int j) { return s(i, j); })
      .def("rows", &mueller_rows)
      .def("is_lorentz", &MuellerMatrix::is_lorentz, py::arg("tol") = 1e-9)
      .def("is_orthochronous", &MuellerMatrix::is_orthochronous, py::arg("tol") = 1e-10)
      .def("minkowski_inverse", &MuellerMatrix::minkowski_inverse)
      .def("apply", py::overload_cast<const StokesVector&>(&MuellerMatrix::apply, py::const_),
           py::arg("s"))
      .def(
          "apply4",
          [](const MuellerMatrix& m4, const std::array<double, 4>& v) { return m4.apply(v); },
          py::arg("v"))
      .def(
          "__matmul__", [](const MuellerMatrix& a, const MuellerMatrix& b) { return a * b; },
          py::is_operator());

  py::class_<PolarFactors>(m, "PolarFactors")
      .def_readonly("rotation_part", &PolarFactors::rotation_part)
      .def_readonly("boost_part", &PolarFactors::boost_part)
      .def_readonly("wigner_angle", &PolarFactors::wigner_angle);

  m.def("coherency_from_jones", &coherency_from_jones, py::arg("v"));
  m.def("conjugate", &conjugate, py::arg("g"), py::arg("c"));
  m.def("stokes_from_coherency", &stokes_from_coherency, py::arg("c"));
  m.def("coherency_from_stokes", &coherency_from_stokes, py::arg("s"));
  m.def("mueller_from_sl2c", &mueller_from_sl2c, py::arg("g"));
  m.def("minkowski_norm", &minkowski_norm, py::arg("s"));
  m.def("polar_decompose", &polar_decompose, py::arg("g"));

  py::class_<BeamState>(m, "BeamState")
      .def(py::init<double, double, double, double, double>(), py::arg("amp_a"),
           py::arg("amp_b"), py::arg("phase"), py::arg("lambda_rate"), py::arg("time"))
      .def_readonly("amp_a", &BeamState::amp_a)
      .def_readonly("amp_b", &BeamState::amp_b)
      .def_readonly("phase", &BeamState::phase)
      .def_readonly("lambda_rate", &BeamState::lambda_rate)
      .def_readonly("time", &BeamState::time)
      .def("with_time", &BeamState::with_time, py::arg("t"));

  py::class_<SphereGeometry>(m, "SphereGeometry")
      .def_readonly("outer_s", &SphereGeometry::outer_s)
      .def_readonly("inner_r", &SphereGeometry::inner_r)
      .def_readonly("polar", &SphereGeometry::polar)
      .def_readonly("azimuth", &SphereGeometry::azimuth)
      .def_readonly("rz", &SphereGeometry::rz)
      .def_readonly("rx", &SphereGeometry::rx)
      .def_readonly("ry", &SphereGeometry::ry);

  py::class_<CanonicalForm>(m, "CanonicalForm")
      .def_readonly("value", &CanonicalForm::value)
      .def_readonly("boost_eta", &CanonicalForm::boost_eta)
      .def_readonly("align_rotation", &CanonicalForm::align_rotation);

  m.def("density_matrix", &density_matrix, py::arg("state"));
  m.def("sphere_geometry", &sphere_geometry, py::arg("state"));
  m.def("sphere_vector", &sphere_vector, py::arg("geom"));
  m.def("stokes_from_sphere", &stokes_from_sphere, py::arg("sphere"));
  m.def("align_rotation", &align_rotation, py::arg("geom"));
  m.def("canonical_boost", &canonical_boost, py::arg("geom"));
  m.def("canonicalize", &psphere::canonicalize, py::arg("state"));

  py::class_<FiveVector>(m, "FiveVector")
      .def(py::init<double, double, double, double, double>(), py::arg("t"), py::arg("z"),
           py::arg("x"), py::arg("y"), py::arg("u"))
      .def_readonly("t", &FiveVector::t)
      .def_readonly("z", &FiveVector::z)
      .def_readonly("x", &FiveVector::x)
      .def_readonly("y", &FiveVector::y)
      .def_readonly("u", &FiveVector::u);

  py::class_<O32Matrix>(m, "O32Matrix")
      .def_static("identity", &O32Matrix::identity)
      .def("entry", [](const O32Matrix& s, int i, int j) { return s(i, j); })
      .def("preserves_metric", &O32Matrix::preserves_metric, py::arg("tol") = 1e-9)
      .def("apply", &O32Matrix::apply, py::arg("v"))
      .def(
          "__matmul__", [](const O32Matrix& a, const O32Matrix& b) { return a * b; },
          py::is_operator());

  py::class_<DecoherenceAngle>(m, "DecoherenceAngle")
      .def(py::init<double>(), py::arg("chi"))
      .def_property_readonly("chi", &DecoherenceAngle::value);

  py::enum_<DecoherencePath>(m, "DecoherencePath")
      .value("Direct", DecoherencePath::Direct)
      .value("DeSitter", DecoherencePath::DeSitter);

  py::class_<DecohereResult>(m, "DecohereResult")
      .def_readonly("state", &DecohereResult::state)
      .def_readonly("rho", &DecohereResult::rho)
      .def_readonly("sigma", &DecohereResult::sigma);

  m.def("tu_rotation", &tu_rotation, py::arg("chi"));
  m.def("o32_norm", &o32_norm, py::arg("v"));
  m.def("lift_first", &lift_first, py::arg("m4"));
  m.def("lift_second", &lift_second, py::arg("m4"));
  m.def("chi_from_time", &chi_from_time, py::arg("lambda_rate"), py::arg("time"));
  m.def("rho_of_chi", &rho_of_chi, py::arg("amp_a"), py::arg("amp_b"), py::arg("phase"),
        py::arg("chi"));
  m.def("sigma_of_chi", &sigma_of_chi, py::arg("amp_a"), py::arg("amp_b"), py::arg("phase"),
        py::arg("chi"));
  m.def("embed_canonical", &embed_canonical, py::arg("value"), py::arg("m"), py::arg("chi"));
  m.def("decohere_step", &decohere_step, py::arg("state"), py::arg("dt"),
        py::arg("path") = DecoherencePath::Direct);
}
