#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "nnfft/bounds.hpp"
#include "nnfft/direct.hpp"
#include "nnfft/errors.hpp"
#include "nnfft/fast_sinc.hpp"
#include "nnfft/nfft.hpp"
#include "nnfft/nnfft.hpp"
#include "nnfft/sinc_approx.hpp"
#include "nnfft/special.hpp"
#include "nnfft/windows.hpp"

namespace py = pybind11;
using nnfft::Complex;

namespace {

using RealArray = py::array_t<double, py::array::c_style | py::array::forcecast>;
using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

std::vector<double> to_vector(const RealArray& a) {
  if (a.ndim() != 1) throw py::value_error("expected a 1-d array");
  return {a.data(), a.data() + a.size()};
}

std::vector<Complex> to_vector(const ComplexArray& a) {
  if (a.ndim() != 1) throw py::value_error("expected a 1-d array");
  return {a.data(), a.data() + a.size()};
}

template <typename T>
py::array_t<T> to_array(const std::vector<T>& v) {
  py::array_t<T> out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "NNFFT, NFFT, Clenshaw-Curtis sinc approximation and fast sinc transform";

  py::register_exception<nnfft::ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<nnfft::NumericError>(m, "NumericError", PyExc_ArithmeticError);

  py::enum_<nnfft::WindowKind>(m, "WindowKind")
      .value("SINH", nnfft::WindowKind::SinhType)
      .value("BSPLINE", nnfft::WindowKind::BSpline)
      .value("ALGEBRAIC", nnfft::WindowKind::Algebraic)
      .value("KAISER_BESSEL", nnfft::WindowKind::KaiserBessel);

  m.def("bessel_i1", &nnfft::special::bessel_i1, py::arg("x"));
  m.def("bessel_j1", &nnfft::special::bessel_j1, py::arg("x"));
  m.def("cardinal_bspline", &nnfft::special::cardinal_bspline, py::arg("order"), py::arg("x"));
  m.def("sinc", &nnfft::special::sinc, py::arg("y"));

  py::class_<nnfft::WindowSpec>(m, "WindowSpec")
      .def(py::init<nnfft::WindowKind, int, double, int>(), py::arg("kind"), py::arg("m"),
           py::arg("sigma"), py::arg("n_grid"))
      .def_property_readonly("beta", &nnfft::WindowSpec::beta)
      .def("omega", &nnfft::WindowSpec::omega, py::arg("x"))
      .def("omega_hat", &nnfft::WindowSpec::omega_hat, py::arg("v"))
      .def("phi", &nnfft::WindowSpec::phi, py::arg("t"))
      .def("phi_hat", &nnfft::WindowSpec::phi_hat, py::arg("v"));

  py::class_<nnfft::NfftPlan>(m, "NfftPlan")
      .def(py::init([](int degree, double sigma, nnfft::WindowKind kind, int mm, const RealArray& x) {
             return nnfft::NfftPlan(degree, sigma, kind, mm, to_vector(x));
           }),
           py::arg("degree"), py::arg("sigma"), py::arg("kind"), py::arg("m"), py::arg("nodes"))
      .def("trafo", [](const nnfft::NfftPlan& p, const ComplexArray& c) { return to_array(p.trafo(to_vector(c))); })
      .def("adjoint", [](const nnfft::NfftPlan& p, const ComplexArray& y) { return to_array(p.adjoint(to_vector(y))); });

  py::class_<nnfft::NnfftGeometry>(m, "NnfftGeometry")
      .def_static("make", &nnfft::NnfftGeometry::make, py::arg("N"), py::arg("M1"), py::arg("M2"),
                  py::arg("sigma1"), py::arg("sigma2"), py::arg("m1"), py::arg("m2"))
      .def_static("make_rounded", &nnfft::NnfftGeometry::make_rounded, py::arg("N"), py::arg("M1"),
                  py::arg("M2"), py::arg("sigma1"), py::arg("sigma2"), py::arg("m1"), py::arg("m2"))
      .def_readonly("N", &nnfft::NnfftGeometry::N)
      .def_readonly("M1", &nnfft::NnfftGeometry::M1)
      .def_readonly("M2", &nnfft::NnfftGeometry::M2)
      .def_readonly("N1", &nnfft::NnfftGeometry::N1)
      .def_readonly("N2", &nnfft::NnfftGeometry::N2)
      .def_readonly("sigma1", &nnfft::NnfftGeometry::sigma1)
      .def_readonly("sigma2", &nnfft::NnfftGeometry::sigma2)
      .def_readonly("m1", &nnfft::NnfftGeometry::m1)
      .def_readonly("m2", &nnfft::NnfftGeometry::m2)
      .def_readonly("a", &nnfft::NnfftGeometry::a);

  m.def("rescale_frequencies",
        [](int N, const RealArray& v, double sigma1, int m1) {
          auto r = nnfft::rescale_frequencies(N, to_vector(v), sigma1, m1);
          return py::make_tuple(r.n_star, to_array(r.v_star));
        },
        py::arg("N"), py::arg("v"), py::arg("sigma1"), py::arg("m1"));

  py::class_<nnfft::NnfftPlan>(m, "NnfftPlan")
      .def(py::init([](const nnfft::NnfftGeometry& g, const RealArray& v, const RealArray& x,
                       nnfft::WindowKind k1, nnfft::WindowKind k2) {
             return nnfft::NnfftPlan(g, to_vector(v), to_vector(x), k1, k2);
           }),
           py::arg("geometry"), py::arg("freqs"), py::arg("nodes"),
           py::arg("kind1") = nnfft::WindowKind::SinhType,
           py::arg("kind2") = nnfft::WindowKind::SinhType)
      .def_property_readonly("geometry", &nnfft::NnfftPlan::geometry)
      .def("trafo", [](const nnfft::NnfftPlan& p, const ComplexArray& f) { return to_array(p.trafo(to_vector(f))); });

  m.def("cc_weights_direct", [](int n) { return to_array(nnfft::cc_weights_direct(n)); }, py::arg("n"));
  m.def("cc_weights_fast", [](int n) { return to_array(nnfft::cc_weights_fast(n)); }, py::arg("n"));
  m.def("cc_points",
        [](int n) { return to_array(nnfft::make_cc_quadrature(n).z); }, py::arg("n"));
  m.def("sinc_expsum_eval",
        [](int n, int N, const RealArray& x) {
          return to_array(nnfft::sinc_expsum_eval(nnfft::make_cc_quadrature(n), N, to_vector(x)));
        },
        py::arg("n"), py::arg("N"), py::arg("x"));
  m.def("sinc_expsum_grid",
        [](int n, int N, int R) { return to_array(nnfft::sinc_expsum_grid(nnfft::make_cc_quadrature(n), N, R)); },
        py::arg("n"), py::arg("N"), py::arg("R"));

  py::class_<nnfft::NnfftParams>(m, "NnfftParams")
      .def(py::init<>())
      .def_readwrite("sigma1", &nnfft::NnfftParams::sigma1)
      .def_readwrite("sigma2", &nnfft::NnfftParams::sigma2)
      .def_readwrite("m1", &nnfft::NnfftParams::m1)
      .def_readwrite("m2", &nnfft::NnfftParams::m2)
      .def_readwrite("kind1", &nnfft::NnfftParams::kind1)
      .def_readwrite("kind2", &nnfft::NnfftParams::kind2);

  py::class_<nnfft::bounds::BoundReport>(m, "BoundReport")
      .def_readonly("e1", &nnfft::bounds::BoundReport::e1)
      .def_readonly("e2", &nnfft::bounds::BoundReport::e2)
      .def_readonly("hat_phi1_half", &nnfft::bounds::BoundReport::hat_phi1_half)
      .def_readonly("a", &nnfft::bounds::BoundReport::a)
      .def_readonly("nnfft_bound", &nnfft::bounds::BoundReport::nnfft_bound)
      .def_readonly("cc_bound", &nnfft::bounds::BoundReport::cc_bound)
      .def_readonly("fast_sinc_bound_full", &nnfft::bounds::BoundReport::fast_sinc_bound_full)
      .def_readonly("fast_sinc_bound_simplified", &nnfft::bounds::BoundReport::fast_sinc_bound_simplified)
      .def_readonly("simplified_valid", &nnfft::bounds::BoundReport::simplified_valid);

  py::class_<nnfft::SincPlan>(m, "SincPlan")
      .def(py::init([](int N, const RealArray& a, const RealArray& b, int n, double epsilon,
                       const nnfft::NnfftParams& params, bool detect) {
             nnfft::SincOptions o;
             o.n = n;
             o.epsilon = epsilon;
             o.params = params;
             o.detect_equispaced = detect;
             return nnfft::SincPlan(N, to_vector(a), to_vector(b), o);
           }),
           py::arg("N"), py::arg("sources"), py::arg("targets"), py::arg("n") = 0,
           py::arg("epsilon") = 0.0, py::arg("params") = nnfft::NnfftParams{},
           py::arg("detect_equispaced") = true)
      .def_property_readonly("n", &nnfft::SincPlan::quadrature_size)
      .def_property_readonly("mode", [](const nnfft::SincPlan& p) { return nnfft::to_string(p.mode()); })
      .def("transform", [](const nnfft::SincPlan& p, const ComplexArray& c) { return to_array(p.transform(to_vector(c))); })
      .def("bound_report", &nnfft::SincPlan::bound_report);

  m.def("nndft", [](const ComplexArray& f, const RealArray& v, const RealArray& x, double N) {
          return to_array(nnfft::direct::nndft(to_vector(f), to_vector(v), to_vector(x), N));
        }, py::arg("coeffs"), py::arg("freqs"), py::arg("nodes"), py::arg("N"));
  m.def("ndft", [](const ComplexArray& c, const RealArray& x) {
          return to_array(nnfft::direct::ndft(to_vector(c), to_vector(x)));
        }, py::arg("coeffs"), py::arg("nodes"));
  m.def("sinc_transform_direct", [](const ComplexArray& c, const RealArray& a, const RealArray& b, double N) {
          return to_array(nnfft::direct::sinc_transform(to_vector(c), to_vector(a), to_vector(b), N));
        }, py::arg("coeffs"), py::arg("sources"), py::arg("targets"), py::arg("N"));

  m.attr("CC_CONSTANT") = nnfft::bounds::kCcConstant;
  m.def("bound_sinh_E", &nnfft::bounds::bound_sinh_E, py::arg("m"), py::arg("sigma"));
  m.def("hat_phi_sinh_at_half", &nnfft::bounds::hat_phi_sinh_at_half, py::arg("N"), py::arg("sigma"), py::arg("m"));
  m.def("bound_nnfft_sinh", &nnfft::bounds::bound_nnfft_sinh, py::arg("N"), py::arg("sigma1"),
        py::arg("sigma2"), py::arg("m1"), py::arg("m2"));
  m.def("bound_cc_sinc", &nnfft::bounds::bound_cc_sinc, py::arg("N"), py::arg("nu"));
  m.def("choose_n",
        [](int N, double eps, bool power_of_two) {
          return nnfft::bounds::choose_n(N, eps, power_of_two ? nnfft::bounds::NShape::PowerOfTwo
                                                              : nnfft::bounds::NShape::MultipleOfN);
        },
        py::arg("N"), py::arg("epsilon"), py::arg("power_of_two") = true);
  m.def("bound_fast_sinc", &nnfft::bounds::bound_fast_sinc, py::arg("epsilon"), py::arg("e1"),
        py::arg("e2"), py::arg("a"), py::arg("hat_phi1_half"), py::arg("simplified") = false);
}
