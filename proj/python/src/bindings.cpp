#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ltlab/report.hpp"

namespace py = pybind11;
using namespace ltlab;

namespace {

// Reports cross the boundary as JSON text; the Python side parses them.
template <class F>
std::string json_call(F&& f) {
  std::string out;
  {
    py::gil_scoped_release release;
    out = f().dump();
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_ltlab, m) {
  m.doc() = "Verification routines for the Lubin-Tate tower laboratory";

  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<GuardExceeded>(m, "GuardExceeded", PyExc_RuntimeError);

  m.def("conway_polynomial", &conway_polynomial, py::arg("p"), py::arg("m"));
  m.def(
      "field_mul",
      [](unsigned p, unsigned deg, Elem a, Elem b) {
        auto F = make_field(p, deg);
        if (a >= F->size() || b >= F->size()) throw InvalidArgument("element rank out of range");
        return F->mul(a, b);
      },
      py::arg("p"), py::arg("m"), py::arg("a"), py::arg("b"));
  m.def(
      "count_points",
      [](std::uint64_t q, unsigned h, unsigned n, unsigned threads) {
        py::gil_scoped_release release;
        return ltlab::count_points({q, h, n}, threads);
      },
      py::arg("q"), py::arg("h"), py::arg("n") = 1, py::arg("threads") = 0);
  m.def(
      "brute_count",
      [](std::uint64_t q, unsigned h, unsigned n, const std::string& conv) {
        py::gil_scoped_release release;
        return ltlab::brute_count({q, h, n}, parse_convention(conv));
      },
      py::arg("q"), py::arg("h"), py::arg("n") = 1, py::arg("convention") = "full");
  m.def(
      "predicted_s", [](std::uint64_t q, unsigned h, unsigned n) { return predicted_S(q, h, n).str(); },
      py::arg("q"), py::arg("h"), py::arg("n"));
  m.def(
      "conjecture_json",
      [](std::uint64_t q, unsigned h, unsigned N, const std::string& conv, unsigned threads) {
        return json_call([&] { return to_json(conjecture_report(q, h, N, {parse_convention(conv), threads})); });
      },
      py::arg("q"), py::arg("h"), py::arg("N"), py::arg("convention") = "artin_schreier", py::arg("threads") = 0);
  m.def(
      "zeta_json",
      [](std::uint64_t q, unsigned h, unsigned n) {
        return json_call([&] { return to_json(zeta_consistency({q, h, n})); });
      },
      py::arg("q"), py::arg("h"), py::arg("n") = 1);
  m.def("identity_names", &identity_names);
  m.def(
      "identity_json",
      [](const std::string& name, std::uint64_t q, unsigned h) {
        return json_call([&] { return to_json(verify_identity(name, q, h)); });
      },
      py::arg("name"), py::arg("q"), py::arg("h"));
  m.def(
      "formal_verify_json",
      [](std::uint64_t q, unsigned h, unsigned samples, unsigned prec, unsigned residue_degree, std::uint64_t seed,
         unsigned threads) {
        return json_call(
            [&] { return to_json(verify_section3(q, h, samples, prec, residue_degree, seed, threads)); });
      },
      py::arg("q"), py::arg("h"), py::arg("samples") = 3, py::arg("prec") = 0, py::arg("residue_degree") = 0,
      py::arg("seed") = 1, py::arg("threads") = 1);
  m.def(
      "congruence_verify_json",
      [](std::uint64_t q, unsigned h, unsigned samples, unsigned prec, unsigned residue_degree, std::uint64_t seed,
         const std::string& tie, unsigned threads) {
        return json_call([&] {
          return to_json(
              congruence_verify(q, h, samples, prec, residue_degree, seed, parse_tie_break(tie), threads));
        });
      },
      py::arg("q"), py::arg("h"), py::arg("samples") = 3, py::arg("prec") = 0, py::arg("residue_degree") = 0,
      py::arg("seed") = 1, py::arg("tie") = "least", py::arg("threads") = 1);
  m.def(
      "symmetry_json",
      [](std::uint64_t q, unsigned h, unsigned n) { return json_call([&] { return to_json(symmetry_suite(q, h, n)); }); },
      py::arg("q"), py::arg("h"), py::arg("n") = 1);
}
