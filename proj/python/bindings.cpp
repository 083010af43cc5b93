#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "genus_forge/brauer.hpp"
#include "genus_forge/cli.hpp"
#include "genus_forge/json_io.hpp"
#include "genus_forge/pic.hpp"

namespace py = pybind11;
using namespace genus_forge;

namespace {

using KRows = std::vector<std::vector<KElem>>;

std::vector<LaurentElem> laurent_entries(const std::vector<std::string>& entries, std::uint32_t p) {
  std::vector<LaurentElem> d;
  for (const auto& s : entries) d.push_back(parse_laurent(s, p));
  return d;
}

std::vector<RatFun> ratfun_entries(const std::vector<std::string>& entries, std::uint32_t p) {
  std::vector<RatFun> d;
  for (const auto& s : entries) d.push_back(to_ratfun(parse_laurent(s, p)));
  return d;
}

std::vector<Place> places_of(const std::vector<std::string>& names, std::uint32_t p) {
  std::vector<Place> out;
  for (const auto& s : names) out.push_back(parse_place(s, p));
  return out;
}

py::dict brauer_dict(const BrauerVector& v) {
  py::dict d;
  for (const auto& [place, x] : v.entries()) d[py::str(place.name())] = x;
  return d;
}

SignConvention sign_of(const std::string& s) {
  if (s == "paper") return SignConvention::paper;
  if (s == "raw") return SignConvention::raw;
  throw std::invalid_argument("sign must be 'paper' or 'raw'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quadratic lattices over Hasse domains of function fields over F_p";

  py::register_exception<std::domain_error>(m, "DomainError", PyExc_ValueError);

  py::class_<CurvePoint>(m, "Point")
      .def_static("infinity", &CurvePoint::infinity)
      .def_property_readonly("is_infinity", &CurvePoint::is_infinity)
      .def_property_readonly("x", [](const CurvePoint& pt) -> py::object {
        return pt.is_infinity() ? py::object(py::none()) : py::int_(pt.x().value());
      })
      .def_property_readonly("y", [](const CurvePoint& pt) -> py::object {
        return pt.is_infinity() ? py::object(py::none()) : py::int_(pt.y().value());
      })
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__", [](const CurvePoint& pt) { return py::hash(py::str(pt.to_string())); })
      .def("__repr__", &CurvePoint::to_string);

  py::class_<EllipticCurve>(m, "Curve")
      .def(py::init<std::uint32_t, std::int64_t, std::int64_t>(), py::arg("p"), py::arg("a"), py::arg("b"))
      .def_property_readonly("p", &EllipticCurve::p)
      .def_property_readonly("a", [](const EllipticCurve& e) { return e.a().value(); })
      .def_property_readonly("b", [](const EllipticCurve& e) { return e.b().value(); })
      .def("point", &EllipticCurve::point, py::arg("x"), py::arg("y"))
      .def("contains", &EllipticCurve::contains)
      .def("points", [](const EllipticCurve& e) { return enumerate_points(e); })
      .def("structure",
           [](const EllipticCurve& e) {
             auto g = group_structure(e);
             return py::make_tuple(g.n1, g.n2);
           })
      .def("cosets_mod_2", [](const EllipticCurve& e) { return cosets_mod_2(e); })
      .def("add", [](const EllipticCurve& e, const CurvePoint& a, const CurvePoint& b) { return add(e, a, b); })
      .def("multiply", [](const EllipticCurve& e, std::int64_t n, const CurvePoint& pt) { return multiply(e, n, pt); })
      .def("element", [](const EllipticCurve& e, const std::string& s) { return parse_kelem(s, e); })
      .def(py::self == py::self)
      .def("__repr__", &EllipticCurve::to_string);

  py::class_<KElem>(m, "KElem")
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("is_zero", &KElem::is_zero)
      .def("is_integral", [](const KElem& u) { return is_integral(u); })
      .def("is_unit", [](const KElem& u) { return is_unit(u); })
      .def("__repr__", [](const KElem& u) { return to_string(u); });

  py::class_<FracIdeal>(m, "Ideal")
      .def_readonly("g1", &FracIdeal::g1)
      .def_readonly("g2", &FracIdeal::g2)
      .def("contains", [](const FracIdeal& i, const KElem& u) { return contains(i, u); })
      .def("index", [](const FracIdeal& i) { return ideal_index(i); })
      .def("__mul__", [](const FracIdeal& i, const FracIdeal& j) { return ideal_product(i, j); })
      .def("__eq__", [](const FracIdeal& i, const FracIdeal& j) { return same_ideal(i, j); })
      .def("__repr__", [](const FracIdeal& i) { return to_string(i); });

  m.def("maximal_ideal", &maximal_ideal, py::arg("curve"), py::arg("point"));
  m.def("inverse_ideal", &inverse_ideal, py::arg("curve"), py::arg("point"));
  m.def("is_principal", &is_principal, py::arg("ideal"), py::arg("deg_bound") = 6);
  m.def(
      "bezout_quadruple",
      [](const EllipticCurve& e, const CurvePoint& pt) {
        auto q = bezout_quadruple(e, pt);
        return py::make_tuple(q.a1, q.a2, q.b1, q.b2);
      },
      py::arg("curve"), py::arg("point"), "(a1, a2, b1, b2) with a1 b1 + a2 b2 = 1");
  m.def(
      "transition_matrix_inverse",
      [](const EllipticCurve& e, const CurvePoint& pt, const std::string& sign) {
        return transition_matrix_inverse(e, pt, sign_of(sign)).rows();
      },
      py::arg("curve"), py::arg("point"), py::arg("sign") = "paper");

  m.def(
      "algorithm1",
      [](const EllipticCurve& e, std::optional<std::vector<std::string>> v0, const std::string& mode,
         const std::string& sign) {
        SplitForm f0;
        if (v0) {
          std::vector<KElem> d;
          for (const auto& s : *v0) d.push_back(parse_kelem(s, e));
          f0.v0 = GramMatrix<KElem>::diagonal(d);
        }
        Algorithm1Mode md;
        if (mode == "mod2") {
          md = Algorithm1Mode::mod2;
        } else if (mode == "full") {
          md = Algorithm1Mode::full;
        } else {
          throw std::invalid_argument("mode must be 'mod2' or 'full'");
        }
        py::list out;
        for (const auto& r : algorithm1(e, f0, md, sign_of(sign))) {
          out.append(py::make_tuple(r.point, r.transform.rows(), r.gram.matrix().rows()));
        }
        return out;
      },
      py::arg("curve"), py::arg("v0") = std::vector<std::string>{"1"}, py::arg("mode") = "mod2",
      py::arg("sign") = "paper", "List of (point, A^-1 rows, Gram rows); v0=None gives the rank-2 run.");
  m.def(
      "is_regular", [](const KRows& rows) { return is_regular(GramMatrix<KElem>(rows)); }, py::arg("gram"));

  m.def(
      "isotropy_search",
      [](std::uint32_t p, const std::vector<std::string>& diag, int bound) -> std::optional<std::vector<std::string>> {
        auto w = isotropy_search(GramMatrix<LaurentElem>::diagonal(laurent_entries(diag, p)), bound);
        if (!w) return std::nullopt;
        std::vector<std::string> out;
        for (const auto& x : *w) out.push_back(to_string(x));
        return out;
      },
      py::arg("p"), py::arg("diag"), py::arg("bound") = 3,
      "Diagonal form over F_p[t, 1/t]; returns an isotropic vector or None.");
  m.def(
      "evaluate",
      [](std::uint32_t p, const std::vector<std::string>& diag, const std::vector<std::string>& v) {
        return to_string(evaluate(GramMatrix<LaurentElem>::diagonal(laurent_entries(diag, p)), laurent_entries(v, p)));
      },
      py::arg("p"), py::arg("diag"), py::arg("vector"));

  m.def(
      "witt_invariant",
      [](std::uint32_t p, const std::vector<std::string>& diag) {
        auto s = witt_invariant(ratfun_entries(diag, p));
        return py::make_tuple(to_string(s.a), to_string(s.b));
      },
      py::arg("p"), py::arg("diag"));
  m.def(
      "brauer_class",
      [](std::uint32_t p, const std::vector<std::string>& diag) {
        return brauer_dict(brauer_class(witt_invariant(ratfun_entries(diag, p))));
      },
      py::arg("p"), py::arg("diag"), "Residues of the Witt invariant of a diagonal form at the places it involves.");
  m.def(
      "enumerate_2Br",
      [](std::uint32_t p, const std::vector<std::string>& places) {
        py::list out;
        for (const auto& v : enumerate_2Br(places_of(places, p))) out.append(brauer_dict(v));
        return out;
      },
      py::arg("p"), py::arg("places"));

  m.def(
      "pic",
      [](const EllipticCurve& e) {
        auto g = pic_group(e);
        return py::dict(py::arg("order") = g.order(), py::arg("structure") = py::make_tuple(g.structure.n1, g.structure.n2),
                        py::arg("mod2_order") = pic_mod2_order(g), py::arg("cosets") = g.cosets);
      },
      py::arg("curve"));
  m.def(
      "pic_genus0",
      [](std::uint32_t p, const std::vector<std::string>& places) {
        auto g = pic_group(places_of(places, p));
        return py::dict(py::arg("order") = g.order(), py::arg("mod2_order") = pic_mod2_order(g));
      },
      py::arg("p"), py::arg("places"));
  m.def(
      "genus_report",
      [](std::size_t num_places, int rank, std::uint64_t pic_order, std::uint64_t pic_mod2, bool isotropic) {
        auto r = genus_report(num_places, rank, pic_order, pic_mod2, isotropic);
        return py::dict(py::arg("genera") = r.genera, py::arg("classes_per_genus") = r.classes_per_genus,
                        py::arg("exact") = r.exact,
                        py::arg("total_classes") = r.exact ? py::object(py::int_(r.total_classes)) : py::none(),
                        py::arg("hasse_principle") = r.hasse_principle);
      },
      py::arg("num_places"), py::arg("rank"), py::arg("pic_order"), py::arg("pic_mod2_order"), py::arg("isotropic"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line in-process; returns (exit_code, stdout, stderr).");
}
