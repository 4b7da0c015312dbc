// SPDX-License-Identifier: Apache-2.0

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "angleforge/construction.hpp"
#include "angleforge/counting.hpp"
#include "angleforge/errors.hpp"
#include "angleforge/io.hpp"
#include "cli.hpp"

namespace py = pybind11;
using namespace angleforge;

namespace {

// Python ints cross the boundary as decimal text, so sizes are unlimited.
BigInt to_big(const py::int_& v) { return parse_bigint(py::str(static_cast<py::handle>(v)).cast<std::string>()); }

py::int_ to_py(const BigInt& z) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::list to_py(const std::vector<BigInt>& v) {
  py::list out;
  for (const auto& z : v) out.append(to_py(z));
  return out;
}

AlgebraicInt to_element(const AlgebraicContext& ctx, const std::vector<py::int_>& coeffs) {
  std::vector<BigInt> c;
  for (const auto& v : coeffs) c.push_back(to_big(v));
  return ctx.element(std::move(c));
}

using PyPoint = std::pair<std::vector<py::int_>, std::vector<py::int_>>;

PlanePoint to_point(const AlgebraicContext& ctx, const PyPoint& p) {
  return {to_element(ctx, p.first), to_element(ctx, p.second)};
}

py::tuple to_py(const PlanePoint& p) { return py::make_tuple(to_py(p.re.coeffs()), to_py(p.im.coeffs())); }

py::list to_py(std::span<const PlanePoint> pts) {
  py::list out;
  for (const auto& p : pts) out.append(to_py(p));
  return out;
}

std::vector<PlanePoint> to_points(const AlgebraicContext& ctx, const std::vector<PyPoint>& pts) {
  std::vector<PlanePoint> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(to_point(ctx, p));
  return out;
}

AlgebraicContext make_context(const std::vector<py::int_>& minpoly, const py::int_& b,
                              const std::pair<std::string, std::string>& iso, bool allow_right_angle) {
  IntPoly p;
  for (const auto& c : minpoly) p.push_back(to_big(c));
  ContextOptions options;
  options.allow_right_angle = allow_right_angle;
  return AlgebraicContext::create(p, to_big(b), {parse_rational(iso.first), parse_rational(iso.second)}, options);
}

py::dict report_to_py(const CountReport& r) {
  py::dict d;
  d["total"] = to_py(r.total);
  d["per_apex"] = r.per_apex;
  d["method"] = to_string(r.method);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact constructions and counters for point sets with many repeated angles";

  auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", input_error.ptr());
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  py::class_<AlgebraicContext>(m, "Context")
      .def(py::init(&make_context), py::arg("minpoly"), py::arg("b"), py::arg("iso"),
           py::arg("allow_right_angle") = false,
           "minpoly is monic with the constant term first; iso = (lo, hi) as rational strings.")
      .def_static(
          "from_json", [](const std::string& text) { return context_from_json(nlohmann::json::parse(text)); },
          py::arg("text"))
      .def("to_json", [](const AlgebraicContext& c) { return context_to_json(c).dump(); })
      .def_property_readonly("degree", &AlgebraicContext::degree)
      .def_property_readonly("minpoly", [](const AlgebraicContext& c) { return to_py(c.minpoly()); })
      .def_property_readonly("b", [](const AlgebraicContext& c) { return to_py(c.b()); })
      .def_property_readonly("iso", [](const AlgebraicContext& c) {
        return py::make_tuple(to_string(c.iso().lo), to_string(c.iso().hi));
      })
      .def_property_readonly("c1", [](const AlgebraicContext& c) { return to_py(c.c1()); })
      .def_property_readonly("c2", [](const AlgebraicContext& c) { return to_py(c.c2()); })
      .def_property_readonly("c3", [](const AlgebraicContext& c) { return to_py(c.c3()); })
      .def_property_readonly("warnings", &AlgebraicContext::warnings)
      .def(
          "sign", [](const AlgebraicContext& c, const std::vector<py::int_>& x) { return c.sign(to_element(c, x)); },
          py::arg("coeffs"))
      .def(
          "mul",
          [](const AlgebraicContext& c, const std::vector<py::int_>& x, const std::vector<py::int_>& y) {
            return to_py(c.mul(to_element(c, x), to_element(c, y)).coeffs());
          },
          py::arg("x"), py::arg("y"))
      .def(
          "to_decimal",
          [](const AlgebraicContext& c, const std::vector<py::int_>& x, int digits) {
            return c.to_decimal(to_element(c, x), digits);
          },
          py::arg("coeffs"), py::arg("digits") = 30)
      .def("__eq__", &AlgebraicContext::operator==)
      .def("__repr__", [](const AlgebraicContext& c) { return "Context(" + context_to_json(c).dump() + ")"; });

  m.def(
      "normalize_tangent",
      [](const std::vector<py::int_>& poly, const std::pair<std::string, std::string>& iso) {
        IntPoly p;
        for (const auto& c : poly) p.push_back(to_big(c));
        const auto nt = normalize_tangent(p, {parse_rational(iso.first), parse_rational(iso.second)});
        py::dict d;
        d["minpoly"] = to_py(nt.minpoly);
        d["b"] = to_py(nt.b);
        d["iso"] = py::make_tuple(to_string(nt.iso.lo), to_string(nt.iso.hi));
        return d;
      },
      py::arg("tanpoly"), py::arg("iso"), "tanpoly has the constant term first.");

  m.def(
      "gen_G", [](const AlgebraicContext& c, std::uint64_t t) { return to_py(gen_G(c, t)); }, py::arg("ctx"),
      py::arg("t"));
  m.def(
      "angle_at",
      [](const AlgebraicContext& c, const PyPoint& p, const PyPoint& q, const PyPoint& r) {
        return std::string(to_string(angle_at(c, to_point(c, p), to_point(c, q), to_point(c, r))));
      },
      py::arg("ctx"), py::arg("p"), py::arg("q"), py::arg("r"));
  m.def(
      "count_distinct_directions",
      [](const AlgebraicContext& c, const std::vector<PyPoint>& pts) {
        return count_distinct_directions(c, to_points(c, pts));
      },
      py::arg("ctx"), py::arg("points"));
  m.def(
      "expected_count", [](const AlgebraicContext& c, std::uint64_t t) { return to_py(expected_count(c, t)); },
      py::arg("ctx"), py::arg("t"));
  m.def(
      "size_for_n", [](const AlgebraicContext& c, const py::int_& n) { return size_for_n(c, to_big(n)); },
      py::arg("ctx"), py::arg("n"));
  m.def(
      "construct",
      [](const AlgebraicContext& c, std::uint64_t t, std::uint64_t triple_budget) {
        ConstructionLimits limits;
        limits.triple_budget = triple_budget;
        TripleFamily fam;
        {
          py::gil_scoped_release release;
          fam = generate(c, t, limits);
        }
        py::dict d;
        d["t"] = fam.t;
        d["points"] = to_py(fam.points);
        d["triples"] = fam.indices;
        return d;
      },
      py::arg("ctx"), py::arg("t"), py::arg("triple_budget") = ConstructionLimits{}.triple_budget,
      "Returns {'t', 'points', 'triples'} with triples as (apex, p1, p2) indices into points.");
  m.def(
      "count",
      [](const AlgebraicContext& c, const std::vector<PyPoint>& pts, const std::string& method, unsigned threads) {
        const auto points = to_points(c, pts);
        CountOptions options;
        options.threads = threads;
        if (method != "fast" && method != "brute") throw InputError("method must be 'fast' or 'brute'");
        CountReport r;
        {
          py::gil_scoped_release release;
          r = method == "fast" ? count_fast(c, points, options) : count_brute(c, points, options);
        }
        return report_to_py(r);
      },
      py::arg("ctx"), py::arg("points"), py::arg("method") = "fast", py::arg("threads") = 0);
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line in-process; returns (exit_code, stdout, stderr).");
}
