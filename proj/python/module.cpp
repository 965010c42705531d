// Python bindings for the exact lozenge-tiling statistics engine. Counts
// come back as python ints, probabilities and moments as
// fractions.Fraction, so exactness survives the language boundary.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "hexamoment/enumdp.hpp"
#include "hexamoment/qcomb.hpp"
#include "hexamoment/render.hpp"
#include "hexamoment/stats.hpp"
#include "hexamoment/verify.hpp"

namespace py = pybind11;
namespace hm = hexamoment;

namespace {

py::object to_py_int(const hm::BigInt& v) {
  return py::module_::import("builtins").attr("int")(hm::to_string(v));
}

py::object to_py_fraction(const hm::Rational& v) {
  // Fraction parses the "num/den" form directly.
  return py::module_::import("fractions").attr("Fraction")(v.str());
}

hm::BoxDims make_dims(int a, int b, int c) { return hm::BoxDims(a, b, c); }

py::dict report_to_dict(const hm::MomentReport& r) {
  py::dict out;
  out["dims"] = py::make_tuple(r.dims.a, r.dims.b, r.dims.c);
  out["horizontal"] = to_py_fraction(r.horizontal);
  out["vertical"] = to_py_fraction(r.vertical);
  out["closed_horizontal"] = to_py_fraction(r.closed_horizontal);
  out["closed_vertical"] = to_py_fraction(r.closed_vertical);
  out["row_term"] = to_py_fraction(r.row_term);
  out["cross_term"] = to_py_fraction(r.cross_term);
  out["row_term_closed"] = to_py_fraction(r.row_term_closed);
  out["cross_term_closed"] = to_py_fraction(r.cross_term_closed);
  out["consistent"] = r.consistent;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact statistics of uniformly random lozenge tilings of a hexagon";

  // translators run newest-first, so the base class goes in first
  const py::object base = py::register_exception<hm::Error>(m, "HexamomentError", PyExc_RuntimeError);
  py::register_exception<hm::TooLargeError>(m, "TooLargeError", base.ptr());

  m.def(
      "count",
      [](int a, int b, int c) { return to_py_int(hm::count_box(make_dims(a, b, c))); },
      py::arg("a"), py::arg("b"), py::arg("c"),
      "Exact number of plane partitions in the a*b*c box.");

  m.def(
      "macmahon_count",
      [](int a, int b, int c) { return to_py_int(hm::macmahon_count(make_dims(a, b, c))); },
      py::arg("a"), py::arg("b"), py::arg("c"),
      "The classical product formula; independent of the DP count.");

  m.def(
      "enumerate_box",
      [](int a, int b, int c, std::int64_t limit, bool force) {
        std::vector<std::vector<std::vector<int>>> out;
        hm::for_each_plane_partition(
            make_dims(a, b, c),
            [&](const hm::PlanePartition& pp) { out.push_back(pp.matrix()); }, limit, force);
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("c"),
      py::arg("limit") = hm::kDefaultEnumerationLimit, py::arg("force") = false,
      "Every plane partition of the box, row-major lexicographic.");

  m.def(
      "expected_entries",
      [](int a, int b, int c) {
        py::list rows;
        for (const auto& row : hm::expected_entries(make_dims(a, b, c))) {
          py::list r;
          for (const hm::Rational& v : row) r.append(to_py_fraction(v));
          rows.append(r);
        }
        return rows;
      },
      py::arg("a"), py::arg("b"), py::arg("c"), "Expected entry per cell, as Fractions.");

  m.def(
      "prob_table",
      [](int a, int b, int c) {
        const hm::BoxDims d = make_dims(a, b, c);
        const hm::ProbTable table(d);
        py::list out;
        for (int x = 1; x <= d.a + d.b - 1; ++x)
          for (int y = 0; y <= d.a + d.c - 1; ++y)
            out.append(py::make_tuple(x, y, to_py_fraction(table.p(x, y))));
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("c"),
      "List of (x, y, probability) over the whole index rectangle.");

  m.def(
      "row_sum",
      [](int a, int b, int c, int y0) {
        return to_py_fraction(hm::row_sum(hm::ProbTable(make_dims(a, b, c)), y0));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("y0"));

  m.def(
      "column_sum",
      [](int a, int b, int c, int x0) {
        return to_py_fraction(hm::column_sum(hm::ProbTable(make_dims(a, b, c)), x0));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("x0"));

  m.def(
      "moments",
      [](int a, int b, int c) { return report_to_dict(hm::verify_moments(make_dims(a, b, c))); },
      py::arg("a"), py::arg("b"), py::arg("c"),
      "Moment report: computed and closed-form values plus the split terms.");

  m.def(
      "sample",
      [](int a, int b, int c, std::uint64_t seed, int count) {
        const hm::DpTables dp(make_dims(a, b, c));
        std::vector<std::vector<std::vector<int>>> out;
        for (int i = 0; i < count; ++i) {
          hm::SplitMix64 rng = hm::split_stream(seed, static_cast<std::uint64_t>(i));
          out.push_back(hm::sample_uniform(dp, rng).matrix());
        }
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("seed") = 0, py::arg("count") = 1,
      "Exactly uniform draws; a fixed (seed, index) always yields the same draw.");

  m.def(
      "render_ascii",
      [](int a, int b, int c, const std::vector<std::vector<int>>& entries) {
        return hm::render_ascii(hm::validate(entries, make_dims(a, b, c)));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("entries"));

  m.def(
      "render_svg",
      [](int a, int b, int c, const std::vector<std::vector<int>>& entries) {
        return hm::render_svg(hm::validate(entries, make_dims(a, b, c)));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("entries"));

  m.def(
      "hook_content_gf",
      [](const std::vector<int>& shape, int max_entry) {
        const hm::QPolynomial gf = hm::hook_content_gf(hm::Shape(shape), max_entry);
        py::list coeffs;
        for (const hm::BigInt& v : gf.coeffs()) coeffs.append(to_py_int(v));
        return coeffs;
      },
      py::arg("shape"), py::arg("max_entry"),
      "Coefficient list of the tableau generating function sum q^norm.");

  m.def(
      "ssyt_count",
      [](const std::vector<int>& shape, int max_entry) {
        return to_py_int(hm::hook_content_gf(hm::Shape(shape), max_entry).eval_at_one());
      },
      py::arg("shape"), py::arg("max_entry"));

  m.def(
      "mean_norm_ssyt",
      [](const std::vector<int>& shape, int max_entry) {
        return to_py_fraction(hm::mean_norm_ssyt(hm::Shape(shape), max_entry));
      },
      py::arg("shape"), py::arg("max_entry"));

  m.def(
      "staircase_stats",
      [](int a, int n, int c, const std::vector<int>& boundary, std::int64_t limit) {
        const hm::StaircaseFamilyStats s = hm::staircase_family_stats(a, n, c, boundary, limit);
        return py::make_tuple(to_py_int(s.count), to_py_int(s.interior_sum));
      },
      py::arg("a"), py::arg("n"), py::arg("c"), py::arg("boundary"),
      py::arg("limit") = hm::kDefaultEnumerationLimit,
      "(count, interior norm sum) over the staircase family.");

  m.def(
      "staircase_mean_norm",
      [](int a, int n, int c, const std::vector<int>& boundary) {
        return to_py_fraction(hm::staircase_mean_norm(a, n, c, boundary));
      },
      py::arg("a"), py::arg("n"), py::arg("c"), py::arg("boundary"));

  m.def(
      "verify",
      [](int a, int b, int c) {
        py::list out;
        for (const hm::CheckResult& r : hm::verify_box(make_dims(a, b, c))) {
          py::dict item;
          item["name"] = r.name;
          item["scope"] = r.scope;
          item["pass"] = r.pass;
          item["detail"] = r.detail;
          out.append(item);
        }
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("c"), "Per-box invariant checks, one dict per check.");
}
