#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mmalign/dsl.hpp"
#include "mmalign/engine.hpp"
#include "mmalign/errors.hpp"
#include "mmalign/formulas.hpp"
#include "mmalign/genfunc.hpp"
#include "mmalign/report.hpp"

namespace py = pybind11;
using namespace mmalign;

namespace {

// exact counts cross as Python ints via their decimal form
py::int_ to_py(const Count& c) { return py::int_(py::str(to_decimal(c))); }

StepSet steps_for(const std::string& text, const std::vector<unsigned>& lengths) {
  return parse_step_set(text, lengths.size());
}

py::list matrix_rows(const AlignmentMatrix& m) {
  py::list rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    py::list row;
    for (std::size_t c = 0; c < m.cols(); ++c) row.append(m.at(r, c));
    rows.append(row);
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_mmalign, m) {
  m.doc() = "Counting, enumeration and sampling of alignments over a step set";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<EnumerationCapExceeded>(m, "EnumerationCapExceeded", base.ptr());

  m.def(
      "parse_steps", [](const std::string& text) { return parse_step_set(text).to_string(); }, py::arg("steps"),
      "Canonical form of a step-set expression.");

  m.def(
      "count",
      [](const std::string& steps, const std::vector<unsigned>& lengths) {
        return to_py(count(steps_for(steps, lengths), LengthTuple(lengths)));
      },
      py::arg("steps"), py::arg("lengths"));

  m.def(
      "count_with_parts",
      [](const std::string& steps, const std::vector<unsigned>& lengths, unsigned k) {
        return to_py(count_with_parts(steps_for(steps, lengths), LengthTuple(lengths), k));
      },
      py::arg("steps"), py::arg("lengths"), py::arg("k"));

  m.def(
      "count_multinomial",
      [](const std::string& steps, const std::vector<unsigned>& lengths) {
        return to_py(count_multinomial(steps_for(steps, lengths), LengthTuple(lengths)));
      },
      py::arg("steps"), py::arg("lengths"));

  m.def(
      "enumerate",
      [](const std::string& steps, const std::vector<unsigned>& lengths, unsigned long cap) {
        py::list out;
        for (const auto& a : enumerate(steps_for(steps, lengths), LengthTuple(lengths), cap)) out.append(matrix_rows(a));
        return out;
      },
      py::arg("steps"), py::arg("lengths"), py::arg("cap") = kDefaultEnumerationCap,
      "Every alignment as a list of rows, in lexicographic column order.");

  m.def(
      "sample",
      [](const std::string& steps, const std::vector<unsigned>& lengths, std::uint64_t seed, unsigned n) {
        Sampler sampler(steps_for(steps, lengths), LengthTuple(lengths), seed);
        py::list out;
        for (unsigned i = 0; i < n; ++i) out.append(matrix_rows(sampler.next()));
        return out;
      },
      py::arg("steps"), py::arg("lengths"), py::arg("seed") = 0, py::arg("n") = 1);

  m.def(
      "series_coefficients",
      [](const std::string& steps, const std::vector<unsigned>& box) {
        const auto series = series_coefficients(steps_for(steps, box), LengthTuple(box));
        py::dict out;
        for (std::size_t f = 0; f < series.index().size(); ++f) {
          out[py::tuple(py::cast(series.index().unflatten(f)))] = to_py(series.coeff_flat(f));
        }
        return out;
      },
      py::arg("steps"), py::arg("box"), "Coefficients of 1/(1 - P(z)) over the box, keyed by multi-index.");

  m.def("formulas", [] {
    py::list out;
    for (const auto& f : formula_catalog()) {
      py::dict d;
      d["id"] = std::string(f.name);
      d["step_set"] = std::string(f.step_set);
      d["min_dimension"] = f.min_dimension;
      d["max_dimension"] = f.max_dimension;
      d["diagonal_only"] = f.diagonal_only;
      d["exact"] = f.exact;
      d["label"] = std::string(f.label);
      out.append(d);
    }
    return out;
  });

  m.def(
      "formula",
      [](const std::string& id, const std::vector<unsigned>& lengths) {
        return to_py(evaluate_exact(formula_from_name(id), LengthTuple(lengths)));
      },
      py::arg("id"), py::arg("lengths"));

  m.def(
      "approx",
      [](const std::string& id, const std::vector<unsigned>& lengths, unsigned bound_m) {
        return evaluate_approx(formula_from_name(id), LengthTuple(lengths), bound_m).value;
      },
      py::arg("id"), py::arg("lengths") = std::vector<unsigned>{}, py::arg("M") = 0);

  m.def(
      "table4",
      [](unsigned max) {
        py::list out;
        for (const auto& row : table4_report(max).rows) {
          out.append(py::make_tuple(std::get<long long>(row[0].value), to_py(std::get<Count>(row[1].value)),
                                    to_py(std::get<Count>(row[2].value))));
        }
        return out;
      },
      py::arg("max") = 10);

  m.def(
      "table5",
      [](unsigned max) {
        py::list out;
        for (const auto& row : table5_report(max).rows) {
          out.append(py::make_tuple(std::get<long long>(row[0].value), to_py(std::get<Count>(row[1].value)),
                                    std::get<double>(row[2].value), std::get<double>(row[3].value)));
        }
        return out;
      },
      py::arg("max") = 20, "Rows (l, exact, approx, |exact - approx| / approx).");

  m.def(
      "verify", [](unsigned max, std::size_t dims) { return verify_catalog(max, dims).passed; }, py::arg("max") = 8,
      py::arg("dims") = 3);
}
