#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fcensus/census.hpp"
#include "fcensus/formulas.hpp"
#include "fcensus/jordan_shape.hpp"
#include "fcensus/quiver.hpp"
#include "fcensus/report.hpp"
#include "fcensus/subalgebras.hpp"
#include "fcensus/verify.hpp"

namespace py = pybind11;
using namespace fcensus;

namespace {

// Arbitrary-precision counts cross the boundary as Python ints.
py::int_ to_py(const BigInt& v) { return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10))); }

py::object from_json(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Matrix to_matrix(unsigned p, unsigned e, const std::vector<std::vector<Code>>& rows) {
  const Field f = make_field(p, e);
  const std::size_t n = rows.size();
  Matrix m(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw Error(Errc::kSizeMismatch, "matrix must be square");
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i][j] >= f->q()) throw Error(Errc::kOutOfRange, "entry code outside the field");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

ClassTag tag_or_throw(const std::string& name) {
  const auto tag = parse_class_tag(name);
  if (!tag) throw Error(Errc::kOutOfRange, "unknown class tag " + name);
  return *tag;
}

}  // namespace

PYBIND11_MODULE(_fcensus, m) {
  m.doc() = "Exhaustive censuses of matrices commuting with their Frobenius twist";

  py::register_exception<Error>(m, "FcensusError", PyExc_ValueError);

  m.def(
      "census",
      [](unsigned p, unsigned e, unsigned n, bool strata, unsigned workers, std::uint64_t work_cap) {
        CensusOptions opt;
        opt.strata = strata;
        opt.workers = workers;
        opt.work_cap = work_cap;
        CensusReport r;
        {
          py::gil_scoped_release release;
          r = census(p, e, n, opt);
        }
        return from_json(report_to_json(r));
      },
      py::arg("p"), py::arg("e"), py::arg("n"), py::arg("strata") = false, py::arg("workers") = 1,
      py::arg("work_cap") = kDefaultWorkCap, "Census report as a dict; counts are decimal strings.");

  m.def(
      "census_csv",
      [](unsigned p, unsigned e, unsigned n, bool strata) {
        CensusOptions opt;
        opt.strata = strata;
        return report_to_csv(census(p, e, n, opt));
      },
      py::arg("p"), py::arg("e"), py::arg("n"), py::arg("strata") = false);

  m.def("exact_X_n2", [](unsigned p, py::int_ q) { return to_py(exact_X_n2(p, BigInt(py::str(q).cast<std::string>()))); },
        py::arg("p"), py::arg("q"));

  m.def(
      "leading_term",
      [](const std::string& tag, unsigned p, unsigned n) {
        const LeadingTerm lt = leading_term(tag_or_throw(tag), p, n);
        return py::make_tuple(to_py(lt.coefficient), lt.exponent);
      },
      py::arg("tag"), py::arg("p"), py::arg("n"), "(coefficient, exponent)");

  m.def("c_diag", [](unsigned p, unsigned n) { return to_py(c_diag(p, n)); });
  m.def("c_inf", [](unsigned p, unsigned n) { return to_py(c_inf(p, n)); });
  m.def("c_inf_diag", [](unsigned p, unsigned n) { return to_py(c_inf_diag(p, n)); });
  m.def("c_eig", [](unsigned p, unsigned n) { return to_py(c_eig(p, n)); });
  m.def("gaussian_binomial", [](unsigned n, unsigned k, unsigned p) { return to_py(gaussian_binomial(n, k, p)); });

  m.def(
      "quiver_maximizers",
      [](unsigned n) {
        const QuiverMaximizers q = maximizers(n);
        std::vector<std::vector<std::vector<unsigned>>> classes;
        for (const auto& c : q.classes) classes.push_back(c.rows());
        return py::make_tuple(q.max_dim, classes);
      },
      py::arg("n"));

  m.def(
      "optimal_shapes",
      [](unsigned n) {
        const ShapeOptimum s = optimal_shapes(n);
        std::vector<std::vector<Partition>> classes;
        for (const auto& c : s.classes) classes.push_back(c.parts());
        return py::make_tuple(s.max_dim, classes);
      },
      py::arg("n"));

  m.def(
      "commutative_subalgebra_count",
      [](unsigned p, unsigned n, unsigned d, bool unital) {
        return to_py(commutative_census(p, n, d, kDefaultSubalgebraCap, unital).count);
      },
      py::arg("p"), py::arg("n"), py::arg("d"), py::arg("unital") = true);

  m.def("diag_subalgebra_count", [](unsigned p, unsigned n) { return to_py(diag_subalgebra_census(p, n)); },
        py::arg("p"), py::arg("n"));

  m.def(
      "in_X",
      [](unsigned p, unsigned e, const std::vector<std::vector<Code>>& rows) {
        const Matrix a = to_matrix(p, e, rows);
        return commutes(a, mat_frobenius(a));
      },
      py::arg("p"), py::arg("e"), py::arg("rows"), "Entries are field codes (base-p coefficient digits).");

  m.def(
      "jordan_shape",
      [](unsigned p, unsigned e, const std::vector<std::vector<Code>>& rows) {
        return shape_of_matrix(to_matrix(p, e, rows)).parts();
      },
      py::arg("p"), py::arg("e"), py::arg("rows"));

  m.def("acceptance_check_ids", &acceptance_check_ids);
  m.def(
      "run_check",
      [](const std::string& id, std::uint64_t seed) {
        VerifyOptions opt;
        opt.seed = seed;
        VerifyOutcome o;
        {
          py::gil_scoped_release release;
          o = run_check(id, opt);
        }
        return from_json(to_json(o));
      },
      py::arg("id"), py::arg("seed") = 1);
}
