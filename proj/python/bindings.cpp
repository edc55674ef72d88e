#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hypsys/diagram.hpp"
#include "hypsys/errors.hpp"
#include "hypsys/families.hpp"
#include "hypsys/io.hpp"
#include "hypsys/matrix.hpp"
#include "hypsys/search.hpp"
#include "hypsys/verify.hpp"
#include "hypsys/zrl.hpp"

namespace py = pybind11;
using namespace hypsys;

namespace {

py::list coefficients(const IntPolynomial& p) {
  py::list out;
  for (const auto& c : p.coefficients()) out.append(py::int_(py::str(c.get_str())));
  return out;
}

IntPolynomial from_coefficients(const std::vector<py::int_>& c) {
  std::vector<mpz_class> v;
  for (const auto& x : c) v.emplace_back(py::str(x).cast<std::string>());
  return IntPolynomial(std::move(v));
}

py::dict entry_dict(const SpectrumEntry& e) {
  py::dict d;
  d["coefficients"] = coefficients(e.polynomial);
  d["root"] = e.root.decimal(14);
  d["k"] = e.k;
  d["word"] = format_word(e.word);
  return d;
}

SearchConfig make_config(int n, const std::string& bound, int threads, int max_depth, double time_budget) {
  SearchConfig c;
  c.n = n;
  c.bound = mpq_class(bound);
  c.bound.canonicalize();
  c.threads = threads;
  c.max_depth = max_depth;
  c.time_budget = time_budget;
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hyperelliptic Rauzy diagrams, path matrices and dilatation spectra";

  static py::exception<Error> exc(m, "HypsysError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = py::reinterpret_borrow<py::object>(exc.ptr())(e.what());
      err.attr("kind") = static_cast<int>(e.kind());
      PyErr_SetObject(exc.ptr(), err.ptr());
    }
  });

  m.def("diagram_size", [](int n) { return RauzyDiagram::build(n).size(); }, py::arg("n"));
  m.def("central_loop_vertex", [](int n, int k) { return central_loop_vertex(n, k).to_string(); }, py::arg("n"),
        py::arg("k"));
  m.def(
      "path_matrix",
      [](int n, int k, const std::string& word) {
        const IntMatrix v = path_matrix(RauzyPath::build(central_loop_vertex(n, k), parse_word(word)));
        std::vector<std::vector<long>> rows(v.size(), std::vector<long>(v.size()));
        for (int i = 0; i < v.size(); ++i)
          for (int j = 0; j < v.size(); ++j) rows[i][j] = v.at(i, j).get_si();
        return rows;
      },
      py::arg("n"), py::arg("k"), py::arg("word"), "Path matrix of the word read from π_n.t^k.");
  m.def(
      "charpoly",
      [](int n, int k, const std::string& word) {
        return coefficients(charpoly_exact(path_matrix(RauzyPath::build(central_loop_vertex(n, k), parse_word(word)))));
      },
      py::arg("n"), py::arg("k"), py::arg("word"), "Ascending coefficients of det(X·I - V).");
  m.def("perron_root", [](const std::vector<py::int_>& c, int digits) {
    return perron_root(from_coefficients(c)).decimal(digits);
  }, py::arg("coefficients"), py::arg("digits") = 14);
  m.def("compare_roots", [](const std::vector<py::int_>& a, const std::vector<py::int_>& b) {
    const Ordering o = compare_roots(perron_root(from_coefficients(a)), perron_root(from_coefficients(b)));
    return o == Ordering::Less ? -1 : o == Ordering::Equal ? 0 : 1;
  }, "Sign of the difference of the two Perron roots.");

  m.def("family_P_nk", [](int n, int k) { return coefficients(family_P_nk(n, k)); });
  m.def("family_P_nKl_even", [](int n, int l) { return coefficients(family_P_nKl_even(n, l)); });
  m.def("family_P_nKl_odd", [](int n, int l) { return coefficients(family_P_nKl_odd(n, l)); });
  m.def("systole_polynomial", [](int n) { return coefficients(systole_polynomial(n)); });
  m.def("second_polynomial", [](int n) { return coefficients(second_polynomial(n)); });

  m.def(
      "spectrum_json",
      [](int n, const std::string& bound, int threads, int max_depth, double time_budget) {
        SpectrumResult r;
        {
          py::gil_scoped_release release;
          r = spectrum(make_config(n, bound, threads, max_depth, time_budget));
        }
        return py::make_tuple(spectrum_json(r), r.stats.complete());
      },
      py::arg("n"), py::arg("bound") = "2", py::arg("threads") = 1, py::arg("max_depth") = 0,
      py::arg("time_budget") = 0.0);
  m.def(
      "systole",
      [](int n) {
        SystoleResult s;
        {
          py::gil_scoped_release release;
          s = systole(n);
        }
        py::dict d = entry_dict(s.entry);
        d["complete"] = s.stats.complete();
        return d;
      },
      py::arg("n"));
  m.def(
      "second_length",
      [](int n) {
        SystoleResult s;
        {
          py::gil_scoped_release release;
          s = second_length(n);
        }
        py::dict d = entry_dict(s.entry);
        d["complete"] = s.stats.complete();
        return d;
      },
      py::arg("n"));
  m.def(
      "census",
      [](int g_min, int g_max, double time_budget) {
        SearchConfig base;
        base.time_budget = time_budget;
        std::vector<CensusRow> rows;
        {
          py::gil_scoped_release release;
          rows = census_table(g_min, g_max, base);
        }
        py::list out;
        for (const auto& r : rows) {
          py::dict d;
          d["genus"] = r.genus;
          d["n"] = r.n;
          d["count"] = r.count;
          d["complete"] = r.complete;
          out.append(d);
        }
        return out;
      },
      py::arg("g_min"), py::arg("g_max"), py::arg("time_budget") = 0.0);

  m.def(
      "verify",
      [](const std::string& suite, int n_max, int samples, std::uint64_t seed) {
        VerifyReport r;
        if (suite == "lemmas")
          r = verify_inequalities(n_max);
        else if (suite == "families")
          r = verify_families(n_max);
        else if (suite == "rome")
          r = verify_rome(n_max);
        else if (suite == "zrl")
          r = verify_zrl(ZrlSuiteOptions{samples, seed});
        else
          throw Error(ErrorKind::Parse, "unknown suite " + suite);
        py::list failed;
        for (const auto& c : r.checks)
          if (!c.pass) failed.append(py::make_tuple(c.group, c.instance, c.detail));
        py::dict d;
        d["checks"] = r.checks.size();
        d["failed"] = failed;
        return d;
      },
      py::arg("suite"), py::arg("n_max") = 30, py::arg("samples") = 100, py::arg("seed") = 1);

  m.def(
      "zrl_normalize",
      [](int n, int k, const std::string& word) {
        const RauzyDiagram d = RauzyDiagram::build(n);
        const ZrlResult r = zrl_normalize(d, AdmissiblePath{central_loop_vertex(n, k), parse_word(word)});
        py::dict out;
        out["start"] = r.path.start.to_string();
        out["word"] = format_word(r.path.word);
        out["iterations"] = r.iterations;
        return out;
      },
      py::arg("n"), py::arg("k"), py::arg("word"));
}
