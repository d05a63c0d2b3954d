#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gsp4/bessel.hpp"
#include "gsp4/cosets.hpp"
#include "gsp4/suites.hpp"
#include "gsp4/volumes.hpp"
#include "gsp4/whittaker.hpp"
#include "gsp4/zeta.hpp"

namespace py = pybind11;
using namespace gsp4;

namespace {

CaseTag case_tag(int c) {
  if (c < 1 || c > 3) throw Error("ConfigError", "case must be 1, 2 or 3");
  return static_cast<CaseTag>(c);
}

RunConfig make_config(std::vector<long> ps, std::vector<long> ds, long lmax,
                      long mmax, int order, int workers) {
  RunConfig cfg;
  cfg.ps = std::move(ps);
  cfg.ds = std::move(ds);
  cfg.l_max = lmax;
  cfg.m_max = mmax;
  cfg.order = order;
  cfg.workers = workers;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_gsp4local, m) {
  m.doc() = "Exact local zeta-integral verification for GSp(4) x GL(2)";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<VerifyReport>(m, "VerifyReport")
      .def_readonly("check", &VerifyReport::check)
      .def_readonly("status", &VerifyReport::status)
      .def_readonly("witness", &VerifyReport::witness)
      .def_readonly("checks", &VerifyReport::checks)
      .def_readonly("params", &VerifyReport::params)
      .def_readonly("children", &VerifyReport::children)
      .def("ok", &VerifyReport::ok)
      .def("to_json", [](const VerifyReport& r) { return report_to_json(r); })
      .def("__repr__", [](const VerifyReport& r) {
        return "<VerifyReport " + r.check + ": " + r.status + ">";
      });

  m.def("verify_cosets", [](long p) { return verify_distinct_cosets(p); },
        py::arg("p"));
  m.def(
      "verify_volumes",
      [](long p, long d, long lmax, long mmax) {
        return verify_volumes(p, SParams::from_d(d), lmax, mmax);
      },
      py::arg("p"), py::arg("d"), py::arg("lmax") = 3, py::arg("mmax") = 3);
  m.def("verify_bessel",
        [](long p, long wp, long L, long M) { return certify(p, wp, L, M); },
        py::arg("p"), py::arg("wp"), py::arg("lmax") = 3, py::arg("mmax") = 3);
  m.def(
      "verify_hecke",
      [](long p, long d, long lmax, long mmax) {
        return verify_hecke_matrix_identities(p, SParams::from_d(d), lmax, mmax);
      },
      py::arg("p"), py::arg("d"), py::arg("lmax") = 3, py::arg("mmax") = 3);
  m.def(
      "verify_whittaker",
      [](int c, long p, long d, long lmax, long mmax) {
        return verify_decompositions(case_tag(c), p, SParams::from_d(d), lmax, mmax);
      },
      py::arg("case"), py::arg("p"), py::arg("d"), py::arg("lmax") = 2,
      py::arg("mmax") = 2);
  m.def(
      "verify_zeta",
      [](int c, long p, int ap, int wp, int order) {
        return verify_theorem(case_tag(c), p, ap, wp, order);
      },
      py::arg("case"), py::arg("p"), py::arg("ap") = 1, py::arg("wp") = 1,
      py::arg("order") = 40);
  m.def(
      "verify_cancellation",
      [](int c, long p, int ap, int wp, long lmax, long mmax) {
        return verify_cancellation(case_tag(c), p, ap, wp, lmax, mmax);
      },
      py::arg("case"), py::arg("p"), py::arg("ap") = 1, py::arg("wp") = 1,
      py::arg("lmax") = 6, py::arg("mmax") = 6);

  m.def("volume",
        [](long l, long m, int t, long p) { return to_string(volume(l, m, t, p)); },
        py::arg("l"), py::arg("m"), py::arg("t"), py::arg("p"));
  m.def(
      "bessel_value",
      [](long p, long wp, long l, long m, int t) {
        return to_string(closed_form_value(p, wp, l, m, t));
      },
      py::arg("p"), py::arg("wp"), py::arg("l"), py::arg("m"), py::arg("t"));
  m.def(
      "whittaker_value",
      [](int c, long p, long l, long m, int t, int ap, int wp) {
        WhittakerValue w = whittaker_value(case_tag(c), p, l, m, t, ap, wp);
        return py::make_tuple(w.texp, to_string(w.coeff), w.half_pow);
      },
      py::arg("case"), py::arg("p"), py::arg("l"), py::arg("m"), py::arg("t"),
      py::arg("ap") = 1, py::arg("wp") = 1);
  m.def(
      "sugano_coefficients",
      [](long p, int order) {
        std::vector<std::string> out;
        SymSeries s = sugano_series(p, order, 1);
        for (int k = 0; k <= order; ++k) out.push_back(to_string(s.at(k)));
        return out;
      },
      py::arg("p"), py::arg("order") = 10);

  m.def(
      "run_verify",
      [](const std::string& target, std::vector<long> ps, std::vector<long> ds,
         long lmax, long mmax, int order, int workers) {
        return run_verify(target, make_config(std::move(ps), std::move(ds),
                                              lmax, mmax, order, workers));
      },
      py::arg("target"), py::arg("ps") = std::vector<long>{3, 5},
      py::arg("ds") = std::vector<long>{4, 7}, py::arg("lmax") = 4,
      py::arg("mmax") = 4, py::arg("order") = 40, py::arg("workers") = 1);
  m.def(
      "render_table",
      [](const std::string& target, long p, long lmax, long mmax,
         const std::string& format, int c, int wp) {
        RunConfig cfg = make_config({p}, {p == 5 ? 7L : 4L}, lmax, mmax, 40, 1);
        cfg.cases = {case_tag(c)};
        cfg.wps = {wp};
        return render_table(target, cfg, format);
      },
      py::arg("target"), py::arg("p") = 3, py::arg("lmax") = 2,
      py::arg("mmax") = 2, py::arg("format") = "text", py::arg("case") = 3,
      py::arg("wp") = 1);
}
