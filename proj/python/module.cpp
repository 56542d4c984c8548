#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qhopf/confluence.hpp"
#include "qhopf/error.hpp"
#include "qhopf/parser.hpp"
#include "qhopf/tensor.hpp"
#include "qhopf/verify.hpp"

namespace py = pybind11;
using namespace qhopf;

namespace {

Variant variant_of(const std::string& v) {
  if (v == "standard") return Variant::Standard;
  if (v == "hat") return Variant::Hat;
  throw py::value_error("variant must be 'standard' or 'hat'");
}

AlgebraConfig config_of(const std::string& variant, int n) {
  AlgebraConfig c;
  c.variant = variant_of(variant);
  if (n > 0) {
    c.level = Level::Braided;
    c.copies = n;
  }
  return c;
}

std::string nf(const std::string& expr, const std::string& variant, int n) {
  auto e = cli::parse(expr);
  return cli::evaluate(*e, cli::algebra_for(*e, config_of(variant, n))).str();
}

std::string eval(const std::string& expr, const std::string& q, const std::optional<std::string>& u,
                 const std::optional<std::string>& p, const std::string& variant) {
  auto e = cli::parse(expr);
  auto v = cli::evaluate(*e, cli::algebra_for(*e, config_of(variant, 0)));
  std::optional<mpq_class> uv, pv;
  if (u) uv = cli::parse_rational(*u);
  if (p) pv = cli::parse_rational(*p);
  return cli::eval_rational(v, cli::parse_rational(q), uv, pv).get_str();
}

std::string verify_json(const std::vector<std::string>& suites, const std::string& variant, int n,
                        const std::optional<std::string>& q_numeric, int jobs, bool timing) {
  VerifyOptions o;
  o.suites = suites;
  o.suite.base.variant = variant_of(variant);
  o.suite.n = n;
  if (q_numeric) o.q_numeric = cli::parse_rational(*q_numeric);
  o.jobs = jobs;
  o.timing = timing;
  VerifyResult r;
  {
    py::gil_scoped_release release;
    r = verify(o);
  }
  return r.json.dump();
}

py::dict confluence(const std::string& level, int n, const std::string& variant, int max_len) {
  AlgebraConfig c = config_of(variant, 0);
  if (level == "core") c.level = Level::Core;
  else if (level == "localized") c.level = Level::Localized;
  else if (level == "braided") {
    c.level = Level::Braided;
    c.copies = n;
  } else {
    throw py::value_error("level must be core, localized or braided");
  }
  ConfluenceReport rep;
  {
    py::gil_scoped_release release;
    rep = check_confluence(Algebra::create(c), max_len);
  }
  py::dict d;
  d["ok"] = rep.ok();
  d["words_checked"] = rep.words_checked;
  d["failures"] = rep.failures;
  return d;
}

}  // namespace

PYBIND11_MODULE(_qhopf, m) {
  m.doc() = "exact verification engine for q-deformed quaternions and su(2) instantons";

  static py::exception<Error> error(m, "QhopfError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def("nf", &nf, py::arg("expr"), py::arg("variant") = "standard", py::arg("n") = 0,
        "Canonical normal form of an expression (matrices print as JSON).");
  m.def("eval_rational", &eval, py::arg("expr"), py::arg("q"), py::arg("u") = py::none(), py::arg("p") = py::none(),
        py::arg("variant") = "standard", "Exact value as a string P/R.");
  m.def("verify_json", &verify_json, py::arg("suites"), py::arg("variant") = "standard", py::arg("n") = 2,
        py::arg("q_numeric") = py::none(), py::arg("jobs") = 1, py::arg("timing") = false);
  m.def("suites", [] {
    std::vector<std::pair<std::string, std::string>> r;
    for (const auto& s : suite_list()) r.emplace_back(s.name, s.summary);
    return r;
  });
  m.def("confluence", &confluence, py::arg("level") = "localized", py::arg("n") = 2, py::arg("variant") = "standard",
        py::arg("max_len") = 3);
  m.def("resolve_k", [] {
    auto k = tensors::resolve_k();
    return py::make_tuple(k.k.str(), k.unique);
  });
}
