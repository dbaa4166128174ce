#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "stcalc/cli.hpp"
#include "stcalc/verify.hpp"

namespace py = pybind11;
using namespace stcalc;

namespace {

ContextPtr context(const std::string& s, const std::string& t) {
  RatFunc sv = cli::parse_param(s, Var::s), tv = cli::parse_param(t, Var::t);
  if (sv == RatFunc::var(Var::s) && tv == RatFunc::var(Var::t)) return STContext::symbolic();
  return STContext::custom(sv, tv);
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::vector<std::string> argv = {"st-calc"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = cli::run(argv, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

std::string verify_json(int order, std::uint64_t seed, const std::string& filter, unsigned threads) {
  verify::RunOptions o;
  o.order = order;
  o.seed = seed;
  o.filter = filter;
  o.threads = threads;
  py::gil_scoped_release release;
  return verify::to_json_string(verify::run_all(o));
}

}  // namespace

PYBIND11_MODULE(_stcalc, m) {
  m.doc() = "Exact (s,t)-deformed calculus";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<cli::UsageError>(m, "UsageError", PyExc_ValueError);

  m.def(
      "fib", [](long n, const std::string& s, const std::string& t) { return context(s, t)->fib(n).to_string(); },
      py::arg("n"), py::arg("s") = "symbolic", py::arg("t") = "symbolic");
  m.def(
      "binom",
      [](long alpha, long k, const std::string& s, const std::string& t) {
        return context(s, t)->binom(alpha, k).to_string();
      },
      py::arg("alpha"), py::arg("k"), py::arg("s") = "symbolic", py::arg("t") = "symbolic");
  m.def(
      "polytopic",
      [](long n, long d, const std::string& s, const std::string& t) {
        return stcalc::polytopic(*context(s, t), n, d).to_string();
      },
      py::arg("n"), py::arg("d"), py::arg("s") = "symbolic", py::arg("t") = "symbolic");
  m.def("case_ids", [] {
    std::vector<std::string> ids;
    for (const auto& c : verify::registry()) ids.push_back(c.id);
    return ids;
  });
  m.def("run_cli", &run_cli, py::arg("args"), "Run st-calc; returns (exit code, stdout, stderr).");
  m.def("verify_json", &verify_json, py::arg("order") = 8, py::arg("seed") = 42, py::arg("filter") = "",
        py::arg("threads") = 0);
}
