#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mwcomb/cli.hpp"
#include "mwcomb/complex.hpp"
#include "mwcomb/core.hpp"
#include "mwcomb/resolve.hpp"
#include "mwcomb/signs.hpp"

namespace py = pybind11;
using namespace mwcomb;

namespace {

DominationRule rule_of(const std::string& r) {
  if (r == "minimal") return DominationRule::MinimalShift;
  if (r == "plus10") return DominationRule::ShiftPlusTen;
  throw ValidationError("unknown domination rule '" + r + "'");
}

std::string blocks_json(const Parameter& psi) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& bl : psi.blocks) arr.push_back({{"id", bl.id}, {"rho", bl.rho}, {"a", bl.a}, {"b", bl.b}});
  return arr.dump();
}

}  // namespace

PYBIND11_MODULE(_mwcomb, m) {
  m.doc() = "Jordan-block parameters, ladders, resolutions and signs";
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<IdentityFailure>(m, "IdentityFailure", PyExc_ArithmeticError);

  m.def("parse_parameter", [](const std::string& text) { return blocks_json(parse_parameter_file(text)); },
        "Block list of a parameter file, as JSON.");
  m.def("render_parameter", [](const std::string& text) { return render_parameter(parse_parameter_file(text)); });
  m.def("signs_json", [](const std::string& text) { return signs_table(parse_parameter_file(text)).to_json().dump(); });
  m.def("resolve_json", [](const std::string& text, const std::string& rule) {
    return resolve_general(parse_parameter_file(text), rule_of(rule)).to_json().dump();
  }, py::arg("text"), py::arg("rule") = "minimal");
  m.def("dominate_json", [](const std::string& text, const std::string& rule) {
    Domination d = dominate(parse_parameter_file(text), rule_of(rule));
    nlohmann::ordered_json j;
    j["psi_tilde"] = nlohmann::ordered_json::parse(blocks_json(d.psi_tilde));
    auto e = nlohmann::ordered_json::array();
    for (const auto& p : d.E) e.push_back({{"rho", p.rho}, {"x", p.x.str()}});
    j["E"] = e;
    return j.dump();
  }, py::arg("text"), py::arg("rule") = "minimal");
  m.def("dual", [](const std::string& ms) { return mw_dual(Multisegment::parse(ms)).str(); });
  m.def("beta_sign", [](const std::string& text, const std::string& rho, int d) {
    return beta_sign(parse_parameter_file(text), rho, d);
  });
  m.def("j_psi", [](const std::string& text, const std::string& rho, int d) {
    JValue v = j_psi(parse_parameter_file(text), rho, d);
    return py::make_tuple(v.j0, v.j);
  });
  m.def("check_nilpotent", &check_nilpotent);
  m.def("check_theta_sign", &check_theta_sign);
  m.def("subset_complex_homology", &subset_complex_homology, py::arg("delta"), py::arg("dm"), py::arg("dpm"));
  m.def("run_cli", [](const std::vector<std::string>& args) {
    CliResult r = run(args);
    return py::make_tuple(r.code, r.out, r.err);
  });
}
