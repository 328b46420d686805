#include "mwcomb/cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mwcomb/complex.hpp"
#include "mwcomb/core.hpp"
#include "mwcomb/resolve.hpp"
#include "mwcomb/signs.hpp"

namespace mwcomb {

namespace {

using ojson = nlohmann::ordered_json;

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw ValidationError("malformed integer for " + what + ": '" + s + "'");
  }
  if (used != s.size()) throw ValidationError("malformed integer for " + what + ": '" + s + "'");
  return v;
}

int parse_sign(const std::string& s, const std::string& what) {
  if (s == "+1" || s == "1" || s == "+") return 1;
  if (s == "-1" || s == "-") return -1;
  throw ValidationError(what + " must be +1 or -1, got '" + s + "'");
}

}  // namespace

Parameter parse_parameter_file(const std::string& text) {
  Parameter psi;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    try {
      if (tok[0] == "cuspidal") {
        if (tok.size() < 2) throw ValidationError("cuspidal needs a name");
        CuspidalLabel l;
        l.name = tok[1];
        for (std::size_t i = 2; i < tok.size(); ++i) {
          auto eq = tok[i].find('=');
          if (eq == std::string::npos) throw ValidationError("expected key=value, got '" + tok[i] + "'");
          std::string k = tok[i].substr(0, eq), v = tok[i].substr(eq + 1);
          if (k == "d") {
            l.d = parse_int(v, "d");
          } else if (k == "eta") {
            if (v == "?")
              l.eta.reset();
            else
              l.eta = parse_sign(v, "eta");
          } else if (k == "chi") {
            l.chi = parse_sign(v, "chi");
          } else {
            throw ValidationError("unknown cuspidal attribute '" + k + "'");
          }
        }
        psi.add_label(l);
      } else if (tok[0] == "block") {
        if (tok.size() < 4 || tok.size() > 5) throw ValidationError("block needs: block <name> <a> <b> [x<mult>]");
        int a = parse_int(tok[2], "a"), b = parse_int(tok[3], "b");
        int mult = 1;
        if (tok.size() == 5) {
          if (tok[4].size() < 2 || tok[4][0] != 'x') throw ValidationError("multiplicity must look like x<int>, got '" + tok[4] + "'");
          mult = parse_int(tok[4].substr(1), "multiplicity");
          if (mult < 1) throw ValidationError("multiplicity must be >= 1");
        }
        if (!psi.labels.count(tok[1])) throw ValidationError("unknown cuspidal label '" + tok[1] + "' (declare it before its blocks)");
        for (int k = 0; k < mult; ++k) psi.add_block(tok[1], a, b);
      } else {
        throw ValidationError("unknown declaration '" + tok[0] + "'");
      }
    } catch (const ValidationError& e) {
      throw ValidationError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return psi;
}

Parameter load_parameter_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open parameter file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_parameter_file(ss.str());
}

std::string render_parameter(const Parameter& psi) {
  std::string out;
  for (const auto& [name, l] : psi.labels) {
    out += "cuspidal " + name + " d=" + std::to_string(l.d) + " eta=" +
           (l.eta ? (*l.eta > 0 ? "+1" : "-1") : "?") + " chi=" + (l.chi > 0 ? "+1" : "-1") + "\n";
  }
  for (const auto& bl : psi.blocks)
    out += "block " + bl.rho + " " + std::to_string(bl.a) + " " + std::to_string(bl.b) + "\n";
  return out;
}

namespace {

std::string yn(bool b) { return b ? "yes" : "no"; }

DominationRule parse_rule(const std::string& r) {
  if (r == "minimal") return DominationRule::MinimalShift;
  if (r == "plus10") return DominationRule::ShiftPlusTen;
  throw ValidationError("unknown domination rule '" + r + "' (minimal|plus10)");
}

std::string quad_list(const Parameter& psi) {
  std::string s;
  for (const auto& bl : psi.blocks) {
    if (!s.empty()) s += " ";
    s += to_quad(bl).str();
  }
  return s;
}

std::string block_list(const Parameter& psi) {
  std::string s;
  for (const auto& bl : psi.blocks) {
    if (!s.empty()) s += " ";
    s += "(" + bl.rho + "," + std::to_string(bl.a) + "," + std::to_string(bl.b) + ")";
  }
  return s;
}

std::string E_str(const std::vector<PeelPoint>& E) {
  std::string s = "(";
  for (std::size_t i = 0; i < E.size(); ++i) {
    if (i) s += ", ";
    s += E[i].rho + ":" + E[i].x.str();
  }
  return s + ")";
}

ojson blocks_json(const Parameter& psi) {
  auto arr = ojson::array();
  for (const auto& bl : psi.blocks) {
    Quad q = to_quad(bl);
    arr.push_back({{"id", bl.id}, {"rho", bl.rho}, {"a", bl.a}, {"b", bl.b},
                   {"quad", {{"A", q.A.str()}, {"B", q.B.str()}, {"zeta", q.zeta}}}});
  }
  return arr;
}

std::string cmd_classify(const Parameter& psi, bool json) {
  std::optional<bool> in_h;
  bool eta_known = true;
  for (const auto& bl : psi.blocks)
    if (!psi.label(bl.rho).eta) eta_known = false;
  if (eta_known) in_h = in_Psi_H(psi, psi.n());
  Parameter diag = diag_restriction(psi);
  if (json) {
    ojson j;
    j["n"] = psi.n();
    j["blocks"] = blocks_json(psi);
    j["elementary"] = is_elementary(psi);
    j["discrete"] = is_discrete(psi);
    j["discrete_diagonal"] = is_discrete_diagonal(psi);
    if (in_h)
      j["in_Psi_H"] = *in_h;
    else
      j["in_Psi_H"] = nullptr;
    j["diag_restriction"] = block_list(diag);
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "n = " << psi.n() << "\n";
  os << "blocks: " << block_list(psi) << "\n";
  os << "quads: " << quad_list(psi) << "\n";
  os << "elementary: " << yn(is_elementary(psi)) << "\n";
  os << "discrete: " << yn(is_discrete(psi)) << "\n";
  os << "discrete diagonal: " << yn(is_discrete_diagonal(psi)) << "\n";
  os << "in Psi_H: " << (in_h ? yn(*in_h) : std::string("unknown (parity unknown)")) << "\n";
  os << "diagonal restriction: " << block_list(diag) << "\n";
  return os.str();
}

std::string cmd_dominate(const Parameter& psi, DominationRule rule, bool json) {
  Domination d = dominate(psi, rule);
  if (json) {
    ojson j;
    j["psi_tilde"] = blocks_json(d.psi_tilde);
    auto e = ojson::array();
    for (const auto& p : d.E) e.push_back({{"rho", p.rho}, {"x", p.x.str()}});
    j["E"] = e;
    return j.dump(2) + "\n";
  }
  return "psi_tilde = " + block_list(d.psi_tilde) + "\nquads = " + quad_list(d.psi_tilde) + "\nE = " + E_str(d.E) + "\n";
}

std::string cmd_resolve(const Parameter& psi, DominationRule rule, bool json) {
  Resolution r = resolve_general(psi, rule);
  if (json) return r.to_json().dump(2) + "\n";
  std::ostringstream os;
  os << "n = " << psi.n() << "\n";
  os << "psi_tilde = " << quad_list(r.psi_tilde) << "\n";
  os << "E = " << E_str(r.E) << "\n";
  os << "terms = " << r.expr.size() << "\n";
  for (const auto& [w, c] : r.expr.terms()) os << (c > 0 ? "+" : "") << c << "  " << word_str(w) << "\n";
  os << "trace:\n";
  for (const auto& s : r.trace)
    os << std::string(2 * s.depth + 2, ' ') << s.which << " " << s.block << (s.rest.empty() ? "" : " | rest " + s.rest) << "\n";
  return os.str();
}

std::string cmd_complex(int n, bool json, bool& ok) {
  if (n < 2) throw ValidationError("--n must be >= 2");
  if (n > 12) throw ValidationError("--n must be <= 12");
  struct Line {
    std::string suite;
    int size;
    bool pass;
  };
  std::vector<Line> lines;
  for (int k = 3; k <= n; ++k) lines.push_back({"nilpotent", k, check_nilpotent(k)});
  for (int k = 2; k <= n; ++k) lines.push_back({"theta-sign", k, check_theta_sign(k)});
  std::set<int> Delta;
  for (int k = 1; k < n; ++k) Delta.insert(k);
  std::vector<int> elems(Delta.begin(), Delta.end());
  int m = static_cast<int>(elems.size());
  int cases = 0, good = 0;
  for (unsigned pm = 0; pm < (1u << m); ++pm)
    for (unsigned dm = pm;; dm = (dm - 1) & pm) {
      std::set<int> Dm, Dpm;
      for (int i = 0; i < m; ++i) {
        if (pm & (1u << i)) Dpm.insert(elems[i]);
        if (dm & (1u << i)) Dm.insert(elems[i]);
      }
      ++cases;
      if (subset_complex_homology(Delta, Dm, Dpm) == expected_homology(Delta, Dm, Dpm)) ++good;
      if (dm == 0) break;
    }
  lines.push_back({"subset-complex", n, good == cases});
  ok = true;
  for (const auto& l : lines) ok = ok && l.pass;
  if (json) {
    auto arr = ojson::array();
    for (const auto& l : lines) arr.push_back({{"suite", l.suite}, {"n", l.size}, {"pass", l.pass}});
    ojson j;
    j["checks"] = arr;
    j["subset_complex_cases"] = cases;
    j["all_pass"] = ok;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto& l : lines) os << (l.pass ? "PASS" : "FAIL") << "  " << l.suite << " n=" << l.size << "\n";
  os << "subset-complex cases: " << good << "/" << cases << "\n";
  return os.str();
}

}  // namespace

CliResult run(const std::vector<std::string>& args) {
  CliResult res;
  std::ostringstream out, err;
  CLI::App app{"Combinatorics of Jordan-block parameters, ladders and their signs", "mwcomb"};
  app.require_subcommand(1);

  bool json = false;
  std::string file, rule = "minimal", mseg, rho = "rho";
  std::vector<std::string> xs;
  bool theta = false, expect_zero = false, one_level = false;
  int n = 0;

  auto add_json = [&](CLI::App* s) { s->add_flag("--json", json, "machine-readable output"); };
  auto* classify = app.add_subcommand("classify", "predicates and quads of a parameter");
  classify->add_option("file", file, "parameter file")->required();
  add_json(classify);
  auto* signs = app.add_subcommand("signs", "sign table");
  signs->add_option("file", file, "parameter file")->required();
  add_json(signs);
  auto* resolve = app.add_subcommand("resolve", "resolution in the Grothendieck group");
  resolve->add_option("file", file, "parameter file")->required();
  resolve->add_option("--rule", rule, "domination rule: minimal|plus10");
  add_json(resolve);
  auto* jacquet = app.add_subcommand("jacquet", "Jacquet peels applied to the resolution");
  jacquet->add_option("file", file, "parameter file")->required();
  jacquet->add_option("--x", xs, "peel points, applied in order")->required();
  jacquet->add_option("--rho", rho, "cuspidal label");
  jacquet->add_flag("--theta", theta, "twisted peel (left x, then right -x)");
  jacquet->add_flag("--one-level", one_level, "single block: use the one-level expansion");
  jacquet->add_flag("--expect-zero", expect_zero, "exit 2 unless the result vanishes");
  jacquet->add_option("--rule", rule, "domination rule: minimal|plus10");
  add_json(jacquet);
  auto* dom = app.add_subcommand("dominate", "dominating parameter and peel list");
  dom->add_option("file", file, "parameter file")->required();
  dom->add_option("--rule", rule, "domination rule: minimal|plus10");
  add_json(dom);
  auto* dual = app.add_subcommand("dual", "Zelevinsky dual of a multisegment");
  dual->add_option("multisegment", mseg, "e.g. \"{[2..0]rho}\"")->required();
  add_json(dual);
  auto* cx = app.add_subcommand("complex-check", "sign skeleton checks");
  cx->add_option("--n", n, "size")->required();
  add_json(cx);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    res.code = app.exit(e, out, err) == 0 ? 0 : 1;
    res.out = out.str();
    res.err = err.str();
    return res;
  }

  try {
    if (*classify) {
      out << cmd_classify(load_parameter_file(file), json);
    } else if (*signs) {
      Parameter psi = load_parameter_file(file);
      SignsTable t = signs_table(psi);
      out << (json ? t.to_json().dump(2) + "\n" : t.text());
      if (!t.ratio.consistent()) {
        err << "half-sum sign differs from z_W z_U\n";
        res.code = 2;
      }
    } else if (*resolve) {
      out << cmd_resolve(load_parameter_file(file), parse_rule(rule), json);
    } else if (*jacquet) {
      Parameter psi = load_parameter_file(file);
      if (!psi.labels.count(rho)) throw ValidationError("unknown cuspidal label '" + rho + "'");
      GrothExpr e;
      if (one_level) {
        if (psi.blocks.size() != 1) throw ValidationError("--one-level needs a single block");
        e = resolve_block(to_quad(psi.blocks[0]));
      } else {
        e = resolve_general(psi, parse_rule(rule)).expr;
      }
      for (const auto& s : xs) {
        HalfInt x = HalfInt::parse(s);
        e = theta ? jac_theta(rho, x, e) : jac_left(rho, x, e);
      }
      if (json) {
        ojson j;
        j["expr"] = e.to_json();
        j["zero"] = e.is_zero();
        out << j.dump(2) << "\n";
      } else {
        out << e.str() << "\n";
      }
      if (expect_zero && !e.is_zero()) {
        err << "expected a vanishing Jacquet module, got " << e.size() << " terms\n";
        res.code = 2;
      }
    } else if (*dom) {
      out << cmd_dominate(load_parameter_file(file), parse_rule(rule), json);
    } else if (*dual) {
      Multisegment m = mw_dual(Multisegment::parse(mseg));
      if (json)
        out << ojson{{"dual", m.str()}}.dump(2) << "\n";
      else
        out << m.str() << "\n";
    } else if (*cx) {
      bool ok = true;
      out << cmd_complex(n, json, ok);
      if (!ok) res.code = 2;
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    res.code = 1;
  } catch (const IdentityFailure& e) {
    err << "identity failure: " << e.what() << "\n";
    res.code = 2;
  }
  res.out = out.str();
  res.err = err.str();
  return res;
}

}  // namespace mwcomb
