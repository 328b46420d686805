#include "mwcomb/resolve.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace mwcomb {

namespace {

int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

std::vector<HalfInt> peel_run(const Quad& q, HalfInt C) {
  std::vector<HalfInt> xs;
  for (HalfInt D = q.B + 2; D <= C; D = D + 1) xs.push_back(q.zeta * D);
  return xs;
}

Atom left_segment(const Quad& q, HalfInt C) { return segment_atom(Segment(q.rho, q.zeta * q.B, -q.zeta * C)); }
Atom right_segment(const Quad& q, HalfInt C) { return segment_atom(Segment(q.rho, q.zeta * C, -q.zeta * q.B)); }

using QuadKey = std::vector<std::tuple<std::string, int, int, int>>;

QuadKey key_of(std::vector<Quad> qs) {
  std::sort(qs.begin(), qs.end(), quad_less);
  QuadKey k;
  for (const auto& q : qs) k.emplace_back(q.rho, q.A.twice(), q.B.twice(), q.zeta);
  return k;
}

std::string quads_str(const std::vector<Quad>& qs) {
  std::string out = "{";
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (i) out += ",";
    out += qs[i].str();
  }
  return out + "}";
}

struct Resolver {
  std::map<QuadKey, GrothExpr> memo;
  std::vector<TraceStep>* trace = nullptr;

  GrothExpr run(std::vector<Quad> qs, int depth) {
    std::sort(qs.begin(), qs.end(), quad_less);
    auto key = key_of(qs);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    // Largest non-elementary block: label name, then block order.
    int pick = -1;
    for (int i = static_cast<int>(qs.size()) - 1; i >= 0; --i)
      if (!qs[i].elementary()) {
        pick = i;
        break;
      }
    GrothExpr out;
    if (pick < 0) {
      Word w;
      for (auto it = qs.rbegin(); it != qs.rend(); ++it) w.push_back(ladder_atom(*it));
      out = GrothExpr::of(w);
      if (trace) trace->push_back({quads_str(qs), "", "elementary", depth});
    } else {
      Quad q = qs[pick];
      std::vector<Quad> rest = qs;
      rest.erase(rest.begin() + pick);
      if (trace) trace->push_back({q.str(), quads_str(rest), "expand", depth});

      GrothExpr base;
      {
        std::vector<Quad> inner = rest;
        if (q.B + 2 <= q.A) inner.push_back(Quad(q.rho, q.A, q.B + 2, q.zeta));
        base = run(inner, depth + 1);
      }
      for (HalfInt C = q.B + 1; C <= q.A; C = C + 1) {
        GrothExpr mid = jac_theta_seq(q.rho, peel_run(q, C), base);
        GrothExpr term = induce({GrothExpr::of({left_segment(q, C)}), mid, GrothExpr::of({right_segment(q, C)})});
        out += term * sign_pow((q.A - C).to_int());
      }
      std::vector<Quad> last = rest;
      last.push_back(Quad(q.rho, q.A, q.B + 1, q.zeta));
      last.push_back(Quad(q.rho, q.B, q.B, q.zeta));
      long e = (q.A - q.B + 1).to_int() / 2;
      out += run(last, depth + 1) * sign_pow(e);
    }
    memo.emplace(std::move(key), out);
    return out;
  }
};

std::vector<Quad> quads_of(const Parameter& psi) {
  std::vector<Quad> qs;
  for (const auto& bl : psi.blocks) qs.push_back(to_quad(bl));
  return qs;
}

}  // namespace

GrothExpr resolve_block(const Quad& q) {
  if (q.A < q.B) throw ValidationError("resolve_block: A < B");
  if (q.A == q.B) throw ValidationError("resolve_block needs A > B; " + q.str() + " is already elementary");
  GrothExpr out;
  for (HalfInt C = q.B + 1; C <= q.A; C = C + 1) {
    Word w{left_segment(q, C), trunc_ladder(q, C), right_segment(q, C)};
    out.add(w, sign_pow((q.A - C).to_int()));
  }
  Word last{ladder_atom(Quad(q.rho, q.A, q.B + 1, q.zeta)), ladder_atom(Quad(q.rho, q.B, q.B, q.zeta))};
  out.add(last, sign_pow((q.A - q.B + 1).to_int() / 2));
  return out;
}

void check_degree(const GrothExpr& e, int n, const LabelTable& labels) {
  for (const auto& [w, c] : e.terms()) {
    int s = total_size(w, labels);
    if (s != n)
      throw IdentityFailure("degree not conserved: term " + word_str(w) + " has size " + std::to_string(s) +
                            ", expected " + std::to_string(n));
  }
}

Resolution resolve_param(const Parameter& psi) {
  if (!is_discrete_diagonal(psi)) throw ValidationError("resolve_param needs a parameter with discrete diagonal restriction");
  Resolution r;
  r.psi = psi;
  r.psi_tilde = psi;
  Resolver solver;
  solver.trace = &r.trace;
  r.expr = solver.run(quads_of(psi), 0);
  check_degree(r.expr, psi.n(), psi.labels);
  return r;
}

Resolution resolve_general(const Parameter& psi, DominationRule rule) {
  Domination dom = dominate(psi, rule);
  Resolution r = resolve_param(dom.psi_tilde);
  r.psi = psi;
  r.psi_tilde = dom.psi_tilde;
  r.E = dom.E;
  for (const auto& p : dom.E) r.expr = jac_theta(p.rho, p.x, r.expr);
  check_degree(r.expr, psi.n(), psi.labels);
  return r;
}

nlohmann::ordered_json Resolution::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = psi.n();
  auto quads = nlohmann::ordered_json::array();
  for (const auto& bl : psi_tilde.blocks) quads.push_back(to_quad(bl).str());
  j["psi_tilde"] = quads;
  auto e = nlohmann::ordered_json::array();
  for (const auto& p : E) e.push_back({{"rho", p.rho}, {"x", p.x.str()}});
  j["E"] = e;
  j["expr"] = expr.to_json();
  auto t = nlohmann::ordered_json::array();
  for (const auto& s : trace) {
    nlohmann::ordered_json step;
    step["depth"] = s.depth;
    step["case"] = s.which;
    step["block"] = s.block;
    step["rest"] = s.rest;
    t.push_back(step);
  }
  j["trace"] = t;
  return j;
}

bool CancellationReport::all_vanish() const {
  return std::all_of(entries.begin(), entries.end(), [](const Entry& e) { return e.vanished; });
}

nlohmann::ordered_json CancellationReport::to_json() const {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& e : entries)
    arr.push_back({{"op", e.op}, {"x", e.x.str()}, {"vanished", e.vanished}, {"terms", e.terms}});
  return arr;
}

CancellationReport verify_cancellation(const Quad& q, const GrothExpr& expr) {
  CancellationReport rep;
  HalfInt lo = std::min(q.zeta * q.B, q.zeta * q.A);
  HalfInt hi = std::max(q.zeta * q.B, q.zeta * q.A);
  // Every support point lies in [-A, A]; one step of margin on each side.
  std::vector<HalfInt> xs;
  for (HalfInt x = -q.A - 1; x <= q.A + 1; x = x + 1) xs.push_back(x);
  for (HalfInt x : xs) {
    if (x < lo || x > hi) {
      GrothExpr j = jac_left(q.rho, x, expr);
      rep.entries.push_back({"jac", x, j.is_zero(), j.size()});
    }
    GrothExpr jj = jac_left(q.rho, x, jac_left(q.rho, x, expr));
    rep.entries.push_back({"jac2", x, jj.is_zero(), jj.size()});
  }
  for (HalfInt C = q.B + 2; C <= q.A; C = C + 1) {
    GrothExpr t = jac_theta(q.rho, q.zeta * C, expr);
    rep.entries.push_back({"theta", q.zeta * C, t.is_zero(), t.size()});
  }
  return rep;
}

}  // namespace mwcomb
