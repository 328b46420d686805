#include "mwcomb/signs.hpp"

#include <algorithm>
#include <sstream>

namespace mwcomb {

namespace {

int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }
std::string pm(int s) { return s > 0 ? "+1" : "-1"; }

bool even(int v) { return v % 2 == 0; }

}  // namespace

std::string which_name(Which w) {
  switch (w) {
    case Which::W: return "W";
    case Which::U: return "U";
    default: return "empty";
  }
}

const std::vector<ZPair>& ZSets::get(Which w) const {
  if (w == Which::W) return ZW;
  if (w == Which::U) return ZU;
  return Z;
}

bool z_gate(const JordanBlock& x, const JordanBlock& y) {
  if (x.rho != y.rho) return false;
  return even(std::max(x.a, y.a)) && even(std::max(x.b, y.b)) && !even(std::min(x.a, y.a)) &&
         !even(std::min(x.b, y.b));
}

ZSets z_sets(const Parameter& psi) {
  ZSets out;
  for (const auto& x : psi.blocks)
    for (const auto& y : psi.blocks) {
      if (x.id == y.id || !z_gate(x, y)) continue;
      Quad q = to_quad(x), p = to_quad(y);
      HalfInt s = q.zeta * q.B + p.zeta * p.B;
      bool opposite = q.B == p.B && q.B != HalfInt() && q.zeta * p.zeta == -1;
      HalfInt dA = q.zeta * (q.A - p.A);
      bool w = s < HalfInt() || (opposite && dA < HalfInt());
      bool u = s > HalfInt() || (q.B == HalfInt() && p.B == HalfInt()) || (opposite && dA >= HalfInt());
      if (w == u) throw IdentityFailure("pair (" + std::to_string(x.id) + "," + std::to_string(y.id) + ") is not classified exactly once");
      ZPair zp{x.id, y.id, w ? Which::W : Which::U};
      out.Z.push_back(zp);
      (w ? out.ZW : out.ZU).push_back(zp);
    }
  return out;
}

int z_sign(const Parameter& psi, Which w) {
  auto zs = z_sets(psi);
  std::size_t n = zs.get(w).size();
  if (n % 2) throw IdentityFailure("odd cardinality of Z_" + which_name(w));
  return sign_pow(static_cast<long>(n / 2));
}

SignChar eps_char(const Parameter& psi, Which w) {
  SignChar sc;
  sc.which = w;
  auto zs = z_sets(psi);
  std::map<int, int> count;
  for (const auto& p : zs.get(w)) count[p.first]++;
  for (const auto& bl : psi.blocks) sc.values[bl.id] = sign_pow(count[bl.id]);
  return sc;
}

int eval_at_z(const SignChar& sc) {
  int s = 1;
  for (const auto& [id, v] : sc.values) s *= v;
  return s;
}

int eval_at_c2(const SignChar& sc, const Parameter& psi) {
  int s = 1;
  for (const auto& bl : psi.blocks)
    if (even(bl.b)) s *= sc.values.at(bl.id);
  return s;
}

std::string convention_name(ASignConvention c) {
  switch (c) {
    case ASignConvention::UnorderedDistinct: return "unordered-distinct";
    case ASignConvention::OrderedDistinctHalved: return "ordered-distinct-halved";
    case ASignConvention::OrderedDistinctFull: return "ordered-distinct-full";
    default: return "unordered-with-self";
  }
}

std::vector<ASignConvention> all_a_conventions() {
  return {ASignConvention::UnorderedDistinct, ASignConvention::OrderedDistinctHalved,
          ASignConvention::OrderedDistinctFull, ASignConvention::UnorderedWithSelf};
}

int a_sign(const Parameter& psi, ASignConvention c) {
  long e = 0;
  const auto& bs = psi.blocks;
  for (std::size_t i = 0; i < bs.size(); ++i)
    for (std::size_t j = 0; j < bs.size(); ++j) {
      if (bs[i].rho != bs[j].rho) continue;
      long t = static_cast<long>(std::min(bs[i].a, bs[j].a)) * std::min(bs[i].b, bs[j].b);
      switch (c) {
        case ASignConvention::UnorderedDistinct:
          if (i < j) e += t;
          break;
        case ASignConvention::OrderedDistinctHalved:
        case ASignConvention::OrderedDistinctFull:
          if (i != j) e += t;
          break;
        case ASignConvention::UnorderedWithSelf:
          if (i <= j) e += t;
          break;
      }
    }
  if (c == ASignConvention::OrderedDistinctHalved) e /= 2;  // symmetric sum, always even
  return sign_pow(e);
}

int a_chain(const Parameter& psi, ASignConvention c) {
  auto v = imp_variants(psi);
  return a_sign(psi, c) * a_sign(v.psi1_imp, c) * a_sign(v.psi2_imp, c) * a_sign(v.psi_impimp, c);
}

ThetaRatio theta_ratio_WU(const Parameter& psi, ASignConvention c) {
  ThetaRatio r;
  long twice = 0;
  const auto& bs = psi.blocks;
  for (std::size_t i = 0; i < bs.size(); ++i)
    for (std::size_t j = 0; j < bs.size(); ++j) {
      if (i == j || bs[i].rho != bs[j].rho) continue;
      long ia = std::min(bs[i].a, bs[j].a), sa = std::max(bs[i].a, bs[j].a);
      long ib = std::min(bs[i].b, bs[j].b), sb = std::max(bs[i].b, bs[j].b);
      twice += ia * (1 + sa) * ib * (1 + sb);
    }
  r.half_sum_exponent = twice / 2;
  r.half_sum = sign_pow(r.half_sum_exponent);
  r.a_chain = a_chain(psi, c);
  r.z_product = z_sign(psi, Which::W) * z_sign(psi, Which::U);
  return r;
}

int r_ratio_sign(const JordanBlock& x, const JordanBlock& y) {
  if (x.rho != y.rho) return 1;
  return sign_pow(static_cast<long>(std::min(x.a, y.a)) * std::min(x.b, y.b));
}

JValue j_psi(const Parameter& psi, const std::string& rho, int d) {
  if (!is_elementary(psi)) throw ValidationError("j and beta are defined for elementary parameters only");
  JValue v;
  for (const auto& bl : psi.blocks) {
    int s = std::max(bl.a, bl.b);
    if (bl.rho == rho && s <= d && even(s - d)) {
      v.J.push_back(bl.id);
      v.j0 += s;
    }
  }
  v.j = v.j0;
  if (!v.J.empty() && v.J.size() == psi.blocks.size()) v.j = v.j0 - 1;
  return v;
}

int beta_sign(const Parameter& psi, const std::string& rho, int d) {
  int j = j_psi(psi, rho, d).j;
  int f = j >= 0 ? j / 2 : -((-j + 1) / 2);
  return sign_pow(f);
}

std::string BetaConvention::name() const {
  std::string r = rounding == Rounding::Floor ? "floor" : "ceil";
  std::string p = pair_term == PairTerm::OddDOnly ? "pair-term-odd-d" : pair_term == PairTerm::Always ? "pair-term-always" : "pair-term-never";
  return r + "/" + p;
}

std::vector<BetaConvention> all_beta_conventions() {
  std::vector<BetaConvention> out;
  for (auto r : {BetaConvention::Rounding::Floor, BetaConvention::Rounding::Ceil})
    for (auto p : {BetaConvention::PairTerm::OddDOnly, BetaConvention::PairTerm::Always, BetaConvention::PairTerm::Never})
      out.push_back({r, p});
  return out;
}

int beta_closed_form(const Parameter& psi, const std::string& rho, int d, const BetaConvention& c) {
  JValue v = j_psi(psi, rho, d);
  long k = static_cast<long>(v.J.size());
  long e = 0;
  bool pair = c.pair_term == BetaConvention::PairTerm::Always ||
              (c.pair_term == BetaConvention::PairTerm::OddDOnly && !even(d));
  if (pair) e += k * (k - 1) / 2;
  for (const auto& bl : psi.blocks) {
    if (std::find(v.J.begin(), v.J.end(), bl.id) == v.J.end()) continue;
    long t = static_cast<long>(bl.a) * bl.b - 1;
    if (even(t))
      e += t / 2;
    else
      e += c.rounding == BetaConvention::Rounding::Floor ? (t - 1) / 2 : (t + 1) / 2;
  }
  return sign_pow(e);
}

SignsTable signs_table(const Parameter& psi) {
  SignsTable t;
  auto eW = eps_char(psi, Which::W), eU = eps_char(psi, Which::U), eE = eps_char(psi, Which::Empty);
  for (const auto& bl : psi.blocks)
    t.rows.push_back({bl.id, "(" + bl.rho + "," + std::to_string(bl.a) + "," + std::to_string(bl.b) + ")",
                      eW.values[bl.id], eU.values[bl.id], eE.values[bl.id]});
  t.zW = z_sign(psi, Which::W);
  t.zU = z_sign(psi, Which::U);
  t.zE = z_sign(psi, Which::Empty);
  auto v = imp_variants(psi);
  t.a_psi = a_sign(psi);
  t.a_psi1 = a_sign(v.psi1_imp);
  t.a_psi2 = a_sign(v.psi2_imp);
  t.a_impimp = a_sign(v.psi_impimp);
  t.ratio = theta_ratio_WU(psi);
  t.atz_W = eval_at_z(eW);
  t.atz_U = eval_at_z(eU);
  t.atz_E = eval_at_z(eE);
  t.atc2_W = eval_at_c2(eW, psi);
  t.atc2_U = eval_at_c2(eU, psi);
  t.atc2_E = eval_at_c2(eE, psi);
  return t;
}

std::string SignsTable::text() const {
  std::ostringstream os;
  os << "block            eps_W  eps_U  eps_empty\n";
  for (const auto& r : rows) {
    std::string name = "#" + std::to_string(r.id) + " " + r.block;
    name.resize(std::max<std::size_t>(name.size(), 16), ' ');
    os << name << " " << pm(r.eps_W) << "     " << pm(r.eps_U) << "     " << pm(r.eps_E) << "\n";
  }
  os << "z_W = " << pm(zW) << "\n";
  os << "z_U = " << pm(zU) << "\n";
  os << "z_empty = " << pm(zE) << "\n";
  os << "a(psi) = " << pm(a_psi) << ", a(psi1_imp) = " << pm(a_psi1) << ", a(psi2_imp) = " << pm(a_psi2)
     << ", a(psi_impimp) = " << pm(a_impimp) << "\n";
  os << "a-chain = " << pm(ratio.a_chain) << "\n";
  os << "half-sum exponent = " << ratio.half_sum_exponent << ", sign = " << pm(ratio.half_sum) << "\n";
  os << "theta_W/theta_U = " << pm(ratio.z_product) << "\n";
  os << "eps(z): W " << pm(atz_W) << ", U " << pm(atz_U) << ", empty " << pm(atz_E) << "\n";
  os << "eps(c2): W " << pm(atc2_W) << ", U " << pm(atc2_U) << ", empty " << pm(atc2_E) << "\n";
  return os.str();
}

nlohmann::ordered_json SignsTable::to_json() const {
  nlohmann::ordered_json j;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rows)
    arr.push_back({{"id", r.id}, {"block", r.block}, {"eps_W", r.eps_W}, {"eps_U", r.eps_U}, {"eps_empty", r.eps_E}});
  j["blocks"] = arr;
  j["z_W"] = zW;
  j["z_U"] = zU;
  j["z_empty"] = zE;
  j["a_psi"] = a_psi;
  j["a_psi1_imp"] = a_psi1;
  j["a_psi2_imp"] = a_psi2;
  j["a_psi_impimp"] = a_impimp;
  j["a_chain"] = ratio.a_chain;
  j["half_sum_exponent"] = ratio.half_sum_exponent;
  j["half_sum"] = ratio.half_sum;
  j["theta_ratio_WU"] = ratio.z_product;
  j["eval_at_z"] = {{"W", atz_W}, {"U", atz_U}, {"empty", atz_E}};
  j["eval_at_c2"] = {{"W", atc2_W}, {"U", atc2_U}, {"empty", atc2_E}};
  return j;
}

}  // namespace mwcomb
