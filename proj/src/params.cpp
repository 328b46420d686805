#include "mwcomb/params.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mwcomb {

namespace {

int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

Quad::Quad(std::string r, HalfInt A_, HalfInt B_, int z) : rho(std::move(r)), A(A_), B(B_), zeta(z) {
  if (B < HalfInt()) throw ValidationError("quad with negative B");
  if (A < B) throw ValidationError("quad with A < B: A=" + A.str() + " B=" + B.str());
  if (!A.same_family(B)) throw ValidationError("quad with A - B not an integer");
  if (!(A + B).is_integer()) throw ValidationError("quad with A + B not an integer");
  if (zeta != 1 && zeta != -1) throw ValidationError("quad sign must be +1 or -1");
  if (B == HalfInt()) zeta = 1;
}

std::string Quad::str() const {
  return "(" + rho + "," + A.str() + "," + B.str() + "," + (zeta > 0 ? "+" : "-") + ")";
}

void Parameter::add_label(const CuspidalLabel& l) {
  if (labels.count(l.name)) throw ValidationError("duplicate cuspidal label '" + l.name + "'");
  if (l.d < 1) throw ValidationError("cuspidal dimension d must be >= 1");
  if (l.chi != 1 && l.chi != -1) throw ValidationError("chi must be +1 or -1");
  if (l.eta && *l.eta != 1 && *l.eta != -1) throw ValidationError("eta must be +1, -1 or ?");
  if (l.eta && *l.eta == -1 && l.chi != 1)
    throw ValidationError("label '" + l.name + "' has eta = -1, which forces chi = +1");
  labels.emplace(l.name, l);
}

const JordanBlock& Parameter::add_block(const std::string& rho, int a, int b) {
  if (!labels.count(rho)) throw ValidationError("unknown cuspidal label '" + rho + "'");
  if (a < 1) throw ValidationError("a must be >= 1");
  if (b < 1) throw ValidationError("b must be >= 1");
  int id = 0;
  for (const auto& bl : blocks) id = std::max(id, bl.id + 1);
  blocks.push_back({rho, a, b, id});
  return blocks.back();
}

int Parameter::n() const {
  int n = 0;
  for (const auto& bl : blocks) n += bl.a * bl.b * d(bl.rho);
  return n;
}

int Parameter::d(const std::string& rho) const { return label(rho).d; }

const CuspidalLabel& Parameter::label(const std::string& rho) const {
  auto it = labels.find(rho);
  if (it == labels.end()) throw ValidationError("unknown cuspidal label '" + rho + "'");
  return it->second;
}

Quad to_quad(const JordanBlock& bl) {
  int z = bl.a >= bl.b ? 1 : -1;
  return Quad(bl.rho, HalfInt::from_twice(bl.a + bl.b - 2), HalfInt::from_twice(std::abs(bl.a - bl.b)), z);
}

JordanBlock from_quad(const Quad& q) {
  if (q.A < q.B) throw ValidationError("from_quad: A < B");
  int big = (q.A + q.B).to_int() + 1;
  int small = (q.A - q.B).to_int() + 1;
  JordanBlock bl;
  bl.rho = q.rho;
  bl.a = q.zeta > 0 ? big : small;
  bl.b = q.zeta > 0 ? small : big;
  return bl;
}

Parameter diag_restriction(const Parameter& psi) {
  Parameter out;
  out.labels = psi.labels;
  for (const auto& bl : psi.blocks)
    for (int c = std::abs(bl.a - bl.b) + 1; c <= bl.a + bl.b - 1; c += 2) out.add_block(bl.rho, c, 1);
  return out;
}

bool is_discrete(const Parameter& psi) {
  for (std::size_t i = 0; i < psi.blocks.size(); ++i)
    for (std::size_t j = i + 1; j < psi.blocks.size(); ++j)
      if (psi.blocks[i].same_triple(psi.blocks[j])) return false;
  return true;
}

bool is_elementary(const Parameter& psi) {
  if (!is_discrete(psi)) return false;
  for (const auto& bl : psi.blocks)
    if (std::min(bl.a, bl.b) != 1) return false;
  return true;
}

namespace {

bool intervals_meet(const Quad& q, const Quad& p) {
  if (q.rho != p.rho || !q.A.same_family(p.A)) return false;
  return !(q.B > p.A || p.B > q.A);
}

}  // namespace

bool is_discrete_diagonal(const Parameter& psi) {
  std::vector<Quad> qs;
  for (const auto& bl : psi.blocks) qs.push_back(to_quad(bl));
  for (std::size_t i = 0; i < qs.size(); ++i)
    for (std::size_t j = i + 1; j < qs.size(); ++j)
      if (intervals_meet(qs[i], qs[j])) return false;
  return true;
}

int block_order_cmp(const Quad& q, const Quad& qp) {
  if (q.rho != qp.rho) throw ValidationError("blocks with different labels are incomparable");
  if (q.A != qp.A) return q.A > qp.A ? 1 : -1;
  if (q.B != qp.B) return q.B > qp.B ? 1 : -1;
  if (q.B > HalfInt() && q.zeta != qp.zeta) return q.zeta > 0 ? 1 : -1;
  return 0;
}

bool quad_less(const Quad& q, const Quad& qp) {
  if (q.rho != qp.rho) return q.rho < qp.rho;
  return block_order_cmp(q, qp) < 0;
}

Domination dominate(const Parameter& psi, DominationRule rule) {
  Domination out;
  out.psi_tilde.labels = psi.labels;
  if (is_discrete_diagonal(psi)) {
    out.psi_tilde = psi;
    return out;
  }
  struct Item {
    std::size_t index;
    Quad q;
    Quad qt;
  };
  std::vector<Item> items;
  for (std::size_t i = 0; i < psi.blocks.size(); ++i) {
    Quad q = to_quad(psi.blocks[i]);
    items.push_back({i, q, q});
  }
  std::stable_sort(items.begin(), items.end(), [](const Item& x, const Item& y) { return quad_less(x.q, y.q); });

  std::vector<const Item*> assigned;
  for (auto& it : items) {
    bool keep = true;
    HalfInt top;
    bool have_top = false;
    for (const Item* p : assigned) {
      if (p->qt.rho != it.q.rho || !p->qt.A.same_family(it.q.A)) continue;
      if (intervals_meet(p->qt, it.q) || block_order_cmp(it.q, p->qt) <= 0) keep = false;
      if (!have_top || p->qt.A > top) top = p->qt.A;
      have_top = true;
    }
    if (!keep) {
      HalfInt bt = it.q.B;
      while (bt <= top) bt = bt + 1;
      if (rule == DominationRule::ShiftPlusTen) bt = bt + 10;
      HalfInt shift = bt - it.q.B;
      it.qt = Quad(it.q.rho, it.q.A + shift, bt, it.q.zeta);
    }
    assigned.push_back(&it);
  }

  out.psi_tilde.blocks = psi.blocks;
  for (const auto& it : items) {
    JordanBlock nb = from_quad(it.qt);
    nb.id = psi.blocks[it.index].id;
    out.psi_tilde.blocks[it.index] = nb;
  }
  // Items are already sorted by label, then increasing order.
  for (const auto& it : items) {
    int z = it.q.zeta;
    int len = it.q.length();
    for (HalfInt D = it.qt.B; D > it.q.B; D = D - 1)
      for (int k = 0; k <= len; ++k) out.E.push_back({it.q.rho, z * (D + k)});
  }
  return out;
}

Parameter psi_sharp(const Parameter& psi, const std::string& rho, int d) {
  if (!is_elementary(psi)) throw ValidationError("psi_sharp requires an elementary parameter");
  Parameter out = psi;
  for (auto& bl : out.blocks) {
    int s = std::max(bl.a, bl.b);
    if (bl.rho == rho && s <= d && (s - d) % 2 == 0) std::swap(bl.a, bl.b);
  }
  return out;
}

ImpVariants imp_variants(const Parameter& psi) {
  ImpVariants v;
  v.psi2_imp.labels = v.psi1_imp.labels = v.psi_impimp.labels = psi.labels;
  for (const auto& bl : psi.blocks) {
    if (bl.b % 2 == 1) v.psi2_imp.add_block(bl.rho, bl.a, 1);
    if (bl.a % 2 == 1) v.psi1_imp.add_block(bl.rho, 1, bl.b);
    if (bl.a % 2 == 1 && bl.b % 2 == 1) v.psi_impimp.add_block(bl.rho, 1, 1);
  }
  return v;
}

bool in_Psi_H(const Parameter& psi, int n) {
  if (n != psi.n()) throw ValidationError("n = " + std::to_string(n) + " differs from the parameter size " + std::to_string(psi.n()));
  bool ok = true;
  long chi_exp = 0;
  for (const auto& bl : psi.blocks) {
    const auto& l = psi.label(bl.rho);
    if (!l.eta) throw ValidationError("parity unknown: eta of '" + bl.rho + "' is not set");
    if (*l.eta * sign_pow(bl.a + bl.b) != sign_pow(n + 1)) ok = false;
    if (l.chi == -1) chi_exp += static_cast<long>(bl.a) * bl.b;
  }
  return ok && chi_exp % 2 == 0;
}

HalfInt reducibility_point(const Parameter& phi, const std::string& rho) {
  for (const auto& bl : phi.blocks)
    if (bl.b != 1) throw ValidationError("reducibility_point expects a tempered parameter (all b = 1)");
  if (!is_discrete(phi)) throw ValidationError("reducibility_point expects a discrete parameter");
  const auto& l = phi.label(rho);
  int amax = 0;
  for (const auto& bl : phi.blocks)
    if (bl.rho == rho) amax = std::max(amax, bl.a);
  if (amax > 0) return HalfInt::from_twice(amax + 1);
  if (!l.eta) throw ValidationError("parity unknown: eta of '" + rho + "' is not set");
  if (*l.eta == sign_pow(phi.n() + 1)) return HalfInt::from_twice(1);
  throw ValidationError("reducibility point not determined when Jord_rho is empty and eta = (-1)^n");
}

}  // namespace mwcomb
