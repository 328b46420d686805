// One line per acceptance criterion. Exit status is the number of failures.
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mwcomb/complex.hpp"
#include "mwcomb/core.hpp"
#include "mwcomb/groth.hpp"
#include "mwcomb/ladders.hpp"
#include "mwcomb/params.hpp"
#include "mwcomb/resolve.hpp"
#include "mwcomb/signs.hpp"

using namespace mwcomb;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, double limit_s, const std::function<Outcome()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_time = limit_s <= 0 || s < limit_s;
  bool ok = o.pass && in_time;
  if (!ok) ++failures;
  std::printf("[%s] %2d %s: %s (%.2fs%s)\n", ok ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str(), s,
              in_time ? "" : ", over time limit");
  std::fflush(stdout);
}

Parameter base_labels() {
  Parameter p;
  p.add_label({"rho", 1, 1, 1});
  p.add_label({"sigma", 2, -1, 1});
  return p;
}

Parameter random_param(std::mt19937& rng, int max_blocks, int max_ab) {
  Parameter p = base_labels();
  int labels = 1 + static_cast<int>(rng() % 2);
  int nb = 1 + static_cast<int>(rng() % max_blocks);
  for (int i = 0; i < nb; ++i) {
    std::string r = (labels == 2 && rng() % 2) ? "sigma" : "rho";
    p.add_block(r, 1 + static_cast<int>(rng() % max_ab), 1 + static_cast<int>(rng() % max_ab));
  }
  return p;
}

std::string blocks_str(const Parameter& p) {
  std::string s;
  for (const auto& bl : p.blocks) s += "(" + bl.rho + "," + std::to_string(bl.a) + "," + std::to_string(bl.b) + ")";
  return s;
}

// Degree bookkeeping shared by criteria 4-7.
long degree_terms = 0;
std::vector<std::string> degree_errors;

void note_degree(const GrothExpr& e, int n, const LabelTable& labels, const std::string& where) {
  for (const auto& [w, c] : e.terms()) {
    ++degree_terms;
    int s = total_size(w, labels);
    if (s != n && degree_errors.size() < 5) degree_errors.push_back(where + ": " + word_str(w));
  }
}

std::vector<Quad> single_block_quads(int maxA2) {
  std::vector<Quad> out;
  for (int tA = 0; tA <= maxA2; ++tA)
    for (int tB = tA % 2; tB <= tA; tB += 2)
      for (int z : {1, -1}) {
        if (tB == 0 && z == -1) continue;
        out.emplace_back("rho", HalfInt::from_twice(tA), HalfInt::from_twice(tB), z);
      }
  return out;
}

}  // namespace

int main() {
  std::mt19937 rng(20240601);
  std::vector<Parameter> corpus;
  for (int i = 0; i < 1000; ++i) corpus.push_back(random_param(rng, 5, 8));

  report(1, "epsilon characters at z and c2", 5.0, [&] {
    long checks = 0;
    for (const auto& psi : corpus) {
      auto zs = z_sets(psi);
      for (Which w : {Which::W, Which::U, Which::Empty}) {
        SignChar sc = eps_char(psi, w);
        if (eval_at_z(sc) != 1) return Outcome{false, "eval_at_z != 1 for " + which_name(w)};
        if (eval_at_c2(sc, psi) != z_sign(psi, w)) return Outcome{false, "eval_at_c2 != z for " + which_name(w)};
        std::size_t beven = 0;
        for (const auto& p : zs.get(w))
          for (const auto& bl : psi.blocks)
            if (bl.id == p.first && bl.b % 2 == 0) ++beven;
        if (2 * beven != zs.get(w).size()) return Outcome{false, "c2 pair count mismatch"};
        checks += 3;
      }
      if (z_sign(psi, Which::Empty) != z_sign(psi, Which::W) * z_sign(psi, Which::U))
        return Outcome{false, "z_empty != z_W z_U"};
    }
    return Outcome{true, std::to_string(corpus.size()) + " parameters, " + std::to_string(checks) + " character checks"};
  });

  report(2, "half-sum sign equals z_W z_U; a-chain convention", 5.0, [&] {
    std::vector<int> matches(all_a_conventions().size(), 0);
    for (const auto& psi : corpus) {
      ThetaRatio r = theta_ratio_WU(psi);
      if (r.half_sum != r.z_product) return Outcome{false, "half-sum differs from z_W z_U"};
      auto cs = all_a_conventions();
      for (std::size_t k = 0; k < cs.size(); ++k)
        if (a_chain(psi, cs[k]) == r.half_sum) ++matches[k];
    }
    std::string det, chosen;
    auto cs = all_a_conventions();
    for (std::size_t k = 0; k < cs.size(); ++k) {
      det += convention_name(cs[k]) + " " + std::to_string(matches[k]) + "/" + std::to_string(corpus.size()) + "; ";
      if (matches[k] == static_cast<int>(corpus.size()) && chosen.empty()) chosen = convention_name(cs[k]);
    }
    if (chosen.empty()) return Outcome{false, det + "no convention matches everywhere"};
    return Outcome{true, det + "chosen: " + chosen};
  });

  report(3, "single block gives z_W = z_U = +1", 0, [&] {
    int count = 0;
    for (int a = 1; a <= 10; ++a)
      for (int b = 1; b <= 10; ++b) {
        Parameter p = base_labels();
        p.add_block("rho", a, b);
        if (z_sign(p, Which::W) != 1 || z_sign(p, Which::U) != 1)
          return Outcome{false, "fails at (" + std::to_string(a) + "," + std::to_string(b) + ")"};
        ++count;
      }
    return Outcome{true, std::to_string(count) + " blocks"};
  });

  report(4, "Jacquet cancellation for single blocks, A <= 4", 10.0, [&] {
    int quads = 0;
    std::size_t checks = 0;
    for (const Quad& q : single_block_quads(8)) {
      if (q.elementary()) continue;
      GrothExpr e = resolve_block(q);
      Parameter p = base_labels();
      JordanBlock bl = from_quad(q);
      p.add_block("rho", bl.a, bl.b);
      note_degree(e, p.n(), p.labels, "c4 " + q.str());
      CancellationReport rep = verify_cancellation(q, e);
      checks += rep.entries.size();
      for (const auto& en : rep.entries)
        if (!en.vanished) return Outcome{false, q.str() + " " + en.op + " at " + en.x.str() + " leaves " + std::to_string(en.terms) + " terms"};
      ++quads;
    }
    return Outcome{true, std::to_string(quads) + " quads, " + std::to_string(checks) + " vanishing checks"};
  });

  report(5, "two-term closed form for A = B + 1", 0, [&] {
    int count = 0;
    for (const Quad& q : single_block_quads(12)) {
      if (q.length() != 1) continue;
      GrothExpr e = resolve_block(q);
      Parameter p = base_labels();
      JordanBlock bl = from_quad(q);
      p.add_block("rho", bl.a, bl.b);
      note_degree(e, p.n(), p.labels, "c5 " + q.str());
      GrothExpr want;
      want.add({segment_atom(Segment("rho", q.zeta * q.B, -q.zeta * q.A)), segment_atom(Segment("rho", q.zeta * q.A, -q.zeta * q.B))}, 1);
      want.add({ladder_atom(Quad("rho", q.A, q.A, q.zeta)), ladder_atom(Quad("rho", q.B, q.B, q.zeta))}, -1);
      if (!(e == want) || e.size() != 2) return Outcome{false, q.str() + " gives " + e.str()};
      ++count;
    }
    return Outcome{true, std::to_string(count) + " quads"};
  });

  report(6, "worked example St(2) x Sp(2)", 0, [&] {
    Parameter p = base_labels();
    p.add_block("rho", 2, 1);
    p.add_block("rho", 1, 2);
    Domination d = dominate(p);
    bool blocks_ok = d.psi_tilde.blocks.size() == 2 && d.psi_tilde.blocks[0].a == 4 && d.psi_tilde.blocks[0].b == 1 &&
                     d.psi_tilde.blocks[1].a == 1 && d.psi_tilde.blocks[1].b == 2;
    bool E_ok = d.E.size() == 1 && d.E[0].rho == "rho" && d.E[0].x == HalfInt::from_twice(3);
    Resolution r = resolve_general(p);
    note_degree(r.expr, p.n(), p.labels, "c6");
    Word w{segment_atom(Segment("rho", HalfInt::from_twice(1), HalfInt::from_twice(-1))),
           segment_atom(Segment("rho", HalfInt::from_twice(-1), HalfInt::from_twice(1)))};
    long long c = r.expr.coeff(w);
    std::string det = "psi_tilde " + std::string(blocks_ok ? "ok" : "wrong") + ", E " + (E_ok ? "(3/2)" : "wrong") +
                      ", coeff of St(2)xSp(2) = " + std::to_string(c) + ", expr = " + r.expr.str();
    return Outcome{blocks_ok && E_ok && c == 1, det};
  });

  report(7, "independence of the domination rule", 0, [&] {
    int tried = 0, equal = 0, nondd = 0;
    std::string first_bad;
    std::mt19937 r7(77);
    while (tried < 50) {
      Parameter p = base_labels();
      int nb = 1 + static_cast<int>(r7() % 4);
      std::map<std::string, int> size;
      for (int i = 0; i < nb; ++i) {
        std::string lab = r7() % 4 == 0 ? "sigma" : "rho";
        int d = lab == "sigma" ? 2 : 1;
        int a = 1 + static_cast<int>(r7() % 4), b = 1 + static_cast<int>(r7() % 4);
        if ((size[lab] + a * b) * d > 12) continue;
        size[lab] += a * b;
        p.add_block(lab, a, b);
      }
      if (p.blocks.empty() || is_discrete_diagonal(p)) continue;
      ++tried;
      ++nondd;
      Resolution g1 = resolve_general(p, DominationRule::MinimalShift);
      Resolution g2 = resolve_general(p, DominationRule::ShiftPlusTen);
      note_degree(g1.expr, p.n(), p.labels, "c7 minimal");
      note_degree(g2.expr, p.n(), p.labels, "c7 plus10");
      if (g1.expr == g2.expr)
        ++equal;
      else if (first_bad.empty())
        first_bad = blocks_str(p);
    }
    std::string det = std::to_string(equal) + "/" + std::to_string(tried) + " equal, " + std::to_string(nondd) +
                      " needed domination";
    if (!first_bad.empty()) det += "; first mismatch " + first_bad;
    return Outcome{equal == tried, det};
  });

  report(8, "Zelevinsky involution and the ladder law", 5.0, [&] {
    std::mt19937 r8(88);
    for (int i = 0; i < 200; ++i) {
      std::vector<Segment> segs;
      int k = static_cast<int>(r8() % 21);
      bool half = r8() % 2;
      for (int s = 0; s < k; ++s) {
        std::string lab = r8() % 3 == 0 ? "sigma" : "rho";
        int lo = static_cast<int>(r8() % 9) - 4;
        int len = static_cast<int>(r8() % 5);
        HalfInt e = HalfInt::from_twice(2 * lo + (half ? 1 : 0));
        segs.emplace_back(lab, e + len, e);
      }
      Multisegment m(segs);
      Multisegment d = mw_dual(m);
      if (!(mw_dual(d) == m)) return Outcome{false, "not an involution on " + m.str()};
      if (support(d) != support(m)) return Outcome{false, "support changed on " + m.str()};
    }
    int pairs = 0;
    for (int a = 1; a <= 6; ++a)
      for (int b = 1; b <= 6; ++b) {
        if (!(mw_dual(langlands_multisegment("rho", a, b)) == langlands_multisegment("rho", b, a)))
          return Outcome{false, "ladder law fails at a=" + std::to_string(a) + ", b=" + std::to_string(b)};
        ++pairs;
      }
    return Outcome{true, "200 random multisegments, " + std::to_string(pairs) + " ladder pairs"};
  });

  report(9, "sign skeleton and subset-complex exactness", 30.0, [&] {
    for (int n = 3; n <= 6; ++n)
      if (!check_nilpotent(n)) return Outcome{false, "nilpotency fails at n=" + std::to_string(n)};
    for (int n = 2; n <= 6; ++n)
      if (!check_theta_sign(n)) return Outcome{false, "theta sign fails at n=" + std::to_string(n)};
    int cases = 0;
    auto run_case = [&](const std::set<int>& D, const std::set<int>& Dm, const std::set<int>& Dpm) {
      ++cases;
      return subset_complex_homology(D, Dm, Dpm) == expected_homology(D, Dm, Dpm);
    };
    for (int size = 0; size <= 5; ++size) {
      std::set<int> D;
      for (int k = 1; k <= size; ++k) D.insert(k);
      for (unsigned pm = 0; pm < (1u << size); ++pm)
        for (unsigned dm = pm;; dm = (dm - 1) & pm) {
          std::set<int> Dm, Dpm;
          for (int i = 0; i < size; ++i) {
            if (pm & (1u << i)) Dpm.insert(i + 1);
            if (dm & (1u << i)) Dm.insert(i + 1);
          }
          if (!run_case(D, Dm, Dpm)) return Outcome{false, "homology mismatch, |Delta|=" + std::to_string(size)};
          if (dm == 0) break;
        }
    }
    int exhaustive = cases;
    std::mt19937 r9(99);
    for (int i = 0; i < 100; ++i) {
      int size = 6 + static_cast<int>(r9() % 3);
      std::set<int> D, Dm, Dpm;
      for (int k = 1; k <= size; ++k) {
        D.insert(k);
        unsigned c = r9() % 3;
        if (c >= 1) Dpm.insert(k);
        if (c == 2) Dm.insert(k);
      }
      if (!run_case(D, Dm, Dpm)) return Outcome{false, "homology mismatch on a random case"};
    }
    return Outcome{true, "nilpotency n<=6, theta sign n<=6, " + std::to_string(exhaustive) + " exhaustive + 100 random complexes"};
  });

  report(10, "beta reconciliation report", 0, [&] {
    std::vector<std::pair<int, int>> types;
    for (int s = 1; s <= 6; ++s) {
      types.push_back({s, 1});
      if (s > 1) types.push_back({1, s});
    }
    std::vector<std::vector<std::pair<std::string, std::pair<int, int>>>> psis;
    std::vector<std::pair<std::string, std::pair<int, int>>> all;
    for (const auto& t : types) all.push_back({"rho", t});
    for (const auto& t : types) all.push_back({"sigma", t});
    std::size_t m = all.size();
    for (std::size_t i = 0; i < m; ++i) {
      psis.push_back({all[i]});
      for (std::size_t j = i + 1; j < m; ++j) {
        psis.push_back({all[i], all[j]});
        for (std::size_t k = j + 1; k < m; ++k) psis.push_back({all[i], all[j], all[k]});
      }
    }
    auto convs = all_beta_conventions();
    std::vector<std::array<long, 2>> hit(convs.size(), {0, 0});
    std::array<long, 2> total{0, 0};
    for (const auto& blocks : psis) {
      Parameter p = base_labels();
      for (const auto& [lab, ab] : blocks) p.add_block(lab, ab.first, ab.second);
      for (int d = 1; d <= 6; ++d) {
        int beta = beta_sign(p, "rho", d);
        ++total[d % 2];
        for (std::size_t c = 0; c < convs.size(); ++c)
          if (beta_closed_form(p, "rho", d, convs[c]) == beta) ++hit[c][d % 2];
      }
    }
    Parameter ex1 = base_labels();
    ex1.add_block("rho", 1, 3);
    Parameter ex2 = base_labels();
    ex2.add_block("rho", 1, 2);
    bool examples = beta_sign(ex1, "rho", 3) == -1 && j_psi(ex1, "rho", 3).j == 2 && beta_sign(ex2, "rho", 2) == 1;
    std::string det = std::to_string(psis.size()) + " parameters x d=1..6; ";
    std::string everywhere;
    for (std::size_t c = 0; c < convs.size(); ++c) {
      det += convs[c].name() + " odd " + std::to_string(hit[c][1]) + "/" + std::to_string(total[1]) + " even " +
             std::to_string(hit[c][0]) + "/" + std::to_string(total[0]) + "; ";
      if (hit[c][0] == total[0] && hit[c][1] == total[1]) everywhere = convs[c].name();
    }
    det += everywhere.empty() ? "no closed-form convention matches everywhere" : "matches everywhere: " + everywhere;
    return Outcome{examples, det};
  });

  report(11, "degree conservation in criteria 4-7", 0, [&] {
    if (!degree_errors.empty()) return Outcome{false, "first bad term " + degree_errors.front()};
    return Outcome{degree_terms > 0, std::to_string(degree_terms) + " terms checked"};
  });

  return failures;
}
