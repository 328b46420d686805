#include "mwcomb/ladders.hpp"

#include <algorithm>
#include <set>

namespace mwcomb {

Ladder::Ladder(std::string r, std::vector<Row> rs) : rho(std::move(r)), rows(std::move(rs)) {
  for (auto& row : rows)
    if (!row.start.same_family(row.end)) throw ValidationError("ladder row with non-integral length");
  std::sort(rows.begin(), rows.end());
}

int Ladder::degree() const {
  int n = 0;
  for (const auto& r : rows) n += r.length();
  return n;
}

bool Ladder::satisfies_ladder_condition() const {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].start == rows[i - 1].start) return false;
    if (!(rows[i - 1].end < rows[i].end)) return false;
  }
  return true;
}

Multisegment Ladder::multisegment() const {
  std::vector<Segment> segs;
  for (const auto& r : rows) segs.emplace_back(rho, r.start, r.end);
  return Multisegment(std::move(segs));
}

std::string Ladder::str() const {
  std::string out = "<";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += ",";
    out += "[" + rows[i].start.str() + ".." + rows[i].end.str() + "]";
  }
  return out + ">" + rho;
}

Ladder ladder_multisegment(const Quad& q) {
  std::vector<Row> rows;
  int len = q.length();
  for (int k = 0; k <= len; ++k) rows.push_back({q.zeta * (q.B + k), -q.zeta * (q.A - k)});
  return Ladder(q.rho, std::move(rows));
}

Multisegment tableau_cols(const Quad& q) {
  Ladder L = ladder_multisegment(q);
  // Row k of the tableau is the row starting at zeta(B+k).
  std::vector<std::vector<HalfInt>> table;
  int len = q.length();
  for (int k = 0; k <= len; ++k) {
    Segment s(q.rho, q.zeta * (q.B + k), -q.zeta * (q.A - k));
    table.push_back(segment_elements(s));
  }
  std::vector<Segment> cols;
  std::size_t width = table.front().size();
  for (std::size_t j = 0; j < width; ++j) cols.emplace_back(q.rho, table.front()[j], table.back()[j]);
  return Multisegment(std::move(cols));
}

Multisegment langlands_multisegment(const std::string& rho, int a, int b) {
  if (a < 1 || b < 1) throw ValidationError("a and b must be >= 1");
  std::vector<Segment> segs;
  HalfInt half_a = HalfInt::from_twice(a - 1);
  for (int t = b - 1; t >= -(b - 1); t -= 2) {
    HalfInt s = HalfInt::from_twice(t);
    segs.emplace_back(rho, half_a + s, -half_a + s);
  }
  return Multisegment(std::move(segs));
}

namespace {

std::optional<Ladder> peel(HalfInt x, const Ladder& L, bool left) {
  std::optional<std::size_t> hit;
  for (std::size_t i = 0; i < L.rows.size(); ++i) {
    HalfInt endpoint = left ? L.rows[i].start : L.rows[i].end;
    if (endpoint == x) {
      if (hit) return std::nullopt;
      hit = i;
    }
  }
  if (!hit) return std::nullopt;
  std::vector<Row> rows;
  for (std::size_t i = 0; i < L.rows.size(); ++i) {
    Row r = L.rows[i];
    if (i == *hit) {
      if (r.length() == 1) continue;
      int step = r.start > r.end ? -1 : 1;
      if (left)
        r.start = r.start + step;
      else
        r.end = r.end - step;
    }
    rows.push_back(r);
  }
  Ladder out(L.rho, std::move(rows));
  if (!out.satisfies_ladder_condition()) return std::nullopt;
  return out;
}

}  // namespace

std::optional<Ladder> peel_left(HalfInt x, const Ladder& L) { return peel(x, L, true); }
std::optional<Ladder> peel_right(HalfInt x, const Ladder& L) { return peel(x, L, false); }

Ladder trunc_ladder(const Quad& q, HalfInt C) {
  if (!(q.B < C) || C > q.A) throw ValidationError("trunc_ladder needs B < C <= A");
  if (!C.same_family(q.B)) throw ValidationError("trunc_ladder: C must lie in the family of B");
  if (q.B + 2 > q.A) return Ladder(q.rho, {});
  Ladder L = ladder_multisegment(Quad(q.rho, q.A, q.B + 2, q.zeta));
  for (HalfInt D = q.B + 2; D <= C; D = D + 1) {
    HalfInt x = q.zeta * D;
    auto l1 = peel_left(x, L);
    if (!l1) throw IdentityFailure("trunc_ladder: left peel at " + x.str() + " vanished on " + L.str());
    auto l2 = peel_right(-x, *l1);
    if (!l2) throw IdentityFailure("trunc_ladder: right peel at " + (-x).str() + " vanished on " + l1->str());
    L = *l2;
  }
  return L;
}

}  // namespace mwcomb
