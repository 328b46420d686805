#include "mwcomb/groth.hpp"

#include <algorithm>
#include <set>

namespace mwcomb {

Atom segment_atom(const Segment& s) { return Atom(s.rho, {{s.start, s.end}}); }

Atom ladder_atom(const Quad& q) { return ladder_multisegment(q); }

namespace {

std::vector<HalfInt> atom_points(const Atom& a) {
  std::vector<HalfInt> out;
  for (const auto& r : a.rows)
    for (HalfInt x : segment_elements(Segment(a.rho, r.start, r.end))) out.push_back(x);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

bool atoms_linked(const Atom& x, const Atom& y) {
  if (x.rho != y.rho) return false;
  auto px = atom_points(x);
  auto py = atom_points(y);
  for (HalfInt p : px)
    for (HalfInt q : py)
      if (p.same_family(q) && (p - q).abs() <= HalfInt::of(1)) return true;
  return false;
}

Word canonicalize(Word w) {
  w.erase(std::remove_if(w.begin(), w.end(), [](const Atom& a) { return a.empty(); }), w.end());
  std::size_t n = w.size();
  if (n < 2) return w;
  std::vector<std::vector<char>> link(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) link[i][j] = link[j][i] = atoms_linked(w[i], w[j]);
  std::vector<char> used(n, 0);
  Word out;
  out.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      bool free = true;
      for (std::size_t j = 0; j < i && free; ++j)
        if (!used[j] && link[i][j]) free = false;
      if (free && (best == n || w[i] < w[best])) best = i;
    }
    used[best] = 1;
    out.push_back(w[best]);
  }
  return out;
}

std::string atom_str(const Atom& a) {
  if (a.rows.size() == 1) return Segment(a.rho, a.rows[0].start, a.rows[0].end).str();
  return a.str();
}

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += " x ";
    out += atom_str(w[i]);
  }
  return out;
}

int total_size(const Word& w, const LabelTable& labels) {
  int n = 0;
  for (const auto& a : w) {
    auto it = labels.find(a.rho);
    if (it == labels.end()) throw ValidationError("unknown cuspidal label '" + a.rho + "'");
    n += a.degree() * it->second.d;
  }
  return n;
}

Multisegment gl_multisegment(const Word& w) {
  std::vector<Segment> segs;
  for (const auto& a : w) {
    Multisegment m = a.multisegment();
    segs.insert(segs.end(), m.segments().begin(), m.segments().end());
  }
  return Multisegment(std::move(segs));
}

GrothExpr GrothExpr::of(const Word& w, long long coeff) {
  GrothExpr e;
  e.add(w, coeff);
  return e;
}

void GrothExpr::add(const Word& w, long long coeff) {
  if (coeff == 0) return;
  Word c = canonicalize(w);
  auto it = terms_.find(c);
  if (it == terms_.end()) {
    terms_.emplace(std::move(c), coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

GrothExpr& GrothExpr::operator+=(const GrothExpr& o) {
  for (const auto& [w, c] : o.terms_) {
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(w, c);
    } else if ((it->second += c) == 0) {
      terms_.erase(it);
    }
  }
  return *this;
}

GrothExpr GrothExpr::operator*(long long k) const {
  GrothExpr out;
  if (k == 0) return out;
  out.terms_ = terms_;
  for (auto& [w, c] : out.terms_) c *= k;
  return out;
}

long long GrothExpr::coeff(const Word& w) const {
  auto it = terms_.find(canonicalize(w));
  return it == terms_.end() ? 0 : it->second;
}

std::string GrothExpr::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    first = false;
    long long m = c < 0 ? -c : c;
    if (m != 1) out += std::to_string(m) + "*";
    out += "<" + word_str(w) + ">";
  }
  return out;
}

nlohmann::ordered_json GrothExpr::to_json() const {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [w, c] : terms_) {
    nlohmann::ordered_json t;
    t["coeff"] = c;
    auto word = nlohmann::ordered_json::array();
    for (const auto& a : w) word.push_back(atom_str(a));
    t["word"] = word;
    arr.push_back(t);
  }
  return arr;
}

GrothExpr operator+(GrothExpr a, const GrothExpr& b) { return a += b; }
GrothExpr operator-(GrothExpr a, const GrothExpr& b) { return a += b * -1; }

GrothExpr induce(const std::vector<GrothExpr>& parts) {
  GrothExpr acc = GrothExpr::of({});
  for (const auto& p : parts) {
    GrothExpr next;
    for (const auto& [w1, c1] : acc.terms())
      for (const auto& [w2, c2] : p.terms()) {
        Word w = w1;
        w.insert(w.end(), w2.begin(), w2.end());
        next.add(w, c1 * c2);
      }
    acc = std::move(next);
  }
  return acc;
}

namespace {

GrothExpr jac_side(const std::string& rho, HalfInt x, const GrothExpr& e, bool left) {
  GrothExpr out;
  for (const auto& [w, c] : e.terms()) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i].rho != rho) continue;
      auto p = left ? peel_left(x, w[i]) : peel_right(x, w[i]);
      if (!p) continue;
      Word nw = w;
      nw[i] = *p;
      out.add(nw, c);
    }
  }
  return out;
}

}  // namespace

GrothExpr jac_left(const std::string& rho, HalfInt x, const GrothExpr& e) { return jac_side(rho, x, e, true); }
GrothExpr jac_right(const std::string& rho, HalfInt x, const GrothExpr& e) { return jac_side(rho, x, e, false); }

GrothExpr jac_theta(const std::string& rho, HalfInt x, const GrothExpr& e) {
  return jac_right(rho, -x, jac_left(rho, x, e));
}

GrothExpr jac_theta_seq(const std::string& rho, const std::vector<HalfInt>& xs, const GrothExpr& e) {
  GrothExpr cur = e;
  for (HalfInt x : xs) {
    if (cur.is_zero()) break;
    cur = jac_theta(rho, x, cur);
  }
  return cur;
}

}  // namespace mwcomb
