#include "mwcomb/core.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace mwcomb {

int HalfInt::to_int() const {
  if (!is_integer()) throw ValidationError("half-integer " + str() + " is not an integer");
  return t_ / 2;
}

std::string HalfInt::str() const {
  if (t_ % 2 == 0) return std::to_string(t_ / 2);
  return std::to_string(t_) + "/2";
}

HalfInt HalfInt::parse(const std::string& s) {
  auto bad = [&] { return ValidationError("malformed half-integer '" + s + "'"); };
  if (s.empty()) throw bad();
  std::size_t i = 0;
  int sign = 1;
  if (s[0] == '+' || s[0] == '-') {
    sign = s[0] == '-' ? -1 : 1;
    i = 1;
  }
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) throw bad();
    long v = 0;
    for (std::size_t k = from; k < to; ++k) {
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw bad();
      v = v * 10 + (s[k] - '0');
      if (v > 1000000) throw bad();
    }
    return static_cast<int>(v);
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) return HalfInt::of(sign * digits(i, s.size()));
  int num = digits(i, slash);
  int den = digits(slash + 1, s.size());
  if (den == 1) return HalfInt::of(sign * num);
  if (den != 2) throw bad();
  return HalfInt::from_twice(sign * num);
}

Segment::Segment(std::string r, HalfInt s, HalfInt e) : rho(std::move(r)), start(s), end(e) {
  if (!start.same_family(end))
    throw ValidationError("segment endpoints " + start.str() + ", " + end.str() +
                          " do not differ by an integer");
}

int Segment::length() const { return (start - end).abs().twice() / 2 + 1; }

Segment Segment::normalized() const {
  return decreasing() ? *this : Segment(rho, end, start);
}

std::string Segment::str() const {
  return "[" + start.str() + ".." + end.str() + "]" + rho;
}

std::vector<HalfInt> segment_elements(const Segment& seg) {
  std::vector<HalfInt> out;
  int step = seg.decreasing() ? -1 : 1;
  for (HalfInt x = seg.start;; x = x + step) {
    out.push_back(x);
    if (x == seg.end) break;
  }
  return out;
}

namespace {

bool canonical_less(const Segment& a, const Segment& b) {
  if (a.rho != b.rho) return a.rho < b.rho;
  if (a.start != b.start) return a.start > b.start;
  return a.end > b.end;
}

}  // namespace

Multisegment::Multisegment(std::vector<Segment> segs) : segs_(std::move(segs)) {
  for (auto& s : segs_) s = s.normalized();
  std::sort(segs_.begin(), segs_.end(), canonical_less);
}

int Multisegment::degree() const {
  int n = 0;
  for (const auto& s : segs_) n += s.length();
  return n;
}

std::string Multisegment::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < segs_.size(); ++i) {
    if (i) out += ", ";
    out += segs_[i].str();
  }
  return out + "}";
}

Multisegment Multisegment::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.size() < 2 || t.front() != '{' || t.back() != '}')
    throw ValidationError("multisegment must be enclosed in braces: '" + text + "'");
  t = t.substr(1, t.size() - 2);
  std::vector<Segment> segs;
  std::size_t pos = 0;
  while (pos < t.size()) {
    if (t[pos] != '[') throw ValidationError("expected '[' in multisegment '" + text + "'");
    auto close = t.find(']', pos);
    if (close == std::string::npos) throw ValidationError("unterminated segment in '" + text + "'");
    std::string body = t.substr(pos + 1, close - pos - 1);
    auto dots = body.find("..");
    if (dots == std::string::npos) throw ValidationError("segment '" + body + "' lacks '..'");
    HalfInt s = HalfInt::parse(body.substr(0, dots));
    HalfInt e = HalfInt::parse(body.substr(dots + 2));
    auto comma = t.find(',', close);
    std::size_t stop = comma == std::string::npos ? t.size() : comma;
    std::string rho = t.substr(close + 1, stop - close - 1);
    if (rho.empty()) rho = "rho";
    segs.emplace_back(rho, s, e);
    pos = comma == std::string::npos ? t.size() : comma + 1;
  }
  return Multisegment(std::move(segs));
}

std::vector<SupportPoint> support(const Multisegment& m) {
  std::vector<SupportPoint> out;
  for (const auto& s : m.segments())
    for (HalfInt x : segment_elements(s)) out.emplace_back(s.rho, x);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Ascending segment [lo, hi].
struct Interval {
  HalfInt lo, hi;
};

std::vector<Interval> dual_one_label(std::vector<Interval> segs) {
  std::vector<Interval> out;
  while (!segs.empty()) {
    HalfInt e = segs.front().hi;
    for (const auto& s : segs) e = std::max(e, s.hi);
    std::vector<std::size_t> chain;
    std::optional<HalfInt> prev_lo;
    for (HalfInt level = e;; level = level - 1) {
      std::optional<std::size_t> best;
      for (std::size_t i = 0; i < segs.size(); ++i) {
        if (segs[i].hi != level) continue;
        if (prev_lo && !(segs[i].lo < *prev_lo)) continue;
        if (!best || segs[i].lo > segs[*best].lo) best = i;
      }
      if (!best) break;
      chain.push_back(*best);
      prev_lo = segs[*best].lo;
    }
    int r = static_cast<int>(chain.size());
    out.push_back({e - (r - 1), e});
    for (auto i : chain) segs[i].hi = segs[i].hi - 1;
    std::vector<Interval> rest;
    for (const auto& s : segs)
      if (s.hi >= s.lo) rest.push_back(s);
    segs = std::move(rest);
  }
  return out;
}

}  // namespace

Multisegment mw_dual(const Multisegment& m) {
  std::map<std::string, std::vector<Interval>> by_label;
  for (const auto& s : m.segments()) by_label[s.rho].push_back({s.end, s.start});
  std::vector<Segment> out;
  for (auto& [rho, segs] : by_label)
    for (const auto& iv : dual_one_label(std::move(segs))) out.emplace_back(rho, iv.hi, iv.lo);
  return Multisegment(std::move(out));
}

}  // namespace mwcomb
