#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mwcomb {

// Bad input: malformed text, violated preconditions. Maps to exit status 1.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A mathematical identity that should hold did not. Maps to exit status 2.
struct IdentityFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// x stored as 2x.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt of(int v) { return HalfInt(2 * v); }
  static constexpr HalfInt from_twice(int t) { return HalfInt(t); }

  constexpr int twice() const { return t_; }
  constexpr bool is_integer() const { return t_ % 2 == 0; }
  // Requires is_integer().
  int to_int() const;
  // Floor of the value.
  constexpr int floor() const { return t_ >= 0 ? t_ / 2 : -((-t_ + 1) / 2); }

  constexpr HalfInt operator-() const { return HalfInt(-t_); }
  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(t_ + o.t_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(t_ - o.t_); }
  constexpr HalfInt operator+(int k) const { return HalfInt(t_ + 2 * k); }
  constexpr HalfInt operator-(int k) const { return HalfInt(t_ - 2 * k); }
  constexpr HalfInt& operator+=(HalfInt o) { t_ += o.t_; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) { t_ -= o.t_; return *this; }
  constexpr auto operator<=>(const HalfInt&) const = default;

  // True when this - o is an integer.
  constexpr bool same_family(HalfInt o) const { return ((t_ - o.t_) % 2) == 0; }
  constexpr HalfInt abs() const { return HalfInt(t_ < 0 ? -t_ : t_); }

  std::string str() const;
  static HalfInt parse(const std::string& s);

 private:
  constexpr explicit HalfInt(int t) : t_(t) {}
  int t_ = 0;
};

constexpr HalfInt operator*(int sign, HalfInt h) {
  return HalfInt::from_twice(sign * h.twice());
}

struct CuspidalLabel {
  std::string name;
  int d = 1;
  std::optional<int> eta;  // +1, -1 or unknown
  int chi = 1;
  bool operator==(const CuspidalLabel&) const = default;
};

using LabelTable = std::map<std::string, CuspidalLabel>;

// The elements run from start towards end, either direction.
struct Segment {
  std::string rho;
  HalfInt start;
  HalfInt end;

  Segment() = default;
  Segment(std::string r, HalfInt s, HalfInt e);

  int length() const;
  bool decreasing() const { return start >= end; }
  Segment normalized() const;  // descending orientation
  std::string str() const;     // "[2..0]rho"
  auto operator<=>(const Segment&) const = default;
};

std::vector<HalfInt> segment_elements(const Segment& seg);

class Multisegment {
 public:
  Multisegment() = default;
  explicit Multisegment(std::vector<Segment> segs);

  const std::vector<Segment>& segments() const { return segs_; }
  bool empty() const { return segs_.empty(); }
  std::size_t size() const { return segs_.size(); }
  int degree() const;

  std::string str() const;
  static Multisegment parse(const std::string& text);

  bool operator==(const Multisegment&) const = default;

 private:
  std::vector<Segment> segs_;  // canonical: descending, sorted
};

using SupportPoint = std::pair<std::string, HalfInt>;

// Sorted multiset.
std::vector<SupportPoint> support(const Multisegment& m);

// Zelevinsky involution by the greedy maximal-chain procedure, per label.
Multisegment mw_dual(const Multisegment& m);

}  // namespace mwcomb
