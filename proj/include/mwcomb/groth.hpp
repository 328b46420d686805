#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "mwcomb/core.hpp"
#include "mwcomb/ladders.hpp"

namespace mwcomb {

// An atom is a ladder; a one-row ladder is a plain segment representation.
using Atom = Ladder;
using Word = std::vector<Atom>;

Atom segment_atom(const Segment& s);
Atom ladder_atom(const Quad& q);

bool atoms_linked(const Atom& x, const Atom& y);
// Drops empty atoms and returns the lexicographically least rearrangement
// reachable by swapping adjacent unlinked atoms.
Word canonicalize(Word w);

std::string atom_str(const Atom& a);
std::string word_str(const Word& w);

int total_size(const Word& w, const LabelTable& labels);
Multisegment gl_multisegment(const Word& w);

class GrothExpr {
 public:
  GrothExpr() = default;
  static GrothExpr of(const Word& w, long long coeff = 1);

  void add(const Word& w, long long coeff);  // w is canonicalized here
  GrothExpr& operator+=(const GrothExpr& o);
  GrothExpr operator*(long long k) const;

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  long long coeff(const Word& w) const;
  const std::map<Word, long long>& terms() const { return terms_; }

  std::string str() const;
  nlohmann::ordered_json to_json() const;

  bool operator==(const GrothExpr&) const = default;

 private:
  std::map<Word, long long> terms_;
};

GrothExpr operator+(GrothExpr a, const GrothExpr& b);
GrothExpr operator-(GrothExpr a, const GrothExpr& b);

GrothExpr induce(const std::vector<GrothExpr>& parts);

GrothExpr jac_left(const std::string& rho, HalfInt x, const GrothExpr& e);
GrothExpr jac_right(const std::string& rho, HalfInt x, const GrothExpr& e);
GrothExpr jac_theta(const std::string& rho, HalfInt x, const GrothExpr& e);
// Applies x_1 first.
GrothExpr jac_theta_seq(const std::string& rho, const std::vector<HalfInt>& xs, const GrothExpr& e);

}  // namespace mwcomb
