#pragma once

#include <string>
#include <vector>

#include "mwcomb/core.hpp"

namespace mwcomb {

struct JordanBlock {
  std::string rho;
  int a = 1;
  int b = 1;
  int id = 0;  // stable instance id; repeated blocks get distinct ids

  bool same_triple(const JordanBlock& o) const { return rho == o.rho && a == o.a && b == o.b; }
  bool operator==(const JordanBlock&) const = default;
};

struct Quad {
  std::string rho;
  HalfInt A;
  HalfInt B;
  int zeta = 1;

  Quad() = default;
  // Normalizes zeta to +1 when B = 0; rejects A < B and A - B, A + B not integral.
  Quad(std::string r, HalfInt A_, HalfInt B_, int z);

  int length() const { return (A - B).to_int(); }  // A - B
  bool elementary() const { return A == B; }
  std::string str() const;
  bool operator==(const Quad&) const = default;
};

class Parameter {
 public:
  Parameter() = default;

  LabelTable labels;
  std::vector<JordanBlock> blocks;

  // Adds a label; rejects duplicates and eta = -1 with chi = -1.
  void add_label(const CuspidalLabel& l);
  // Appends an instance with a fresh id.
  const JordanBlock& add_block(const std::string& rho, int a, int b);

  int n() const;
  int d(const std::string& rho) const;
  const CuspidalLabel& label(const std::string& rho) const;

  bool operator==(const Parameter&) const = default;
};

Quad to_quad(const JordanBlock& bl);
JordanBlock from_quad(const Quad& q);

Parameter diag_restriction(const Parameter& psi);

bool is_elementary(const Parameter& psi);
bool is_discrete_diagonal(const Parameter& psi);
bool is_discrete(const Parameter& psi);

// -1, 0, +1. Throws ValidationError on different labels.
int block_order_cmp(const Quad& q, const Quad& qp);
// Total order across labels: label name first, then block_order_cmp.
bool quad_less(const Quad& q, const Quad& qp);

enum class DominationRule { MinimalShift, ShiftPlusTen };

struct PeelPoint {
  std::string rho;
  HalfInt x;
  bool operator==(const PeelPoint&) const = default;
};

struct Domination {
  Parameter psi_tilde;
  std::vector<PeelPoint> E;
};

Domination dominate(const Parameter& psi, DominationRule rule = DominationRule::MinimalShift);

Parameter psi_sharp(const Parameter& psi, const std::string& rho, int d);

struct ImpVariants {
  Parameter psi2_imp;
  Parameter psi1_imp;
  Parameter psi_impimp;
};

ImpVariants imp_variants(const Parameter& psi);

bool in_Psi_H(const Parameter& psi, int n);

HalfInt reducibility_point(const Parameter& phi, const std::string& rho);

}  // namespace mwcomb
