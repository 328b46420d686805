#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mwcomb/groth.hpp"
#include "mwcomb/params.hpp"

namespace mwcomb {

struct TraceStep {
  std::string block;  // quad expanded at this step
  std::string rest;   // remaining quads
  std::string which;  // "elementary" or "expand"
  int depth = 0;
};

struct Resolution {
  Parameter psi;
  GrothExpr expr;
  std::vector<TraceStep> trace;
  std::vector<PeelPoint> E;  // empty unless domination was needed
  Parameter psi_tilde;

  nlohmann::ordered_json to_json() const;
};

// One level: the middle atoms are truncated ladders, not resolved further.
GrothExpr resolve_block(const Quad& q);

// Requires is_discrete_diagonal(psi). Full recursion down to words of
// segments and elementary ladders.
Resolution resolve_param(const Parameter& psi);

Resolution resolve_general(const Parameter& psi, DominationRule rule = DominationRule::MinimalShift);

// Throws IdentityFailure if some term has the wrong total size.
void check_degree(const GrothExpr& e, int n, const LabelTable& labels);

struct CancellationReport {
  struct Entry {
    std::string op;  // "jac", "jac2", "theta"
    HalfInt x;
    bool vanished;
    std::size_t terms;
  };
  std::vector<Entry> entries;
  bool all_vanish() const;
  nlohmann::ordered_json to_json() const;
};

// Checks the vanishing statements for a single-block expansion:
// Jac_x = 0 off [zB, zA], Jac_{x,x} = 0 everywhere, Jac^theta_{zC} = 0 for C in ]B+1, A].
CancellationReport verify_cancellation(const Quad& q, const GrothExpr& expr);

}  // namespace mwcomb
