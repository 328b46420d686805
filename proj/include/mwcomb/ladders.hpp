#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mwcomb/core.hpp"
#include "mwcomb/params.hpp"

namespace mwcomb {

struct Row {
  HalfInt start;
  HalfInt end;
  int length() const { return (start - end).abs().twice() / 2 + 1; }
  auto operator<=>(const Row&) const = default;
};

// Oriented rows over one label. Rows are kept sorted by start.
struct Ladder {
  std::string rho;
  std::vector<Row> rows;

  Ladder() = default;
  Ladder(std::string r, std::vector<Row> rs);

  bool empty() const { return rows.empty(); }
  int degree() const;
  // Distinct starts, distinct ends, and the start order agrees with the end order.
  bool satisfies_ladder_condition() const;
  Multisegment multisegment() const;
  std::string str() const;
  auto operator<=>(const Ladder&) const = default;
};

// Rows [zeta(B+k) .. -zeta(A-k)], k = 0..A-B.
Ladder ladder_multisegment(const Quad& q);

// Column reading of the same tableau, as a canonical multisegment.
Multisegment tableau_cols(const Quad& q);

// Langlands data of Sp(b, St(a, rho)): b descending rows of length a.
Multisegment langlands_multisegment(const std::string& rho, int a, int b);

// nullopt is the zero representation; an empty ladder is the trivial one.
std::optional<Ladder> peel_left(HalfInt x, const Ladder& L);
std::optional<Ladder> peel_right(HalfInt x, const Ladder& L);

// Jacquet peels x = zeta(B+2), ..., zeta C applied to the ladder of (A, B+2, zeta).
Ladder trunc_ladder(const Quad& q, HalfInt C);

}  // namespace mwcomb
