#pragma once

#include <set>
#include <string>
#include <vector>

namespace mwcomb {

struct Composition {
  std::vector<int> parts;

  int n() const;
  // Partial sums p_1 < ... < p_j inside {1..n-1}; j is the corank.
  std::vector<int> boundaries() const;
  // Complement of the boundaries in {1..n-1}.
  std::vector<int> delta() const;
  int corank() const { return static_cast<int>(parts.size()) - 1; }
  Composition reversed() const;
  std::string str() const;
  static Composition from_boundaries(int n, const std::vector<int>& bs);
  bool operator==(const Composition&) const = default;
};

std::vector<Composition> compositions(int n);

// Mp refines M by splitting exactly one part; the sign of e^{Mp} against e^M ^ e_m.
int xi_sign(const Composition& Mp, const Composition& M);

bool check_nilpotent(int n);
bool check_theta_sign(int n);

// Homology ranks indexed by degree 0..|Delta|. Terms are subsets S with
// Dm <= S <= Dpm placed in degree |Delta| - |S|.
std::vector<int> subset_complex_homology(const std::set<int>& Delta, const std::set<int>& Dm, const std::set<int>& Dpm);

// Ranks predicted by the exactness dichotomy.
std::vector<int> expected_homology(const std::set<int>& Delta, const std::set<int>& Dm, const std::set<int>& Dpm);

}  // namespace mwcomb
