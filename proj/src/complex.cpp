#include "mwcomb/complex.hpp"

#include <algorithm>
#include <map>

#include <gmpxx.h>

#include "mwcomb/core.hpp"

namespace mwcomb {

int Composition::n() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

std::vector<int> Composition::boundaries() const {
  std::vector<int> out;
  int s = 0;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) out.push_back(s += parts[i]);
  return out;
}

std::vector<int> Composition::delta() const {
  auto b = boundaries();
  std::vector<int> out;
  for (int k = 1; k < n(); ++k)
    if (!std::binary_search(b.begin(), b.end(), k)) out.push_back(k);
  return out;
}

Composition Composition::reversed() const {
  Composition c = *this;
  std::reverse(c.parts.begin(), c.parts.end());
  return c;
}

std::string Composition::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

Composition Composition::from_boundaries(int n, const std::vector<int>& bs) {
  std::vector<int> s = bs;
  std::sort(s.begin(), s.end());
  Composition c;
  int prev = 0;
  for (int b : s) {
    if (b <= prev || b >= n) throw ValidationError("bad boundary set for n = " + std::to_string(n));
    c.parts.push_back(b - prev);
    prev = b;
  }
  c.parts.push_back(n - prev);
  return c;
}

std::vector<Composition> compositions(int n) {
  if (n < 1) throw ValidationError("n must be >= 1");
  std::vector<Composition> out;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> bs;
    for (int k = 1; k < n; ++k)
      if (mask & (1u << (k - 1))) bs.push_back(k);
    out.push_back(Composition::from_boundaries(n, bs));
  }
  return out;
}

int xi_sign(const Composition& Mp, const Composition& M) {
  if (Mp.n() != M.n()) throw ValidationError("compositions of different size");
  auto bp = Mp.boundaries(), b = M.boundaries();
  if (bp.size() != b.size() + 1 || !std::includes(bp.begin(), bp.end(), b.begin(), b.end()))
    throw ValidationError(Mp.str() + " is not a one-step refinement of " + M.str());
  std::vector<int> extra;
  std::set_difference(bp.begin(), bp.end(), b.begin(), b.end(), std::back_inserter(extra));
  int m = extra.front();
  long above = std::count_if(b.begin(), b.end(), [m](int p) { return p > m; });
  return above % 2 ? -1 : 1;
}

bool check_nilpotent(int n) {
  for (const auto& M : compositions(n)) {
    auto b = M.boundaries();
    std::vector<int> free;
    for (int k : M.delta()) free.push_back(k);
    for (std::size_t i = 0; i < free.size(); ++i)
      for (std::size_t k = i + 1; k < free.size(); ++k) {
        auto with = [&](std::vector<int> add) {
          auto v = b;
          v.insert(v.end(), add.begin(), add.end());
          return Composition::from_boundaries(n, v);
        };
        Composition M1 = with({free[i]}), M2 = with({free[k]}), M2p = with({free[i], free[k]});
        if (xi_sign(M2p, M1) * xi_sign(M1, M) + xi_sign(M2p, M2) * xi_sign(M2, M) != 0) return false;
      }
  }
  return true;
}

bool check_theta_sign(int n) {
  auto fl = [](int j) { return j / 2; };
  for (const auto& M : compositions(n)) {
    int j = M.corank();
    auto b = M.boundaries();
    for (int m : M.delta()) {
      auto v = b;
      v.push_back(m);
      Composition Mp = Composition::from_boundaries(n, v);
      int lhs = (fl(j) % 2 ? -1 : 1) * xi_sign(Mp, M);
      int rhs = (fl(j + 1) % 2 ? -1 : 1) * xi_sign(Mp.reversed(), M.reversed());
      if (lhs != rhs) return false;
    }
  }
  return true;
}

namespace {

using Matrix = std::vector<std::vector<mpq_class>>;

int rank_of(Matrix a) {
  int rows = static_cast<int>(a.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(a[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[r]);
    for (int i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      mpq_class f = a[i][c] / a[r][c];
      for (int k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

}  // namespace

std::vector<int> subset_complex_homology(const std::set<int>& Delta, const std::set<int>& Dm, const std::set<int>& Dpm) {
  if (!std::includes(Dpm.begin(), Dpm.end(), Dm.begin(), Dm.end()) ||
      !std::includes(Delta.begin(), Delta.end(), Dpm.begin(), Dpm.end()))
    throw ValidationError("subset complex needs Dm <= Dpm <= Delta");
  std::vector<int> freev(Dpm.size() - Dm.size());
  std::set_difference(Dpm.begin(), Dpm.end(), Dm.begin(), Dm.end(), freev.begin());
  int f = static_cast<int>(freev.size());
  int N = static_cast<int>(Delta.size());
  if (f > 20) throw ValidationError("subset complex too large");

  // Terms indexed by the chosen subset of freev; degree = N - |Dm| - popcount.
  std::map<int, std::vector<unsigned>> by_degree;
  for (unsigned mask = 0; mask < (1u << f); ++mask)
    by_degree[N - static_cast<int>(Dm.size()) - __builtin_popcount(mask)].push_back(mask);

  auto sign_for = [&](unsigned mask, int bit) {
    // Boundaries are Delta \ S; count those above the removed element.
    int m = freev[bit];
    std::set<int> S(Dm.begin(), Dm.end());
    for (int i = 0; i < f; ++i)
      if (mask & (1u << i)) S.insert(freev[i]);
    int above = 0;
    for (int k : Delta)
      if (k > m && !S.count(k)) ++above;
    return above % 2 ? -1 : 1;
  };

  // d_k: C_k -> C_{k+1}
  std::map<int, Matrix> d;
  for (const auto& [deg, src] : by_degree) {
    auto it = by_degree.find(deg + 1);
    if (it == by_degree.end()) continue;
    const auto& dst = it->second;
    std::map<unsigned, int> pos;
    for (std::size_t i = 0; i < dst.size(); ++i) pos[dst[i]] = static_cast<int>(i);
    Matrix mtx(dst.size(), std::vector<mpq_class>(src.size(), 0));
    for (std::size_t j = 0; j < src.size(); ++j)
      for (int bit = 0; bit < f; ++bit)
        if (src[j] & (1u << bit)) mtx[pos[src[j] & ~(1u << bit)]][j] += sign_for(src[j], bit);
    d[deg] = std::move(mtx);
  }
  for (const auto& [deg, m1] : d) {
    auto it = d.find(deg + 1);
    if (it == d.end()) continue;
    const auto& m2 = it->second;
    for (std::size_t i = 0; i < m2.size(); ++i)
      for (std::size_t k = 0; k < m1[0].size(); ++k) {
        mpq_class s = 0;
        for (std::size_t j = 0; j < m1.size(); ++j) s += m2[i][j] * m1[j][k];
        if (s != 0) throw IdentityFailure("subset complex differential does not square to zero");
      }
  }
  std::vector<int> h(N + 1, 0);
  for (const auto& [deg, src] : by_degree) {
    int out_rank = d.count(deg) ? rank_of(d[deg]) : 0;
    int in_rank = d.count(deg - 1) ? rank_of(d[deg - 1]) : 0;
    h[deg] = static_cast<int>(src.size()) - out_rank - in_rank;
  }
  return h;
}

std::vector<int> expected_homology(const std::set<int>& Delta, const std::set<int>& Dm, const std::set<int>& Dpm) {
  std::vector<int> h(Delta.size() + 1, 0);
  if (Dm == Dpm) h[Delta.size() - Dm.size()] = 1;
  return h;
}

}  // namespace mwcomb
