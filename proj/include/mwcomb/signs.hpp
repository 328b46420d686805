#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "mwcomb/params.hpp"

namespace mwcomb {

enum class Which { W, U, Empty };
std::string which_name(Which w);

struct ZPair {
  int first;   // block instance ids
  int second;
  Which cls;   // W or U
};

struct ZSets {
  std::vector<ZPair> Z;
  std::vector<ZPair> ZW;
  std::vector<ZPair> ZU;
  const std::vector<ZPair>& get(Which w) const;
};

// Parity gate: same label, sup(a,a'), sup(b,b') even, inf(a,a'), inf(b,b') odd.
bool z_gate(const JordanBlock& x, const JordanBlock& y);
ZSets z_sets(const Parameter& psi);
int z_sign(const Parameter& psi, Which w);

struct SignChar {
  Which which = Which::Empty;
  std::map<int, int> values;  // instance id -> +1/-1
};

SignChar eps_char(const Parameter& psi, Which w);
int eval_at_z(const SignChar& sc);
int eval_at_c2(const SignChar& sc, const Parameter& psi);

enum class ASignConvention { UnorderedDistinct, OrderedDistinctHalved, OrderedDistinctFull, UnorderedWithSelf };
std::string convention_name(ASignConvention c);
std::vector<ASignConvention> all_a_conventions();
int a_sign(const Parameter& psi, ASignConvention c = ASignConvention::UnorderedDistinct);

struct ThetaRatio {
  long half_sum_exponent = 0;
  int half_sum = 1;      // explicit formula
  int a_chain = 1;       // a(psi) a(psi^1) a(psi^2) a(psi_imp,imp)
  int z_product = 1;     // z_W z_U, the exported value
  bool consistent() const { return half_sum == z_product; }
};

ThetaRatio theta_ratio_WU(const Parameter& psi, ASignConvention c = ASignConvention::UnorderedDistinct);
int a_chain(const Parameter& psi, ASignConvention c);

int r_ratio_sign(const JordanBlock& x, const JordanBlock& y);

struct JValue {
  int j0 = 0;
  int j = 0;
  std::vector<int> J;  // instance ids in J_{<=d}
};

JValue j_psi(const Parameter& psi, const std::string& rho, int d);
int beta_sign(const Parameter& psi, const std::string& rho, int d);

struct BetaConvention {
  enum class Rounding { Floor, Ceil } rounding = Rounding::Floor;
  enum class PairTerm { OddDOnly, Always, Never } pair_term = PairTerm::Always;
  std::string name() const;
};

std::vector<BetaConvention> all_beta_conventions();
int beta_closed_form(const Parameter& psi, const std::string& rho, int d, const BetaConvention& c);

// Rendered table for the CLI.
struct SignsTable {
  struct Row {
    int id;
    std::string block;
    int eps_W, eps_U, eps_E;
  };
  std::vector<Row> rows;
  int zW = 1, zU = 1, zE = 1;
  int a_psi = 1, a_psi1 = 1, a_psi2 = 1, a_impimp = 1;
  ThetaRatio ratio;
  int atz_W = 1, atz_U = 1, atz_E = 1;
  int atc2_W = 1, atc2_U = 1, atc2_E = 1;

  std::string text() const;
  nlohmann::ordered_json to_json() const;
};

SignsTable signs_table(const Parameter& psi);

}  // namespace mwcomb
