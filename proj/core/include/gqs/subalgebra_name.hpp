#pragma once

#include <compare>
#include <string>
#include <vector>

namespace gqs {

// One simple summand of a regular subalgebra.
//   SL       sl(p|q) with p >= q; q = 0 is the Lie algebra sl(p)
//   BLie     B_p = so(2p+1)
//   CLie     C_p = sp(2p)
//   DLie     D_p = so(2p)
//   BSuper   B(p|q) = osp(2p+1|2q), q >= 1
//   CSuper   C(p) = osp(2|2p-2)
//   DSuper   D(p|q) = osp(2p|2q), p >= 2, q >= 1
enum class SummandType { SL, BLie, CLie, DLie, BSuper, CSuper, DSuper };

struct Summand {
  SummandType type = SummandType::SL;
  int p = 0;
  int q = 0;

  std::string str() const;
  friend auto operator<=>(const Summand&, const Summand&) = default;
};

// Standard isomorphisms, producing zero or more canonical summands:
// sl(k|l) = sl(l|k), sl(1) = 0, B_1 = C_1 = sl(2), B_2 = C_2, D_1 = 0,
// D_2 = sl(2)+sl(2), D_3 = sl(4), B(m|0) = B_m, D(m|0) = D_m, D(0|n) = C_n,
// D(1|n) = C(n+1), C(2) = sl(2|1).
std::vector<Summand> normalize_sl(int k, int l);
std::vector<Summand> normalize_b_lie(int a);
std::vector<Summand> normalize_c_lie(int b);
std::vector<Summand> normalize_d_lie(int a);
std::vector<Summand> normalize_b_super(int a, int b);
std::vector<Summand> normalize_c_super(int c);
std::vector<Summand> normalize_d_super(int a, int b);

struct SubalgebraName {
  std::vector<Summand> summands;  // sorted
  int cartan_excess = 0;

  void add(const std::vector<Summand>& parts);
  // "H+sl(2)+B(1|1)"; just "H" when there is no semisimple part.
  std::string str() const;
  // Summands only; the Cartan part is the same for every regular subalgebra.
  std::string key() const;

  friend bool operator==(const SubalgebraName& a, const SubalgebraName& b) { return a.summands == b.summands; }
  friend bool operator<(const SubalgebraName& a, const SubalgebraName& b) { return a.summands < b.summands; }
};

}  // namespace gqs
