#include "gqs/subalgebra_name.hpp"

#include <algorithm>

namespace gqs {

std::string Summand::str() const {
  const std::string P = std::to_string(p), Q = std::to_string(q);
  switch (type) {
    case SummandType::SL: return q == 0 ? "sl(" + P + ")" : "sl(" + P + "|" + Q + ")";
    case SummandType::BLie: return "B_" + P;
    case SummandType::CLie: return "C_" + P;
    case SummandType::DLie: return "D_" + P;
    case SummandType::BSuper: return "B(" + P + "|" + Q + ")";
    case SummandType::CSuper: return "C(" + P + ")";
    case SummandType::DSuper: return "D(" + P + "|" + Q + ")";
  }
  return "?";
}

std::vector<Summand> normalize_sl(int k, int l) {
  if (k < l) std::swap(k, l);
  if (l == 0 && k <= 1) return {};
  return {Summand{SummandType::SL, k, l}};
}

std::vector<Summand> normalize_b_lie(int a) {
  if (a <= 0) return {};
  if (a == 1) return normalize_sl(2, 0);
  if (a == 2) return normalize_c_lie(2);
  return {Summand{SummandType::BLie, a, 0}};
}

std::vector<Summand> normalize_c_lie(int b) {
  if (b <= 0) return {};
  if (b == 1) return normalize_sl(2, 0);
  return {Summand{SummandType::CLie, b, 0}};
}

std::vector<Summand> normalize_d_lie(int a) {
  if (a <= 1) return {};
  if (a == 2) return {Summand{SummandType::SL, 2, 0}, Summand{SummandType::SL, 2, 0}};
  if (a == 3) return normalize_sl(4, 0);
  return {Summand{SummandType::DLie, a, 0}};
}

std::vector<Summand> normalize_b_super(int a, int b) {
  if (b <= 0) return normalize_b_lie(a);
  return {Summand{SummandType::BSuper, std::max(a, 0), b}};
}

std::vector<Summand> normalize_c_super(int c) {
  if (c <= 1) return {};
  if (c == 2) return normalize_sl(2, 1);
  return {Summand{SummandType::CSuper, c, 0}};
}

std::vector<Summand> normalize_d_super(int a, int b) {
  if (b <= 0) return normalize_d_lie(a);
  if (a <= 0) return normalize_c_lie(b);
  if (a == 1) return normalize_c_super(b + 1);
  return {Summand{SummandType::DSuper, a, b}};
}

void SubalgebraName::add(const std::vector<Summand>& parts) {
  summands.insert(summands.end(), parts.begin(), parts.end());
  std::sort(summands.begin(), summands.end());
}

std::string SubalgebraName::key() const {
  std::string s;
  for (const auto& x : summands) {
    if (!s.empty()) s += "+";
    s += x.str();
  }
  return s;
}

std::string SubalgebraName::str() const {
  std::string k = key();
  return k.empty() ? "H" : "H+" + k;
}

}  // namespace gqs
