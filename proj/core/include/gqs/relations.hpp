#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "gqs/algebra.hpp"
#include "gqs/grading.hpp"

namespace gqs {

// One creation/annihilation pair. `plus` is omega(minus) including the scale.
struct CaoPair {
  std::string label;  // base name, e.g. "a_1" or "B_2"
  SuperMatrix minus;
  SuperMatrix plus;
  int parity = 0;
  ExactScalar scaling = ExactScalar(1);
  int minus_index = -1;  // basis index in the model, -1 for hand-built sets
  int plus_index = -1;
};

// Operators are numbered 2*i (x_i^-) and 2*i+1 (x_i^+), which orders them by
// (pair index, sign) with - before +.
struct CaoSet {
  std::vector<CaoPair> pairs;

  int N() const { return static_cast<int>(pairs.size()); }
  int op_count() const { return 2 * N(); }
  const SuperMatrix& op(int a) const { return a % 2 ? pairs[a / 2].plus : pairs[a / 2].minus; }
  int op_parity(int a) const { return pairs[a / 2].parity; }
  // "a_1^-", "B_2^+", ...
  std::string op_name(int a) const;
  std::string op_latex(int a) const;
  bool all_odd() const;
};

CaoSet cao_set(const AlgebraModel& model, const Grading& grading);

struct TripleKey {
  int a = 0, b = 0, c = 0;  // [[ [[x_a, x_b]], x_c ]] with a <= b
  friend auto operator<=>(const TripleKey&, const TripleKey&) = default;
};

struct RelationSet {
  int N = 0;
  // Canonical bracket symbols [[x_a, x_b]] with a <= b, in lexicographic order.
  std::vector<std::pair<int, int>> pair_symbols;
  // Reduced echelon basis of linear relations among the pair symbols.
  std::vector<std::vector<ExactScalar>> quadratic;
  // Expansion of every triple bracket in the operators x_0..x_{2N-1}.
  std::map<TripleKey, BasisExpansion> triple;
};

// Throws std::logic_error if a triple bracket leaves the span of the operators.
RelationSet generate_relations(const CaoSet& caos);

// True iff the operators and their pairwise brackets span the whole algebra.
bool generation_check(const AlgebraModel& model, const CaoSet& caos);

// 64-bit FNV-1a over a canonical text rendering of the relation set.
std::uint64_t relation_digest(const RelationSet& relations);
std::string digest_hex(std::uint64_t digest);

std::string relations_text(const RelationSet& relations, const CaoSet& caos);
std::string relations_latex(const RelationSet& relations, const CaoSet& caos);

}  // namespace gqs
