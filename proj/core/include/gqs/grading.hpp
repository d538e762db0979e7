#pragma once

#include <set>
#include <string>
#include <vector>

#include "gqs/algebra.hpp"
#include "gqs/root_system.hpp"

namespace gqs {

struct SubalgebraSpan {
  std::vector<int> basis_indices;  // sorted; always contains the Cartan indices
  SubalgebraName name;

  bool contains(int index) const;
};

struct ModuleBlock {
  std::vector<int> basis_indices;  // sorted root-vector indices
  int omega_partner = -1;          // index of the block omega maps this one onto
};

struct Grading {
  SubalgebraSpan g0;
  std::vector<ModuleBlock> blocks;
  std::vector<int> block_grades;  // parallel to blocks
  std::vector<int> grade;         // per basis index
  int length = 0;

  std::vector<int> subspace(int k) const;
  int N() const { return static_cast<int>(subspace(-1).size()); }
};

SubalgebraSpan span_of_roots(const AlgebraModel& model, const std::vector<Root>& roots);
SubalgebraSpan delete_to_subalgebra(const AlgebraModel& model, const Diagram& diagram, const std::set<int>& deleted);

std::vector<ModuleBlock> decompose_modules(const AlgebraModel& model, const SubalgebraSpan& g0);

// Merges omega-invariant blocks into g0 until none are left. Throws
// std::logic_error if an enlarged g0 is not a subalgebra or cannot be named.
std::pair<SubalgebraSpan, std::vector<ModuleBlock>> absorb_invariant_modules(const AlgebraModel& model,
                                                                             SubalgebraSpan g0,
                                                                             std::vector<ModuleBlock> blocks);

struct SearchStats {
  long nodes = 0;                // search-tree nodes visited
  long complete = 0;             // assignments satisfying closure
  long rejected_generation = 0;  // complete assignments failing G_{+-2} or G_0 generation
};

// All gradings of the form G_{-2}+G_{-1}+G_0+G_{+1}+G_{+2} built from the
// blocks, one representative per global sign (the first block is negative).
std::vector<Grading> search_gradings(const AlgebraModel& model, const SubalgebraSpan& g0,
                                     const std::vector<ModuleBlock>& blocks, SearchStats* stats = nullptr);

Grading make_grading(const AlgebraModel& model, const SubalgebraSpan& g0, const std::vector<ModuleBlock>& blocks,
                     const std::vector<int>& block_grades);

// Grading induced by a node deletion on an ordinary diagram: the grade of a
// root is the sum of its simple coordinates at the deleted nodes. It need
// not have the required shape; validate_grading reports why.
Grading deletion_grading(const AlgebraModel& model, const SimpleSystem& system, const std::set<int>& deleted);

struct GradingValidation {
  bool direct_sum = false;
  bool closure = false;
  bool omega_pairing = false;
  bool g2_generated = false;
  bool g0_generated = false;       // G_0 within [[G_{+1},G_{-1}]] + H
  bool h_in_g1_bracket = false;    // flag only: H within [[G_{+1},G_{-1}]]
  std::vector<std::string> failures;

  bool ok() const { return direct_sum && closure && omega_pairing && g2_generated && g0_generated; }
};

// Checks a grading against the explicit matrices (not the block tables used
// by the search).
GradingValidation validate_grading(const AlgebraModel& model, const Grading& grading);

}  // namespace gqs
