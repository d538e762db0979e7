#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gqs/algebra.hpp"
#include "gqs/subalgebra_name.hpp"

namespace gqs {

// (eps_i, eps_j) = delta_ij, (delta_i, delta_j) = -delta_ij, (eps, delta) = 0.
long inner_product(const Root& a, const Root& b);

// All roots of the family, computed combinatorially (no matrices).
std::vector<Root> root_set(const Family& family);

struct SimpleSystem {
  Family family;
  std::vector<Root> simple_roots;
};

SimpleSystem distinguished_system(const Family& family);

// Odd reflection at the 1-based node `index`. Throws std::invalid_argument
// unless that simple root is odd and isotropic.
SimpleSystem odd_reflect(const SimpleSystem& system, int index);

// Every system reachable by odd reflections, distinct as sets of roots.
std::vector<SimpleSystem> reflection_closure(const Family& family);
// The closure with systems having isomorphic Dynkin diagrams identified; the
// distinguished system comes first.
std::vector<SimpleSystem> enumerate_simple_systems(const Family& family);

// Coordinates of a root in the simple basis (integers); nullopt when the
// root is outside the rational span.
std::optional<std::vector<long>> simple_coordinates(const SimpleSystem& system, const Root& root);
std::vector<Root> positive_roots(const SimpleSystem& system);
Root highest_root(const SimpleSystem& system);

enum class NodeKind { White, Gray, Black };
std::string to_string(NodeKind k);

struct DiagramNode {
  int label = 0;  // 1..rank, and 0 for the extension node
  Root root;
  NodeKind kind = NodeKind::White;
  long norm = 0;  // (alpha, alpha)
};

struct DiagramEdge {
  int a = 0;  // labels, a < b
  int b = 0;
  int multiplicity = 0;
  long product = 0;  // (alpha_a, alpha_b)
};

struct Diagram {
  Family family;
  std::vector<DiagramNode> nodes;  // sorted by label
  std::vector<DiagramEdge> edges;
  bool extended = false;
  std::optional<Root> lowest_root;

  const DiagramNode& node(int label) const;
  std::vector<int> labels() const;
};

Diagram diagram_of(const SimpleSystem& system, bool extended);

// Lexicographically minimal encoding of node kinds and the Gram matrix over
// all node orderings.
std::string canonical_form(const Diagram& diagram);

// O = white, X = gray, ● = black; edges drawn with - (single), = (double) or
// =k= for higher multiplicity. Deleted nodes are shown in brackets.
std::string render_ascii(const Diagram& diagram, const std::set<int>& deleted = {});

// Roots of the family lying in the Z-span of the generators.
std::vector<Root> regular_roots(const Family& family, const std::vector<Root>& generators);
// Names a closed root subsystem by splitting it into components.
SubalgebraName recognize_subsystem(const Family& family, const std::vector<Root>& roots);
// Names the regular subalgebra left after deleting nodes (by label).
SubalgebraName classify_components(const Diagram& diagram, const std::set<int>& deleted);
std::vector<Root> retained_roots(const Diagram& diagram, const std::set<int>& deleted);

// Rank of a set of integer vectors over Q.
int rational_rank(const std::vector<Root>& roots);

}  // namespace gqs
