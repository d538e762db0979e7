#pragma once

#include <string>
#include <vector>

#include "gqs/relations.hpp"

namespace gqs {

// term = coef * symbol, where the symbol is x_a, [[x_a,x_b]] or [[[[x_a,x_b]],x_c]].
struct RelationTerm {
  enum Kind { Single, Pair, Triple };
  ExactScalar coef;
  Kind kind = Single;
  int a = 0, b = 0, c = 0;
};

// A closed-form identity instance: the sum of its terms vanishes.
struct Identity {
  std::string family_label;  // which formula of the case it instantiates
  std::vector<RelationTerm> terms;
};

struct ClosedForm {
  std::string id;
  Family family;
  CaoSet caos;  // labelled and scaled as in the published formulas
  std::vector<Identity> identities;
  bool complete_set = true;  // the operators form a full CAO set of the algebra
};

// Known ids: sl1n, A1, A2, Adouble, A21R, GB3, pBose, pFermi, CS1, CS2.
const std::vector<std::string>& closed_form_ids();

// `position` selects the deleted node pair (i, i+1) for A21R (1..m+n).
// Throws std::invalid_argument for an unknown id or out-of-range ranks.
ClosedForm build_closed_form(const std::string& id, int m, int n, int position = 1);

std::string render_identity(const Identity& identity, const CaoSet& caos);

struct ClosedFormReport {
  std::string id;
  Family family;
  int position = 0;
  long instances = 0;
  long holding = 0;
  std::vector<std::string> failures;  // first few failing instances with residuals
  // Linear relation spans over bracket symbols, compared both ways.
  bool closed_in_generated = false;
  bool generated_in_closed = false;
  // generated_in_closed after adding the super-Jacobi consequences
  // [[P(ab),P(cd)]] of the closed relations.
  bool generated_in_jacobi_closure = false;
  bool generation = false;  // the operators generate the algebra (full CAO sets only)

  bool identities_hold() const { return instances > 0 && instances == holding; }
  bool complete() const { return closed_in_generated && generated_in_closed; }
  bool complete_with_jacobi() const { return closed_in_generated && generated_in_jacobi_closure; }
  bool passed() const { return identities_hold() && complete_with_jacobi(); }
};

ClosedFormReport verify_closed_form(const std::string& id, int m, int n, int position = 1);

// Every position for A21R, a single run otherwise.
std::vector<ClosedFormReport> verify_closed_form_all(const std::string& id, int m, int n);

}  // namespace gqs
