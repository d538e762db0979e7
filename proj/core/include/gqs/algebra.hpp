#pragma once

#include <map>
#include <string>
#include <vector>

#include "gqs/linear_algebra.hpp"
#include "gqs/super_matrix.hpp"

namespace gqs {

enum class FamilyTag { A, B, B0, C, D };

std::string to_string(FamilyTag tag);
FamilyTag parse_family_tag(const std::string& text);

struct Family {
  FamilyTag tag = FamilyTag::A;
  int m = 0;
  int n = 0;

  static Family A(int m, int n) { return {FamilyTag::A, m, n}; }
  static Family B(int m, int n) { return {FamilyTag::B, m, n}; }
  static Family B0(int n) { return {FamilyTag::B0, 0, n}; }
  static Family C(int n) { return {FamilyTag::C, 0, n}; }
  static Family D(int m, int n) { return {FamilyTag::D, m, n}; }

  // Throws std::invalid_argument when the ranks are out of bounds.
  void validate() const;

  // Lengths of the epsilon / delta coefficient vectors of roots.
  int eps_count() const;
  int delta_count() const;
  int rank() const;
  int matrix_size() const;
  long expected_dimension() const;
  std::string name() const;

  friend auto operator<=>(const Family&, const Family&) = default;
};

struct Root {
  std::vector<int> eps;
  std::vector<int> delta;

  Root() = default;
  Root(int ne, int nd) : eps(ne, 0), delta(nd, 0) {}
  Root(std::vector<int> e, std::vector<int> d) : eps(std::move(e)), delta(std::move(d)) {}

  // Unit roots; indices are 1-based.
  static Root eps_unit(int ne, int nd, int i, int coeff = 1);
  static Root delta_unit(int ne, int nd, int k, int coeff = 1);

  bool is_zero() const;
  bool is_odd() const;

  Root operator-() const;
  Root& operator+=(const Root& o);
  Root& operator-=(const Root& o);
  Root& operator*=(int c);
  friend Root operator+(Root a, const Root& b) { return a += b; }
  friend Root operator-(Root a, const Root& b) { return a -= b; }
  friend Root operator*(int c, Root a) { return a *= c; }
  friend auto operator<=>(const Root&, const Root&) = default;

  // e.g. "ε1-δ2", "2δ1", "0".
  std::string str() const;
};

struct RootVector {
  Root root;
  int parity = 0;
  SuperMatrix matrix;
};

// omega(e_alpha) = sign * e_{-alpha}; Cartan elements are fixed.
struct ScaledBasis {
  int index = -1;
  ExactScalar scale;
};

// Basis indices: 0..rank_h-1 are Cartan elements, then the root vectors in
// construction order.
class AlgebraModel {
 public:
  const Family& family() const { return family_; }
  int matrix_size() const { return size_; }
  const ParityLayout& layout() const { return theta_; }
  const std::vector<SuperMatrix>& cartan() const { return cartan_; }
  const std::vector<RootVector>& root_vectors() const { return roots_; }

  int dimension() const { return static_cast<int>(cartan_.size() + roots_.size()); }
  int cartan_dim() const { return static_cast<int>(cartan_.size()); }
  bool is_cartan(int index) const { return index < cartan_dim(); }
  const SuperMatrix& basis_matrix(int index) const;
  int basis_parity(int index) const;
  // Root of a basis element (zero root for Cartan elements).
  Root basis_root(int index) const;
  // Basis index of the root vector for alpha, or -1.
  int index_of_root(const Root& alpha) const;

  ScaledBasis omega(int index) const;
  const std::vector<ScaledBasis>& omega_table() const { return omega_; }
  // Entrywise omega on an arbitrary matrix.
  SuperMatrix omega_matrix(const SuperMatrix& x) const;

  // Structure constants: [[x_i, x_j]] expanded over the basis.
  const BasisExpansion& bracket(int i, int j) const;
  SuperMatrix bracket_matrix(int i, int j) const;

  // alpha(h) for a diagonal matrix h.
  ExactScalar evaluate_root(const Root& alpha, const SuperMatrix& h) const;

  const SpanSolver& basis_solver() const { return solver_; }
  BasisExpansion expand(const SuperMatrix& x) const;

 private:
  friend AlgebraModel build(const Family& family);

  Family family_;
  int size_ = 0;
  ParityLayout theta_;
  std::vector<int> omega_diag_;
  std::vector<int> eps_row_;
  std::vector<int> delta_row_;
  std::vector<SuperMatrix> cartan_;
  std::vector<RootVector> roots_;
  std::map<Root, int> root_index_;
  std::vector<ScaledBasis> omega_;
  std::vector<std::vector<BasisExpansion>> structure_;
  SpanSolver solver_;
};

AlgebraModel build(const Family& family);

ScaledBasis omega(const AlgebraModel& model, int index);
BasisExpansion bracket_in_basis(const AlgebraModel& model, int i, int j);

}  // namespace gqs
