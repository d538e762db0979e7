#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "gqs/exact_scalar.hpp"
#include "gqs/super_matrix.hpp"

namespace gqs {

using SparseVector = std::map<int, ExactScalar>;

// y += a*x, dropping entries that cancel.
void axpy(SparseVector& y, const ExactScalar& a, const SparseVector& x);

// Row-major flattening: entry (j,k) goes to coordinate (j-1)*size + (k-1).
SparseVector flatten(const SuperMatrix& m);

struct BasisExpansion {
  std::map<int, ExactScalar> coefficients;
  bool residual_zero = true;

  bool is_zero() const { return residual_zero && coefficients.empty(); }
  friend bool operator==(const BasisExpansion&, const BasisExpansion&) = default;
};

// Incremental exact row reduction. Keeps a fully reduced echelon basis of the
// span together with the combination of inserted vectors producing each row,
// so coordinates can be read off directly. Pivots are the lowest nonzero
// coordinate, which makes every echelon form reproducible.
class SpanSolver {
 public:
  SpanSolver() = default;
  explicit SpanSolver(const std::vector<SparseVector>& basis);
  explicit SpanSolver(const std::vector<SuperMatrix>& basis);

  // Inserts the next vector; returns true when it enlarged the span.
  bool add(const SparseVector& v);
  bool add(const SuperMatrix& m) { return add(flatten(m)); }

  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted() const { return count_; }

  BasisExpansion express(const SparseVector& target) const;
  BasisExpansion express(const SuperMatrix& target) const { return express(flatten(target)); }
  bool contains(const SparseVector& target) const { return express(target).residual_zero; }
  bool contains(const SuperMatrix& target) const { return contains(flatten(target)); }

  // Linear dependencies found among the inserted vectors (not reduced).
  const std::vector<SparseVector>& dependencies() const { return kernel_; }

  // Echelon rows sorted by pivot coordinate.
  std::vector<SparseVector> echelon_rows() const;

 private:
  struct Row {
    int pivot;
    SparseVector vec;
    SparseVector comb;
  };
  std::vector<Row> rows_;
  std::map<int, std::size_t> pivot_row_;
  std::vector<SparseVector> kernel_;
  std::size_t count_ = 0;
};

// Reduced row echelon form of a list of sparse rows (zero rows dropped).
std::vector<SparseVector> rref(const std::vector<SparseVector>& rows);

std::size_t span_rank(const std::vector<SuperMatrix>& vectors);
std::size_t span_rank(const std::vector<SparseVector>& vectors);

BasisExpansion express_in_span(const SuperMatrix& target, const std::vector<SuperMatrix>& basis);

// Basis of {c : sum c_i v_i = 0} in reduced echelon form, as dense vectors of
// length vectors.size().
std::vector<std::vector<ExactScalar>> nullspace(const std::vector<SuperMatrix>& vectors);
std::vector<std::vector<ExactScalar>> nullspace(const std::vector<SparseVector>& vectors);

std::vector<ExactScalar> densify(const SparseVector& v, std::size_t length);
SparseVector sparsify(const std::vector<ExactScalar>& v);

}  // namespace gqs
