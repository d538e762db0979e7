#include "gqs/linear_algebra.hpp"

#include <algorithm>

namespace gqs {

void axpy(SparseVector& y, const ExactScalar& a, const SparseVector& x) {
  if (a.is_zero()) return;
  for (const auto& [k, v] : x) {
    auto [it, inserted] = y.try_emplace(k, a * v);
    if (!inserted) {
      it->second += a * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

SparseVector flatten(const SuperMatrix& m) {
  SparseVector v;
  const int n = m.size();
  for (const auto& [k, x] : m.entries()) v.emplace_hint(v.end(), (k.first - 1) * n + (k.second - 1), x);
  return v;
}

SpanSolver::SpanSolver(const std::vector<SparseVector>& basis) {
  for (const auto& v : basis) add(v);
}

SpanSolver::SpanSolver(const std::vector<SuperMatrix>& basis) {
  for (const auto& m : basis) add(flatten(m));
}

bool SpanSolver::add(const SparseVector& input) {
  SparseVector v = input;
  SparseVector comb;
  comb.emplace(static_cast<int>(count_), ExactScalar(1));
  ++count_;

  // Rows vanish on every other pivot, so the pivot values of v can be
  // collected up front and eliminated in any order.
  std::vector<std::pair<std::size_t, ExactScalar>> hits;
  for (const auto& [k, x] : v) {
    auto it = pivot_row_.find(k);
    if (it != pivot_row_.end()) hits.emplace_back(it->second, x);
  }
  for (const auto& [r, c] : hits) {
    axpy(v, -c, rows_[r].vec);
    axpy(comb, -c, rows_[r].comb);
  }
  if (v.empty()) {
    kernel_.push_back(std::move(comb));
    return false;
  }

  const int pivot = v.begin()->first;
  const ExactScalar scale = v.begin()->second.inverse();
  for (auto& [k, x] : v) x *= scale;
  for (auto& [k, x] : comb) x *= scale;

  for (auto& row : rows_) {
    auto it = row.vec.find(pivot);
    if (it == row.vec.end()) continue;
    ExactScalar c = it->second;
    axpy(row.vec, -c, v);
    axpy(row.comb, -c, comb);
  }
  pivot_row_.emplace(pivot, rows_.size());
  rows_.push_back(Row{pivot, std::move(v), std::move(comb)});
  return true;
}

BasisExpansion SpanSolver::express(const SparseVector& target) const {
  BasisExpansion out;
  SparseVector residual = target;
  SparseVector coeffs;
  std::vector<std::pair<std::size_t, ExactScalar>> hits;
  for (const auto& [k, x] : target) {
    auto it = pivot_row_.find(k);
    if (it != pivot_row_.end()) hits.emplace_back(it->second, x);
  }
  for (const auto& [r, c] : hits) {
    axpy(residual, -c, rows_[r].vec);
    axpy(coeffs, c, rows_[r].comb);
  }
  out.coefficients = std::move(coeffs);
  out.residual_zero = residual.empty();
  return out;
}

std::vector<SparseVector> SpanSolver::echelon_rows() const {
  std::vector<SparseVector> out;
  out.reserve(rows_.size());
  for (const auto& [p, r] : pivot_row_) out.push_back(rows_[r].vec);
  return out;
}

std::vector<SparseVector> rref(const std::vector<SparseVector>& rows) {
  SpanSolver s(rows);
  return s.echelon_rows();
}

std::size_t span_rank(const std::vector<SuperMatrix>& vectors) { return SpanSolver(vectors).rank(); }

std::size_t span_rank(const std::vector<SparseVector>& vectors) { return SpanSolver(vectors).rank(); }

BasisExpansion express_in_span(const SuperMatrix& target, const std::vector<SuperMatrix>& basis) {
  return SpanSolver(basis).express(target);
}

std::vector<std::vector<ExactScalar>> nullspace(const std::vector<SparseVector>& vectors) {
  SpanSolver s(vectors);
  std::vector<std::vector<ExactScalar>> out;
  for (const auto& row : rref(s.dependencies())) out.push_back(densify(row, vectors.size()));
  return out;
}

std::vector<std::vector<ExactScalar>> nullspace(const std::vector<SuperMatrix>& vectors) {
  std::vector<SparseVector> flat;
  flat.reserve(vectors.size());
  for (const auto& m : vectors) flat.push_back(flatten(m));
  return nullspace(flat);
}

std::vector<ExactScalar> densify(const SparseVector& v, std::size_t length) {
  std::vector<ExactScalar> out(length);
  for (const auto& [k, x] : v) out.at(static_cast<std::size_t>(k)) = x;
  return out;
}

SparseVector sparsify(const std::vector<ExactScalar>& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.emplace_hint(out.end(), static_cast<int>(i), v[i]);
  return out;
}

}  // namespace gqs
