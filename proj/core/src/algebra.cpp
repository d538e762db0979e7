#include "gqs/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace gqs {

std::string to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::A: return "A";
    case FamilyTag::B: return "B";
    case FamilyTag::B0: return "B0";
    case FamilyTag::C: return "C";
    case FamilyTag::D: return "D";
  }
  return "?";
}

FamilyTag parse_family_tag(const std::string& text) {
  std::string t;
  for (char c : text) t += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (t == "A") return FamilyTag::A;
  if (t == "B") return FamilyTag::B;
  if (t == "B0") return FamilyTag::B0;
  if (t == "C") return FamilyTag::C;
  if (t == "D") return FamilyTag::D;
  throw std::invalid_argument("unknown family '" + text + "' (expected A, B, B0, C or D)");
}

void Family::validate() const {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("invalid ranks for " + to_string(tag) + ": " + why);
  };
  switch (tag) {
    case FamilyTag::A:
      if (m < 0 || n < 0) fail("A(m|n) needs m >= 0 and n >= 0");
      break;
    case FamilyTag::B:
      if (m < 1 || n < 1) fail("B(m|n) needs m >= 1 and n >= 1 (use B0 for m = 0)");
      break;
    case FamilyTag::B0:
      if (m != 0 || n < 1) fail("B(0|n) needs n >= 1");
      break;
    case FamilyTag::C:
      if (m != 0 || n < 2) fail("C(n) needs n >= 2");
      break;
    case FamilyTag::D:
      if (m < 2 || n < 1) fail("D(m|n) needs m >= 2 and n >= 1 (use C for D(1|n-1))");
      break;
  }
}

int Family::eps_count() const {
  switch (tag) {
    case FamilyTag::A: return m + 1;
    case FamilyTag::B0: return 0;
    case FamilyTag::C: return 1;
    default: return m;
  }
}

int Family::delta_count() const {
  switch (tag) {
    case FamilyTag::A: return n + 1;
    case FamilyTag::C: return n - 1;
    default: return n;
  }
}

int Family::rank() const {
  switch (tag) {
    case FamilyTag::A: return m + n + 1;
    case FamilyTag::B0:
    case FamilyTag::C: return n;
    default: return m + n;
  }
}

int Family::matrix_size() const {
  switch (tag) {
    case FamilyTag::A: return m + n + 2;
    case FamilyTag::B: return 2 * m + 1 + 2 * n;
    case FamilyTag::B0: return 2 * n + 1;
    case FamilyTag::C: return 2 * n;
    case FamilyTag::D: return 2 * m + 2 * n;
  }
  return 0;
}

long Family::expected_dimension() const {
  const long M = m, Nn = n;
  switch (tag) {
    case FamilyTag::A: return (M + Nn + 2) * (M + Nn + 2) - 1;
    case FamilyTag::B:
    case FamilyTag::B0: return 2 * (M + Nn) * (M + Nn) + M + 3 * Nn;
    case FamilyTag::C: return 2 * Nn * Nn + Nn - 2;
    case FamilyTag::D: return 2 * (M + Nn) * (M + Nn) - M + Nn;
  }
  return 0;
}

std::string Family::name() const {
  switch (tag) {
    case FamilyTag::A: return "A(" + std::to_string(m) + "|" + std::to_string(n) + ")";
    case FamilyTag::B: return "B(" + std::to_string(m) + "|" + std::to_string(n) + ")";
    case FamilyTag::B0: return "B(0|" + std::to_string(n) + ")";
    case FamilyTag::C: return "C(" + std::to_string(n) + ")";
    case FamilyTag::D: return "D(" + std::to_string(m) + "|" + std::to_string(n) + ")";
  }
  return "?";
}

Root Root::eps_unit(int ne, int nd, int i, int coeff) {
  Root r(ne, nd);
  r.eps.at(i - 1) = coeff;
  return r;
}

Root Root::delta_unit(int ne, int nd, int k, int coeff) {
  Root r(ne, nd);
  r.delta.at(k - 1) = coeff;
  return r;
}

bool Root::is_zero() const {
  return std::all_of(eps.begin(), eps.end(), [](int x) { return x == 0; }) &&
         std::all_of(delta.begin(), delta.end(), [](int x) { return x == 0; });
}

bool Root::is_odd() const {
  int s = 0;
  for (int x : delta) s += std::abs(x);
  return s % 2 == 1;
}

Root Root::operator-() const {
  Root r = *this;
  for (int& x : r.eps) x = -x;
  for (int& x : r.delta) x = -x;
  return r;
}

Root& Root::operator+=(const Root& o) {
  if (o.eps.size() != eps.size() || o.delta.size() != delta.size())
    throw std::invalid_argument("root rank mismatch");
  for (std::size_t i = 0; i < eps.size(); ++i) eps[i] += o.eps[i];
  for (std::size_t i = 0; i < delta.size(); ++i) delta[i] += o.delta[i];
  return *this;
}

Root& Root::operator-=(const Root& o) { return *this += -o; }

Root& Root::operator*=(int c) {
  for (int& x : eps) x *= c;
  for (int& x : delta) x *= c;
  return *this;
}

std::string Root::str() const {
  std::ostringstream os;
  bool first = true;
  auto term = [&](int c, const char* sym, std::size_t idx) {
    if (c == 0) return;
    if (c < 0)
      os << "-";
    else if (!first)
      os << "+";
    if (std::abs(c) != 1) os << std::abs(c);
    os << sym << idx + 1;
    first = false;
  };
  for (std::size_t i = 0; i < eps.size(); ++i) term(eps[i], "ε", i);
  for (std::size_t i = 0; i < delta.size(); ++i) term(delta[i], "δ", i);
  if (first) return "0";
  return os.str();
}

namespace {

struct Builder {
  Family f;
  int size;
  int ne, nd;
  std::vector<RootVector> roots;
  std::vector<SuperMatrix> cartan;

  SuperMatrix e(int j, int k) const { return SuperMatrix::unit(size, j, k); }
  Root eps(int i, int c = 1) const { return Root::eps_unit(ne, nd, i, c); }
  Root del(int k, int c = 1) const { return Root::delta_unit(ne, nd, k, c); }
  void push(const Root& r, SuperMatrix m) { roots.push_back(RootVector{r, r.is_odd() ? 1 : 0, std::move(m)}); }
};

void build_a(Builder& b, const Family& f) {
  const int m = f.m, size = b.size;
  auto root_of = [&](int j) { return j <= m + 1 ? b.eps(j) : b.del(j - m - 1); };
  for (int j = 1; j <= size; ++j)
    for (int k = 1; k <= size; ++k)
      if (j != k) b.push(root_of(j) - root_of(k), b.e(j, k));
  for (int i = 1; i < size; ++i) {
    if (i == m + 1)
      b.cartan.push_back(b.e(i, i) + b.e(i + 1, i + 1));
    else
      b.cartan.push_back(b.e(i, i) - b.e(i + 1, i + 1));
  }
}

// Orthosymplectic realization; `mid` is the middle row (B) or 0 (D). Row
// blocks: eps_i -> i, -eps_i -> m+i, [mid], delta_k -> o+k, -delta_k -> o+n+k.
void build_osp(Builder& b, int m, int n, bool odd_dim) {
  const int mid = odd_dim ? 2 * m + 1 : 0;
  const int o = odd_dim ? 2 * m + 1 : 2 * m;
  auto e = [&](int j, int k) { return b.e(j, k); };
  // Even roots.
  for (int j = 1; j <= m; ++j)
    for (int k = 1; k <= m; ++k)
      if (j != k) b.push(b.eps(j) - b.eps(k), e(j, k) - e(k + m, j + m));
  for (int j = 1; j <= m; ++j)
    for (int k = j + 1; k <= m; ++k) b.push(b.eps(j) + b.eps(k), e(j, k + m) - e(k, j + m));
  for (int j = 1; j <= m; ++j)
    for (int k = j + 1; k <= m; ++k) b.push(-(b.eps(j) + b.eps(k)), e(j + m, k) - e(k + m, j));
  if (odd_dim) {
    for (int j = 1; j <= m; ++j) b.push(b.eps(j), e(j, mid) - e(mid, j + m));
    for (int j = 1; j <= m; ++j) b.push(-b.eps(j), e(j + m, mid) - e(mid, j));
  }
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k)
      if (j != k) b.push(b.del(j) - b.del(k), e(o + j, o + k) - e(o + n + k, o + n + j));
  for (int j = 1; j <= n; ++j)
    for (int k = j; k <= n; ++k) b.push(b.del(j) + b.del(k), e(o + j, o + k + n) + e(o + k, o + j + n));
  for (int j = 1; j <= n; ++j)
    for (int k = j; k <= n; ++k) b.push(-(b.del(j) + b.del(k)), e(o + n + j, o + k) + e(o + n + k, o + j));
  // Odd roots.
  for (int j = 1; j <= m; ++j)
    for (int k = 1; k <= n; ++k) b.push(b.eps(j) - b.del(k), e(j, o + k) - e(o + n + k, j + m));
  for (int j = 1; j <= m; ++j)
    for (int k = 1; k <= n; ++k) b.push(-b.eps(j) - b.del(k), e(m + j, o + k) - e(o + n + k, j));
  if (odd_dim)
    for (int k = 1; k <= n; ++k) b.push(-b.del(k), e(mid, o + k) - e(o + n + k, mid));
  for (int j = 1; j <= m; ++j)
    for (int k = 1; k <= n; ++k) b.push(b.eps(j) + b.del(k), e(j, o + n + k) + e(o + k, m + j));
  for (int j = 1; j <= m; ++j)
    for (int k = 1; k <= n; ++k) b.push(-b.eps(j) + b.del(k), e(m + j, o + n + k) + e(o + k, j));
  if (odd_dim)
    for (int k = 1; k <= n; ++k) b.push(b.del(k), e(mid, o + n + k) + e(o + k, mid));

  for (int i = 1; i <= m; ++i) b.cartan.push_back(e(i, i) - e(m + i, m + i));
  for (int k = 1; k <= n; ++k) b.cartan.push_back(e(o + k, o + k) - e(o + n + k, o + n + k));
}

}  // namespace

AlgebraModel build(const Family& family) {
  family.validate();
  AlgebraModel model;
  model.family_ = family;
  const int size = family.matrix_size();
  model.size_ = size;
  Builder b{family, size, family.eps_count(), family.delta_count(), {}, {}};

  model.theta_.assign(size, 0);
  model.omega_diag_.assign(size, 1);
  switch (family.tag) {
    case FamilyTag::A: {
      for (int j = family.m + 2; j <= size; ++j) model.theta_[j - 1] = 1;
      for (int i = 1; i <= family.m + 1; ++i) model.eps_row_.push_back(i);
      for (int k = 1; k <= family.n + 1; ++k) model.delta_row_.push_back(family.m + 1 + k);
      build_a(b, family);
      break;
    }
    case FamilyTag::B:
    case FamilyTag::B0: {
      const int m = family.m, n = family.n, o = 2 * m + 1;
      for (int j = o + 1; j <= size; ++j) model.theta_[j - 1] = 1;
      // omega = conjugation by diag(d) after transposition; d = -1 on the
      // delta_k rows keeps the odd part of osp(2m+1|2n) invariant.
      for (int k = 1; k <= n; ++k) model.omega_diag_[o + k - 1] = -1;
      for (int i = 1; i <= m; ++i) model.eps_row_.push_back(i);
      for (int k = 1; k <= n; ++k) model.delta_row_.push_back(o + k);
      build_osp(b, m, n, true);
      break;
    }
    case FamilyTag::C:
    case FamilyTag::D: {
      const int m = family.eps_count(), n = family.delta_count(), o = 2 * m;
      for (int j = o + 1; j <= size; ++j) model.theta_[j - 1] = 1;
      for (int k = 1; k <= n; ++k) model.omega_diag_[o + n + k - 1] = -1;
      for (int i = 1; i <= m; ++i) model.eps_row_.push_back(i);
      for (int k = 1; k <= n; ++k) model.delta_row_.push_back(o + k);
      build_osp(b, m, n, false);
      break;
    }
  }
  model.cartan_ = std::move(b.cartan);
  model.roots_ = std::move(b.roots);

  for (std::size_t i = 0; i < model.roots_.size(); ++i) {
    const auto& rv = model.roots_[i];
    Parity p = rv.matrix.parity(model.theta_);
    if (p != (rv.parity ? Parity::Odd : Parity::Even))
      throw std::logic_error("root vector parity disagrees with root " + rv.root.str());
    auto [it, inserted] = model.root_index_.emplace(rv.root, model.cartan_dim() + static_cast<int>(i));
    if (!inserted) throw std::logic_error("duplicate root " + rv.root.str());
  }

  for (int i = 0; i < model.dimension(); ++i) model.solver_.add(model.basis_matrix(i));
  if (static_cast<int>(model.solver_.rank()) != model.dimension())
    throw std::logic_error("basis of " + family.name() + " is linearly dependent");

  model.omega_.resize(model.dimension());
  for (int i = 0; i < model.dimension(); ++i) {
    if (model.is_cartan(i)) {
      model.omega_[i] = ScaledBasis{i, ExactScalar(1)};
      continue;
    }
    const RootVector& rv = model.roots_[i - model.cartan_dim()];
    int partner = model.index_of_root(-rv.root);
    if (partner < 0) throw std::logic_error("missing negative of root " + rv.root.str());
    SuperMatrix w = model.omega_matrix(rv.matrix);
    const SuperMatrix& target = model.basis_matrix(partner);
    const auto& [key, val] = *target.entries().begin();
    ExactScalar sigma = w.at(key.first, key.second) / val;
    if (!(w == target * sigma)) throw std::logic_error("omega does not map root vector " + rv.root.str() + " onto its negative");
    model.omega_[i] = ScaledBasis{partner, sigma};
  }

  const int dim = model.dimension();
  model.structure_.assign(dim, std::vector<BasisExpansion>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      BasisExpansion x = model.solver_.express(model.bracket_matrix(i, j));
      if (!x.residual_zero)
        throw std::logic_error("bracket of basis elements " + std::to_string(i) + "," + std::to_string(j) +
                               " leaves the algebra");
      model.structure_[i][j] = std::move(x);
    }
  return model;
}

const SuperMatrix& AlgebraModel::basis_matrix(int index) const {
  if (index < 0 || index >= dimension()) throw std::out_of_range("basis index out of range");
  if (is_cartan(index)) return cartan_[index];
  return roots_[index - cartan_dim()].matrix;
}

int AlgebraModel::basis_parity(int index) const {
  if (is_cartan(index)) return 0;
  return roots_.at(index - cartan_dim()).parity;
}

Root AlgebraModel::basis_root(int index) const {
  if (is_cartan(index)) return Root(family_.eps_count(), family_.delta_count());
  return roots_.at(index - cartan_dim()).root;
}

int AlgebraModel::index_of_root(const Root& alpha) const {
  auto it = root_index_.find(alpha);
  return it == root_index_.end() ? -1 : it->second;
}

ScaledBasis AlgebraModel::omega(int index) const { return omega_.at(index); }

SuperMatrix AlgebraModel::omega_matrix(const SuperMatrix& x) const {
  SuperMatrix r(size_);
  for (const auto& [k, v] : x.entries()) {
    int sign = omega_diag_[k.first - 1] * omega_diag_[k.second - 1];
    r.set(k.second, k.first, sign > 0 ? v : -v);
  }
  return r;
}

const BasisExpansion& AlgebraModel::bracket(int i, int j) const { return structure_.at(i).at(j); }

SuperMatrix AlgebraModel::bracket_matrix(int i, int j) const {
  return superbracket(basis_matrix(i), basis_matrix(j), basis_parity(i), basis_parity(j));
}

ExactScalar AlgebraModel::evaluate_root(const Root& alpha, const SuperMatrix& h) const {
  ExactScalar v;
  for (std::size_t i = 0; i < alpha.eps.size(); ++i)
    if (alpha.eps[i] != 0) v += ExactScalar(alpha.eps[i]) * h.at(eps_row_[i], eps_row_[i]);
  for (std::size_t k = 0; k < alpha.delta.size(); ++k)
    if (alpha.delta[k] != 0) v += ExactScalar(alpha.delta[k]) * h.at(delta_row_[k], delta_row_[k]);
  return v;
}

BasisExpansion AlgebraModel::expand(const SuperMatrix& x) const { return solver_.express(x); }

ScaledBasis omega(const AlgebraModel& model, int index) { return model.omega(index); }

BasisExpansion bracket_in_basis(const AlgebraModel& model, int i, int j) { return model.bracket(i, j); }

}  // namespace gqs
