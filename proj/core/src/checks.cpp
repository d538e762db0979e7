#include "gqs/checks.hpp"

#include <random>

namespace gqs {

namespace {

void note(AlgebraCheckReport& r, const std::string& msg) {
  if (r.failures.size() < 8) r.failures.push_back(msg);
}

}  // namespace

bool AlgebraCheckReport::ok() const {
  return dimension == expected_dimension && basis_rank == dimension && closure && root_additivity && root_grading &&
         parity && omega_anti && omega_involution && jacobi_failures == 0;
}

AlgebraCheckReport check_algebra(const AlgebraModel& model, int jacobi_samples, std::uint64_t seed) {
  AlgebraCheckReport r;
  r.family = model.family();
  r.dimension = model.dimension();
  r.expected_dimension = model.family().expected_dimension();
  r.basis_rank = static_cast<long>(model.basis_solver().rank());
  r.closure = r.root_additivity = r.root_grading = r.parity = r.omega_anti = r.omega_involution = true;

  const int dim = model.dimension();
  const ParityLayout& theta = model.layout();
  for (int i = 0; i < dim; ++i) {
    ScaledBasis w = model.omega(i);
    ScaledBasis ww = model.omega(w.index);
    if (ww.index != i || !(w.scale * ww.scale == ExactScalar(1))) {
      r.omega_involution = false;
      note(r, "omega(omega(x_" + std::to_string(i) + ")) != x_" + std::to_string(i));
    }
  }

  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const SuperMatrix xy = model.bracket_matrix(i, j);
      const BasisExpansion& e = model.bracket(i, j);
      if (!e.residual_zero) {
        r.closure = false;
        note(r, "[[x_" + std::to_string(i) + ",x_" + std::to_string(j) + "]] leaves the basis span");
      }
      if (!xy.is_zero() && xy.parity(theta) != ((model.basis_parity(i) + model.basis_parity(j)) % 2 ? Parity::Odd : Parity::Even)) {
        r.parity = false;
        note(r, "parity of [[x_" + std::to_string(i) + ",x_" + std::to_string(j) + "]]");
      }

      // Root additivity. Cartan elements have the zero root.
      const Root a = model.basis_root(i), b = model.basis_root(j);
      const Root s = a + b;
      bool additive = true;
      for (const auto& [k, c] : e.coefficients) {
        if (s.is_zero())
          additive = additive && model.is_cartan(k);
        else
          additive = additive && !model.is_cartan(k) && model.basis_root(k) == s;
      }
      if (!additive) {
        r.root_additivity = false;
        note(r, "[[e_" + a.str() + ",e_" + b.str() + "]] is not in the " + s.str() + " space");
      }
      if (model.is_cartan(i) && !model.is_cartan(j)) {
        const SuperMatrix expect = model.basis_matrix(j) * model.evaluate_root(b, model.basis_matrix(i));
        if (!(xy == expect)) {
          r.root_grading = false;
          note(r, "[[h_" + std::to_string(i) + ",e_" + b.str() + "]] != " + b.str() + "(h) e");
        }
      }

      // omega([[x,y]]) = [[omega(y), omega(x)]].
      ScaledBasis wi = model.omega(i), wj = model.omega(j);
      const SuperMatrix rhs = superbracket(model.basis_matrix(wj.index) * wj.scale, model.basis_matrix(wi.index) * wi.scale,
                                           model.basis_parity(j), model.basis_parity(i));
      if (!(model.omega_matrix(xy) == rhs)) {
        r.omega_anti = false;
        note(r, "omega([[x_" + std::to_string(i) + ",x_" + std::to_string(j) + "]]) != [[omega(y),omega(x)]]");
      }
    }

  // [[x,[[y,z]]]] = [[[[x,y]],z]] + (-1)^{|x||y|} [[y,[[x,z]]]] on random homogeneous elements.
  std::vector<int> by_parity[2];
  for (int i = 0; i < dim; ++i) by_parity[model.basis_parity(i)].push_back(i);
  std::mt19937_64 rng(seed);
  auto element = [&](int& deg) {
    deg = by_parity[1].empty() ? 0 : static_cast<int>(rng() % 2);
    const auto& pool = by_parity[deg];
    SuperMatrix x(model.matrix_size());
    std::uniform_int_distribution<int> pick(0, static_cast<int>(pool.size()) - 1), coef(-3, 3);
    for (int t = 0; t < 3; ++t) {
      int c = coef(rng);
      if (c != 0) x += model.basis_matrix(pool[pick(rng)]) * ExactScalar(c);
    }
    return x;
  };
  for (int s = 0; s < jacobi_samples; ++s) {
    int dx, dy, dz;
    SuperMatrix x = element(dx), y = element(dy), z = element(dz);
    SuperMatrix lhs = superbracket(x, superbracket(y, z, dy, dz), dx, (dy + dz) % 2);
    SuperMatrix rhs = superbracket(superbracket(x, y, dx, dy), z, (dx + dy) % 2, dz) +
                      superbracket(y, superbracket(x, z, dx, dz), dy, (dx + dz) % 2) * ExactScalar(dx * dy != 0 ? -1 : 1);
    ++r.jacobi_samples;
    if (!(lhs == rhs)) {
      ++r.jacobi_failures;
      note(r, "super-Jacobi fails on sample " + std::to_string(s));
    }
  }
  return r;
}

}  // namespace gqs
