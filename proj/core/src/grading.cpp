#include "gqs/grading.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace gqs {

bool SubalgebraSpan::contains(int index) const {
  return std::binary_search(basis_indices.begin(), basis_indices.end(), index);
}

std::vector<int> Grading::subspace(int k) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < grade.size(); ++i)
    if (grade[i] == k) out.push_back(static_cast<int>(i));
  return out;
}

SubalgebraSpan span_of_roots(const AlgebraModel& model, const std::vector<Root>& roots) {
  SubalgebraSpan s;
  for (int i = 0; i < model.cartan_dim(); ++i) s.basis_indices.push_back(i);
  for (const auto& r : roots) {
    int idx = model.index_of_root(r);
    if (idx < 0) throw std::logic_error("root " + r.str() + " has no root vector");
    s.basis_indices.push_back(idx);
  }
  std::sort(s.basis_indices.begin(), s.basis_indices.end());
  s.basis_indices.erase(std::unique(s.basis_indices.begin(), s.basis_indices.end()), s.basis_indices.end());
  s.name = recognize_subsystem(model.family(), roots);
  return s;
}

SubalgebraSpan delete_to_subalgebra(const AlgebraModel& model, const Diagram& diagram, const std::set<int>& deleted) {
  for (int d : deleted) diagram.node(d);
  return span_of_roots(model, regular_roots(model.family(), retained_roots(diagram, deleted)));
}

std::vector<ModuleBlock> decompose_modules(const AlgebraModel& model, const SubalgebraSpan& g0) {
  const int dim = model.dimension();
  std::vector<int> parent(dim);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::vector<int> rest;
  for (int j = model.cartan_dim(); j < dim; ++j)
    if (!g0.contains(j)) rest.push_back(j);
  for (int i : g0.basis_indices) {
    if (model.is_cartan(i)) continue;
    for (int j : rest) {
      for (const auto& [k, c] : model.bracket(i, j).coefficients) {
        if (g0.contains(k)) throw std::logic_error("g0 does not act on its complement");
        parent[find(k)] = find(j);
      }
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int j : rest) groups[find(j)].push_back(j);
  std::vector<ModuleBlock> blocks;
  for (auto& [rep, members] : groups) blocks.push_back(ModuleBlock{members, -1});
  std::sort(blocks.begin(), blocks.end(),
            [](const ModuleBlock& a, const ModuleBlock& b) { return a.basis_indices.front() < b.basis_indices.front(); });
  std::map<int, int> block_of;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int j : blocks[b].basis_indices) block_of[j] = static_cast<int>(b);
  for (auto& blk : blocks) {
    int target = block_of.at(model.omega(blk.basis_indices.front()).index);
    for (int j : blk.basis_indices)
      if (block_of.at(model.omega(j).index) != target) throw std::logic_error("omega splits a G0-module");
    blk.omega_partner = target;
  }
  return blocks;
}

std::pair<SubalgebraSpan, std::vector<ModuleBlock>> absorb_invariant_modules(const AlgebraModel& model,
                                                                             SubalgebraSpan g0,
                                                                             std::vector<ModuleBlock> blocks) {
  while (true) {
    std::vector<int> added;
    for (std::size_t b = 0; b < blocks.size(); ++b)
      if (blocks[b].omega_partner == static_cast<int>(b))
        added.insert(added.end(), blocks[b].basis_indices.begin(), blocks[b].basis_indices.end());
    if (added.empty()) return {std::move(g0), std::move(blocks)};

    std::vector<Root> roots;
    for (int i : g0.basis_indices)
      if (!model.is_cartan(i)) roots.push_back(model.basis_root(i));
    for (int i : added) roots.push_back(model.basis_root(i));
    SubalgebraSpan bigger = span_of_roots(model, roots);
    for (int i : bigger.basis_indices)
      for (int j : bigger.basis_indices)
        for (const auto& [k, c] : model.bracket(i, j).coefficients)
          if (!bigger.contains(k)) throw std::logic_error("absorbing omega-invariant modules broke closure");
    g0 = std::move(bigger);
    blocks = decompose_modules(model, g0);
  }
}

namespace {

constexpr int kValues[4] = {-2, -1, 1, 2};
using Domain = std::uint8_t;

int value_index(int g) {
  switch (g) {
    case -2: return 0;
    case -1: return 1;
    case 1: return 2;
    case 2: return 3;
  }
  return -1;
}

Domain bit_of(int g) {
  int i = value_index(g);
  return i < 0 ? 0 : static_cast<Domain>(1u << i);
}

struct SumConstraint {
  int p, q, t;  // grade(t) = grade(p) + grade(q)
};
struct ZeroConstraint {
  int p, q;  // grade(p) + grade(q) = 0
};

class GradingSearch {
 public:
  GradingSearch(const AlgebraModel& model, const SubalgebraSpan& g0, std::vector<ModuleBlock> blocks, SearchStats* stats)
      : model_(model), g0_(g0), blocks_(std::move(blocks)), stats_(stats) {}

  std::vector<Grading> run() {
    const int B = static_cast<int>(blocks_.size());
    if (B == 0) return {};
    for (int b = 0; b < B; ++b)
      if (blocks_[b].omega_partner == b) throw std::logic_error("search_gradings needs omega-invariant blocks absorbed");
    std::vector<int> block_of(model_.dimension(), -1);
    for (int b = 0; b < B; ++b)
      for (int j : blocks_[b].basis_indices) block_of[j] = b;

    for (int b = 0; b < B; ++b)
      if (b < blocks_[b].omega_partner) zeros_.push_back({b, blocks_[b].omega_partner});
    for (int p = 0; p < B; ++p)
      for (int q = p; q < B; ++q) {
        std::set<int> targets;
        bool into_g0 = false;
        for (int i : blocks_[p].basis_indices)
          for (int j : blocks_[q].basis_indices)
            for (const auto& [k, c] : model_.bracket(i, j).coefficients) {
              if (block_of[k] < 0)
                into_g0 = true;
              else
                targets.insert(block_of[k]);
            }
        if (into_g0 && !targets.empty()) return {};
        if (into_g0) zeros_.push_back({p, q});
        for (int t : targets) sums_.push_back({p, q, t});
      }

    std::vector<Domain> dom(B, 0x0F);
    // Global sign: the first block is negative.
    dom[0] = bit_of(-2) | bit_of(-1);
    std::vector<Grading> out;
    search(dom, out);
    return out;
  }

 private:
  bool propagate(std::vector<Domain>& dom) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& z : zeros_) {
        Domain np = 0, nq = 0;
        for (int vi = 0; vi < 4; ++vi) {
          int v = kValues[vi];
          if ((dom[z.p] >> vi & 1) && (dom[z.q] & bit_of(-v))) np |= static_cast<Domain>(1u << vi);
          if ((dom[z.q] >> vi & 1) && (dom[z.p] & bit_of(-v))) nq |= static_cast<Domain>(1u << vi);
        }
        if (np != dom[z.p] || nq != dom[z.q]) {
          dom[z.p] = np;
          dom[z.q] = nq;
          changed = true;
        }
        if (!np || !nq) return false;
      }
      for (const auto& s : sums_) {
        Domain np = 0, nq = 0, nt = 0;
        for (int a = 0; a < 4; ++a) {
          if (!(dom[s.p] >> a & 1)) continue;
          for (int b = 0; b < 4; ++b) {
            if (!(dom[s.q] >> b & 1)) continue;
            if (s.p == s.q && a != b) continue;
            Domain tb = bit_of(kValues[a] + kValues[b]);
            if (!(dom[s.t] & tb)) continue;
            if (s.t == s.p && tb != (1u << a)) continue;
            if (s.t == s.q && tb != (1u << b)) continue;
            np |= static_cast<Domain>(1u << a);
            nq |= static_cast<Domain>(1u << b);
            nt |= tb;
          }
        }
        if (s.p == s.q) np = nq = static_cast<Domain>(np & nq);
        if (s.t == s.p) nt = np = static_cast<Domain>(nt & np);
        if (s.t == s.q) nt = nq = static_cast<Domain>(nt & nq);
        if (np != dom[s.p] || nq != dom[s.q] || nt != dom[s.t]) {
          dom[s.p] = np;
          dom[s.q] = nq;
          dom[s.t] = nt;
          changed = true;
        }
        if (!np || !nq || !nt) return false;
      }
    }
    return true;
  }

  void search(std::vector<Domain> dom, std::vector<Grading>& out) {
    if (stats_) ++stats_->nodes;
    if (!propagate(dom)) return;
    int pick = -1, best = 5;
    for (std::size_t b = 0; b < dom.size(); ++b) {
      int c = __builtin_popcount(dom[b]);
      if (c > 1 && c < best) {
        best = c;
        pick = static_cast<int>(b);
      }
    }
    if (pick < 0) {
      accept(dom, out);
      return;
    }
    for (int vi = 0; vi < 4; ++vi) {
      if (!(dom[pick] >> vi & 1)) continue;
      auto next = dom;
      next[pick] = static_cast<Domain>(1u << vi);
      search(std::move(next), out);
    }
  }

  void accept(const std::vector<Domain>& dom, std::vector<Grading>& out) {
    std::vector<int> grades;
    for (Domain d : dom) grades.push_back(kValues[__builtin_ctz(d)]);
    // Exact check of every block constraint on the final assignment.
    for (const auto& z : zeros_)
      if (grades[z.p] + grades[z.q] != 0) return;
    for (const auto& s : sums_)
      if (grades[s.t] != grades[s.p] + grades[s.q]) return;
    if (stats_) ++stats_->complete;
    Grading g = make_grading(model_, g0_, blocks_, grades);
    if (!generated(g)) {
      if (stats_) ++stats_->rejected_generation;
      return;
    }
    out.push_back(std::move(g));
  }

  bool generated(const Grading& g) const {
    auto plus1 = g.subspace(1), minus1 = g.subspace(-1);
    if (plus1.empty()) return false;
    for (int sign : {1, -1}) {
      const auto& ones = sign > 0 ? plus1 : minus1;
      SpanSolver s;
      for (std::size_t a = 0; a < ones.size(); ++a)
        for (std::size_t b = a; b < ones.size(); ++b) s.add(model_.bracket(ones[a], ones[b]).coefficients);
      if (s.rank() != g.subspace(2 * sign).size()) return false;
    }
    SpanSolver s0;
    for (int i = 0; i < model_.cartan_dim(); ++i) s0.add(SparseVector{{i, ExactScalar(1)}});
    for (int i : plus1)
      for (int j : minus1) s0.add(model_.bracket(i, j).coefficients);
    return s0.rank() == g.g0.basis_indices.size();
  }

  const AlgebraModel& model_;
  const SubalgebraSpan& g0_;
  std::vector<ModuleBlock> blocks_;
  SearchStats* stats_;
  std::vector<SumConstraint> sums_;
  std::vector<ZeroConstraint> zeros_;
};

}  // namespace

Grading make_grading(const AlgebraModel& model, const SubalgebraSpan& g0, const std::vector<ModuleBlock>& blocks,
                     const std::vector<int>& block_grades) {
  if (block_grades.size() != blocks.size()) throw std::invalid_argument("one grade per block expected");
  Grading g;
  g.g0 = g0;
  g.blocks = blocks;
  g.block_grades = block_grades;
  g.grade.assign(model.dimension(), 0);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int j : blocks[b].basis_indices) g.grade[j] = block_grades[b];
  int top = 0;
  for (int x : g.grade) top = std::max(top, std::abs(x));
  g.length = 2 * top + 1;
  return g;
}

std::vector<Grading> search_gradings(const AlgebraModel& model, const SubalgebraSpan& g0,
                                     const std::vector<ModuleBlock>& blocks, SearchStats* stats) {
  // Work on blocks in canonical order so the result does not depend on the
  // order they were passed in.
  std::vector<std::size_t> order(blocks.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) {
    return blocks[a].basis_indices.front() < blocks[b].basis_indices.front();
  });
  std::vector<int> position(blocks.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<int>(i);
  std::vector<ModuleBlock> sorted;
  for (std::size_t i : order) {
    ModuleBlock b = blocks[i];
    b.omega_partner = position.at(static_cast<std::size_t>(b.omega_partner));
    sorted.push_back(std::move(b));
  }
  return GradingSearch(model, g0, std::move(sorted), stats).run();
}

Grading deletion_grading(const AlgebraModel& model, const SimpleSystem& system, const std::set<int>& deleted) {
  Grading g;
  g.grade.assign(model.dimension(), 0);
  int top = 0;
  for (int i = model.cartan_dim(); i < model.dimension(); ++i) {
    auto c = simple_coordinates(system, model.basis_root(i));
    if (!c) throw std::logic_error("root outside the simple span");
    int s = 0;
    for (int d : deleted) s += static_cast<int>(c->at(static_cast<std::size_t>(d - 1)));
    g.grade[i] = s;
    top = std::max(top, std::abs(s));
  }
  std::vector<Root> roots;
  for (int i = 0; i < model.dimension(); ++i) {
    if (g.grade[i] != 0) continue;
    if (model.is_cartan(i))
      g.g0.basis_indices.push_back(i);
    else
      roots.push_back(model.basis_root(i));
  }
  g.g0 = span_of_roots(model, roots);
  g.length = 2 * top + 1;
  return g;
}

GradingValidation validate_grading(const AlgebraModel& model, const Grading& grading) {
  GradingValidation v;
  const int dim = model.dimension();
  auto fail = [&](const std::string& msg) {
    if (v.failures.size() < 20) v.failures.push_back(msg);
  };

  v.direct_sum = static_cast<int>(grading.grade.size()) == dim;
  if (!v.direct_sum) {
    fail("grade vector does not cover the basis");
    return v;
  }
  for (int i = 0; i < dim; ++i) {
    const bool in_g0 = grading.g0.contains(i);
    if (model.is_cartan(i) && !in_g0) {
      v.direct_sum = false;
      fail("Cartan element " + std::to_string(i) + " outside G_0");
    }
    if (in_g0 != (grading.grade[i] == 0)) {
      v.direct_sum = false;
      fail("G_0 does not match the grade-0 subspace at basis element " + std::to_string(i));
    }
    if (std::abs(grading.grade[i]) > 2) {
      v.direct_sum = false;
      fail("|grade|>2 for root " + model.basis_root(i).str() + " (grade " + std::to_string(grading.grade[i]) + ")");
    }
  }

  int top = 0;
  for (int x : grading.grade) top = std::max(top, std::abs(x));
  std::map<int, SpanSolver> spaces;
  std::map<int, int> dims;
  for (int i = 0; i < dim; ++i) {
    spaces[grading.grade[i]].add(model.basis_matrix(i));
    ++dims[grading.grade[i]];
  }

  v.closure = true;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      SuperMatrix m = model.bracket_matrix(i, j);
      if (m.is_zero()) continue;
      const int s = grading.grade[i] + grading.grade[j];
      auto it = spaces.find(s);
      if (std::abs(s) > 2 || it == spaces.end() || !it->second.contains(m)) {
        v.closure = false;
        fail((std::abs(s) > 2 ? "|grade|>2: " : "closure: ") + std::string("[[") + model.basis_root(i).str() + "," +
             model.basis_root(j).str() + "]] is nonzero outside G_" + std::to_string(s));
      }
    }

  v.omega_pairing = true;
  for (int i = 0; i < dim; ++i) {
    SuperMatrix w = model.omega_matrix(model.basis_matrix(i));
    auto it = spaces.find(-grading.grade[i]);
    if (it == spaces.end() || !it->second.contains(w)) {
      v.omega_pairing = false;
      fail("omega(" + model.basis_root(i).str() + ") is not in G_" + std::to_string(-grading.grade[i]));
    }
  }

  auto collect = [&](int k) {
    std::vector<int> out;
    for (int i = 0; i < dim; ++i)
      if (grading.grade[i] == k) out.push_back(i);
    return out;
  };
  const auto plus1 = collect(1), minus1 = collect(-1);
  v.g2_generated = !plus1.empty() && !minus1.empty();
  if (!v.g2_generated) fail("G_{+1} or G_{-1} is empty");
  for (int sign : {1, -1}) {
    const auto& ones = sign > 0 ? plus1 : minus1;
    SpanSolver s;
    for (std::size_t a = 0; a < ones.size(); ++a)
      for (std::size_t b = a; b < ones.size(); ++b) s.add(model.bracket_matrix(ones[a], ones[b]));
    if (static_cast<int>(s.rank()) != dims[2 * sign]) {
      v.g2_generated = false;
      fail("G_" + std::to_string(2 * sign) + " is not spanned by brackets of G_" + std::to_string(sign));
    }
  }

  SpanSolver brackets;
  for (int i : plus1)
    for (int j : minus1) brackets.add(model.bracket_matrix(i, j));
  SpanSolver with_h = brackets;
  for (int i = 0; i < model.cartan_dim(); ++i) with_h.add(model.basis_matrix(i));
  v.g0_generated = true;
  v.h_in_g1_bracket = true;
  for (int i = 0; i < dim; ++i) {
    if (grading.grade[i] != 0) continue;
    if (!with_h.contains(model.basis_matrix(i))) {
      v.g0_generated = false;
      fail("G_0 element " + model.basis_root(i).str() + " is not generated by [[G_{+1},G_{-1}]] + H");
    }
    if (model.is_cartan(i) && !brackets.contains(model.basis_matrix(i))) v.h_in_g1_bracket = false;
  }
  (void)top;
  return v;
}

}  // namespace gqs
