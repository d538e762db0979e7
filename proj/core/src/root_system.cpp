#include "gqs/root_system.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gqs/linear_algebra.hpp"

namespace gqs {

long inner_product(const Root& a, const Root& b) {
  if (a.eps.size() != b.eps.size() || a.delta.size() != b.delta.size())
    throw std::invalid_argument("inner product of roots with different ranks");
  long s = 0;
  for (std::size_t i = 0; i < a.eps.size(); ++i) s += static_cast<long>(a.eps[i]) * b.eps[i];
  for (std::size_t i = 0; i < a.delta.size(); ++i) s -= static_cast<long>(a.delta[i]) * b.delta[i];
  return s;
}

std::vector<Root> root_set(const Family& family) {
  family.validate();
  const int ne = family.eps_count(), nd = family.delta_count();
  std::set<Root> out;
  auto E = [&](int i) { return Root::eps_unit(ne, nd, i); };
  auto D = [&](int k) { return Root::delta_unit(ne, nd, k); };
  if (family.tag == FamilyTag::A) {
    std::vector<Root> units;
    for (int i = 1; i <= ne; ++i) units.push_back(E(i));
    for (int k = 1; k <= nd; ++k) units.push_back(D(k));
    for (std::size_t i = 0; i < units.size(); ++i)
      for (std::size_t j = 0; j < units.size(); ++j)
        if (i != j) out.insert(units[i] - units[j]);
    return {out.begin(), out.end()};
  }
  const bool odd_dim = family.tag == FamilyTag::B || family.tag == FamilyTag::B0;
  for (int s : {1, -1})
    for (int t : {1, -1}) {
      for (int i = 1; i <= ne; ++i)
        for (int j = i + 1; j <= ne; ++j) out.insert(s * E(i) + t * E(j));
      for (int k = 1; k <= nd; ++k)
        for (int l = k + 1; l <= nd; ++l) out.insert(s * D(k) + t * D(l));
      for (int i = 1; i <= ne; ++i)
        for (int k = 1; k <= nd; ++k) out.insert(s * E(i) + t * D(k));
    }
  for (int s : {1, -1}) {
    for (int k = 1; k <= nd; ++k) out.insert(2 * s * D(k));
    if (odd_dim) {
      for (int i = 1; i <= ne; ++i) out.insert(s * E(i));
      for (int k = 1; k <= nd; ++k) out.insert(s * D(k));
    }
  }
  return {out.begin(), out.end()};
}

SimpleSystem distinguished_system(const Family& family) {
  family.validate();
  const int ne = family.eps_count(), nd = family.delta_count();
  auto E = [&](int i) { return Root::eps_unit(ne, nd, i); };
  auto D = [&](int k) { return Root::delta_unit(ne, nd, k); };
  SimpleSystem s{family, {}};
  auto& r = s.simple_roots;
  switch (family.tag) {
    case FamilyTag::A:
      for (int i = 1; i < ne; ++i) r.push_back(E(i) - E(i + 1));
      r.push_back(E(ne) - D(1));
      for (int k = 1; k < nd; ++k) r.push_back(D(k) - D(k + 1));
      break;
    case FamilyTag::B:
      for (int k = 1; k < nd; ++k) r.push_back(D(k) - D(k + 1));
      r.push_back(D(nd) - E(1));
      for (int i = 1; i < ne; ++i) r.push_back(E(i) - E(i + 1));
      r.push_back(E(ne));
      break;
    case FamilyTag::B0:
      for (int k = 1; k < nd; ++k) r.push_back(D(k) - D(k + 1));
      r.push_back(D(nd));
      break;
    case FamilyTag::D:
      for (int k = 1; k < nd; ++k) r.push_back(D(k) - D(k + 1));
      r.push_back(D(nd) - E(1));
      for (int i = 1; i < ne; ++i) r.push_back(E(i) - E(i + 1));
      r.push_back(E(ne - 1) + E(ne));
      break;
    case FamilyTag::C:
      r.push_back(E(1) - D(1));
      for (int k = 1; k < nd; ++k) r.push_back(D(k) - D(k + 1));
      r.push_back(2 * D(nd));
      break;
  }
  return s;
}

SimpleSystem odd_reflect(const SimpleSystem& system, int index) {
  if (index < 1 || index > static_cast<int>(system.simple_roots.size()))
    throw std::invalid_argument("odd reflection at a node outside the diagram");
  const Root& alpha = system.simple_roots[index - 1];
  if (!alpha.is_odd()) throw std::invalid_argument("odd reflection at an even node " + alpha.str());
  if (inner_product(alpha, alpha) != 0)
    throw std::invalid_argument("odd reflection at a non-isotropic node " + alpha.str());
  SimpleSystem out{system.family, {}};
  for (std::size_t i = 0; i < system.simple_roots.size(); ++i) {
    const Root& beta = system.simple_roots[i];
    if (static_cast<int>(i) == index - 1)
      out.simple_roots.push_back(-alpha);
    else if (inner_product(alpha, beta) != 0)
      out.simple_roots.push_back(beta + alpha);
    else
      out.simple_roots.push_back(beta);
  }
  return out;
}

std::vector<SimpleSystem> reflection_closure(const Family& family) {
  std::vector<SimpleSystem> out;
  std::set<std::vector<Root>> seen;
  auto key = [](const SimpleSystem& s) {
    std::vector<Root> k = s.simple_roots;
    std::sort(k.begin(), k.end());
    return k;
  };
  std::deque<SimpleSystem> queue{distinguished_system(family)};
  seen.insert(key(queue.front()));
  while (!queue.empty()) {
    SimpleSystem s = std::move(queue.front());
    queue.pop_front();
    for (int i = 1; i <= static_cast<int>(s.simple_roots.size()); ++i) {
      const Root& a = s.simple_roots[i - 1];
      if (!a.is_odd() || inner_product(a, a) != 0) continue;
      SimpleSystem t = odd_reflect(s, i);
      if (seen.insert(key(t)).second) queue.push_back(t);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<SimpleSystem> enumerate_simple_systems(const Family& family) {
  std::vector<SimpleSystem> out;
  std::set<std::string> seen;
  for (auto& s : reflection_closure(family))
    if (seen.insert(canonical_form(diagram_of(s, false))).second) out.push_back(std::move(s));
  return out;
}

namespace {

std::vector<long> as_vector(const Root& r) {
  std::vector<long> v(r.eps.begin(), r.eps.end());
  v.insert(v.end(), r.delta.begin(), r.delta.end());
  return v;
}

SparseVector as_sparse(const Root& r) {
  SparseVector v;
  auto flat = as_vector(r);
  for (std::size_t i = 0; i < flat.size(); ++i)
    if (flat[i] != 0) v.emplace(static_cast<int>(i), ExactScalar(flat[i]));
  return v;
}

// Echelon basis of the integer lattice spanned by a set of vectors.
class IntLattice {
 public:
  explicit IntLattice(std::vector<std::vector<long>> work) {
    std::erase_if(work, [](const auto& v) { return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; }); });
    const std::size_t len = work.empty() ? 0 : work.front().size();
    for (std::size_t c = 0; c < len && !work.empty(); ++c) {
      while (true) {
        std::vector<std::size_t> live;
        for (std::size_t i = 0; i < work.size(); ++i)
          if (work[i][c] != 0) live.push_back(i);
        if (live.size() <= 1) {
          if (live.size() == 1) {
            auto row = work[live[0]];
            if (row[c] < 0)
              for (long& x : row) x = -x;
            rows_.push_back(row);
            pivots_.push_back(c);
            work.erase(work.begin() + static_cast<long>(live[0]));
          }
          break;
        }
        std::size_t best = live[0];
        for (std::size_t i : live)
          if (std::labs(work[i][c]) < std::labs(work[best][c])) best = i;
        for (std::size_t i : live) {
          if (i == best) continue;
          long q = work[i][c] / work[best][c];
          for (std::size_t k = 0; k < len; ++k) work[i][k] -= q * work[best][k];
        }
        std::erase_if(work, [](const auto& v) { return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; }); });
      }
    }
  }

  bool contains(std::vector<long> v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      long a = v[pivots_[r]];
      if (a == 0) continue;
      if (a % rows_[r][pivots_[r]] != 0) return false;
      long q = a / rows_[r][pivots_[r]];
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= q * rows_[r][k];
    }
    return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
  }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  std::vector<std::vector<long>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

int rational_rank(const std::vector<Root>& roots) {
  std::vector<std::vector<long>> v;
  for (const auto& r : roots) v.push_back(as_vector(r));
  return IntLattice(v).rank();
}

std::optional<std::vector<long>> simple_coordinates(const SimpleSystem& system, const Root& root) {
  std::vector<SparseVector> basis;
  for (const auto& a : system.simple_roots) basis.push_back(as_sparse(a));
  SpanSolver solver(basis);
  BasisExpansion x = solver.express(as_sparse(root));
  if (!x.residual_zero) return std::nullopt;
  std::vector<long> out(system.simple_roots.size(), 0);
  for (const auto& [i, c] : x.coefficients) {
    if (!c.is_rational() || c.rat().get_den() != 1) throw std::logic_error("non-integral simple coordinates");
    out[i] = c.rat().get_num().get_si();
  }
  return out;
}

std::vector<Root> positive_roots(const SimpleSystem& system) {
  std::vector<Root> out;
  for (const auto& r : root_set(system.family)) {
    auto c = simple_coordinates(system, r);
    if (!c) throw std::logic_error("root outside the span of the simple roots");
    if (std::all_of(c->begin(), c->end(), [](long x) { return x >= 0; })) out.push_back(r);
  }
  return out;
}

Root highest_root(const SimpleSystem& system) {
  std::optional<Root> best;
  std::vector<long> best_c;
  long best_h = -1;
  for (const auto& r : positive_roots(system)) {
    auto c = *simple_coordinates(system, r);
    long h = std::accumulate(c.begin(), c.end(), 0L);
    if (h > best_h || (h == best_h && c > best_c)) {
      best = r;
      best_c = c;
      best_h = h;
    }
  }
  if (!best) throw std::logic_error("empty positive system");
  return *best;
}

std::string to_string(NodeKind k) {
  switch (k) {
    case NodeKind::White: return "white";
    case NodeKind::Gray: return "gray";
    case NodeKind::Black: return "black";
  }
  return "?";
}

const DiagramNode& Diagram::node(int label) const {
  for (const auto& n : nodes)
    if (n.label == label) return n;
  throw std::out_of_range("no diagram node with label " + std::to_string(label));
}

std::vector<int> Diagram::labels() const {
  std::vector<int> out;
  for (const auto& n : nodes) out.push_back(n.label);
  return out;
}

namespace {

DiagramNode make_node(int label, const Root& r) {
  DiagramNode n;
  n.label = label;
  n.root = r;
  n.norm = inner_product(r, r);
  if (!r.is_odd())
    n.kind = NodeKind::White;
  else
    n.kind = n.norm == 0 ? NodeKind::Gray : NodeKind::Black;
  return n;
}

int edge_multiplicity(const DiagramNode& a, const DiagramNode& b, long p) {
  if (p == 0) return 0;
  if (a.norm == 0 && b.norm == 0) return static_cast<int>(std::labs(p));
  long best = 0;
  for (long norm : {a.norm, b.norm}) {
    if (norm == 0) continue;
    long num = std::labs(2 * p), den = std::labs(norm);
    best = std::max(best, (num + den - 1) / den);
  }
  return static_cast<int>(best);
}

}  // namespace

Diagram diagram_of(const SimpleSystem& system, bool extended) {
  Diagram d;
  d.family = system.family;
  d.extended = extended;
  if (extended) {
    Root low = -highest_root(system);
    d.lowest_root = low;
    d.nodes.push_back(make_node(0, low));
  }
  for (std::size_t i = 0; i < system.simple_roots.size(); ++i)
    d.nodes.push_back(make_node(static_cast<int>(i) + 1, system.simple_roots[i]));
  for (std::size_t i = 0; i < d.nodes.size(); ++i)
    for (std::size_t j = i + 1; j < d.nodes.size(); ++j) {
      long p = inner_product(d.nodes[i].root, d.nodes[j].root);
      int mult = edge_multiplicity(d.nodes[i], d.nodes[j], p);
      if (mult > 0) d.edges.push_back(DiagramEdge{d.nodes[i].label, d.nodes[j].label, mult, p});
    }
  return d;
}

std::string canonical_form(const Diagram& diagram) {
  const std::size_t n = diagram.nodes.size();
  std::vector<std::vector<long>> gram(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram[i][j] = inner_product(diagram.nodes[i].root, diagram.nodes[j].root);

  std::vector<long> best;
  // The form is only defined up to an overall sign (sl(n|n) has an
  // automorphism exchanging the epsilon and delta blocks).
  for (long sign : {1L, -1L}) {
    // Isomorphism-invariant node signatures; only nodes with equal
    // signatures need to be permuted among each other.
    std::vector<std::vector<long>> sig(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<long> nb;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i && gram[i][j] != 0) nb.push_back(sign * gram[i][j]);
      std::sort(nb.begin(), nb.end());
      sig[i] = {static_cast<long>(diagram.nodes[i].kind), sign * gram[i][i], static_cast<long>(nb.size())};
      sig[i].insert(sig[i].end(), nb.begin(), nb.end());
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto x, auto y) { return sig[x] < sig[y]; });
    std::vector<std::pair<std::size_t, std::size_t>> groups;
    for (std::size_t i = 0; i < n;) {
      std::size_t j = i;
      while (j < n && sig[order[j]] == sig[order[i]]) ++j;
      groups.emplace_back(i, j);
      i = j;
    }
    auto encode = [&]() {
      std::vector<long> code;
      for (std::size_t i = 0; i < n; ++i) {
        code.push_back(static_cast<long>(diagram.nodes[order[i]].kind));
        code.push_back(sign * gram[order[i]][order[i]]);
      }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) code.push_back(sign * gram[order[i]][order[j]]);
      if (best.empty() || code < best) best = std::move(code);
    };
    std::function<void(std::size_t)> rec = [&](std::size_t g) {
      if (g == groups.size()) {
        encode();
        return;
      }
      auto [lo, hi] = groups[g];
      auto first = order.begin() + static_cast<long>(lo), last = order.begin() + static_cast<long>(hi);
      std::sort(first, last);
      do {
        rec(g + 1);
      } while (std::next_permutation(first, last));
    };
    rec(0);
  }

  std::ostringstream os;
  os << (diagram.extended ? "x" : "d") << n << ":";
  for (std::size_t i = 0; i < best.size(); ++i) os << (i ? "," : "") << best[i];
  return os.str();
}

std::string render_ascii(const Diagram& diagram, const std::set<int>& deleted) {
  auto symbol = [&](const DiagramNode& nd) {
    std::string s = nd.kind == NodeKind::White ? "O" : nd.kind == NodeKind::Gray ? "X" : "●";
    s += std::to_string(nd.label);
    return deleted.count(nd.label) ? "[" + s + "]" : s;
  };
  auto glyph = [](int mult) {
    if (mult == 1) return std::string("-");
    if (mult == 2) return std::string("=");
    return "=" + std::to_string(mult) + "=";
  };
  std::map<int, std::vector<std::pair<int, int>>> adj;
  for (const auto& e : diagram.edges) {
    adj[e.a].emplace_back(e.b, e.multiplicity);
    adj[e.b].emplace_back(e.a, e.multiplicity);
  }
  std::ostringstream os;

  // A path is drawn inline; anything else (forks, cycles) gets an edge list.
  bool path = diagram.edges.size() + 1 == diagram.nodes.size();
  for (const auto& nd : diagram.nodes)
    if (adj[nd.label].size() > 2) path = false;
  int start = -1;
  if (path) {
    for (const auto& nd : diagram.nodes)
      if (adj[nd.label].size() <= 1) {
        start = nd.label;
        break;
      }
  }
  if (path && start >= 0) {
    int prev = -1, cur = start;
    std::size_t visited = 0;
    while (true) {
      os << symbol(diagram.node(cur));
      ++visited;
      int next = -1, mult = 0;
      for (auto [b, mlt] : adj[cur])
        if (b != prev) {
          next = b;
          mult = mlt;
        }
      if (next < 0) break;
      os << " " << glyph(mult) << " ";
      prev = cur;
      cur = next;
    }
    if (visited != diagram.nodes.size()) path = false;
  }
  if (!path || start < 0) {
    os.str("");
    for (std::size_t i = 0; i < diagram.nodes.size(); ++i) os << (i ? " " : "") << symbol(diagram.nodes[i]);
    os << "\n";
    for (std::size_t i = 0; i < diagram.edges.size(); ++i) {
      const auto& e = diagram.edges[i];
      os << (i ? ", " : "") << e.a << glyph(e.multiplicity) << e.b;
    }
  }
  os << "\n";
  for (const auto& nd : diagram.nodes) os << "  " << nd.label << ": " << nd.root.str() << " (" << to_string(nd.kind) << ")\n";
  return os.str();
}

std::vector<Root> regular_roots(const Family& family, const std::vector<Root>& generators) {
  std::vector<std::vector<long>> gens;
  for (const auto& g : generators) gens.push_back(as_vector(g));
  IntLattice lattice(gens);
  std::vector<Root> out;
  for (const auto& r : root_set(family))
    if (lattice.contains(as_vector(r))) out.push_back(r);
  return out;
}

SubalgebraName recognize_subsystem(const Family& family, const std::vector<Root>& roots) {
  SubalgebraName name;
  const std::set<Root> all(roots.begin(), roots.end());
  const std::vector<Root> list(all.begin(), all.end());
  const std::size_t n = list.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Root s = list[i] + list[j];
      Root d = list[i] - list[j];
      if (s.is_zero() || all.count(s) || all.count(d)) parent[find(i)] = find(j);
    }
  std::map<std::size_t, std::vector<Root>> comps;
  for (std::size_t i = 0; i < n; ++i) comps[find(i)].push_back(list[i]);

  for (const auto& [rep, comp] : comps) {
    std::set<int> eps_used, delta_used;
    bool single = false, dbl = false;
    for (const auto& r : comp) {
      int nonzero = 0, absval = 0;
      for (std::size_t i = 0; i < r.eps.size(); ++i)
        if (r.eps[i] != 0) {
          eps_used.insert(static_cast<int>(i));
          ++nonzero;
          absval = std::abs(r.eps[i]);
        }
      for (std::size_t k = 0; k < r.delta.size(); ++k)
        if (r.delta[k] != 0) {
          delta_used.insert(static_cast<int>(k));
          ++nonzero;
          absval = std::abs(r.delta[k]);
        }
      if (nonzero == 1 && absval == 1) single = true;
      if (nonzero == 1 && absval == 2) dbl = true;
    }
    const long a = static_cast<long>(eps_used.size()), b = static_cast<long>(delta_used.size());
    const int r = rational_rank(comp);
    const long count = static_cast<long>(comp.size());
    auto fail = [&]() {
      throw std::logic_error("unrecognized root subsystem component in " + family.name() + " with " +
                             std::to_string(count) + " roots");
    };
    if (single) {
      if (r != a + b || count != 2 * (a + b) * (a + b) + 2 * b) fail();
      name.add(normalize_b_super(static_cast<int>(a), static_cast<int>(b)));
    } else if (dbl) {
      if (r != a + b || count != 2 * (a + b) * (a + b) - 2 * a) fail();
      name.add(normalize_d_super(static_cast<int>(a), static_cast<int>(b)));
    } else if (r == a + b - 1) {
      if (count != (a + b) * (a + b - 1)) fail();
      name.add(normalize_sl(static_cast<int>(a), static_cast<int>(b)));
    } else if (r == a + b && b == 0) {
      if (count != 2 * a * (a - 1)) fail();
      name.add(normalize_d_lie(static_cast<int>(a)));
    } else {
      fail();
    }
  }
  name.cartan_excess = family.rank() - rational_rank(roots);
  return name;
}

std::vector<Root> retained_roots(const Diagram& diagram, const std::set<int>& deleted) {
  std::vector<Root> out;
  for (const auto& nd : diagram.nodes)
    if (!deleted.count(nd.label)) out.push_back(nd.root);
  return out;
}

SubalgebraName classify_components(const Diagram& diagram, const std::set<int>& deleted) {
  for (int d : deleted) diagram.node(d);
  auto roots = regular_roots(diagram.family, retained_roots(diagram, deleted));
  return recognize_subsystem(diagram.family, roots);
}

}  // namespace gqs
