#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>

#include "gqs/root_system.hpp"

using gqs::Family;
using gqs::NodeKind;
using gqs::Root;

namespace {

Root R(std::vector<int> e, std::vector<int> d) { return Root(std::move(e), std::move(d)); }

// Simple systems of sl(m+1|n+1) correspond to words in m+1 letters e and n+1
// letters d. Negating all roots reverses the word; for m = n, swapping e and d
// gives the diagram with the negated form. Counts the orbits of words.
std::size_t interleaving_orbits(int m, int n) {
  std::string w = std::string(m + 1, 'd') + std::string(n + 1, 'e');
  std::sort(w.begin(), w.end());
  std::set<std::string> seen;
  std::size_t orbits = 0;
  auto swap_letters = [](std::string s) {
    for (char& c : s) c = c == 'e' ? 'd' : 'e';
    return s;
  };
  do {
    if (seen.count(w)) continue;
    ++orbits;
    std::string r(w.rbegin(), w.rend());
    seen.insert(w);
    seen.insert(r);
    if (m == n) {
      seen.insert(swap_letters(w));
      seen.insert(swap_letters(r));
    }
  } while (std::next_permutation(w.begin(), w.end()));
  return orbits;
}

long binomial(int a, int b) {
  long r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

std::string kinds(const gqs::Diagram& d) {
  std::string s;
  for (const auto& node : d.nodes) s += node.kind == NodeKind::White ? 'O' : node.kind == NodeKind::Gray ? 'X' : 'B';
  return s;
}

}  // namespace

TEST(RootSystem, InnerProduct) {
  const Root e1 = Root::eps_unit(2, 1, 1), d1 = Root::delta_unit(2, 1, 1);
  EXPECT_EQ(gqs::inner_product(e1, e1), 1);
  EXPECT_EQ(gqs::inner_product(d1, d1), -1);
  EXPECT_EQ(gqs::inner_product(e1 - d1, e1 - d1), 0);
  EXPECT_TRUE((e1 - d1).is_odd());
  EXPECT_FALSE((2 * d1).is_odd());
  EXPECT_EQ((e1 - d1).str(), "ε1-δ1");
}

TEST(RootSystem, DistinguishedCTwo) {
  const auto s = gqs::distinguished_system(Family::C(2));
  ASSERT_EQ(s.simple_roots.size(), 2u);
  EXPECT_EQ(s.simple_roots[0], R({1}, {-1}));
  EXPECT_EQ(s.simple_roots[1], R({0}, {2}));
}

TEST(RootSystem, OddReflectionInSlTwoOne) {
  const auto s = gqs::distinguished_system(Family::A(1, 0));
  EXPECT_THROW(gqs::odd_reflect(s, 1), std::invalid_argument);
  const auto r = gqs::odd_reflect(s, 2);
  // {ε1-ε2, ε2-δ1} reflected at ε2-δ1 gives {ε1-δ1, δ1-ε2}.
  EXPECT_EQ(r.simple_roots[0], R({1, 0}, {-1}));
  EXPECT_EQ(r.simple_roots[1], R({0, -1}, {1}));
  EXPECT_EQ(gqs::diagram_of(r, false).node(1).kind, NodeKind::Gray);
  // Reflecting back returns the distinguished system.
  const auto back = gqs::odd_reflect(r, 2);
  EXPECT_EQ(std::set<Root>(back.simple_roots.begin(), back.simple_roots.end()),
            std::set<Root>(s.simple_roots.begin(), s.simple_roots.end()));
}

TEST(RootSystem, TypeACountsMatchInterleavingOrbits) {
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      if (m + n == 0 || m + n > 5) continue;
      const Family f = Family::A(m, n);
      EXPECT_EQ(gqs::reflection_closure(f).size(), static_cast<std::size_t>(binomial(m + n + 2, m + 1))) << f.name();
      EXPECT_EQ(gqs::enumerate_simple_systems(f).size(), interleaving_orbits(m, n)) << f.name();
    }
  EXPECT_EQ(interleaving_orbits(1, 1), 3u);
  EXPECT_EQ(interleaving_orbits(2, 2), 7u);
}

TEST(RootSystem, BZeroHasOneSystem) {
  for (int n = 1; n <= 3; ++n) EXPECT_EQ(gqs::enumerate_simple_systems(Family::B0(n)).size(), 1u);
}

TEST(RootSystem, DistinguishedComesFirst) {
  for (const Family& f : {Family::A(2, 1), Family::B(1, 2), Family::C(3), Family::D(2, 2)}) {
    const auto all = gqs::enumerate_simple_systems(f);
    EXPECT_EQ(gqs::canonical_form(gqs::diagram_of(all.front(), false)),
              gqs::canonical_form(gqs::diagram_of(gqs::distinguished_system(f), false)));
  }
}

// Every simple system splits the roots in half, and every root has
// same-sign integer coordinates.
TEST(RootSystem, PositiveRootsHalveTheRootSet) {
  for (const Family& f : {Family::A(1, 2), Family::B(2, 1), Family::B0(3), Family::C(3), Family::D(2, 2), Family::D(3, 1)}) {
    const auto roots = gqs::root_set(f);
    for (const auto& s : gqs::reflection_closure(f)) {
      EXPECT_EQ(gqs::positive_roots(s).size() * 2, roots.size()) << f.name();
      for (const Root& r : roots) {
        const auto c = gqs::simple_coordinates(s, r);
        ASSERT_TRUE(c.has_value());
        const bool nonneg = std::all_of(c->begin(), c->end(), [](long x) { return x >= 0; });
        const bool nonpos = std::all_of(c->begin(), c->end(), [](long x) { return x <= 0; });
        EXPECT_TRUE(nonneg || nonpos) << f.name() << " " << r.str();
      }
    }
  }
}

// Node kinds of the distinguished diagrams, read off the standard pictures.
TEST(RootSystem, DistinguishedDiagramShapes) {
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n)
      if (m + n >= 1 && m + n <= 4) {
        const auto d = gqs::diagram_of(gqs::distinguished_system(Family::A(m, n)), false);
        EXPECT_EQ(kinds(d), std::string(m, 'O') + "X" + std::string(n, 'O'));
        EXPECT_EQ(d.edges.size(), static_cast<std::size_t>(m + n));
      }
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n) {
      const auto d = gqs::diagram_of(gqs::distinguished_system(Family::B(m, n)), false);
      EXPECT_EQ(kinds(d), std::string(n - 1, 'O') + "X" + std::string(m, 'O'));
    }
  for (int n = 1; n <= 4; ++n)
    EXPECT_EQ(kinds(gqs::diagram_of(gqs::distinguished_system(Family::B0(n)), false)), std::string(n - 1, 'O') + "B");
  for (int n = 2; n <= 4; ++n)
    EXPECT_EQ(kinds(gqs::diagram_of(gqs::distinguished_system(Family::C(n)), false)), "X" + std::string(n - 1, 'O'));
  for (int m = 2; m <= 3; ++m)
    for (int n = 1; n <= 2; ++n) {
      const auto d = gqs::diagram_of(gqs::distinguished_system(Family::D(m, n)), false);
      EXPECT_EQ(kinds(d), std::string(n - 1, 'O') + "X" + std::string(m, 'O'));
      // The fork: node m+n-2 meets both m+n-1 and m+n.
      int fork = 0;
      for (const auto& edge : d.edges)
        if (edge.a == m + n - 2 && edge.b >= m + n - 1) ++fork;
      EXPECT_EQ(fork, 2) << d.family.name();
    }
}

TEST(RootSystem, ExtendedNodeIsLowestRoot) {
  for (const Family& f : {Family::A(1, 1), Family::B(1, 1), Family::B0(2), Family::C(3), Family::D(2, 1)}) {
    const auto s = gqs::distinguished_system(f);
    const auto d = gqs::diagram_of(s, true);
    EXPECT_EQ(d.nodes.front().label, 0);
    EXPECT_EQ(d.node(0).root, -gqs::highest_root(s)) << f.name();
    EXPECT_EQ(d.nodes.size(), static_cast<std::size_t>(f.rank() + 1));
  }
  // Distinguished A(m|n): the lowest root is δ_{n+1} - ε_1.
  const auto d = gqs::diagram_of(gqs::distinguished_system(Family::A(1, 1)), true);
  EXPECT_EQ(d.node(0).root, R({-1, 0}, {0, 1}));
}

TEST(RootSystem, RecognizedSubsystems) {
  const auto d = gqs::diagram_of(gqs::distinguished_system(Family::A(1, 1)), false);
  EXPECT_EQ(gqs::classify_components(d, {2}).key(), "sl(2)+sl(2)");
  EXPECT_EQ(gqs::classify_components(d, {1}).key(), "sl(2|1)");
  const auto b = gqs::diagram_of(gqs::distinguished_system(Family::B0(3)), false);
  EXPECT_EQ(gqs::classify_components(b, {3}).key(), "sl(3)");
  EXPECT_EQ(gqs::classify_components(b, {1}).key(), "B(0|2)");
}
