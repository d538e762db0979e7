#include <gtest/gtest.h>

#include "gqs/classification.hpp"
#include "gqs/closed_forms.hpp"
#include "gqs/relations.hpp"

using gqs::ExactScalar;
using gqs::Family;
using gqs::SuperMatrix;

namespace {

gqs::CaoSet para_bose_set(int n) {
  const Family f = Family::B0(n);
  const gqs::AlgebraModel model = gqs::build(f);
  const auto a = gqs::analyze_deletion(model, gqs::diagram_of(gqs::distinguished_system(f), false), {n});
  return gqs::cao_set(model, a.gradings.at(0));
}

SuperMatrix pair_bracket(const gqs::CaoSet& c, int a, int b) {
  return gqs::superbracket(c.op(a), c.op(b), c.op_parity(a), c.op_parity(b));
}

}  // namespace

// The quadratic relations of (A1) at m = 0, n = 2 are the vanishing of all
// {a_i^+, a_j^+} and {a_i^-, a_j^-}, checked against the matrices directly.
TEST(Relations, QuadraticRelationsOfSlOneThree) {
  const gqs::ClosedForm cf = gqs::build_closed_form("A1", 0, 2);
  const gqs::CaoSet& c = cf.caos;
  ASSERT_EQ(c.N(), 3);
  const gqs::RelationSet rel = gqs::generate_relations(c);
  ASSERT_EQ(rel.pair_symbols.size(), static_cast<std::size_t>(c.op_count() * (c.op_count() + 1) / 2));

  std::vector<SuperMatrix> brackets;
  for (const auto& [a, b] : rel.pair_symbols) brackets.push_back(pair_bracket(c, a, b));
  EXPECT_EQ(rel.quadratic.size(), rel.pair_symbols.size() - gqs::span_rank(brackets));

  gqs::SpanSolver relations;
  for (const auto& row : rel.quadratic) relations.add(gqs::sparsify(row));
  for (std::size_t s = 0; s < rel.pair_symbols.size(); ++s) {
    const auto [a, b] = rel.pair_symbols[s];
    const bool same_sign = a % 2 == b % 2;
    EXPECT_EQ(relations.contains(gqs::SparseVector{{static_cast<int>(s), ExactScalar(1)}}), same_sign)
        << c.op_name(a) << " " << c.op_name(b);
    EXPECT_EQ(brackets[s].is_zero(), same_sign);
  }
}

// Every stored triple expansion agrees with direct matrix evaluation.
TEST(Relations, TripleExpansionsMatchMatrices) {
  for (const gqs::CaoSet& c : {para_bose_set(2), gqs::build_closed_form("A2", 1, 1).caos}) {
    const gqs::RelationSet rel = gqs::generate_relations(c);
    EXPECT_EQ(rel.triple.size(), rel.pair_symbols.size() * static_cast<std::size_t>(c.op_count()));
    for (const auto& [key, x] : rel.triple) {
      ASSERT_TRUE(x.residual_zero);
      SuperMatrix sum(c.op(0).size());
      for (const auto& [k, coef] : x.coefficients) sum += c.op(k) * coef;
      const int pab = (c.op_parity(key.a) + c.op_parity(key.b)) % 2;
      EXPECT_EQ(sum, gqs::superbracket(pair_bracket(c, key.a, key.b), c.op(key.c), pab, c.op_parity(key.c)));
    }
  }
}

TEST(Relations, GenerationCheck) {
  const gqs::AlgebraModel one = gqs::build(Family::B0(1));
  EXPECT_TRUE(gqs::generation_check(one, para_bose_set(1)));

  const gqs::AlgebraModel two = gqs::build(Family::B0(2));
  gqs::CaoSet full = para_bose_set(2);
  EXPECT_EQ(full.N(), 2);
  EXPECT_TRUE(full.all_odd());
  EXPECT_TRUE(gqs::generation_check(two, full));
  gqs::CaoSet reduced = full;
  reduced.pairs.pop_back();
  EXPECT_FALSE(gqs::generation_check(two, reduced));
  // The single pair only spans osp(1|2).
  std::vector<SuperMatrix> span{reduced.op(0), reduced.op(1)};
  for (int a = 0; a < 2; ++a)
    for (int b = a; b < 2; ++b) span.push_back(pair_bracket(reduced, a, b));
  EXPECT_EQ(gqs::span_rank(span), 5u);
}

TEST(Relations, DigestIsStable) {
  const auto a = gqs::generate_relations(para_bose_set(2));
  const auto b = gqs::generate_relations(para_bose_set(2));
  EXPECT_EQ(gqs::relation_digest(a), gqs::relation_digest(b));
  EXPECT_EQ(gqs::digest_hex(gqs::relation_digest(a)).size(), 16u);
  EXPECT_NE(gqs::relation_digest(a), gqs::relation_digest(gqs::generate_relations(para_bose_set(1))));
}

TEST(Relations, Rendering) {
  const gqs::CaoSet c = para_bose_set(1);
  const auto rel = gqs::generate_relations(c);
  const std::string text = gqs::relations_text(rel, c);
  EXPECT_NE(text.find("[[[["), std::string::npos);
  EXPECT_NE(gqs::relations_latex(rel, c).find("\\begin{align*}"), std::string::npos);
}

TEST(ClosedForms, EveryIdentityHoldsAtSmallRank) {
  for (const std::string& id : gqs::closed_form_ids()) {
    int m = 1, n = 1;
    if (id == "sl1n" || id == "CS1" || id == "CS2" || id == "pBose") m = 0;
    if (id == "CS1" || id == "CS2") n = 2;
    for (const auto& r : gqs::verify_closed_form_all(id, m, n)) {
      EXPECT_TRUE(r.identities_hold()) << id << (r.failures.empty() ? "" : ": " + r.failures.front());
      EXPECT_TRUE(r.complete_with_jacobi()) << id;
    }
  }
}

// (A1) at m = n = 1: [[[[a_1^-, a_1^+]], a_2^+]] by brute force over the operators.
TEST(ClosedForms, AOneTripleAgainstMatrices) {
  const gqs::ClosedForm cf = gqs::build_closed_form("A1", 1, 1);
  const gqs::CaoSet& c = cf.caos;
  const SuperMatrix target =
      gqs::superbracket(pair_bracket(c, 0, 1), c.op(3), 0, c.op_parity(3));
  std::vector<SuperMatrix> ops;
  for (int a = 0; a < c.op_count(); ++a) ops.push_back(c.op(a));
  const gqs::BasisExpansion x = gqs::express_in_span(target, ops);
  ASSERT_TRUE(x.residual_zero);
  const auto rel = gqs::generate_relations(c);
  EXPECT_EQ(rel.triple.at(gqs::TripleKey{0, 1, 3}), x);
}

TEST(ClosedForms, UnknownIdThrows) {
  EXPECT_THROW(gqs::build_closed_form("nope", 1, 1), std::invalid_argument);
  EXPECT_THROW(gqs::build_closed_form("A21R", 1, 1, 9), std::invalid_argument);
}
