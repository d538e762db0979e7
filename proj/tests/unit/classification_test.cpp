#include <gtest/gtest.h>

#include <set>

#include "gqs/classification.hpp"
#include "json.hpp"

using gqs::Family;

namespace {

std::set<std::string> keys(const gqs::Classification& c) {
  std::set<std::string> out;
  for (const auto& k : c.cases) out.insert(k.key());
  return out;
}

std::string row(std::initializer_list<std::vector<gqs::Summand>> parts, int length, int N) {
  gqs::SubalgebraName name;
  for (const auto& p : parts) name.add(p);
  return name.key() + "|" + std::to_string(length) + "|" + std::to_string(N);
}

}  // namespace

// B(0|n): deleting node i gives G0 = sl(i) + B(0|n-i), length 5, N = i(2n-2i+1).
TEST(Classification, BZeroRowsFollowTheClosedFormula) {
  for (int n = 1; n <= 3; ++n) {
    std::set<std::string> expect;
    for (int i = 1; i <= n; ++i) {
      gqs::SubalgebraName name;
      name.add(gqs::normalize_sl(i, 0));
      if (n - i > 0) name.add(gqs::normalize_b_super(0, n - i));
      expect.insert(name.key() + "|5|" + std::to_string(i * (2 * n - 2 * i + 1)));
    }
    const auto c = gqs::enumerate_all(Family::B0(n));
    EXPECT_EQ(keys(c), expect) << "n = " << n;
    EXPECT_TRUE(c.errors.empty());
  }
}

TEST(Classification, SlOneTwoHasBothLengths) {
  const auto c = gqs::enumerate_all(Family::A(0, 1));
  bool three = false, five = false;
  for (const auto& k : c.cases) {
    three = three || k.length == 3;
    five = five || k.length == 5;
  }
  EXPECT_TRUE(three);
  EXPECT_TRUE(five);
}

// Frozen from a full run with non-distinguished systems; each row was checked
// against the closed-form N values 2i(m+n-i) and 2(m+n-1).
TEST(Classification, DTwoOneSnapshot) {
  gqs::EnumerationOptions opt;
  opt.include_nondistinguished = true;
  const auto c = gqs::enumerate_all(Family::D(2, 1), opt);
  EXPECT_EQ(c.systems, 3);
  const std::set<std::string> expect{row({gqs::normalize_sl(1, 1)}, 5, 4),
                                     row({gqs::normalize_sl(2, 0), gqs::normalize_sl(2, 0)}, 5, 4),
                                     row({gqs::normalize_sl(2, 1)}, 3, 4)};
  EXPECT_EQ(keys(c), expect);
  EXPECT_TRUE(c.all_valid());
}

TEST(Classification, OddOnlyCasesHaveOddWitnesses) {
  const gqs::AlgebraModel model = gqs::build(Family::B0(2));
  const auto c = gqs::enumerate_all(Family::B0(2));
  const auto odd = gqs::odd_only_filter(c.cases);
  ASSERT_EQ(odd.size(), 1u);
  EXPECT_EQ(odd[0].g0_name.key(), "sl(2)");
  for (const auto& k : odd) {
    bool any = false;
    for (const auto& w : k.provenance) any = any || w.odd_only;
    EXPECT_TRUE(any);
  }
}

TEST(Classification, JsonIsIndependentOfThreadCount) {
  gqs::EnumerationOptions one, three;
  one.jobs = 1;
  three.jobs = 3;
  const std::string a = gqs::classification_json(gqs::enumerate_all(Family::A(1, 1), one));
  const std::string b = gqs::classification_json(gqs::enumerate_all(Family::A(1, 1), three));
  EXPECT_EQ(a, b);
  const auto j = nlohmann::json::parse(a);
  EXPECT_EQ(j.at("schema_version"), 1);
  EXPECT_FALSE(j.at("cases").empty());
}

TEST(Classification, ExpectedRowsAreDeduplicated) {
  for (const Family& f : {Family::A(1, 1), Family::B(1, 1), Family::C(3), Family::D(2, 2)}) {
    std::set<std::string> seen;
    for (const auto& r : gqs::table2_expected(f)) EXPECT_TRUE(seen.insert(r.key()).second) << f.name() << " " << r.key();
  }
}

TEST(Classification, NegativeSpaceOnPlainDiagrams) {
  for (const Family& f : {Family::A(2, 1), Family::B(1, 2), Family::D(2, 2)}) {
    const auto r = gqs::negative_space(f, 3, 4, 4);
    EXPECT_GT(r.checked, 0);
    EXPECT_TRUE(r.violations.empty()) << f.name() << ": " << (r.violations.empty() ? "" : r.violations.front());
  }
}
