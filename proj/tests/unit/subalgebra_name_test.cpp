#include <gtest/gtest.h>

#include "gqs/subalgebra_name.hpp"

using namespace gqs;

namespace {

std::string name_of(std::initializer_list<std::vector<Summand>> parts) {
  SubalgebraName n;
  for (const auto& p : parts) n.add(p);
  return n.key();
}

}  // namespace

TEST(SubalgebraName, LowRankIsomorphisms) {
  EXPECT_TRUE(normalize_sl(1, 0).empty());
  EXPECT_TRUE(normalize_sl(0, 1).empty());
  EXPECT_EQ(name_of({normalize_sl(1, 2)}), name_of({normalize_sl(2, 1)}));
  EXPECT_EQ(name_of({normalize_b_lie(1)}), "sl(2)");
  EXPECT_EQ(name_of({normalize_c_lie(1)}), "sl(2)");
  EXPECT_EQ(name_of({normalize_b_lie(2)}), name_of({normalize_c_lie(2)}));
  EXPECT_EQ(name_of({normalize_d_lie(2)}), "sl(2)+sl(2)");
  EXPECT_EQ(name_of({normalize_d_lie(3)}), "sl(4)");
  EXPECT_TRUE(normalize_d_lie(1).empty());
  EXPECT_EQ(name_of({normalize_b_super(2, 0)}), name_of({normalize_b_lie(2)}));
  EXPECT_EQ(name_of({normalize_d_super(3, 0)}), name_of({normalize_d_lie(3)}));
  EXPECT_EQ(name_of({normalize_d_super(0, 2)}), name_of({normalize_c_lie(2)}));
  EXPECT_EQ(name_of({normalize_d_super(1, 2)}), name_of({normalize_c_super(3)}));
  EXPECT_EQ(name_of({normalize_c_super(2)}), "sl(2|1)");
}

TEST(SubalgebraName, SummandsAreSorted) {
  SubalgebraName a, b;
  a.add(normalize_sl(2, 0));
  a.add(normalize_b_super(0, 2));
  b.add(normalize_b_super(0, 2));
  b.add(normalize_sl(2, 0));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.str(), "H+" + a.key());
  EXPECT_EQ(SubalgebraName{}.str(), "H");
}
