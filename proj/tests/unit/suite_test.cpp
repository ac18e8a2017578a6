#include <gtest/gtest.h>

#include <algorithm>

#include "lrb/errors.hpp"
#include "lrb/suite.hpp"

namespace lrb::suite {
namespace {

TEST(Suite, BlocksAreSortedAndCoverEveryCriterion) {
  const auto blocks = block_names();
  EXPECT_TRUE(std::is_sorted(blocks.begin(), blocks.end()));
  EXPECT_EQ(criterion_count(), 11);
  for (int k = 1; k <= criterion_count(); ++k)
    EXPECT_NE(std::find(blocks.begin(), blocks.end(), block_of(k)), blocks.end()) << k;
}

TEST(Suite, OnlyFilterRunsTheNamedBlocks) {
  const auto results = run_suite({"n3", "counit"});
  ASSERT_FALSE(results.empty());
  for (const auto& r : results) {
    EXPECT_TRUE(r.block == "n3" || r.block == "counit") << r.block;
    EXPECT_TRUE(r.pass) << r.detail;
  }
  EXPECT_TRUE(std::is_sorted(results.begin(), results.end(),
                             [](const auto& a, const auto& b) { return a.block < b.block; }));
}

TEST(Suite, UnknownCriterionIsRejected) {
  EXPECT_THROW(run_criterion(99), InputError);
  EXPECT_THROW(block_of(0), InputError);
}

}  // namespace
}  // namespace lrb::suite
