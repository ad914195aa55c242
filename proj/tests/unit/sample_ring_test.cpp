#include <gtest/gtest.h>

#include "adf/sample_ring.hpp"

namespace adf {
namespace {

TEST(SampleRing, RejectsZeroCapacity) { EXPECT_THROW(SampleRing(0), std::invalid_argument); }

TEST(SampleRing, NewestWindowIsContiguousAcrossWrap) {
  SampleRing ring(4);
  for (int i = 0; i < 11; ++i) {
    ring.push({double(i), 10.0 * i});
    const std::size_t n = ring.size();
    ASSERT_EQ(n, std::min<std::size_t>(i + 1, 4));
    const auto w = ring.newest(n);
    for (std::size_t k = 0; k < n; ++k) {
      EXPECT_EQ(w[k].t, double(i - (n - 1) + k));
      EXPECT_EQ(ring.back(n - 1 - k), w[k]);
    }
  }
  EXPECT_TRUE(ring.full());
  ring.clear();
  EXPECT_TRUE(ring.empty());
}

}  // namespace
}  // namespace adf
