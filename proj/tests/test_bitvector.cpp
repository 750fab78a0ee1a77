#include <doctest.h>

#include "sts/bitvector.hpp"
#include "sts/rng.hpp"

using sts::BitVector;

TEST_CASE("bit vector basics across word boundaries") {
  BitVector a(130);
  CHECK(a.none());
  a.set(0);
  a.set(64);
  a.set(129);
  CHECK(a.count() == 3);
  CHECK(a.test(64));
  CHECK_FALSE(a.test(63));
  CHECK(a.indices() == std::vector<std::size_t>{0, 64, 129});
  a.reset(64);
  CHECK(a.count() == 2);

  BitVector full(130, true);
  CHECK(full.count() == 130);
  full.and_not(a);
  CHECK(full.count() == 128);
  CHECK_FALSE(full.intersects(a));
  CHECK(full.and_count(BitVector(130, true)) == 128);
}

TEST_CASE("and_count matches a bit-by-bit count") {
  sts::Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng.below(300);
    BitVector a(n), b(n);
    std::size_t expected = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const bool x = rng.below(2) == 1;
      const bool y = rng.below(3) == 0;
      if (x) a.set(i);
      if (y) b.set(i);
      expected += (x && y) ? 1 : 0;
    }
    CHECK(a.and_count(b) == expected);
    BitVector c = a;
    c &= b;
    CHECK(c.count() == expected);
  }
}

TEST_CASE("zero-width vectors") {
  BitVector z(0, true);
  CHECK(z.count() == 0);
  CHECK(z.none());
}
