#include <doctest.h>

#include <set>

#include "sts/bounds.hpp"
#include "sts/errors.hpp"
#include "sts/rng.hpp"

using namespace sts;

namespace {

// Bisection oracle for floor(sqrt(n)).
BigInt bisect_sqrt(const BigInt& n) {
  BigInt lo = 0, hi = n + 1;
  while (hi - lo > 1) {
    const BigInt mid = (lo + hi) / 2;
    if (mid * mid <= n) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

// Largest s in [0, v] with 6s <= numerator(v, s), found by scanning.
std::int64_t scan_ceiling(std::int64_t v) {
  std::int64_t best = 0;
  for (std::int64_t s = 0; s <= v; ++s) {
    const std::int64_t num = v * (v - 1) + s * s - s * (2 * v - 1);
    if (num >= 6 * s) best = s;
    else break;
  }
  return best;
}

}  // namespace

TEST_CASE("isqrt agrees with bisection") {
  for (std::int64_t n = 0; n <= 20000; ++n) REQUIRE(isqrt(BigInt(n)) == bisect_sqrt(BigInt(n)));
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    BigInt n = 0;
    const int limbs = 1 + static_cast<int>(rng.below(4));
    for (int i = 0; i < limbs; ++i) n = (n << 64) + rng.next();
    const BigInt r = isqrt(n);
    CHECK(r == bisect_sqrt(n));
    CHECK(r * r <= n);
    CHECK((r + 1) * (r + 1) > n);
    CHECK(isqrt(r * r) == r);
    if (r > 0) CHECK(isqrt(r * r - 1) == r - 1);
  }
  CHECK(is_perfect_square(BigInt(529)));
  CHECK_FALSE(is_perfect_square(BigInt(530)));
  CHECK_THROWS_AS(isqrt(BigInt(-1)), InputError);
}

TEST_CASE("disjoint block bound examples") {
  CHECK(disjoint_block_bound(39, 26) == 26);
  CHECK(disjoint_block_bound(9, 3) == 5);
  for (int v : {1, 3, 7, 9, 13, 15, 19, 21, 39, 91}) CHECK(disjoint_block_bound(v, 0) == v * (v - 1) / 6);
  // 9*8 + 1 - 17 = 56, not a multiple of 6.
  CHECK(disjoint_bound_numerator(9, 1) == 56);
  CHECK(disjoint_block_bound(9, 1) == 9);
  CHECK(disjoint_bound_remainder(9, 1) == 2);
  CHECK(disjoint_bound_remainder(39, 26) == 0);
  CHECK_THROWS_AS(disjoint_block_bound(11, 3), InputError);
  CHECK_THROWS_AS(disjoint_block_bound(9, 10), InputError);
  CHECK_THROWS_AS(disjoint_block_bound(9, -1), InputError);
}

TEST_CASE("nonincidence ceiling examples") {
  CHECK(max_nonincident_bound(39) == 26);
  CHECK(max_nonincident_bound(21) == 12);
  CHECK(max_nonincident_bound(91) == 70);
  CHECK(max_nonincident_bound(7) == 2);
  CHECK(max_nonincident_bound(9) == 3);
  CHECK(max_nonincident_bound(13) == 6);
  CHECK(max_nonincident_bound(3) == 0);
  CHECK(max_nonincident_bound(1) == 0);
  CHECK_THROWS_AS(max_nonincident_bound(11), InputError);
  CHECK_THROWS_AS(max_nonincident_bound(0), InputError);
}

TEST_CASE("ceiling is the crossing point for every admissible v up to 10^6") {
  std::size_t checked = 0;
  for (std::int64_t v = 1; v <= 1'000'000; ++v) {
    if (v % 6 != 1 && v % 6 != 3) continue;
    const BigInt s = max_nonincident_bound(v);
    REQUIRE(disjoint_block_bound(v, s) >= s);
    if (s + 1 <= v) REQUIRE(disjoint_block_bound(v, s + 1) < s + 1);
    ++checked;
  }
  CHECK(checked == 333'334);
  for (std::int64_t v = 1; v <= 3000; v += 2) {
    if (v % 6 != 1 && v % 6 != 3) continue;
    REQUIRE(max_nonincident_bound(v) == scan_ceiling(v));
  }
}

TEST_CASE("ceiling at very large orders stays exact") {
  // v from family 4 at z = 10^15: t = 72z + 47 exactly.
  const BigInt z = BigInt(1'000'000'000'000'000LL);
  const BigInt v = 216 * z * z + 282 * z + 91;
  const BigInt t = 72 * z + 47;
  CHECK(t * t == 24 * v + 25);
  CHECK(max_nonincident_bound(v) == (2 * v + 5 - t) / 2);
  CHECK(max_nonincident_bound(v + 6) == (2 * (v + 6) + 5 - (t + 1)) / 2);
}

TEST_CASE("subsystem complement count") {
  CHECK(subsystem_complement_count(21, 9) == 12);
  CHECK(subsystem_complement_count(91, 21) == 70);
  CHECK(subsystem_complement_count(39, 13) == 26);
  for (int w = 1; w < 200; w += 2) {
    CHECK(subsystem_complement_count(2 * w + 1, w) == w * (w - 1) / 6);
    CHECK(subsystem_complement_count(5 * w + 3, w) == w * (w - 1) / 6);
  }
  CHECK(subsystem_complement_count(1, 1) == 0);  // whole design as its own subsystem
  CHECK_THROWS_AS(subsystem_complement_count(15, 9), InputError);
}

TEST_CASE("equality families at z = 0 and z = 1") {
  const auto zero = enumerate_equality_orders(0);
  REQUIRE(zero.size() == 4);
  const std::vector<int> vs{1, 21, 39, 91}, ss{0, 12, 26, 70}, fams{1, 3, 2, 4};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(zero[i].v == vs[i]);
    CHECK(zero[i].s == ss[i]);
    CHECK(zero[i].family == fams[i]);
    CHECK(zero[i].z == 0);
  }
  const auto one = enumerate_equality_orders(1);
  REQUIRE(one.size() == 8);
  const auto it = std::find_if(one.begin(), one.end(), [](const auto& r) { return r.v == 259; });
  REQUIRE(it != one.end());
  CHECK(it->family == 1);
  CHECK(it->s == 222);
  CHECK(it->w == 37);
  CHECK(it->z == 1);
}

TEST_CASE("family records satisfy every condition") {
  for (const auto& r : enumerate_equality_orders(40)) {
    CAPTURE(r.v);
    CHECK(r.t * r.t == 24 * r.v + 25);
    CHECK(r.s == r.v - (r.t - 5) / 2);
    CHECK(is_admissible_order(r.v));
    CHECK(is_admissible_order(r.w));
    CHECK(max_nonincident_bound(r.v) == r.s);
    if (r.v == 1) continue;  // degenerate: s = 0, w = v
    CHECK(r.v >= 2 * r.w + 1);
    CHECK(subsystem_complement_count(r.v, r.w) == r.s);
    CHECK(disjoint_block_bound(r.v, r.s) == r.s);
  }
}

TEST_CASE("classification agrees with enumeration") {
  const auto records = enumerate_equality_orders(6);
  std::set<BigInt> orders;
  for (const auto& r : records) orders.insert(r.v);
  const BigInt limit = *orders.rbegin();
  for (BigInt v = 0; v <= limit; ++v) {
    const auto c = classify_equality_order(v);
    REQUIRE(c.has_value() == (orders.count(v) == 1));
  }
  // Brute-force conditions 1-4 independently of the family algebra.
  for (std::int64_t v = 1; v <= 200000; ++v) {
    const std::int64_t disc = 24 * v + 25;
    const auto t = static_cast<std::int64_t>(isqrt(BigInt(disc)));
    bool expected = false;
    if ((v % 6 == 1 || v % 6 == 3) && t * t == disc) {
      const std::int64_t s = (2 * v + 5 - t) / 2;
      const std::int64_t w = v - s;
      expected = (w % 6 == 1 || w % 6 == 3) && (v >= 2 * w + 1 || s == 0);
    }
    REQUIRE(classify_equality_order(v).has_value() == expected);
  }
}

TEST_CASE("classification examples") {
  const auto r91 = classify_equality_order(91);
  REQUIRE(r91);
  CHECK(r91->family == 4);
  CHECK(r91->z == 0);
  CHECK(r91->s == 70);
  CHECK(r91->w == 21);
  CHECK_FALSE(classify_equality_order(25));  // t = 25 but w = 10
  CHECK_FALSE(classify_equality_order(13));  // 337 not a square
  CHECK_FALSE(classify_equality_order(15));
  CHECK_FALSE(classify_equality_order(-5));
}

TEST_CASE("intersection curve") {
  const IntersectionCurve c39 = intersection_curve_data(39);
  REQUIRE(c39.rows.size() == 40);
  CHECK(c39.crossing == 26);
  CHECK(c39.crossing_integral);
  CHECK(c39.rows[26].bound == 26);
  CHECK(c39.rows[25].bound > 25);
  CHECK(c39.rows[27].bound < 27);

  const IntersectionCurve c21 = intersection_curve_data(21);
  CHECK(c21.crossing == 12);
  CHECK(c21.crossing_integral);
  CHECK(c21.rows[12].bound == 12);

  const IntersectionCurve c7 = intersection_curve_data(7);
  CHECK(c7.crossing == 2);
  CHECK_FALSE(c7.crossing_integral);
  CHECK(c7.rows[2].bound > 2);
  CHECK(c7.rows[3].bound < 3);

  const std::string csv = curve_csv(c7);
  CHECK(csv.rfind("s,bound,diagonal\n0,7,0\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 9);
}
