#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sts {

// All bound arithmetic is exact; nothing in this header touches floating
// point.
using BigInt = boost::multiprecision::cpp_int;

// floor(sqrt(n)) by Newton iteration from above. Throws InputError for n < 0.
BigInt isqrt(const BigInt& n);
bool is_perfect_square(const BigInt& n);

bool is_admissible_order(const BigInt& v);

// v(v-1) + s^2 - s(2v-1): six times the largest number of blocks an
// s-point set can avoid in an STS(v). Not always divisible by 6.
BigInt disjoint_bound_numerator(const BigInt& v, const BigInt& s);

// floor(numerator / 6). Requires v admissible and 0 <= s <= v.
BigInt disjoint_block_bound(const BigInt& v, const BigInt& s);
// numerator mod 6, in [0, 6).
int disjoint_bound_remainder(const BigInt& v, const BigInt& s);

// Largest s with 2s <= 2v+5 - sqrt(24v+25): the ceiling on any nonincident
// set of s points and s blocks in an STS(v). Requires v admissible.
BigInt max_nonincident_bound(const BigInt& v);

// Number of blocks avoiding the complement of a sub-STS(w) in an STS(v),
// i.e. the disjoint-block bound at s = v-w. Checks that it equals
// w(w-1)/6. Requires v >= 2w+1, w >= 1.
BigInt subsystem_complement_count(const BigInt& v, const BigInt& w);

// An order at which the nonincidence ceiling is attained, with the
// parameters of the family polynomial it comes from:
//   1: v = 216z^2 + 42z + 1,   s = 216z^2 + 6z,        u = 12z+1, t = 6u+1
//   2: v = 216z^2 + 186z + 39, s = 216z^2 + 150z + 26, u = 12z+5, t = 6u+1
//   3: v = 216z^2 + 138z + 21, s = 216z^2 + 102z + 12, u = 12z+4, t = 6u-1
//   4: v = 216z^2 + 282z + 91, s = 216z^2 + 246z + 70, u = 12z+8, t = 6u-1
// where t^2 = 24v+25 and w = v-s is the order of the required subsystem.
struct EqualityFamilyRecord {
  int family = 0;
  BigInt z, v, s, w, t, u;

  friend bool operator==(const EqualityFamilyRecord&, const EqualityFamilyRecord&) = default;
};

// Records for z = 0..z_max over all four families, sorted by v.
std::vector<EqualityFamilyRecord> enumerate_equality_orders(std::uint64_t z_max);

// The record for v when the ceiling can be attained at v, else nullopt.
// v = 1 is accepted as the degenerate member (s = 0) of family 1.
std::optional<EqualityFamilyRecord> classify_equality_order(const BigInt& v);

struct CurveRow {
  BigInt s;
  BigInt bound;  // disjoint_block_bound(v, s)
};

struct IntersectionCurve {
  BigInt v;
  std::vector<CurveRow> rows;  // s = 0..v
  BigInt crossing;             // floor of the crossing abscissa
  bool crossing_integral = false;
};

IntersectionCurve intersection_curve_data(const BigInt& v);

// "s,bound,diagonal" CSV, one row per s.
std::string curve_csv(const IntersectionCurve& curve);

}  // namespace sts
