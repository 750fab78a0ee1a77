#include "sts/bounds.hpp"

#include <algorithm>
#include <sstream>

#include "sts/errors.hpp"

namespace sts {

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

std::string str(const BigInt& x) { return x.str(); }

void require_admissible(const BigInt& v) {
  if (!is_admissible_order(v)) throw InputError("inadmissible order " + str(v) + " (need v = 1 or 3 mod 6)");
}

struct FamilyPolynomial {
  int a1, a0;  // v = 216z^2 + a1 z + a0
  int b1, b0;  // s = 216z^2 + b1 z + b0
  int u0;      // u = 12z + u0
  int t_sign;  // t = 6u + t_sign
};

constexpr FamilyPolynomial kFamilies[4] = {
    {42, 1, 6, 0, 1, +1},
    {186, 39, 150, 26, 5, +1},
    {138, 21, 102, 12, 4, -1},
    {282, 91, 246, 70, 8, -1},
};

EqualityFamilyRecord family_record(int family, const BigInt& z) {
  const FamilyPolynomial& f = kFamilies[family - 1];
  EqualityFamilyRecord r;
  r.family = family;
  r.z = z;
  r.v = 216 * z * z + f.a1 * z + f.a0;
  r.s = 216 * z * z + f.b1 * z + f.b0;
  r.w = r.v - r.s;
  r.u = 12 * z + f.u0;
  r.t = 6 * r.u + f.t_sign;
  return r;
}

}  // namespace

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw InputError("isqrt of a negative number");
  if (n < 2) return n;
  // Start above the root; Newton's iterates then decrease monotonically
  // until they reach floor(sqrt(n)).
  BigInt x = BigInt(1) << (boost::multiprecision::msb(n) / 2 + 1);
  while (true) {
    BigInt y = (x + n / x) >> 1;
    if (y >= x) return x;
    x = std::move(y);
  }
}

bool is_perfect_square(const BigInt& n) {
  if (n < 0) return false;
  const BigInt r = isqrt(n);
  return r * r == n;
}

bool is_admissible_order(const BigInt& v) {
  if (v <= 0) return false;
  const int m = static_cast<int>(v % 6);
  return m == 1 || m == 3;
}

BigInt disjoint_bound_numerator(const BigInt& v, const BigInt& s) { return v * (v - 1) + s * s - s * (2 * v - 1); }

BigInt disjoint_block_bound(const BigInt& v, const BigInt& s) {
  require_admissible(v);
  if (s < 0 || s > v) throw InputError("s=" + str(s) + " outside [0, v] for v=" + str(v));
  return floor_div(disjoint_bound_numerator(v, s), 6);
}

int disjoint_bound_remainder(const BigInt& v, const BigInt& s) {
  BigInt r = disjoint_bound_numerator(v, s) % 6;
  if (r < 0) r += 6;
  return static_cast<int>(r);
}

BigInt max_nonincident_bound(const BigInt& v) {
  require_admissible(v);
  const BigInt disc = 24 * v + 25;
  BigInt root = isqrt(disc);
  if (root * root != disc) ++root;  // ceil(sqrt(disc))
  const BigInt s = (2 * v + 5 - root) / 2;

  // Defining property, checked by squaring.
  const BigInt at_s = 2 * v + 5 - 2 * s;
  const BigInt at_next = at_s - 2;
  if (s < 0 || at_s * at_s < disc || (at_next >= 0 && at_next * at_next >= disc)) {
    throw InternalInvariantError("nonincidence ceiling arithmetic failed at v=" + str(v));
  }
  return s;
}

BigInt subsystem_complement_count(const BigInt& v, const BigInt& w) {
  // w == v is the whole design viewed as its own (trivial) subsystem.
  if (w < 1 || (v < 2 * w + 1 && w != v)) throw InputError("need v >= 2w+1 or w == v, and w >= 1 (v=" + str(v) + ", w=" + str(w) + ")");
  const BigInt numerator = disjoint_bound_numerator(v, v - w);
  if (numerator != w * (w - 1)) {
    throw InternalInvariantError("subsystem count identity failed at v=" + str(v) + ", w=" + str(w));
  }
  return floor_div(numerator, 6);
}

std::optional<EqualityFamilyRecord> classify_equality_order(const BigInt& v) {
  if (!is_admissible_order(v)) return std::nullopt;
  const BigInt disc = 24 * v + 25;
  const BigInt t = isqrt(disc);
  if (t * t != disc) return std::nullopt;
  const BigInt twice_s = 2 * v + 5 - t;
  if (twice_s < 0 || twice_s % 2 != 0) return std::nullopt;
  const BigInt s = twice_s / 2;
  const BigInt w = v - s;
  if (!is_admissible_order(w)) return std::nullopt;
  // v = 1 (s = 0, w = 1) is kept as the degenerate start of family 1.
  if (s != 0 && v < 2 * w + 1) return std::nullopt;

  EqualityFamilyRecord r;
  const int t_mod = static_cast<int>(t % 6);
  if (t_mod == 1) {
    r.u = (t - 1) / 6;
    const int u_mod = static_cast<int>(r.u % 12);
    if (u_mod == 1) r.family = 1;
    if (u_mod == 5) r.family = 2;
  } else if (t_mod == 5) {
    r.u = (t + 1) / 6;
    const int u_mod = static_cast<int>(r.u % 12);
    if (u_mod == 4) r.family = 3;
    if (u_mod == 8) r.family = 4;
  }
  if (r.family == 0) {
    throw InternalInvariantError("order " + str(v) + " meets the equality conditions outside the four families");
  }
  r.z = (r.u - kFamilies[r.family - 1].u0) / 12;
  r.v = v;
  r.s = s;
  r.w = w;
  r.t = t;
  return r;
}

std::vector<EqualityFamilyRecord> enumerate_equality_orders(std::uint64_t z_max) {
  std::vector<EqualityFamilyRecord> out;
  for (std::uint64_t z = 0; z <= z_max; ++z) {
    for (int family = 1; family <= 4; ++family) {
      EqualityFamilyRecord r = family_record(family, BigInt(z));
      const auto check = classify_equality_order(r.v);
      if (!check || *check != r) {
        throw InternalInvariantError("family " + std::to_string(family) + " at z=" + std::to_string(z) +
                                     " fails the equality conditions");
      }
      out.push_back(std::move(r));
    }
    if (z == UINT64_MAX) break;
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.v < b.v; });
  return out;
}

IntersectionCurve intersection_curve_data(const BigInt& v) {
  require_admissible(v);
  IntersectionCurve curve;
  curve.v = v;
  for (BigInt s = 0; s <= v; ++s) curve.rows.push_back({s, disjoint_block_bound(v, s)});
  curve.crossing = max_nonincident_bound(v);
  curve.crossing_integral = is_perfect_square(24 * v + 25);
  return curve;
}

std::string curve_csv(const IntersectionCurve& curve) {
  std::ostringstream os;
  os << "s,bound,diagonal\n";
  for (const auto& row : curve.rows) os << row.s << ',' << row.bound << ',' << row.s << '\n';
  return os.str();
}

}  // namespace sts
