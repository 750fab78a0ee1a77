#include "sts/constructions.hpp"

namespace sts {

OneFactorization one_factorization(std::uint32_t n) {
  if (n < 2 || n % 2 != 0) throw InputError("one-factorization needs an even n >= 2, got " + std::to_string(n));
  // Vertices 0..n-2 on a circle, n-1 at the center.
  const std::uint32_t m = n - 1;
  OneFactorization f;
  f.n = n;
  f.factors.resize(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    auto& factor = f.factors[i];
    factor.reserve(n / 2);
    factor.emplace_back(i, m);
    for (std::uint32_t k = 1; k < n / 2; ++k) {
      const Point a = (i + k) % m;
      const Point b = (i + m - k) % m;
      factor.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  return f;
}

}  // namespace sts
