#pragma once

// Test-only reference computations.  They share no code with the library
// beyond the field and matrix containers.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "lequiv/finite_field.hpp"

namespace oracle {

// Gaussian binomial [n choose k]_L by the q-Pascal rule
// [n,k] = [n-1,k-1] + L^k [n-1,k], coefficients little-endian.
inline std::vector<long long> gaussian_binomial(int k, int n) {
  if (k < 0 || k > n) return {};
  if (k == 0 || k == n) return {1};
  auto a = gaussian_binomial(k - 1, n - 1);
  auto b = gaussian_binomial(k, n - 1);
  std::vector<long long> out(std::max(a.size(), b.size() + k), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i + k] += b[i];
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

inline long long gaussian_binomial_at(int k, int n, long long q) {
  long long v = 0, p = 1;
  for (long long c : gaussian_binomial(k, n)) {
    v += c * p;
    p *= q;
  }
  return v;
}

// Degree of sigma_lambda on Gr(k,n): standard Young tableaux of the
// complement of lambda in the k x (n-k) box, by the hook length formula.
inline long long hook_length_degree(std::vector<int> lambda, int k, int n) {
  int const cols = n - k;
  lambda.resize(k, 0);
  std::vector<int> mu(k);
  for (int i = 0; i < k; ++i) mu[i] = cols - lambda[k - 1 - i];
  int cells = 0;
  for (int m : mu) cells += m;
  long double num = 1;
  for (int i = 2; i <= cells; ++i) num *= i;
  long double hooks = 1;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < mu[i]; ++j) {
      int below = 0;
      for (int r = i + 1; r < k; ++r)
        if (mu[r] > j) ++below;
      hooks *= (mu[i] - j - 1) + below + 1;
    }
  return static_cast<long long>(num / hooks + 0.5L);
}

using Gram2 = std::array<std::array<long long, 2>, 2>;
using Mat2 = std::array<std::array<long long, 2>, 2>;  // columns are images

inline long long pair(Gram2 const& g, long long x0, long long x1, long long y0, long long y1) {
  return x0 * (g[0][0] * y0 + g[0][1] * y1) + x1 * (g[1][0] * y0 + g[1][1] * y1);
}

// Every M with entries in [-bound, bound], det = ±1 and M^T g2 M = g1.
// Columns are chosen one at a time so the search is quadratic in the box.
inline std::vector<Mat2> brute_isomorphisms(Gram2 const& g1, Gram2 const& g2, int bound) {
  std::vector<std::pair<long long, long long>> first, second;
  for (long long a = -bound; a <= bound; ++a)
    for (long long b = -bound; b <= bound; ++b) {
      if (pair(g2, a, b, a, b) == g1[0][0]) first.emplace_back(a, b);
      if (pair(g2, a, b, a, b) == g1[1][1]) second.emplace_back(a, b);
    }
  std::vector<Mat2> out;
  for (auto [a, b] : first)
    for (auto [c, d] : second) {
      long long const det = a * d - b * c;
      if ((det == 1 || det == -1) && pair(g2, a, b, c, d) == g1[0][1]) {
        out.push_back({{{a, c}, {b, d}}});
      }
    }
  return out;
}

struct Fraction {
  long long num;
  long long den;
  friend auto operator<=>(Fraction const&, Fraction const&) = default;
};

inline Fraction reduce(long long num, long long den) {
  if (den < 0) num = -num, den = -den;
  long long const g = std::gcd(num < 0 ? -num : num, den);
  return {num / g, den / g};
}

// Multiset of q values on L^* / L (q in Q/2Z), by enumerating G^{-1} z.
inline std::map<Fraction, int> discriminant_q_values(Gram2 const& g) {
  long long const det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
  long long const n = det < 0 ? -det : det;
  // G^{-1} = adj / det; y = adj z / det.
  std::set<std::pair<long long, long long>> classes;  // numerators mod n (denominator n)
  std::map<Fraction, int> values;
  for (long long z0 = 0; z0 < n; ++z0)
    for (long long z1 = 0; z1 < n; ++z1) {
      long long y0 = g[1][1] * z0 - g[0][1] * z1;
      long long y1 = -g[1][0] * z0 + g[0][0] * z1;
      if (det < 0) y0 = -y0, y1 = -y1;
      y0 = ((y0 % n) + n) % n;
      y1 = ((y1 % n) + n) % n;
      if (!classes.insert({y0, y1}).second) continue;
      // q = y^T G y with y = (y0, y1) / n, reduced mod 2.
      long long const numer = pair(g, y0, y1, y0, y1);
      long long const den = n * n;
      long long r = numer % (2 * den);
      if (r < 0) r += 2 * den;
      ++values[reduce(r, den)];
    }
  return values;
}

// Number of monic irreducible polynomials of degree m over F_p (necklace
// formula).
inline long long irreducible_count(int p, int m) {
  auto mobius = [](int n) {
    int result = 1;
    for (int d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        n /= d;
        if (n % d == 0) return 0;
        result = -result;
      }
    }
    if (n > 1) result = -result;
    return result;
  };
  long long sum = 0;
  for (int d = 1; d <= m; ++d) {
    if (m % d) continue;
    long long pw = 1;
    for (int i = 0; i < m / d; ++i) pw *= p;
    sum += mobius(d) * pw;
  }
  return sum / m;
}

}  // namespace oracle
