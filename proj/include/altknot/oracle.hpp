#pragma once

// Slow, independent checks used by the test and verification suites.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "altknot/knot_matrix.hpp"
#include "altknot/polynomial.hpp"

namespace altknot::oracle {

/// Fraction-free Gaussian elimination (Bareiss) on an integer matrix.
inline Integer bareissDeterminant(std::vector<std::vector<Integer>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// det(x0 I - M).
inline Integer charPolyAt(const KnotMatrix& m, const Integer& x0) {
  const std::size_t n = m.size();
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) a[j][k] = (j == k ? x0 : Integer(0)) - m(j, k);
  return bareissDeterminant(std::move(a));
}

/// A monic degree-V candidate agrees with det(xI - M) at V+1 points.
inline bool charPolyAgrees(const KnotMatrix& m, const IntPolynomial& p) {
  const std::size_t n = m.size();
  if (n == 0) return p.isZero();
  if (p.degree() != static_cast<int>(n) || p.leading() != 1) return false;
  for (std::size_t i = 0; i <= n; ++i) {
    const Integer x0 = Integer(static_cast<long long>(i)) - 1;
    if (p(x0) != charPolyAt(m, x0)) return false;
  }
  return true;
}

/// Every unordered pair {P, Q} of permutation matrices with P + Q = M,
/// by enumerating permutations under M.
inline std::size_t bruteForceDecompositionCount(const KnotMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> found;
  do {
    bool fits = true;
    for (std::size_t j = 0; j < n && fits; ++j) fits = m(j, sigma[j]) >= 1;
    if (!fits) continue;
    // The rest must be a permutation matrix.
    KnotMatrix rest = m;
    for (std::size_t j = 0; j < n; ++j) rest(j, sigma[j]) -= 1;
    std::vector<std::size_t> tau(n, n);
    std::vector<int> colUse(n, 0);
    bool perm = true;
    for (std::size_t j = 0; j < n && perm; ++j) {
      int ones = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (rest(j, k) == 1) {
          ++ones;
          tau[j] = k;
          ++colUse[k];
        } else if (rest(j, k) != 0) {
          perm = false;
        }
      }
      perm = perm && ones == 1;
    }
    perm = perm && std::all_of(colUse.begin(), colUse.end(), [](int c) { return c == 1; });
    if (!perm) continue;
    found.insert(sigma < tau ? std::make_pair(sigma, tau) : std::make_pair(tau, sigma));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return found.size();
}

}  // namespace altknot::oracle
