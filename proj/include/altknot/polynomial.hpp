#pragma once

// Dense univariate polynomials with exact integer coefficients, and the
// Chebyshev-type family J_k(x) = U_k(x/2) used by every closed form.

#include <algorithm>
#include <array>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "altknot/errors.hpp"

namespace altknot {

using Integer = boost::multiprecision::cpp_int;

/// Polynomial over Z stored lowest degree first. The coefficient vector
/// never ends in a zero, so the zero polynomial is the empty vector and
/// has degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients)
      : coeffs_(std::move(coefficients)) {
    trim();
  }
  IntPolynomial(std::initializer_list<long long> coefficients) {
    coeffs_.reserve(coefficients.size());
    for (long long c : coefficients) coeffs_.emplace_back(c);
    trim();
  }

  static IntPolynomial constant(const Integer& c) {
    return IntPolynomial(std::vector<Integer>{c});
  }
  static IntPolynomial x() { return IntPolynomial{0, 1}; }
  /// c * x^n
  static IntPolynomial monomial(const Integer& c, std::size_t n) {
    std::vector<Integer> v(n + 1);
    v[n] = c;
    return IntPolynomial(std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool isZero() const { return coeffs_.empty(); }
  const std::vector<Integer>& coefficients() const { return coeffs_; }

  /// Coefficient of x^n (zero beyond the degree).
  Integer operator[](std::size_t n) const {
    return n < coeffs_.size() ? coeffs_[n] : Integer(0);
  }
  const Integer& leading() const {
    static const Integer zero = 0;
    return coeffs_.empty() ? zero : coeffs_.back();
  }

  IntPolynomial& operator+=(const IntPolynomial& q) {
    if (q.coeffs_.size() > coeffs_.size()) coeffs_.resize(q.coeffs_.size());
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] += q.coeffs_[i];
    trim();
    return *this;
  }
  IntPolynomial& operator-=(const IntPolynomial& q) {
    if (q.coeffs_.size() > coeffs_.size()) coeffs_.resize(q.coeffs_.size());
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] -= q.coeffs_[i];
    trim();
    return *this;
  }
  IntPolynomial& operator*=(const Integer& c) {
    if (c == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
  }
  IntPolynomial& operator*=(const IntPolynomial& q) {
    *this = *this * q;
    return *this;
  }

  friend IntPolynomial operator+(IntPolynomial p, const IntPolynomial& q) { return p += q; }
  friend IntPolynomial operator-(IntPolynomial p, const IntPolynomial& q) { return p -= q; }
  friend IntPolynomial operator-(IntPolynomial p) {
    for (auto& a : p.coeffs_) a = -a;
    return p;
  }
  friend IntPolynomial operator*(IntPolynomial p, const Integer& c) { return p *= c; }
  friend IntPolynomial operator*(const Integer& c, IntPolynomial p) { return p *= c; }
  friend IntPolynomial operator*(IntPolynomial p, long long c) { return p *= Integer(c); }
  friend IntPolynomial operator*(long long c, IntPolynomial p) { return p *= Integer(c); }
  friend IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.isZero() || q.isZero()) return {};
    std::vector<Integer> r(p.coeffs_.size() + q.coeffs_.size() - 1);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
      if (p.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < q.coeffs_.size(); ++j) r[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
    return IntPolynomial(std::move(r));
  }
  friend IntPolynomial operator+(IntPolynomial p, long long c) { return p += constant(c); }
  friend IntPolynomial operator-(IntPolynomial p, long long c) { return p -= constant(c); }

  friend bool operator==(const IntPolynomial& p, const IntPolynomial& q) {
    return p.coeffs_ == q.coeffs_;
  }
  friend bool operator!=(const IntPolynomial& p, const IntPolynomial& q) { return !(p == q); }

  /// Horner evaluation.
  Integer operator()(const Integer& x0) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x0 + *it;
    return acc;
  }

  IntPolynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Integer> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long long>(i);
    return IntPolynomial(std::move(d));
  }

  /// Descending signed monomials with '^' powers: "x^3 - 3*x - 2".
  std::string toString() const {
    if (isZero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int n = degree(); n >= 0; --n) {
      const Integer& c = coeffs_[static_cast<std::size_t>(n)];
      if (c == 0) continue;
      Integer mag = c < 0 ? Integer(-c) : c;
      if (first) {
        if (c < 0) out << '-';
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (n == 0) {
        out << mag;
        continue;
      }
      if (mag != 1) out << mag << '*';
      out << 'x';
      if (n > 1) out << '^' << n;
    }
    return out.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
    return os << p.toString();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Integer> coeffs_;
};

/// Quotient and remainder of division by a divisor whose leading
/// coefficient divides every intermediate leading term; throws
/// NonZeroRemainder when that fails or the remainder is nonzero.
inline IntPolynomial divExact(const IntPolynomial& p, const IntPolynomial& d) {
  if (d.isZero()) throw DivisionByZero("divExact: zero divisor");
  if (p.isZero()) return {};
  std::vector<Integer> rem = p.coefficients();
  const auto& dc = d.coefficients();
  const std::size_t dn = dc.size() - 1;
  if (rem.size() - 1 < dn) throw NonZeroRemainder("divExact: divisor degree exceeds dividend");
  std::vector<Integer> quot(rem.size() - dn);
  for (std::size_t i = rem.size(); i-- > dn;) {
    if (rem[i] == 0) continue;
    Integer q, r;
    boost::multiprecision::divide_qr(rem[i], dc.back(), q, r);
    if (r != 0) throw NonZeroRemainder("divExact: leading coefficient not divisible");
    quot[i - dn] = q;
    for (std::size_t j = 0; j <= dn; ++j) rem[i - dn + j] -= q * dc[j];
  }
  for (const auto& r : rem) {
    if (r != 0) {
      std::ostringstream msg;
      msg << "divExact: " << p << " is not divisible by " << d;
      throw NonZeroRemainder(msg.str());
    }
  }
  return IntPolynomial(std::move(quot));
}

/// (p(x0), p'(x0)) in one Horner pass.
inline std::pair<Integer, Integer> evalAndDerivativeAt(const IntPolynomial& p, const Integer& x0) {
  Integer value = 0, slope = 0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    slope = slope * x0 + value;
    value = value * x0 + *it;
  }
  return {value, slope};
}

namespace detail {

/// Grow-only cache of J_k. Readers share the lock; a miss extends the
/// table under the exclusive lock. Stored polynomials are never moved
/// after insertion (std::map nodes are stable), so references stay valid.
class ChebyshevCache {
 public:
  const IntPolynomial& get(int k) {
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(k);
      if (it != table_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    if (table_.empty()) {
      table_.emplace(-1, IntPolynomial{});
      table_.emplace(0, IntPolynomial{1});
    }
    int top = table_.rbegin()->first;
    while (top < k) {
      const IntPolynomial& a = table_.at(top);
      const IntPolynomial& b = table_.at(top - 1);
      table_.emplace(top + 1, IntPolynomial::x() * a - b);
      ++top;
    }
    return table_.at(k);
  }

 private:
  std::shared_mutex mutex_;
  std::map<int, IntPolynomial> table_;
};

inline ChebyshevCache& chebyshevCache() {
  static ChebyshevCache cache;
  return cache;
}

}  // namespace detail

/// J_{-1} = 0, J_0 = 1, J_{k+1} = x J_k - J_{k-1}.
inline const IntPolynomial& chebyshevJ(int k) {
  if (k < -1) throw InvalidArgument("chebyshevJ: index must be >= -1");
  return detail::chebyshevCache().get(k);
}

/// 2x2 matrix over Z[x], row-major.
using PolyMatrix2 = std::array<IntPolynomial, 4>;

inline PolyMatrix2 operator*(const PolyMatrix2& a, const PolyMatrix2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

/// [[x,-1],[1,0]]^(k+1) == [[J_{k+1}, -J_k], [J_k, -J_{k-1}]]
inline bool checkMatrixPowerIdentity(int k) {
  if (k < 0) throw InvalidArgument("checkMatrixPowerIdentity: k must be >= 0");
  const PolyMatrix2 step{IntPolynomial::x(), IntPolynomial{-1}, IntPolynomial{1}, IntPolynomial{}};
  PolyMatrix2 power = step;
  for (int i = 0; i < k; ++i) power = power * step;
  const PolyMatrix2 expected{chebyshevJ(k + 1), -chebyshevJ(k), chebyshevJ(k), -chebyshevJ(k - 1)};
  return power == expected;
}

}  // namespace altknot
