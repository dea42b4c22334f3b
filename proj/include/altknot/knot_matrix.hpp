#pragma once

// The directed adjacency matrix of an alternating diagram: entry (j,k)
// counts edges running from the over-pass at crossing j to the
// under-pass at crossing k.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "altknot/errors.hpp"
#include "altknot/polynomial.hpp"

namespace altknot {

class KnotMatrix {
 public:
  KnotMatrix() = default;
  explicit KnotMatrix(std::size_t size) : size_(size), entries_(size * size, 0) {}
  KnotMatrix(std::initializer_list<std::initializer_list<int>> rows) : size_(rows.size()) {
    entries_.reserve(size_ * size_);
    for (const auto& row : rows) {
      if (row.size() != size_) throw MalformedMatrix("KnotMatrix: matrix is not square");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }
  static KnotMatrix fromRows(const std::vector<std::vector<int>>& rows) {
    KnotMatrix m(rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (rows[j].size() != rows.size()) throw MalformedMatrix("KnotMatrix: matrix is not square");
      for (std::size_t k = 0; k < rows.size(); ++k) m(j, k) = rows[j][k];
    }
    return m;
  }

  std::size_t size() const { return size_; }
  int operator()(std::size_t row, std::size_t col) const { return entries_[row * size_ + col]; }
  int& operator()(std::size_t row, std::size_t col) { return entries_[row * size_ + col]; }
  const std::vector<int>& entries() const { return entries_; }

  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> r(size_, std::vector<int>(size_));
    for (std::size_t j = 0; j < size_; ++j)
      for (std::size_t k = 0; k < size_; ++k) r[j][k] = (*this)(j, k);
    return r;
  }

  /// Simultaneous row/column relabeling: result(perm[j], perm[k]) = this(j, k).
  KnotMatrix relabeled(const std::vector<std::size_t>& perm) const {
    KnotMatrix r(size_);
    for (std::size_t j = 0; j < size_; ++j)
      for (std::size_t k = 0; k < size_; ++k) r(perm[j], perm[k]) = (*this)(j, k);
    return r;
  }

  friend KnotMatrix blockDiagonal(const KnotMatrix& a, const KnotMatrix& b) {
    KnotMatrix r(a.size_ + b.size_);
    for (std::size_t j = 0; j < a.size_; ++j)
      for (std::size_t k = 0; k < a.size_; ++k) r(j, k) = a(j, k);
    for (std::size_t j = 0; j < b.size_; ++j)
      for (std::size_t k = 0; k < b.size_; ++k) r(a.size_ + j, a.size_ + k) = b(j, k);
    return r;
  }

  friend bool operator==(const KnotMatrix&, const KnotMatrix&) = default;
  friend auto operator<=>(const KnotMatrix&, const KnotMatrix&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<int> entries_;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> diagnostics;
  explicit operator bool() const { return ok; }
};

/// Entries in {0,1,2}, every row and column summing to 2, and M*1 = 2*1.
inline ValidationReport validate(const KnotMatrix& m) {
  ValidationReport report;
  auto fail = [&](std::string msg) {
    report.ok = false;
    report.diagnostics.push_back(std::move(msg));
  };
  const std::size_t n = m.size();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      int e = m(j, k);
      if (e < 0 || e > 2) {
        std::ostringstream s;
        s << "entry (" << j + 1 << "," << k + 1 << ") = " << e << " is outside {0,1,2}";
        fail(s.str());
      }
    }
  for (std::size_t j = 0; j < n; ++j) {
    long row = 0, col = 0;
    for (std::size_t k = 0; k < n; ++k) {
      row += m(j, k);
      col += m(k, j);
    }
    if (row != 2) fail("row " + std::to_string(j + 1) + " sums to " + std::to_string(row));
    if (col != 2) fail("column " + std::to_string(j + 1) + " sums to " + std::to_string(col));
  }
  // M * ones == 2 * ones; the row-sum check implies it, asserted separately.
  for (std::size_t j = 0; j < n; ++j) {
    long acc = 0;
    for (std::size_t k = 0; k < n; ++k) acc += static_cast<long>(m(j, k)) * 1;
    if (acc != 2) fail("M*1 differs from 2*1 at row " + std::to_string(j + 1));
  }
  return report;
}

inline void requireValid(const KnotMatrix& m, const char* where) {
  auto report = validate(m);
  if (!report) {
    std::string msg = std::string(where) + ": not a knot matrix";
    for (const auto& d : report.diagnostics) msg += "; " + d;
    throw MalformedMatrix(msg);
  }
}

/// One directed edge: (row, column, copy). Copy is 1 only for the second
/// edge of an entry-2 cell.
struct Edge {
  std::size_t row = 0;
  std::size_t col = 0;
  int copy = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct ComponentPartition {
  /// Each cycle lists edges in walk order: consecutive edges alternately
  /// share a row and a column.
  std::vector<std::vector<Edge>> cycles;
  std::size_t count() const { return cycles.size(); }
};

namespace detail {

inline std::vector<Edge> edgesOf(const KnotMatrix& m) {
  std::vector<Edge> edges;
  for (std::size_t j = 0; j < m.size(); ++j)
    for (std::size_t k = 0; k < m.size(); ++k)
      for (int c = 0; c < m(j, k); ++c) edges.push_back({j, k, c});
  return edges;
}

inline std::size_t edgeIndex(const std::vector<Edge>& edges, const Edge& e) {
  return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
}

}  // namespace detail

/// Alternating row/column walk. From edge (j,k) step to the other edge of
/// row j, then to the other edge of that edge's column, and so on until
/// the start edge recurs. Each closed walk is one link component.
inline ComponentPartition components(const KnotMatrix& m) {
  requireValid(m, "components");
  const auto edges = detail::edgesOf(m);  // sorted by construction
  const std::size_t n = m.size();
  // For each row and column, the indices of its two edges.
  std::vector<std::array<std::size_t, 2>> byRow(n), byCol(n);
  std::vector<int> rowFill(n, 0), colFill(n, 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    byRow[edges[i].row][rowFill[edges[i].row]++] = i;
    byCol[edges[i].col][colFill[edges[i].col]++] = i;
  }
  auto otherInRow = [&](std::size_t i) {
    const auto& r = byRow[edges[i].row];
    return r[0] == i ? r[1] : r[0];
  };
  auto otherInCol = [&](std::size_t i) {
    const auto& c = byCol[edges[i].col];
    return c[0] == i ? c[1] : c[0];
  };

  ComponentPartition partition;
  std::vector<char> seen(edges.size(), 0);
  for (std::size_t start = 0; start < edges.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Edge> cycle;
    std::size_t cur = start;
    bool rowStep = true;
    do {
      seen[cur] = 1;
      cycle.push_back(edges[cur]);
      cur = rowStep ? otherInRow(cur) : otherInCol(cur);
      rowStep = !rowStep;
    } while (!(cur == start && rowStep));
    partition.cycles.push_back(std::move(cycle));
  }
  return partition;
}

/// Unordered pair of permutation matrices summing to a knot matrix.
/// Stored as permutations: first[j] is the column of P's 1 in row j.
struct PermutationDecomposition {
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;

  KnotMatrix matrixP() const { return asMatrix(first); }
  KnotMatrix matrixQ() const { return asMatrix(second); }

  /// Canonical form: the lexicographically smaller permutation first.
  PermutationDecomposition canonical() const {
    if (second < first) return {second, first};
    return *this;
  }
  friend bool operator==(const PermutationDecomposition&, const PermutationDecomposition&) = default;
  friend auto operator<=>(const PermutationDecomposition&, const PermutationDecomposition&) = default;

 private:
  static KnotMatrix asMatrix(const std::vector<std::size_t>& perm) {
    KnotMatrix r(perm.size());
    for (std::size_t j = 0; j < perm.size(); ++j) r(j, perm[j]) = 1;
    return r;
  }
};

/// All unordered decompositions. Each component's walk is 2-colored by
/// position parity; components swap colors independently and the
/// resulting pairs are deduplicated.
inline std::vector<PermutationDecomposition> permutationDecompositions(const KnotMatrix& m) {
  const auto partition = components(m);
  const std::size_t n = m.size();
  const std::size_t k = partition.count();
  if (n == 0) return {PermutationDecomposition{}};

  // Per-component fixed coloring at even/odd positions.
  std::vector<std::vector<std::pair<Edge, int>>> colored(k);
  for (std::size_t c = 0; c < k; ++c) {
    const auto& cycle = partition.cycles[c];
    if (cycle.size() % 2 != 0) throw DecompositionFailure("component walk has odd length");
    for (std::size_t i = 0; i < cycle.size(); ++i) colored[c].push_back({cycle[i], static_cast<int>(i % 2)});
  }

  if (k >= 8 * sizeof(unsigned long long) - 1)
    throw DecompositionFailure("too many components to enumerate decompositions");
  std::set<PermutationDecomposition> found;
  const unsigned long long combos = 1ULL << (k - 1);  // component 0 fixed: unordered pairs
  for (unsigned long long mask = 0; mask < combos; ++mask) {
    std::vector<long> p(n, -1), q(n, -1);
    for (std::size_t c = 0; c < k; ++c) {
      const bool flip = c > 0 && ((mask >> (c - 1)) & 1ULL);
      for (const auto& [e, color] : colored[c]) {
        auto& target = ((color == 1) != flip) ? q : p;
        if (target[e.row] != -1) throw DecompositionFailure("walk coloring puts two edges in one row");
        target[e.row] = static_cast<long>(e.col);
      }
    }
    PermutationDecomposition d;
    d.first.resize(n);
    d.second.resize(n);
    std::vector<char> pc(n, 0), qc(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (p[j] < 0 || q[j] < 0) throw DecompositionFailure("walk coloring leaves a row empty");
      d.first[j] = static_cast<std::size_t>(p[j]);
      d.second[j] = static_cast<std::size_t>(q[j]);
      if (pc[d.first[j]]++ || qc[d.second[j]]++)
        throw DecompositionFailure("walk coloring puts two edges in one column");
    }
    found.insert(d.canonical());
  }
  return {found.begin(), found.end()};
}

/// det(x I - M) by the Samuelson-Berkowitz recursion (division free, exact).
/// The V = 0 matrix is the unknot and yields the zero polynomial.
inline IntPolynomial charPoly(const KnotMatrix& m) {
  requireValid(m, "charPoly");
  const std::size_t n = m.size();
  if (n == 0) return {};

  // coefficients of det(x I - A_k), descending, for the trailing block.
  std::vector<Integer> poly{1};
  for (std::size_t k = n; k-- > 0;) {
    const std::size_t sub = n - k - 1;  // size of the trailing block M
    // t = [1, -a, -R C, -R M C, ..., -R M^{sub-1} C]
    std::vector<Integer> t(sub + 2);
    t[0] = 1;
    t[1] = -Integer(m(k, k));
    std::vector<Integer> vec(sub);  // M^i C
    for (std::size_t i = 0; i < sub; ++i) vec[i] = m(k + 1 + i, k);
    for (std::size_t power = 0; power < sub; ++power) {
      Integer rc = 0;
      for (std::size_t i = 0; i < sub; ++i) rc += Integer(m(k, k + 1 + i)) * vec[i];
      t[power + 2] = -rc;
      if (power + 1 < sub) {
        std::vector<Integer> next(sub);
        for (std::size_t r = 0; r < sub; ++r) {
          Integer acc = 0;
          for (std::size_t c = 0; c < sub; ++c) {
            int e = m(k + 1 + r, k + 1 + c);
            if (e != 0) acc += e * vec[c];
          }
          next[r] = std::move(acc);
        }
        vec = std::move(next);
      }
    }
    // new = Toeplitz(t) * poly, sizes (sub+2) x (sub+1)
    std::vector<Integer> next(sub + 2);
    for (std::size_t r = 0; r < sub + 2; ++r)
      for (std::size_t c = 0; c <= std::min(r, sub); ++c) next[r] += t[r - c] * poly[c];
    poly = std::move(next);
  }
  std::reverse(poly.begin(), poly.end());
  return IntPolynomial(std::move(poly));
}

/// P'(2) / V: the Conway number read off the polynomial. V = 0 is the
/// unknot (1); a zero polynomial with V > 0 means separated pieces (0).
inline Integer conwayNumberFromPoly(const IntPolynomial& p, std::size_t crossings) {
  if (crossings == 0) return 1;
  if (p.isZero()) return 0;
  const IntPolynomial q = divExact(p, IntPolynomial{-2, 1});
  const Integer slope = q(2);  // equals p'(2) because p(2) = 0
  Integer quotient, remainder;
  boost::multiprecision::divide_qr(slope, Integer(crossings), quotient, remainder);
  if (remainder != 0) {
    std::ostringstream msg;
    msg << "conwayNumberFromPoly: P'(2) = " << slope << " is not a multiple of V = " << crossings;
    throw NotDivisible(msg.str());
  }
  return quotient;
}

}  // namespace altknot
