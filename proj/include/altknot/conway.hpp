#pragma once

// Conway functions: multilinear forms in the ribbon crossing counts
// a_1..a_N. The catalog of families for N <= 5 is stored as printed and
// expanded on load.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "altknot/diagram.hpp"
#include "altknot/errors.hpp"
#include "altknot/knot_matrix.hpp"
#include "altknot/polynomial.hpp"

namespace altknot {

/// A monomial: sorted 1-based variable indices. Empty means the constant 1.
using Term = std::vector<int>;

class ConwayFunction {
 public:
  ConwayFunction() = default;
  /// Terms may repeat (a coefficient above 1 shows up as a repeated term).
  ConwayFunction(int n, std::vector<Term> terms) : n_(n), terms_(std::move(terms)) {
    for (auto& t : terms_) {
      std::sort(t.begin(), t.end());
      if (std::adjacent_find(t.begin(), t.end()) != t.end())
        throw InvalidArgument("ConwayFunction: variable repeated inside a term");
      for (int i : t)
        if (i < 1 || i > n_) throw InvalidArgument("ConwayFunction: variable index out of range");
    }
  }

  int variables() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }

  /// Terms counted with multiplicity.
  std::size_t termCount() const { return terms_.size(); }

  Integer evaluate(const std::vector<Integer>& a) const {
    if (static_cast<int>(a.size()) != n_)
      throw ArityMismatch("evaluate: expected " + std::to_string(n_) + " values, got " + std::to_string(a.size()));
    Integer sum = 0;
    for (const auto& t : terms_) {
      Integer prod = 1;
      for (int i : t) prod *= a[static_cast<std::size_t>(i - 1)];
      sum += prod;
    }
    return sum;
  }
  Integer evaluate(const std::vector<long long>& a) const {
    return evaluate(std::vector<Integer>(a.begin(), a.end()));
  }

  Integer allOnes() const { return evaluate(std::vector<Integer>(static_cast<std::size_t>(n_), 1)); }

  /// a_j = 0: drop every term containing j and renumber the rest.
  ConwayFunction specializeZero(int j) const {
    if (j < 1 || j > n_) throw ArityMismatch("specializeZero: index " + std::to_string(j) + " out of range");
    std::vector<Term> out;
    for (const auto& t : terms_) {
      if (std::find(t.begin(), t.end(), j) != t.end()) continue;
      Term r;
      for (int i : t) r.push_back(i > j ? i - 1 : i);
      out.push_back(std::move(r));
    }
    return ConwayFunction(n_ - 1, std::move(out));
  }

  /// True when no monomial repeats.
  bool isUnitCoefficient() const {
    auto s = sortedTerms();
    return std::adjacent_find(s.begin(), s.end()) == s.end();
  }

  /// All term sizes share one parity.
  bool hasSingleParity() const {
    if (terms_.empty()) return true;
    const std::size_t p = terms_.front().size() % 2;
    return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.size() % 2 == p; });
  }

  /// Multiset of terms in a fixed order, for comparison.
  std::vector<Term> sortedTerms() const {
    auto s = terms_;
    std::sort(s.begin(), s.end(), [](const Term& a, const Term& b) {
      if (a.size() != b.size()) return a.size() > b.size();
      return a < b;
    });
    return s;
  }

  bool sameAs(const ConwayFunction& o) const { return n_ == o.n_ && sortedTerms() == o.sortedTerms(); }

  /// "+a1*a2*a3 +a1 +a3"; the constant term prints as "+1".
  std::string toString() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (i) out << ' ';
      out << '+';
      if (terms_[i].empty()) out << '1';
      for (std::size_t k = 0; k < terms_[i].size(); ++k) out << (k ? "*a" : "a") << terms_[i][k];
    }
    return out.str();
  }

 private:
  int n_ = 0;
  std::vector<Term> terms_;
};

namespace detail {

/// Expands sums and products of a<i>, 1 and parenthesized groups;
/// juxtaposition or '*' multiplies.
class ConwayExprParser {
 public:
  ConwayExprParser(std::string_view s, int n) : s_(s), n_(n) {}

  ConwayFunction parse() {
    auto terms = sum();
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return ConwayFunction(n_, std::move(terms));
  }

 private:
  std::vector<Term> sum() {
    auto terms = product();
    while (peek('+')) {
      ++pos_;
      auto more = product();
      terms.insert(terms.end(), more.begin(), more.end());
    }
    return terms;
  }
  std::vector<Term> product() {
    auto terms = factor();
    while (true) {
      if (peek('*')) ++pos_;
      else if (!(peek('(') || peek('a') || peek('1'))) break;
      auto rhs = factor();
      std::vector<Term> out;
      for (const auto& l : terms)
        for (const auto& r : rhs) {
          Term t = l;
          t.insert(t.end(), r.begin(), r.end());
          out.push_back(std::move(t));
        }
      terms = std::move(out);
    }
    return terms;
  }
  std::vector<Term> factor() {
    skip();
    if (peek('(')) {
      ++pos_;
      auto t = sum();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return t;
    }
    if (peek('1')) {
      ++pos_;
      return {Term{}};
    }
    if (peek('a')) {
      ++pos_;
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("missing variable index");
      return {Term{std::stoi(std::string(s_.substr(start, pos_ - start)))}};
    }
    fail("expected a<i>, 1 or '('");
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  std::string_view s_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses and expands e.g. "(a1a2+1)(a3a4+1)+a1a4" over n variables.
inline ConwayFunction parseConwayFunction(std::string_view text, int n) {
  return detail::ConwayExprParser(text, n).parse();
}

// ---------------------------------------------------------------------------
// Gauss brackets

/// p_i = a_i p_{i-1} + p_{i-2}, p_0 = 1, p_{-1} = 0, consuming a_1 first.
inline Integer gaussBracketNumerator(const std::vector<Integer>& a) {
  if (a.empty()) throw EmptyVector("gaussBracketNumerator: empty vector");
  Integer prev = 0, cur = 1;
  for (const auto& ai : a) {
    Integer next = ai * cur + prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Numerator of (a_2, ..., a_N); 1 when N = 1.
inline Integer gaussBracketDenominator(const std::vector<Integer>& a) {
  if (a.empty()) throw EmptyVector("gaussBracketDenominator: empty vector");
  if (a.size() == 1) return 1;
  return gaussBracketNumerator(std::vector<Integer>(a.begin() + 1, a.end()));
}

/// The bracket as a Conway function of a_1..a_n, same recurrence.
inline ConwayFunction gaussBracketFunction(int n) {
  if (n < 1) throw EmptyVector("gaussBracketFunction: need at least one variable");
  std::vector<Term> prev, cur{Term{}};
  for (int i = 1; i <= n; ++i) {
    std::vector<Term> next;
    for (const auto& t : cur) {
      Term u = t;
      u.push_back(i);
      next.push_back(std::move(u));
    }
    next.insert(next.end(), prev.begin(), prev.end());
    prev = std::move(cur);
    cur = std::move(next);
  }
  return ConwayFunction(n, std::move(cur));
}

// ---------------------------------------------------------------------------
// Diagram pipeline

/// toMatrix -> charPoly -> P'(2)/V. Split diagrams give 0, the unknot 1.
inline Integer conwayFromDiagram(const Diagram& d) {
  if (d.crossingCount() == 0) {
    if (d.isEmpty()) throw EmptyDiagram("conwayFromDiagram: empty diagram");
    return d.freeLoops() == 1 ? Integer(1) : Integer(0);
  }
  return conwayNumberFromPoly(diagramPoly(d), d.crossingCount());
}

// ---------------------------------------------------------------------------
// Catalog

struct CatalogEntry {
  int ribbons = 0;
  int index = 0;  // 1-based position in the printed list
  std::string printed;
  ConwayFunction function;
  std::string representative;
  bool rational = false;
  /// Tangle expression realizing the family, if one is known. Rational
  /// entries use buildRational instead.
  std::optional<std::string> realization;
};

namespace detail {

struct RawEntry {
  int ribbons;
  const char* printed;
  const char* representative;
  bool rational;
  const char* realization;  // nullptr when none is known
};

inline const std::vector<RawEntry>& rawCatalog() {
  static const std::vector<RawEntry> raw{
      {1, "a1", "twist 1", true, nullptr},
      {2, "1 + a1a2", "Hopf link 2_1^2", true, nullptr},
      {3, "a1a2 + a2a3 + a3a1", "trefoil 3_1", false, "N(V1+V2+V3)"},
      {3, "a1a2a3 + a1 + a3", "trefoil 3_1", true, nullptr},
      {4, "a1a2a3 + a2a3a4 + a3a4a1 + a4a1a2", "Solomon 4_1^2", false, "N(V1+V2+V3+V4)"},
      {4, "a1a2a3a4 + a1a2 + a2a3 + a3a1", "Solomon 4_1^2", false, "N(V1+(V2+(V3+H4)))"},
      {4, "a1a2a3a4 + (a1 + a2)(a3 + a4)", "figure eight 4_1", false, "N(V1+(V2+(H3*H4)))"},
      {4, "a1a2a3 + (a1 + a2)(a3a4 + 1)", "figure eight 4_1", false, "N(V1+(V2+(H3*V4)))"},
      {4, "a1a2a3a4 + a1a2 + a3a4 + a1a4 + 1", "figure eight 4_1", true, nullptr},
      {5, "a1a2a3a4 + a2a3a4a5 + a3a4a5a1 + a4a5a1a2 + a5a1a2a3", "5_1", false, "N(V1+(V2+(V3+(V4+V5))))"},
      {5, "a1a2a3 + a2a3a4 + a3a4a1 + a4a1a2 + a1a2a3a4a5", "5_1", false, "N(V1+(V2+(V3+(V4+H5))))"},
      {5, "(a1 + a2)(a3a4 + a4a5 + a5a3) + a1a2a3a4a5", "5_2", false, "N(V1+(V2+(H3*(H4*H5))))"},
      {5, "(a1a2 + 1)(a3a4 + a4a5 + a5a3) + a2a3a4a5", "5_2", false, "N(V1+(H2*(V3+(V4+V5))))"},
      {5, "(a1 + a3 + a1a2a3)(a4 + a5) + a1a3a4a5", "5_2", false, "N(V1+(H2+(V3+(H4*H5))))"},
      {5, "(a1 + a3 + a1a2a3)(1 + a4a5) + a1a3a5", "5_2", false, "N(V1+(H2+(V3+(V4*H5))))"},
      {5, "1 + a1(a2 + a3) + (a3 + a4)a5 + a1(a2a3 + a3a4 + a4a2)a5", "Whitehead link 5_1^2", false,
       "N(V1+(H2+(H3*(H4+V5))))"},
      {5, "(a1 + a2)(a4 + a5) + a1a2a3(a4 + a5) + (a1 + a2)a3a4a5", "Whitehead link 5_1^2", false,
       "N(V1+(V2+(H3*(V4+V5))))"},
      {5, "(a1 + a2)a3(a4 + a5) + a1a2(a4 + a5) + (a1 + a2)a4a5", "Whitehead link 5_1^2", false,
       "N(V1+(V2+(V3*(V4+V5))))"},
      {5, "a1 + a5 + a1(a2 + a4)a5 + (a1a2 + 1)a3(a4a5 + 1)", "Whitehead link 5_1^2", true, nullptr},
      {5, "(a1 + a2)(a3a4a5 + a3 + a5) + a1a2(1 + a4a5)", "Whitehead link 5_1^2", false,
       "N(V1+(V2+(V3*(H4+V5))))"},
      // As printed this has coefficient 2 on a1a4a5 and a2a4a5; no tangle
      // closure has this determinant.
      {5, "(a1a2a3 + a1 + a2)(1 + a4a5) + (a1 + a2)a4a5", "Whitehead link 5_1^2", false, nullptr},
  };
  return raw;
}

}  // namespace detail

/// Families of alternating knots with n ribbons, in printed order.
inline std::vector<CatalogEntry> catalog(int n) {
  if (n < 1 || n > 5) throw OutOfRange("catalog: data exists only for 1..5 ribbons, got " + std::to_string(n));
  std::vector<CatalogEntry> out;
  for (const auto& r : detail::rawCatalog()) {
    if (r.ribbons != n) continue;
    CatalogEntry e;
    e.ribbons = n;
    e.index = static_cast<int>(out.size()) + 1;
    e.printed = r.printed;
    e.function = parseConwayFunction(r.printed, n);
    e.representative = r.representative;
    e.rational = r.rational;
    if (r.realization) e.realization = r.realization;
    out.push_back(std::move(e));
  }
  return out;
}

inline bool hasRealization(const CatalogEntry& e) { return e.rational || e.realization.has_value(); }

/// The family member with the given ribbon crossing counts.
inline Diagram entryDiagram(const CatalogEntry& e, const std::vector<std::size_t>& a) {
  if (static_cast<int>(a.size()) != e.ribbons)
    throw ArityMismatch("entryDiagram: family has " + std::to_string(e.ribbons) + " ribbons, got " +
                        std::to_string(a.size()) + " counts");
  if (e.rational) return buildRational(a);
  if (!e.realization)
    throw NoRealization("catalog entry " + std::to_string(e.ribbons) + "." + std::to_string(e.index) +
                        " has no known tangle construction");
  return buildFromTangleExpression(*e.realization, a);
}

/// All ribbon counts set to 1.
inline Diagram representativeDiagram(const CatalogEntry& e) {
  return entryDiagram(e, std::vector<std::size_t>(static_cast<std::size_t>(e.ribbons), 1));
}

}  // namespace altknot
