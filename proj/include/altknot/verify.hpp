#pragma once

// The acceptance sweeps. Each criterion reports pass/fail, elapsed time
// against its budget, and the first few mismatches.

#include <chrono>
#include <cstddef>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "altknot/conway.hpp"
#include "altknot/diagram.hpp"
#include "altknot/families.hpp"
#include "altknot/knot_matrix.hpp"
#include "altknot/oracle.hpp"
#include "altknot/polynomial.hpp"

namespace altknot {

enum class Suite { All, Recurrences, Oracle, Conway, Relation };

inline Suite parseSuite(std::string_view s) {
  if (s == "all") return Suite::All;
  if (s == "recurrences") return Suite::Recurrences;
  if (s == "oracle") return Suite::Oracle;
  if (s == "conway") return Suite::Conway;
  if (s == "eq13") return Suite::Relation;
  throw InvalidArgument("unknown suite '" + std::string(s) + "'");
}

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0;
  double budget = 0;  // 0: no time limit
  std::size_t checks = 0;
  std::vector<std::string> mismatches;

  std::string line() const {
    std::ostringstream out;
    out << (passed ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << checks << " checks, ";
    out.setf(std::ios::fixed);
    out.precision(3);
    out << seconds << "s";
    if (budget > 0) out << " of " << budget << "s";
    out << ")";
    return out.str();
  }
};

/// Collects every diagram-built matrix so the structural criteria can be
/// run over all of them.
class Verifier {
 public:
  std::vector<CriterionResult> run(Suite suite) {
    std::vector<CriterionResult> out;
    auto want = [&](std::initializer_list<Suite> s) {
      if (suite == Suite::All) return true;
      for (Suite x : s)
        if (x == suite) return true;
      return false;
    };
    if (want({Suite::Recurrences})) {
      out.push_back(timed(1, "torus family equals its closed and factored forms", 1.0, [&](auto& r) { torus(r); }));
      out.push_back(timed(2, "twist family equals (x-2) J_{V-1}", 1.0, [&](auto& r) { twist(r); }));
      out.push_back(timed(5, "limits of J_k at 2 and the matrix power identity", 1.0, [&](auto& r) { limits(r); }));
    }
    if (want({Suite::Oracle})) {
      out.push_back(timed(3, "closed forms match diagram polynomials", 10.0, [&](auto& r) { closedForms(r); }));
      out.push_back(timed(4, "rational knots have the Gauss bracket as Conway number", 10.0,
                          [&](auto& r) { rational(r); }));
    }
    if (want({Suite::Relation})) {
      out.push_back(timed(6, "factor/composition/twist/link relation", 5.0, [&](auto& r) { quartets(r); }));
    }
    if (want({Suite::Conway})) {
      out.push_back(timed(9, "Conway number properties", 10.0, [&](auto& r) { conwayProperties(r); }));
      out.push_back(timed(10, "catalog integrity", 1.0, [&](auto& r) { catalogIntegrity(r); }));
      out.push_back(timed(11, "representative knots", 5.0, [&](auto& r) { representatives(r); }));
    }
    if (want({Suite::Oracle})) {
      out.push_back(timed(7, "structural invariants of every matrix", 0.0, [&](auto& r) { structural(r); }));
      out.push_back(timed(8, "permutation decompositions", 30.0, [&](auto& r) { decompositions(r); }));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return out;
  }

  std::size_t matrixCount() const { return log_.size(); }

 private:
  struct Logged {
    std::string origin;
    IntPolynomial poly;
  };

  using Body = std::function<void(CriterionResult&)>;

  static CriterionResult timed(int id, std::string title, double budget, const Body& body) {
    CriterionResult r;
    r.id = id;
    r.title = std::move(title);
    r.budget = budget;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      body(r);
    } catch (const std::exception& e) {
      r.mismatches.push_back(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.passed = r.mismatches.empty();
    if (budget > 0 && r.seconds > budget) {
      r.passed = false;
      std::ostringstream msg;
      msg << "time budget exceeded: " << r.seconds << "s > " << budget << "s";
      r.mismatches.push_back(msg.str());
    }
    return r;
  }

  static void expect(CriterionResult& r, bool ok, const std::function<std::string()>& what) {
    ++r.checks;
    if (!ok && r.mismatches.size() < 20) r.mismatches.push_back(what());
  }

  /// charPoly of the diagram, with its matrix recorded.
  IntPolynomial poly(const Diagram& d, const std::string& origin) {
    if (d.freeLoops() > 0 || d.crossingCount() == 0) return {};
    KnotMatrix m = diagramMatrix(d);
    auto it = log_.find(m);
    if (it != log_.end()) return it->second.poly;
    IntPolynomial p = charPoly(m);
    log_.emplace(std::move(m), Logged{origin, p});
    return p;
  }

  Integer conway(const Diagram& d, const std::string& origin) {
    if (d.crossingCount() == 0 || d.freeLoops() > 0) return conwayFromDiagram(d);
    return conwayNumberFromPoly(poly(d, origin), d.crossingCount());
  }

  static std::string tuple(std::initializer_list<long long> xs) {
    std::ostringstream out;
    out << '(';
    bool first = true;
    for (long long x : xs) {
      if (!first) out << ',';
      out << x;
      first = false;
    }
    out << ')';
    return out.str();
  }

  // -- criteria --------------------------------------------------------------

  void torus(CriterionResult& r) {
    for (int v = 1; v <= 12; ++v) {
      const IntPolynomial p = poly(buildCyclicTorus(static_cast<std::size_t>(v)), "torus:" + std::to_string(v));
      const IntPolynomial closed = familyPoly({FamilyName::CyclicTorus, {v}});
      const IntPolynomial factored = torusFactoredForm(v);
      expect(r, p == closed, [&] { return "torus:" + std::to_string(v) + " " + p.toString() + " vs " + closed.toString(); });
      expect(r, p == factored,
             [&] { return "torus:" + std::to_string(v) + " factored " + factored.toString() + " vs " + p.toString(); });
    }
  }

  void twist(CriterionResult& r) {
    for (int v = 1; v <= 12; ++v) {
      const IntPolynomial p = poly(buildTwistChain(static_cast<std::size_t>(v)), "twist:" + std::to_string(v));
      const IntPolynomial closed = IntPolynomial{-2, 1} * chebyshevJ(v - 1);
      expect(r, p == closed, [&] { return "twist:" + std::to_string(v) + " " + p.toString() + " vs " + closed.toString(); });
    }
  }

  static void limits(CriterionResult& r) {
    for (int k = 0; k <= 50; ++k) {
      const auto [value, slope] = evalAndDerivativeAt(chebyshevJ(k), 2);
      const Integer kk = k;
      expect(r, value == kk + 1, [&] { return "J_" + std::to_string(k) + "(2) wrong"; });
      expect(r, slope == kk * (kk + 1) * (kk + 2) / 6, [&] { return "J_" + std::to_string(k) + "'(2) wrong"; });
    }
    for (int k = 0; k <= 20; ++k)
      expect(r, checkMatrixPowerIdentity(k), [&] { return "matrix power identity fails at k=" + std::to_string(k); });
  }

  void closedForms(CriterionResult& r) {
    auto check = [&](FamilyName f, std::vector<int> params) {
      const FamilyId id(f, params);
      const IntPolynomial closed = familyPoly(id);
      std::ostringstream name;
      name << familyNameString(f);
      for (int q : params) name << ' ' << q;
      const IntPolynomial built = poly(familyDiagram(id), name.str());
      expect(r, closed == built, [&] { return name.str() + ": closed " + closed.toString() + " vs diagram " + built.toString(); });
    };
    for (int j = 1; j <= 4; ++j)
      for (int k = 1; k <= 4; ++k) {
        check(FamilyName::TwoRibbon, {j, k});
        check(FamilyName::CompositionTwo, {j, k});
      }
    for (int k = 1; k <= 3; ++k)
      for (int l = 1; l <= 3; ++l)
        for (int m = 1; m <= 3; ++m) {
          check(FamilyName::ThreeRibbonMixed, {k, l, m});
          check(FamilyName::ThreeRibbonParallel, {k, l, m});
        }
  }

  void rational(CriterionResult& r) {
    std::vector<std::vector<std::size_t>> vectors;
    std::function<void(std::vector<std::size_t>&, std::size_t)> gen = [&](std::vector<std::size_t>& a, std::size_t len) {
      if (a.size() == len) {
        vectors.push_back(a);
        return;
      }
      for (std::size_t x = 1; x <= 3; ++x) {
        a.push_back(x);
        gen(a, len);
        a.pop_back();
      }
    };
    for (std::size_t len = 1; len <= 4; ++len) {
      std::vector<std::size_t> a;
      gen(a, len);
    }
    vectors.push_back({4, 3});
    for (const auto& a : vectors) {
      std::ostringstream name;
      name << "rational:";
      for (std::size_t i = 0; i < a.size(); ++i) name << (i ? "," : "") << a[i];
      const Integer c = conway(buildRational(a), name.str());
      const Integer g = gaussBracketNumerator(std::vector<Integer>(a.begin(), a.end()));
      expect(r, c == g, [&] { return name.str() + ": conway " + c.str() + " vs bracket " + g.str(); });
    }
    expect(r, conway(buildRational({4, 3}), "rational:4,3") == 13, [] { return "rational:4,3 is not 13"; });
    expect(r, conway(buildRational({2, 1, 1}), "rational:2,1,1") == 5, [] { return "rational:2,1,1 is not 5"; });
  }

  void quartets(CriterionResult& r) {
    const std::vector<std::pair<std::string, Diagram>> base{
        {"twist:1", buildTwistChain(1)},
        {"twist:2", buildTwistChain(2)},
        {"torus:2", buildCyclicTorus(2)},
        {"torus:3", buildCyclicTorus(3)},
    };
    for (const auto& [n1, d1] : base)
      for (const auto& [n2, d2] : base) {
        const Quartet q = makeQuartet(d1, d2);
        const std::string tag = "(" + n1 + ", " + n2 + ")";
        const bool ok = linkRelationCheck(poly(q.factor, "union" + tag), poly(q.composition, "compose" + tag),
                                          poly(q.twist, "twistcompose" + tag), poly(q.link, "link" + tag));
        expect(r, ok, [&] { return "relation fails for " + tag; });
      }
  }

  /// Builder diagrams with at most maxV crossings: twists, tori, pretzels
  /// and rationals with ribbon counts up to 3.
  static std::vector<std::pair<std::string, Diagram>> builderDiagrams(std::size_t maxV) {
    std::vector<std::pair<std::string, Diagram>> out;
    for (std::size_t v = 1; v <= maxV; ++v) {
      out.emplace_back("twist:" + std::to_string(v), buildTwistChain(v));
      out.emplace_back("torus:" + std::to_string(v), buildCyclicTorus(v));
    }
    std::function<void(std::vector<std::size_t>&, std::size_t)> gen = [&](std::vector<std::size_t>& a, std::size_t len) {
      std::size_t sum = 0;
      for (std::size_t x : a) sum += x;
      if (sum > maxV) return;
      if (a.size() == len) {
        std::string s;
        for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
        if (len >= 2) out.emplace_back("pretzel:" + s, buildPretzel(a));
        out.emplace_back("rational:" + s, buildRational(a));
        return;
      }
      for (std::size_t x = 1; x <= 3; ++x) {
        a.push_back(x);
        gen(a, len);
        a.pop_back();
      }
    };
    for (std::size_t len = 1; len <= 4; ++len) {
      std::vector<std::size_t> a;
      gen(a, len);
    }
    return out;
  }

  void conwayProperties(CriterionResult& r) {
    expect(r, conwayFromDiagram(Diagram::unknot()) == 1, [] { return "unknot is not 1"; });
    for (std::size_t v = 1; v <= 10; ++v) {
      const Integer c = conway(buildTwistChain(v), "twist:" + std::to_string(v));
      expect(r, c == 1, [&] { return "twist:" + std::to_string(v) + " has Conway number " + c.str(); });
    }
    const auto all = builderDiagrams(10);
    std::map<std::string, Integer> value;
    for (const auto& [name, d] : all) {
      value[name] = conway(d, name);
      if (d.crossingCount() + 1 <= 10) {
        const Integer kinked = conway(twistComposition(d, Diagram::unknot()), "twistcompose(" + name + ",unknot)");
        expect(r, kinked == value[name], [&] { return "adding a twist changes " + name; });
      }
    }
    // Every pair with at most 10 crossings in total.
    const auto small = builderDiagrams(9);
    for (const auto& [n1, d1] : small)
      for (const auto& [n2, d2] : small) {
        if (d1.crossingCount() + d2.crossingCount() > 10) continue;
        const std::string tag = "(" + n1 + "," + n2 + ")";
        const Integer product = value.at(n1) * value.at(n2);
        const Integer composed = conway(composeKnots(d1, d2), "compose" + tag);
        expect(r, composed == product, [&] { return "compose" + tag + " = " + composed.str() + ", product " + product.str(); });
        const Integer twisted = conway(twistComposition(d1, d2), "twistcompose" + tag);
        expect(r, twisted == product, [&] { return "twistcompose" + tag + " = " + twisted.str(); });
        const Integer split = conway(disjointUnion(d1, d2), "union" + tag);
        expect(r, split == 0, [&] { return "union" + tag + " = " + split.str(); });
      }
    const Integer granny = conway(composeKnots(buildCyclicTorus(3), buildCyclicTorus(3)), "compose(torus:3,torus:3)");
    expect(r, granny == 9, [&] { return "granny knot has Conway number " + granny.str(); });
  }

  static void catalogIntegrity(CriterionResult& r) {
    const std::vector<std::size_t> counts{1, 1, 2, 5, 12};
    const std::map<int, std::vector<std::size_t>> termCounts{
        {3, {3, 3}}, {4, {4, 4, 5, 5, 5}}, {5, {5, 5, 7, 7, 7, 7, 8, 8, 8, 8, 8, 8}}};
    for (int n = 1; n <= 5; ++n) {
      const auto entries = catalog(n);
      expect(r, entries.size() == counts[static_cast<std::size_t>(n - 1)],
             [&] { return "N=" + std::to_string(n) + " has " + std::to_string(entries.size()) + " entries"; });
      std::vector<std::size_t> tc;
      std::size_t rationals = 0;
      for (const auto& e : entries) {
        const std::string tag = std::to_string(n) + "." + std::to_string(e.index);
        tc.push_back(e.function.termCount());
        expect(r, e.function.hasSingleParity(), [&] { return tag + " mixes term parities"; });
        expect(r, e.function.allOnes() == e.function.termCount(), [&] { return tag + " all-ones value differs from term count"; });
        if (e.rational) {
          ++rationals;
          expect(r, e.function.sameAs(gaussBracketFunction(n)), [&] { return tag + " is not the Gauss bracket"; });
        }
      }
      expect(r, rationals == 1, [&] { return "N=" + std::to_string(n) + " has " + std::to_string(rationals) + " rational entries"; });
      if (termCounts.count(n))
        expect(r, tc == termCounts.at(n), [&] { return "N=" + std::to_string(n) + " term counts differ"; });
    }
  }

  void representatives(CriterionResult& r) {
    std::size_t pinned = 0;
    for (int n = 1; n <= 5; ++n)
      for (const auto& e : catalog(n)) {
        if (!hasRealization(e)) continue;
        ++pinned;
        const std::string tag = "catalog:" + std::to_string(n) + "." + std::to_string(e.index);
        const Integer c = conway(representativeDiagram(e), tag);
        expect(r, c == e.function.termCount(),
               [&] { return tag + " representative has Conway number " + c.str(); });
      }
    expect(r, pinned > 0, [] { return "no catalog entry is realized"; });
  }

  void structural(CriterionResult& r) {
    for (const auto& [m, logged] : log_) {
      const auto report = validate(m);
      expect(r, report.ok, [&] { return logged.origin + ": " + (report.diagnostics.empty() ? "" : report.diagnostics[0]); });
      const auto [value, slope] = evalAndDerivativeAt(logged.poly, 2);
      expect(r, value == 0, [&] { return logged.origin + ": P(2) = " + value.str(); });
      expect(r, slope % Integer(static_cast<long long>(m.size())) == 0,
             [&] { return logged.origin + ": P'(2) not divisible by V"; });
    }
    expect(r, !log_.empty(), [] { return "no matrices were produced"; });
  }

  void decompositions(CriterionResult& r) {
    for (const auto& [m, logged] : log_) {
      const std::size_t count = permutationDecompositions(m).size();
      if (components(m).count() == 1)
        expect(r, count == 1, [&] { return logged.origin + ": " + std::to_string(count) + " decompositions of a knot"; });
      if (m.size() <= 6) {
        const std::size_t brute = oracle::bruteForceDecompositionCount(m);
        expect(r, brute == count,
               [&] { return logged.origin + ": " + std::to_string(count) + " vs brute force " + std::to_string(brute); });
      }
    }
  }

  std::map<KnotMatrix, Logged> log_;
};

/// Runs a suite; returns true when every criterion passed.
inline bool runSuite(Suite suite, std::ostream& out) {
  Verifier v;
  bool ok = true;
  for (const auto& r : v.run(suite)) {
    out << r.line() << '\n';
    for (const auto& m : r.mismatches) out << "  mismatch: " << m << '\n';
    ok = ok && r.passed;
  }
  return ok;
}

}  // namespace altknot
