#pragma once

// Closed-form characteristic polynomials of the ribbon families, the
// family recurrence with a source term, and the four-diagram relation.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "altknot/diagram.hpp"
#include "altknot/errors.hpp"
#include "altknot/polynomial.hpp"

namespace altknot {

enum class FamilyName {
  TwistCircle,
  CyclicTorus,
  TwoRibbon,
  ThreeRibbonMixed,
  ThreeRibbonParallel,
  CompositionTwo,
  CompositionThree,
};

inline constexpr std::array<FamilyName, 7> kAllFamilies{
    FamilyName::TwistCircle,      FamilyName::CyclicTorus,         FamilyName::TwoRibbon,
    FamilyName::ThreeRibbonMixed, FamilyName::ThreeRibbonParallel, FamilyName::CompositionTwo,
    FamilyName::CompositionThree,
};

inline std::string_view familyNameString(FamilyName f) {
  switch (f) {
    case FamilyName::TwistCircle: return "TwistCircle";
    case FamilyName::CyclicTorus: return "CyclicTorus";
    case FamilyName::TwoRibbon: return "TwoRibbon";
    case FamilyName::ThreeRibbonMixed: return "ThreeRibbonMixed";
    case FamilyName::ThreeRibbonParallel: return "ThreeRibbonParallel";
    case FamilyName::CompositionTwo: return "CompositionTwo";
    case FamilyName::CompositionThree: return "CompositionThree";
  }
  return "?";
}

inline FamilyName parseFamilyName(std::string_view s) {
  for (FamilyName f : kAllFamilies)
    if (familyNameString(f) == s) return f;
  throw InvalidArgument("unknown family '" + std::string(s) + "'");
}

inline std::size_t familyArity(FamilyName f) {
  switch (f) {
    case FamilyName::TwistCircle:
    case FamilyName::CyclicTorus: return 1;
    case FamilyName::TwoRibbon:
    case FamilyName::CompositionTwo: return 2;
    default: return 3;
  }
}

/// A family member. Parameters follow the closed forms: V; (j,k); (k,l,m).
struct FamilyId {
  FamilyName name = FamilyName::TwistCircle;
  std::vector<int> params;

  FamilyId() = default;
  FamilyId(FamilyName n, std::vector<int> p) : name(n), params(std::move(p)) {
    if (params.size() != familyArity(name))
      throw ArityMismatch(std::string(familyNameString(name)) + " takes " + std::to_string(familyArity(name)) +
                          " parameters, got " + std::to_string(params.size()));
    for (int q : params)
      if (q < 1) throw InvalidArgument("family parameters must be >= 1");
  }

  std::size_t crossings() const {
    std::size_t s = 0;
    for (int q : params) s += static_cast<std::size_t>(q);
    return s;
  }
};

namespace detail {
inline const IntPolynomial& J(int k) { return chebyshevJ(k); }
inline IntPolynomial X() { return IntPolynomial::x(); }
inline IntPolynomial X2() { return IntPolynomial::monomial(1, 2); }
}  // namespace detail

/// The closed form, built only from J_k.
inline IntPolynomial familyPoly(const FamilyId& id) {
  using detail::J;
  const IntPolynomial x = detail::X(), x2 = detail::X2(), two = IntPolynomial{2};
  const auto& p = id.params;
  switch (id.name) {
    case FamilyName::TwistCircle:
      return IntPolynomial{-2, 1} * J(p[0] - 1);
    case FamilyName::CyclicTorus:
      return (J(p[0]) - 1) * 2LL - x * J(p[0] - 1);
    case FamilyName::TwoRibbon: {
      const int j = p[0], k = p[1];
      return IntPolynomial{-2, 1} * (J(j - 1) + J(k - 1)) +
             x * (J(j - 1) * (J(k) - 1) + (J(j) - 1) * J(k - 1)) - x2 * J(j - 1) * J(k - 1);
    }
    case FamilyName::ThreeRibbonMixed: {
      const int k = p[0], l = p[1], m = p[2];
      const IntPolynomial a = x * J(k - 1) - J(k);
      const IntPolynomial b = x * J(l - 1) - J(l);
      return (J(k) * J(l) + a * b - 2) * J(m) - x * (a * b + J(k - 1) + J(l - 1) - 1) * J(m - 1) -
             two * J(k - 1) * J(l - 1);
    }
    case FamilyName::ThreeRibbonParallel: {
      const int k = p[0], l = p[1], m = p[2];
      return x * (J(k - 1) * J(l) * J(m) + J(k) * J(l - 1) * J(m) + J(k) * J(l) * J(m - 1)) -
             x2 * (J(k) * J(l - 1) * J(m - 1) + J(k - 1) * J(l) * J(m - 1) + J(k - 1) * J(l - 1) * J(m)) +
             (IntPolynomial::monomial(1, 3) - 2) * J(k - 1) * J(l - 1) * J(m - 1) -
             x * (J(k - 1) + J(l - 1) + J(m - 1));
    }
    case FamilyName::CompositionTwo: {
      const int k = p[0], l = p[1];
      return x * ((J(k) - 1) * J(l - 1) + J(k - 1) * (J(l) - 1)) - x2 * J(k - 1) * J(l - 1);
    }
    case FamilyName::CompositionThree: {
      // m is the middle factor.
      const int k = p[0], l = p[1], m = p[2];
      const IntPolynomial a = J(k) - 1, b = J(l) - 1;
      const IntPolynomial mid = J(m) - x * J(m - 1);
      return a * (two * J(m) - x * J(m - 1) + 2) * b + x2 * J(k - 1) * J(l - 1) * mid -
             x * (a * J(l - 1) + J(k - 1) * b) * (mid + 1);
    }
  }
  return {};
}

/// (x-2)[J_k + J_{k-1}]^2 for V = 2k+1, (x^2-4)[J_{k-1}]^2 for V = 2k.
inline IntPolynomial torusFactoredForm(int v) {
  if (v < 1) throw InvalidArgument("torusFactoredForm: v must be >= 1");
  if (v % 2 == 1) {
    const int k = (v - 1) / 2;
    const IntPolynomial s = chebyshevJ(k) + chebyshevJ(k - 1);
    return IntPolynomial{-2, 1} * s * s;
  }
  const int k = v / 2;
  return IntPolynomial{-4, 0, 1} * chebyshevJ(k - 1) * chebyshevJ(k - 1);
}

/// The diagram each closed form describes. ThreeRibbonMixed (k,l;m) is the
/// rational knot (k,m,l): m is the orthogonal ribbon. CompositionThree
/// puts m in the middle, broken at both of its closure arcs.
inline Diagram familyDiagram(const FamilyId& id) {
  std::vector<std::size_t> a(id.params.begin(), id.params.end());
  switch (id.name) {
    case FamilyName::TwistCircle: return buildTwistChain(a[0]);
    case FamilyName::CyclicTorus: return buildCyclicTorus(a[0]);
    case FamilyName::TwoRibbon: return buildRational({a[0], a[1]});
    case FamilyName::ThreeRibbonMixed: return buildRational({a[0], a[2], a[1]});
    case FamilyName::ThreeRibbonParallel: return buildPretzel(a);
    case FamilyName::CompositionTwo: return composeKnots(buildCyclicTorus(a[0]), buildCyclicTorus(a[1]));
    case FamilyName::CompositionThree:
      return composeKnots(composeKnots(buildCyclicTorus(a[0]), buildCyclicTorus(a[2])), buildCyclicTorus(a[1]));
  }
  throw InvalidArgument("familyDiagram: unknown family");
}

struct Homogeneous {
  friend bool operator==(const Homogeneous&, const Homogeneous&) = default;
};

struct FamilySource {
  IntPolynomial H;
  friend bool operator==(const FamilySource&, const FamilySource&) = default;
};

using RecurrenceResult = std::variant<Homogeneous, FamilySource>;

/// p2 = x p1 - p0 + (x-2) H. Returns Homogeneous when H = 0.
inline RecurrenceResult checkRecurrence(const IntPolynomial& p0, const IntPolynomial& p1, const IntPolynomial& p2) {
  const IntPolynomial x = IntPolynomial::x();
  const IntPolynomial r = p2 - x * p1 + p0;
  if (r.isZero()) return Homogeneous{};
  IntPolynomial h = divExact(r, IntPolynomial{-2, 1});
  // Shifting every member by H must give the homogeneous recurrence.
  const IntPolynomial q0 = p0 + h, q1 = p1 + h, q2 = p2 + h;
  if (!(q2 - x * q1 + q0).isZero()) throw Error("checkRecurrence: homogenized triple fails the recurrence");
  return FamilySource{std::move(h)};
}

/// link = (x+2) twist - (x+1) factor - x composition
inline bool linkRelationCheck(const IntPolynomial& factor, const IntPolynomial& composition,
                              const IntPolynomial& twist, const IntPolynomial& link) {
  return link == IntPolynomial{2, 1} * twist - IntPolynomial{1, 1} * factor - IntPolynomial::x() * composition;
}

}  // namespace altknot
