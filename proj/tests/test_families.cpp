#include "catch_amalgamated.hpp"

#include <algorithm>

#include "altknot/families.hpp"

using namespace altknot;

namespace {
const IntPolynomial x = IntPolynomial::x();
const IntPolynomial xm2{-2, 1};
}  // namespace

TEST_CASE("closed form examples", "[families]") {
  CHECK(familyPoly({FamilyName::TwoRibbon, {1, 1}}) == IntPolynomial{-4, 0, 1});
  const IntPolynomial whitehead = familyPoly({FamilyName::ThreeRibbonMixed, {2, 2, 1}});
  CHECK(whitehead == IntPolynomial{0, 0, -4, -2, 0, 1});
  CHECK(evalAndDerivativeAt(whitehead, 2).second == 40);
  const IntPolynomial fig8 = familyPoly({FamilyName::ThreeRibbonParallel, {2, 1, 1}});
  CHECK(fig8 == IntPolynomial{0, -4, -2, 0, 1});
  CHECK(conwayNumberFromPoly(fig8, 4) == 5);
  CHECK(familyPoly({FamilyName::ThreeRibbonMixed, {2, 1, 1}}) == IntPolynomial{0, -4, -2, 0, 1});
  const IntPolynomial granny = familyPoly({FamilyName::CompositionTwo, {3, 3}});
  CHECK(granny(2) == 0);
  CHECK(evalAndDerivativeAt(granny, 2).second == 54);
}

TEST_CASE("torus factored form", "[families]") {
  CHECK(torusFactoredForm(3) == IntPolynomial{-2, -3, 0, 1});
  CHECK(torusFactoredForm(4) == IntPolynomial{-4, 0, 1} * IntPolynomial{0, 0, 1});
  CHECK(torusFactoredForm(1) == xm2);
  for (int v = 1; v <= 16; ++v) REQUIRE(familyPoly({FamilyName::CyclicTorus, {v}}) == torusFactoredForm(v));
  CHECK_THROWS_AS(torusFactoredForm(0), InvalidArgument);
}

TEST_CASE("family arity and parameters", "[families]") {
  CHECK_THROWS_AS(FamilyId(FamilyName::TwoRibbon, {1}), ArityMismatch);
  CHECK_THROWS_AS(FamilyId(FamilyName::CyclicTorus, {1, 2}), ArityMismatch);
  CHECK_THROWS_AS(FamilyId(FamilyName::ThreeRibbonMixed, {1, 0, 1}), InvalidArgument);
  CHECK(FamilyId(FamilyName::CompositionThree, {1, 2, 3}).crossings() == 6);
  CHECK(parseFamilyName("ThreeRibbonParallel") == FamilyName::ThreeRibbonParallel);
  CHECK_THROWS_AS(parseFamilyName("FourRibbon"), InvalidArgument);
}

TEST_CASE("closed forms match diagram polynomials", "[families][oracle]") {
  for (int v = 1; v <= 12; ++v) {
    REQUIRE(familyPoly({FamilyName::TwistCircle, {v}}) == diagramPoly(familyDiagram({FamilyName::TwistCircle, {v}})));
    REQUIRE(familyPoly({FamilyName::CyclicTorus, {v}}) == diagramPoly(familyDiagram({FamilyName::CyclicTorus, {v}})));
  }
  for (int j = 1; j <= 4; ++j)
    for (int k = 1; k <= 4; ++k) {
      INFO(j << "," << k);
      const FamilyId two(FamilyName::TwoRibbon, {j, k});
      REQUIRE(familyPoly(two) == diagramPoly(buildRational({std::size_t(j), std::size_t(k)})));
      const FamilyId comp(FamilyName::CompositionTwo, {j, k});
      REQUIRE(familyPoly(comp) == diagramPoly(familyDiagram(comp)));
    }
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= 3; ++l)
      for (int m = 1; m <= 3; ++m) {
        INFO(k << "," << l << "," << m);
        const FamilyId mixed(FamilyName::ThreeRibbonMixed, {k, l, m});
        REQUIRE(familyPoly(mixed) ==
                diagramPoly(buildRational({std::size_t(k), std::size_t(m), std::size_t(l)})));
        const FamilyId par(FamilyName::ThreeRibbonParallel, {k, l, m});
        REQUIRE(familyPoly(par) == diagramPoly(buildPretzel({std::size_t(k), std::size_t(l), std::size_t(m)})));
        const FamilyId three(FamilyName::CompositionThree, {k, l, m});
        REQUIRE(familyPoly(three) == diagramPoly(familyDiagram(three)));
      }
}

TEST_CASE("symmetries", "[families]") {
  for (int k = 1; k <= 4; ++k)
    for (int l = 1; l <= 4; ++l)
      for (int m = 1; m <= 4; ++m) {
        CHECK(familyPoly({FamilyName::ThreeRibbonMixed, {k, l, m}}) ==
              familyPoly({FamilyName::ThreeRibbonMixed, {l, k, m}}));
        std::vector<int> p{k, l, m};
        const IntPolynomial base = familyPoly({FamilyName::ThreeRibbonParallel, p});
        std::sort(p.begin(), p.end());
        do {
          CHECK(familyPoly({FamilyName::ThreeRibbonParallel, p}) == base);
        } while (std::next_permutation(p.begin(), p.end()));
      }
}

TEST_CASE("every closed form vanishes at 2", "[families][property]") {
  for (FamilyName f : kAllFamilies) {
    const std::size_t n = familyArity(f);
    std::vector<int> p(n, 1);
    for (int s = 0; s < 64; ++s) {
      int t = s;
      for (std::size_t i = 0; i < n; ++i) {
        p[i] = 1 + t % 4;
        t /= 4;
      }
      const IntPolynomial q = familyPoly({f, p});
      REQUIRE(q(2) == 0);
      REQUIRE_NOTHROW(divExact(q, xm2));
    }
  }
}

TEST_CASE("recurrence examples", "[families][recurrence]") {
  auto tw = [](int v) { return familyPoly({FamilyName::TwistCircle, {v}}); };
  auto to = [](int v) { return familyPoly({FamilyName::CyclicTorus, {v}}); };
  CHECK(std::holds_alternative<Homogeneous>(checkRecurrence(tw(1), tw(2), tw(3))));
  const auto r = checkRecurrence(to(1), to(2), to(3));
  REQUIRE(std::holds_alternative<FamilySource>(r));
  CHECK(std::get<FamilySource>(r).H == IntPolynomial{2});
  auto two = [](int k) { return familyPoly({FamilyName::TwoRibbon, {1, k}}); };
  const auto s = checkRecurrence(two(1), two(2), two(3));
  REQUIRE(std::holds_alternative<FamilySource>(s));
  const IntPolynomial H = std::get<FamilySource>(s).H;
  CHECK(two(3) == x * two(2) - two(1) + xm2 * H);
  CHECK_THROWS_AS(checkRecurrence(IntPolynomial{1}, IntPolynomial{}, IntPolynomial{}), NonZeroRemainder);
}

TEST_CASE("source term does not depend on the starting member", "[families][recurrence]") {
  for (FamilyName f : kAllFamilies) {
    const std::size_t n = familyArity(f);
    for (std::size_t pos = 0; pos < n; ++pos)
      for (int fixed = 1; fixed <= 3; ++fixed) {
        auto member = [&](int v) {
          std::vector<int> p(n, fixed);
          p[pos] = v;
          return familyPoly({f, p});
        };
        std::optional<RecurrenceResult> first;
        for (int start = 1; start <= 5; ++start) {
          const auto r = checkRecurrence(member(start), member(start + 1), member(start + 2));
          if (!first) first = r;
          INFO(familyNameString(f) << " position " << pos << " fixed " << fixed << " start " << start);
          REQUIRE(r == *first);
        }
      }
  }
}

TEST_CASE("link relation is strict", "[families][relation]") {
  const IntPolynomial f{1, 2}, c{3}, t{0, 1};
  const IntPolynomial link = IntPolynomial{2, 1} * t - IntPolynomial{1, 1} * f - x * c;
  CHECK(linkRelationCheck(f, c, t, link));
  CHECK_FALSE(linkRelationCheck(f, c, t, link + 1));
  CHECK_FALSE(linkRelationCheck(f, c + 1, t, link));
}
