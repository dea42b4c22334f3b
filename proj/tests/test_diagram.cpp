#include "catch_amalgamated.hpp"

#include <numeric>
#include <random>

#include "altknot/diagram.hpp"
#include "altknot/families.hpp"
#include "altknot/family_spec.hpp"
#include "altknot/oracle.hpp"

using namespace altknot;

namespace {

const IntPolynomial x = IntPolynomial::x();
const IntPolynomial trefoilPoly{-2, -3, 0, 1};

std::vector<std::pair<std::string, Diagram>> smallBuilders() {
  std::vector<std::pair<std::string, Diagram>> out;
  for (std::size_t v = 1; v <= 4; ++v) {
    out.emplace_back("twist:" + std::to_string(v), buildTwistChain(v));
    out.emplace_back("torus:" + std::to_string(v), buildCyclicTorus(v));
  }
  out.emplace_back("pretzel:1,1,1", buildPretzel({1, 1, 1}));
  out.emplace_back("pretzel:2,1", buildPretzel({2, 1}));
  out.emplace_back("rational:2,1", buildRational({2, 1}));
  out.emplace_back("rational:2,1,1", buildRational({2, 1, 1}));
  out.emplace_back("rational:1,1,1,1", buildRational({1, 1, 1, 1}));
  return out;
}

}  // namespace

TEST_CASE("twist chain matrices", "[diagrams][builders]") {
  CHECK(diagramMatrix(buildTwistChain(1)) == KnotMatrix{{2}});
  CHECK(diagramMatrix(buildTwistChain(2)) == KnotMatrix{{1, 1}, {1, 1}});
  CHECK(diagramPoly(buildTwistChain(2)) == IntPolynomial{0, -2, 1});
  CHECK(diagramPoly(buildTwistChain(3)) == IntPolynomial{-2, 1} * chebyshevJ(2));
  for (std::size_t v = 2; v <= 8; ++v) {
    const KnotMatrix m = diagramMatrix(buildTwistChain(v));
    for (std::size_t j = 0; j < v; ++j)
      for (std::size_t k = 0; k < v; ++k) {
        int want = (j + 1 == k || k + 1 == j) ? 1 : 0;
        if (j == k && (j == 0 || j == v - 1)) want = 1;
        REQUIRE(m(j, k) == want);
      }
  }
}

TEST_CASE("cyclic torus matrices are circulant", "[diagrams][builders]") {
  CHECK(diagramMatrix(buildCyclicTorus(1)) == KnotMatrix{{2}});
  CHECK(diagramMatrix(buildCyclicTorus(2)) == KnotMatrix{{0, 2}, {2, 0}});
  for (std::size_t v = 3; v <= 9; ++v) {
    const KnotMatrix m = diagramMatrix(buildCyclicTorus(v));
    for (std::size_t j = 0; j < v; ++j)
      for (std::size_t k = 0; k < v; ++k)
        REQUIRE(m(j, k) == (((j + 1) % v == k || (k + 1) % v == j) ? 1 : 0));
  }
  CHECK(diagramPoly(buildCyclicTorus(3)) == trefoilPoly);
  CHECK(diagramPoly(buildCyclicTorus(4)) == IntPolynomial{0, 0, -4, 0, 1});
  CHECK(diagramPoly(buildCyclicTorus(5)) == (chebyshevJ(5) - 1) * 2LL - x * chebyshevJ(4));
}

TEST_CASE("twist and torus families up to 12", "[diagrams][builders]") {
  for (int v = 1; v <= 12; ++v) {
    const auto uv = static_cast<std::size_t>(v);
    REQUIRE(diagramPoly(buildTwistChain(uv)) == IntPolynomial{-2, 1} * chebyshevJ(v - 1));
    REQUIRE(diagramPoly(buildCyclicTorus(uv)) == (chebyshevJ(v) - 1) * 2LL - x * chebyshevJ(v - 1));
    REQUIRE(diagramPoly(buildCyclicTorus(uv)) == torusFactoredForm(v));
  }
}

TEST_CASE("pretzel and rational builders", "[diagrams][builders]") {
  CHECK(diagramPoly(buildPretzel({1, 1, 1})) == trefoilPoly);
  CHECK(diagramPoly(buildRational({3})) == trefoilPoly);
  CHECK(diagramPoly(buildRational({2, 1, 1})) == IntPolynomial{0, -4, -2, 0, 1});
  CHECK(buildRational({4, 3}).crossingCount() == 7);
  CHECK_THROWS_AS(buildPretzel({3}), InvalidArgument);
  CHECK_THROWS_AS(buildPretzel({1, 0}), InvalidArgument);
  CHECK_THROWS_AS(buildRational({}), InvalidArgument);
  CHECK_THROWS_AS(buildTwistChain(0), InvalidArgument);
  CHECK_THROWS_AS(buildCyclicTorus(0), InvalidArgument);
}

TEST_CASE("tangle algebra reproduces the builders", "[diagrams][tangle]") {
  CHECK(diagramPoly(numeratorClosure(ribbonTangle(3, Direction::Horizontal))) == diagramPoly(buildCyclicTorus(3)));
  for (std::size_t a = 1; a <= 3; ++a)
    for (std::size_t b = 1; b <= 3; ++b) {
      const Tangle t = joinEW(ribbonTangle(a, Direction::Vertical), ribbonTangle(b, Direction::Vertical));
      CHECK(diagramPoly(numeratorClosure(t)) == diagramPoly(buildPretzel({a, b})));
    }
}

TEST_CASE("parallel pair joined to a T tangle", "[diagrams][tangle]") {
  for (std::size_t a1 = 1; a1 <= 3; ++a1)
    for (std::size_t a2 = 1; a2 <= 3; ++a2)
      for (std::size_t a3 = 1; a3 <= 3; ++a3)
        for (std::size_t a4 = 1; a4 <= 3; ++a4) {
          const Tangle pair = joinEW(ribbonTangle(a1, Direction::Vertical), ribbonTangle(a2, Direction::Vertical));
          const Tangle tee = joinNS(ribbonTangle(a3, Direction::Horizontal), ribbonTangle(a4, Direction::Vertical));
          const Diagram d = numeratorClosure(joinEW(pair, tee));
          const auto p = diagramPoly(d);
          const Integer c = conwayNumberFromPoly(p, d.crossingCount());
          const auto I = [](std::size_t v) { return Integer(static_cast<long long>(v)); };
          REQUIRE(c == I(a1) * I(a2) * I(a3) + (I(a1) + I(a2)) * (I(a3) * I(a4) + 1));
        }
}

TEST_CASE("degenerate closures", "[diagrams][tangle]") {
  CHECK_THROWS_AS(numeratorClosure(Tangle::zero()), ClosureDisconnected);
  CHECK_THROWS_AS(denominatorClosure(Tangle::infinity()), ClosureDisconnected);
  CHECK_THROWS_AS(numeratorClosure(Tangle::infinity()), ClosureDisconnected);
  CHECK_THROWS_AS(ribbonTangle(0, Direction::Horizontal), InvalidArgument);
  CHECK_THROWS_AS(numeratorClosure(joinEW(Tangle::zero(), Tangle::zero())), ClosureDisconnected);
}

TEST_CASE("ribbon tangles follow the orientation convention", "[diagrams][tangle]") {
  for (std::size_t k = 1; k <= 6; ++k) {
    CHECK(checkOrientationConvention(ribbonTangle(k, Direction::Horizontal)));
    CHECK(checkOrientationConvention(ribbonTangle(k, Direction::Vertical)));
  }
  CHECK_FALSE(tangleOrientation(Tangle::zero()).determined);
}

TEST_CASE("alternation assignment", "[diagrams][alternation]") {
  CHECK(assignAlternation(buildTwistChain(1)).toString() == "O1 U1");
  // Trefoil up to relabeling: one component, every crossing once Over and once Under.
  const GaussCode t = assignAlternation(buildCyclicTorus(3));
  CHECK(t.componentCount() == 1);
  CHECK(toMatrix(t) == toMatrix(parseGaussCode("O1 U2 O3 U1 O2 U3")));
  CHECK(assignAlternation(buildCyclicTorus(2)).componentCount() == 2);
}

TEST_CASE("odd spacing admits no alternating assignment", "[diagrams][alternation]") {
  // Strand visits crossings 1 2 1 2: crossing 1 would be met at two even positions.
  std::vector<Port> partner(8);
  auto glue = [&](Port a, Port b) {
    partner[a] = b;
    partner[b] = a;
  };
  glue(portOf(0, Slot::SW), portOf(1, Slot::NE));
  glue(portOf(1, Slot::SW), portOf(0, Slot::NW));
  glue(portOf(0, Slot::SE), portOf(1, Slot::NW));
  glue(portOf(1, Slot::SE), portOf(0, Slot::NE));
  const Diagram d = Diagram::fromPorts(partner);
  CHECK(d.strands().size() == 1);
  CHECK_THROWS_AS(assignAlternation(d), AlternationConflict);
}

TEST_CASE("port gluing is checked", "[diagrams]") {
  CHECK_THROWS_AS(Diagram::fromPorts({1, 0, 3}), InvalidArgument);
  CHECK_THROWS_AS(Diagram::fromPorts({0, 1, 2, 3}), InvalidArgument);
  CHECK_THROWS_AS(Diagram::fromPorts({1, 2, 3, 0}), InvalidArgument);
}

TEST_CASE("diagram matrices are knot matrices", "[diagrams][property]") {
  for (const auto& [name, d] : smallBuilders()) {
    INFO(name);
    const KnotMatrix m = diagramMatrix(d);
    CHECK(validate(m).ok);
    CHECK(components(m).count() == d.componentCount());
    CHECK(oracle::charPolyAgrees(m, diagramPoly(d)));
  }
}

TEST_CASE("relabeling builder matrices", "[diagrams][property]") {
  std::mt19937 rng(21);
  for (const auto& [name, d] : smallBuilders()) {
    const KnotMatrix m = diagramMatrix(d);
    std::vector<std::size_t> perm(m.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(charPoly(m.relabeled(perm)) == charPoly(m));
  }
}

TEST_CASE("disjoint union and composition", "[diagrams][compose]") {
  const Diagram t = buildCyclicTorus(3);
  CHECK(diagramPoly(disjointUnion(t, t)) == trefoilPoly * trefoilPoly);
  const Diagram granny = composeKnots(t, t);
  CHECK(granny.crossingCount() == 6);
  CHECK(granny.componentCount() == 1);
  CHECK(evalAndDerivativeAt(diagramPoly(granny), 2).second == 54);
  CHECK(diagramPoly(composeKnots(t, Diagram::unknot())) == trefoilPoly);
  CHECK(diagramPoly(composeKnots(Diagram::unknot(), t)) == trefoilPoly);
  CHECK(composeKnots(Diagram::unknot(), Diagram::unknot()).isUnknot());
  CHECK_THROWS_AS(composeKnots(Diagram(), t), EmptyDiagram);
  CHECK_THROWS_AS(twistComposition(t, Diagram()), EmptyDiagram);
  CHECK_THROWS_AS(linkComposition(Diagram(), Diagram()), EmptyDiagram);
  CHECK(twistComposition(t, t).crossingCount() == 7);
  CHECK(linkComposition(t, t).crossingCount() == 8);
  CHECK(linkComposition(t, t).componentCount() == 2);
}

TEST_CASE("four-diagram relation", "[diagrams][relation]") {
  const auto base = smallBuilders();
  for (const auto& [n1, d1] : base)
    for (const auto& [n2, d2] : base) {
      if (d1.crossingCount() + d2.crossingCount() > 8) continue;
      INFO(n1 << " with " << n2);
      const Quartet q = makeQuartet(d1, d2);
      REQUIRE(linkRelationCheck(diagramPoly(q.factor), diagramPoly(q.composition), diagramPoly(q.twist),
                                diagramPoly(q.link)));
    }
  const Quartet q = makeQuartet(buildTwistChain(1), buildCyclicTorus(3));
  CHECK(linkRelationCheck(diagramPoly(q.factor), diagramPoly(q.composition), diagramPoly(q.twist),
                          diagramPoly(q.link)));
  CHECK_FALSE(linkRelationCheck(diagramPoly(q.factor) + 1, diagramPoly(q.composition), diagramPoly(q.twist),
                                diagramPoly(q.link)));
}

TEST_CASE("tangle expressions", "[diagrams][tangle]") {
  CHECK(diagramPoly(buildFromTangleExpression("N(V1+V2+V3)", {1, 1, 1})) == trefoilPoly);
  CHECK(diagramPoly(buildFromTangleExpression("n( h1 )", {3})) == trefoilPoly);
  CHECK(diagramPoly(buildFromTangleExpression("D(H1*V2)", {2, 1})) == diagramPoly(buildRational({1, 2})));
  CHECK_THROWS_AS(buildFromTangleExpression("N(V1+V3)", {1, 1}), ArityMismatch);
  CHECK_THROWS_AS(buildFromTangleExpression("X(V1)", {1}), SyntaxError);
  CHECK_THROWS_AS(buildFromTangleExpression("N(V1", {1}), SyntaxError);
  CHECK_THROWS_AS(buildFromTangleExpression("N(V1)x", {1}), SyntaxError);
}

TEST_CASE("family spec strings", "[diagrams][spec]") {
  CHECK(diagramPoly(parseFamilySpec("torus:3")) == trefoilPoly);
  CHECK(parseFamilySpec("twist:5").crossingCount() == 5);
  CHECK(parseFamilySpec("rational:4,3").crossingCount() == 7);
  CHECK(diagramPoly(parseFamilySpec("pretzel:1,1,1")) == trefoilPoly);
  CHECK(diagramPoly(parseFamilySpec("union(torus:3, torus:3)")) == trefoilPoly * trefoilPoly);
  CHECK(parseFamilySpec("compose(pretzel:1,1,1,torus:3)").crossingCount() == 6);
  CHECK(parseFamilySpec("link(torus:3,twist:1)").crossingCount() == 6);
  CHECK(parseFamilySpec("twistcompose(unknot,torus:3)").crossingCount() == 4);
  CHECK(parseFamilySpec("unknot").isUnknot());
  CHECK(parseFamilySpec("catalog:3.1:1,1,1").crossingCount() == 3);
  CHECK_THROWS_AS(parseFamilySpec("torus:"), SyntaxError);
  CHECK_THROWS_AS(parseFamilySpec("knot:3"), SyntaxError);
  CHECK_THROWS_AS(parseFamilySpec("compose(torus:3)"), SyntaxError);
  CHECK_THROWS_AS(parseFamilySpec("torus:3,4"), ArityMismatch);
  CHECK_THROWS_AS(parseFamilySpec("torus:3 junk"), SyntaxError);
  CHECK_THROWS_AS(parseFamilySpec("catalog:6.1:1"), OutOfRange);
}
