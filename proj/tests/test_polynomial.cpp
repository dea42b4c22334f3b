#include "catch_amalgamated.hpp"

#include <random>
#include <thread>

#include "altknot/polynomial.hpp"

using namespace altknot;

namespace {
const IntPolynomial x = IntPolynomial::x();
}

TEST_CASE("ring operations", "[polyalg]") {
  CHECK((IntPolynomial{-2, 1} + IntPolynomial{2, 1}) == IntPolynomial{0, 2});
  CHECK(IntPolynomial{-2, 1} * IntPolynomial{1, 1} * IntPolynomial{1, 1} == IntPolynomial{-2, -3, 0, 1});
  CHECK((IntPolynomial{} * IntPolynomial{1, 0, -3, 0, 1}).isZero());
  CHECK((IntPolynomial{1, 2} - IntPolynomial{1, 2}).degree() == -1);
  CHECK(IntPolynomial{3, 0, 0}.degree() == 0);
  CHECK((IntPolynomial{1, 1} * Integer(0)).isZero());
}

TEST_CASE("text form", "[polyalg]") {
  CHECK(IntPolynomial{-2, -3, 0, 1}.toString() == "x^3 - 3*x - 2");
  CHECK(IntPolynomial{}.toString() == "0");
  CHECK(IntPolynomial{0, -1}.toString() == "-x");
  CHECK(IntPolynomial{4, 0, -2, 1}.toString() == "x^3 - 2*x^2 + 4");
}

TEST_CASE("coefficients beyond 64 bits stay exact", "[polyalg]") {
  IntPolynomial p{1, 1};
  for (int i = 0; i < 7; ++i) p = p * p;  // (1+x)^128
  Integer binom = 1;
  for (int i = 0; i < 64; ++i) binom = binom * (128 - i) / (i + 1);
  CHECK(p[64] == binom);
  CHECK(p(1) == Integer(1) << 128);
}

TEST_CASE("exact division", "[polyalg]") {
  CHECK(divExact(IntPolynomial{-4, 0, 1}, IntPolynomial{-2, 1}) == IntPolynomial{2, 1});
  CHECK(divExact(IntPolynomial{-2, -3, 0, 1}, IntPolynomial{-2, 1}) == IntPolynomial{1, 2, 1});
  CHECK_THROWS_AS(divExact(IntPolynomial{1, 0, 1}, IntPolynomial{-2, 1}), NonZeroRemainder);
  CHECK_THROWS_AS(divExact(IntPolynomial{1, 0, 1}, IntPolynomial{}), DivisionByZero);
  CHECK(divExact(IntPolynomial{}, IntPolynomial{-2, 1}).isZero());
}

TEST_CASE("divExact undoes multiplication", "[polyalg][property]") {
  std::mt19937 rng(20260101);
  std::uniform_int_distribution<int> coeff(-9, 9), deg(0, 8);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Integer> a(static_cast<std::size_t>(deg(rng)) + 1), b(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& c : a) c = coeff(rng);
    for (auto& c : b) c = coeff(rng);
    b.back() = 1;  // monic divisor keeps division exact
    const IntPolynomial p(a), d(b);
    const IntPolynomial prod = p * d;
    CHECK(divExact(prod, d) == p);
    CHECK(d * divExact(prod, d) == prod);
  }
}

TEST_CASE("J_k values", "[polyalg]") {
  CHECK(chebyshevJ(-1).isZero());
  CHECK(chebyshevJ(0) == IntPolynomial{1});
  CHECK(chebyshevJ(1) == x);
  CHECK(chebyshevJ(2) == IntPolynomial{-1, 0, 1});
  CHECK(chebyshevJ(4) == IntPolynomial{1, 0, -3, 0, 1});
  CHECK_THROWS_AS(chebyshevJ(-2), InvalidArgument);
}

TEST_CASE("J_k recurrence up to 50", "[polyalg][property]") {
  for (int k = 0; k <= 50; ++k) REQUIRE(chebyshevJ(k + 1) == x * chebyshevJ(k) - chebyshevJ(k - 1));
}

TEST_CASE("J_k and its slope at 2", "[polyalg]") {
  for (int k = 0; k <= 50; ++k) {
    const auto [v, d] = evalAndDerivativeAt(chebyshevJ(k), 2);
    const Integer kk = k;
    REQUIRE(v == kk + 1);
    REQUIRE(d == kk * (kk + 1) * (kk + 2) / 6);
  }
  CHECK(evalAndDerivativeAt(chebyshevJ(3), 2).second == 10);
  const auto [v0, d0] = evalAndDerivativeAt(IntPolynomial{}, 7);
  CHECK(v0 == 0);
  CHECK(d0 == 0);
}

TEST_CASE("slope agrees with the derivative polynomial", "[polyalg][property]") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-50, 50);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Integer> a(10);
    for (auto& c : a) c = coeff(rng);
    const IntPolynomial p(a);
    const Integer x0 = coeff(rng);
    const auto [v, d] = evalAndDerivativeAt(p, x0);
    CHECK(v == p(x0));
    CHECK(d == p.derivative()(x0));
  }
}

TEST_CASE("matrix power identity", "[polyalg]") {
  for (int k = 0; k <= 20; ++k) REQUIRE(checkMatrixPowerIdentity(k));
  const PolyMatrix2 step{x, IntPolynomial{-1}, IntPolynomial{1}, IntPolynomial{}};
  CHECK((step * step)[0] == chebyshevJ(2));
  CHECK_THROWS_AS(checkMatrixPowerIdentity(-1), InvalidArgument);
}

TEST_CASE("J_k cache under concurrent readers", "[polyalg]") {
  std::vector<std::thread> pool;
  std::vector<IntPolynomial> got(8);
  for (int t = 0; t < 8; ++t)
    pool.emplace_back([&, t] { got[static_cast<std::size_t>(t)] = chebyshevJ(60 + t); });
  for (auto& th : pool) th.join();
  for (int t = 0; t < 8; ++t) CHECK(got[static_cast<std::size_t>(t)] == x * chebyshevJ(59 + t) - chebyshevJ(58 + t));
}
