#include <catch2/catch_amalgamated.hpp>

#include "hopfmod/linalg.hpp"

#include <random>

using namespace hopfmod;

namespace {

MatQ makeMat(Index rows, Index cols, std::initializer_list<int> entries) {
  MatQ m(rows, cols);
  auto it = entries.begin();
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = Rational(*it++);
  return m;
}

VecQ makeVec(std::initializer_list<int> entries) {
  VecQ v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (int e : entries) v(i++) = Rational(e);
  return v;
}

Rational randomRational(std::mt19937& rng, int maxAbs = 9) {
  std::uniform_int_distribution<int> num(-maxAbs, maxAbs);
  std::uniform_int_distribution<int> den(1, maxAbs);
  return Rational(num(rng), den(rng));
}

// A rational with a ~256-bit numerator, built digit by digit.
Rational bigRandomRational(std::mt19937& rng) {
  std::uniform_int_distribution<int> digit(0, 9);
  std::string num = "1";
  for (int i = 0; i < 77; ++i) num += static_cast<char>('0' + digit(rng));
  std::string den = "1";
  for (int i = 0; i < 20; ++i) den += static_cast<char>('0' + digit(rng));
  Rational r = parseRational(num + "/" + den);
  if (digit(rng) % 2 == 0) r = -r;
  return r;
}

}  // namespace

TEST_CASE("rref canonical forms") {
  SECTION("proportional rows collapse to rank one") {
    const auto r = rref(makeMat(2, 2, {2, 4, 1, 2}));
    REQUIRE(r.pivots == std::vector<Index>{0});
    REQUIRE(sameMatrix(r.mat, makeMat(1, 2, {1, 2})));
  }
  SECTION("identity is already canonical") {
    const auto r = rref(MatQ::Identity(3, 3));
    REQUIRE(r.pivots == std::vector<Index>{0, 1, 2});
    REQUIRE(sameMatrix(r.mat, MatQ::Identity(3, 3)));
  }
  SECTION("invertible two by two reduces to identity") {
    const auto r = rref(makeMat(2, 2, {1, 1, 1, -1}));
    REQUIRE(sameMatrix(r.mat, MatQ::Identity(2, 2)));
  }
  SECTION("degenerate shapes survive") {
    REQUIRE(rref(MatQ::Zero(0, 3)).pivots.empty());
    REQUIRE(rref(MatQ::Zero(3, 0)).pivots.empty());
    REQUIRE(kernel(MatQ::Zero(0, 3)).dim() == 3);
  }
}

TEST_CASE("kernels") {
  REQUIRE(kernel(MatQ::Zero(2, 2)).dim() == 2);
  REQUIRE(kernel(MatQ::Identity(3, 3)).dim() == 0);
  const Subspace k = kernel(makeMat(1, 2, {1, 1}));
  REQUIRE(k.dim() == 1);
  REQUIRE(k.contains(makeVec({1, -1})));
}

TEST_CASE("linear solving") {
  SECTION("unique solution") {
    const auto sol = solveLinear(makeMat(2, 2, {1, 1, 1, -1}), makeVec({2, 0}));
    REQUIRE(sol.particular.has_value());
    REQUIRE(sameMatrix(*sol.particular, makeVec({1, 1})));
    REQUIRE(sol.homogeneous.dim() == 0);
  }
  SECTION("inconsistent") {
    const auto sol = solveLinear(MatQ::Zero(1, 1), makeVec({1}));
    REQUIRE(!sol.particular.has_value());
  }
  SECTION("underdetermined") {
    const auto sol = solveLinear(MatQ::Zero(1, 1), makeVec({0}));
    REQUIRE(sol.particular.has_value());
    REQUIRE(isZero(*sol.particular));
    REQUIRE(sol.homogeneous.dim() == 1);
  }
  SECTION("rhs length mismatch throws") {
    REQUIRE_THROWS_AS(solveLinear(MatQ::Zero(2, 2), makeVec({1})), StructureError);
  }
}

TEST_CASE("subspace operations") {
  const Subspace e1 = Subspace::fromRows(makeMat(1, 2, {1, 0}));
  const Subspace e2 = Subspace::fromRows(makeMat(1, 2, {0, 1}));
  REQUIRE(e1.intersect(e2).dim() == 0);
  REQUIRE(e1.sum(e2) == Subspace::full(2));
  REQUIRE(e1.intersect(e1) == e1);
  REQUIRE_THROWS_AS(e1.sum(Subspace::full(3)), StructureError);

  SECTION("membership and coordinates") {
    const Subspace v = Subspace::fromRows(makeMat(2, 3, {1, 0, 1, 0, 1, 1}));
    REQUIRE(v.contains(makeVec({2, 3, 5})));
    REQUIRE(!v.contains(makeVec({1, 0, 0})));
    const VecQ c = v.coords(makeVec({2, 3, 5}));
    REQUIRE(sameMatrix(v.ambient(c), makeVec({2, 3, 5})));
    REQUIRE_THROWS_AS(v.coords(makeVec({1, 0, 0})), StructureError);
  }
}

TEST_CASE("canonical form is insensitive to presentation") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<Index> dims(1, 6);
    const Index rows = dims(rng), cols = dims(rng);
    MatQ m(rows, cols);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j) m(i, j) = randomRational(rng, 4);
    const Subspace v = Subspace::fromRows(m);

    // Scramble: add multiples of other rows.
    MatQ scrambled = m;
    for (Index i = 0; i < rows; ++i) {
      const Index other = dims(rng) % rows;
      if (other != i) scrambled.row(i) += randomRational(rng, 3) * scrambled.row(other);
    }
    const Subspace w = Subspace::fromRows(scrambled);
    REQUIRE(v == w);
    REQUIRE(v.containsSubspace(w));
  }
}

TEST_CASE("rank plus nullity is the column count") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<Index> dims(0, 7);
    const Index rows = dims(rng), cols = dims(rng);
    MatQ m(rows, cols);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j)
        m(i, j) = (rng() % 3 == 0) ? Rational(0) : randomRational(rng);
    const Index rank = static_cast<Index>(rref(m).pivots.size());
    REQUIRE(rank + kernel(m).dim() == cols);
  }
}

TEST_CASE("arithmetic is exact at 256-bit scale") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational a = bigRandomRational(rng);
    const Rational b = bigRandomRational(rng);
    REQUIRE((a + b) - b == a);
    if (b != 0) REQUIRE((a * b) / b == a);
  }
}

TEST_CASE("rational parsing and formatting") {
  REQUIRE(parseRational("2/4") == Rational(1, 2));
  REQUIRE(parseRational("-6/4") == Rational(-3, 2));
  REQUIRE(parseRational("3/-6") == Rational(-1, 2));
  REQUIRE(formatRational(Rational(-3, 2)) == "-3/2");
  REQUIRE(formatRational(Rational(4, 2)) == "2");
  REQUIRE(denominator(parseRational("3/-6")) == 2);
  REQUIRE_THROWS_AS(parseRational("1/0"), StructureError);
  REQUIRE_THROWS_AS(parseRational("x"), StructureError);
  REQUIRE_THROWS_AS(parseRational("1.5"), StructureError);
}

TEST_CASE("quotient spaces") {
  SECTION("line quotient of the plane") {
    const QuotientSpace q(2, Subspace::fromRows(makeMat(1, 2, {1, -1})));
    REQUIRE(q.dim() == 1);
    REQUIRE(sameMatrix(MatQ(q.projection() * q.section()), MatQ::Identity(1, 1)));
  }
  SECTION("trivial relations give the identity") {
    const QuotientSpace q(3, Subspace::zero(3));
    REQUIRE(q.dim() == 3);
    REQUIRE(sameMatrix(q.projection(), MatQ::Identity(3, 3)));
  }
  SECTION("full relations give the zero space") {
    const QuotientSpace q(2, Subspace::full(2));
    REQUIRE(q.dim() == 0);
  }
  SECTION("projection kills exactly the relations") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
      MatQ rel(2, 5);
      for (Index i = 0; i < 2; ++i)
        for (Index j = 0; j < 5; ++j) rel(i, j) = randomRational(rng, 3);
      const Subspace relations = Subspace::fromRows(rel);
      const QuotientSpace q(5, relations);
      REQUIRE(q.dim() == 5 - relations.dim());
      REQUIRE(sameMatrix(MatQ(q.projection() * q.section()),
                         MatQ::Identity(q.dim(), q.dim())));
      REQUIRE(kernel(q.projection()) == relations);
    }
  }
}
