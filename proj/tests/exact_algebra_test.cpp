#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "zetaverify/linalg.hpp"
#include "zetaverify/polynomial.hpp"

using namespace zetaverify;

namespace {

// Hand-rolled generator for small exact scalars / matrices.
struct Gen {
  std::mt19937_64 rng{0xfeedULL};
  GaussianRational scalar() {
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
    return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
  }
  ExactMatrix matrix(int r, int c) {
    ExactMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = scalar();
    return m;
  }
};

const std::vector<std::string> kXY = {"x", "y"};

MultiPoly var(const std::string& n) { return MultiPoly::variable(kXY, n); }

}  // namespace

TEST_CASE("gaussian rational arithmetic is exact and canonical") {
  GaussianRational a(Rational(1, 3), Rational(-2, 6));
  CHECK(a.im == Rational(-1, 3));
  GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
  CHECK(GaussianRational::i_pow(-3) == i);
  GaussianRational b(Rational(2, 5), Rational(1, 5));
  CHECK(a / b * b == a);
  CHECK((a - a).is_zero());
  // (2/4, 0) and (1/2, 0) must compare equal.
  CHECK(GaussianRational(Rational(2, 4)) == GaussianRational(Rational(1, 2)));
}

TEST_CASE("polynomial substitution examples") {
  MultiPoly x = var("x"), y = var("y");
  std::map<std::string, MultiPoly> id{{"x", x}, {"y", y}};

  // p = x, x -> x + i y
  std::map<std::string, MultiPoly> shear{{"x", x + y.scaled(GaussianRational::i())}, {"y", y}};
  CHECK(poly_substitute(x, shear) == x + y.scaled(GaussianRational::i()));

  // identity map fixes x^2 + y^2
  MultiPoly p = x * x + y * y;
  CHECK(poly_substitute(p, id) == p);

  // diagonal scaling: xy with x -> 2x, y -> 3y gives 6xy
  std::map<std::string, MultiPoly> diag{{"x", x.scaled(GaussianRational(2))},
                                        {"y", y.scaled(GaussianRational(3))}};
  CHECK(poly_substitute(x * y, diag) == (x * y).scaled(GaussianRational(6)));

  CHECK_THROWS_WITH_AS(poly_substitute(x, {{"y", y}}), doctest::Contains("unbound variable"),
                       std::invalid_argument);
}

TEST_CASE("polynomial ring laws on random inputs") {
  Gen gen;
  MultiPoly x = var("x"), y = var("y");
  auto rand_poly = [&] {
    MultiPoly p(kXY);
    for (int t = 0; t < 4; ++t) {
      std::uniform_int_distribution<int> d(0, 3);
      p.add_term({d(gen.rng), d(gen.rng)}, gen.scalar());
    }
    return p;
  };
  for (int rep = 0; rep < 25; ++rep) {
    MultiPoly a = rand_poly(), b = rand_poly(), c = rand_poly();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
  }
}

TEST_CASE("kernel examples") {
  SUBCASE("zero 2x2 has kernel dimension 2") {
    CHECK(kernel(ExactMatrix(2, 2)).size() == 2);
  }
  SUBCASE("identity 3x3 has empty kernel") {
    CHECK(kernel(ExactMatrix::identity(3)).empty());
  }
  SUBCASE("[[1,1]] kernel is the line through (1,-1)") {
    ExactMatrix a(1, 2);
    a.at(0, 0) = GaussianRational(1);
    a.at(0, 1) = GaussianRational(1);
    auto k = kernel(a);
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] * GaussianRational(-1) == k[0][1]);
  }
}

TEST_CASE("kernel vectors satisfy A v = 0 exactly on random matrices") {
  Gen gen;
  for (int rep = 0; rep < 20; ++rep) {
    int r = 2 + static_cast<int>(gen.rng() % 4), c = 2 + static_cast<int>(gen.rng() % 4);
    ExactMatrix a = gen.matrix(r, c);
    auto k = kernel(a);
    CHECK(static_cast<int>(k.size()) == c - rank(a));
    for (const auto& v : k) CHECK(is_zero(a.apply(v)));
  }
}

TEST_CASE("solve returns exact solutions verified by re-multiplication") {
  Gen gen;
  for (int rep = 0; rep < 20; ++rep) {
    int n = 2 + static_cast<int>(gen.rng() % 3);
    ExactMatrix a = gen.matrix(n, n);
    ExactVector x0(n);
    for (int i = 0; i < n; ++i) x0[i] = gen.scalar();
    ExactVector b = a.apply(x0);
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(a.apply(*x) == b);
  }
  // Inconsistent system.
  ExactMatrix a(2, 1);
  a.at(0, 0) = GaussianRational(1);
  a.at(1, 0) = GaussianRational(1);
  CHECK_FALSE(solve(a, {GaussianRational(0), GaussianRational(1)}).has_value());
}

TEST_CASE("coordinate solver rejects vectors outside the span") {
  ExactMatrix b(3, 1);
  b.at(0, 0) = GaussianRational(1);
  CoordinateSolver cs(b);
  CHECK(cs.coordinates({GaussianRational(5), GaussianRational(0), GaussianRational(0)})[0] ==
        GaussianRational(5));
  CHECK_THROWS_AS(cs.coordinates({GaussianRational(0), GaussianRational(1), GaussianRational(0)}),
                  std::invalid_argument);
}

TEST_CASE("big factorials stay exact") {
  // (2l+1)! with l = 9 overflows 64-bit; the bigint path must not.
  BigInt f = factorial(19);
  CHECK(f == BigInt("121645100408832000"));
  CHECK(factorial(21) == BigInt("51090942171709440000"));
  CHECK(binomial(21, 10) == BigInt(352716));
}
