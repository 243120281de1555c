#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <filesystem>

#include "zetaverify/cohomology.hpp"
#include "zetaverify/grid.hpp"

using namespace zetaverify;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("GL2 Whittaker closed form") {
  CHECK(whittaker_gl2(3, 0, +1, 1.0) == doctest::Approx(std::exp(-2.0 * kPi)).epsilon(1e-14));
  CHECK(whittaker_gl2(3, 0, +1, -1.0) == 0.0);
  CHECK(whittaker_gl2(2, 0, -1, -2.0) ==
        doctest::Approx(2.0 * std::exp(-4.0 * kPi)).epsilon(1e-14));
  // The |a|^(w/2) central twist at diag(a, 1).
  CHECK(whittaker_gl2(3, 1, +1, 2.0) ==
        doctest::Approx(4.0 * std::exp(-4.0 * kPi)).epsilon(1e-14));
  CHECK_THROWS_AS(whittaker_gl2(3, 0, +1, 0.0), std::invalid_argument);
}

TEST_CASE("whittaker spec validation") {
  WhittakerSpec s;
  s.group = WhittakerSpec::GL3;
  s.ell = 5;
  s.j1 = 3;
  s.j2 = 0;
  s.j3 = 2;
  CHECK_NOTHROW(s.validate());
  s.j3 = 1;
  CHECK_THROWS(s.validate());
  s.j3 = 2;
  s.ell = 4;
  CHECK_THROWS(s.validate());
  WhittakerSpec g2;
  g2.group = WhittakerSpec::GL2;
  g2.kappa = 3;
  g2.w = 0;  // parity violation
  CHECK_THROWS(g2.validate());
}

TEST_CASE("GL3 golden value against the high-precision oracle") {
  // W_(5,0;(3,0,2))(1,1) from a 30-digit independent quadrature, frozen.
  Gl3TorusEvaluator ev(5, 0, 3, 0, 2);
  Complex w = ev.evaluate(1.0, 1.0);
  CHECK(std::abs(w.real()) < 1e-18);
  CHECK(w.imag() == doctest::Approx(7.31867732242425670008581254413e-8).epsilon(1e-11));
  // Far-field value with contour shifting, frozen from the same oracle.
  Complex far = ev.evaluate(20.0, 20.0);
  CHECK(far.imag() == doctest::Approx(2.44478537447411455001297550727e-147).epsilon(1e-9));
}

TEST_CASE("default abscissa is legal for every index up to ell = 9") {
  for (long ell : {3L, 5L, 7L, 9L}) {
    for (int j1 = 0; j1 <= ell; ++j1) {
      // Rightmost pole of the s1 factors is at max(-j1, -(ell-1)/2) <= 0 < 1.
      CHECK_NOTHROW(Gl3TorusEvaluator(ell, 0, j1, static_cast<int>(ell) - j1, 0));
    }
  }
  // A contour through a pole chain is rejected.
  ContourSpec bad;
  bad.abscissa = -0.1;
  CHECK_THROWS_AS(Gl3TorusEvaluator(5, 0, 0, 3, 2, bad, ContourSpec{}),
                  std::invalid_argument);
}

TEST_CASE("quotient relation: the three monomial shifts sum to zero") {
  // x1^2 + x2^2 + x3^2 = 0 in V_l forces W_(j+2e1) + W_(j+2e2) + W_(j+2e3) = 0.
  for (auto [a1, a2] : std::vector<std::pair<double, double>>{{0.8, 1.3}, {0.3, 0.7}, {2.0, 1.1}}) {
    Complex total = Gl3TorusEvaluator(5, 0, 3, 0, 2).evaluate(a1, a2) +
                    Gl3TorusEvaluator(5, 0, 1, 2, 2).evaluate(a1, a2) +
                    Gl3TorusEvaluator(5, 0, 1, 0, 4).evaluate(a1, a2);
    Complex scale = Gl3TorusEvaluator(5, 0, 3, 0, 2).evaluate(a1, a2);
    CHECK(std::abs(total) < 1e-12 * std::abs(scale));
  }
}

TEST_CASE("a3 enters only through the central character") {
  Gl3TorusEvaluator w0(5, 0, 3, 0, 2);
  CHECK(rel(w0.evaluate(0.9, 1.4, 2.5), w0.evaluate(0.9, 1.4, 1.0)) < 1e-14);
  Gl3TorusEvaluator w2(5, 2, 3, 0, 2);
  Complex lhs = w2.evaluate(0.9, 1.4, 2.0);
  Complex rhs = std::pow(2.0, 3.0) * w2.evaluate(0.9, 1.4, 1.0);
  CHECK(rel(lhs, rhs) < 1e-13);
}

TEST_CASE("index evaluation equals the monomial expansion sum") {
  // Two code paths: the minimal-K-type index i and the explicit monomial sum.
  const SO3Module& mod = cached_so3_module(5);
  for (long i : {3L, -3L, 0L}) {
    Complex via_index = whittaker_gl3_index(5, 0, i, 0.7, 1.2);
    Complex direct(0, 0);
    for (const auto& [j, c] : mod.monomial_expansion(i))
      direct += c.to_complex() * Gl3TorusEvaluator(5, 0, j[0], j[1], j[2]).evaluate(0.7, 1.2);
    CHECK(rel(via_index, direct) < 1e-10);
  }
}

TEST_CASE("quadrature convergence and decay") {
  Gl3TorusEvaluator ev(5, 0, 3, 0, 2);
  EvalDiagnostics d;
  Complex w1 = ev.evaluate(1.0, 1.0, 1.0, &d);
  // |value(N) - value(2N)| <= 1e-9 |value| (the diagnostic compares N with N/2).
  CHECK(d.refine < 1e-9);
  CHECK(d.tail < 1e-14);
  // Superpolynomial decay along the diagonal ray.
  Complex w8 = ev.evaluate(8.0, 8.0);
  CHECK(std::abs(w8) < 1e-6 * std::abs(w1));
  // And along single-axis rays.
  CHECK(std::abs(ev.evaluate(8.0, 1.0)) < 1e-6 * std::abs(w1));
  CHECK(std::abs(ev.evaluate(1.0, 8.0)) < 1e-6 * std::abs(w1));
}

TEST_CASE("grid: build, probe, interpolate, round-trip") {
  GridGeometry geom;
  geom.n1 = geom.n2 = 96;
  geom.u1_min = geom.u2_min = -4.0;
  geom.u1_max = geom.u2_max = 3.0;
  WhittakerGrid grid = WhittakerGrid::build(5, 0, +1, 3, 0, 2, geom, ContourSpec{},
                                            ContourSpec{}, 7, 2);

  SUBCASE("probe self-test against direct evaluation") {
    GridProbeReport rep = grid.self_test(50, 1e-8);
    INFO("max relative probe deviation = ", rep.max_rel_dev);
    CHECK(rep.passed);
  }

  SUBCASE("interpolation error at a generic interior point") {
    Gl3TorusEvaluator ev(5, 0, 3, 0, 2);
    for (auto [a1, a2] : std::vector<std::pair<double, double>>{
             {0.473, 1.218}, {3.7, 0.11}, {14.2, 6.3}, {0.02, 0.05}}) {
      CHECK(rel(grid.interpolate(a1, a2), ev.evaluate(a1, a2)) < 1e-8);
    }
  }

  SUBCASE("outside the window is rejected") {
    CHECK_THROWS_AS(grid.interpolate(1e-3, 1.0), std::invalid_argument);
  }

  SUBCASE("file round-trip is bit-exact") {
    std::string path = "wgrid_roundtrip_test.zvw";
    grid.save(path);
    WhittakerGrid loaded = WhittakerGrid::load(path);
    bool identical = true;
    for (int i = 0; i < geom.n1 && identical; ++i)
      for (int j = 0; j < geom.n2; ++j) {
        Complex a = grid.value_at_node(i, j), b = loaded.value_at_node(i, j);
        if (std::memcmp(&a, &b, sizeof(a)) != 0) {
          identical = false;
          break;
        }
      }
    CHECK(identical);
    std::remove(path.c_str());
  }

  SUBCASE("empty geometry is rejected") {
    GridGeometry bad;
    bad.n1 = 1;
    CHECK_THROWS_AS(WhittakerGrid::build(5, 0, 1, 3, 0, 2, bad, ContourSpec{}, ContourSpec{}),
                    std::invalid_argument);
  }
}

TEST_CASE("grid cache: load_or_build hits the cache on the second call") {
  namespace fs = std::filesystem;
  std::string dir = "zv-test-cache";
  fs::remove_all(dir);
  GridGeometry geom;
  geom.n1 = geom.n2 = 24;
  geom.u1_min = geom.u2_min = -2.0;
  geom.u1_max = geom.u2_max = 1.0;
  bool cached = true;
  WhittakerGrid g1 = WhittakerGrid::load_or_build(dir, 5, 0, 1, 3, 0, 2, geom, ContourSpec{},
                                                  ContourSpec{}, 7, 2, false, &cached);
  CHECK_FALSE(cached);
  WhittakerGrid g2 = WhittakerGrid::load_or_build(dir, 5, 0, 1, 3, 0, 2, geom, ContourSpec{},
                                                  ContourSpec{}, 7, 2, false, &cached);
  CHECK(cached);
  bool identical = true;
  for (int i = 0; i < geom.n1 && identical; ++i)
    for (int j = 0; j < geom.n2; ++j)
      if (g1.value_at_node(i, j) != g2.value_at_node(i, j)) identical = false;
  CHECK(identical);
  fs::remove_all(dir);
}
