#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "zetaverify/cohomology.hpp"

using namespace zetaverify;
using lie::gi;

TEST_CASE("weights: duality, purity, Weyl dimension") {
  Weight3 mu(2, 0, -2);
  CHECK(mu.dual() == Weight3(2, 0, -2));
  CHECK(mu.is_pure());
  CHECK(mu.weyl_dim() == 27);
  CHECK(Weight3(1, 0, -1).weyl_dim() == 8);
  CHECK(Weight3(0, 0, 0).weyl_dim() == 1);
  CHECK(Weight2(3, 1).dual() == Weight2(-1, -3));
  CHECK(gl3_weight(5, 0) == Weight3(1, 0, -1));
  CHECK(gl3_weight(5, 2) == Weight3(2, 1, 0));
  CHECK(gl2_weight(3, 1) == Weight2(1, 0));
  CHECK_THROWS(gl3_weight(4, 0));
}

TEST_CASE("GL3 module dimension agrees with the Weyl formula") {
  for (auto [l, w] : std::vector<std::pair<long, long>>{{3, 0}, {5, 0}, {5, 2}, {7, 0}, {9, 0}}) {
    Weight3 mu = gl3_weight(l, w);
    CHECK(cached_gl3_module(mu).dim() == mu.weyl_dim());
    CHECK(cached_gl3_module(mu.dual()).dim() == mu.weyl_dim());
  }
}

TEST_CASE("group actions are multiplicative on random exact elements") {
  std::mt19937_64 rng(7);
  auto rnd = [&] { return GaussianRational(Rational(static_cast<long>(rng() % 5) - 2),
                                           Rational(static_cast<long>(rng() % 3) - 1)); };
  const GL3Module& m3 = cached_gl3_module(Weight3(1, 0, -1));
  const GL2Module& m2 = cached_gl2_module(Weight2(2, 0));
  for (int rep = 0; rep < 4; ++rep) {
    ExactMatrix g(3, 3), h(3, 3);
    do {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          g.at(i, j) = rnd();
          h.at(i, j) = rnd();
        }
    } while (determinant(g).is_zero() || determinant(h).is_zero());
    CHECK(m3.group_action(g * h) == m3.group_action(g) * m3.group_action(h));

    ExactMatrix g2(2, 2), h2(2, 2);
    do {
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          g2.at(i, j) = rnd();
          h2.at(i, j) = rnd();
        }
    } while (determinant(g2).is_zero() || determinant(h2).is_zero());
    CHECK(m2.group_action(g2 * h2) == m2.group_action(g2) * m2.group_action(h2));
  }
}

TEST_CASE("SO3 ladder relations hold exactly for all ell <= 9") {
  for (long ell = 0; ell <= 9; ++ell) {
    const SO3Module& mod = cached_so3_module(ell);
    ExactMatrix e12 = mod.lie_action(lie::E12());
    ExactMatrix ep = mod.lie_action(lie::E_plus());
    ExactMatrix em = mod.lie_action(lie::E_minus());
    for (long i = -ell; i <= ell; ++i) {
      ExactVector v(mod.dim());
      v[i + ell] = GaussianRational(1);
      CHECK(e12.apply(v) == scaled(v, GaussianRational(Rational(0), Rational(i))));
      ExactVector up = ep.apply(v), dn = em.apply(v);
      ExactVector want_up(mod.dim()), want_dn(mod.dim());
      if (i + 1 <= ell) want_up[i + 1 + ell] = GaussianRational(ell - i);
      if (i - 1 >= -ell) want_dn[i - 1 + ell] = GaussianRational(-ell - i);
      CHECK(up == want_up);
      CHECK(dn == want_dn);
    }
  }
}

TEST_CASE("E+ annihilates the top basis vector") {
  const SO3Module& mod = cached_so3_module(5);
  ExactVector top(mod.dim());
  top[10] = GaussianRational(1);
  CHECK(is_zero(mod.lie_action(lie::E_plus()).apply(top)));
}

TEST_CASE("quotient adjoint relations match the stated ladder") {
  // ad(E12) X_i = sqrt(-1) i X_i and ad(E+-) X_i = (+-2 - i) X_(i+-1).
  ExactMatrix ad12 = gl3_quotient().ad_p(lie::E12());
  for (int i = -2; i <= 2; ++i) {
    CHECK(ad12.at(lie::x_index(i), lie::x_index(i)) ==
          GaussianRational(Rational(0), Rational(i)));
  }
  ExactMatrix adp = gl3_quotient().ad_p(lie::E_plus());
  CHECK(adp.at(lie::x_index(2), lie::x_index(1)) == GaussianRational(1));
  CHECK(adp.at(lie::x_index(-1), lie::x_index(-2)) == GaussianRational(4));
  // ad(E12) X_2 = 2 sqrt(-1) X_2 (the spec example).
  CHECK(ad12.at(lie::x_index(2), lie::x_index(2)) == GaussianRational(Rational(0), Rational(2)));
}

TEST_CASE("invariant pairing: uniqueness, normalization, infinitesimal invariance") {
  SUBCASE("GL2 trivial weight") {
    Gl2Pairing p(Weight2(0, 0));
    CHECK(p.form().at(0, 0) == GaussianRational(1));
  }
  SUBCASE("GL2 (1,0): construction asserts kernel dimension 1") {
    CHECK_NOTHROW(Gl2Pairing(Weight2(1, 0)));
  }
  SUBCASE("GL3 (1,0,-1): dim 8 and the pairing exists") {
    const Gl3Pairing& p = cached_gl3_pairing(Weight3(1, 0, -1));
    CHECK(p.form().rows() == 8);
    CHECK(p.form().cols() == 8);
  }
  SUBCASE("invariance <Xp, q> + <p, Xq> = 0 for every elementary matrix") {
    Weight3 mu(2, 0, -2);
    const Gl3Pairing& p = cached_gl3_pairing(mu);
    const GL3Module& mod = cached_gl3_module(mu);
    const GL3Module& dual = cached_gl3_module(mu.dual());
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        ExactMatrix e(3, 3);
        e.at(a, b) = GaussianRational(1);
        ExactMatrix lhs = dual.lie_action(e).transpose() * p.form() +
                          p.form() * mod.lie_action(e);
        CHECK(lhs.is_zero());
      }
  }
}

TEST_CASE("SO3 canonical form and monomial expansion") {
  const SO3Module& mod = cached_so3_module(3);
  // x3^2 reduces away.
  const auto& vars = mod.basis_poly(0).vars();
  MultiPoly x3 = MultiPoly::variable(vars, "x3");
  MultiPoly r = SO3Module::reduce(x3.pow(3));
  for (const auto& [e, c] : r.terms()) CHECK(e[2] <= 1);
  // v_(3;2) = (x1 + i x2)^2 x3: expansion has 3 monomials.
  auto exp2 = mod.monomial_expansion(2);
  CHECK(exp2.size() == 3);
  GaussianRational sum(0);
  for (auto& [j, c] : exp2) CHECK(j[0] + j[1] + j[2] == 3);
}

TEST_CASE("dual wedge actions: scalars transported correctly") {
  // E12 acts on X_i^* with eigenvalue -sqrt(-1) i (dual of the ladder).
  ExactMatrix d = dual_lie_action_gl3(lie::E12());
  for (int i = -2; i <= 2; ++i)
    CHECK(d.at(lie::x_index(i), lie::x_index(i)) ==
          GaussianRational(Rational(0), Rational(-i)));
}

TEST_CASE("pairing_s: anchors, degenerate cases, equivariance") {
  auto mono2 = [](int i, int j) {
    WedgeCochain w(5, 2, 1);
    w.add({lie::x_index(i), lie::x_index(j)}, {GaussianRational(1)});
    return w;
  };
  auto y = [](int idx) {
    WedgeCochain w(2, 1, 1);
    w.add({idx}, {GaussianRational(1)});
    return w;
  };
  CHECK(pairing_s(mono2(0, -2), y(0)) == GaussianRational(8));
  CHECK(pairing_s(mono2(0, 2), y(1)) == GaussianRational(-8));
  CHECK(pairing_s(mono2(1, 2), y(0)) == GaussianRational(0));
  // Antisymmetry of the wedge input.
  WedgeCochain swapped(5, 2, 1);
  swapped.add({lie::x_index(-2), lie::x_index(0)}, {GaussianRational(1)});
  CHECK(pairing_s(swapped, y(0)) == GaussianRational(-8));

  // SO(2)-equivariance under an exact rotation (rotation by pi/2 embeds as
  // an exact signed-permutation element of SO(3)).
  ExactMatrix k2 = mat2({gi(0), gi(-1), gi(1), gi(0)});
  ExactMatrix k3 = lie::embed_gl2(k2);
  ExactMatrix d3 = dual_group_action_gl3(k3);
  ExactMatrix d2 = dual_group_action_gl2(k2);
  for (auto [i, j] : std::vector<std::pair<int, int>>{{0, -2}, {2, 1}, {-1, 1}, {0, 2}}) {
    for (int yi : {0, 1}) {
      WedgeCochain w = mono2(i, j);
      GaussianRational before = pairing_s(w, y(yi));
      GaussianRational after = pairing_s(w.group_acted(d3), y(yi).group_acted(d2));
      CHECK(before == after);
    }
  }
}

TEST_CASE("pairing_s5: anchor, antisymmetry, repeated factor") {
  auto mono3 = [](int i, int j, int k) {
    WedgeCochain w(5, 3, 1);
    w.add({lie::x_index(i), lie::x_index(j), lie::x_index(k)}, {GaussianRational(1)});
    return w;
  };
  auto mono2 = [](int i, int j) {
    WedgeCochain w(5, 2, 1);
    w.add({lie::x_index(i), lie::x_index(j)}, {GaussianRational(1)});
    return w;
  };
  CHECK(pairing_s5(mono3(0, -1, -2), mono2(1, 2)) ==
        GaussianRational(Rational(0), Rational(-4)));
  // Swapping two wedge factors flips the sign.
  CHECK(pairing_s5(mono3(-1, 0, -2), mono2(1, 2)) ==
        GaussianRational(Rational(0), Rational(4)));
  // Repeated factor in the total wedge vanishes.
  CHECK(pairing_s5(mono3(2, 1, 0), mono2(2, 1)) == GaussianRational(0));

  // SO(3)-equivariance under an exact rotation (3-cycle permutation).
  ExactMatrix k = mat3({gi(0), gi(1), gi(0), gi(0), gi(0), gi(1), gi(1), gi(0), gi(0)});
  ExactMatrix d = dual_group_action_gl3(k);
  for (auto [t, b] :
       std::vector<std::pair<std::array<int, 3>, std::array<int, 2>>>{{{0, -1, -2}, {1, 2}},
                                                                      {{2, 0, -2}, {1, -1}}}) {
    WedgeCochain w3 = mono3(t[0], t[1], t[2]);
    WedgeCochain w2 = mono2(b[0], b[1]);
    CHECK(pairing_s5(w3, w2) == pairing_s5(w3.group_acted(d), w2.group_acted(d)));
  }
}

TEST_CASE("module mismatch raises") {
  const SO3Module& mod = cached_so3_module(3);
  // A degree-5 polynomial does not live in V_3.
  const auto& vars = mod.basis_poly(0).vars();
  MultiPoly p = MultiPoly::variable(vars, "x1").pow(5);
  CHECK_THROWS_AS(mod.coordinates(p), std::invalid_argument);
}
