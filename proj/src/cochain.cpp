#include "zetaverify/cochain.hpp"

#include <algorithm>
#include <cassert>

namespace zetaverify {

bool WedgeCochain::is_zero() const {
  for (const auto& [c, v] : terms_)
    if (!zetaverify::is_zero(v)) return false;
  return true;
}

void WedgeCochain::add(Combo combo, const ExactVector& coeff) {
  assert(static_cast<int>(combo.size()) == degree_);
  assert(coeff.size() == coeff_dim_);
  // Sort with sign; duplicate indices annihilate.
  int sign = 1;
  for (size_t i = 1; i < combo.size(); ++i)
    for (size_t j = i; j > 0 && combo[j - 1] > combo[j]; --j) {
      std::swap(combo[j - 1], combo[j]);
      sign = -sign;
    }
  for (size_t i = 1; i < combo.size(); ++i)
    if (combo[i] == combo[i - 1]) return;
  ExactVector add_v = sign == 1 ? coeff : zetaverify::scaled(coeff, GaussianRational(-1));
  auto it = terms_.find(combo);
  if (it == terms_.end()) {
    if (!zetaverify::is_zero(add_v)) terms_.emplace(std::move(combo), std::move(add_v));
  } else {
    it->second = it->second + add_v;
    if (zetaverify::is_zero(it->second)) terms_.erase(it);
  }
}

WedgeCochain WedgeCochain::scaled(const GaussianRational& c) const {
  WedgeCochain r(space_dim_, degree_, coeff_dim_);
  if (c.is_zero()) return r;
  for (const auto& [combo, v] : terms_) r.terms_[combo] = zetaverify::scaled(v, c);
  return r;
}

WedgeCochain operator+(const WedgeCochain& a, const WedgeCochain& b) {
  assert(a.space_dim_ == b.space_dim_ && a.degree_ == b.degree_ && a.coeff_dim_ == b.coeff_dim_);
  WedgeCochain r = a;
  for (const auto& [combo, v] : b.terms_) {
    auto it = r.terms_.find(combo);
    if (it == r.terms_.end()) {
      r.terms_[combo] = v;
    } else {
      it->second = it->second + v;
      if (is_zero(it->second)) r.terms_.erase(it);
    }
  }
  return r;
}

WedgeCochain operator-(const WedgeCochain& a, const WedgeCochain& b) {
  return a + b.scaled(GaussianRational(-1));
}

bool operator==(const WedgeCochain& a, const WedgeCochain& b) {
  return a.space_dim_ == b.space_dim_ && a.degree_ == b.degree_ &&
         a.coeff_dim_ == b.coeff_dim_ && a.terms_ == b.terms_;
}

WedgeCochain WedgeCochain::acted(const ExactMatrix* dual_action,
                                 const ExactMatrix* module_action) const {
  WedgeCochain r(space_dim_, degree_, coeff_dim_);
  for (const auto& [combo, v] : terms_) {
    if (dual_action) {
      // Act on one wedge slot at a time: f_j -> sum_i D[i][j] f_i.
      for (int slot = 0; slot < degree_; ++slot) {
        for (int i = 0; i < space_dim_; ++i) {
          const GaussianRational& c = dual_action->at(i, combo[slot]);
          if (c.is_zero()) continue;
          Combo nc = combo;
          nc[slot] = i;
          r.add(std::move(nc), zetaverify::scaled(v, c));
        }
      }
    }
    if (module_action) r.add(combo, module_action->apply(v));
  }
  return r;
}

WedgeCochain WedgeCochain::group_acted(const ExactMatrix& dual_action,
                                       const ExactMatrix* module_action) const {
  WedgeCochain r(space_dim_, degree_, coeff_dim_);
  for (const auto& [combo, v] : terms_) {
    ExactVector mv = module_action ? module_action->apply(v) : v;
    // Expand (D f_{c0}) ^ ... ^ (D f_{c(q-1)}) slot by slot.
    std::vector<std::pair<Combo, GaussianRational>> partial = {{Combo{}, GaussianRational(1)}};
    for (int slot = 0; slot < degree_; ++slot) {
      std::vector<std::pair<Combo, GaussianRational>> next;
      for (const auto& [pc, coef] : partial) {
        for (int i = 0; i < space_dim_; ++i) {
          const GaussianRational& c = dual_action.at(i, combo[slot]);
          if (c.is_zero()) continue;
          Combo nc = pc;
          nc.push_back(i);
          next.emplace_back(std::move(nc), coef * c);
        }
      }
      partial = std::move(next);
    }
    for (auto& [pc, coef] : partial) r.add(std::move(pc), zetaverify::scaled(mv, coef));
  }
  return r;
}

ExactMatrix dual_lie_action_gl3(const ExactMatrix& e) {
  ExactMatrix m = gl3_quotient().ad_p(e).transpose();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
  return m;
}

ExactMatrix dual_group_action_gl3(const ExactMatrix& k) {
  return gl3_quotient().group_ad_p(inverse(k)).transpose();
}

ExactMatrix dual_lie_action_gl2(const ExactMatrix& e) {
  ExactMatrix m = gl2_quotient().ad_p(e).transpose();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
  return m;
}

ExactMatrix dual_group_action_gl2(const ExactMatrix& k) {
  return gl2_quotient().group_ad_p(inverse(k)).transpose();
}

namespace {

// Rows of the functionals in the (g2/so2)* reference coordinates: for
// f = X_i* the row is [f(pi(iota(I2))), f(pi(iota(e11))), f(pi(iota(e12)))].
const ExactMatrix& iota_star_rows() {
  static const ExactMatrix rows = [] {
    using namespace lie;
    const ExactMatrix I2 = ExactMatrix::identity(2);
    const ExactMatrix e11 = mat2({gi(1), gi(0), gi(0), gi(0)});
    const ExactMatrix e12 = mat2({gi(0), gi(1), gi(0), gi(0)});
    std::array<const ExactMatrix*, 3> ref = {&I2, &e11, &e12};
    ExactMatrix m(5, 3);
    for (int c = 0; c < 3; ++c) {
      ExactVector p = gl3_quotient().p_project(embed_gl2_lie(*ref[c]));
      for (int i = 0; i < 5; ++i) m.at(i, c) = p[i];
    }
    return m;
  }();
  return rows;
}

// pr(Y_+-*) rows in the same reference coordinates.
const ExactMatrix& pr_y_rows() {
  static const ExactMatrix rows = [] {
    using namespace lie;
    const ExactMatrix I2 = ExactMatrix::identity(2);
    const ExactMatrix e11 = mat2({gi(1), gi(0), gi(0), gi(0)});
    const ExactMatrix e12 = mat2({gi(0), gi(1), gi(0), gi(0)});
    std::array<const ExactMatrix*, 3> ref = {&I2, &e11, &e12};
    ExactMatrix m(2, 3);
    for (int c = 0; c < 3; ++c) {
      ExactVector p = gl2_quotient().p_project(*ref[c]);
      for (int i = 0; i < 2; ++i) m.at(i, c) = p[i];
    }
    return m;
  }();
  return rows;
}

// Rows of X_i* in the (g3/k3)-side 5-dim reference coordinates: values on
// pi({e11, e11+e22, e12, e13, e23}).
const ExactMatrix& x_star_rows5() {
  static const ExactMatrix rows = [] {
    using namespace lie;
    const ExactMatrix e11 = mat3({gi(1), gi(0), gi(0), gi(0), gi(0), gi(0), gi(0), gi(0), gi(0)});
    const ExactMatrix e11e22 =
        mat3({gi(1), gi(0), gi(0), gi(0), gi(1), gi(0), gi(0), gi(0), gi(0)});
    const ExactMatrix e12 = mat3({gi(0), gi(1), gi(0), gi(0), gi(0), gi(0), gi(0), gi(0), gi(0)});
    const ExactMatrix e13 = mat3({gi(0), gi(0), gi(1), gi(0), gi(0), gi(0), gi(0), gi(0), gi(0)});
    const ExactMatrix e23 = mat3({gi(0), gi(0), gi(0), gi(0), gi(0), gi(1), gi(0), gi(0), gi(0)});
    std::array<const ExactMatrix*, 5> ref = {&e11, &e11e22, &e12, &e13, &e23};
    ExactMatrix m(5, 5);
    for (int c = 0; c < 5; ++c) {
      ExactVector p = gl3_quotient().p_project(*ref[c]);
      for (int i = 0; i < 5; ++i) m.at(i, c) = p[i];
    }
    return m;
  }();
  return rows;
}

GaussianRational det_rows(const std::vector<const ExactVector*>& rows) {
  const int n = static_cast<int>(rows.size());
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = (*rows[i])[j];
  if (n == 3) return determinant(m);
  // n == 5: Laplace along the first row.
  GaussianRational d(0);
  for (int j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    ExactMatrix sub(n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        sub.at(i - 1, cc++) = m.at(i, c);
      }
    }
    GaussianRational minor = [&] {
      // 4x4 via two Laplace steps through determinant(3x3).
      GaussianRational s(0);
      for (int k = 0; k < 4; ++k) {
        if (sub.at(0, k).is_zero()) continue;
        ExactMatrix s3(3, 3);
        for (int i = 1; i < 4; ++i) {
          int cc = 0;
          for (int c = 0; c < 4; ++c) {
            if (c == k) continue;
            s3.at(i - 1, cc++) = sub.at(i, c);
          }
        }
        GaussianRational t = sub.at(0, k) * determinant(s3);
        s += (k % 2 == 0) ? t : -t;
      }
      return s;
    }();
    GaussianRational t = m.at(0, j) * minor;
    d += (j % 2 == 0) ? t : -t;
  }
  return d;
}

}  // namespace

GaussianRational pairing_s(const WedgeCochain& gl3_deg2, const WedgeCochain& gl2_deg1) {
  if (gl3_deg2.degree() != 2 || gl3_deg2.space_dim() != 5 || gl2_deg1.degree() != 1 ||
      gl2_deg1.space_dim() != 2)
    throw std::invalid_argument("pairing_s: degree mismatch");
  if (gl3_deg2.coeff_dim() != 1 || gl2_deg1.coeff_dim() != 1)
    throw std::invalid_argument("pairing_s: scalar cochains expected");
  const ExactMatrix& xr = iota_star_rows();
  const ExactMatrix& yr = pr_y_rows();
  GaussianRational total(0);
  for (const auto& [cw, vw] : gl3_deg2.terms()) {
    ExactVector r1(3), r2(3), r3(3);
    for (int j = 0; j < 3; ++j) {
      r1[j] = xr.at(cw[0], j);
      r2[j] = xr.at(cw[1], j);
    }
    for (const auto& [cz, vz] : gl2_deg1.terms()) {
      for (int j = 0; j < 3; ++j) r3[j] = yr.at(cz[0], j);
      total += vw[0] * vz[0] * det_rows({&r1, &r2, &r3});
    }
  }
  return total * dual_scale();
}

GaussianRational pairing_s5(const WedgeCochain& deg3, const WedgeCochain& deg2) {
  if (deg3.degree() != 3 || deg2.degree() != 2 || deg3.space_dim() != 5 || deg2.space_dim() != 5)
    throw std::invalid_argument("pairing_s5: degree mismatch");
  if (deg3.coeff_dim() != 1 || deg2.coeff_dim() != 1)
    throw std::invalid_argument("pairing_s5: scalar cochains expected");
  const ExactMatrix& xr = x_star_rows5();
  GaussianRational total(0);
  for (const auto& [ca, va] : deg3.terms()) {
    for (const auto& [cb, vb] : deg2.terms()) {
      std::vector<ExactVector> rows(5, ExactVector(5));
      std::vector<int> idx = {ca[0], ca[1], ca[2], cb[0], cb[1]};
      for (int r = 0; r < 5; ++r)
        for (int j = 0; j < 5; ++j) rows[r][j] = xr.at(idx[r], j);
      std::vector<const ExactVector*> rp = {&rows[0], &rows[1], &rows[2], &rows[3], &rows[4]};
      total += va[0] * vb[0] * det_rows(rp);
    }
  }
  return total * dual_scale();
}

GaussianRational y_wedge_coefficient() {
  const ExactMatrix& yr = pr_y_rows();
  // Y_+* and Y_-* kill I2, so in the basis dual to {e11bar, e12bar} their
  // wedge against e11*^e12* is the 2x2 determinant of the value rows.
  ExactMatrix m(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.at(i, j) = yr.at(i, j + 1);
  return determinant(m) * dual_scale();
}

}  // namespace zetaverify
