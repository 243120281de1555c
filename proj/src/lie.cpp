#include "zetaverify/lie.hpp"

namespace zetaverify {

namespace lie {

GaussianRational gi(long re, long im) { return {Rational(re), Rational(im)}; }

namespace {
GaussianRational half(long re, long im = 0) {
  return {Rational(re, 2), Rational(im, 2)};
}
GaussianRational third_i(long num) { return {Rational(0), Rational(num, 3)}; }
}  // namespace

const ExactMatrix& E_plus() {
  static const ExactMatrix m = mat3({gi(0), gi(0), gi(1),    //
                                     gi(0), gi(0), gi(0, 1),  //
                                     gi(-1), gi(0, -1), gi(0)});
  return m;
}

const ExactMatrix& E_minus() {
  static const ExactMatrix m = mat3({gi(0), gi(0), gi(1),     //
                                     gi(0), gi(0), gi(0, -1),  //
                                     gi(-1), gi(0, 1), gi(0)});
  return m;
}

const ExactMatrix& E12() {
  static const ExactMatrix m = mat3({gi(0), gi(1), gi(0),   //
                                     gi(-1), gi(0), gi(0),  //
                                     gi(0), gi(0), gi(0)});
  return m;
}

const ExactMatrix& X(int idx) {
  static const std::array<ExactMatrix, 5> xs = {
      // X_2 = i*diag(1,-1,0) + [[0,-1,0],[-1,0,0],[0,0,0]]
      mat3({gi(0, 1), gi(-1), gi(0), gi(-1), gi(0, -1), gi(0), gi(0), gi(0), gi(0)}),
      // X_1 = (i/2) S13 - (1/2) S23
      mat3({gi(0), gi(0), half(0, 1), gi(0), gi(0), half(-1), half(0, 1), half(-1), gi(0)}),
      // X_0 = (i/3) diag(-1,-1,2)
      mat3({third_i(-1), gi(0), gi(0), gi(0), third_i(-1), gi(0), gi(0), gi(0), third_i(2)}),
      // X_-1 = -(i/2) S13 - (1/2) S23
      mat3({gi(0), gi(0), half(0, -1), gi(0), gi(0), half(-1), half(0, -1), half(-1), gi(0)}),
      // X_-2 = i*diag(1,-1,0) - [[0,-1,0],[-1,0,0],[0,0,0]]
      mat3({gi(0, 1), gi(1), gi(0), gi(1), gi(0, -1), gi(0), gi(0), gi(0), gi(0)})};
  return xs[idx];
}

int x_index(int i) {
  if (i < -2 || i > 2) throw std::invalid_argument("x_index: i out of range");
  return 2 - i;
}

const ExactMatrix& Y(int idx) {
  static const std::array<ExactMatrix, 2> ys = {
      mat2({gi(0, 1), gi(-1), gi(-1), gi(0, -1)}),  // Y_+
      mat2({gi(0, 1), gi(1), gi(1), gi(0, -1)})};   // Y_-
  return ys[idx];
}

const ExactMatrix& h_plus() {
  static const ExactMatrix m = mat3({gi(1), gi(0), gi(1),         //
                                     gi(0, 1), gi(0), gi(0, -1),  //
                                     gi(0), gi(1), gi(0)});
  return m;
}

const ExactMatrix& h_minus() {
  static const ExactMatrix m = mat3({gi(-1), gi(0), gi(-1),       //
                                     gi(0, 1), gi(0), gi(0, -1),  //
                                     gi(0), gi(1), gi(0)});
  return m;
}

const ExactMatrix& h_ad() {
  static const ExactMatrix m = mat3({gi(1), gi(1), gi(0),         //
                                     gi(0, 1), gi(0, -1), gi(0),  //
                                     gi(0), gi(0), gi(1)});
  return m;
}

const ExactMatrix& j_flip() {
  static const ExactMatrix m = mat3({gi(0), gi(0), gi(-1),  //
                                     gi(0), gi(1), gi(0),   //
                                     gi(-1), gi(0), gi(0)});
  return m;
}

const ExactMatrix& h_gl2() {
  static const ExactMatrix m = mat2({gi(1), gi(1), gi(0, 1), gi(0, -1)});
  return m;
}

ExactMatrix embed_gl2(const ExactMatrix& g) {
  ExactMatrix m(3, 3);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.at(i, j) = g.at(i, j);
  m.at(2, 2) = GaussianRational(1);
  return m;
}

ExactMatrix embed_gl2_lie(const ExactMatrix& x) {
  ExactMatrix m(3, 3);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.at(i, j) = x.at(i, j);
  return m;
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b - b * a; }

}  // namespace lie

namespace {

ExactVector vec9(const ExactMatrix& m) {
  ExactVector v(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) v[3 * i + j] = m.at(i, j);
  return v;
}

ExactVector vec4(const ExactMatrix& m) {
  ExactVector v(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) v[2 * i + j] = m.at(i, j);
  return v;
}

}  // namespace

Gl3Quotient::Gl3Quotient() {
  using namespace lie;
  const ExactMatrix I3 = ExactMatrix::identity(3);
  const ExactMatrix A12 = E12();
  const ExactMatrix A13 = mat3({gi(0), gi(0), gi(1), gi(0), gi(0), gi(0), gi(-1), gi(0), gi(0)});
  const ExactMatrix A23 = mat3({gi(0), gi(0), gi(0), gi(0), gi(0), gi(1), gi(0), gi(-1), gi(0)});
  std::vector<const ExactMatrix*> basis = {&I3, &A12, &A13, &A23,
                                           &X(0), &X(1), &X(2), &X(3), &X(4)};
  ExactMatrix cols(9, 9);
  for (int k = 0; k < 9; ++k) {
    ExactVector v = vec9(*basis[k]);
    for (int i = 0; i < 9; ++i) cols.at(i, k) = v[i];
  }
  solver_ = std::make_unique<CoordinateSolver>(cols);
}

ExactVector Gl3Quotient::p_project(const ExactMatrix& m) const {
  ExactVector c = solver_->coordinates(vec9(m));
  return {c[4], c[5], c[6], c[7], c[8]};
}

ExactMatrix Gl3Quotient::ad_p(const ExactMatrix& e) const {
  ExactMatrix m(5, 5);
  for (int k = 0; k < 5; ++k) {
    ExactVector col = p_project(lie::commutator(e, lie::X(k)));
    for (int i = 0; i < 5; ++i) m.at(i, k) = col[i];
  }
  return m;
}

ExactMatrix Gl3Quotient::group_ad_p(const ExactMatrix& k) const {
  ExactMatrix kinv = inverse(k);
  ExactMatrix m(5, 5);
  for (int c = 0; c < 5; ++c) {
    ExactVector col = p_project(k * lie::X(c) * kinv);
    for (int i = 0; i < 5; ++i) m.at(i, c) = col[i];
  }
  return m;
}

Gl2Quotient::Gl2Quotient() {
  using namespace lie;
  const ExactMatrix I2 = ExactMatrix::identity(2);
  const ExactMatrix A12 = mat2({gi(0), gi(1), gi(-1), gi(0)});
  {
    std::vector<const ExactMatrix*> basis = {&I2, &A12, &Y(0), &Y(1)};
    ExactMatrix cols(4, 4);
    for (int k = 0; k < 4; ++k) {
      ExactVector v = vec4(*basis[k]);
      for (int i = 0; i < 4; ++i) cols.at(i, k) = v[i];
    }
    solver_ = std::make_unique<CoordinateSolver>(cols);
  }
  {
    const ExactMatrix e11 = mat2({gi(1), gi(0), gi(0), gi(0)});
    const ExactMatrix e12 = mat2({gi(0), gi(1), gi(0), gi(0)});
    std::vector<const ExactMatrix*> basis = {&A12, &I2, &e11, &e12};
    ExactMatrix cols(4, 4);
    for (int k = 0; k < 4; ++k) {
      ExactVector v = vec4(*basis[k]);
      for (int i = 0; i < 4; ++i) cols.at(i, k) = v[i];
    }
    so2_solver_ = std::make_unique<CoordinateSolver>(cols);
  }
}

ExactVector Gl2Quotient::p_project(const ExactMatrix& m) const {
  ExactVector c = solver_->coordinates(vec4(m));
  return {c[2], c[3]};
}

ExactMatrix Gl2Quotient::ad_p(const ExactMatrix& e) const {
  ExactMatrix m(2, 2);
  for (int k = 0; k < 2; ++k) {
    ExactVector col = p_project(lie::commutator(e, lie::Y(k)));
    for (int i = 0; i < 2; ++i) m.at(i, k) = col[i];
  }
  return m;
}

ExactMatrix Gl2Quotient::group_ad_p(const ExactMatrix& k) const {
  ExactMatrix kinv = inverse(k);
  ExactMatrix m(2, 2);
  for (int c = 0; c < 2; ++c) {
    ExactVector col = p_project(k * lie::Y(c) * kinv);
    for (int i = 0; i < 2; ++i) m.at(i, c) = col[i];
  }
  return m;
}

ExactVector Gl2Quotient::mod_so2_coords(const ExactMatrix& m) const {
  ExactVector c = so2_solver_->coordinates(vec4(m));
  return {c[1], c[2], c[3]};
}

const Gl3Quotient& gl3_quotient() {
  static const Gl3Quotient q;
  return q;
}

const Gl2Quotient& gl2_quotient() {
  static const Gl2Quotient q;
  return q;
}

}  // namespace zetaverify
