#include "zetaverify/modules.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace zetaverify {

namespace {
const std::vector<std::string> kGl2Vars = {"x", "y"};
const std::vector<std::string> kGl3Vars = {"x11", "x12", "x13", "x21", "x22", "x23"};
const std::vector<std::string> kSo3Vars = {"x1", "x2", "x3"};
}  // namespace

Weight3 gl3_weight(long ell, long w) {
  if (ell < 3 || ell % 2 == 0) throw std::invalid_argument("gl3_weight: ell must be odd >= 3");
  if (w % 2 != 0) throw std::invalid_argument("gl3_weight: w must be even");
  return Weight3((ell - 3 + w) / 2, w / 2, (-ell + 3 + w) / 2);
}

Weight2 gl2_weight(long kappa, long w) {
  if (kappa < 2) throw std::invalid_argument("gl2_weight: kappa must be >= 2");
  if ((kappa - w) % 2 != 0) throw std::invalid_argument("gl2_weight: kappa != w mod 2");
  return Weight2((kappa - 2 + w) / 2, (-kappa + 2 + w) / 2);
}

// ---------------------------------------------------------------------------
// GL2Module
// ---------------------------------------------------------------------------

GL2Module::GL2Module(Weight2 lambda) : lambda_(lambda) {
  const long n = lambda_.degree();
  MultiPoly x = MultiPoly::variable(kGl2Vars, "x");
  MultiPoly y = MultiPoly::variable(kGl2Vars, "y");
  for (long k = 0; k <= n; ++k)
    basis_.push_back(x.pow(static_cast<int>(n - k)) * y.pow(static_cast<int>(k)));
}

std::array<long, 2> GL2Module::basis_weight(int k) const {
  const long n = lambda_.degree();
  return {lambda_.mu2 + (n - k), lambda_.mu2 + k};
}

ExactVector GL2Module::coordinates(const MultiPoly& p) const {
  const long n = lambda_.degree();
  ExactVector v(dim());
  for (const auto& [e, c] : p.terms()) {
    if (e[0] + e[1] != n) throw std::invalid_argument("GL2Module: wrong degree");
    v[e[1]] = c;
  }
  return v;
}

MultiPoly GL2Module::from_coordinates(const ExactVector& v) const {
  MultiPoly p(kGl2Vars);
  for (int k = 0; k < dim(); ++k)
    if (!v[k].is_zero()) p = p + basis_[k].scaled(v[k]);
  return p;
}

ExactMatrix GL2Module::group_action(const ExactMatrix& g) const {
  GaussianRational det_pow = determinant(g).pow(lambda_.mu2);
  std::map<std::string, MultiPoly> sub;
  // (x, y) g : variable j maps to sum_i var_i g_{ij}.
  for (int j = 0; j < 2; ++j) {
    MultiPoly form(kGl2Vars);
    for (int i = 0; i < 2; ++i)
      form = form + MultiPoly::variable(kGl2Vars, kGl2Vars[i]).scaled(g.at(i, j));
    sub[kGl2Vars[j]] = form;
  }
  ExactMatrix m(dim(), dim());
  for (int k = 0; k < dim(); ++k) {
    ExactVector col = coordinates(poly_substitute(basis_[k], sub).scaled(det_pow));
    for (int i = 0; i < dim(); ++i) m.at(i, k) = col[i];
  }
  return m;
}

ExactMatrix GL2Module::lie_action(const ExactMatrix& x) const {
  GaussianRational tr_part = trace(x) * GaussianRational(Rational(lambda_.mu2));
  ExactMatrix m(dim(), dim());
  for (int k = 0; k < dim(); ++k) {
    MultiPoly img = basis_[k].scaled(tr_part);
    for (int j = 0; j < 2; ++j) {
      MultiPoly form(kGl2Vars);
      for (int i = 0; i < 2; ++i)
        form = form + MultiPoly::variable(kGl2Vars, kGl2Vars[i]).scaled(x.at(i, j));
      img = img + form * basis_[k].derivative(kGl2Vars[j]);
    }
    ExactVector col = coordinates(img);
    for (int i = 0; i < dim(); ++i) m.at(i, k) = col[i];
  }
  return m;
}

// ---------------------------------------------------------------------------
// GL3Module
// ---------------------------------------------------------------------------

namespace {

MultiPoly gl3_minor(int j, int jp) {
  auto v = [](const char* n) { return MultiPoly::variable(kGl3Vars, n); };
  auto x1 = [&](int c) { return v(kGl3Vars[c - 1].c_str()); };
  auto x2 = [&](int c) { return v(kGl3Vars[3 + c - 1].c_str()); };
  return x1(j) * x2(jp) - x1(jp) * x2(j);
}

// Compositions of d into 3 parts, lexicographically descending.
std::vector<std::array<int, 3>> compositions3(long d) {
  std::vector<std::array<int, 3>> out;
  for (int a = static_cast<int>(d); a >= 0; --a)
    for (int b = static_cast<int>(d) - a; b >= 0; --b)
      out.push_back({a, b, static_cast<int>(d) - a - b});
  return out;
}

}  // namespace

GL3Module::GL3Module(Weight3 mu) : mu_(mu) {
  const long d1 = mu_.mu1 - mu_.mu2;
  const long d2 = mu_.mu2 - mu_.mu3;
  MultiPoly x21 = MultiPoly::variable(kGl3Vars, "x21");
  MultiPoly x22 = MultiPoly::variable(kGl3Vars, "x22");
  MultiPoly x23 = MultiPoly::variable(kGl3Vars, "x23");
  MultiPoly m12 = gl3_minor(1, 2), m13 = gl3_minor(1, 3), m23 = gl3_minor(2, 3);

  // Spanning products in graded-lex order on (n1,n2,n3,n12,n13,n23); the
  // first one is P_mu^+ = x21^d1 * minor12^d2.
  struct Candidate {
    MultiPoly p;
    std::array<long, 3> wt;
  };
  std::vector<Candidate> cands;
  for (const auto& n : compositions3(d1)) {
    MultiPoly rowpart = x21.pow(n[0]) * x22.pow(n[1]) * x23.pow(n[2]);
    for (const auto& q : compositions3(d2)) {
      MultiPoly p = rowpart * m12.pow(q[0]) * m13.pow(q[1]) * m23.pow(q[2]);
      std::array<long, 3> wt = {mu_.mu3 + n[0] + q[0] + q[1], mu_.mu3 + n[1] + q[0] + q[2],
                                mu_.mu3 + n[2] + q[1] + q[2]};
      cands.push_back({std::move(p), wt});
    }
  }

  // Support monomials across all candidates.
  std::set<MultiPoly::Exponents> support_set;
  for (const auto& c : cands)
    for (const auto& [e, coef] : c.p.terms()) support_set.insert(e);
  support_.assign(support_set.begin(), support_set.end());
  std::map<MultiPoly::Exponents, int> mono_index;
  for (size_t i = 0; i < support_.size(); ++i) mono_index[support_[i]] = static_cast<int>(i);

  // Greedy independent subset (incremental elimination keeps the order).
  std::vector<std::pair<int, ExactVector>> echelon;  // (pivot, reduced row)
  for (const auto& c : cands) {
    ExactVector row(support_.size());
    for (const auto& [e, coef] : c.p.terms()) row[mono_index.at(e)] = coef;
    for (const auto& [piv, er] : echelon) {
      if (row[piv].is_zero()) continue;
      GaussianRational f = row[piv];
      for (size_t j = 0; j < row.size(); ++j)
        if (!er[j].is_zero()) row[j] -= f * er[j];
    }
    int piv = -1;
    for (size_t j = 0; j < row.size(); ++j)
      if (!row[j].is_zero()) {
        piv = static_cast<int>(j);
        break;
      }
    if (piv < 0) continue;
    GaussianRational inv = GaussianRational(1) / row[piv];
    for (auto& x : row) x *= inv;
    echelon.emplace_back(piv, std::move(row));
    basis_.push_back(c.p);
    weights_.push_back(c.wt);
  }

  if (static_cast<long>(basis_.size()) != mu_.weyl_dim())
    throw std::logic_error("GL3Module: basis size disagrees with the Weyl dimension");

  ExactMatrix cols(static_cast<int>(support_.size()), dim());
  for (int k = 0; k < dim(); ++k)
    for (const auto& [e, coef] : basis_[k].terms()) cols.at(mono_index.at(e), k) = coef;
  solver_ = std::make_unique<CoordinateSolver>(cols);
}

int GL3Module::lowest_weight_index() const {
  std::array<long, 3> low = {mu_.mu3, mu_.mu2, mu_.mu1};
  int found = -1;
  for (int k = 0; k < dim(); ++k)
    if (weights_[k] == low) {
      if (found >= 0) throw std::logic_error("GL3Module: lowest weight not unique");
      found = k;
    }
  if (found < 0) throw std::logic_error("GL3Module: lowest weight vector missing");
  return found;
}

ExactVector GL3Module::support_vector(const MultiPoly& p) const {
  ExactVector v(support_.size());
  std::map<MultiPoly::Exponents, int> idx;
  for (size_t i = 0; i < support_.size(); ++i) idx[support_[i]] = static_cast<int>(i);
  for (const auto& [e, c] : p.terms()) {
    auto it = idx.find(e);
    if (it == idx.end()) throw std::invalid_argument("GL3Module: polynomial outside model");
    v[it->second] = c;
  }
  return v;
}

ExactVector GL3Module::coordinates(const MultiPoly& p) const {
  return solver_->coordinates(support_vector(p));
}

ExactMatrix GL3Module::group_action(const ExactMatrix& g) const {
  GaussianRational det_pow = determinant(g).pow(mu_.mu3);
  std::map<std::string, MultiPoly> sub;
  // x -> x g on both rows: x_{rj} maps to sum_i x_{ri} g_{ij}.
  for (int r = 0; r < 2; ++r)
    for (int j = 0; j < 3; ++j) {
      MultiPoly form(kGl3Vars);
      for (int i = 0; i < 3; ++i)
        form = form + MultiPoly::variable(kGl3Vars, kGl3Vars[3 * r + i]).scaled(g.at(i, j));
      sub[kGl3Vars[3 * r + j]] = form;
    }
  ExactMatrix m(dim(), dim());
  for (int k = 0; k < dim(); ++k) {
    ExactVector col = coordinates(poly_substitute(basis_[k], sub).scaled(det_pow));
    for (int i = 0; i < dim(); ++i) m.at(i, k) = col[i];
  }
  return m;
}

ExactMatrix GL3Module::lie_action(const ExactMatrix& x) const {
  GaussianRational tr_part = trace(x) * GaussianRational(Rational(mu_.mu3));
  ExactMatrix m(dim(), dim());
  for (int k = 0; k < dim(); ++k) {
    MultiPoly img = basis_[k].scaled(tr_part);
    for (int r = 0; r < 2; ++r)
      for (int j = 0; j < 3; ++j) {
        MultiPoly d = basis_[k].derivative(kGl3Vars[3 * r + j]);
        if (d.is_zero()) continue;
        MultiPoly form(kGl3Vars);
        for (int i = 0; i < 3; ++i)
          form = form + MultiPoly::variable(kGl3Vars, kGl3Vars[3 * r + i]).scaled(x.at(i, j));
        img = img + form * d;
      }
    ExactVector col = coordinates(img);
    for (int i = 0; i < dim(); ++i) m.at(i, k) = col[i];
  }
  return m;
}

// ---------------------------------------------------------------------------
// SO3Module
// ---------------------------------------------------------------------------

MultiPoly SO3Module::reduce(const MultiPoly& p) {
  MultiPoly out(p.vars());
  MultiPoly work = p;
  bool changed = true;
  while (changed) {
    changed = false;
    MultiPoly next(p.vars());
    for (const auto& [e, c] : work.terms()) {
      if (e[2] >= 2) {
        // x3^2 -> -(x1^2 + x2^2)
        MultiPoly::Exponents e1 = e, e2 = e;
        e1[2] -= 2;
        e1[0] += 2;
        e2[2] -= 2;
        e2[1] += 2;
        next.add_term(e1, -c);
        next.add_term(e2, -c);
        changed = true;
      } else {
        next.add_term(e, c);
      }
    }
    work = next;
  }
  return work;
}

SO3Module::SO3Module(long ell) : ell_(ell) {
  if (ell < 0) throw std::invalid_argument("SO3Module: ell must be >= 0");
  MultiPoly x1 = MultiPoly::variable(kSo3Vars, "x1");
  MultiPoly x2 = MultiPoly::variable(kSo3Vars, "x2");
  MultiPoly x3 = MultiPoly::variable(kSo3Vars, "x3");
  for (long i = -ell; i <= ell; ++i) {
    int sgn = i > 0 ? 1 : (i < 0 ? -1 : 0);
    MultiPoly lin = x1.scaled(GaussianRational(sgn)) + x2.scaled(GaussianRational::i());
    basis_.push_back(reduce(lin.pow(static_cast<int>(std::abs(i))) *
                            x3.pow(static_cast<int>(ell - std::abs(i)))));
  }
  // Canonical-form support: monomials of degree l with x3-power <= 1.
  for (int c = 0; c <= 1 && c <= ell; ++c)
    for (int a = 0; a <= ell - c; ++a)
      support_.push_back({a, static_cast<int>(ell) - c - a, c});
  ExactMatrix cols(static_cast<int>(support_.size()), dim());
  std::map<MultiPoly::Exponents, int> idx;
  for (size_t i = 0; i < support_.size(); ++i) idx[support_[i]] = static_cast<int>(i);
  for (int k = 0; k < dim(); ++k)
    for (const auto& [e, c] : basis_[k].terms()) cols.at(idx.at(e), k) = c;
  solver_ = std::make_unique<CoordinateSolver>(cols);
}

ExactVector SO3Module::support_vector(const MultiPoly& p) const {
  std::map<MultiPoly::Exponents, int> idx;
  for (size_t i = 0; i < support_.size(); ++i) idx[support_[i]] = static_cast<int>(i);
  ExactVector v(support_.size());
  for (const auto& [e, c] : p.terms()) {
    auto it = idx.find(e);
    if (it == idx.end()) throw std::invalid_argument("SO3Module: polynomial not in canonical form");
    v[it->second] = c;
  }
  return v;
}

ExactVector SO3Module::coordinates(const MultiPoly& p) const {
  return solver_->coordinates(support_vector(reduce(p)));
}

ExactMatrix SO3Module::group_action(const ExactMatrix& g) const {
  std::map<std::string, MultiPoly> sub;
  for (int j = 0; j < 3; ++j) {
    MultiPoly form(kSo3Vars);
    for (int i = 0; i < 3; ++i)
      form = form + MultiPoly::variable(kSo3Vars, kSo3Vars[i]).scaled(g.at(i, j));
    sub[kSo3Vars[j]] = form;
  }
  ExactMatrix m(dim(), dim());
  for (int k = 0; k < dim(); ++k) {
    ExactVector col = coordinates(poly_substitute(basis_[k], sub));
    for (int i = 0; i < dim(); ++i) m.at(i, k) = col[i];
  }
  return m;
}

ExactMatrix SO3Module::lie_action(const ExactMatrix& x) const {
  ExactMatrix m(dim(), dim());
  for (int k = 0; k < dim(); ++k) {
    MultiPoly img(kSo3Vars);
    for (int j = 0; j < 3; ++j) {
      MultiPoly d = basis_[k].derivative(kSo3Vars[j]);
      if (d.is_zero()) continue;
      MultiPoly form(kSo3Vars);
      for (int i = 0; i < 3; ++i)
        form = form + MultiPoly::variable(kSo3Vars, kSo3Vars[i]).scaled(x.at(i, j));
      img = img + form * d;
    }
    ExactVector col = coordinates(img);
    for (int i = 0; i < dim(); ++i) m.at(i, k) = col[i];
  }
  return m;
}

std::vector<std::pair<std::array<int, 3>, GaussianRational>> SO3Module::monomial_expansion(
    long i) const {
  // (sgn(i) x1 + sqrt(-1) x2)^{|i|} x3^{l-|i|}, expanded without reduction.
  std::vector<std::pair<std::array<int, 3>, GaussianRational>> out;
  int n = static_cast<int>(std::abs(i));
  GaussianRational sgn(i >= 0 ? 1 : -1);
  for (int k = 0; k <= n; ++k) {
    // x1^k x2^(n-k) coefficient: C(n,k) sgn^k i^(n-k)
    GaussianRational c = GaussianRational(Rational(binomial(n, k))) * sgn.pow(k) *
                         GaussianRational::i_pow(n - k);
    out.push_back({{k, n - k, static_cast<int>(ell_) - n}, c});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Small-matrix helpers
// ---------------------------------------------------------------------------

ExactMatrix mat2(std::initializer_list<GaussianRational> entries) {
  if (entries.size() != 4) throw std::invalid_argument("mat2 needs 4 entries");
  ExactMatrix m(2, 2);
  auto it = entries.begin();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.at(i, j) = *it++;
  return m;
}

ExactMatrix mat3(std::initializer_list<GaussianRational> entries) {
  if (entries.size() != 9) throw std::invalid_argument("mat3 needs 9 entries");
  ExactMatrix m(3, 3);
  auto it = entries.begin();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = *it++;
  return m;
}

GaussianRational determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
  if (m.rows() == 1) return m.at(0, 0);
  if (m.rows() == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
  if (m.rows() == 3) {
    GaussianRational d(0);
    d += m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1));
    d -= m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0));
    d += m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
    return d;
  }
  throw std::invalid_argument("determinant: only n <= 3 supported");
}

GaussianRational trace(const ExactMatrix& m) {
  GaussianRational t(0);
  for (int i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m.at(i, i);
  return t;
}

ExactMatrix inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  const int n = m.rows();
  ExactMatrix out(n, n);
  for (int j = 0; j < n; ++j) {
    ExactVector e(n);
    e[j] = GaussianRational(1);
    auto col = solve(m, e);
    if (!col) throw std::invalid_argument("inverse: singular matrix");
    for (int i = 0; i < n; ++i) out.at(i, j) = (*col)[i];
  }
  return out;
}

}  // namespace zetaverify
