#include "zetaverify/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace zetaverify {

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const GaussianRational& c) {
  MultiPoly p(std::move(vars));
  if (!c.is_zero()) p.terms_[Exponents(p.vars_.size(), 0)] = c;
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, const std::string& name) {
  MultiPoly p(std::move(vars));
  Exponents e(p.vars_.size(), 0);
  e[p.var_index(name)] = 1;
  p.terms_[e] = GaussianRational(1);
  return p;
}

int MultiPoly::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw std::invalid_argument("unbound variable: " + name);
  return static_cast<int>(it - vars_.begin());
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

void MultiPoly::add_term(const Exponents& e, const GaussianRational& c) {
  if (e.size() != vars_.size()) throw std::invalid_argument("exponent arity mismatch");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_[e] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& other) const {
  if (vars_ != other.vars_) throw std::invalid_argument("polynomial rings differ");
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator-() const { return scaled(GaussianRational(-1)); }

MultiPoly MultiPoly::scaled(const GaussianRational& c) const {
  MultiPoly r(vars_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly r(a.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      MultiPoly::Exponents e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  MultiPoly acc = constant(vars_, GaussianRational(1));
  for (int k = 0; k < e; ++k) acc = acc * *this;
  return acc;
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
  int idx = var_index(var);
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    Exponents d = e;
    d[idx] -= 1;
    r.add_term(d, c * GaussianRational(e[idx]));
  }
  return r;
}

GaussianRational MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? GaussianRational(0) : it->second;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) os << "*" << vars_[i] << "^" << e[i];
  }
  return os.str();
}

MultiPoly poly_substitute(const MultiPoly& p,
                          const std::map<std::string, MultiPoly>& assignment) {
  std::vector<const MultiPoly*> images(p.vars().size(), nullptr);
  for (size_t i = 0; i < p.vars().size(); ++i) {
    auto it = assignment.find(p.vars()[i]);
    if (it == assignment.end())
      throw std::invalid_argument("unbound variable: " + p.vars()[i]);
    images[i] = &it->second;
  }
  if (images.empty()) throw std::invalid_argument("empty variable list");
  const auto& target_vars = images[0]->vars();
  MultiPoly r(target_vars);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(target_vars, c);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term = term * images[i]->pow(e[i]);
    r = r + term;
  }
  return r;
}

}  // namespace zetaverify
