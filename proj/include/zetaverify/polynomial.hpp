#pragma once

#include <map>
#include <string>
#include <vector>

#include "zetaverify/rational.hpp"

namespace zetaverify {

/// Multivariate polynomial over Q(i) with a fixed, ordered variable list.
/// Exponent vectors are dense over that list; no zero coefficients are stored.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, GaussianRational>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(std::vector<std::string> vars, const GaussianRational& c);
  static MultiPoly variable(std::vector<std::string> vars, const std::string& name);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;

  void add_term(const Exponents& e, const GaussianRational& c);

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;
  MultiPoly scaled(const GaussianRational& c) const;
  MultiPoly pow(int e) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  MultiPoly derivative(const std::string& var) const;
  GaussianRational coefficient(const Exponents& e) const;

  std::string str() const;

 private:
  void check_compatible(const MultiPoly& other) const;
  int var_index(const std::string& name) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

/// Substitute every variable of `p` by the assigned linear form. The linear
/// forms live in the ring of `target_vars`; every variable of p must be bound.
/// This is the workhorse behind the group actions P(x) -> P(xg).
MultiPoly poly_substitute(const MultiPoly& p,
                          const std::map<std::string, MultiPoly>& assignment);

}  // namespace zetaverify
