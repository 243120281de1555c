#pragma once

#include <map>
#include <string>
#include <vector>

#include "zetaverify/rational.hpp"

namespace zetaverify {

/// Multiset of Laurent monomials alpha^a beta^b with integer multiplicities,
/// representing an unramified local parameter. Closed under tensor products,
/// symmetric powers, duals, and determinant twists.
class SatakeMultiset {
 public:
  using Monomial = std::pair<long, long>;

  SatakeMultiset() = default;
  static SatakeMultiset standard_gl2();  // {alpha, beta}

  void insert(Monomial m, long count = 1);
  long multiplicity(Monomial m) const;
  long size() const;
  const std::map<Monomial, long>& entries() const { return counts_; }

  friend bool operator==(const SatakeMultiset& a, const SatakeMultiset& b) {
    return a.counts_ == b.counts_;
  }

  SatakeMultiset tensor(const SatakeMultiset& other) const;
  SatakeMultiset dual() const;
  SatakeMultiset det_twist(long k) const;  // multiply by (alpha beta)^k
  friend SatakeMultiset disjoint_union(const SatakeMultiset& a, const SatakeMultiset& b);

  /// Signed difference this - other as multiplicity map (zero entries absent).
  std::map<Monomial, long> diff(const SatakeMultiset& other) const;

  /// Elementary symmetric functions e_1..e_n of the monomials as Laurent
  /// polynomials in Z[alpha^-+, beta^-+] (an independent equality route).
  std::vector<std::map<Monomial, BigInt>> elementary_symmetric() const;

  std::string str() const;

 private:
  std::map<Monomial, long> counts_;
};

/// Sym^k of the standard GL2 parameter {alpha, beta}.
SatakeMultiset sym_power(const SatakeMultiset& standard, long k);

struct FactorizationCheck {
  std::string identity;
  bool equal = false;
  bool symmetric_functions_equal = false;  // independent route
  std::map<SatakeMultiset::Monomial, long> difference;
  long lhs_size = 0, rhs_size = 0;
};

/// identity in {"sym2_x_sym2", "triple_product"}; when `perturb` is set the
/// right side drops one factor (negative control, must report unequal).
FactorizationCheck check_factorization(const std::string& identity, bool perturb = false);

}  // namespace zetaverify
