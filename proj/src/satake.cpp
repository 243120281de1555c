#include "zetaverify/satake.hpp"

#include <sstream>

namespace zetaverify {

SatakeMultiset SatakeMultiset::standard_gl2() {
  SatakeMultiset s;
  s.insert({1, 0});
  s.insert({0, 1});
  return s;
}

void SatakeMultiset::insert(Monomial m, long count) {
  if (count == 0) return;
  long& c = counts_[m];
  c += count;
  if (c == 0) counts_.erase(m);
}

long SatakeMultiset::multiplicity(Monomial m) const {
  auto it = counts_.find(m);
  return it == counts_.end() ? 0 : it->second;
}

long SatakeMultiset::size() const {
  long n = 0;
  for (const auto& [m, c] : counts_) n += c;
  return n;
}

SatakeMultiset SatakeMultiset::tensor(const SatakeMultiset& other) const {
  SatakeMultiset out;
  for (const auto& [m1, c1] : counts_)
    for (const auto& [m2, c2] : other.counts_)
      out.insert({m1.first + m2.first, m1.second + m2.second}, c1 * c2);
  return out;
}

SatakeMultiset SatakeMultiset::dual() const {
  SatakeMultiset out;
  for (const auto& [m, c] : counts_) out.insert({-m.first, -m.second}, c);
  return out;
}

SatakeMultiset SatakeMultiset::det_twist(long k) const {
  SatakeMultiset out;
  for (const auto& [m, c] : counts_) out.insert({m.first + k, m.second + k}, c);
  return out;
}

SatakeMultiset disjoint_union(const SatakeMultiset& a, const SatakeMultiset& b) {
  SatakeMultiset out = a;
  for (const auto& [m, c] : b.counts_) out.insert(m, c);
  return out;
}

std::map<SatakeMultiset::Monomial, long> SatakeMultiset::diff(const SatakeMultiset& other) const {
  std::map<Monomial, long> d;
  for (const auto& [m, c] : counts_) d[m] += c;
  for (const auto& [m, c] : other.counts_) d[m] -= c;
  for (auto it = d.begin(); it != d.end();) it = it->second == 0 ? d.erase(it) : std::next(it);
  return d;
}

std::vector<std::map<SatakeMultiset::Monomial, BigInt>> SatakeMultiset::elementary_symmetric()
    const {
  // e_k via the generating product prod (1 + gamma_j t), coefficients in t.
  std::vector<std::map<Monomial, BigInt>> e(static_cast<size_t>(size()) + 1);
  e[0][{0, 0}] = 1;
  size_t used = 0;
  for (const auto& [m, c] : counts_)
    for (long rep = 0; rep < c; ++rep) {
      ++used;
      for (size_t k = used; k >= 1; --k) {
        for (const auto& [mono, coef] : e[k - 1]) {
          Monomial shifted{mono.first + m.first, mono.second + m.second};
          BigInt& slot = e[k][shifted];
          slot += coef;
          if (slot == 0) e[k].erase(shifted);
        }
      }
    }
  e.erase(e.begin());
  return e;
}

std::string SatakeMultiset::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [m, c] : counts_) {
    if (!first) os << ", ";
    first = false;
    os << "a^" << m.first << " b^" << m.second;
    if (c != 1) os << " x" << c;
  }
  os << "}";
  return os.str();
}

SatakeMultiset sym_power(const SatakeMultiset& standard, long k) {
  if (!(standard == SatakeMultiset::standard_gl2()))
    throw std::invalid_argument("sym_power: expects the standard GL2 parameter {alpha, beta}");
  SatakeMultiset out;
  for (long j = 0; j <= k; ++j) out.insert({k - j, j});
  return out;
}

FactorizationCheck check_factorization(const std::string& identity, bool perturb) {
  FactorizationCheck out;
  out.identity = identity;
  SatakeMultiset std2 = SatakeMultiset::standard_gl2();
  SatakeMultiset lhs, rhs;
  if (identity == "sym2_x_sym2") {
    SatakeMultiset sym2 = sym_power(std2, 2);
    lhs = sym2.tensor(sym2.dual());
    rhs = disjoint_union(sym_power(std2, 4).det_twist(-2), sym_power(std2, 2).det_twist(-1));
    if (!perturb) {
      SatakeMultiset unit;
      unit.insert({0, 0});
      rhs = disjoint_union(rhs, unit);  // the zeta factor
    }
  } else if (identity == "triple_product") {
    lhs = std2.tensor(std2).tensor(std2);
    rhs = sym_power(std2, 2).tensor(std2);
    if (!perturb) rhs = disjoint_union(rhs, std2.det_twist(1));
  } else {
    throw std::invalid_argument("check_factorization: unknown identity '" + identity + "'");
  }
  out.lhs_size = lhs.size();
  out.rhs_size = rhs.size();
  out.difference = lhs.diff(rhs);
  out.equal = out.difference.empty();
  out.symmetric_functions_equal =
      lhs.size() == rhs.size() && lhs.elementary_symmetric() == rhs.elementary_symmetric();
  return out;
}

}  // namespace zetaverify
