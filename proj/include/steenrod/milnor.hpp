#pragma once

#include <string>
#include <utility>
#include <vector>

#include "steenrod/modp.hpp"

namespace steenrod {

/// Milnor basis index R = (r_1, ..., r_m), trailing zeros trimmed.
/// P(R) has degree |R| = sum (p^i - 1) r_i in polynomial-degree units and
/// excess e(R) = sum r_i.
class MilnorElement {
 public:
  MilnorElement() = default;  // P(), the unit
  explicit MilnorElement(std::vector<i64> r);
  static MilnorElement power(i64 d);  // P(d) = P^d

  const std::vector<i64>& entries() const { return r_; }
  size_t length() const { return r_.size(); }
  i64 entry(size_t i1) const { return i1 <= r_.size() ? r_[i1 - 1] : 0; }  // 1-based

  i64 degree(Prime p) const;
  i64 excess() const;

  bool operator==(const MilnorElement& o) const { return r_ == o.r_; }
  bool operator!=(const MilnorElement& o) const { return r_ != o.r_; }
  bool operator<(const MilnorElement& o) const { return r_ < o.r_; }
  bool operator>(const MilnorElement& o) const { return r_ > o.r_; }

  std::string to_string() const;  // "P(8,5,1)", "P()"

 private:
  std::vector<i64> r_;
};

/// Admissible word T = (t_1, ..., t_m) naming P^{t_1} ... P^{t_m} with
/// t_i >= p t_{i+1}.
class AdmissibleWord {
 public:
  AdmissibleWord() = default;
  explicit AdmissibleWord(std::vector<i64> t);

  const std::vector<i64>& entries() const { return t_; }
  size_t length() const { return t_.size(); }
  bool is_admissible(Prime p) const;
  i64 degree(Prime p) const;  // polynomial-degree units: (p-1) sum t_i
  i64 excess(Prime p) const;  // p t_1 - (p-1) sum t_i

  bool operator==(const AdmissibleWord& o) const { return t_ == o.t_; }
  std::string to_string() const;  // "P^32 P^8 P^1"

 private:
  std::vector<i64> t_;
};

/// Formal F_p-linear combination of Milnor basis elements. Sums across
/// degrees are allowed; degree() succeeds only on homogeneous elements.
class AlgebraElement {
 public:
  explicit AlgebraElement(Prime p) : p_(p) {}
  static AlgebraElement unit(Prime p);
  static AlgebraElement single(const MilnorElement& r, i64 c, Prime p);

  Prime prime() const { return p_; }
  const std::vector<std::pair<MilnorElement, u32>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Fp coefficient(const MilnorElement& r) const;

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator*(const AlgebraElement& o) const;  // bilinear Milnor product
  AlgebraElement scale(i64 c) const;

  bool is_homogeneous() const;
  i64 degree() const;  // error on zero or inhomogeneous input

  bool operator==(const AlgebraElement& o) const;
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }
  std::string to_string() const;  // "P(4) + 2*P(2)", "0"

 private:
  Prime p_;
  std::vector<std::pair<MilnorElement, u32>> terms_;  // descending lex, no zeros
  friend AlgebraElement make_element(Prime, std::vector<std::pair<MilnorElement, u32>>);
};

/// Milnor's product formula: P(R) P(S) = sum over matrices (x_ij) with
/// r_i = sum_j p^j x_ij, s_j = sum_i x_ij, t_k = sum_{i+j=k} x_ij and
/// coefficient prod_k (t_k; {x_ij}_{i+j=k}) mod p.
AlgebraElement milnor_product(const MilnorElement& a, const MilnorElement& b, Prime p);

/// Index bijection t_m = r_m, t_i = r_i + p t_{i+1}; preserves degree and
/// excess. This is a bijection of indices, not an operator identity.
AdmissibleWord milnor_to_admissible_index(const MilnorElement& r, Prime p);
MilnorElement admissible_to_milnor_index(const AdmissibleWord& t, Prime p);

/// Expansion of the composite P^{t_1} ... P^{t_m} in the Milnor basis.
AlgebraElement admissible_to_milnor(const AdmissibleWord& t, Prime p);

/// All Milnor indices R with |R| = degree, in descending lex order.
/// Cached per (p, degree); safe under concurrent lookup.
const std::vector<MilnorElement>& milnor_basis_of_degree(i64 degree, Prime p);

/// Hq{d}: the sum of all Milnor basis elements in degree d(p-1), each with
/// coefficient 1. Equals (-1)^d chi(P^d).
AlgebraElement chi_expansion(i64 d, Prime p);

/// chi(P^d) = (-1)^d Hq{d}.
AlgebraElement chi_of_power(i64 d, Prime p);

/// Davis's formula: P^u Hq{v} = sum over |R| = (p-1)(u+v) of
/// C(|R| + e(R), pu) P(R).
AlgebraElement davis_expansion(i64 u, i64 v, Prime p);

}  // namespace steenrod
