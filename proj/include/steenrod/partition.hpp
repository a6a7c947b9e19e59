#pragma once

#include <string>
#include <utility>
#include <vector>

#include "steenrod/milnor.hpp"
#include "steenrod/poly.hpp"

namespace steenrod {

/// Weakly decreasing sequence of positive integers; may be empty.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<i64> parts);
  static Partition parse(const std::string& text);  // "6,5,4,3,2"

  const std::vector<i64>& parts() const { return parts_; }
  size_t length() const { return parts_.size(); }
  i64 part(size_t i1) const { return i1 <= parts_.size() ? parts_[i1 - 1] : 0; }  // 1-based
  i64 boxes() const;  // total number of boxes
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  std::string to_string() const;  // "6,5,4,3,2"; "" for the empty partition

 private:
  std::vector<i64> parts_;
};

/// Column p-regularity: 0 <= lambda_i - lambda_{i+1} <= p-1 (lambda_{n+1}=0).
bool is_column_p_regular(const Partition& lambda, Prime p);

/// T-regularity: for every a >= 1 at most one part lies strictly between
/// (a-1)(p-1) and a(p-1). Requires column p-regularity (domain error if not).
bool is_t_regular(const Partition& lambda, Prime p);

/// Derived data of a T-regular partition: blocks of p-1 columns, their box
/// counts gamma_j, and the decomposition gamma_k = (n_k - 1)(p-1) + b_k.
struct TRegularData {
  Partition gamma;
  std::vector<Partition> blocks;  // lambda_(1), ..., lambda_(m)
  std::vector<i64> n_k;           // rows in block k
  std::vector<i64> b_k;           // 1 <= b_k <= p-1
  size_t m = 0;
};

TRegularData t_conjugate(const Partition& lambda, Prime p);

/// lambda^-: subtract p-1 from every part >= p-1, drop the rest.
Partition lambda_minus(const Partition& lambda, Prime p);

/// Rows spanned by the k-th antidiagonal (boxes with j + i(p-1) = k + p-1).
struct AntidiagonalSpan {
  i64 lowest_row;  // 1-based
  i64 length;
};

/// Antidiagonal spans for k = 1..gamma_1 of a T-regular partition.
std::vector<AntidiagonalSpan> antidiagonals(const Partition& lambda, Prime p);

/// The partition with the last antidiagonal removed.
Partition remove_last_antidiagonal(const Partition& lambda, Prime p);

/// v(lambda) = product over antidiagonals of the Vandermonde determinants
/// [x_{i-s+1}, x_{i-s+2}^p, ..., x_i^{p^{s-1}}]. nvars defaults to the
/// partition length.
Polynomial v_polynomial(const Partition& lambda, Prime p, int nvars = -1);

/// Spike monomial s(lambda) = prod x_i^{(b_i+1) p^{a_i} - 1} with
/// lambda_i = a_i(p-1) + b_i, plus its coefficient sign in v(lambda).
std::pair<Monomial, int> s_monomial(const Partition& lambda, Prime p, int nvars = -1);

/// epsilon(lambda) = gamma_2 - gamma_4 + gamma_6 - ...; the coefficient of
/// s(lambda) in v(lambda) is (-1)^epsilon.
i64 epsilon(const Partition& lambda, Prime p);

/// w(lambda') = prod over columns j of w(lambda'_j).
Polynomial w_conjugate_polynomial(const Partition& lambda, Prime p, int nvars = -1);

/// p(lambda') = prod over blocks j of w(lambda_(j)')^{p^{j-1}}.
Polynomial p_prime_polynomial(const Partition& lambda, Prime p, int nvars = -1);

/// r-sequence of a T-regular partition, computed two ways that must agree:
/// the tableau algorithm and the closed form
/// r_k = (b_k+1) p_{n_k-1} - (n_k-1) - sum_{j>k} p^{j-k-1} gamma_j.
struct RSequence {
  std::vector<i64> r;
  std::vector<std::vector<i64>> tableau;  // entries in the shape of lambda
};

RSequence tab_r_sequence(const Partition& lambda, Prime p);

/// First composition-factor occurrence degree sum_i p^{i-1} gamma_i
/// (T-regular lambda only).
i64 d_c(const Partition& lambda, Prime p);

/// First submodule occurrence degree sum_j p_{lambda'_j} = deg w(lambda').
i64 d_s(const Partition& lambda, Prime p);

/// Milnor spike of a partition with positive parts:
/// R = ((b_1+1)p^{a_1}-1, ..., (b_n+1)p^{a_n}-1) with mu_i = a_i(p-1)+b_i.
MilnorElement milnor_spike(const Partition& mu, Prime p);

/// R(r, lambda) = r(p-1) + d_c(lambda) - d_c(lambda^-).
i64 R_of(i64 r, const Partition& lambda, Prime p);

/// All T-regular partitions with at most max_len parts and d_s <= max_ds,
/// in a fixed deterministic order.
std::vector<Partition> t_regular_partitions(int max_len, Prime p, i64 max_ds);

}  // namespace steenrod
