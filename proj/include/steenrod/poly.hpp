#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "steenrod/modp.hpp"

namespace steenrod {

// Engine-wide bound on the number of polynomial variables.
inline constexpr int kMaxVars = 32;
inline constexpr u32 kMaxExponent = 1u << 24;

/// Exponent vector of a monomial in x1..xn. Exponents are bounded by
/// kMaxExponent (covers p^8 for the supported small primes).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<u32> exps);
  static Monomial one(int nvars);

  int nvars() const { return static_cast<int>(e_.size()); }
  u32 exp(int var1) const { return e_[static_cast<size_t>(var1 - 1)]; }  // 1-based
  const std::vector<u32>& exps() const { return e_; }
  i64 degree() const;

  // left-lex: x1 heaviest; a > b iff the exponent vectors compare greater
  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }
  bool operator<(const Monomial& o) const { return e_ < o.e_; }
  bool operator>(const Monomial& o) const { return e_ > o.e_; }

 private:
  std::vector<u32> e_;
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const;
};

/// Sparse polynomial over F_p in a fixed number of variables. Terms are kept
/// in canonical form: descending left-lex order, no zero coefficients.
class Polynomial {
 public:
  struct Term {
    Monomial m;
    u32 c;  // in [1, p-1]
  };

  Polynomial(Prime p, int nvars);  // zero polynomial
  static Polynomial constant(Prime p, int nvars, i64 c);
  static Polynomial variable(Prime p, int nvars, int var1);
  static Polynomial monomial(Prime p, int nvars, const Monomial& m, i64 c);
  static Polynomial linear_form(Prime p, int nvars, const std::vector<i64>& coeffs);

  /// Builds from terms already sorted descending left-lex with coefficients
  /// in [1, p-1]. Used by the kernels; invariants are trusted.
  static Polynomial from_sorted_terms(Prime p, int nvars, std::vector<Term> terms);

  Prime prime() const { return p_; }
  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  bool is_homogeneous() const;
  i64 degree() const;  // error on zero or inhomogeneous input

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scale(i64 c) const;
  Polynomial pow(u64 e) const;
  /// f^(p^e) by raising every exponent; exact over F_p.
  Polynomial frobenius_power(u32 e) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Canonical text form, e.g. "2*x1^3*x2 + x1*x2^3"; "0" for zero.
  std::string to_string() const;
  static Polynomial parse(const std::string& text, Prime p, int nvars);

 private:
  Prime p_;
  int nvars_;
  std::vector<Term> terms_;
};

/// Vandermonde determinant with (row r, column c) entry x_{idx[c]}^{s[r]};
/// exponents must be powers of p. A repeated variable index gives the zero
/// polynomial.
Polynomial vandermonde(Prime p, int nvars, const std::vector<int>& var_indices,
                       const std::vector<i64>& exponents);

/// w(n) = [x_1, x_2^p, ..., x_n^{p^{n-1}}].
Polynomial vandermonde_w(Prime p, int nvars, int n);

/// w(n, a) = [x_1, ..., x_a^{p^{a-1}}, x_{a+1}^{p^{a+1}}, ..., x_n^{p^n}],
/// the n x n determinant with the exponent p^a omitted, 0 <= a <= n.
Polynomial vandermonde_w_skip(Prime p, int nvars, int n, int a);

/// omega-vector: digitwise base-p column sums of a sequence of non-negative
/// integers; trailing zeros trimmed.
class OmegaVector {
 public:
  OmegaVector() = default;
  explicit OmegaVector(std::vector<i64> entries);  // trims trailing zeros

  const std::vector<i64>& entries() const { return e_; }
  size_t length() const { return e_.size(); }
  i64 entry(size_t j1) const { return j1 <= e_.size() ? e_[j1 - 1] : 0; }  // 1-based
  i64 degree(Prime p) const;  // sum omega_j p^{j-1}

  bool operator==(const OmegaVector& o) const { return e_ == o.e_; }
  bool operator!=(const OmegaVector& o) const { return e_ != o.e_; }
  std::string to_string() const;

 private:
  std::vector<i64> e_;
};

OmegaVector omega_of_sequence(const std::vector<i64>& s, Prime p);
OmegaVector omega_vector(const Monomial& m, Prime p);

/// rho dominates sigma iff every prefix sum_{i<=k} p^{i-1} rho_i is >= the
/// corresponding prefix for sigma.
bool dominates(const OmegaVector& rho, const OmegaVector& sigma, Prime p);

/// A spike exponent e has base-p form c p^k + (p-1)(p^{k-1} + ... + 1),
/// equivalently e + 1 = d * p^k with 2 <= d <= p.
bool is_spike_exponent(i64 e, Prime p);
bool is_spike(const Monomial& m, Prime p);

/// Left-lex-greatest monomial and its coefficient; error on zero input.
std::pair<Monomial, Fp> leading_monomial(const Polynomial& f);

}  // namespace steenrod
