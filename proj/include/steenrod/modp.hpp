#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace steenrod {

using i64 = std::int64_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;

/// Thrown when an exact integer computation would exceed 64 bits.
class OverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

i64 checked_add(i64 a, i64 b);
i64 checked_sub(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);
i64 checked_pow(i64 base, u32 exp);

/// An odd prime p, 3 <= p < 2^20, validated by trial division.
class Prime {
 public:
  explicit Prime(u32 p);
  u32 value() const { return p_; }
  bool operator==(const Prime& o) const { return p_ == o.p_; }
  bool operator!=(const Prime& o) const { return p_ != o.p_; }

 private:
  u32 p_;
};

/// A residue mod p. Arithmetic requires both operands to share the prime.
class Fp {
 public:
  Fp(i64 value, Prime p);
  u32 value() const { return v_; }
  Prime prime() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator+(Fp o) const;
  Fp operator-(Fp o) const;
  Fp operator-() const;
  Fp operator*(Fp o) const;
  Fp inv() const;  // multiplicative inverse, error on zero
  Fp pow(u64 e) const;

  bool operator==(Fp o) const;
  bool operator!=(Fp o) const { return !(*this == o); }

 private:
  u32 v_;
  Prime p_;
};

/// Coefficient arithmetic on raw residues (used by the polynomial kernels).
inline u32 mod_add(u32 a, u32 b, u32 p) {
  u32 s = a + b;
  return s >= p ? s - p : s;
}
inline u32 mod_sub(u32 a, u32 b, u32 p) { return a >= b ? a - b : a + p - b; }
inline u32 mod_mul(u32 a, u32 b, u32 p) {
  return static_cast<u32>((static_cast<u64>(a) * b) % p);
}
u32 mod_inv(u32 a, u32 p);
u32 mod_of(i64 a, u32 p);  // reduce a (possibly negative) into [0, p)

/// p_n = (p^n - 1)/(p - 1) = 1 + p + ... + p^{n-1}; rep_unit(0) = 0.
i64 rep_unit(u32 n, Prime p);

/// Sum of the base-p digits of k.
i64 alpha(i64 k, Prime p);

/// Base-p digits of k, least significant first.
std::vector<u32> base_p_digits(i64 k, Prime p);

/// C(n, k) mod p by digitwise (Lucas) evaluation; 0 when k < 0 or k > n.
Fp binom_mod_p(i64 n, i64 k, Prime p);

/// Multinomial coefficient (n; parts..., n - sum(parts)) mod p, computed
/// digitwise in base p. The remainder n - sum(parts) is an implicit extra
/// part; if sum(parts) > n the coefficient is 0.
Fp multinom_mod_p(i64 n, const std::vector<i64>& parts, Prime p);

}  // namespace steenrod
