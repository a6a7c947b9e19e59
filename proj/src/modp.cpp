#include "steenrod/modp.hpp"

#include <numeric>

namespace steenrod {

i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

i64 checked_pow(i64 base, u32 exp) {
  i64 r = 1;
  for (u32 i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

namespace {

bool is_prime_u32(u32 n) {
  if (n < 2) return false;
  for (u32 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

Prime::Prime(u32 p) : p_(p) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("prime must be odd and >= 3");
  if (p >= (1u << 20)) throw std::invalid_argument("prime must be < 2^20");
  if (!is_prime_u32(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
}

u32 mod_of(i64 a, u32 p) {
  i64 r = a % static_cast<i64>(p);
  if (r < 0) r += p;
  return static_cast<u32>(r);
}

u32 mod_inv(u32 a, u32 p) {
  if (a % p == 0) throw std::invalid_argument("inverse of zero mod p");
  // Fermat: a^(p-2) mod p
  u32 e = p - 2;
  u32 b = a % p, r = 1;
  while (e) {
    if (e & 1) r = mod_mul(r, b, p);
    b = mod_mul(b, b, p);
    e >>= 1;
  }
  return r;
}

Fp::Fp(i64 value, Prime p) : v_(mod_of(value, p.value())), p_(p) {}

Fp Fp::operator+(Fp o) const {
  if (p_ != o.p_) throw std::invalid_argument("Fp prime mismatch");
  return Fp(mod_add(v_, o.v_, p_.value()), p_);
}

Fp Fp::operator-(Fp o) const {
  if (p_ != o.p_) throw std::invalid_argument("Fp prime mismatch");
  return Fp(mod_sub(v_, o.v_, p_.value()), p_);
}

Fp Fp::operator-() const { return Fp(p_.value() - v_, p_); }

Fp Fp::operator*(Fp o) const {
  if (p_ != o.p_) throw std::invalid_argument("Fp prime mismatch");
  return Fp(mod_mul(v_, o.v_, p_.value()), p_);
}

Fp Fp::inv() const { return Fp(mod_inv(v_, p_.value()), p_); }

Fp Fp::pow(u64 e) const {
  Fp r(1, p_), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool Fp::operator==(Fp o) const {
  if (p_ != o.p_) throw std::invalid_argument("Fp prime mismatch");
  return v_ == o.v_;
}

i64 rep_unit(u32 n, Prime p) {
  i64 r = 0, pw = 1;
  for (u32 i = 0; i < n; ++i) {
    r = checked_add(r, pw);
    if (i + 1 < n) pw = checked_mul(pw, p.value());
  }
  return r;
}

i64 alpha(i64 k, Prime p) {
  if (k < 0) throw std::invalid_argument("alpha of negative integer");
  i64 s = 0;
  while (k) {
    s += k % p.value();
    k /= p.value();
  }
  return s;
}

std::vector<u32> base_p_digits(i64 k, Prime p) {
  if (k < 0) throw std::invalid_argument("digits of negative integer");
  std::vector<u32> d;
  while (k) {
    d.push_back(static_cast<u32>(k % p.value()));
    k /= p.value();
  }
  return d;
}

namespace {

// factorials 0!..(p-1)! mod p; arguments here are always < p
u32 small_factorial(u32 n, u32 p) {
  u32 r = 1;
  for (u32 i = 2; i <= n; ++i) r = mod_mul(r, i, p);
  return r;
}

// multinomial (n; k_1, ..., k_s) with all arguments < p, sum k_i <= n
u32 small_multinomial(u32 n, const std::vector<u32>& ks, u32 p) {
  u32 rest = n;
  u32 num = small_factorial(n, p), den = 1;
  for (u32 k : ks) {
    rest -= k;
    den = mod_mul(den, small_factorial(k, p), p);
  }
  den = mod_mul(den, small_factorial(rest, p), p);
  return mod_mul(num, mod_inv(den, p), p);
}

}  // namespace

Fp binom_mod_p(i64 n, i64 k, Prime p) {
  if (n < 0) throw std::invalid_argument("binom_mod_p: n must be non-negative");
  if (k < 0 || k > n) return Fp(0, p);
  return multinom_mod_p(n, {k}, p);
}

Fp multinom_mod_p(i64 n, const std::vector<i64>& parts, Prime p) {
  if (n < 0) throw std::invalid_argument("multinom_mod_p: n must be non-negative");
  i64 sum = 0;
  for (i64 q : parts) {
    if (q < 0) return Fp(0, p);
    sum = checked_add(sum, q);
  }
  if (sum > n) return Fp(0, p);
  const u32 pv = p.value();
  u32 result = 1;
  i64 rem_n = n;
  std::vector<i64> rem(parts);
  while (rem_n > 0) {
    u32 nd = static_cast<u32>(rem_n % pv);
    u32 total = 0;
    std::vector<u32> kd(rem.size());
    for (size_t i = 0; i < rem.size(); ++i) {
      kd[i] = static_cast<u32>(rem[i] % pv);
      total += kd[i];
      rem[i] /= pv;
    }
    if (total > nd) return Fp(0, p);  // a carry would be needed: Lucas vanishing
    result = mod_mul(result, small_multinomial(nd, kd, pv), pv);
    rem_n /= pv;
  }
  return Fp(result, p);
}

}  // namespace steenrod
