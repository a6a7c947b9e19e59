#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "steenrod/modp.hpp"

using namespace steenrod;

namespace {

// Pascal-triangle oracle: C(n, k) mod p via the addition recurrence only,
// independent of the digitwise production path.
std::vector<std::vector<u32>> pascal_mod(u32 rows, u32 p) {
  std::vector<std::vector<u32>> c(rows + 1);
  for (u32 n = 0; n <= rows; ++n) {
    c[n].assign(n + 1, 0);
    c[n][0] = 1;
    for (u32 k = 1; k <= n; ++k)
      c[n][k] = mod_add(k <= n - 1 ? c[n - 1][k] : 0, c[n - 1][k - 1], p);
  }
  return c;
}

// greedy digit-sum oracle: subtract the largest power of p repeatedly
i64 alpha_oracle(i64 k, u32 p) {
  i64 count = 0;
  while (k > 0) {
    i64 pw = 1;
    while (pw * p <= k) pw *= p;
    k -= pw;
    ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("prime validation") {
  CHECK_NOTHROW(Prime(3));
  CHECK_NOTHROW(Prime(5));
  CHECK_NOTHROW(Prime(524287));  // 2^19 - 1
  CHECK_THROWS_AS(Prime(2), std::invalid_argument);
  CHECK_THROWS_AS(Prime(9), std::invalid_argument);
  CHECK_THROWS_AS(Prime(1), std::invalid_argument);
  CHECK_THROWS_AS(Prime(1048583), std::invalid_argument);  // >= 2^20
}

TEST_CASE("checked arithmetic reports overflow") {
  CHECK(checked_pow(3, 10) == 59049);
  CHECK_THROWS_AS(checked_pow(3, 64), OverflowError);
  CHECK_THROWS_AS(checked_mul(INT64_MAX, 2), OverflowError);
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), OverflowError);
}

TEST_CASE("rep_unit") {
  Prime p3(3);
  CHECK(rep_unit(0, p3) == 0);
  CHECK(rep_unit(2, p3) == 4);
  CHECK(rep_unit(5, p3) == 121);
  Prime p5(5);
  CHECK(rep_unit(3, p5) == 31);
  // p_n - p_j = (p^n - p^j)/(p-1)
  for (u32 pv : {3u, 5u, 7u}) {
    Prime p(pv);
    for (u32 n = 0; n <= 8; ++n)
      for (u32 j = 0; j <= n; ++j)
        CHECK(rep_unit(n, p) - rep_unit(j, p) ==
              (checked_pow(pv, n) - checked_pow(pv, j)) / (pv - 1));
  }
  CHECK_THROWS_AS(rep_unit(50, Prime(65521)), OverflowError);
}

TEST_CASE("alpha digit sums") {
  Prime p3(3);
  CHECK(alpha(0, p3) == 0);
  CHECK(alpha(23, p3) == 5);  // 23 = 212 base 3
  CHECK(alpha(8, p3) == 4);   // 22 base 3
  for (i64 k = 0; k <= 3000; ++k) {
    CHECK(alpha(k, p3) == alpha_oracle(k, 3));
    CHECK(alpha(k, Prime(5)) == alpha_oracle(k, 5));
  }
}

TEST_CASE("alpha properties") {
  std::mt19937_64 rng(11);
  for (u32 pv : {3u, 5u}) {
    Prime p(pv);
    for (int c = 0; c < 500; ++c) {
      i64 a = static_cast<i64>(rng() % 100000), b = static_cast<i64>(rng() % 100000);
      CHECK(alpha(a + b, p) <= alpha(a, p) + alpha(b, p));
      CHECK(alpha(pv * a, p) == alpha(a, p));
      CHECK((alpha(a, p) - a) % (pv - 1) == 0);
    }
  }
}

TEST_CASE("alpha subtraction of p^k (digit positions)") {
  // alpha(R - p^k) >= alpha(R) - 1, equality iff p^k hits a nonzero digit
  for (u32 pv : {3u}) {
    Prime p(pv);
    for (i64 R = 1; R < 729; ++R) {  // exhaustive below p^6
      auto digits = base_p_digits(R, p);
      for (u32 k = 0; checked_pow(pv, k) <= R; ++k) {
        i64 diff = alpha(R - checked_pow(pv, k), p) - alpha(R, p);
        CHECK(diff >= -1);
        bool hits = k < digits.size() && digits[k] != 0;
        CHECK((diff == -1) == hits);
      }
    }
  }
}

TEST_CASE("binomials against the Pascal oracle") {
  for (u32 pv : {3u, 5u}) {
    Prime p(pv);
    auto table = pascal_mod(300, pv);
    for (u32 n = 0; n <= 300; ++n)
      for (u32 k = 0; k <= n; ++k) CHECK(binom_mod_p(n, k, p).value() == table[n][k]);
  }
  // exhaustive up to n = 2000 (single aggregated assertion per prime)
  for (u32 pv : {3u, 5u}) {
    Prime p(pv);
    auto big = pascal_mod(2000, pv);
    i64 mismatches = 0;
    for (u32 n = 0; n <= 2000; ++n)
      for (u32 k = 0; k <= n; ++k)
        if (binom_mod_p(n, k, p).value() != big[n][k]) ++mismatches;
    CHECK(mismatches == 0);
  }
}

TEST_CASE("binomial edge cases") {
  Prime p3(3);
  CHECK(binom_mod_p(8, 4, p3).value() == 1);  // C(8,4) = 70 = 69 + 1
  CHECK(binom_mod_p(17, 0, p3).value() == 1);
  CHECK(binom_mod_p(1, 2, p3).value() == 0);
  CHECK(binom_mod_p(5, -1, p3).value() == 0);
}

TEST_CASE("multinomials") {
  Prime p5(5);
  CHECK(multinom_mod_p(4, {2, 2}, p5).value() == 1);  // 6 mod 5
  CHECK(multinom_mod_p(4, {1, 3}, p5).value() == 4);  // 4!/1!3! = 4
  CHECK(multinom_mod_p(9, {9}, p5).value() == 1);
  CHECK(multinom_mod_p(3, {2, 2}, p5).value() == 0);  // sum exceeds n

  // oracle: multinomial = product of binomials of partial sums
  std::mt19937_64 rng(23);
  for (u32 pv : {3u, 5u}) {
    Prime p(pv);
    for (int c = 0; c < 800; ++c) {
      i64 n = static_cast<i64>(rng() % 200);
      std::vector<i64> parts;
      i64 used = 0;
      for (int i = 0; i < 3; ++i) {
        i64 q = static_cast<i64>(rng() % 40);
        if (used + q > n) break;
        parts.push_back(q);
        used += q;
      }
      Fp expect(1, p);
      i64 prefix = n;
      for (i64 q : parts) {
        expect = expect * binom_mod_p(prefix, q, p);
        prefix -= q;
      }
      CHECK(multinom_mod_p(n, parts, p) == expect);
    }
  }
}

TEST_CASE("Fp arithmetic") {
  Prime p(7);
  Fp a(5, p), b(4, p);
  CHECK((a + b).value() == 2);
  CHECK((a * b).value() == 6);
  CHECK((-a).value() == 2);
  CHECK((a - b).value() == 1);
  CHECK(a.inv() * a == Fp(1, p));
  CHECK(Fp(3, p).pow(6).value() == 1);  // Fermat
  CHECK_THROWS_AS(Fp(0, p).inv(), std::invalid_argument);
  CHECK_THROWS_AS((void)(a + Fp(1, Prime(3))), std::invalid_argument);
}
