#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "steenrod/kernels.hpp"

using namespace steenrod;

namespace {

Polynomial rand_poly(Prime p, int nvars, int max_terms, u32 max_exp, std::mt19937_64& rng) {
  Polynomial f(p, nvars);
  int terms = 1 + static_cast<int>(rng() % static_cast<u64>(max_terms));
  for (int t = 0; t < terms; ++t) {
    std::vector<u32> e(static_cast<size_t>(nvars));
    for (auto& x : e) x = static_cast<u32>(rng() % (max_exp + 1));
    f = f + Polynomial::monomial(p, nvars, Monomial(e), static_cast<i64>(rng() % p.value()));
  }
  return f;
}

}  // namespace

TEST_CASE("production mul agrees with the serial reference") {
  std::mt19937_64 rng(41);
  for (u32 pv : {3u, 5u}) {
    Prime p(pv);
    for (int c = 0; c < 120; ++c) {
      Polynomial a = rand_poly(p, 4, 10, 12, rng);
      Polynomial b = rand_poly(p, 4, 10, 12, rng);
      CHECK(kernels::mul(a, b) == kernels::ref::mul(a, b));
    }
  }
}

TEST_CASE("production total_power agrees with the serial reference") {
  std::mt19937_64 rng(43);
  for (u32 pv : {3u, 5u}) {
    Prime p(pv);
    for (int c = 0; c < 120; ++c) {
      Polynomial f = rand_poly(p, 3, 5, 20, rng);
      i64 i = static_cast<i64>(rng() % 12);
      CHECK(kernels::total_power(i, f) == kernels::ref::total_power(i, f));
    }
  }
}

TEST_CASE("production milnor_apply agrees with the serial reference") {
  std::mt19937_64 rng(47);
  for (u32 pv : {3u, 5u}) {
    Prime p(pv);
    for (int c = 0; c < 100; ++c) {
      Polynomial f = rand_poly(p, 3, 4, 15, rng);
      std::vector<i64> R;
      size_t len = rng() % 3;
      for (size_t i = 0; i < len; ++i) R.push_back(static_cast<i64>(rng() % 7));
      CHECK(kernels::milnor_apply(R, f) == kernels::ref::milnor_apply(R, f));
    }
  }
}

TEST_CASE("parallel toggle does not change results") {
  std::mt19937_64 rng(53);
  Prime p(3);
  Polynomial a = rand_poly(p, 4, 80, 10, rng);
  Polynomial b = rand_poly(p, 4, 80, 10, rng);
  kernels::set_parallel_enabled(false);
  Polynomial serial = kernels::mul(a, b);
  Polynomial pw_serial = kernels::total_power(5, a);
  kernels::set_parallel_enabled(true);
  CHECK(kernels::mul(a, b) == serial);
  CHECK(kernels::total_power(5, a) == pw_serial);
}

TEST_CASE("kernel edge cases") {
  Prime p(3);
  Polynomial zero(p, 2);
  Polynomial x1 = Polynomial::variable(p, 2, 1);
  CHECK(kernels::mul(zero, x1).is_zero());
  CHECK(kernels::total_power(0, x1) == x1);
  CHECK(kernels::total_power(3, zero).is_zero());
  CHECK(kernels::milnor_apply({}, x1) == x1);
  CHECK(kernels::milnor_apply({0, 0}, x1) == x1);
  CHECK_THROWS_AS(kernels::milnor_apply({-1}, x1), std::invalid_argument);
  CHECK_THROWS_AS(kernels::total_power(-2, x1), std::invalid_argument);
  // P^i on a constant vanishes for i > 0
  CHECK(kernels::total_power(1, Polynomial::constant(p, 2, 2)).is_zero());
}
