#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "steenrod/milnor.hpp"

using namespace steenrod;

namespace {

MilnorElement rect_spike(i64 n, i64 b, u32 p) {
  std::vector<i64> r(static_cast<size_t>(n), p - 1);
  r[static_cast<size_t>(n - 1)] = b;
  return MilnorElement(r);
}

MilnorElement rand_element(std::mt19937_64& rng, i64 max_entry, size_t max_len) {
  std::vector<i64> r(rng() % (max_len + 1));
  for (auto& x : r) x = static_cast<i64>(rng() % static_cast<u64>(max_entry + 1));
  return MilnorElement(r);
}

}  // namespace

TEST_CASE("degree and excess") {
  Prime p(3);
  CHECK(MilnorElement({2, 2, 1}).degree(p) == 46);
  CHECK(MilnorElement({2, 2, 1}).excess() == 5);
  CHECK(MilnorElement().degree(p) == 0);
  CHECK(MilnorElement().excess() == 0);
  CHECK(MilnorElement({0, 1}).degree(p) == 8);

  AdmissibleWord w({32, 8, 1});
  CHECK(w.is_admissible(p));
  CHECK(w.excess(p) == 14);
  CHECK(w.degree(p) == 82);
  CHECK(MilnorElement({8, 5, 1}).excess() == 14);
  CHECK(!AdmissibleWord({3, 2}).is_admissible(p));
}

TEST_CASE("p divides |R| + e(R)") {
  std::mt19937_64 rng(3);
  for (u32 pv : {3u, 5u}) {
    Prime p(pv);
    for (int c = 0; c < 400; ++c) {
      MilnorElement r = rand_element(rng, 50, 4);
      CHECK((r.degree(p) + r.excess()) % pv == 0);
    }
  }
}

TEST_CASE("index bijection") {
  Prime p(3);
  CHECK(milnor_to_admissible_index(MilnorElement({8, 5, 1}), p) == AdmissibleWord({32, 8, 1}));
  CHECK(milnor_to_admissible_index(MilnorElement({17, 5}), p) == AdmissibleWord({32, 5}));
  CHECK(milnor_to_admissible_index(MilnorElement({7}), p) == AdmissibleWord({7}));

  // round trip, degree and excess preservation: entries < p^4, length <= 4
  std::mt19937_64 rng(13);
  for (u32 pv : {3u, 5u}) {
    Prime q(pv);
    i64 bound = checked_pow(pv, 4) - 1;
    for (int c = 0; c < 500; ++c) {
      MilnorElement r = rand_element(rng, bound, 4);
      AdmissibleWord w = milnor_to_admissible_index(r, q);
      CHECK(w.is_admissible(q));
      CHECK(admissible_to_milnor_index(w, q) == r);
      CHECK(w.degree(q) == r.degree(q));
      CHECK(w.excess(q) == r.excess());
    }
  }
}

TEST_CASE("milnor product: unit, degree, small values") {
  Prime p(3);
  AlgebraElement unit = AlgebraElement::unit(p);
  MilnorElement t({4, 2});
  AlgebraElement pt = AlgebraElement::single(t, 1, p);
  CHECK(pt * unit == pt);
  CHECK(unit * pt == pt);

  // P(1) P(1) = 2 P(2) at p = 3
  AlgebraElement p1 = AlgebraElement::single(MilnorElement({1}), 1, p);
  CHECK(p1 * p1 == AlgebraElement::single(MilnorElement({2}), 2, p));

  // degree additivity on random homogeneous elements
  std::mt19937_64 rng(19);
  for (int c = 0; c < 200; ++c) {
    MilnorElement a = rand_element(rng, 6, 3);
    MilnorElement b = rand_element(rng, 6, 3);
    AlgebraElement prod = milnor_product(a, b, p);
    if (!prod.is_zero()) CHECK(prod.degree() == a.degree(p) + b.degree(p));
  }
}

TEST_CASE("milnor product: the shifted-entry matrix gives coefficient 1") {
  // P^{p^j (p-1)} P(r_1, ..., r_{j-1}, p-1, 0, p-1, ...) contains
  // P(r_1, ..., r_{j-1}, 0, p-1, p-1, ...) with coefficient 1
  for (u32 pv : {3u, 5u}) {
    Prime p(pv);
    const i64 q = pv - 1;
    for (i64 j = 1; j <= 2; ++j) {
      std::vector<i64> rprime, target;
      for (i64 i = 1; i < j; ++i) {
        rprime.push_back(1);
        target.push_back(1);
      }
      rprime.push_back(q);
      rprime.push_back(0);
      rprime.push_back(q);
      target.push_back(0);
      target.push_back(q);
      target.push_back(q);
      AlgebraElement left =
          AlgebraElement::single(MilnorElement::power(checked_pow(pv, static_cast<u32>(j)) * q), 1, p);
      AlgebraElement prod = left * AlgebraElement::single(MilnorElement(rprime), 1, p);
      CHECK(prod.coefficient(MilnorElement(target)).value() == 1);
    }
  }
}

TEST_CASE("milnor product associativity") {
  std::mt19937_64 rng(29);
  Prime p(3);
  int done = 0;
  while (done < 60) {
    MilnorElement a = rand_element(rng, 4, 2);
    MilnorElement b = rand_element(rng, 4, 2);
    MilnorElement c = rand_element(rng, 4, 2);
    if (a.degree(p) + b.degree(p) + c.degree(p) > 60) continue;
    ++done;
    AlgebraElement ea = AlgebraElement::single(a, 1, p);
    AlgebraElement eb = AlgebraElement::single(b, 1, p);
    AlgebraElement ec = AlgebraElement::single(c, 1, p);
    CHECK((ea * eb) * ec == ea * (eb * ec));
  }
}

TEST_CASE("basis enumeration and chi expansion") {
  Prime p(3);
  // degree 8: solutions of 2 r1 + 8 r2 = 8
  AlgebraElement hq4 = chi_expansion(4, p);
  AlgebraElement expect = AlgebraElement::single(MilnorElement({4}), 1, p) +
                          AlgebraElement::single(MilnorElement({0, 1}), 1, p);
  CHECK(hq4 == expect);

  CHECK(chi_expansion(0, p) == AlgebraElement::unit(p));
  CHECK(chi_expansion(1, p) == AlgebraElement::single(MilnorElement({1}), 1, p));

  // brute-force oracle for the enumeration at several degrees
  std::mt19937_64 rng(31);
  for (u32 pv : {3u, 5u}) {
    Prime q(pv);
    for (i64 D : {0, 2, 8, 16, 40, 60}) {
      if (D % (pv - 1)) continue;
      const auto& basis = milnor_basis_of_degree(D, q);
      i64 count = 0;  // enumerate r1, r2, r3 ranges directly
      i64 w1 = pv - 1, w2 = pv * pv - 1, w3 = pv * pv * pv - 1;
      for (i64 r3 = 0; r3 * w3 <= D; ++r3)
        for (i64 r2 = 0; r3 * w3 + r2 * w2 <= D; ++r2)
          for (i64 r1 = 0; r3 * w3 + r2 * w2 + r1 * w1 <= D; ++r1)
            if (r1 * w1 + r2 * w2 + r3 * w3 == D) ++count;
      CHECK(static_cast<i64>(basis.size()) == count);
      for (const auto& r : basis) CHECK(r.degree(q) == D);
    }
    (void)rng;
  }
}

TEST_CASE("chi sign accessor") {
  Prime p(3);
  CHECK(chi_of_power(4, p) == chi_expansion(4, p));
  CHECK(chi_of_power(5, p) == chi_expansion(5, p).scale(-1));
}

TEST_CASE("minimal and maximal excess in degree ((b+1)p_n - n)(p-1)") {
  for (u32 pv : {3u}) {
    Prime p(pv);
    for (i64 n = 1; n <= 3; ++n) {
      for (i64 b = 1; b <= 2; ++b) {
        i64 d = (b + 1) * rep_unit(static_cast<u32>(n), p) - n;
        const auto& basis = milnor_basis_of_degree(d * (pv - 1), p);
        MilnorElement min_elt, max_elt;
        i64 min_e = INT64_MAX, max_e = -1;
        int min_count = 0, max_count = 0;
        for (const auto& r : basis) {
          if (r.excess() < min_e) {
            min_e = r.excess();
            min_elt = r;
            min_count = 1;
          } else if (r.excess() == min_e) {
            ++min_count;
          }
          if (r.excess() > max_e) {
            max_e = r.excess();
            max_elt = r;
            max_count = 1;
          } else if (r.excess() == max_e) {
            ++max_count;
          }
        }
        CHECK(min_count == 1);
        CHECK(max_count == 1);
        CHECK(min_elt == rect_spike(n, b, pv));
        CHECK(max_elt == MilnorElement::power(d));
      }
    }
  }
}

TEST_CASE("operator recursion on expansions") {
  // sum_{i+j=r} (-1)^i P(i) Hq{j} = 0 for r >= 1; equivalently the antipode
  // convolution sum_{i+j=r} P^i chi(P^j) = 0
  for (u32 pv : {3u}) {
    Prime p(pv);
    for (i64 r = 1; r <= 12; ++r) {
      AlgebraElement total(p);
      AlgebraElement total_chi(p);
      for (i64 i = 0; i <= r; ++i) {
        i64 j = r - i;
        AlgebraElement term =
            AlgebraElement::single(MilnorElement::power(i), 1, p) * chi_expansion(j, p);
        total = total + term.scale(i % 2 == 0 ? 1 : -1);
        total_chi = total_chi + term.scale(j % 2 == 0 ? 1 : -1);  // term * (-1)^j = P^i chi(P^j)
      }
      CHECK(total.is_zero());
      CHECK(total_chi.is_zero());
    }
  }
}

TEST_CASE("davis expansion") {
  Prime p(3);
  // cross-check against the product route for all u + v <= 12
  for (i64 u = 1; u <= 12; ++u)
    for (i64 v = 0; u + v <= 12; ++v) {
      AlgebraElement lhs = davis_expansion(u, v, p);
      AlgebraElement rhs =
          AlgebraElement::single(MilnorElement::power(u), 1, p) * chi_expansion(v, p);
      CHECK(lhs == rhs);
    }

  // the proof's family: P^u Hq{v} is the full degree sum minus the unique
  // minimal-excess element, and that element's binomial vanishes
  for (i64 n = 2; n <= 3; ++n)
    for (i64 b = 1; b <= 2; ++b) {
      i64 u = (b + 1) * checked_pow(3, static_cast<u32>(n - 1));
      i64 v = (b + 1) * rep_unit(static_cast<u32>(n - 1), p) - n;
      REQUIRE(v >= 0);
      AlgebraElement got = davis_expansion(u, v, p);
      MilnorElement omitted = rect_spike(n, b, 3);
      AlgebraElement expect =
          chi_expansion(u + v, p) - AlgebraElement::single(omitted, 1, p);
      CHECK(got == expect);
      CHECK(got.coefficient(omitted).is_zero());
      CHECK(omitted.degree(p) + omitted.excess() == 3 * u - 3);
    }
}

TEST_CASE("inhomogeneous sums are allowed but have no degree") {
  Prime p(3);
  AlgebraElement mixed = AlgebraElement::single(MilnorElement({1}), 1, p) +
                         AlgebraElement::single(MilnorElement({2}), 1, p);
  CHECK(!mixed.is_homogeneous());
  CHECK_THROWS_AS(mixed.degree(), std::invalid_argument);
}

TEST_CASE("element serialization") {
  Prime p(3);
  AlgebraElement e = chi_expansion(4, p);
  CHECK(e.to_string() == "P(4) + P(0,1)");
  CHECK(AlgebraElement(p).to_string() == "0");
  CHECK(AlgebraElement::single(MilnorElement({2}), 2, p).to_string() == "2*P(2)");
  CHECK(AlgebraElement::unit(p).to_string() == "P()");
}
