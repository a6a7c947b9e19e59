#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "steenrod/action.hpp"
#include "steenrod/partition.hpp"

using namespace steenrod;

TEST_CASE("parsing and conjugates") {
  Partition lambda = Partition::parse("6,5,4,3,2");
  CHECK(lambda.length() == 5);
  CHECK(lambda.boxes() == 20);
  CHECK(lambda.conjugate() == Partition::parse("5,5,4,3,2,1"));
  CHECK(Partition::parse("5,3,2").conjugate() == Partition::parse("3,3,2,1,1"));
  CHECK(Partition().conjugate() == Partition());
  CHECK_THROWS_AS(Partition::parse("3,5"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("3,0"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("a,b"), std::invalid_argument);
}

TEST_CASE("column regularity and T-regularity") {
  Prime p3(3);
  CHECK(is_column_p_regular(Partition::parse("2,2,2"), p3));
  CHECK(!is_column_p_regular(Partition::parse("5,1"), p3));
  CHECK(is_column_p_regular(Partition::parse("9,6,3"), Prime(5)));

  CHECK(is_t_regular(Partition::parse("5,3,2"), p3));
  CHECK(is_t_regular(Partition::parse("9,6,3"), Prime(5)));
  CHECK(!is_t_regular(Partition::parse("1,1"), p3));
  CHECK(!is_t_regular(Partition::parse("3,3,2"), p3));
  CHECK_THROWS_AS(is_t_regular(Partition::parse("5,1"), p3), std::domain_error);

  // (p-1) kappa is T-regular for column 2-regular kappa
  for (const char* ks : {"3,2,1", "2,2,1", "2,1,1", "1"}) {
    Partition kappa = Partition::parse(ks);
    std::vector<i64> scaled;
    for (i64 x : kappa.parts()) scaled.push_back(2 * x);
    CHECK(is_t_regular(Partition(scaled), p3));
  }

  // block-shape criterion agrees with the band criterion
  for (u32 pv : {3u, 5u}) {
    Prime p(pv);
    for (const Partition& lambda : t_regular_partitions(3, p, 100)) {
      TRegularData data = t_conjugate(lambda, p);
      for (size_t j = 0; j < data.m; ++j) {
        // each block is a rectangle of width p-1 with one possibly-short row
        const Partition& blk = data.blocks[j];
        for (size_t i = 0; i + 1 < blk.length(); ++i)
          CHECK(blk.parts()[i] == static_cast<i64>(pv - 1));
      }
    }
  }
}

TEST_CASE("T-conjugate") {
  Prime p3(3);
  CHECK(t_conjugate(Partition::parse("5,3,2"), p3).gamma == Partition::parse("6,3,1"));
  CHECK(t_conjugate(Partition::parse("6,5,4,3,2"), p3).gamma == Partition::parse("10,7,3"));
  CHECK(t_conjugate(Partition::parse("4,3,1"), p3).gamma == Partition::parse("5,3"));
  CHECK(t_conjugate(Partition::parse("9,6,3"), Prime(5)).gamma == Partition::parse("11,6,1"));

  // bounds: gamma_1 <= n(p-1), gamma_j - gamma_{j+1} >= p-1; boxes preserved
  for (u32 pv : {3u, 5u}) {
    Prime p(pv);
    for (const Partition& lambda : t_regular_partitions(3, p, 150)) {
      TRegularData data = t_conjugate(lambda, p);
      CHECK(data.gamma.part(1) <= static_cast<i64>(lambda.length()) * (pv - 1));
      for (size_t j = 1; j < data.m; ++j)
        CHECK(data.gamma.parts()[j - 1] - data.gamma.parts()[j] >= static_cast<i64>(pv - 1));
      CHECK(data.gamma.boxes() == lambda.boxes());
      // gamma_k = (n_k - 1)(p-1) + b_k
      for (size_t k = 0; k < data.m; ++k) {
        CHECK(data.gamma.parts()[k] == (data.n_k[k] - 1) * (pv - 1) + data.b_k[k]);
        CHECK(data.b_k[k] >= 1);
        CHECK(data.b_k[k] <= static_cast<i64>(pv - 1));
        CHECK(data.n_k[k] == static_cast<i64>(data.blocks[k].length()));
      }
      // gamma via antidiagonal lengths: gamma_s = #antidiagonals of length >= s
      auto spans = antidiagonals(lambda, p);
      for (i64 s = 1; s <= static_cast<i64>(data.m); ++s) {
        i64 count = 0;
        for (const auto& span : spans)
          if (span.length >= s) ++count;
        CHECK(count == data.gamma.parts()[static_cast<size_t>(s - 1)]);
      }
    }
  }
}

TEST_CASE("lambda minus") {
  Prime p3(3);
  CHECK(lambda_minus(Partition::parse("5,3,2"), p3) == Partition::parse("3,1"));
  CHECK(lambda_minus(Partition::parse("2,2"), p3) == Partition());
  // removing block 1 shifts gamma
  for (const Partition& lambda : t_regular_partitions(3, p3, 150)) {
    TRegularData data = t_conjugate(lambda, p3);
    Partition lm = lambda_minus(lambda, p3);
    TRegularData dm = t_conjugate(lm, p3);
    std::vector<i64> tail(data.gamma.parts().begin() + 1, data.gamma.parts().end());
    CHECK(dm.gamma == Partition(tail));
    // d_c(lambda) = gamma_1 + p d_c(lambda^-)
    CHECK(d_c(lambda, p3) == data.gamma.part(1) + 3 * d_c(lm, p3));
  }
}

TEST_CASE("occurrence degrees") {
  Prime p3(3);
  CHECK(d_c(Partition::parse("5,3,2"), p3) == 24);
  CHECK(d_s(Partition::parse("5,3,2"), p3) == 32);
  CHECK(d_c(Partition::parse("6,5,4,3,2"), p3) == 58);
  CHECK(d_s(Partition::parse("6,5,4,3,2"), p3) == 300);
  CHECK(d_c(Partition::parse("2,2,2"), p3) == 6);
  CHECK(d_s(Partition::parse("2,2,2"), p3) == 26);  // (p^n - 1)/(p-1) * (p-1)

  // d_c = deg v and d_s = deg w identities; d_s - d_c = (p-1) sum r_k
  for (u32 pv : {3u, 5u}) {
    Prime p(pv);
    for (const Partition& lambda : t_regular_partitions(3, p, 120)) {
      CHECK(v_polynomial(lambda, p).degree() == d_c(lambda, p));
      CHECK(w_conjugate_polynomial(lambda, p).degree() == d_s(lambda, p));
      RSequence rs = tab_r_sequence(lambda, p);
      i64 sum = 0;
      for (i64 rk : rs.r) sum += rk;
      CHECK(d_s(lambda, p) - d_c(lambda, p) == static_cast<i64>(pv - 1) * sum);
    }
  }
}

TEST_CASE("antidiagonals and their removal") {
  Prime p3(3);
  // rectangle: all antidiagonals are singletons
  auto spans = antidiagonals(Partition::parse("2,2,2"), p3);
  CHECK(spans.size() == 6);
  for (const auto& s : spans) CHECK(s.length == 1);

  // Eq-style recursion: removing the last antidiagonal
  for (const Partition& lambda : t_regular_partitions(3, p3, 150)) {
    auto sp = antidiagonals(lambda, p3);
    i64 s = sp.back().length;
    Partition mu = remove_last_antidiagonal(lambda, p3);
    CHECK(is_t_regular(mu, p3));
    CHECK(d_c(lambda, p3) == d_c(mu, p3) + rep_unit(static_cast<u32>(s), p3));
    CHECK(d_c(lambda_minus(lambda, p3), p3) ==
          d_c(lambda_minus(mu, p3), p3) + rep_unit(static_cast<u32>(s - 1), p3));
  }
}

TEST_CASE("v polynomial") {
  Prime p5(5);
  Partition lambda = Partition::parse("9,6,3");
  Polynomial v = v_polynomial(lambda, p5);
  Polynomial expect = Polynomial::variable(p5, 3, 1).pow(4) *
                      vandermonde(p5, 3, {1, 2}, {1, 5}).pow(4) *
                      vandermonde(p5, 3, {1, 2, 3}, {1, 5, 25}) *
                      vandermonde(p5, 3, {2, 3}, {1, 5}) * Polynomial::variable(p5, 3, 3);
  CHECK(v == expect);

  Prime p3(3);
  // rectangle gives the full truncated monomial
  CHECK(v_polynomial(Partition::parse("2,2,2"), p3) ==
        Polynomial::parse("x1^2*x2^2*x3^2", p3, 3));
  // (5,3,2): x1^2 [x1,x2^3]^2 [x1,x2^3,x3^9] x3
  Polynomial v532 = v_polynomial(Partition::parse("5,3,2"), p3);
  Polynomial e532 = Polynomial::variable(p3, 3, 1).pow(2) *
                    vandermonde(p3, 3, {1, 2}, {1, 3}).pow(2) *
                    vandermonde(p3, 3, {1, 2, 3}, {1, 3, 9}) * Polynomial::variable(p3, 3, 3);
  CHECK(v532 == e532);
  // the degree-300 example source
  Polynomial v65432 = v_polynomial(Partition::parse("6,5,4,3,2"), p3);
  Polynomial e65432 = Polynomial::variable(p3, 5, 1).pow(2) *
                      vandermonde(p3, 5, {1, 2}, {1, 3}).pow(2) *
                      vandermonde(p3, 5, {1, 2, 3}, {1, 3, 9}).pow(2) *
                      vandermonde(p3, 5, {2, 3, 4}, {1, 3, 9}) *
                      vandermonde(p3, 5, {3, 4}, {1, 3}) * vandermonde(p3, 5, {4, 5}, {1, 3}) *
                      Polynomial::variable(p3, 5, 5);
  CHECK(v65432 == e65432);
}

TEST_CASE("spike monomial") {
  Prime p5(5);
  auto [s1, sign1] = s_monomial(Partition::parse("9,6,3"), p5);
  CHECK(s1 == Monomial(std::vector<u32>{49, 14, 3}));
  CHECK(sign1 == 1);

  Prime p3(3);
  auto [s2, sign2] = s_monomial(Partition::parse("6,6,4,4,2"), p3);
  CHECK(s2 == Monomial(std::vector<u32>{26, 26, 8, 8, 2}));

  // s is the left-lex leading monomial of v with coefficient (-1)^epsilon
  for (u32 pv : {3u, 5u}) {
    Prime p(pv);
    for (const Partition& lambda : t_regular_partitions(3, p, 120)) {
      Polynomial v = v_polynomial(lambda, p);
      auto [sm, sg] = s_monomial(lambda, p);
      auto [lead, coeff] = leading_monomial(v);
      CHECK(lead == sm);
      CHECK(coeff == Fp(sg, p));
      CHECK(is_spike(sm, p));
      // omega of the spike is the T-conjugate
      CHECK(omega_vector(sm, p) ==
            OmegaVector(std::vector<i64>(t_conjugate(lambda, p).gamma.parts())));
      // s(lambda) = v(block_1) v(block_2)^p ... as monomials
      TRegularData data = t_conjugate(lambda, p);
      Polynomial prod = Polynomial::constant(p, static_cast<int>(lambda.length()), 1);
      for (size_t j = 0; j < data.m; ++j)
        prod = prod * v_polynomial(data.blocks[j], p, static_cast<int>(lambda.length()))
                          .frobenius_power(static_cast<u32>(j));
      CHECK(prod == Polynomial::monomial(p, static_cast<int>(lambda.length()), sm, 1));
    }
  }
}

TEST_CASE("w and p' polynomials") {
  Prime p3(3);
  // w(lambda') for the rectangle is w(n)^{p-1}
  CHECK(w_conjugate_polynomial(Partition::parse("2,2,2"), p3) ==
        vandermonde_w(p3, 3, 3).pow(2));
  CHECK(w_conjugate_polynomial(Partition::parse("5,3,2"), p3).degree() == 32);

  // p(lambda') for (4,3,1): w(3) w(2) (w(2) w(1))^3
  Polynomial pp = p_prime_polynomial(Partition::parse("4,3,1"), p3);
  Polynomial expect = vandermonde_w(p3, 3, 3) * vandermonde_w(p3, 3, 2).pow(4) *
                      Polynomial::variable(p3, 3, 1).pow(3);
  CHECK(pp == expect);

  // single block: p(lambda') = w(lambda')
  CHECK(p_prime_polynomial(Partition::parse("2,1"), p3) ==
        w_conjugate_polynomial(Partition::parse("2,1"), p3));

  // degree of p(lambda') is sum p^{j-1} d_s(block_j)
  for (const Partition& lambda : t_regular_partitions(3, p3, 150)) {
    TRegularData data = t_conjugate(lambda, p3);
    i64 expect_deg = 0;
    for (size_t j = 0; j < data.m; ++j)
      expect_deg += checked_pow(3, static_cast<u32>(j)) * d_s(data.blocks[j], p3);
    CHECK(p_prime_polynomial(lambda, p3).degree() == expect_deg);
  }
}

TEST_CASE("tableau r-sequence") {
  Prime p3(3);
  RSequence r65432 = tab_r_sequence(Partition::parse("6,5,4,3,2"), p3);
  CHECK(r65432.r == std::vector<i64>{100, 20, 1});
  std::vector<std::vector<i64>> tab{{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1}, {0, 0, 3, 4},
                                    {9, 12, 13},        {39, 40}};
  CHECK(r65432.tableau == tab);

  CHECK(tab_r_sequence(Partition::parse("5,3,2"), p3).r == std::vector<i64>{4, 0, 0});

  // single block: r_1 = (b+1) p_{n-1} - (n-1)
  for (u32 pv : {3u, 5u}) {
    Prime p(pv);
    for (i64 n = 1; n <= 3; ++n)
      for (i64 b = 1; b <= static_cast<i64>(pv - 1); ++b) {
        std::vector<i64> parts(static_cast<size_t>(n), pv - 1);
        parts.back() = b;
        RSequence rs = tab_r_sequence(Partition(parts), p);
        CHECK(rs.r.size() == 1);
        CHECK(rs.r[0] == (b + 1) * rep_unit(static_cast<u32>(n - 1), p) - (n - 1));
      }
    // r_2(lambda) = r_1(lambda^-)
    for (const Partition& lambda : t_regular_partitions(3, p, 150)) {
      RSequence rs = tab_r_sequence(lambda, p);
      Partition lm = lambda_minus(lambda, p);
      if (lm.empty()) {
        CHECK(rs.r.size() == 1);
        continue;
      }
      RSequence rm = tab_r_sequence(lm, p);
      REQUIRE(rs.r.size() == rm.r.size() + 1);
      for (size_t i = 0; i < rm.r.size(); ++i) CHECK(rs.r[i + 1] == rm.r[i]);
    }
  }
}

TEST_CASE("milnor spikes") {
  Prime p3(3);
  CHECK(milnor_spike(Partition::parse("4,3,1"), p3) == MilnorElement({8, 5, 1}));
  CHECK(milnor_spike(Partition::parse("5,3"), p3) == MilnorElement({17, 5}));
  CHECK(milnor_spike(Partition::parse("2,2,2"), p3) == MilnorElement({2, 2, 2}));

  // omega(R) equals the T-conjugate, and the spike exponents match s(lambda)
  for (u32 pv : {3u, 5u}) {
    Prime p(pv);
    for (const Partition& lambda : t_regular_partitions(3, p, 120)) {
      MilnorElement R = milnor_spike(lambda, p);
      TRegularData data = t_conjugate(lambda, p);
      CHECK(omega_of_sequence(R.entries(), p) ==
            OmegaVector(std::vector<i64>(data.gamma.parts())));
      auto [sm, sg] = s_monomial(lambda, p);
      for (size_t i = 0; i < lambda.length(); ++i)
        CHECK(static_cast<i64>(sm.exps()[i]) == R.entries()[i]);
      // a Milnor spike names an admissible word under the index bijection
      AdmissibleWord w = milnor_to_admissible_index(R, p);
      CHECK(w.is_admissible(p));
      // and the word expands to exactly P(R)
      CHECK(admissible_to_milnor(w, p) == AlgebraElement::single(R, 1, p));
    }
  }
}

TEST_CASE("R(r, lambda)") {
  Prime p3(3);
  for (const Partition& lambda : t_regular_partitions(3, p3, 150)) {
    TRegularData data = t_conjugate(lambda, p3);
    i64 n = static_cast<i64>(lambda.length());
    i64 b = data.b_k[0];

    // R(0, lambda) = d_c(lambda) - d_c(lambda^-)
    CHECK(R_of(0, lambda, p3) ==
          d_c(lambda, p3) - d_c(lambda_minus(lambda, p3), p3));

    // at r = r_1 the value is b p^{n-1} + (p^{n-1} - 1) with alpha = gamma_1
    i64 r1 = tab_r_sequence(lambda, p3).r[0];
    i64 R1 = R_of(r1, lambda, p3);
    CHECK(R1 == b * checked_pow(3, static_cast<u32>(n - 1)) +
                    checked_pow(3, static_cast<u32>(n - 1)) - 1);
    CHECK(alpha(R1, p3) == data.gamma.part(1));

    // lemma: R(r - p_k + p_{s-1}, mu) = R(r, lambda) - p^k
    auto spans = antidiagonals(lambda, p3);
    i64 s = spans.back().length;
    Partition mu = remove_last_antidiagonal(lambda, p3);
    for (i64 r = 1; r <= 20; ++r)
      for (u32 k = 0; k <= 3; ++k) {
        i64 shifted = r - rep_unit(k, p3) + rep_unit(static_cast<u32>(s - 1), p3);
        if (shifted < 0) continue;
        CHECK(R_of(shifted, mu, p3) == R_of(r, lambda, p3) - checked_pow(3, k));
      }
  }
}

TEST_CASE("t_regular_partitions enumeration") {
  Prime p3(3);
  auto all = t_regular_partitions(3, p3, 200);
  // contains the worked examples of the appropriate size
  auto has = [&](const char* s) {
    Partition q = Partition::parse(s);
    for (const auto& x : all)
      if (x == q) return true;
    return false;
  };
  CHECK(has("2"));
  CHECK(has("2,2,2"));
  CHECK(has("5,3,2"));
  CHECK(has("4,3,1"));
  CHECK(!has("1,1"));      // not T-regular
  CHECK(!has("6,5,4,3"));  // length 4 exceeds the bound
  for (const auto& lambda : all) {
    CHECK(lambda.length() <= 3);
    CHECK(d_s(lambda, p3) <= 200);
    CHECK(is_t_regular(lambda, p3));
  }
}
