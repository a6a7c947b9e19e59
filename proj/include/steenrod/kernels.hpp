#pragma once

#include <vector>

#include "steenrod/poly.hpp"

namespace steenrod::kernels {

/// Hot kernels. OpenMP-parallel over input terms when built with OpenMP and
/// the input is large enough; otherwise they run serially on the same code
/// path. Results are independent of the thread count (F_p addition commutes).

Polynomial mul(const Polynomial& a, const Polynomial& b);

/// P^i f: on a single exponent P^i(x^a) = C(a, i) x^{a + i(p-1)}, extended
/// across variables by the Cartan formula.
Polynomial total_power(i64 i, const Polynomial& f);

/// P(R) f for a raw Milnor index R = (r_1, ..., r_m): on a single exponent
/// P(R)(x^a) = (a; a - sum r_i, r_1, ..., r_m) x^{a + sum (p^i - 1) r_i},
/// extended across variables by splitting R componentwise.
Polynomial milnor_apply(const std::vector<i64>& R, const Polynomial& f);

/// Hq{r} f = sum of P(R) f over all R with |R| = r(p-1), evaluated without
/// enumerating the R: summing over every R makes the variables independent,
/// and the total weight a variable with exponent a contributes at degree
/// raise d is the coefficient of t^d in (sum_i t^{p^i - 1})^a mod p.
Polynomial hq_series(i64 r, const Polynomial& f);

void set_parallel_enabled(bool on);
bool parallel_enabled();
int thread_count();

namespace ref {

/// Serial reference implementations kept for testing: plain loops, no digit
/// pruning, no parallelism. The production kernels must agree with these.

Polynomial mul(const Polynomial& a, const Polynomial& b);
Polynomial total_power(i64 i, const Polynomial& f);
Polynomial milnor_apply(const std::vector<i64>& R, const Polynomial& f);

}  // namespace ref

}  // namespace steenrod::kernels
