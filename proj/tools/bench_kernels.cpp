// Times the production (OpenMP) kernels against the serial reference
// implementations on representative inputs.

#include <chrono>
#include <iostream>
#include <string>

#include "steenrod/action.hpp"
#include "steenrod/kernels.hpp"
#include "steenrod/partition.hpp"

using namespace steenrod;

namespace {

using Clock = std::chrono::steady_clock;

template <class Fn>
double time_ms(Fn&& fn) {
  auto start = Clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void row(const std::string& name, double ref_ms, double prod_ms, bool agree) {
  std::cout << name << "\n  reference: " << ref_ms << " ms\n  production: " << prod_ms
            << " ms  (x" << (prod_ms > 0 ? ref_ms / prod_ms : 0.0) << ")"
            << (agree ? "" : "  MISMATCH") << "\n";
}

}  // namespace

int main() {
  Prime p(3);
  std::cout << "threads: " << kernels::thread_count() << "\n\n";

  {
    Polynomial w4 = vandermonde_w(p, 4, 4);
    Polynomial a = w4 * w4;
    Polynomial r(p, 4), q(p, 4);
    double t_ref = time_ms([&] { r = kernels::ref::mul(a, w4); });
    double t_prod = time_ms([&] { q = kernels::mul(a, w4); });
    row("mul: w(4)^2 * w(4), p=3", t_ref, t_prod, r == q);
  }

  {
    Polynomial f = vandermonde_w(p, 4, 4).pow(2);
    Polynomial r(p, 4), q(p, 4);
    double t_ref = time_ms([&] { r = kernels::ref::total_power(9, f); });
    double t_prod = time_ms([&] { q = kernels::total_power(9, f); });
    row("total_power: P^9 on w(4)^2, p=3", t_ref, t_prod, r == q);
  }

  {
    Partition lambda = Partition::parse("5,3,2");
    Polynomial v = v_polynomial(lambda, p);
    std::vector<i64> R{2, 2};
    Polynomial r(p, 3), q(p, 3);
    double t_ref = time_ms([&] { r = kernels::ref::milnor_apply(R, v); });
    double t_prod = time_ms([&] { q = kernels::milnor_apply(R, v); });
    row("milnor_apply: P(2,2) on v(5,3,2), p=3", t_ref, t_prod, r == q);
  }

  {
    Partition lambda = Partition::parse("6,5,4,3,2");
    Polynomial v = v_polynomial(lambda, p);
    Polynomial a(p, 5), b(p, 5), c(p, 5);
    double t_rec = time_ms([&] { a = apply_hq_recursive(20, v); });
    double t_sum = time_ms([&] { b = apply_hq_milnor_sum(20, v); });
    double t_ser = time_ms([&] { c = apply_hq_milnor_series(20, v); });
    std::cout << "Hq{20} on v(6,5,4,3,2), p=3 (terms: " << c.term_count() << ")\n"
              << "  antipode recursion:  " << t_rec << " ms\n"
              << "  literal Milnor sum:  " << t_sum << " ms\n"
              << "  weight series:       " << t_ser << " ms"
              << (a == b && b == c ? "" : "  MISMATCH") << "\n";
  }

  return 0;
}
