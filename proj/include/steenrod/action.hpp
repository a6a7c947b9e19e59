#pragma once

#include <string>
#include <vector>

#include "steenrod/milnor.hpp"
#include "steenrod/poly.hpp"

namespace steenrod {

/// P^i f (Cartan expansion across variables).
Polynomial apply_total_power(i64 i, const Polynomial& f);

/// P(R) f.
Polynomial apply_milnor(const MilnorElement& r, const Polynomial& f);

/// Linear extension of apply_milnor over an element's terms.
Polynomial apply_algebra_element(const AlgebraElement& e, const Polynomial& f);

/// Memoized tower Hq{0}f, Hq{1}f, ..., grown on demand via the recursion
/// Hq{r}f = -sum_{i=1}^{r} (-1)^i P^i (Hq{r-i} f).
class HqTower {
 public:
  explicit HqTower(Polynomial f);
  const Polynomial& at(i64 r);

 private:
  std::vector<Polynomial> levels_;
};

/// Hq{r} f by the antipode recursion (independent checking path).
Polynomial apply_hq_recursive(i64 r, const Polynomial& f);

/// Hq{r} f as the literal sum of P(R) f over all R in degree r(p-1)
/// (second independent checking path).
Polynomial apply_hq_milnor_sum(i64 r, const Polynomial& f);

/// Hq{r} f by the per-variable weight-series evaluation of the same Milnor
/// sum (the production path; see kernels::hq_series). All three routes must
/// agree on every input.
Polynomial apply_hq_milnor_series(i64 r, const Polynomial& f);

enum class HqStrategy { Series, Recursive, MilnorSum };

Polynomial apply_hq(i64 r, const Polynomial& f, HqStrategy strategy = HqStrategy::Series);

/// One operator atom; expressions apply right-to-left.
struct OperatorAtom {
  enum class Kind { TotalPower, Milnor, Hq, ChiP };
  Kind kind;
  i64 r = 0;         // TotalPower / Hq / ChiP
  MilnorElement rs;  // Milnor
  std::string to_string() const;
};

struct OperatorExpression {
  std::vector<OperatorAtom> atoms;

  /// Grammar: whitespace-separated atoms `P^r`, `P(r1,r2,...)`, `Hq{r}`,
  /// `chi(P^r)`; the rightmost atom is applied first.
  static OperatorExpression parse(const std::string& text);
  std::string to_string() const;
};

Polynomial apply_expression(const OperatorExpression& ops, const Polynomial& f,
                            HqStrategy strategy = HqStrategy::Series);

}  // namespace steenrod
