#include "steenrod/action.hpp"

#include <cctype>
#include <sstream>

#include "steenrod/kernels.hpp"

namespace steenrod {

Polynomial apply_total_power(i64 i, const Polynomial& f) { return kernels::total_power(i, f); }

Polynomial apply_milnor(const MilnorElement& r, const Polynomial& f) {
  return kernels::milnor_apply(r.entries(), f);
}

Polynomial apply_algebra_element(const AlgebraElement& e, const Polynomial& f) {
  if (e.prime() != f.prime()) throw std::invalid_argument("prime mismatch in action");
  Polynomial acc(f.prime(), f.nvars());
  for (const auto& [r, c] : e.terms())
    acc = acc + apply_milnor(r, f).scale(static_cast<i64>(c));
  return acc;
}

HqTower::HqTower(Polynomial f) { levels_.push_back(std::move(f)); }

const Polynomial& HqTower::at(i64 r) {
  if (r < 0) throw std::invalid_argument("Hq index must be non-negative");
  while (static_cast<i64>(levels_.size()) <= r) {
    i64 j = static_cast<i64>(levels_.size());
    Polynomial acc(levels_[0].prime(), levels_[0].nvars());
    for (i64 i = 1; i <= j; ++i) {
      const Polynomial& lower = levels_[static_cast<size_t>(j - i)];
      if (lower.is_zero()) continue;
      Polynomial term = apply_total_power(i, lower);
      acc = (i % 2 == 1) ? acc + term : acc - term;
    }
    levels_.push_back(std::move(acc));
  }
  return levels_[static_cast<size_t>(r)];
}

Polynomial apply_hq_recursive(i64 r, const Polynomial& f) {
  HqTower tower(f);
  return tower.at(r);
}

Polynomial apply_hq_milnor_sum(i64 r, const Polynomial& f) {
  if (r < 0) throw std::invalid_argument("Hq index must be non-negative");
  i64 degree = checked_mul(r, f.prime().value() - 1);
  Polynomial acc(f.prime(), f.nvars());
  for (const MilnorElement& m : milnor_basis_of_degree(degree, f.prime()))
    acc = acc + apply_milnor(m, f);
  return acc;
}

Polynomial apply_hq_milnor_series(i64 r, const Polynomial& f) {
  return kernels::hq_series(r, f);
}

Polynomial apply_hq(i64 r, const Polynomial& f, HqStrategy strategy) {
  switch (strategy) {
    case HqStrategy::Recursive:
      return apply_hq_recursive(r, f);
    case HqStrategy::MilnorSum:
      return apply_hq_milnor_sum(r, f);
    case HqStrategy::Series:
      break;
  }
  return apply_hq_milnor_series(r, f);
}

std::string OperatorAtom::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::TotalPower:
      os << "P^" << r;
      break;
    case Kind::Milnor:
      os << rs.to_string();
      break;
    case Kind::Hq:
      os << "Hq{" << r << "}";
      break;
    case Kind::ChiP:
      os << "chi(P^" << r << ")";
      break;
  }
  return os.str();
}

namespace {

struct OpCursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("operator parse error at position " + std::to_string(i) + ": " + what);
  }
  bool consume(const std::string& lit) {
    skip_ws();
    if (s.compare(i, lit.size(), lit) == 0) {
      i += lit.size();
      return true;
    }
    return false;
  }
  void expect(const std::string& lit) {
    if (!consume(lit)) fail("expected '" + lit + "'");
  }
  i64 read_int() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("expected integer");
    return std::stoll(s.substr(start, i - start));
  }
};

}  // namespace

OperatorExpression OperatorExpression::parse(const std::string& text) {
  OperatorExpression expr;
  OpCursor c{text};
  while (!c.eof()) {
    OperatorAtom atom;
    if (c.consume("chi(")) {
      c.expect("P^");
      atom.kind = OperatorAtom::Kind::ChiP;
      atom.r = c.read_int();
      c.expect(")");
    } else if (c.consume("Hq{")) {
      atom.kind = OperatorAtom::Kind::Hq;
      atom.r = c.read_int();
      c.expect("}");
    } else if (c.consume("P^")) {
      atom.kind = OperatorAtom::Kind::TotalPower;
      atom.r = c.read_int();
    } else if (c.consume("P(")) {
      atom.kind = OperatorAtom::Kind::Milnor;
      std::vector<i64> rs;
      if (!c.consume(")")) {
        while (true) {
          rs.push_back(c.read_int());
          if (c.consume(")")) break;
          c.expect(",");
        }
      }
      atom.rs = MilnorElement(rs);
    } else {
      c.fail("expected one of P^r, P(...), Hq{r}, chi(P^r)");
    }
    if (atom.r < 0) c.fail("negative operator index");
    expr.atoms.push_back(std::move(atom));
  }
  return expr;
}

std::string OperatorExpression::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < atoms.size(); ++i) {
    if (i) os << " ";
    os << atoms[i].to_string();
  }
  return os.str();
}

Polynomial apply_expression(const OperatorExpression& ops, const Polynomial& f,
                            HqStrategy strategy) {
  Polynomial cur = f;
  for (auto it = ops.atoms.rbegin(); it != ops.atoms.rend(); ++it) {
    switch (it->kind) {
      case OperatorAtom::Kind::TotalPower:
        cur = apply_total_power(it->r, cur);
        break;
      case OperatorAtom::Kind::Milnor:
        cur = apply_milnor(it->rs, cur);
        break;
      case OperatorAtom::Kind::Hq:
        cur = apply_hq(it->r, cur, strategy);
        break;
      case OperatorAtom::Kind::ChiP:
        cur = apply_hq(it->r, cur, strategy).scale(it->r % 2 == 0 ? 1 : -1);
        break;
    }
  }
  return cur;
}

}  // namespace steenrod
