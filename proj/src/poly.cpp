#include "steenrod/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "steenrod/kernels.hpp"

namespace steenrod {

Monomial::Monomial(std::vector<u32> exps) : e_(std::move(exps)) {
  if (e_.size() > static_cast<size_t>(kMaxVars))
    throw std::invalid_argument("too many variables (limit " + std::to_string(kMaxVars) + ")");
  for (u32 x : e_)
    if (x >= kMaxExponent) throw std::invalid_argument("exponent too large");
}

Monomial Monomial::one(int nvars) { return Monomial(std::vector<u32>(static_cast<size_t>(nvars), 0)); }

i64 Monomial::degree() const {
  i64 d = 0;
  for (u32 x : e_) d += x;
  return d;
}

size_t MonomialHash::operator()(const Monomial& m) const {
  size_t h = 1469598103934665603ull;
  for (u32 x : m.exps()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

Polynomial::Polynomial(Prime p, int nvars) : p_(p), nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("nvars out of range");
}

Polynomial Polynomial::constant(Prime p, int nvars, i64 c) {
  Polynomial f(p, nvars);
  u32 cv = mod_of(c, p.value());
  if (cv != 0) f.terms_.push_back({Monomial::one(nvars), cv});
  return f;
}

Polynomial Polynomial::variable(Prime p, int nvars, int var1) {
  if (var1 < 1 || var1 > nvars) throw std::invalid_argument("variable index out of range");
  std::vector<u32> e(static_cast<size_t>(nvars), 0);
  e[static_cast<size_t>(var1 - 1)] = 1;
  Polynomial f(p, nvars);
  f.terms_.push_back({Monomial(std::move(e)), 1});
  return f;
}

Polynomial Polynomial::monomial(Prime p, int nvars, const Monomial& m, i64 c) {
  if (m.nvars() != nvars) throw std::invalid_argument("monomial width mismatch");
  Polynomial f(p, nvars);
  u32 cv = mod_of(c, p.value());
  if (cv != 0) f.terms_.push_back({m, cv});
  return f;
}

Polynomial Polynomial::linear_form(Prime p, int nvars, const std::vector<i64>& coeffs) {
  if (coeffs.size() > static_cast<size_t>(nvars)) throw std::invalid_argument("too many coefficients");
  Polynomial f(p, nvars);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    u32 cv = mod_of(coeffs[i], p.value());
    if (cv == 0) continue;
    std::vector<u32> e(static_cast<size_t>(nvars), 0);
    e[i] = 1;
    f.terms_.push_back({Monomial(std::move(e)), cv});
  }
  std::sort(f.terms_.begin(), f.terms_.end(),
            [](const Term& a, const Term& b) { return a.m > b.m; });
  return f;
}

Polynomial Polynomial::from_sorted_terms(Prime p, int nvars, std::vector<Term> terms) {
  Polynomial f(p, nvars);
  f.terms_ = std::move(terms);
  return f;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  i64 d = terms_.front().m.degree();
  for (const Term& t : terms_)
    if (t.m.degree() != d) return false;
  return true;
}

i64 Polynomial::degree() const {
  if (terms_.empty()) throw std::invalid_argument("degree of zero polynomial");
  if (!is_homogeneous()) throw std::invalid_argument("degree of inhomogeneous polynomial");
  return terms_.front().m.degree();
}

namespace {

void check_compatible(const Polynomial& a, const Polynomial& b) {
  if (a.prime() != b.prime()) throw std::invalid_argument("polynomial prime mismatch");
  if (a.nvars() != b.nvars()) throw std::invalid_argument("polynomial nvars mismatch");
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(*this, o);
  const u32 p = p_.value();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    if (terms_[i].m > o.terms_[j].m) {
      out.push_back(terms_[i++]);
    } else if (o.terms_[j].m > terms_[i].m) {
      out.push_back(o.terms_[j++]);
    } else {
      u32 c = mod_add(terms_[i].c, o.terms_[j].c, p);
      if (c != 0) out.push_back({terms_[i].m, c});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  return from_sorted_terms(p_, nvars_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o.scale(-1); }

Polynomial Polynomial::scale(i64 c) const {
  const u32 p = p_.value();
  u32 cv = mod_of(c, p);
  Polynomial f(p_, nvars_);
  if (cv == 0) return f;
  f.terms_ = terms_;
  for (Term& t : f.terms_) t.c = mod_mul(t.c, cv, p);
  return f;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(*this, o);
  return kernels::mul(*this, o);
}

Polynomial Polynomial::pow(u64 e) const {
  Polynomial r = constant(p_, nvars_, 1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Polynomial Polynomial::frobenius_power(u32 e) const {
  i64 q = checked_pow(p_.value(), e);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    std::vector<u32> ex = t.m.exps();
    for (u32& x : ex) x = static_cast<u32>(checked_mul(x, q));
    out.push_back({Monomial(std::move(ex)), t.c});
  }
  // exponent scaling preserves the left-lex order
  return from_sorted_terms(p_, nvars_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& o) const {
  check_compatible(*this, o);
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].c != o.terms_[i].c || terms_[i].m != o.terms_[i].m) return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const Term& t : terms_) {
    if (!first_term) os << " + ";
    first_term = false;
    bool has_var = t.m.degree() > 0;
    bool wrote = false;
    if (t.c != 1 || !has_var) {
      os << t.c;
      wrote = true;
    }
    for (int v = 1; v <= nvars_; ++v) {
      u32 x = t.m.exp(v);
      if (x == 0) continue;
      if (wrote) os << "*";
      os << "x" << v;
      if (x > 1) os << "^" << x;
      wrote = true;
    }
  }
  return os.str();
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("polynomial parse error at position " + std::to_string(i) + ": " + what);
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

Polynomial Polynomial::parse(const std::string& text, Prime p, int nvars) {
  Cursor c{text};
  Polynomial result(p, nvars);
  if (c.eof()) c.fail("empty input");
  if (c.peek() == '0') {
    size_t save = c.i;
    ++c.i;
    if (c.eof()) return result;
    c.i = save;  // something like "0 + ..." is not in the grammar
  }
  while (true) {
    // one term: factors separated by '*'
    i64 coeff = 1;
    std::vector<u32> exps(static_cast<size_t>(nvars), 0);
    bool done_term = false;
    while (!done_term) {
      char ch = c.peek();
      if (ch == 'x') {
        ++c.i;
        i64 idx = c.read_int();
        if (idx < 1 || idx > nvars) c.fail("variable index out of range");
        i64 e = 1;
        if (c.peek() == '^') {
          ++c.i;
          e = c.read_int();
        }
        i64 cur = exps[static_cast<size_t>(idx - 1)] + e;
        if (cur >= kMaxExponent) c.fail("exponent too large");
        exps[static_cast<size_t>(idx - 1)] = static_cast<u32>(cur);
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        coeff = checked_mul(coeff, c.read_int());
      } else {
        c.fail("expected coefficient or variable");
      }
      if (c.peek() == '*') {
        ++c.i;
      } else {
        done_term = true;
      }
    }
    result = result + Polynomial::monomial(p, nvars, Monomial(std::move(exps)), coeff);
    if (c.eof()) break;
    if (c.peek() != '+') c.fail("expected '+'");
    ++c.i;
    if (c.eof()) c.fail("trailing '+'");
  }
  return result;
}

namespace {

bool is_power_of(i64 e, u32 p) {
  if (e < 1) return false;
  while (e % p == 0) e /= p;
  return e == 1;
}

}  // namespace

Polynomial vandermonde(Prime p, int nvars, const std::vector<int>& var_indices,
                       const std::vector<i64>& exponents) {
  const size_t k = var_indices.size();
  if (k == 0 || k != exponents.size())
    throw std::invalid_argument("vandermonde: index and exponent lists must have equal positive length");
  for (int idx : var_indices)
    if (idx < 1 || idx > nvars) throw std::invalid_argument("vandermonde: variable index out of range");
  for (i64 e : exponents)
    if (!is_power_of(e, p.value())) throw std::invalid_argument("vandermonde: exponents must be powers of p");

  // repeated variable index: determinant with equal columns
  for (size_t a = 0; a < k; ++a)
    for (size_t b = a + 1; b < k; ++b)
      if (var_indices[a] == var_indices[b]) return Polynomial(p, nvars);

  // Leibniz expansion; k is small throughout this engine
  std::vector<size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial result(p, nvars);
  std::vector<Polynomial::Term> terms;
  do {
    // sign of the permutation
    int inversions = 0;
    for (size_t a = 0; a < k; ++a)
      for (size_t b = a + 1; b < k; ++b)
        if (perm[a] > perm[b]) ++inversions;
    std::vector<u32> exps(static_cast<size_t>(nvars), 0);
    bool ok = true;
    for (size_t col = 0; col < k && ok; ++col) {
      i64 e = exponents[perm[col]];
      if (e >= kMaxExponent) ok = false;
      exps[static_cast<size_t>(var_indices[col] - 1)] = static_cast<u32>(e);
    }
    if (!ok) throw std::invalid_argument("vandermonde: exponent too large");
    i64 c = (inversions % 2 == 0) ? 1 : -1;
    result = result + Polynomial::monomial(p, nvars, Monomial(std::move(exps)), c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

Polynomial vandermonde_w(Prime p, int nvars, int n) {
  if (n == 0) return Polynomial::constant(p, nvars, 1);
  std::vector<int> idx(static_cast<size_t>(n));
  std::vector<i64> exps(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    idx[static_cast<size_t>(i)] = i + 1;
    exps[static_cast<size_t>(i)] = checked_pow(p.value(), static_cast<u32>(i));
  }
  return vandermonde(p, nvars, idx, exps);
}

Polynomial vandermonde_w_skip(Prime p, int nvars, int n, int a) {
  if (a < 0 || a > n) throw std::invalid_argument("vandermonde_w_skip: need 0 <= a <= n");
  if (n == 0) return Polynomial::constant(p, nvars, 1);
  std::vector<int> idx(static_cast<size_t>(n));
  std::vector<i64> exps(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    idx[static_cast<size_t>(i)] = i + 1;
    u32 e = static_cast<u32>(i < a ? i : i + 1);
    exps[static_cast<size_t>(i)] = checked_pow(p.value(), e);
  }
  return vandermonde(p, nvars, idx, exps);
}

OmegaVector::OmegaVector(std::vector<i64> entries) : e_(std::move(entries)) {
  for (i64 x : e_)
    if (x < 0) throw std::invalid_argument("omega entries must be non-negative");
  while (!e_.empty() && e_.back() == 0) e_.pop_back();
}

i64 OmegaVector::degree(Prime p) const {
  i64 d = 0, pw = 1;
  for (size_t j = 0; j < e_.size(); ++j) {
    d = checked_add(d, checked_mul(e_[j], pw));
    if (j + 1 < e_.size()) pw = checked_mul(pw, p.value());
  }
  return d;
}

std::string OmegaVector::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t j = 0; j < e_.size(); ++j) {
    if (j) os << ",";
    os << e_[j];
  }
  os << ")";
  return os.str();
}

OmegaVector omega_of_sequence(const std::vector<i64>& s, Prime p) {
  std::vector<i64> acc;
  for (i64 v : s) {
    if (v < 0) throw std::invalid_argument("omega of negative entry");
    size_t j = 0;
    while (v) {
      if (acc.size() <= j) acc.resize(j + 1, 0);
      acc[j] += v % p.value();
      v /= p.value();
      ++j;
    }
  }
  return OmegaVector(std::move(acc));
}

OmegaVector omega_vector(const Monomial& m, Prime p) {
  std::vector<i64> s(m.exps().begin(), m.exps().end());
  return omega_of_sequence(s, p);
}

bool dominates(const OmegaVector& rho, const OmegaVector& sigma, Prime p) {
  size_t len = std::max(rho.length(), sigma.length());
  i64 a = 0, b = 0, pw = 1;
  for (size_t j = 1; j <= len; ++j) {
    a = checked_add(a, checked_mul(rho.entry(j), pw));
    b = checked_add(b, checked_mul(sigma.entry(j), pw));
    if (a < b) return false;
    if (j < len) pw = checked_mul(pw, p.value());
  }
  return true;
}

bool is_spike_exponent(i64 e, Prime p) {
  if (e < 1) return false;
  i64 m = e + 1;  // must be d * p^k with 2 <= d <= p
  while (m % p.value() == 0 && m > p.value()) m /= p.value();
  return m >= 2 && m <= p.value();
}

bool is_spike(const Monomial& m, Prime p) {
  for (u32 x : m.exps())
    if (x != 0 && !is_spike_exponent(x, p)) return false;
  return true;
}

std::pair<Monomial, Fp> leading_monomial(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("leading monomial of zero polynomial");
  const Polynomial::Term& t = f.terms().front();
  return {t.m, Fp(t.c, f.prime())};
}

}  // namespace steenrod
