#include "steenrod/milnor.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace steenrod {

MilnorElement::MilnorElement(std::vector<i64> r) : r_(std::move(r)) {
  for (i64 x : r_)
    if (x < 0) throw std::invalid_argument("Milnor index entries must be non-negative");
  while (!r_.empty() && r_.back() == 0) r_.pop_back();
}

MilnorElement MilnorElement::power(i64 d) {
  if (d < 0) throw std::invalid_argument("P(d) needs d >= 0");
  return d == 0 ? MilnorElement() : MilnorElement({d});
}

i64 MilnorElement::degree(Prime p) const {
  i64 d = 0;
  for (size_t i = 0; i < r_.size(); ++i) {
    i64 w = checked_sub(checked_pow(p.value(), static_cast<u32>(i + 1)), 1);
    d = checked_add(d, checked_mul(w, r_[i]));
  }
  return d;
}

i64 MilnorElement::excess() const {
  i64 e = 0;
  for (i64 x : r_) e = checked_add(e, x);
  return e;
}

std::string MilnorElement::to_string() const {
  std::ostringstream os;
  os << "P(";
  for (size_t i = 0; i < r_.size(); ++i) {
    if (i) os << ",";
    os << r_[i];
  }
  os << ")";
  return os.str();
}

AdmissibleWord::AdmissibleWord(std::vector<i64> t) : t_(std::move(t)) {
  for (i64 x : t_)
    if (x < 1) throw std::invalid_argument("admissible word entries must be positive");
}

bool AdmissibleWord::is_admissible(Prime p) const {
  for (size_t i = 0; i + 1 < t_.size(); ++i)
    if (t_[i] < checked_mul(static_cast<i64>(p.value()), t_[i + 1])) return false;
  return true;
}

i64 AdmissibleWord::degree(Prime p) const {
  i64 d = 0;
  for (i64 x : t_) d = checked_add(d, x);
  return checked_mul(d, p.value() - 1);
}

i64 AdmissibleWord::excess(Prime p) const {
  if (t_.empty()) return 0;
  return checked_sub(checked_mul(static_cast<i64>(p.value()), t_[0]), degree(p));
}

std::string AdmissibleWord::to_string() const {
  if (t_.empty()) return "P^0";
  std::ostringstream os;
  for (size_t i = 0; i < t_.size(); ++i) {
    if (i) os << " ";
    os << "P^" << t_[i];
  }
  return os.str();
}

AlgebraElement make_element(Prime p, std::vector<std::pair<MilnorElement, u32>> terms) {
  AlgebraElement e(p);
  e.terms_ = std::move(terms);
  return e;
}

AlgebraElement AlgebraElement::unit(Prime p) { return single(MilnorElement(), 1, p); }

AlgebraElement AlgebraElement::single(const MilnorElement& r, i64 c, Prime p) {
  AlgebraElement e(p);
  u32 cv = mod_of(c, p.value());
  if (cv != 0) return make_element(p, {{r, cv}});
  return e;
}

Fp AlgebraElement::coefficient(const MilnorElement& r) const {
  for (const auto& [m, c] : terms_)
    if (m == r) return Fp(c, p_);
  return Fp(0, p_);
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  if (p_ != o.p_) throw std::invalid_argument("algebra element prime mismatch");
  std::vector<std::pair<MilnorElement, u32>> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  const u32 p = p_.value();
  while (i < terms_.size() && j < o.terms_.size()) {
    if (terms_[i].first > o.terms_[j].first) {
      out.push_back(terms_[i++]);
    } else if (o.terms_[j].first > terms_[i].first) {
      out.push_back(o.terms_[j++]);
    } else {
      u32 c = mod_add(terms_[i].second, o.terms_[j].second, p);
      if (c) out.push_back({terms_[i].first, c});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  return make_element(p_, std::move(out));
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  return *this + o.scale(-1);
}

AlgebraElement AlgebraElement::scale(i64 c) const {
  const u32 p = p_.value();
  u32 cv = mod_of(c, p);
  AlgebraElement e(p_);
  if (cv == 0) return e;
  e.terms_ = terms_;
  for (auto& [m, x] : e.terms_) x = mod_mul(x, cv, p);
  return e;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  if (p_ != o.p_) throw std::invalid_argument("algebra element prime mismatch");
  AlgebraElement result(p_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      i64 c = static_cast<i64>(mod_mul(ca, cb, p_.value()));
      result = result + milnor_product(a, b, p_).scale(c);
    }
  return result;
}

bool AlgebraElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  i64 d = terms_.front().first.degree(p_);
  for (const auto& [m, c] : terms_)
    if (m.degree(p_) != d) return false;
  return true;
}

i64 AlgebraElement::degree() const {
  if (terms_.empty()) throw std::invalid_argument("degree of zero element");
  if (!is_homogeneous()) throw std::invalid_argument("degree of inhomogeneous element");
  return terms_.front().first.degree(p_);
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  if (p_ != o.p_) throw std::invalid_argument("algebra element prime mismatch");
  return terms_ == o.terms_;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << c << "*";
    os << m.to_string();
  }
  return os.str();
}

AlgebraElement milnor_product(const MilnorElement& a, const MilnorElement& b, Prime p) {
  const size_t m = a.length(), n = b.length();
  const i64 pv = p.value();

  // powers p^j for column weights
  std::vector<i64> pj(n + 1, 1);
  for (size_t j = 1; j <= n; ++j) pj[j] = checked_mul(pj[j - 1], pv);

  // x[i][j] for i in 0..m, j in 0..n; x[0][j] filled at the end
  std::vector<std::vector<i64>> x(m + 1, std::vector<i64>(n + 1, 0));
  std::vector<i64> colrem(b.entries());

  std::vector<std::pair<MilnorElement, u32>> found;

  auto emit = [&]() {
    for (size_t j = 1; j <= n; ++j) x[0][j] = colrem[j - 1];
    std::vector<i64> t(m + n, 0);
    for (size_t i = 0; i <= m; ++i)
      for (size_t j = 0; j <= n; ++j) {
        if (i + j == 0) continue;
        t[i + j - 1] = checked_add(t[i + j - 1], x[i][j]);
      }
    u32 coeff = 1;
    for (size_t k = 1; k <= m + n && coeff; ++k) {
      std::vector<i64> parts;
      for (size_t i = 0; i <= m && i <= k; ++i) {
        size_t j = k - i;
        if (j > n) continue;
        parts.push_back(x[i][j]);
      }
      coeff = mod_mul(coeff, multinom_mod_p(t[k - 1], parts, p).value(), p.value());
    }
    if (coeff) found.push_back({MilnorElement(t), coeff});
  };

  // fill row i, then recurse to row i+1; x[i][0] is the leftover of r_i
  auto row_rec = [&](auto&& self, size_t i) -> void {
    if (i > m) {
      emit();
      return;
    }
    i64 ri = a.entries()[i - 1];
    auto col_rec = [&](auto&& cself, size_t j, i64 rem) -> void {
      if (j == 0) {
        x[i][0] = rem;
        self(self, i + 1);
        return;
      }
      i64 maxq = std::min(rem / pj[j], colrem[j - 1]);
      for (i64 q = 0; q <= maxq; ++q) {
        x[i][j] = q;
        colrem[j - 1] -= q;
        cself(cself, j - 1, rem - q * pj[j]);
        colrem[j - 1] += q;
      }
      x[i][j] = 0;
    };
    col_rec(col_rec, n, ri);
  };
  row_rec(row_rec, 1);

  std::sort(found.begin(), found.end(),
            [](const auto& l, const auto& r) { return l.first > r.first; });
  // merge duplicates (distinct matrices can give the same T)
  std::vector<std::pair<MilnorElement, u32>> out;
  for (const auto& [t, c] : found) {
    if (!out.empty() && out.back().first == t) {
      out.back().second = mod_add(out.back().second, c, p.value());
    } else {
      out.push_back({t, c});
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const auto& tc) { return tc.second == 0; }),
            out.end());
  return make_element(p, std::move(out));
}

AdmissibleWord milnor_to_admissible_index(const MilnorElement& r, Prime p) {
  const size_t m = r.length();
  std::vector<i64> t(m, 0);
  for (size_t i = m; i >= 1; --i) {
    t[i - 1] = r.entries()[i - 1];
    if (i < m) t[i - 1] = checked_add(t[i - 1], checked_mul(static_cast<i64>(p.value()), t[i]));
  }
  return AdmissibleWord(t);
}

MilnorElement admissible_to_milnor_index(const AdmissibleWord& t, Prime p) {
  const size_t m = t.length();
  std::vector<i64> r(m, 0);
  for (size_t i = 1; i <= m; ++i) {
    i64 next = i < m ? t.entries()[i] : 0;
    r[i - 1] = checked_sub(t.entries()[i - 1], checked_mul(static_cast<i64>(p.value()), next));
    if (r[i - 1] < 0)
      throw std::invalid_argument("word is not admissible; index map undefined");
  }
  return MilnorElement(r);
}

AlgebraElement admissible_to_milnor(const AdmissibleWord& t, Prime p) {
  AlgebraElement result = AlgebraElement::unit(p);
  for (i64 ti : t.entries())
    result = result * AlgebraElement::single(MilnorElement::power(ti), 1, p);
  return result;
}

namespace {

std::mutex g_basis_mutex;
std::map<std::pair<u32, i64>, std::vector<MilnorElement>> g_basis_cache;

std::vector<MilnorElement> enumerate_basis(i64 degree, Prime p) {
  std::vector<i64> weights;  // p^i - 1 for i = 1, 2, ...
  for (u32 i = 1;; ++i) {
    i64 w = checked_sub(checked_pow(p.value(), i), 1);
    if (w > degree) break;
    weights.push_back(w);
  }
  std::vector<MilnorElement> out;
  std::vector<i64> r(weights.size(), 0);
  auto rec = [&](auto&& self, size_t i, i64 rem) -> void {
    if (i == weights.size()) {
      if (rem == 0) out.push_back(MilnorElement(r));
      return;
    }
    for (i64 q = 0; q * weights[i] <= rem; ++q) {
      r[i] = q;
      self(self, i + 1, rem - q * weights[i]);
    }
    r[i] = 0;
  };
  if (degree == 0) {
    out.push_back(MilnorElement());
  } else {
    rec(rec, 0, degree);
  }
  std::sort(out.begin(), out.end(), [](const MilnorElement& a, const MilnorElement& b) { return a > b; });
  return out;
}

}  // namespace

const std::vector<MilnorElement>& milnor_basis_of_degree(i64 degree, Prime p) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::lock_guard<std::mutex> lock(g_basis_mutex);
  auto key = std::make_pair(p.value(), degree);
  auto it = g_basis_cache.find(key);
  if (it == g_basis_cache.end()) it = g_basis_cache.emplace(key, enumerate_basis(degree, p)).first;
  return it->second;
}

AlgebraElement chi_expansion(i64 d, Prime p) {
  if (d < 0) throw std::invalid_argument("chi_expansion needs d >= 0");
  i64 degree = checked_mul(d, p.value() - 1);
  std::vector<std::pair<MilnorElement, u32>> terms;
  for (const MilnorElement& r : milnor_basis_of_degree(degree, p)) terms.push_back({r, 1});
  return make_element(p, std::move(terms));
}

AlgebraElement chi_of_power(i64 d, Prime p) {
  return chi_expansion(d, p).scale(d % 2 == 0 ? 1 : -1);
}

AlgebraElement davis_expansion(i64 u, i64 v, Prime p) {
  if (u < 0 || v < 0) throw std::invalid_argument("davis_expansion needs u, v >= 0");
  i64 degree = checked_mul(checked_add(u, v), p.value() - 1);
  i64 pu = checked_mul(static_cast<i64>(p.value()), u);
  std::vector<std::pair<MilnorElement, u32>> terms;
  for (const MilnorElement& r : milnor_basis_of_degree(degree, p)) {
    u32 c = binom_mod_p(checked_add(r.degree(p), r.excess()), pu, p).value();
    if (c) terms.push_back({r, c});
  }
  return make_element(p, std::move(terms));
}

}  // namespace steenrod
