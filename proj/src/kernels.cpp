#include "steenrod/kernels.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstring>
#include <map>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace steenrod::kernels {

namespace {

std::atomic<bool> g_parallel{true};

struct XMono {
  std::array<u32, kMaxVars> e;
};

struct XHash {
  int nv;
  size_t operator()(const XMono& m) const {
    size_t h = 1469598103934665603ull;
    for (int i = 0; i < nv; ++i) {
      h ^= m.e[static_cast<size_t>(i)];
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct XEq {
  int nv;
  bool operator()(const XMono& a, const XMono& b) const {
    return std::memcmp(a.e.data(), b.e.data(), sizeof(u32) * static_cast<size_t>(nv)) == 0;
  }
};

using Acc = std::unordered_map<XMono, u32, XHash, XEq>;

Acc make_acc(int nv, size_t reserve_hint) {
  return Acc(reserve_hint * 2 + 16, XHash{nv}, XEq{nv});
}

void acc_add(Acc& acc, const XMono& m, u32 c, u32 p) {
  auto [it, inserted] = acc.try_emplace(m, c);
  if (!inserted) {
    it->second = mod_add(it->second, c, p);
    if (it->second == 0) acc.erase(it);
  }
}

void acc_merge(Acc& into, const Acc& from, u32 p) {
  for (const auto& [m, c] : from) acc_add(into, m, c, p);
}

XMono pack(const Monomial& m) {
  XMono x{};
  const auto& e = m.exps();
  std::copy(e.begin(), e.end(), x.e.begin());
  return x;
}

Polynomial finish(Prime p, int nv, Acc&& acc) {
  std::vector<Polynomial::Term> terms;
  terms.reserve(acc.size());
  for (const auto& [m, c] : acc) {
    std::vector<u32> e(m.e.begin(), m.e.begin() + nv);
    terms.push_back({Monomial(std::move(e)), c});
  }
  std::sort(terms.begin(), terms.end(),
            [](const Polynomial::Term& a, const Polynomial::Term& b) { return a.m > b.m; });
  return Polynomial::from_sorted_terms(p, nv, std::move(terms));
}

bool use_parallel(size_t njobs) {
#ifdef _OPENMP
  return g_parallel.load() && njobs >= 64 && omp_get_max_threads() > 1;
#else
  (void)njobs;
  return false;
#endif
}

// Runs job(k, acc) for k in [0, njobs), accumulating into per-thread maps
// that are merged at the end. Addition in F_p commutes, so the result does
// not depend on the interleaving.
template <class Job>
Polynomial accumulate_jobs(Prime p, int nv, size_t njobs, size_t reserve_hint, Job&& job) {
  const u32 pv = p.value();
  Acc global = make_acc(nv, reserve_hint);
#ifdef _OPENMP
  if (use_parallel(njobs)) {
#pragma omp parallel
    {
      Acc local = make_acc(nv, reserve_hint / static_cast<size_t>(omp_get_num_threads()) + 16);
#pragma omp for schedule(dynamic, 16) nowait
      for (long k = 0; k < static_cast<long>(njobs); ++k) job(static_cast<size_t>(k), local);
#pragma omp critical(steenrod_acc_merge)
      acc_merge(global, local, pv);
    }
    return finish(p, nv, std::move(global));
  }
#endif
  for (size_t k = 0; k < njobs; ++k) job(k, global);
  return finish(p, nv, std::move(global));
}

void check_exp_range(i64 e) {
  if (e < 0 || e >= kMaxExponent) throw OverflowError("monomial exponent out of supported range");
}

// all q with base-p digits <= the digits of a, paired with C(a, q) mod p
std::vector<std::pair<u32, u32>> admissible_powers(u32 a, u32 p) {
  std::vector<std::pair<u32, u32>> out{{0u, 1u}};
  u32 pw = 1, rest = a;
  while (rest) {
    u32 digit = rest % p;
    rest /= p;
    if (digit) {
      size_t base = out.size();
      // binomials C(digit, c) mod p for 1 <= c <= digit
      u32 binom = 1;
      for (u32 c = 1; c <= digit; ++c) {
        binom = mod_mul(binom, digit - c + 1, p);
        binom = mod_mul(binom, mod_inv(c, p), p);
        for (size_t k = 0; k < base; ++k)
          out.push_back({out[k].first + c * pw, mod_mul(out[k].second, binom, p)});
      }
    }
    pw *= p;
  }
  std::sort(out.begin(), out.end());
  return out;
}

using PowerLists = std::unordered_map<u32, std::vector<std::pair<u32, u32>>>;

PowerLists collect_power_lists(const Polynomial& f) {
  PowerLists lists;
  const u32 p = f.prime().value();
  for (const auto& t : f.terms())
    for (u32 a : t.m.exps())
      if (!lists.count(a)) lists.emplace(a, admissible_powers(a, p));
  return lists;
}

// P^i on one monomial, using precomputed admissible-power lists
void total_power_term(i64 budget, const Polynomial::Term& term, int nv, u32 p,
                      const PowerLists& lists, Acc& acc) {
  const auto& exps = term.m.exps();
  // suffix capacity: the largest total P-weight variables v..nv-1 can absorb
  std::vector<i64> suffix(static_cast<size_t>(nv) + 1, 0);
  for (int v = nv - 1; v >= 0; --v)
    suffix[static_cast<size_t>(v)] = suffix[static_cast<size_t>(v) + 1] + exps[static_cast<size_t>(v)];

  XMono out{};
  auto rec = [&](auto&& self, int v, i64 rem, u32 coeff) -> void {
    if (v == nv) {
      if (rem == 0) acc_add(acc, out, coeff, p);
      return;
    }
    if (rem > suffix[static_cast<size_t>(v)]) return;
    u32 a = exps[static_cast<size_t>(v)];
    const auto& list = lists.at(a);
    for (const auto& [q, c] : list) {
      if (q > rem) break;
      i64 ne = static_cast<i64>(a) + static_cast<i64>(q) * (p - 1);
      check_exp_range(ne);
      out.e[static_cast<size_t>(v)] = static_cast<u32>(ne);
      self(self, v + 1, rem - q, mod_mul(coeff, c, p));
    }
    out.e[static_cast<size_t>(v)] = a;
  };
  rec(rec, 0, budget, term.c);
}

// Splits of a Milnor index across one exponent: enumerates all S with
// S <= cap componentwise and multinomial (a; a - sum S, S) nonzero mod p.
// The digits of the parts must add to the digits of a without carries, so
// the search runs digit by digit.
template <class Yield>
void enum_variable_splits(u32 a, const std::vector<i64>& cap, u32 p, Yield&& yield) {
  const size_t m = cap.size();
  std::vector<i64> s(m, 0);
  std::vector<u32> digits;
  {
    u32 rest = a;
    while (rest) {
      digits.push_back(rest % p);
      rest /= p;
    }
  }
  std::vector<i64> pw(digits.size(), 1);
  for (size_t t = 1; t < digits.size(); ++t) pw[t] = pw[t - 1] * p;

  auto digit_rec = [&](auto&& self, size_t t, u32 coeff) -> void {
    if (t == digits.size()) {
      yield(s, coeff);
      return;
    }
    u32 avail = digits[t];
    // distribute digit t of a among the m parts (remainder implicit)
    auto comp_rec = [&](auto&& comp, size_t i, u32 left, u32 cf) -> void {
      if (i == m) {
        self(self, t + 1, cf);
        return;
      }
      for (u32 c = 0; c <= left; ++c) {
        if (c) {
          i64 add = static_cast<i64>(c) * pw[t];
          if (s[i] + add > cap[i]) break;
          s[i] += add;
          // running factor: C(left, c) folded into the digit multinomial
          u32 b = 1;
          for (u32 j = 1; j <= c; ++j)
            b = mod_mul(mod_mul(b, left - j + 1, p), mod_inv(j, p), p);
          comp(comp, i + 1, left - c, mod_mul(cf, b, p));
          s[i] -= add;
        } else {
          comp(comp, i + 1, left, cf);
        }
      }
    };
    comp_rec(comp_rec, 0, avail, coeff);
  };
  digit_rec(digit_rec, 0, 1);
}

// multinomial (a; a - sum S, S) mod p for i64 parts, 0 if it vanishes
u32 exact_split_coeff(u32 a, const std::vector<i64>& s, u32 p) {
  i64 total = 0;
  for (i64 x : s) total += x;
  if (total > a) return 0;
  u32 result = 1;
  u32 rest_a = a;
  std::vector<i64> rem(s);
  while (rest_a > 0) {
    u32 ad = rest_a % p;
    rest_a /= p;
    u32 used = 0;
    u32 numer = 1;  // digit multinomial (ad; c_1, ..., c_m)
    u32 left = ad;
    for (i64& x : rem) {
      u32 c = static_cast<u32>(x % p);
      x /= p;
      used += c;
      if (used > ad) return 0;
      for (u32 j = 1; j <= c; ++j)
        numer = mod_mul(mod_mul(numer, left - j + 1, p), mod_inv(j, p), p);
      left -= c;
    }
    result = mod_mul(result, numer, p);
  }
  for (i64 x : rem)
    if (x != 0) return 0;  // part has digits above those of a
  return result;
}

void milnor_apply_term(const std::vector<i64>& R, const std::vector<i64>& weights,
                       const Polynomial::Term& term, int nv, u32 p, Acc& acc) {
  const auto& exps = term.m.exps();
  std::vector<i64> suffix(static_cast<size_t>(nv) + 1, 0);
  for (int v = nv - 1; v >= 0; --v)
    suffix[static_cast<size_t>(v)] = suffix[static_cast<size_t>(v) + 1] + exps[static_cast<size_t>(v)];

  XMono out{};
  std::vector<i64> rem(R);
  auto rec = [&](auto&& self, int v, u32 coeff) -> void {
    i64 excess_left = 0;
    for (i64 x : rem) excess_left += x;
    if (excess_left > suffix[static_cast<size_t>(v)]) return;  // not enough degree left
    u32 a = exps[static_cast<size_t>(v)];
    if (v == nv - 1) {
      u32 c = exact_split_coeff(a, rem, p);
      if (c == 0) return;
      i64 ne = a;
      for (size_t i = 0; i < rem.size(); ++i) ne += rem[i] * weights[i];
      check_exp_range(ne);
      out.e[static_cast<size_t>(v)] = static_cast<u32>(ne);
      acc_add(acc, out, mod_mul(coeff, c, p), p);
      return;
    }
    enum_variable_splits(a, rem, p, [&](const std::vector<i64>& s, u32 c) {
      i64 ne = a;
      for (size_t i = 0; i < s.size(); ++i) {
        rem[i] -= s[i];
        ne += s[i] * weights[i];
      }
      check_exp_range(ne);
      out.e[static_cast<size_t>(v)] = static_cast<u32>(ne);
      self(self, v + 1, mod_mul(coeff, c, p));
      for (size_t i = 0; i < s.size(); ++i) rem[i] += s[i];
    });
  };
  if (nv == 0) return;  // constant-only ring handled by caller
  rec(rec, 0, term.c);
}

std::vector<i64> trim_index(std::vector<i64> R) {
  for (i64 r : R)
    if (r < 0) throw std::invalid_argument("Milnor index entries must be non-negative");
  while (!R.empty() && R.back() == 0) R.pop_back();
  return R;
}

}  // namespace

void set_parallel_enabled(bool on) { g_parallel.store(on); }
bool parallel_enabled() { return g_parallel.load(); }

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

Polynomial mul(const Polynomial& a, const Polynomial& b) {
  if (a.prime() != b.prime() || a.nvars() != b.nvars())
    throw std::invalid_argument("polynomial mismatch in mul");
  const u32 p = a.prime().value();
  const int nv = a.nvars();
  if (a.is_zero() || b.is_zero()) return Polynomial(a.prime(), nv);
  const auto& at = a.terms();
  const auto& bt = b.terms();
  const auto& outer = at.size() >= bt.size() ? at : bt;
  const auto& inner = at.size() >= bt.size() ? bt : at;
  return accumulate_jobs(a.prime(), nv, outer.size(), outer.size() + inner.size(),
                         [&](size_t k, Acc& acc) {
                           XMono m = pack(outer[k].m);
                           for (const auto& t : inner) {
                             XMono prod = m;
                             for (int v = 0; v < nv; ++v) {
                               i64 e = static_cast<i64>(prod.e[static_cast<size_t>(v)]) +
                                       t.m.exps()[static_cast<size_t>(v)];
                               check_exp_range(e);
                               prod.e[static_cast<size_t>(v)] = static_cast<u32>(e);
                             }
                             acc_add(acc, prod, mod_mul(outer[k].c, t.c, p), p);
                           }
                         });
}

Polynomial total_power(i64 i, const Polynomial& f) {
  if (i < 0) throw std::invalid_argument("total power index must be non-negative");
  if (i == 0 || f.is_zero()) return f;
  const u32 p = f.prime().value();
  const int nv = f.nvars();
  if (nv == 0) return Polynomial(f.prime(), 0);  // P^i kills constants for i > 0
  PowerLists lists = collect_power_lists(f);
  return accumulate_jobs(f.prime(), nv, f.terms().size(), f.terms().size(),
                         [&](size_t k, Acc& acc) {
                           total_power_term(i, f.terms()[k], nv, p, lists, acc);
                         });
}

Polynomial milnor_apply(const std::vector<i64>& R_in, const Polynomial& f) {
  std::vector<i64> R = trim_index(R_in);
  if (R.empty() || f.is_zero()) return f;
  const u32 p = f.prime().value();
  const int nv = f.nvars();
  if (nv == 0) return Polynomial(f.prime(), 0);
  std::vector<i64> weights(R.size());
  for (size_t i = 0; i < R.size(); ++i)
    weights[i] = checked_sub(checked_pow(p, static_cast<u32>(i + 1)), 1);
  return accumulate_jobs(f.prime(), nv, f.terms().size(), f.terms().size(),
                         [&](size_t k, Acc& acc) {
                           milnor_apply_term(R, weights, f.terms()[k], nv, p, acc);
                         });
}

namespace {

// coefficients of (1 + t^{p-1} + t^{p^2-1} + ...)^a mod (p, t^{(r+1)(p-1)}),
// sampled at the multiples of p-1: entry l is the total Milnor-action weight
// of degree raise l(p-1) on the exponent a
std::vector<u32> raise_weights(u32 a, i64 r, u32 p) {
  const size_t L = static_cast<size_t>(r) + 1;
  // base series in (p-1)-units: nonzero exactly at l = p_i = (p^i - 1)/(p - 1)
  std::vector<u32> base(L, 0);
  for (u32 i = 0;; ++i) {
    i64 pos = rep_unit(i, Prime(p));
    if (pos > r) break;
    base[static_cast<size_t>(pos)] = 1;
  }
  std::vector<u32> acc(L, 0);
  acc[0] = 1;
  std::vector<u32> tmp(L);
  u32 e = a;
  std::vector<u32> sq = base;
  auto mul_into = [&](const std::vector<u32>& x, const std::vector<u32>& y) {
    std::fill(tmp.begin(), tmp.end(), 0u);
    for (size_t i = 0; i < L; ++i) {
      if (x[i] == 0) continue;
      u64 xi = x[i];
      for (size_t j = 0; i + j < L; ++j)
        if (y[j]) tmp[i + j] = static_cast<u32>((tmp[i + j] + xi * y[j]) % p);
    }
    return tmp;
  };
  while (e) {
    if (e & 1) acc = mul_into(acc, sq);
    e >>= 1;
    if (e) sq = mul_into(sq, sq);
  }
  return acc;
}

struct RaiseTable {
  std::vector<u32> dense;                     // level -> weight
  std::vector<std::pair<u32, u32>> nonzero;   // (level, weight), ascending
  u32 max_level = 0;
};

}  // namespace

Polynomial hq_series(i64 r, const Polynomial& f) {
  if (r < 0) throw std::invalid_argument("Hq index must be non-negative");
  if (r == 0 || f.is_zero()) return f;
  const u32 p = f.prime().value();
  const int nv = f.nvars();
  if (nv == 0) return Polynomial(f.prime(), 0);

  std::unordered_map<u32, RaiseTable> tables;
  for (const auto& t : f.terms())
    for (u32 a : t.m.exps())
      if (!tables.count(a)) {
        RaiseTable tab;
        tab.dense = raise_weights(a, r, p);
        for (u32 l = 0; l <= static_cast<u32>(r); ++l)
          if (tab.dense[l]) {
            tab.nonzero.push_back({l, tab.dense[l]});
            tab.max_level = l;
          }
        tables.emplace(a, std::move(tab));
      }

  return accumulate_jobs(f.prime(), nv, f.terms().size(), f.terms().size() * 4,
                         [&](size_t k, Acc& acc) {
                           const auto& term = f.terms()[k];
                           const auto& exps = term.m.exps();
                           std::vector<const RaiseTable*> vt(static_cast<size_t>(nv));
                           std::vector<i64> suffix_max(static_cast<size_t>(nv) + 1, 0);
                           for (int v = nv - 1; v >= 0; --v) {
                             vt[static_cast<size_t>(v)] = &tables.at(exps[static_cast<size_t>(v)]);
                             suffix_max[static_cast<size_t>(v)] =
                                 suffix_max[static_cast<size_t>(v) + 1] +
                                 vt[static_cast<size_t>(v)]->max_level;
                           }
                           XMono out{};
                           auto rec = [&](auto&& self, int v, i64 rem, u32 coeff) -> void {
                             if (rem > suffix_max[static_cast<size_t>(v)]) return;
                             u32 a = exps[static_cast<size_t>(v)];
                             if (v == nv - 1) {
                               u32 w = vt[static_cast<size_t>(v)]->dense[static_cast<size_t>(rem)];
                               if (w == 0) return;
                               i64 ne = static_cast<i64>(a) + rem * (p - 1);
                               check_exp_range(ne);
                               out.e[static_cast<size_t>(v)] = static_cast<u32>(ne);
                               acc_add(acc, out, mod_mul(coeff, w, p), p);
                               return;
                             }
                             for (const auto& [l, w] : vt[static_cast<size_t>(v)]->nonzero) {
                               if (l > rem) break;
                               i64 ne = static_cast<i64>(a) + static_cast<i64>(l) * (p - 1);
                               check_exp_range(ne);
                               out.e[static_cast<size_t>(v)] = static_cast<u32>(ne);
                               self(self, v + 1, rem - l, mod_mul(coeff, w, p));
                             }
                           };
                           rec(rec, 0, r, term.c);
                         });
}

namespace ref {

Polynomial mul(const Polynomial& a, const Polynomial& b) {
  if (a.prime() != b.prime() || a.nvars() != b.nvars())
    throw std::invalid_argument("polynomial mismatch in mul");
  const u32 p = a.prime().value();
  std::map<Monomial, u32> acc;
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) {
      std::vector<u32> e(s.m.exps());
      for (int v = 0; v < a.nvars(); ++v)
        e[static_cast<size_t>(v)] += t.m.exps()[static_cast<size_t>(v)];
      Monomial m(std::move(e));
      u32& c = acc[m];
      c = mod_add(c, mod_mul(s.c, t.c, p), p);
    }
  std::vector<Polynomial::Term> terms;
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (it->second != 0) terms.push_back({it->first, it->second});
  return Polynomial::from_sorted_terms(a.prime(), a.nvars(), std::move(terms));
}

Polynomial total_power(i64 i, const Polynomial& f) {
  if (i < 0) throw std::invalid_argument("total power index must be non-negative");
  if (i == 0 || f.is_zero()) return f;
  Prime p = f.prime();
  const int nv = f.nvars();
  Polynomial result(p, nv);
  for (const auto& term : f.terms()) {
    std::vector<u32> e(term.m.exps());
    auto rec = [&](auto&& self, int v, i64 rem, Fp coeff) -> void {
      if (coeff.is_zero()) return;
      if (v == nv) {
        if (rem == 0)
          result = result + Polynomial::monomial(p, nv, Monomial(e), coeff.value());
        return;
      }
      u32 av = term.m.exps()[static_cast<size_t>(v)];
      for (i64 q = 0; q <= std::min<i64>(rem, av); ++q) {
        e[static_cast<size_t>(v)] = static_cast<u32>(av + q * (p.value() - 1));
        self(self, v + 1, rem - q, coeff * binom_mod_p(av, q, p));
      }
      e[static_cast<size_t>(v)] = av;
    };
    rec(rec, 0, i, Fp(term.c, p));
  }
  return result;
}

Polynomial milnor_apply(const std::vector<i64>& R_in, const Polynomial& f) {
  std::vector<i64> R = trim_index(R_in);
  if (R.empty() || f.is_zero()) return f;
  Prime p = f.prime();
  const int nv = f.nvars();
  std::vector<i64> weights(R.size());
  for (size_t i = 0; i < R.size(); ++i)
    weights[i] = checked_sub(checked_pow(p.value(), static_cast<u32>(i + 1)), 1);
  Polynomial result(p, nv);
  for (const auto& term : f.terms()) {
    std::vector<u32> e(term.m.exps());
    std::vector<i64> rem(R);
    auto rec = [&](auto&& self, int v, Fp coeff) -> void {
      if (coeff.is_zero()) return;
      if (v == nv) {
        bool all_zero = true;
        for (i64 x : rem) all_zero = all_zero && x == 0;
        if (all_zero) result = result + Polynomial::monomial(p, nv, Monomial(e), coeff.value());
        return;
      }
      u32 av = term.m.exps()[static_cast<size_t>(v)];
      std::vector<i64> s(R.size(), 0);
      auto choose = [&](auto&& self2, size_t idx) -> void {
        if (idx == R.size()) {
          i64 ne = av;
          for (size_t i = 0; i < s.size(); ++i) ne += s[i] * weights[i];
          if (ne >= kMaxExponent) return;
          e[static_cast<size_t>(v)] = static_cast<u32>(ne);
          for (size_t i = 0; i < s.size(); ++i) rem[i] -= s[i];
          self(self, v + 1, coeff * multinom_mod_p(av, s, p));
          for (size_t i = 0; i < s.size(); ++i) rem[i] += s[i];
          e[static_cast<size_t>(v)] = av;
          return;
        }
        for (i64 q = 0; q <= rem[idx]; ++q) {
          s[idx] = q;
          self2(self2, idx + 1);
        }
        s[idx] = 0;
      };
      choose(choose, 0);
    };
    rec(rec, 0, Fp(term.c, p));
  }
  return result;
}

}  // namespace ref

}  // namespace steenrod::kernels
