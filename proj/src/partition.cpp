#include "steenrod/partition.hpp"

#include <algorithm>
#include <sstream>

namespace steenrod {

Partition::Partition(std::vector<i64> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(const std::string& text) {
  std::vector<i64> parts;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    size_t pos = 0;
    i64 v;
    try {
      v = std::stoll(token, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition entry: '" + token + "'");
    }
    while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
    if (pos != token.size()) throw std::invalid_argument("bad partition entry: '" + token + "'");
    parts.push_back(v);
  }
  return Partition(parts);
}

i64 Partition::boxes() const {
  i64 d = 0;
  for (i64 x : parts_) d += x;
  return d;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition();
  std::vector<i64> conj(static_cast<size_t>(parts_[0]), 0);
  for (i64 part : parts_)
    for (i64 j = 0; j < part; ++j) ++conj[static_cast<size_t>(j)];
  return Partition(conj);
}

std::string Partition::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  return os.str();
}

bool is_column_p_regular(const Partition& lambda, Prime p) {
  const auto& parts = lambda.parts();
  for (size_t i = 0; i < parts.size(); ++i) {
    i64 next = i + 1 < parts.size() ? parts[i + 1] : 0;
    if (parts[i] - next > p.value() - 1) return false;
  }
  return true;
}

bool is_t_regular(const Partition& lambda, Prime p) {
  if (!is_column_p_regular(lambda, p))
    throw std::domain_error("is_t_regular requires a column p-regular partition");
  const i64 w = p.value() - 1;
  for (size_t i = 0; i < lambda.length(); ++i) {
    i64 x = lambda.parts()[i];
    if (x % w == 0) continue;
    // x lies strictly inside band a = ceil(x/w); any later part in the same
    // band violates T-regularity (parts are weakly decreasing)
    if (i + 1 < lambda.length()) {
      i64 y = lambda.parts()[i + 1];
      i64 lo = (x / w) * w;  // (a-1)(p-1)
      if (y > lo) return false;
    }
  }
  return true;
}

TRegularData t_conjugate(const Partition& lambda, Prime p) {
  if (!is_t_regular(lambda, p))
    throw std::domain_error("t_conjugate requires a T-regular partition");
  const i64 w = p.value() - 1;
  TRegularData data;
  i64 m = lambda.empty() ? 0 : (lambda.parts()[0] + w - 1) / w;
  data.m = static_cast<size_t>(m);
  std::vector<i64> gamma;
  for (i64 j = 1; j <= m; ++j) {
    std::vector<i64> block_parts;
    i64 count = 0;
    for (i64 part : lambda.parts()) {
      i64 in_block = std::min(std::max<i64>(part - (j - 1) * w, 0), w);
      if (in_block > 0) block_parts.push_back(in_block);
      count += in_block;
    }
    gamma.push_back(count);
    data.blocks.push_back(Partition(block_parts));
    // gamma_j = (n_j - 1)(p-1) + b_j with 1 <= b_j <= p-1
    i64 nk = (count + w - 1) / w;
    i64 bk = count - (nk - 1) * w;
    data.n_k.push_back(nk);
    data.b_k.push_back(bk);
  }
  data.gamma = Partition(gamma);
  return data;
}

Partition lambda_minus(const Partition& lambda, Prime p) {
  const i64 w = p.value() - 1;
  std::vector<i64> parts;
  for (i64 x : lambda.parts())
    if (x - w > 0) parts.push_back(x - w);
  return Partition(parts);
}

std::vector<AntidiagonalSpan> antidiagonals(const Partition& lambda, Prime p) {
  if (!is_t_regular(lambda, p))
    throw std::domain_error("antidiagonals requires a T-regular partition");
  const i64 w = p.value() - 1;
  const i64 n = static_cast<i64>(lambda.length());
  i64 gamma1 = 0;
  for (i64 x : lambda.parts()) gamma1 += std::min(x, w);
  std::vector<AntidiagonalSpan> spans;
  for (i64 k = 1; k <= gamma1; ++k) {
    // rows i with 1 <= j <= lambda_i where j = k + p - 1 - i(p-1)
    i64 lo = 0, hi = 0;
    for (i64 i = 1; i <= n; ++i) {
      i64 j = k + w - i * w;
      if (j < 1 || j > lambda.part(static_cast<size_t>(i))) continue;
      if (lo == 0) lo = i;
      hi = i;
    }
    if (lo == 0) throw std::logic_error("empty antidiagonal in a T-regular diagram");
    spans.push_back({hi, hi - lo + 1});
  }
  return spans;
}

Partition remove_last_antidiagonal(const Partition& lambda, Prime p) {
  auto spans = antidiagonals(lambda, p);
  if (spans.empty()) throw std::invalid_argument("empty partition has no antidiagonals");
  const AntidiagonalSpan last = spans.back();
  std::vector<i64> parts(lambda.parts());
  for (i64 i = last.lowest_row - last.length + 1; i <= last.lowest_row; ++i)
    parts[static_cast<size_t>(i - 1)] -= 1;
  std::vector<i64> cleaned;
  for (i64 x : parts)
    if (x > 0) cleaned.push_back(x);
  return Partition(cleaned);
}

Polynomial v_polynomial(const Partition& lambda, Prime p, int nvars) {
  if (nvars < 0) nvars = static_cast<int>(lambda.length());
  if (nvars < static_cast<int>(lambda.length()))
    throw std::invalid_argument("v_polynomial: nvars smaller than partition length");
  Polynomial result = Polynomial::constant(p, nvars, 1);
  for (const AntidiagonalSpan& span : antidiagonals(lambda, p)) {
    std::vector<int> idx;
    std::vector<i64> exps;
    for (i64 t = 0; t < span.length; ++t) {
      idx.push_back(static_cast<int>(span.lowest_row - span.length + 1 + t));
      exps.push_back(checked_pow(p.value(), static_cast<u32>(t)));
    }
    result = result * vandermonde(p, nvars, idx, exps);
  }
  return result;
}

namespace {

// lambda_i = a_i (p-1) + b_i with 1 <= b_i <= p-1
std::pair<i64, i64> block_decompose(i64 part, Prime p) {
  const i64 w = p.value() - 1;
  i64 a = (part - 1) / w;
  i64 b = part - a * w;
  return {a, b};
}

}  // namespace

std::pair<Monomial, int> s_monomial(const Partition& lambda, Prime p, int nvars) {
  if (nvars < 0) nvars = static_cast<int>(lambda.length());
  if (nvars < static_cast<int>(lambda.length()))
    throw std::invalid_argument("s_monomial: nvars smaller than partition length");
  if (!is_t_regular(lambda, p))
    throw std::domain_error("s_monomial requires a T-regular partition");
  std::vector<u32> exps(static_cast<size_t>(nvars), 0);
  for (size_t i = 0; i < lambda.length(); ++i) {
    auto [a, b] = block_decompose(lambda.parts()[i], p);
    i64 e = checked_sub(checked_mul(b + 1, checked_pow(p.value(), static_cast<u32>(a))), 1);
    if (e >= kMaxExponent) throw OverflowError("spike exponent out of range");
    exps[i] = static_cast<u32>(e);
  }
  int sign = epsilon(lambda, p) % 2 == 0 ? 1 : -1;
  return {Monomial(std::move(exps)), sign};
}

i64 epsilon(const Partition& lambda, Prime p) {
  TRegularData data = t_conjugate(lambda, p);
  i64 e = 0, sign = 1;
  for (size_t j = 1; 2 * j <= data.m; ++j) {
    e += sign * data.gamma.parts()[2 * j - 1];
    sign = -sign;
  }
  return e;
}

Polynomial w_conjugate_polynomial(const Partition& lambda, Prime p, int nvars) {
  if (nvars < 0) nvars = static_cast<int>(lambda.length());
  if (nvars < static_cast<int>(lambda.length()))
    throw std::invalid_argument("w_conjugate_polynomial: nvars smaller than partition length");
  Partition conj = lambda.conjugate();
  Polynomial result = Polynomial::constant(p, nvars, 1);
  for (i64 col : conj.parts())
    result = result * vandermonde_w(p, nvars, static_cast<int>(col));
  return result;
}

Polynomial p_prime_polynomial(const Partition& lambda, Prime p, int nvars) {
  if (nvars < 0) nvars = static_cast<int>(lambda.length());
  TRegularData data = t_conjugate(lambda, p);
  Polynomial result = Polynomial::constant(p, nvars, 1);
  for (size_t j = 0; j < data.m; ++j) {
    Polynomial factor = w_conjugate_polynomial(data.blocks[j], p, nvars);
    result = result * factor.frobenius_power(static_cast<u32>(j));
  }
  return result;
}

RSequence tab_r_sequence(const Partition& lambda, Prime p) {
  TRegularData data = t_conjugate(lambda, p);
  const i64 w = p.value() - 1;

  // tableau rule: the highest box of an antidiagonal in row i gets p_{i-1};
  // each following box down the antidiagonal multiplies by p
  RSequence out;
  out.tableau.resize(lambda.length());
  for (size_t i = 0; i < lambda.length(); ++i)
    out.tableau[i].assign(static_cast<size_t>(lambda.parts()[i]), 0);
  std::vector<i64> tab_r(data.m, 0);
  auto spans = antidiagonals(lambda, p);
  for (size_t k = 1; k <= spans.size(); ++k) {
    const AntidiagonalSpan& span = spans[k - 1];
    i64 top_row = span.lowest_row - span.length + 1;
    i64 value = rep_unit(static_cast<u32>(top_row - 1), p);
    for (i64 i = top_row; i <= span.lowest_row; ++i) {
      i64 j = static_cast<i64>(k) + w - i * w;
      out.tableau[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = value;
      i64 block = (j + w - 1) / w;  // 1-based block of column j
      tab_r[static_cast<size_t>(block - 1)] += value;
      value = checked_mul(value, p.value());
    }
  }

  // closed form r_k = (b_k+1) p_{n_k-1} - (n_k-1) - sum_{j>k} p^{j-k-1} gamma_j
  std::vector<i64> closed(data.m, 0);
  for (size_t k = 1; k <= data.m; ++k) {
    i64 nk = data.n_k[k - 1], bk = data.b_k[k - 1];
    i64 r = checked_sub(checked_mul(bk + 1, rep_unit(static_cast<u32>(nk - 1), p)), nk - 1);
    for (size_t j = k + 1; j <= data.m; ++j) {
      i64 pw = checked_pow(p.value(), static_cast<u32>(j - k - 1));
      r = checked_sub(r, checked_mul(pw, data.gamma.parts()[j - 1]));
    }
    closed[k - 1] = r;
  }
  if (closed != tab_r)
    throw std::logic_error("tableau and closed-form r-sequences disagree for " + lambda.to_string());
  for (size_t k = 0; k + 1 < closed.size(); ++k)
    if (closed[k] < checked_mul(static_cast<i64>(p.value()), closed[k + 1]))
      throw std::logic_error("r-sequence is not admissible for " + lambda.to_string());
  out.r = closed;
  return out;
}

i64 d_c(const Partition& lambda, Prime p) {
  TRegularData data = t_conjugate(lambda, p);
  i64 d = 0;
  for (size_t i = 0; i < data.m; ++i) {
    i64 pw = checked_pow(p.value(), static_cast<u32>(i));
    d = checked_add(d, checked_mul(pw, data.gamma.parts()[i]));
  }
  return d;
}

i64 d_s(const Partition& lambda, Prime p) {
  Partition conj = lambda.conjugate();
  i64 d = 0;
  for (i64 col : conj.parts()) d = checked_add(d, rep_unit(static_cast<u32>(col), p));
  return d;
}

MilnorElement milnor_spike(const Partition& mu, Prime p) {
  std::vector<i64> r;
  for (i64 part : mu.parts()) {
    auto [a, b] = block_decompose(part, p);
    r.push_back(checked_sub(checked_mul(b + 1, checked_pow(p.value(), static_cast<u32>(a))), 1));
  }
  return MilnorElement(r);
}

i64 R_of(i64 r, const Partition& lambda, Prime p) {
  i64 value = checked_mul(r, p.value() - 1);
  value = checked_add(value, d_c(lambda, p));
  return checked_sub(value, d_c(lambda_minus(lambda, p), p));
}

std::vector<Partition> t_regular_partitions(int max_len, Prime p, i64 max_ds) {
  // column p-regularity forces lambda_i <= (len - i + 1)(p-1), so the search
  // space is small; build parts from the bottom row up
  std::vector<Partition> out;
  const i64 w = p.value() - 1;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<i64> parts(static_cast<size_t>(len), 0);
    auto rec = [&](auto&& self, int i) -> void {  // fill position i (0-based), bottom-up
      if (i < 0) {
        Partition cand(parts);  // filled bottom-up, so already weakly decreasing
        if (d_s(cand, p) <= max_ds && is_t_regular(cand, p)) out.push_back(cand);
        return;
      }
      i64 lo = (i == len - 1) ? 1 : parts[static_cast<size_t>(i + 1)];
      i64 hi = (i == len - 1) ? w : parts[static_cast<size_t>(i + 1)] + w;
      for (i64 x = lo; x <= hi; ++x) {
        parts[static_cast<size_t>(i)] = x;
        self(self, i - 1);
      }
    };
    rec(rec, len - 1);
  }
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.parts() < b.parts();
  });
  return out;
}

}  // namespace steenrod
