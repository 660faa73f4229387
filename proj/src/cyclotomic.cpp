// SPDX-License-Identifier: Apache-2.0

#include "cyclo/cyclotomic.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cyclo {

namespace {

struct MoebiusFactor {
  u64 d;
  int mu;  // +1: factor (1 - x^d), -1: its inverse
};

std::vector<MoebiusFactor> moebius_factors(u64 k) {
  const auto fk = factor(k);
  std::vector<MoebiusFactor> out;
  for (u64 d : divisors(fk)) {
    const int mu = moebius(k / d);
    if (mu != 0) out.push_back({d, mu});
  }
  return out;
}

template <typename T>
void apply_factor(std::vector<T>& s, u64 d, int mu) {
  const std::size_t m = s.size();
  if (d >= m) return;
  if (mu > 0) {
    for (std::size_t i = m; i-- > d;) s[i] -= s[i - d];
  } else {
    for (std::size_t i = d; i < m; ++i) s[i] += s[i - d];
  }
}

bool apply_factor_checked(std::vector<std::int64_t>& s, u64 d, int mu) {
  const std::size_t m = s.size();
  if (d >= m) return true;
  if (mu > 0) {
    for (std::size_t i = m; i-- > d;) {
      if (__builtin_sub_overflow(s[i], s[i - d], &s[i])) return false;
    }
  } else {
    for (std::size_t i = d; i < m; ++i) {
      if (__builtin_add_overflow(s[i], s[i - d], &s[i])) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<std::vector<std::int64_t>> phi_suffix_word(u64 k, std::size_t m) {
  if (k < 2) throw std::invalid_argument("phi_suffix: k must be at least 2");
  std::vector<std::int64_t> s(m, 0);
  if (m == 0) return s;
  s[0] = 1;
  for (auto [d, mu] : moebius_factors(k)) {
    if (!apply_factor_checked(s, d, mu)) return std::nullopt;
  }
  return s;
}

IntPoly phi_suffix(u64 k, std::size_t m) {
  if (auto w = phi_suffix_word(k, m)) {
    std::vector<Integer> v(w->size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<long>((*w)[i]);
    return IntPoly(std::move(v));
  }
  std::vector<Integer> s(m, 0);
  s[0] = 1;
  for (auto [d, mu] : moebius_factors(k)) apply_factor(s, d, mu);
  return IntPoly(std::move(s));
}

IntPoly phi_poly(u64 k) {
  if (k == 0) throw std::invalid_argument("phi_poly: k must be positive");
  if (k == 1) return IntPoly{-1, 1};
  const u64 rad = radical_int(k);
  return inflate(phi_suffix(rad, euler_phi(rad) + 1), k / rad);
}

Integer phi_value_num(u64 k, const RationalPoint& beta) {
  if (k == 0) throw std::invalid_argument("phi_value_num: k must be positive");
  if (k == 1) return beta.num - beta.den;
  Integer num = 1;
  Integer den = 1;
  Integer pd, qd;
  for (auto [d, mu] : moebius_factors(k)) {
    mpz_pow_ui(pd.get_mpz_t(), beta.num.get_mpz_t(), d);
    mpz_pow_ui(qd.get_mpz_t(), beta.den.get_mpz_t(), d);
    (mu > 0 ? num : den) *= pd - qd;
  }
  mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return num;
}

IntPoly multiply_by_phi(const IntPoly& f, u64 k) {
  if (k == 0) throw std::invalid_argument("multiply_by_phi: k must be positive");
  // Phi_k = prod (x^d - 1)^mu(k/d) for every k >= 1.
  const auto fs = moebius_factors(k);
  IntPoly g = f;
  for (auto [d, mu] : fs) {
    if (mu > 0) g = mul_xpow_minus_one(g, d);
  }
  for (auto [d, mu] : fs) {
    if (mu < 0) {
      auto q = div_xpow_minus_one(g, d);
      if (!q) throw std::logic_error("multiply_by_phi: inexact division");
      g = std::move(*q);
    }
  }
  return g;
}

std::optional<IntPoly> divide_by_phi(const IntPoly& f, u64 k) {
  if (k == 0) throw std::invalid_argument("divide_by_phi: k must be positive");
  const auto fs = moebius_factors(k);
  IntPoly g = f;
  for (auto [d, mu] : fs) {
    if (mu < 0) g = mul_xpow_minus_one(g, d);
  }
  for (auto [d, mu] : fs) {
    if (mu > 0) {
      auto q = div_xpow_minus_one(g, d);
      if (!q) return std::nullopt;
      g = std::move(*q);
    }
  }
  return g;
}

HeightTable::HeightTable(std::vector<Row> rows, Source source) : rows_(std::move(rows)), source_(source) {
  for (std::size_t i = 1; i < rows_.size(); ++i) {
    if (rows_[i].limit <= rows_[i - 1].limit || rows_[i].height < rows_[i - 1].height) {
      throw std::invalid_argument("HeightTable: rows must have increasing limits and non-decreasing heights");
    }
  }
}

const HeightTable& HeightTable::degree_table() {
  static const HeightTable table({{48, 1},
                                  {240, 2},
                                  {576, 3},
                                  {768, 4},
                                  {1280, 5},
                                  {1440, 6},
                                  {3840, 7},
                                  {5760, 9},
                                  {8640, 23}},
                                 Source::builtin);
  return table;
}

HeightTable HeightTable::from_bfile(std::istream& in) {
  std::vector<Row> rows;
  std::string line;
  long long prev = -1;
  u64 running = 1;
  bool gap = false;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long long n = 0;
    long long a = 0;
    if (!(ls >> n >> a) || n < 0 || a < 0) {
      throw std::invalid_argument("b-file: malformed line " + std::to_string(lineno));
    }
    if (n <= prev) throw std::invalid_argument("b-file: indexes not increasing at line " + std::to_string(lineno));
    // Positions below the first entry are constant terms (+-1) only if the
    // file starts at 0 or 1; any later gap ends the usable range.
    if ((prev < 0 && n > 1) || (prev >= 0 && n != prev + 1)) gap = true;
    prev = n;
    if (gap) continue;
    running = std::max<u64>(running, static_cast<u64>(a));
    rows.push_back({static_cast<u64>(n) + 1, running});
  }
  return HeightTable(std::move(rows), Source::oeis_bfile);
}

HeightTable HeightTable::from_bfile_path(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("b-file: cannot open " + path);
  return from_bfile(in);
}

std::optional<u64> HeightTable::lookup(u64 x) const {
  auto it = std::upper_bound(rows_.begin(), rows_.end(), x, [](u64 v, const Row& r) { return v < r.limit; });
  if (it == rows_.end()) return std::nullopt;
  return it->height;
}

std::optional<u64> height_bound_by_degree(u64 d) { return HeightTable::degree_table().lookup(d); }

std::optional<u64> outer_coeff_bound(std::size_t m, u64 n, const HeightTable* bfile) {
  if (m == 0 || n == 0) throw std::invalid_argument("outer_coeff_bound: m and n must be positive");
  if (n <= 2) return 1;
  std::vector<u64> odd;
  for (auto [p, e] : factor(n)) {
    if (p != 2) odd.push_back(p);
  }
  if (odd.size() <= 2) return 1;

  std::vector<u64> small;
  for (u64 p : odd) {
    if (p < m) small.push_back(p);
  }
  if (small.size() <= 2) return 1;

  std::optional<u64> best;
  auto take = [&](std::optional<u64> b) {
    if (b && (!best || *b < *best)) best = b;
  };
  u64 full_degree = 1;
  for (u64 p : odd) full_degree *= p - 1;
  take(height_bound_by_degree(full_degree));
  if ((odd.size() - small.size()) % 2 == 0) {
    u64 deg = 1;
    for (u64 p : small) deg *= p - 1;
    take(height_bound_by_degree(deg));
  }
  if (bfile) take(bfile->lookup(m - 1));
  return best;
}

}  // namespace cyclo
