// SPDX-License-Identifier: Apache-2.0

#include "cyclo/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace cyclo {

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, unsigned s) {
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for all n < 2^64.
  for (u64 a : {2u, 325u, 9375u, 28178u, 450775u, 9780504u, 1795265022u}) {
    if (a % n == 0) continue;
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  if (n.fits_ulong_p()) return is_prime(static_cast<u64>(n.get_ui()));
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

u64 pollard_brent(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, q = 1, g = 1, ys = 2;
    const u64 m = 128;
    u64 r = 1;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_rec(u64 n, std::map<u64, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  u64 d = pollard_brent(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

Factorization factor(u64 n) {
  if (n == 0) throw std::invalid_argument("factor: n must be positive");
  std::map<u64, unsigned> acc;
  for (u64 p = 2; p < 1000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      ++acc[p];
      n /= p;
    }
  }
  factor_rec(n, acc);
  Factorization out;
  for (auto [p, e] : acc) out.push_back({p, e});
  return out;
}

std::vector<u64> divisors(const Factorization& f) {
  std::vector<u64> out{1};
  for (auto [p, e] : f) {
    const std::size_t n = out.size();
    u64 pk = 1;
    for (unsigned i = 0; i < e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < n; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<u64> divisors(u64 n) { return divisors(factor(n)); }

u64 largest_prime_factor(u64 n) {
  if (n < 2) return 1;
  return factor(n).back().prime;
}

u64 euler_phi(u64 n) {
  if (n == 0) throw std::invalid_argument("euler_phi: n must be positive");
  u64 r = 1;
  for (auto [p, e] : factor(n)) {
    r *= p - 1;
    for (unsigned i = 1; i < e; ++i) r *= p;
  }
  return r;
}

int moebius(u64 n) {
  if (n == 0) throw std::invalid_argument("moebius: n must be positive");
  int m = 1;
  for (auto [p, e] : factor(n)) {
    if (e > 1) return 0;
    m = -m;
  }
  return m;
}

u64 radical_int(u64 n) {
  if (n == 0) throw std::invalid_argument("radical_int: n must be positive");
  u64 r = 1;
  for (auto [p, e] : factor(n)) r *= p;
  return r;
}

std::vector<std::uint32_t> totient_table(std::uint32_t n) {
  std::vector<std::uint32_t> phi(n + 1);
  std::iota(phi.begin(), phi.end(), 0u);
  for (std::uint32_t p = 2; p <= n; ++p) {
    if (phi[p] != p) continue;
    for (std::uint32_t m = p; m <= n; m += p) phi[m] -= phi[m] / p;
  }
  return phi;
}

namespace {

void totient_search(u64 rem, std::size_t start, u64 n, const std::vector<u64>& primes,
                    bool squarefree_only, std::vector<u64>& out) {
  if (rem == 1) out.push_back(n);
  for (std::size_t i = start; i < primes.size(); ++i) {
    const u64 p = primes[i];
    if (p - 1 > rem) break;
    if (rem % (p - 1) != 0) continue;
    u64 r = rem / (p - 1);
    u64 m = n * p;
    totient_search(r, i + 1, m, primes, squarefree_only, out);
    if (squarefree_only) continue;
    while (r % p == 0) {
      r /= p;
      m *= p;
      totient_search(r, i + 1, m, primes, squarefree_only, out);
    }
  }
}

}  // namespace

std::vector<u64> inverse_totient(u64 d, bool squarefree_only) {
  if (d == 0) throw std::invalid_argument("inverse_totient: d must be positive");
  if (d > 1 && d % 2 == 1) return {};
  std::vector<u64> primes;
  for (u64 e : divisors(d)) {
    if (is_prime(e + 1)) primes.push_back(e + 1);
  }
  std::vector<u64> out;
  totient_search(d, 0, 1, primes, squarefree_only, out);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Sieve limit that is guaranteed to contain every n with phi(n) <= d.
std::uint32_t totient_search_limit(u64 d) {
  // Candidate limit from n/phi(n) < e^gamma lnln n + 3/lnln n (n >= 3),
  // found by fixed-point iteration with a generous margin.
  double limit = 30.0 * static_cast<double>(d) + 30.0;
  for (int it = 0; it < 60; ++it) {
    const double ll = std::log(std::log(std::max(limit, 16.0)));
    const double next = static_cast<double>(d) * (1.7810724179901979 * ll + 3.0 / ll) * 1.05 + 30.0;
    if (std::abs(next - limit) < 1.0) break;
    limit = next;
  }
  if (limit > 4.0e9) throw std::overflow_error("totient search limit too large");
  return static_cast<std::uint32_t>(limit);
}

}  // namespace

std::vector<u64> indexes_with_totient_at_most(u64 d) {
  const std::uint32_t cap = totient_search_limit(d);
  const auto phi = totient_table(cap);
  std::vector<u64> out;
  for (std::uint32_t n = 1; n <= cap; ++n) {
    if (phi[n] <= d) out.push_back(n);
  }
  return out;
}

u64 inverse_totient_max(u64 d) {
  if (d == 0) throw std::invalid_argument("inverse_totient_max: d must be positive");
  static std::mutex mu;
  static std::map<u64, u64> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(d); it != memo.end()) return it->second;
  }
  const std::uint32_t cap = totient_search_limit(d);
  const auto phi = totient_table(cap);
  u64 best = 1;
  for (std::uint32_t n = cap; n >= 1; --n) {
    if (phi[n] <= d) {
      best = n;
      break;
    }
  }
  std::lock_guard lock(mu);
  memo.emplace(d, best);
  return best;
}

u64 first_prime_in_progression(u64 k, u64 min_cofactor, u64 min_value) {
  if (k < 1) throw std::invalid_argument("first_prime_in_progression: k must be positive");
  u64 s = std::max<u64>(min_cofactor, 1);
  if (min_value >= 1) s = std::max(s, min_value / k);
  for (u64 iter = 0; iter < (u64{1} << 24); ++iter, ++s) {
    const u64 p = 1 + k * s;
    if (p > min_value && is_prime(p)) return p;
  }
  throw std::runtime_error("first_prime_in_progression: no prime found");
}

u64 find_prime_in_progression(u64 k, u64 min_cofactor, u64 min_value, Rng& rng, u64 spread) {
  if (k < 2) throw std::invalid_argument("find_prime_in_progression: k must be at least 2");
  const u64 offset = spread > 1 ? std::uniform_int_distribution<u64>(0, spread - 1)(rng) : 0;
  return first_prime_in_progression(k, std::max<u64>(min_cofactor, 1) + offset, min_value);
}

u64 primitive_root(u64 p) {
  if (p == 2) return 1;
  const auto f = factor(p - 1);
  for (u64 g = 2;; ++g) {
    bool ok = true;
    for (auto [q, e] : f) {
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
}

u64 primitive_kth_root(u64 p, u64 k) {
  if (k == 0 || (p - 1) % k != 0) {
    throw std::invalid_argument("primitive_kth_root: k must divide p-1");
  }
  const u64 z = powmod(primitive_root(p), (p - 1) / k, p);
  for (auto [q, e] : factor(k == 1 ? 1 : k)) {
    if (powmod(z, k / q, p) == 1) throw std::logic_error("primitive_kth_root: order check failed");
  }
  return z;
}

u64 multiplicative_order(u64 a, u64 p) {
  u64 ord = p - 1;
  for (auto [q, e] : factor(p - 1)) {
    for (unsigned i = 0; i < e && powmod(a, ord / q, p) == 1; ++i) ord /= q;
  }
  return ord;
}

mpz_class saturate(mpz_class n, const mpz_class& g) {
  if (g <= 0) throw std::invalid_argument("saturate: g must be positive");
  if (n == 0) return 0;
  n = abs(n);
  mpz_class c = gcd(n, g);
  while (c > 1) {
    while (mpz_divisible_p(n.get_mpz_t(), c.get_mpz_t())) n /= c;
    c = gcd(n, c);
  }
  return n;
}

u64 substream_seed(u64 seed, u64 key) {
  // splitmix64 finaliser over the pair.
  u64 z = seed + 0x9E3779B97F4A7C15ULL * (key + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace cyclo
