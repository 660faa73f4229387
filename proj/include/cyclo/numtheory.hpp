// SPDX-License-Identifier: Apache-2.0
//
// Elementary number theory on machine words, plus a few big-integer helpers.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace cyclo {

using u64 = std::uint64_t;
using Rng = std::mt19937_64;

struct PrimePower {
  u64 prime;
  unsigned exponent;
  bool operator==(const PrimePower&) const = default;
};

// Ascending by prime.
using Factorization = std::vector<PrimePower>;

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 a, u64 e, u64 m);
u64 gcd_u64(u64 a, u64 b);

bool is_prime(u64 n);
bool is_prime(const mpz_class& n);

// Trial division for small factors, Pollard rho (Brent) for the rest.
Factorization factor(u64 n);
std::vector<u64> divisors(const Factorization& f);
std::vector<u64> divisors(u64 n);
u64 largest_prime_factor(u64 n);

u64 euler_phi(u64 n);
int moebius(u64 n);
u64 radical_int(u64 n);

// phi(0..n) by sieve; entry 0 is 0.
std::vector<std::uint32_t> totient_table(std::uint32_t n);

std::vector<u64> inverse_totient(u64 d, bool squarefree_only = false);

// All n >= 1 with phi(n) <= d, ascending.
std::vector<u64> indexes_with_totient_at_most(u64 d);

// Smallest B with phi(n) <= d  =>  n <= B.  Memoized, thread-safe.
u64 inverse_totient_max(u64 d);

// First prime p = 1 + k*s with s >= min_cofactor and p > min_value.
u64 first_prime_in_progression(u64 k, u64 min_cofactor, u64 min_value);

// Same, but the starting cofactor is shifted by a random offset in [0, spread).
u64 find_prime_in_progression(u64 k, u64 min_cofactor, u64 min_value, Rng& rng,
                              u64 spread = 1024);

u64 primitive_root(u64 p);
u64 primitive_kth_root(u64 p, u64 k);
u64 multiplicative_order(u64 a, u64 p);

// N / gcd(N, g^inf); saturate(0, g) == 0.
mpz_class saturate(mpz_class n, const mpz_class& g);

// Independent stream for a (seed, key) pair; used to give every candidate
// order its own reproducible randomness.
u64 substream_seed(u64 seed, u64 key);

}  // namespace cyclo
