// SPDX-License-Identifier: Apache-2.0

#include "cyclo/cyclo_factors.hpp"

#include <algorithm>
#include <stdexcept>

#include "cyclo/cyclotomic.hpp"

namespace cyclo {

std::string to_string(IndexStatus s) {
  switch (s) {
    case IndexStatus::probable:
      return "probable";
    case IndexStatus::verified:
      return "verified";
    case IndexStatus::refuted:
      return "refuted";
  }
  return "?";
}

std::vector<u64> FactorIndexReport::indexes() const {
  std::vector<u64> out = verified_low;
  for (const auto& e : candidates) {
    if (e.status != IndexStatus::refuted) out.push_back(e.k);
  }
  return out;
}

namespace {

// Phi_k(beta)_num without its intrinsic prime: every prime left has
// multiplicative order exactly k modulo it.
Integer primitive_part_of_value(u64 k, const RationalPoint& beta) {
  Integer v = phi_value_num(k, beta);
  const Integer r = largest_prime_factor(k);
  while (mpz_divisible_p(v.get_mpz_t(), r.get_mpz_t())) v /= r;
  return v;
}

class PowerTracker {
 public:
  PowerTracker(const Integer& base, const Integer& modulus) : base_(base), mod_(modulus), value_(1 % modulus) {}

  const Integer& advance_to(u64 e) {
    const u64 gap = e - exp_;
    if (gap <= 8) {
      for (u64 i = 0; i < gap; ++i) {
        value_ *= base_;
        value_ %= mod_;
      }
    } else {
      Integer t;
      mpz_powm_ui(t.get_mpz_t(), base_.get_mpz_t(), gap, mod_.get_mpz_t());
      value_ *= t;
      value_ %= mod_;
    }
    exp_ = e;
    return value_;
  }

  void reduce(const Integer& new_mod) {
    mod_ = new_mod;
    value_ %= mod_;
  }

 private:
  Integer base_;
  Integer mod_;
  Integer value_;
  u64 exp_ = 0;
};

}  // namespace

std::vector<u64> refine_candidates(IntPoly f, const RationalPoint& beta, const std::vector<u64>& L, bool palindromic) {
  const Integer& p = beta.num;
  const Integer& q = beta.den;
  if (p <= q) throw std::invalid_argument("refine_candidates: beta must exceed 1");
  if (f.is_zero()) throw std::invalid_argument("refine_candidates: zero polynomial");

  Integer n;
  while (true) {
    const Integer at_beta = eval_rational_num(f, beta);
    if (at_beta == 0) {
      f = *divide_exact(f, IntPoly::linear(-p, q));
      continue;
    }
    if (palindromic) {
      n = abs(at_beta);
      break;
    }
    const Integer at_inverse = eval_rational_num_inverse(f, beta);
    if (at_inverse == 0) {
      f = *divide_exact(f, IntPoly::linear(-q, p));
      continue;
    }
    n = gcd(at_beta, at_inverse);
    break;
  }

  const bool beta_is_two = p == 2 && q == 1;
  const u64 deg = static_cast<u64>(f.degree());
  PowerTracker pk(p, n);
  PowerTracker qk(q, n);
  std::vector<u64> out;
  Integer g, t, pe, qe;
  for (u64 k : L) {
    if (n == 1) break;
    if (euler_phi(k) > deg) continue;
    g = pk.advance_to(k) - qk.advance_to(k);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    if (g == 1) continue;

    if (beta_is_two && k == 6) {
      // Phi_6(2) = 3 has no primitive prime.
      if (mpz_divisible_ui_p(n.get_mpz_t(), 3)) out.push_back(k);
      continue;
    }
    // Strip primes whose order is a proper divisor of k.
    for (auto [r, e] : factor(k)) {
      mpz_powm_ui(pe.get_mpz_t(), p.get_mpz_t(), k / r, g.get_mpz_t());
      mpz_powm_ui(qe.get_mpz_t(), q.get_mpz_t(), k / r, g.get_mpz_t());
      t = pe - qe;
      mpz_gcd(t.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t());
      if (t != 1) g = saturate(g, t);
      if (g == 1) break;
    }
    if (g == 1) continue;
    const Integer prim = primitive_part_of_value(k, beta);
    if (!mpz_divisible_p(g.get_mpz_t(), prim.get_mpz_t())) continue;
    out.push_back(k);
    n = saturate(n, g);
    pk.reduce(n);
    qk.reduce(n);
  }
  return out;
}

RationalPoint next_rational(const RationalPoint& r) {
  Integer p = r.num;
  Integer q = r.den + 1;
  while (true) {
    if (q >= p) {
      p += 1;
      q = 1;
      return {p, q};
    }
    if (gcd(p, q) == 1) return {p, q};
    q += 1;
  }
}

RationalPoint random_rational(Rng& rng, const RationalPoint& previous, unsigned max_jump) {
  const unsigned jump = std::uniform_int_distribution<unsigned>(1, std::max(1u, max_jump))(rng);
  RationalPoint r = previous;
  for (unsigned i = 0; i < jump; ++i) r = next_rational(r);
  if (r.num > 65536) throw std::runtime_error("random_rational: evaluation points exhausted");
  return r;
}

u64 initial_totient_bound(const IntPoly& f) {
  const std::size_t d = static_cast<std::size_t>(f.degree());
  if (d < 1) return 0;
  // Longest combined low run a_0..a_r and high run a_d..a_{d-s} sharing a
  // common factor; any cyclotomic factor then survives reduction mod that
  // factor inside x^-(r+1) f.
  Integer low = abs(f[0]);
  long best = -1;
  for (std::size_t r = 0; r < d; ++r) {
    if (r > 0) low = gcd(low, f[r]);
    Integer acc = gcd(low, f[d]);
    if (acc == 1) break;
    std::size_t s = 0;
    while (s + 1 < d - r) {
      Integer next = gcd(acc, f[d - s - 1]);
      if (next == 1) break;
      acc = std::move(next);
      ++s;
    }
    best = std::max(best, static_cast<long>(r + s + 2));
  }
  if (best < 0) return d;
  return best >= static_cast<long>(d) ? 0 : d - static_cast<std::size_t>(best);
}

FactorIndexReport find_cyclo_factor_indexes(const IntPoly& input, Rng& rng, const FactorOptions& opts) {
  if (input.degree() < 1) throw std::invalid_argument("find_cyclo_factor_indexes: non-constant polynomial required");
  FactorIndexReport rep;
  IntPoly f = primitive_part(input);
  if (auto [g, e] = strip_x_power(f); e > 0) {
    f = std::move(g);
    rep.preprocessing_log.push_back("stripped x^" + std::to_string(e));
  }
  bool palindromic = false;
  if (opts.preprocess && f.degree() > 0) {
    IntPoly rad = radical_poly(f);
    if (rad.degree() < f.degree()) rep.preprocessing_log.push_back("radical: degree " + std::to_string(rad.degree()));
    f = std::move(rad);
    IntPoly pal = gcd_poly(f, reverse(f));
    if (pal.degree() < f.degree()) rep.preprocessing_log.push_back("palindromic part: degree " + std::to_string(pal.degree()));
    f = std::move(pal);
    palindromic = f.degree() > 0 && is_palindromic(f);
  }
  if (f.degree() < 1) {
    rep.initial_bound = 0;
    return rep;
  }

  if (eval(f, Integer(1)) == 0) rep.verified_low.push_back(1);
  if (eval(f, Integer(-1)) == 0) rep.verified_low.push_back(2);

  rep.initial_bound = initial_totient_bound(f);
  if (rep.initial_bound < static_cast<u64>(f.degree())) {
    rep.preprocessing_log.push_back("outer-run bound: phi(k) <= " + std::to_string(rep.initial_bound));
  }
  std::vector<u64> L;
  if (rep.initial_bound >= 2) {
    for (u64 k : indexes_with_totient_at_most(rep.initial_bound)) {
      if (k >= 3) L.push_back(k);
    }
  }

  RationalPoint beta{2, 1};
  L = refine_candidates(f, beta, L, palindromic);
  rep.evaluation_points_used.push_back(beta);
  bool special_done = false;
  static const RationalPoint kSpecial[] = {{117, 98}, {133, 18}, {169, 6}};
  while (!L.empty()) {
    beta = random_rational(rng, beta);
    rep.evaluation_points_used.push_back(beta);
    std::vector<u64> next = refine_candidates(f, beta, L, palindromic);
    if (next == L) {
      if (special_done) break;
      special_done = true;
      const RationalPoint& sb = kSpecial[std::uniform_int_distribution<int>(0, 2)(rng)];
      rep.evaluation_points_used.push_back(sb);
      next = refine_candidates(f, sb, L, palindromic);
      if (next == L) break;
    }
    L = std::move(next);
  }

  for (u64 k : L) rep.candidates.push_back({k, IndexStatus::probable});
  if (opts.verify) {
    for (auto& c : rep.candidates) c.status = divide_by_phi(f, c.k) ? IndexStatus::verified : IndexStatus::refuted;
    rep.verification_done = true;
  }
  return rep;
}

}  // namespace cyclo
