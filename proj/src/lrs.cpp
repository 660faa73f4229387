// SPDX-License-Identifier: Apache-2.0

#include "cyclo/lrs.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>

#include "cyclo/cyclo_factors.hpp"
#include "cyclo/cyclotomic.hpp"
#include "cyclo/modpoly.hpp"

namespace cyclo {

std::string to_string(OrderStatus s) {
  switch (s) {
    case OrderStatus::probable:
      return "probable";
    case OrderStatus::verified:
      return "verified";
    case OrderStatus::refuted:
      return "refuted";
  }
  return "?";
}

std::string to_string(LrsMode m) {
  switch (m) {
    case LrsMode::all_orders:
      return "all_orders";
    case LrsMode::first_order:
      return "first_order";
    case LrsMode::decision_only:
      return "decision_only";
  }
  return "?";
}

std::vector<u64> OrderReport::order_list() const {
  std::vector<u64> out;
  for (const auto& e : orders) {
    if (e.status != OrderStatus::refuted) out.push_back(e.k);
  }
  return out;
}

std::string to_string(const ScaleFactor& s) {
  std::string out = s.num.get_str();
  if (s.den != 1) out += "/" + s.den.get_str();
  if (s.root != 1) out = "(" + out + ")^(1/" + std::to_string(s.root) + ")";
  return out;
}

namespace {

std::string join(const std::vector<u64>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "}";
}

unsigned valuation(Integer n, unsigned long p) {
  unsigned v = 0;
  while (n != 0 && mpz_divisible_ui_p(n.get_mpz_t(), p)) {
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    ++v;
  }
  return v;
}

// Primes below 10^6 dividing n.
std::vector<unsigned long> small_prime_factors(Integer n) {
  n = abs(n);
  std::vector<unsigned long> out;
  for (unsigned long p = 2; p < 1000000 && n > 1; p += (p == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out.push_back(p);
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    }
  }
  return out;
}

bool is_binomial(const IntPoly& f) {
  if (f.degree() < 1 || f[0] == 0) return false;
  for (long j = 1; j < f.degree(); ++j) {
    if (f[j] != 0) return false;
  }
  return true;
}

ScaleFactor reduced(Integer num, Integer den, u64 root) {
  Integer g = gcd(num, den);
  return {num / g, den / g, root};
}

// Divides out every rational root p/q with p | a_0 and q | a_d, when both
// are small enough to enumerate.
bool remove_linear_factors(IntPoly& f, std::vector<std::string>& log) {
  if (f.degree() < 1) return true;
  const Integer a0 = abs(f[0]);
  const Integer ad = abs(f.leading());
  if (!a0.fits_ulong_p() || !ad.fits_ulong_p()) {
    log.push_back("linear factors: coefficients too large, skipped");
    return false;
  }
  const auto dp = divisors(a0.get_ui());
  const auto dq = divisors(ad.get_ui());
  if (dp.size() * dq.size() > 100000) {
    log.push_back("linear factors: too many rational candidates, skipped");
    return false;
  }
  std::size_t removed = 0;
  for (u64 q : dq) {
    for (u64 p : dp) {
      if (gcd_u64(p, q) != 1) continue;
      for (int sign : {1, -1}) {
        const RationalPoint r{Integer(p), Integer(q)};
        while (f.degree() >= 1) {
          const IntPoly& h = sign > 0 ? f : negate_arg(f);
          if (eval_rational_num(h, r) != 0) break;
          f = *divide_exact(f, IntPoly::linear(Integer(sign > 0 ? -1 : 1) * Integer(p), Integer(q)));
          ++removed;
        }
      }
    }
  }
  if (removed > 0) log.push_back("removed " + std::to_string(removed) + " linear factor(s)");
  return true;
}

int rank(OrderStatus s) {
  switch (s) {
    case OrderStatus::verified:
      return 2;
    case OrderStatus::probable:
      return 1;
    case OrderStatus::refuted:
      return 0;
  }
  return 0;
}

void merge(std::map<u64, OrderEntry>& acc, const OrderEntry& e) {
  auto [it, inserted] = acc.emplace(e.k, e);
  if (!inserted && rank(e.status) > rank(it->second.status)) it->second = e;
}

}  // namespace

CoefficientReduction reduce_coefficients_once(const IntPoly& f) {
  if (f.degree() < 1 || f[0] == 0) throw std::invalid_argument("reduce_coefficients: need degree > 0 and f(0) != 0");
  const std::size_t d = static_cast<std::size_t>(f.degree());
  if (is_binomial(f)) {
    return {IntPoly::monomial(1, d) + IntPoly::constant(1), reduced(abs(f[0]), abs(f.leading()), d)};
  }
  auto [g, r, d0] = deflate(f);
  if (r > 1) {
    CoefficientReduction sub = reduce_coefficients_once(g);
    sub.g = inflate(sub.g, r);
    sub.lambda.root *= r;
    return sub;
  }
  Integer common = 0;
  for (std::size_t j = 1; j <= d; ++j) common = gcd(common, f[j]);
  if (common == 1) return {f, {}};
  Integer shrink = 1;
  for (unsigned long p : small_prime_factors(common)) {
    unsigned m = ~0u;
    for (std::size_t j = 1; j <= d; ++j) {
      if (f[j] != 0) m = std::min<unsigned>(m, valuation(f[j], p) / static_cast<unsigned>(j));
    }
    Integer pm;
    mpz_ui_pow_ui(pm.get_mpz_t(), p, m);
    shrink *= pm;
  }
  if (shrink == 1) return {f, {}};
  // f(x / shrink): a_j / shrink^j is integral by the choice of m.
  std::vector<Integer> c(f.coeffs());
  Integer s = 1;
  for (std::size_t j = 1; j <= d; ++j) {
    s *= shrink;
    mpz_divexact(c[j].get_mpz_t(), c[j].get_mpz_t(), s.get_mpz_t());
  }
  return {primitive_part(IntPoly(std::move(c))), {1, shrink, 1}};
}

CoefficientReduction reduce_coefficients(const IntPoly& f) {
  CoefficientReduction first = reduce_coefficients_once(f);
  if (is_binomial(f)) return first;
  CoefficientReduction second = reduce_coefficients_once(reverse(first.g));
  // rev(f2)(x) ~ f1(x / lambda2) ~ f(lambda1 / lambda2 * x); both passes see
  // the same deflation, so the roots agree.
  ScaleFactor lam = reduced(first.lambda.num * second.lambda.den, first.lambda.den * second.lambda.num,
                            std::max(first.lambda.root, second.lambda.root));
  IntPoly g = primitive_part(reverse(second.g));
  return {std::move(g), lam};
}

std::vector<u64> lift_order(u64 kappa, u64 r) {
  std::vector<u64> out;
  for (u64 k : divisors(r * kappa)) {
    if (k / gcd_u64(k, r) == kappa) out.push_back(k);
  }
  return out;
}

Preprocessed preprocess(const IntPoly& f, const PreprocessOptions& opts) {
  if (f.degree() < 1) throw std::invalid_argument("preprocess: non-constant polynomial required");
  Preprocessed out;
  auto [g, e] = strip_x_power(f);
  if (e > 0) out.log.push_back("stripped x^" + std::to_string(e));
  const Integer c = content(g);
  if (c != 1) out.log.push_back("removed content " + c.get_str());
  g = primitive_part(g);
  IntPoly rad = radical_poly(g);
  if (rad.degree() < g.degree()) out.log.push_back("square-free part: degree " + std::to_string(rad.degree()));
  g = std::move(rad);
  if (g.degree() < 1) {
    out.core = std::move(g);
    return out;
  }

  auto defl = deflate(g);
  out.core = std::move(defl.g);
  out.r = defl.r;
  if (out.r > 1) {
    std::vector<u64> implied;
    for (u64 k : divisors(out.r)) {
      if (k > 1) implied.push_back(k);
    }
    out.log.push_back("deflated by r = " + std::to_string(out.r) + ", implied orders " + join(implied));
  }
  if (opts.reduce_coefficients && out.core.degree() >= 1) {
    CoefficientReduction red = reduce_coefficients(out.core);
    if (!(red.g == out.core)) {
      out.log.push_back("reduced coefficients, lambda = " + to_string(red.lambda));
      out.core = std::move(red.g);
    }
  }
  if (!opts.decision_only) return out;

  if (out.r > 1) {
    out.witness = factor(out.r).front().prime;
    out.witness_source = "deflation";
    return out;
  }
  if (gcd_poly(out.core, negate_arg(out.core)).degree() > 0) {
    out.witness = 2;
    out.witness_source = "f(x),f(-x)";
    return out;
  }
  if (out.core.degree() >= 2) {
    Rng rng(opts.seed);
    FactorIndexReport cf = find_cyclo_factor_indexes(out.core, rng, {true, false});
    for (const auto& c : cf.candidates) {
      if (c.status == IndexStatus::verified) {
        // Roots zeta and zeta^-1 of Phi_c have ratio zeta^2.
        out.witness = c.k % 2 == 1 ? c.k : c.k / 2;
        out.witness_source = "cyclotomic factor Phi_" + std::to_string(c.k);
        out.log.push_back("cyclotomic factor of index " + std::to_string(c.k));
        return out;
      }
    }
  }
  remove_linear_factors(out.core, out.log);
  return out;
}

CandidateOrders lrs_order_candidates(u64 d, bool conjecture_bound) {
  if (d < 2) throw std::invalid_argument("lrs_order_candidates: degree must be at least 2");
  const u64 top = d * d - d;
  std::vector<char> in_d(top + 1, 0);
  for (u64 a = 1; a <= d; ++a) {
    for (u64 b = 1; b < a; ++b) {
      if ((a * b) % 2 == 0) in_d[a * b] = 1;
    }
  }
  for (u64 a = 2; a <= d / 2; a += 2) in_d[a * a] = 1;

  CandidateOrders out;
  std::vector<char> allowed(top + 1, 0);
  for (u64 v = 1; v <= top; ++v) {
    if (!in_d[v]) continue;
    out.divisor_sieve.push_back(v);
    for (u64 t : divisors(v)) allowed[t] = 1;
  }
  const u64 limit = inverse_totient_max(top);
  const auto phi = totient_table(static_cast<std::uint32_t>(limit));
  const u64 cap = conjecture_bound ? std::min(top, d) : top;
  for (u64 k = 3; k <= limit; ++k) {
    const u64 t = phi[k];
    if (t <= cap && allowed[t]) out.orders.push_back(k);
  }
  return out;
}

bool modular_order_test(const IntPoly& f, u64 k, Rng& rng, unsigned rounds) {
  if (k < 3) throw std::invalid_argument("modular_order_test: k must be at least 3");
  const u64 d = static_cast<u64>(f.degree());
  const u64 min_value = 8 * d * d;
  u64 min_cofactor = std::max<u64>(64, min_value / k + 1);
  for (unsigned round = 0; round < rounds; ++round) {
    std::optional<ModReduction> red;
    for (int attempt = 0; attempt < 64; ++attempt) {
      const u64 p = find_prime_in_progression(k, min_cofactor, min_value, rng);
      ModReduction m = reduce_mod(f, p);
      if (!m.degree_dropped) {
        red = std::move(m);
        break;
      }
      if (attempt % 8 == 7) min_cofactor *= 2;
    }
    if (!red) throw std::runtime_error("modular_order_test: no degree-preserving prime found");
    const PrimeFieldPoly& fb = red->poly;
    const u64 p = fb.modulus();
    const u64 zeta = primitive_kth_root(p, k);
    u64 z = 1;
    for (u64 j = 1; j <= k / 2; ++j) {
      z = mulmod(z, zeta, p);
      if (gcd_u64(j, k) != 1) continue;
      if (gcd_mod(fb, scale_arg_mod(fb, z)).degree() == 0) return false;
    }
  }
  return true;
}

IntPoly phi_scaled_resultant(const IntPoly& f, u64 k) {
  if (k < 1) throw std::invalid_argument("phi_scaled_resultant: k must be positive");
  IntPoly num = IntPoly::constant(1);
  IntPoly den = IntPoly::constant(1);
  for (u64 e : divisors(k)) {
    const int mu = moebius(k / e);
    if (mu == 0) continue;
    // res_y(f(xy), y^e - 1) = +-G_e(f)(x^e)
    IntPoly r = inflate(graeffe(f, e), e);
    (mu > 0 ? num : den) *= r;
  }
  auto q = divide_exact(num, den);
  if (!q) throw std::logic_error("phi_scaled_resultant: inexact quotient");
  return *q;
}

bool verify_order(const IntPoly& f, u64 k) {
  if (k < 2) throw std::invalid_argument("verify_order: k must be at least 2");
  if (f.degree() < 2) return false;
  if (k == 2) return gcd_poly(f, negate_arg(f)).degree() > 0;
  // A common root beta of f and f(zeta x) means beta*zeta is a root too.
  return gcd_poly(f, phi_scaled_resultant(f, k)).degree() > 0;
}

OrderReport lrs_degeneracy_orders(const IntPoly& f, Rng& rng, const LrsOptions& opts) {
  OrderReport rep;
  rep.mode = opts.mode;
  rep.conjecture_bound_used = opts.conjecture_bound;
  const u64 seed = rng();
  const bool decide = opts.mode == LrsMode::decision_only;
  Preprocessed pre = preprocess(f, {decide, opts.reduce_coefficients, seed});
  rep.preprocessing_log = pre.log;
  if (pre.witness) {
    rep.orders.push_back({*pre.witness, OrderStatus::verified, pre.witness_source});
    rep.degenerate = true;
    return rep;
  }

  const IntPoly& core = pre.core;
  const u64 r = pre.r;
  std::map<u64, OrderEntry> acc;
  for (u64 k : divisors(r)) {
    if (k > 1) merge(acc, {k, OrderStatus::verified, "deflation"});
  }

  // Early exit only when the core scan order equals the final order.
  const bool stop_early = r == 1 && opts.mode != LrsMode::all_orders;
  std::vector<OrderEntry> core_orders;
  auto accept = [&](const OrderEntry& e) {
    core_orders.push_back(e);
    return stop_early && e.status != OrderStatus::refuted;
  };

  bool done = false;
  if (core.degree() >= 2) {
    if (gcd_poly(core, negate_arg(core)).degree() > 0) done = accept({2, OrderStatus::verified, "f(x),f(-x)"});
    if (!done) {
      const std::vector<u64> cands = lrs_order_candidates(static_cast<u64>(core.degree()), opts.conjecture_bound).orders;
      auto test = [&](u64 k) {
        Rng krng(substream_seed(seed, k));
        return modular_order_test(core, k, krng, opts.prime_rounds);
      };
      std::vector<char> pass;
      if (opts.threads > 1) {
        pass.assign(cands.size(), 0);
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < opts.threads; ++t) {
          pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < cands.size();) pass[i] = test(cands[i]);
          });
        }
        for (auto& th : pool) th.join();
      }
      for (std::size_t i = 0; i < cands.size() && !done; ++i) {
        const u64 k = cands[i];
        ++rep.candidates_tested;
        const bool ok = opts.threads > 1 ? pass[i] != 0 : test(k);
        if (!ok) continue;
        OrderStatus st = OrderStatus::probable;
        if (opts.verify) st = verify_order(core, k) ? OrderStatus::verified : OrderStatus::refuted;
        done = accept({k, st, "scan"});
      }
    }
  }

  for (const auto& e : core_orders) {
    for (u64 k : lift_order(e.k, r)) merge(acc, {k, e.status, r > 1 ? "lifted" : e.source});
  }
  for (auto& [k, e] : acc) rep.orders.push_back(e);

  if (opts.mode != LrsMode::all_orders) {
    // Keep everything up to the first order not refuted.
    auto it = std::find_if(rep.orders.begin(), rep.orders.end(),
                           [](const OrderEntry& e) { return e.status != OrderStatus::refuted; });
    if (it != rep.orders.end()) rep.orders.erase(it + 1, rep.orders.end());
  }
  if (decide) rep.degenerate = !rep.order_list().empty();
  return rep;
}

}  // namespace cyclo
