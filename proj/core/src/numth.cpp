#include "elep/numth.hpp"

#include <stdexcept>

namespace elep {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

namespace numth {

Nat isqrt(const Nat& n) {
  if (n < 0) throw std::domain_error("isqrt: negative input");
  if (n == 0) return 0;
  // Start above the root: 2^ceil(bits/2) >= sqrt(n). The iteration then
  // decreases monotonically and the first non-decrease is the floor root.
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  Nat x = Nat(1) << static_cast<unsigned long>((bits + 1) / 2);
  for (;;) {
    Nat y = (x + n / x) / 2;
    if (y >= x) break;
    x = y;
  }
  if (x * x > n || (x + 1) * (x + 1) <= n)
    throw std::logic_error("isqrt: post-condition failed");
  return x;
}

std::optional<Nat> perfect_square(const Nat& n) {
  if (n < 0) return std::nullopt;
  Nat r = isqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

Nat gcd(const Nat& a, const Nat& b) {
  Nat g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

unsigned long val3(const Nat& n) {
  if (n == 0) throw std::domain_error("val3: undefined at 0");
  Nat reduced;
  const Nat three = 3;
  return static_cast<unsigned long>(
      mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), three.get_mpz_t()));
}

namespace {

constexpr unsigned long kTrialDivisionCeiling = 1000000UL;  // sqrt(10^12)

// Runs fn(prime_candidate) over 2, 3, 5, 7, ... (6k+-1 wheel) while the
// candidate squared is at most m. Candidates need not be prime; composite
// candidates never divide the fully reduced cofactor.
template <typename F>
void for_trial_divisors(const Nat& m, F&& fn) {
  for (unsigned long d : {2UL, 3UL}) {
    if (Nat(d) * d > m) return;
    fn(d);
  }
  for (unsigned long d = 5; Nat(d) * d <= m; d += (d % 6 == 5) ? 2 : 4) {
    fn(d);
  }
}

}  // namespace

std::pair<Nat, Nat> squarefree_decompose(const Nat& n) {
  if (n == 0) throw std::domain_error("squarefree_decompose: undefined at 0");
  if (n < 0) throw std::domain_error("squarefree_decompose: negative input");
  if (n > Nat(kTrialDivisionCeiling) * kTrialDivisionCeiling)
    throw std::out_of_range("squarefree_decompose: factorization out of range");

  Nat m = n, f = 1, g = 1;
  for_trial_divisors(m, [&](unsigned long d) {
    if (!mpz_divisible_ui_p(m.get_mpz_t(), d)) return;
    unsigned long e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
      ++e;
    }
    for (unsigned long i = 0; i < e / 2; ++i) g *= d;
    if (e % 2 == 1) f *= d;
  });
  // Whatever survives trial division up to sqrt(m) is 1 or prime.
  if (m > 1) f *= m;
  return {f, g};
}

bool has_prime_factor_2_mod_3(const Nat& f) {
  if (f <= 0) throw std::domain_error("has_prime_factor_2_mod_3: positive input required");
  if (f > Nat(kTrialDivisionCeiling) * kTrialDivisionCeiling)
    throw std::out_of_range("has_prime_factor_2_mod_3: factorization out of range");

  Nat m = f;
  bool hit = false;
  for_trial_divisors(m, [&](unsigned long d) {
    if (!mpz_divisible_ui_p(m.get_mpz_t(), d)) return;
    if (d % 3 == 2) hit = true;
    while (mpz_divisible_ui_p(m.get_mpz_t(), d))
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
  });
  if (m > 1 && m % 3 == 2) hit = true;
  return hit;
}

std::array<Int, 2> AffineRecurrence::step(const std::array<Int, 2>& v) const {
  return {matrix[0][0] * v[0] + matrix[0][1] * v[1] + offset[0],
          matrix[1][0] * v[0] + matrix[1][1] * v[1] + offset[1]};
}

std::vector<std::array<Int, 2>> iterate_recurrence(const AffineRecurrence& rec,
                                                   std::size_t count) {
  if (count == 0) throw std::invalid_argument("iterate_recurrence: count must be >= 1");
  std::vector<std::array<Int, 2>> states;
  states.reserve(count);
  states.push_back(rec.seed);
  for (std::size_t i = 1; i < count; ++i) states.push_back(rec.step(states.back()));
  return states;
}

}  // namespace numth
}  // namespace elep
