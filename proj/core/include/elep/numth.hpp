#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace elep {

/// Arbitrary-precision signed integer. All exactness in this library flows
/// from these types; no operation ever rounds.
using Int = mpz_class;

/// Arbitrary-precision integer used where a value is nonnegative by
/// contract. The contract is enforced by the operations, not the type.
using Nat = mpz_class;

/// Exact fraction, always kept in lowest terms with positive denominator.
using Rat = mpq_class;

/// Builds a reduced rational num/den. Throws std::domain_error when den = 0.
Rat make_rat(const Int& num, const Int& den);

namespace numth {

/// Floor of the square root, computed by Newton iteration on integers.
/// The result is checked against r^2 <= n < (r+1)^2 before returning.
/// Throws std::domain_error for negative input.
Nat isqrt(const Nat& n);

/// The exact square root of n when n is a perfect square, absent otherwise.
std::optional<Nat> perfect_square(const Nat& n);

/// Greatest common divisor with gcd(0, n) = n.
Nat gcd(const Nat& a, const Nat& b);

/// Largest e with 3^e | n. Throws std::domain_error when n = 0.
unsigned long val3(const Nat& n);

/// Writes n = f * g^2 with f squarefree, by trial division.
/// Supported for 1 <= n <= 10^12; larger inputs throw std::out_of_range
/// ("factorization out of range") rather than risking a wrong answer,
/// and n = 0 throws std::domain_error.
std::pair<Nat, Nat> squarefree_decompose(const Nat& n);

/// Returns true when f (which must be squarefree) has a prime divisor
/// congruent to 2 mod 3. Same trial-division range contract as
/// squarefree_decompose.
bool has_prime_factor_2_mod_3(const Nat& f);

/// State update v -> matrix * v + offset over exact integers. A zero offset
/// gives a plain linear recurrence; a second-order scalar recurrence is the
/// special case of a companion matrix acting on (x_{n-1}, x_n).
struct AffineRecurrence {
  std::array<std::array<Int, 2>, 2> matrix;
  std::array<Int, 2> offset;
  std::array<Int, 2> seed;

  std::array<Int, 2> step(const std::array<Int, 2>& v) const;
};

/// The first `count` states, seed included. Throws std::invalid_argument
/// when count = 0.
std::vector<std::array<Int, 2>> iterate_recurrence(const AffineRecurrence& rec,
                                                   std::size_t count);

}  // namespace numth
}  // namespace elep
