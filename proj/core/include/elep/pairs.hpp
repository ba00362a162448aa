#pragma once

#include <optional>
#include <utility>

#include "elep/numth.hpp"

namespace elep::pairs {

/// Side pairs (a, b) admit an equable lattice parallelogram with sides
/// a*sqrt(3), b*sqrt(3) exactly when 9a^2b^2 - 12(a+b)^2 is a perfect
/// square; check_sides returns that square root ("disc"), or absent when
/// the expression is negative or not a square. a, b >= 1 required.
std::optional<Nat> check_sides(const Nat& a, const Nat& b);

/// The parameter pair recovered from valid sides. sigma is the sign with
/// s^2 = (3ab + sigma*disc)/12, equivalently sigma = +1 iff s^2 > 3t^2.
struct ParamTriple {
  Nat s;
  Nat t;
  int sigma;  // +1 or -1
};

/// Recovers the unique odd coprime (s, t) with s^2 + 3t^2 + 2q^2 = 6stq
/// (q = a/2) from a valid pair a < b. Exactly one sign choice yields odd
/// coprime integers; this is asserted. Throws std::invalid_argument
/// ("not an ELEP pair") when check_sides fails or a >= b.
ParamTriple pair_to_params(const Nat& a, const Nat& b);

/// Inverse direction: (a, b) = 3st -+ sqrt(9s^2t^2 - 2(s^2+3t^2)), defined
/// exactly when the radicand is a perfect square. Throws
/// std::invalid_argument on even/non-coprime/non-positive parameters or
/// when the parameters lie on no solution ("params not on solution tree").
std::pair<Nat, Nat> params_to_pair(const Nat& s, const Nat& t);

/// Validated side pair with its recovered parameters cached.
/// Invariants (established at construction): a < b, both even,
/// gcd(a,b) = 2, 3 does not divide ab, a + b = 6st, ab = 2(s^2 + 3t^2),
/// s, t odd coprime, disc = 6|s^2 - 3t^2|, s^2 + 3t^2 + 2q^2 = 6stq.
class ElepPair {
 public:
  /// Throws std::invalid_argument when (a, b) fails the side criterion.
  static ElepPair from_sides(const Nat& a, const Nat& b);
  /// Absent instead of throwing.
  static std::optional<ElepPair> try_from_sides(const Nat& a, const Nat& b);
  /// Via params_to_pair.
  static ElepPair from_params(const Nat& s, const Nat& t);

  const Nat& a() const { return a_; }
  const Nat& b() const { return b_; }
  const Nat& disc() const { return disc_; }
  const Nat& s() const { return s_; }
  const Nat& t() const { return t_; }
  int sigma() const { return sigma_; }
  Nat q() const { return a_ / 2; }
  Nat r() const { return b_ / 2; }

  friend bool operator==(const ElepPair& lhs, const ElepPair& rhs) {
    return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
  }

 private:
  ElepPair() = default;
  Nat a_, b_, disc_, s_, t_;
  int sigma_ = 0;
};

/// Diagonal squares, heights and altitude squares of the parallelogram,
/// all exact. dl/ds are the long/short diagonals; h_l > h_s are the
/// distances between opposite sides; eta are the diagonal-to-vertex
/// altitudes with eta_l measured from the short diagonal.
struct ParallelogramMetrics {
  Nat dl_sq;
  Nat ds_sq;
  Rat h_l;
  Rat h_s;
  Rat eta_l_sq;
  Rat eta_s_sq;
};

/// dl^2 = 12(9s^2t^2 - 2 min(s^2, 3t^2)), ds^2 with max instead;
/// h_l = 2(a+b)/a, h_s = 2(a+b)/b;
/// eta_l^2 = 12(a+b)^2/ds^2, eta_s^2 = 12(a+b)^2/dl^2.
ParallelogramMetrics metrics(const ElepPair& p);

/// Square root of 9a^2 - 48 when that is a perfect square. No such a
/// exists (an equable lattice rhombus is impossible); exposed as a
/// falsification probe. a >= 1 required.
std::optional<Nat> rhombus_witness(const Nat& a);

}  // namespace elep::pairs
