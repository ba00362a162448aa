#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "elep/eisenstein.hpp"
#include "elep/numth.hpp"
#include "elep/pairs.hpp"

namespace elep::families {

enum class FamilyTag { horizontal, vs2, vs4_branch1, vs4_branch2 };

/// A concrete equable parallelogram O, A, B, C on the lattice with
/// B = A + C, produced by one of the closed-form families.
struct OrientedRealization {
  EPoint O;
  EPoint A;
  EPoint B;
  EPoint C;
  FamilyTag family_tag;
  Nat index;

  /// Side lengths divided by sqrt(3): norm(A) = 3a^2, norm(C) = 3b^2.
  Nat a;
  Nat b;
};

/// Pell solutions of q^2 - 3u^2 = 1, ascending from (1, 0), (2, 1).
/// count >= 1 required.
std::vector<std::pair<Nat, Nat>> pell_q_u(std::size_t count);

/// The n-th parallelogram (n >= 0) whose short diagonal lies on the
/// x-axis: A = (-6u_n - 2, -4), B = (6u_{n+1} - 6u_n, 0), C = B - A in
/// w-coordinates, where u_n = 4u_{n-1} - u_{n-2}, u_0 = 0, u_1 = 1.
/// Sides are a = 2q_n, b = 6u_n + 4q_n.
OrientedRealization horizontal_family(std::size_t n);

/// The n-th parallelogram (n >= 1) with a vertical side of length
/// 2*sqrt(3). Built from the solutions of 3u^2 = 2m^2 + 1 (OEIS A072256):
/// in x + y*sqrt(3)i form the vertices are A = 2*sqrt(3)i,
/// C = -x_n + y_n*sqrt(3)i, B = A + C with x_n = 3 + 3u_n, y_n = 2m_n;
/// b = 1 + 3u_n.
OrientedRealization vertical_side2_family(std::size_t n);

/// The n-th parallelogram (n >= 1) of one of the two branches with a
/// vertical side of length 4*sqrt(3). Built from the solutions of
/// 132w^2 + 36w + 1 = y^2, which split into two interleaved sequences
/// under (w, y) -> (23w + 2y + 3, 264w + 23y + 36) seeded at (1, 13)
/// and (5, 59). Vertices as above with x_n = 6w_n + 3; b = 2(1 + 6w_n).
OrientedRealization vertical_side4_family(int branch, std::size_t n);

/// Axis alignment of sides and diagonals, decided by exact zero tests on
/// the cartesian coordinates: a segment is horizontal when its
/// sqrt(3)i-component difference vanishes, vertical when its real
/// component difference vanishes.
struct OrientationFlags {
  bool has_horizontal_diagonal = false;
  bool has_vertical_diagonal = false;
  bool has_vertical_side = false;
  bool has_horizontal_side = false;
};

OrientationFlags classify(const EPoint& v1, const EPoint& v2);
OrientationFlags classify(const OrientedRealization& r);

enum class PellKind { q_u, vs2, vs4 };

/// Exhaustive-search oracle for the three Diophantine engines: all
/// solutions with the scanned variable (q, u or w respectively) at most
/// `bound`, each found by a perfect-square test, ascending. bound <= 10^6.
std::vector<std::array<Nat, 2>> brute_pell(PellKind kind, const Nat& bound);

/// The recurrences behind the families, exposed so oracle tests can
/// compare both routes.
numth::AffineRecurrence pell_q_u_recurrence();
numth::AffineRecurrence horizontal_u_recurrence();
numth::AffineRecurrence vs2_recurrence();
numth::AffineRecurrence vs4_recurrence(int branch);

}  // namespace elep::families
