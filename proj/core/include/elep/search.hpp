#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "elep/eisenstein.hpp"
#include "elep/families.hpp"
#include "elep/numth.hpp"
#include "elep/pairs.hpp"

namespace elep::search {

/// All lattice points with norm exactly N, sorted lexicographically.
/// Found by scanning the y range |y| <= 2*isqrt(N/3) + 1 and solving the
/// norm form as a quadratic in x. Requires 1 <= N <= 10^10.
std::vector<EPoint> representations(const Nat& N);

/// A concrete equable parallelogram for a side pair: norm(v1) = 3a^2,
/// norm(v2) = 3b^2 and |x1*y2 - x2*y1| = 4(a+b), which given those norms
/// is exactly the equability condition.
struct Realization {
  EPoint v1;
  EPoint v2;
  Nat a;
  Nat b;
};

/// Deterministic witness for a valid side pair: the first (v1, v2) in
/// lexicographic pair order over representations(3a^2) x representations(3b^2)
/// with determinant +-4(a+b). Throws std::invalid_argument when the side
/// criterion fails; a missing witness would contradict lattice
/// realizability and raises std::logic_error.
Realization realize(const Nat& a, const Nat& b);

/// Lattice realizability test for a triangle given its squared side
/// lengths and its area as a multiple n of sqrt(3)/4. True when
/// (1) the squared-area identity 2*sum(si*sj) - sum(si^2) = 3n^2 holds,
/// (2) the squared sides are integers (by construction here), and
/// (3) some side is r*sqrt(t) with t squarefree and free of prime
/// factors congruent to 2 mod 3.
/// Throws std::invalid_argument for degenerate or impossible triangles.
bool monthly_check(const std::array<Nat, 3>& side_sq, const Nat& area_quarter_units);

/// One side-pair class discovered by the scanner.
struct ScanEntry {
  Nat a;
  Nat b;
  Realization representative;       // canonically least placement in the box
  Nat congruence_classes;           // distinct classes seen for this (a, b)
  families::OrientationFlags flags; // OR over every placement in the box
};

/// Result of the exhaustive bounded scan. `anomalies` collects any equable
/// parallelogram whose sides are not of the form sqrt(3)*n; the list being
/// empty for every box is a theorem the scanner re-derives rather than
/// assumes.
struct ScanReport {
  Nat max_coord;
  std::vector<ScanEntry> found;              // sorted by (a, b)
  std::vector<LatticeParallelogram> anomalies;
};

/// Enumerates every spanning pair v1, v2 with w-coordinates in
/// [-max_coord, max_coord], keeps the equable ones, groups them by side
/// pair and deduplicates congruent placements. v1 runs over a lexicographic
/// half-plane only; sign symmetry makes that lossless. `jobs` >= 2 shards
/// the v1 range across threads with output byte-identical to the
/// sequential scan. Requires 1 <= max_coord <= 60.
ScanReport scan(long max_coord, int jobs = 1);

}  // namespace elep::search
