#pragma once

#include <array>
#include <compare>
#include <utility>
#include <vector>

#include "elep/numth.hpp"

namespace elep {

/// Point x + y*w of the triangular lattice Z[w], w = -1/2 + i*sqrt(3)/2.
/// The squared distance to the origin is the norm form x^2 - xy + y^2.
struct EPoint {
  Int x;
  Int y;

  EPoint() : x(0), y(0) {}
  EPoint(Int x_, Int y_) : x(std::move(x_)), y(std::move(y_)) {}

  friend EPoint operator+(const EPoint& a, const EPoint& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend EPoint operator-(const EPoint& a, const EPoint& b) {
    return {a.x - b.x, a.y - b.y};
  }
  friend EPoint operator-(const EPoint& a) { return {-a.x, -a.y}; }
  /// Eisenstein product, using w^2 = -1 - w.
  friend EPoint operator*(const EPoint& a, const EPoint& b) {
    return {a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x - a.y * b.y};
  }
  friend bool operator==(const EPoint& a, const EPoint& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const EPoint& a, const EPoint& b) { return !(a == b); }
  /// Lexicographic (x, y) order; used for deterministic output, not geometry.
  friend bool operator<(const EPoint& a, const EPoint& b) {
    const int c = cmp(a.x, b.x);
    if (c != 0) return c < 0;
    return a.y < b.y;
  }
};

/// Complex conjugate: reflection of the lattice across the real axis.
EPoint conj(const EPoint& p);

/// Rotation by 120 degrees (multiplication by w).
EPoint rot120(const EPoint& p);

/// x^2 - xy + y^2, the exact squared length of p.
Nat norm(const EPoint& p);

/// Exact position of p in the x + y*sqrt(3)i plane: returns (x - y/2, y/2),
/// the second component being the coefficient of sqrt(3)i.
std::pair<Rat, Rat> to_cartesian(const EPoint& p);

/// Parallelogram spanned by edge vectors v1, v2 from a base vertex at the
/// origin; its vertices are 0, v1, v1+v2, v2.
struct LatticeParallelogram {
  EPoint v1;
  EPoint v2;
};

/// D = |x1*y2 - x2*y1|, so the parallelogram area is (sqrt(3)/2) * D.
/// Throws std::invalid_argument for degenerate (D = 0) input.
Nat area2_units(const LatticeParallelogram& pg);

/// Decides perimeter == area using integers only. With N1 = norm(v1),
/// N2 = norm(v2) and D = area2_units, the equability relation
///   2(sqrt(N1) + sqrt(N2)) = (sqrt(3)/2) D
/// holds exactly when N1*N2 is a perfect square k^2 and
///   16(N1 + N2) + 32k = 3 D^2.
/// Throws std::invalid_argument for degenerate input.
bool is_equable(const LatticeParallelogram& pg);
bool is_equable(const EPoint& v1, const EPoint& v2);

/// Lexicographically least of all presentations of the same congruence
/// class: both vectors multiplied by any of the six units, optionally
/// conjugated, the pair optionally swapped, and each vector independently
/// negated. Two spanning pairs describe congruent parallelograms exactly
/// when their canonical presentations coincide.
std::pair<EPoint, EPoint> canonical_presentation(const EPoint& v1, const EPoint& v2);

}  // namespace elep
