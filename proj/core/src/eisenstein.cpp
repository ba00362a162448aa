#include "elep/eisenstein.hpp"

#include <stdexcept>

namespace elep {

EPoint conj(const EPoint& p) { return {p.x - p.y, -p.y}; }

EPoint rot120(const EPoint& p) { return {-p.y, p.x - p.y}; }

Nat norm(const EPoint& p) { return p.x * p.x - p.x * p.y + p.y * p.y; }

std::pair<Rat, Rat> to_cartesian(const EPoint& p) {
  return {make_rat(2 * p.x - p.y, 2), make_rat(p.y, 2)};
}

Nat area2_units(const LatticeParallelogram& pg) {
  Nat d = pg.v1.x * pg.v2.y - pg.v2.x * pg.v1.y;
  if (d == 0) throw std::invalid_argument("area2_units: degenerate parallelogram");
  return abs(d);
}

bool is_equable(const EPoint& v1, const EPoint& v2) {
  return is_equable(LatticeParallelogram{v1, v2});
}

bool is_equable(const LatticeParallelogram& pg) {
  const Nat d = area2_units(pg);
  const Nat n1 = norm(pg.v1);
  const Nat n2 = norm(pg.v2);
  // Solve 16(N1+N2) + 32k = 3D^2 for k, then confirm k^2 = N1*N2. This is
  // the radical-free equability condition; no square root is ever taken.
  Nat k = 3 * d * d - 16 * (n1 + n2);
  if (k < 0 || !mpz_divisible_ui_p(k.get_mpz_t(), 32)) return false;
  k /= 32;
  return k * k == n1 * n2;
}

std::pair<EPoint, EPoint> canonical_presentation(const EPoint& v1, const EPoint& v2) {
  bool have = false;
  std::pair<EPoint, EPoint> best;
  auto offer = [&](const EPoint& a, const EPoint& b) {
    std::pair<EPoint, EPoint> cand{a, b};
    if (!have || cand.first < best.first ||
        (cand.first == best.first && cand.second < best.second)) {
      best = std::move(cand);
      have = true;
    }
  };
  auto offer_signs_and_swap = [&](const EPoint& a, const EPoint& b) {
    for (const EPoint& p : {a, -a})
      for (const EPoint& q : {b, -b}) {
        offer(p, q);
        offer(q, p);
      }
  };
  EPoint a = v1, b = v2;
  for (int r = 0; r < 3; ++r) {  // units: +-1, +-w, +-w^2 (negation is the sign flip)
    offer_signs_and_swap(a, b);
    offer_signs_and_swap(conj(a), conj(b));
    a = rot120(a);
    b = rot120(b);
  }
  return best;
}

}  // namespace elep
