#include "elep/families.hpp"

#include <stdexcept>

namespace elep::families {

namespace {

// x + y*sqrt(3)i with integer x, y lies on the lattice at (x + y, 2y).
EPoint from_sqrt3_coords(const Int& x, const Int& y) { return {x + y, 2 * y}; }

OrientedRealization make_realization(EPoint a_vertex, EPoint c_vertex, FamilyTag tag,
                                     Nat index, Nat a, Nat b) {
  OrientedRealization r;
  r.O = EPoint{0, 0};
  r.A = std::move(a_vertex);
  r.B = r.A + c_vertex;
  r.C = std::move(c_vertex);
  r.family_tag = tag;
  r.index = std::move(index);
  r.a = std::move(a);
  r.b = std::move(b);
  if (norm(r.A) != 3 * r.a * r.a || norm(r.C) != 3 * r.b * r.b)
    throw std::logic_error("family realization: side norms disagree");
  if (!is_equable(r.A, r.C))
    throw std::logic_error("family realization: not equable");
  return r;
}

}  // namespace

numth::AffineRecurrence pell_q_u_recurrence() {
  // (q, u) -> (2q + 3u, q + 2u), the fundamental automorphism of
  // q^2 - 3u^2 = 1; equivalent to (q,u)_n = 4(q,u)_{n-1} - (q,u)_{n-2}.
  return {{{{2, 3}, {1, 2}}}, {0, 0}, {1, 0}};
}

numth::AffineRecurrence horizontal_u_recurrence() {
  // Companion form of u_n = 4u_{n-1} - u_{n-2} acting on (u_{n-1}, u_n).
  return {{{{0, 1}, {-1, 4}}}, {0, 0}, {0, 1}};
}

numth::AffineRecurrence vs2_recurrence() {
  // (u, m) -> (5u + 4m, 6u + 5m) on 3u^2 = 2m^2 + 1; trace 10 recovers
  // (u,m)_n = 10(u,m)_{n-1} - (u,m)_{n-2}.
  return {{{{5, 4}, {6, 5}}}, {0, 0}, {1, 1}};
}

numth::AffineRecurrence vs4_recurrence(int branch) {
  if (branch != 1 && branch != 2)
    throw std::invalid_argument("vs4_recurrence: branch must be 1 or 2");
  numth::AffineRecurrence rec{{{{23, 2}, {264, 23}}}, {3, 36}, {1, 13}};
  if (branch == 2) rec.seed = {5, 59};
  return rec;
}

std::vector<std::pair<Nat, Nat>> pell_q_u(std::size_t count) {
  const auto states = numth::iterate_recurrence(pell_q_u_recurrence(), count);
  std::vector<std::pair<Nat, Nat>> out;
  out.reserve(states.size());
  for (const auto& v : states) out.emplace_back(v[0], v[1]);
  return out;
}

OrientedRealization horizontal_family(std::size_t n) {
  const auto states = numth::iterate_recurrence(pell_q_u_recurrence(), n + 1);
  const Nat& q = states.back()[0];
  const Nat& u = states.back()[1];
  const Nat u_next = q + 2 * u;

  EPoint a_vertex{-6 * u - 2, -4};
  EPoint b_vertex{6 * (u_next - u), 0};
  return make_realization(a_vertex, b_vertex - a_vertex, FamilyTag::horizontal,
                          Nat(n), 2 * q, 6 * u + 4 * q);
}

OrientedRealization vertical_side2_family(std::size_t n) {
  if (n < 1) throw std::invalid_argument("vertical_side2_family: n must be >= 1");
  const auto states = numth::iterate_recurrence(vs2_recurrence(), n);
  const Nat& u = states.back()[0];
  const Nat& m = states.back()[1];
  const Nat x = 3 + 3 * u;
  const Nat y = 2 * m;
  return make_realization(from_sqrt3_coords(0, 2), from_sqrt3_coords(-x, y),
                          FamilyTag::vs2, Nat(n), 2, 1 + 3 * u);
}

OrientedRealization vertical_side4_family(int branch, std::size_t n) {
  if (n < 1) throw std::invalid_argument("vertical_side4_family: n must be >= 1");
  const auto states = numth::iterate_recurrence(vs4_recurrence(branch), n);
  const Nat& w = states.back()[0];
  const Nat x = 6 * w + 3;
  const Nat& y = states.back()[1];
  return make_realization(from_sqrt3_coords(0, 4), from_sqrt3_coords(-x, y),
                          branch == 1 ? FamilyTag::vs4_branch1 : FamilyTag::vs4_branch2,
                          Nat(n), 4, 2 * (1 + 6 * w));
}

namespace {

// A segment with w-coordinate difference (dx, dy) is horizontal when the
// sqrt(3)i part (dy/2) vanishes and vertical when the real part
// (dx - dy/2) vanishes.
bool seg_horizontal(const EPoint& d) { return d.y == 0; }
bool seg_vertical(const EPoint& d) { return 2 * d.x == d.y; }

}  // namespace

OrientationFlags classify(const EPoint& v1, const EPoint& v2) {
  OrientationFlags f;
  const EPoint diag1 = v1 + v2;  // O -> B
  const EPoint diag2 = v2 - v1;  // A -> C
  f.has_horizontal_diagonal = seg_horizontal(diag1) || seg_horizontal(diag2);
  f.has_vertical_diagonal = seg_vertical(diag1) || seg_vertical(diag2);
  f.has_horizontal_side = seg_horizontal(v1) || seg_horizontal(v2);
  f.has_vertical_side = seg_vertical(v1) || seg_vertical(v2);
  return f;
}

OrientationFlags classify(const OrientedRealization& r) {
  return classify(r.A, r.C);
}

std::vector<std::array<Nat, 2>> brute_pell(PellKind kind, const Nat& bound) {
  if (bound > 1000000) throw std::out_of_range("brute_pell: bound above desk scale");
  std::vector<std::array<Nat, 2>> out;
  const unsigned long hi = bound.get_ui();
  for (unsigned long v = 1; v <= hi; ++v) {
    const Nat n(v);
    switch (kind) {
      case PellKind::q_u: {
        const Nat rhs = n * n - 1;
        if (!mpz_divisible_ui_p(rhs.get_mpz_t(), 3)) break;
        if (auto u = numth::perfect_square(rhs / 3)) out.push_back({n, *u});
        break;
      }
      case PellKind::vs2: {
        const Nat rhs = 3 * n * n - 1;
        if (!mpz_divisible_ui_p(rhs.get_mpz_t(), 2)) break;
        if (auto m = numth::perfect_square(rhs / 2)) out.push_back({n, *m});
        break;
      }
      case PellKind::vs4: {
        if (auto y = numth::perfect_square(132 * n * n + 36 * n + 1))
          out.push_back({n, *y});
        break;
      }
    }
  }
  return out;
}

}  // namespace elep::families
