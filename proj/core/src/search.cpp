#include "elep/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace elep::search {

std::vector<EPoint> representations(const Nat& N) {
  if (N < 1) throw std::out_of_range("representations: N must be positive");
  if (N > Nat(10000000000L)) throw std::out_of_range("representations: N above scan bound");

  std::vector<EPoint> out;
  const Nat y_bound = 2 * numth::isqrt(N / 3) + 1;
  for (Int y = -y_bound; y <= y_bound; ++y) {
    // x^2 - xy + (y^2 - N) = 0 has integer roots x = (y +- d)/2 with
    // d^2 = 4N - 3y^2.
    const Int disc = 4 * N - 3 * y * y;
    if (disc < 0) continue;
    const auto d = numth::perfect_square(disc);
    if (!d) continue;
    for (const Int& root_num : {Int(y + *d), Int(y - *d)}) {
      if (!mpz_divisible_ui_p(root_num.get_mpz_t(), 2)) continue;
      out.emplace_back(root_num / 2, y);
      if (*d == 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Realization realize(const Nat& a, const Nat& b) {
  if (!pairs::check_sides(a, b))
    throw std::invalid_argument("realize: side pair fails the criterion");
  const Nat target = 4 * (a + b);
  const auto reps_a = representations(3 * a * a);
  const auto reps_b = representations(3 * b * b);
  for (const EPoint& v1 : reps_a) {
    for (const EPoint& v2 : reps_b) {
      if (abs(Int(v1.x * v2.y - v2.x * v1.y)) == target)
        return Realization{v1, v2, a, b};
    }
  }
  throw std::logic_error("realize: no lattice witness found despite valid criterion");
}

bool monthly_check(const std::array<Nat, 3>& side_sq, const Nat& area_quarter_units) {
  for (const Nat& s : side_sq)
    if (s < 1) throw std::invalid_argument("monthly_check: sides must be positive");

  // 16 * area^2 = 2(s1 s2 + s2 s3 + s3 s1) - (s1^2 + s2^2 + s3^2).
  const Nat& s1 = side_sq[0];
  const Nat& s2 = side_sq[1];
  const Nat& s3 = side_sq[2];
  const Nat herons =
      2 * (s1 * s2 + s2 * s3 + s3 * s1) - (s1 * s1 + s2 * s2 + s3 * s3);
  if (herons < 0) throw std::invalid_argument("monthly_check: no such triangle");
  if (herons == 0) throw std::invalid_argument("monthly_check: degenerate triangle");

  if (area_quarter_units < 1) return false;
  if (herons != 3 * area_quarter_units * area_quarter_units) return false;

  for (const Nat& s : side_sq) {
    const Nat squarefree_part = numth::squarefree_decompose(s).first;
    if (!numth::has_prime_factor_2_mod_3(squarefree_part)) return true;
  }
  return false;
}

namespace {

// Box-scan arithmetic stays in int64: with |x|, |y| <= 60 every
// intermediate below is under 2^45.
struct ScanPoint {
  std::int64_t x;
  std::int64_t y;
};

std::int64_t norm64(std::int64_t x, std::int64_t y) { return x * x - x * y + y * y; }

bool equable64(std::int64_t n1, std::int64_t n2, std::int64_t det) {
  const std::int64_t d = det < 0 ? -det : det;
  std::int64_t k = 3 * d * d - 16 * (n1 + n2);
  if (k < 0 || (k & 31) != 0) return false;
  k >>= 5;
  return k * k == n1 * n2;
}

std::int64_t isqrt64(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

struct Placement {
  ScanPoint v1;
  ScanPoint v2;
};

using Quad = std::array<std::int64_t, 4>;

ScanPoint conj64(ScanPoint p) { return {p.x - p.y, -p.y}; }
ScanPoint rot64(ScanPoint p) { return {-p.y, p.x - p.y}; }
ScanPoint neg64(ScanPoint p) { return {-p.x, -p.y}; }

Quad canonical64(ScanPoint v1, ScanPoint v2) {
  Quad best{};
  bool have = false;
  auto offer = [&](ScanPoint a, ScanPoint b) {
    for (ScanPoint p : {a, neg64(a)})
      for (ScanPoint q : {b, neg64(b)})
        for (const Quad cand : {Quad{p.x, p.y, q.x, q.y}, Quad{q.x, q.y, p.x, p.y}})
          if (!have || cand < best) {
            best = cand;
            have = true;
          }
  };
  ScanPoint a = v1, b = v2;
  for (int r = 0; r < 3; ++r) {
    offer(a, b);
    offer(conj64(a), conj64(b));
    a = rot64(a);
    b = rot64(b);
  }
  return best;
}

// Orientation flags of one placement, from exact integer zero tests.
families::OrientationFlags classify64(const Placement& p) {
  auto horizontal = [](std::int64_t, std::int64_t dy) { return dy == 0; };
  auto vertical = [](std::int64_t dx, std::int64_t dy) { return 2 * dx == dy; };
  families::OrientationFlags f;
  const std::int64_t sx = p.v1.x + p.v2.x, sy = p.v1.y + p.v2.y;
  const std::int64_t dx = p.v2.x - p.v1.x, dy = p.v2.y - p.v1.y;
  f.has_horizontal_diagonal = horizontal(sx, sy) || horizontal(dx, dy);
  f.has_vertical_diagonal = vertical(sx, sy) || vertical(dx, dy);
  f.has_horizontal_side = horizontal(p.v1.x, p.v1.y) || horizontal(p.v2.x, p.v2.y);
  f.has_vertical_side = vertical(p.v1.x, p.v1.y) || vertical(p.v2.x, p.v2.y);
  return f;
}

std::vector<Placement> scan_chunk(const std::vector<ScanPoint>& half_plane,
                                  std::size_t lo, std::size_t hi, long m,
                                  const std::vector<std::int64_t>& norm_table) {
  const long width = 2 * m + 1;
  std::vector<Placement> found;
  for (std::size_t i = lo; i < hi; ++i) {
    const ScanPoint v1 = half_plane[i];
    const std::int64_t n1 = norm64(v1.x, v1.y);
    for (long y2 = -m; y2 <= m; ++y2) {
      for (long x2 = -m; x2 <= m; ++x2) {
        const std::int64_t det = v1.x * y2 - static_cast<std::int64_t>(x2) * v1.y;
        if (det == 0) continue;
        const std::int64_t n2 = norm_table[(y2 + m) * width + (x2 + m)];
        if (!equable64(n1, n2, det)) continue;
        // The filter above is the radical-free condition evaluated in
        // int64; re-confirm through the exact-arithmetic path.
        if (!is_equable(EPoint{Int(v1.x), Int(v1.y)}, EPoint{Int(x2), Int(y2)}))
          throw std::logic_error("scan: fast filter disagrees with is_equable");
        found.push_back(Placement{v1, ScanPoint{x2, y2}});
      }
    }
  }
  return found;
}

}  // namespace

ScanReport scan(long max_coord, int jobs) {
  if (max_coord < 1 || max_coord > 60)
    throw std::out_of_range("scan: max_coord must be between 1 and 60");
  if (jobs < 1) throw std::invalid_argument("scan: jobs must be >= 1");

  const long m = max_coord;
  const long width = 2 * m + 1;

  std::vector<std::int64_t> norm_table(static_cast<std::size_t>(width) * width);
  for (long y = -m; y <= m; ++y)
    for (long x = -m; x <= m; ++x)
      norm_table[(y + m) * width + (x + m)] = norm64(x, y);

  // Lexicographically positive half of the box: one of p, -p per point.
  std::vector<ScanPoint> half_plane;
  half_plane.reserve(static_cast<std::size_t>(width) * width / 2);
  for (long y = 0; y <= m; ++y)
    for (long x = (y == 0 ? 1 : -m); x <= m; ++x)
      half_plane.push_back({x, y});

  std::vector<Placement> placements;
  if (jobs == 1) {
    placements = scan_chunk(half_plane, 0, half_plane.size(), m, norm_table);
  } else {
    const std::size_t n = half_plane.size();
    const std::size_t per = (n + jobs - 1) / jobs;
    std::vector<std::vector<Placement>> parts(jobs);
    std::vector<std::thread> workers;
    for (int j = 0; j < jobs; ++j) {
      const std::size_t lo = std::min(n, static_cast<std::size_t>(j) * per);
      const std::size_t hi = std::min(n, lo + per);
      workers.emplace_back([&, j, lo, hi] {
        parts[j] = scan_chunk(half_plane, lo, hi, m, norm_table);
      });
    }
    for (auto& w : workers) w.join();
    for (auto& part : parts)
      placements.insert(placements.end(), part.begin(), part.end());
  }

  ScanReport report;
  report.max_coord = max_coord;

  struct Group {
    std::set<Quad> classes;
    Quad representative;
    families::OrientationFlags flags;
  };
  std::map<std::pair<std::int64_t, std::int64_t>, Group> groups;

  for (const Placement& p : placements) {
    const std::int64_t n1 = norm64(p.v1.x, p.v1.y);
    const std::int64_t n2 = norm64(p.v2.x, p.v2.y);
    auto side_of = [](std::int64_t n) -> std::int64_t {
      if (n % 3 != 0) return -1;
      const std::int64_t r = isqrt64(n / 3);
      return r * r == n / 3 ? r : -1;
    };
    const std::int64_t sa = side_of(n1);
    const std::int64_t sb = side_of(n2);
    if (sa < 0 || sb < 0) {
      report.anomalies.push_back(LatticeParallelogram{
          EPoint{Int(p.v1.x), Int(p.v1.y)}, EPoint{Int(p.v2.x), Int(p.v2.y)}});
      continue;
    }
    const std::int64_t side_lo = std::min(sa, sb);
    const std::int64_t side_hi = std::max(sa, sb);
    Group& g = groups[{side_lo, side_hi}];
    const Quad canon = canonical64(p.v1, p.v2);
    if (g.classes.insert(canon).second &&
        (g.classes.size() == 1 || canon < g.representative)) {
      g.representative = canon;
    }
    const auto f = classify64(p);
    g.flags.has_horizontal_diagonal |= f.has_horizontal_diagonal;
    g.flags.has_vertical_diagonal |= f.has_vertical_diagonal;
    g.flags.has_horizontal_side |= f.has_horizontal_side;
    g.flags.has_vertical_side |= f.has_vertical_side;
  }

  for (auto& [key, g] : groups) {
    ScanEntry entry;
    entry.a = key.first;
    entry.b = key.second;
    EPoint v1{Int(g.representative[0]), Int(g.representative[1])};
    EPoint v2{Int(g.representative[2]), Int(g.representative[3])};
    if (norm(v1) != 3 * entry.a * entry.a) std::swap(v1, v2);
    entry.representative = Realization{v1, v2, entry.a, entry.b};
    entry.congruence_classes = static_cast<long>(g.classes.size());
    entry.flags = g.flags;
    report.found.push_back(std::move(entry));
  }
  return report;
}

}  // namespace elep::search
