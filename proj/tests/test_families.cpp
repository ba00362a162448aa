#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "elep/families.hpp"
#include "elep/pairs.hpp"
#include "elep/search.hpp"

using namespace elep;
using namespace elep::families;

TEST_CASE("pell_q_u: pinned values and defining relation") {
  const auto sols = pell_q_u(9);
  REQUIRE(sols.size() == 9);
  CHECK(sols[0] == std::pair<Nat, Nat>{1, 0});
  CHECK(sols[1] == std::pair<Nat, Nat>{2, 1});
  CHECK(sols[2] == std::pair<Nat, Nat>{7, 4});
  CHECK(sols[3] == std::pair<Nat, Nat>{26, 15});
  CHECK(sols[4] == std::pair<Nat, Nat>{97, 56});
  for (const auto& [q, u] : sols) CHECK(q * q - 3 * u * u == 1);
}

TEST_CASE("horizontal_family: pinned rows") {
  const auto r0 = horizontal_family(0);
  CHECK(r0.A == EPoint{-2, -4});
  CHECK(r0.B == EPoint{6, 0});
  CHECK(r0.a == 2);
  CHECK(r0.b == 4);
  const auto p0 = pairs::pair_to_params(r0.a, r0.b);
  CHECK(p0.s == 1);
  CHECK(p0.t == 1);

  const auto r2 = horizontal_family(2);
  CHECK(r2.A == EPoint{-26, -4});
  CHECK(r2.B == EPoint{66, 0});
  CHECK(r2.a == 14);
  CHECK(r2.b == 52);
  const auto p2 = pairs::pair_to_params(r2.a, r2.b);
  CHECK(p2.s == 1);
  CHECK(p2.t == 11);

  const auto r8 = horizontal_family(8);
  CHECK(r8.a == 37634);
  CHECK(r8.b == 140452);
  CHECK(r8.B == EPoint{178086, 0});
  CHECK(pairs::pair_to_params(r8.a, r8.b).t == 29681);
}

TEST_CASE("horizontal_family: short diagonal lies on the x-axis") {
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto r = horizontal_family(n);
    const auto m = pairs::metrics(pairs::ElepPair::from_sides(r.a, r.b));
    CHECK(norm(r.B) == m.ds_sq);  // the horizontal diagonal O -> B is short
    const auto flags = classify(r);
    CHECK(flags.has_horizontal_diagonal);
  }
}

TEST_CASE("u-sequence identities") {
  const auto states = numth::iterate_recurrence(horizontal_u_recurrence(), 22);
  // states[i] = (u_{i-1}, u_i) starting from (u_0, u_1) = (0, 1).
  std::vector<Nat> u;
  u.push_back(states[0][0]);
  for (const auto& st : states) u.push_back(st[1]);
  const auto qu = pell_q_u(20);
  for (std::size_t n = 1; n + 1 < u.size() - 1; ++n) {
    CHECK(u[n + 1] * u[n - 1] == u[n] * u[n] - 1);
    CHECK(3 * u[n] * u[n] + 1 == (2 * u[n] - u[n - 1]) * (2 * u[n] - u[n - 1]));
  }
  for (std::size_t n = 0; n < qu.size() && n + 1 < u.size(); ++n) {
    CHECK(qu[n].first + 2 * qu[n].second == u[n + 1]);  // q_n + 2u_n = u_{n+1}
    CHECK(qu[n].second == u[n]);
  }
}

TEST_CASE("vertical_side2_family: pinned rows") {
  const auto r1 = vertical_side2_family(1);
  CHECK(r1.a == 2);
  CHECK(r1.b == 4);
  CHECK(r1.A == EPoint{2, 4});    // 2*sqrt(3)i
  CHECK(r1.C == EPoint{-4, 4});   // -6 + 2*sqrt(3)i
  CHECK(r1.B == r1.A + r1.C);

  const auto r3 = vertical_side2_family(3);
  CHECK(r3.b == 268);  // u = 89, m = 109, x = 270, y = 218
  CHECK(r3.C == EPoint{-270 + 218, 2 * 218});

  const auto r8 = vertical_side2_family(8);
  CHECK(r8.b == 25378084);
  CHECK(r8.C.x == Int(-25378086 + 20721118));

  CHECK_THROWS_AS(vertical_side2_family(0), std::invalid_argument);
}

TEST_CASE("vertical_side4_family: pinned rows") {
  const auto b1n1 = vertical_side4_family(1, 1);
  CHECK(b1n1.a == 4);
  CHECK(b1n1.b == 14);  // (w, y) = (1, 13), x = 9
  CHECK(b1n1.A == EPoint{4, 8});
  CHECK(b1n1.C == EPoint{-9 + 13, 26});
  const auto p1 = pairs::pair_to_params(4, 14);
  CHECK(p1.s == 1);
  CHECK(p1.t == 3);

  const auto b2n2 = vertical_side4_family(2, 2);
  CHECK(b2n2.b == 2834);  // (w, y) = (236, 2713), x = 1419
  CHECK(b2n2.C == EPoint{-1419 + 2713, 2 * 2713});
  const auto p2 = pairs::pair_to_params(4, 2834);
  CHECK(p2.s == 11);
  CHECK(p2.t == 43);

  const auto b1n4 = vertical_side4_family(1, 4);
  CHECK(b1n4.b == 1322594);
  const auto p4 = pairs::pair_to_params(4, 1322594);
  CHECK(p4.s == 1609);
  CHECK(p4.t == 137);

  CHECK_THROWS_AS(vertical_side4_family(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(vertical_side4_family(1, 0), std::invalid_argument);
}

TEST_CASE("family outputs are equable and pass the side criterion") {
  for (std::size_t n = 0; n <= 8; ++n) {
    const auto r = horizontal_family(n);
    CHECK(is_equable(r.A, r.C));
    CHECK(pairs::check_sides(r.a, r.b).has_value());
    CHECK(r.B == r.A + r.C);
  }
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto r = vertical_side2_family(n);
    CHECK(is_equable(r.A, r.C));
    CHECK(pairs::check_sides(r.a, r.b).has_value());
    CHECK(r.a == 2);
    const auto states = numth::iterate_recurrence(vs2_recurrence(), n);
    CHECK(r.b == 1 + 3 * states.back()[0]);
  }
  for (int branch : {1, 2}) {
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto r = vertical_side4_family(branch, n);
      CHECK(is_equable(r.A, r.C));
      CHECK(pairs::check_sides(r.a, r.b).has_value());
      CHECK(r.a == 4);
      const auto states = numth::iterate_recurrence(vs4_recurrence(branch), n);
      CHECK(r.b == 2 * (1 + 6 * states.back()[0]));
    }
  }
}

TEST_CASE("classify: pinned orientations") {
  CHECK(classify(horizontal_family(0)).has_horizontal_diagonal);
  CHECK(classify(vertical_side2_family(1)).has_vertical_side);
  CHECK(classify(vertical_side2_family(2)).has_vertical_side);
  CHECK(classify(vertical_side4_family(1, 1)).has_vertical_side);
  CHECK(classify(vertical_side4_family(2, 1)).has_vertical_side);
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(!classify(vertical_side2_family(n)).has_vertical_diagonal);
    CHECK(!classify(vertical_side4_family(1, n)).has_vertical_diagonal);
  }
}

TEST_CASE("brute_pell: pinned solution lists") {
  const auto vs2 = brute_pell(PellKind::vs2, 100);
  REQUIRE(vs2.size() == 3);
  CHECK(vs2[0] == std::array<Nat, 2>{1, 1});
  CHECK(vs2[1] == std::array<Nat, 2>{9, 11});
  CHECK(vs2[2] == std::array<Nat, 2>{89, 109});

  const auto vs4 = brute_pell(PellKind::vs4, 300);
  REQUIRE(vs4.size() == 4);
  CHECK(vs4[0] == std::array<Nat, 2>{1, 13});
  CHECK(vs4[1] == std::array<Nat, 2>{5, 59});
  CHECK(vs4[2] == std::array<Nat, 2>{52, 599});
  CHECK(vs4[3] == std::array<Nat, 2>{236, 2713});

  const auto qu = brute_pell(PellKind::q_u, 30);
  REQUIRE(qu.size() == 4);
  CHECK(qu[0] == std::array<Nat, 2>{1, 0});
  CHECK(qu[1] == std::array<Nat, 2>{2, 1});
  CHECK(qu[2] == std::array<Nat, 2>{7, 4});
  CHECK(qu[3] == std::array<Nat, 2>{26, 15});

  CHECK_THROWS_AS(brute_pell(PellKind::q_u, Nat(2000000)), std::out_of_range);
}

TEST_CASE("vs2 row 9: construction formulas beat transcription") {
  // Three independent routes agree on b and x: b = 1 + 3u with x = b + 2,
  // 3b^2 = x^2 + 3y^2, and a + b = 6st for the recovered parameters.
  const auto states = numth::iterate_recurrence(vs2_recurrence(), 9);
  const Nat u = states.back()[0];
  const Nat m = states.back()[1];
  CHECK(u == 83739041);
  CHECK(m == 102558961);
  const Nat b = 1 + 3 * u;
  const Nat x = 3 + 3 * u;
  const Nat y = 2 * m;
  CHECK(b == 251217124);
  CHECK(x == 251217126);
  CHECK(y == 205117922);
  CHECK(3 * b * b == x * x + 3 * y * y);
  const auto params = pairs::pair_to_params(2, b);
  CHECK(params.s == 4801);
  CHECK(params.t == 8721);
  CHECK(2 + b == 6 * params.s * params.t);
  const auto r9 = vertical_side2_family(9);
  CHECK(r9.b == b);
}

TEST_CASE("vs4 branch 2 row 1: construction formulas pin x = 33") {
  // b = 62 forces x = (a + b)/2 = 33 by equability, and 3b^2 - 3y^2 = x^2
  // gives 1089 = 33^2; both routes reject any other printed value.
  const auto states = numth::iterate_recurrence(vs4_recurrence(2), 1);
  const Nat w = states.back()[0];
  const Nat y = states.back()[1];
  CHECK(w == 5);
  CHECK(y == 59);
  const Nat b = 2 * (1 + 6 * w);
  const Nat x = 6 * w + 3;
  CHECK(b == 62);
  CHECK(x == 33);
  CHECK(3 * b * b == x * x + 3 * y * y);
  CHECK(2 * x == 4 + b);  // area = perimeter for the vertical-side placement
}
