#include "elep/pairs.hpp"

#include <stdexcept>

namespace elep::pairs {

namespace {

bool is_odd(const Nat& n) { return mpz_odd_p(n.get_mpz_t()) != 0; }

}  // namespace

std::optional<Nat> check_sides(const Nat& a, const Nat& b) {
  if (a < 1 || b < 1) throw std::invalid_argument("check_sides: sides must be positive");
  const Nat expr = 9 * a * a * b * b - 12 * (a + b) * (a + b);
  if (expr < 0) return std::nullopt;
  return numth::perfect_square(expr);
}

ParamTriple pair_to_params(const Nat& a, const Nat& b) {
  if (!(a < b)) throw std::invalid_argument("pair_to_params: requires a < b");
  const auto disc = check_sides(a, b);
  if (!disc) throw std::invalid_argument("pair_to_params: not an ELEP pair");

  const Nat three_ab = 3 * a * b;
  std::optional<ParamTriple> found;
  for (int sigma : {+1, -1}) {
    const Nat s_num = three_ab + sigma * *disc;
    const Nat t_num = three_ab - sigma * *disc;
    if (!mpz_divisible_ui_p(s_num.get_mpz_t(), 12)) continue;
    if (!mpz_divisible_ui_p(t_num.get_mpz_t(), 36)) continue;
    const auto s = numth::perfect_square(s_num / 12);
    if (!s) continue;
    const auto t = numth::perfect_square(t_num / 36);
    if (!t) continue;
    if (!is_odd(*s) || !is_odd(*t)) continue;
    if (numth::gcd(*s, *t) != 1) continue;
    if (found) throw std::logic_error("pair_to_params: sign choice not unique");
    found = ParamTriple{*s, *t, sigma};
  }
  if (!found) throw std::logic_error("pair_to_params: no sign choice recovers parameters");
  return *found;
}

std::pair<Nat, Nat> params_to_pair(const Nat& s, const Nat& t) {
  if (s < 1 || t < 1 || !is_odd(s) || !is_odd(t))
    throw std::invalid_argument("params_to_pair: s, t must be odd positive");
  if (numth::gcd(s, t) != 1)
    throw std::invalid_argument("params_to_pair: s, t must be coprime");
  const Nat st3 = 3 * s * t;
  const Nat radicand = st3 * st3 - 2 * (s * s + 3 * t * t);
  const auto root = numth::perfect_square(radicand);
  if (!root) throw std::invalid_argument("params_to_pair: params not on solution tree");
  return {st3 - *root, st3 + *root};
}

ElepPair ElepPair::from_sides(const Nat& a, const Nat& b) {
  if (!(a < b)) throw std::invalid_argument("ElepPair: requires a < b");
  ParamTriple params = pair_to_params(a, b);
  ElepPair p;
  p.a_ = a;
  p.b_ = b;
  p.disc_ = *check_sides(a, b);
  p.s_ = std::move(params.s);
  p.t_ = std::move(params.t);
  p.sigma_ = params.sigma;
  return p;
}

std::optional<ElepPair> ElepPair::try_from_sides(const Nat& a, const Nat& b) {
  if (!(a < b) || !check_sides(a, b)) return std::nullopt;
  return from_sides(a, b);
}

ElepPair ElepPair::from_params(const Nat& s, const Nat& t) {
  const auto [a, b] = params_to_pair(s, t);
  return from_sides(a, b);
}

ParallelogramMetrics metrics(const ElepPair& p) {
  const Nat s2 = p.s() * p.s();
  const Nat t2_3 = 3 * p.t() * p.t();
  const Nat nine_s2t2 = 3 * s2 * t2_3;
  const Nat& lo = s2 < t2_3 ? s2 : t2_3;
  const Nat& hi = s2 < t2_3 ? t2_3 : s2;
  ParallelogramMetrics m;
  m.dl_sq = 12 * (nine_s2t2 - 2 * lo);
  m.ds_sq = 12 * (nine_s2t2 - 2 * hi);
  const Nat sum = p.a() + p.b();
  m.h_l = make_rat(2 * sum, p.a());
  m.h_s = make_rat(2 * sum, p.b());
  m.eta_l_sq = make_rat(12 * sum * sum, m.ds_sq);
  m.eta_s_sq = make_rat(12 * sum * sum, m.dl_sq);
  return m;
}

std::optional<Nat> rhombus_witness(const Nat& a) {
  if (a < 1) throw std::invalid_argument("rhombus_witness: side must be positive");
  const Nat expr = 9 * a * a - 48;
  if (expr < 0) return std::nullopt;
  return numth::perfect_square(expr);
}

}  // namespace elep::pairs
