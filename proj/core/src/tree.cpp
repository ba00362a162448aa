#include "elep/tree.hpp"

#include <deque>
#include <set>
#include <stdexcept>
#include <tuple>

namespace elep::tree {

namespace {

bool is_odd(const Nat& n) { return mpz_odd_p(n.get_mpz_t()) != 0; }

}  // namespace

MarkovSolution::MarkovSolution(Nat s_, Nat t_, Nat u_)
    : s(std::move(s_)), t(std::move(t_)), u(std::move(u_)) {
  if (s < 1 || t < 1 || u < 1)
    throw std::invalid_argument("MarkovSolution: entries must be positive");
  if (!is_odd(s) || !is_odd(t))
    throw std::invalid_argument("MarkovSolution: s, t must be odd");
  if (numth::gcd(s, t) != 1)
    throw std::invalid_argument("MarkovSolution: s, t must be coprime");
  if (s * s + 3 * t * t + 2 * u * u != 6 * s * t * u)
    throw std::invalid_argument("MarkovSolution: equation not satisfied");
}

bool operator<(const MarkovSolution& a, const MarkovSolution& b) {
  return std::tie(a.s, a.t, a.u) < std::tie(b.s, b.t, b.u);
}

MarkovSolution fundamental_solution() { return MarkovSolution(1, 1, 1); }

MarkovSolution phi(int i, const MarkovSolution& sol) {
  Nat s = sol.s, t = sol.t, u = sol.u;
  switch (i) {
    case 1: s = 6 * sol.t * sol.u - sol.s; break;
    case 2: t = 2 * sol.s * sol.u - sol.t; break;
    case 3: u = 3 * sol.s * sol.t - sol.u; break;
    default: throw std::invalid_argument("phi: map index must be 1, 2 or 3");
  }
  if (s < 1 || t < 1 || u < 1)
    throw std::logic_error("phi: involution left the positive solution set");
  return MarkovSolution(std::move(s), std::move(t), std::move(u));
}

std::pair<Nat, Nat> phi_param(int i, const Nat& u, const std::pair<Nat, Nat>& st) {
  if (u < 1 || is_odd(u)) throw std::invalid_argument("phi_param: u must be even positive");
  const auto& [s, t] = st;
  std::pair<Nat, Nat> out;
  switch (i) {
    case 1: out = {3 * u * t - s, t}; break;
    case 2: out = {s, u * s - t}; break;
    default: throw std::invalid_argument("phi_param: map index must be 1 or 2");
  }
  if (out.first < 1 || out.second < 1 || !is_odd(out.first) || !is_odd(out.second) ||
      numth::gcd(out.first, out.second) != 1)
    throw std::logic_error("phi_param: image is not an odd coprime pair");
  return out;
}

std::pair<Nat, Nat> project(const MarkovSolution& sol) {
  const Nat st3 = 3 * sol.s * sol.t;
  const Nat r = abs(st3 - 2 * sol.u);
  // R^2 = 9s^2t^2 - 2(s^2+3t^2) follows from the defining equation.
  if (r * r != st3 * st3 - 2 * (sol.s * sol.s + 3 * sol.t * sol.t))
    throw std::logic_error("project: radicand mismatch");
  return {st3 - r, st3 + r};
}

namespace {

struct CandidateEdge {
  EdgeLabel label;
  std::pair<Nat, Nat> st;
};

// The four maps phi_{1,a}, phi_{2,a}, phi_{1,b}, phi_{2,b} applied to the
// node's parameter pair, in that fixed order.
std::vector<CandidateEdge> candidate_edges(const pairs::ElepPair& p) {
  const std::pair<Nat, Nat> st{p.s(), p.t()};
  std::vector<CandidateEdge> out;
  out.reserve(4);
  for (const auto& [side, u] : {std::pair<USide, Nat>{USide::a, p.a()},
                                std::pair<USide, Nat>{USide::b, p.b()}}) {
    for (int i : {1, 2}) {
      out.push_back({EdgeLabel{i, side, u}, phi_param(i, u, st)});
    }
  }
  // Reorder to phi_{1,a}, phi_{2,a}, phi_{1,b}, phi_{2,b}: already so.
  return out;
}

}  // namespace

std::vector<TreeNode> children_of(const TreeNode& node) {
  const std::pair<Nat, Nat> own{node.pair.s(), node.pair.t()};
  std::optional<std::pair<Nat, Nat>> parent_st;
  if (node.parent_edge) {
    // The same involution that generated this node leads back to the parent.
    parent_st = phi_param(node.parent_edge->map_index, node.parent_edge->u_value, own);
  }

  std::vector<TreeNode> children;
  children.reserve(3);
  bool dropped = false;
  for (auto& cand : candidate_edges(node.pair)) {
    const bool is_back_edge = parent_st ? cand.st == *parent_st : cand.st == own;
    if (is_back_edge) {
      if (dropped) throw std::logic_error("children_of: more than one back edge");
      dropped = true;
      continue;
    }
    children.emplace_back(pairs::ElepPair::from_params(cand.st.first, cand.st.second),
                          node.depth + 1, std::move(cand.label));
  }
  if (!dropped || children.size() != 3)
    throw std::logic_error("children_of: node degree is not 3");
  return children;
}

TreeNode enumerate(unsigned max_depth, const std::optional<Nat>& max_b) {
  if (max_b && *max_b < 4)
    throw std::invalid_argument("enumerate: max_b below the root value 4");

  TreeNode root(pairs::ElepPair::from_sides(2, 4));

  std::deque<TreeNode*> queue{&root};
  while (!queue.empty()) {
    TreeNode* node = queue.front();
    queue.pop_front();
    if (node->depth >= max_depth) continue;
    for (TreeNode& child : children_of(*node)) {
      // Pruning a subtree as soon as b exceeds the bound is only sound
      // because b grows strictly along every edge; verify that here.
      if (!(child.pair.b() > node->pair.b()))
        throw std::logic_error("enumerate: b did not grow along an edge");
      if (max_b && child.pair.b() > *max_b) continue;
      node->children.push_back(std::move(child));
    }
    for (TreeNode& child : node->children) queue.push_back(&child);
  }
  return root;
}

std::vector<EdgeLabel> path_to_root(const Nat& a, const Nat& b) {
  pairs::ElepPair current = [&] {
    auto p = pairs::ElepPair::try_from_sides(a, b);
    if (!p) throw std::invalid_argument("path_to_root: not an ELEP pair");
    return *p;
  }();

  std::vector<EdgeLabel> path;
  while (!(current.a() == 2 && current.b() == 4)) {
    const Nat own_st = current.s() * current.t();
    std::optional<CandidateEdge> down;
    for (auto& cand : candidate_edges(current)) {
      if (cand.st.first * cand.st.second < own_st) {
        if (down) throw std::logic_error("path_to_root: parent not unique");
        down = std::move(cand);
      }
    }
    if (!down) throw std::logic_error("path_to_root: no neighbour decreases s*t");
    path.push_back(down->label);
    current = pairs::ElepPair::from_params(down->st.first, down->st.second);
    // Relabel: u_choice refers to the side of the node above.
    path.back().u_choice = path.back().u_value == current.a() ? USide::a : USide::b;
    if (path.back().u_value != current.a() && path.back().u_value != current.b())
      throw std::logic_error("path_to_root: edge parameter is a side of neither endpoint");
  }
  return path;
}

std::vector<MarkovSolution> enumerate_solutions(unsigned max_depth) {
  std::vector<MarkovSolution> out;
  std::set<MarkovSolution> seen;
  std::deque<std::pair<MarkovSolution, unsigned>> queue;
  queue.emplace_back(fundamental_solution(), 0);
  seen.insert(fundamental_solution());
  while (!queue.empty()) {
    auto [sol, depth] = std::move(queue.front());
    queue.pop_front();
    out.push_back(sol);
    if (depth >= max_depth) continue;
    for (int i : {1, 2, 3}) {
      MarkovSolution next = phi(i, sol);
      if (seen.insert(next).second) queue.emplace_back(std::move(next), depth + 1);
    }
  }
  return out;
}

}  // namespace elep::tree
