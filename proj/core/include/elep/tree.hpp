#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "elep/numth.hpp"
#include "elep/pairs.hpp"

namespace elep::tree {

/// Positive solution of s^2 + 3t^2 + 2u^2 = 6stu with s, t odd and coprime.
/// Validated on construction; throws std::invalid_argument otherwise.
struct MarkovSolution {
  Nat s;
  Nat t;
  Nat u;

  MarkovSolution(Nat s_, Nat t_, Nat u_);

  friend bool operator==(const MarkovSolution& a, const MarkovSolution& b) {
    return a.s == b.s && a.t == b.t && a.u == b.u;
  }
  friend bool operator<(const MarkovSolution& a, const MarkovSolution& b);
};

/// The fundamental solution (1, 1, 1), root of the solution tree.
MarkovSolution fundamental_solution();

/// Vieta involutions: i = 1 replaces s by 6tu - s, i = 2 replaces t by
/// 2su - t, i = 3 replaces u by 3st - u. Applying the same map twice
/// returns the input. Throws std::invalid_argument for i outside {1,2,3};
/// a nonpositive entry in the result is a structural impossibility and
/// raises std::logic_error.
MarkovSolution phi(int i, const MarkovSolution& sol);

/// The involutions transported to parameter pairs, with u the side value
/// (a or b, always even) held fixed: phi_{1,u}(s,t) = (3ut - s, t),
/// phi_{2,u}(s,t) = (s, us - t). The result is again odd and coprime
/// (checked). i in {1,2}; u even positive.
std::pair<Nat, Nat> phi_param(int i, const Nat& u, const std::pair<Nat, Nat>& st);

/// Projection to side pairs: (3st - R, 3st + R) with
/// R = sqrt(9s^2t^2 - 2(s^2 + 3t^2)), which is exact for every solution
/// (R = |3st - 2u|). One of a, b equals 2u.
std::pair<Nat, Nat> project(const MarkovSolution& sol);

/// Which side of the source node an edge's parameter u was taken from.
enum class USide { a, b };

/// Label of a tree edge: the map phi_{i,u} that connects the two nodes.
struct EdgeLabel {
  int map_index;  // 1 or 2
  USide u_choice;
  Nat u_value;

  friend bool operator==(const EdgeLabel& l, const EdgeLabel& r) {
    return l.map_index == r.map_index && l.u_choice == r.u_choice &&
           l.u_value == r.u_value;
  }
};

/// Node of the materialized side-pair tree. Each child records the edge
/// that generated it in parent_edge, so children double as the ordered
/// (EdgeLabel, node) list.
struct TreeNode {
  pairs::ElepPair pair;
  unsigned depth;
  std::optional<EdgeLabel> parent_edge;
  std::vector<TreeNode> children;

  explicit TreeNode(pairs::ElepPair p, unsigned d = 0,
                    std::optional<EdgeLabel> edge = std::nullopt)
      : pair(std::move(p)), depth(d), parent_edge(std::move(edge)) {}
};

/// The three children of a node, in the fixed order phi_{1,a}, phi_{2,a},
/// phi_{1,b}, phi_{2,b} with the map leading back to the parent removed
/// (for the root, the phi_{2,a} self-map is the one removed). Children are
/// returned fresh, without grandchildren.
std::vector<TreeNode> children_of(const TreeNode& node);

/// Breadth-first tree of side pairs from the root (2, 4). Subtrees rooted
/// at a child with b > max_b are dropped entirely; this relies on b growing
/// strictly along every edge, which is asserted during enumeration.
/// max_b (when given) must be at least 4 so the root survives.
TreeNode enumerate(unsigned max_depth, const std::optional<Nat>& max_b = std::nullopt);

/// Edge labels from (a, b) back up to the root (2, 4). The parent of a
/// non-root node is its unique neighbour with smaller s*t (asserted
/// unique). Throws std::invalid_argument for pairs failing the side
/// criterion.
std::vector<EdgeLabel> path_to_root(const Nat& a, const Nat& b);

/// All solutions within the given edge distance of the fundamental
/// solution, breadth first. Used by the involution and fixed-point suites.
std::vector<MarkovSolution> enumerate_solutions(unsigned max_depth);

}  // namespace elep::tree
