#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "elep/eisenstein.hpp"
#include "elep/numth.hpp"
#include "elep/search.hpp"
#include "elep/tree.hpp"

namespace elep::cli {

/// JSON-safe integer: a plain number up to 53 bits of magnitude, a decimal
/// string beyond that (JSON numbers lose exactness past 2^53 in common
/// consumers).
nlohmann::json json_int(const Int& v);
Int parse_json_int(const nlohmann::json& j);

/// Exact rational as "p/q", or just "p" for integers.
std::string rat_str(const Rat& r);

/// "x+yw" rendering of a lattice point, e.g. "-2-4w", "6", "w".
std::string format_epoint_omega(const EPoint& p);

nlohmann::json tree_to_json(const tree::TreeNode& node);

/// Parsed mirror of the JSON tree schema, for round-trip checks.
struct TreeRecord {
  Int a, b, s, t;
  int sigma = 0;
  unsigned depth = 0;
  std::optional<std::pair<int, Int>> parent_edge;  // (map index, u)
  std::vector<TreeRecord> children;
};
bool operator==(const TreeRecord& lhs, const TreeRecord& rhs);
TreeRecord tree_record_of(const tree::TreeNode& node);
TreeRecord tree_record_from_json(const nlohmann::json& j);

/// Graphviz tree with nodes labeled "(a,b)\n(s,t)" and edges "phi{i},{u}";
/// breadth-first, stable across runs.
std::string tree_to_dot(const tree::TreeNode& root);

/// RFC-4180 CSV, one node per row with a parent pointer.
std::string tree_to_csv(const tree::TreeNode& root);

enum class FamilyKind { horizontal, vs2, vs4a, vs4b };
std::optional<FamilyKind> parse_family_kind(const std::string& name);

/// CSV of the first `count` family rows, one table per family:
/// horizontal has columns n,(q,u),a,b,A,B,(s,t) starting at n = 0; the
/// vertical-side families start at n = 1 with columns n,(u,m),b,x,y,(s,t)
/// and n,(w,y),b,x,(s,t) respectively.
std::string family_csv(FamilyKind kind, std::size_t count);

nlohmann::json check_to_json(const Nat& a, const Nat& b);
nlohmann::json realization_to_json(const search::Realization& r);
nlohmann::json scan_report_to_json(const search::ScanReport& report);

}  // namespace elep::cli
