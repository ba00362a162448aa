#include "emit.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>

#include "elep/families.hpp"
#include "elep/pairs.hpp"

namespace elep::cli {

namespace {

const Int kJsonIntMax = Int("9007199254740991");  // 2^53 - 1

std::string int_str(const Int& v) { return v.get_str(); }

// RFC-4180: quote a field when it contains a comma or quote.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  out += "\r\n";
  return out;
}

std::string pair_str(const Int& x, const Int& y) {
  return "(" + int_str(x) + "," + int_str(y) + ")";
}

std::vector<const tree::TreeNode*> breadth_first(const tree::TreeNode& root) {
  std::vector<const tree::TreeNode*> order;
  std::deque<const tree::TreeNode*> queue{&root};
  while (!queue.empty()) {
    const tree::TreeNode* node = queue.front();
    queue.pop_front();
    order.push_back(node);
    for (const tree::TreeNode& child : node->children) queue.push_back(&child);
  }
  return order;
}

}  // namespace

nlohmann::json json_int(const Int& v) {
  if (abs(v) <= kJsonIntMax) return nlohmann::json(v.get_si());
  return nlohmann::json(int_str(v));
}

Int parse_json_int(const nlohmann::json& j) {
  if (j.is_number_unsigned()) return Int(static_cast<unsigned long>(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Int v;
    if (mpz_set_str(v.get_mpz_t(), j.get<std::string>().c_str(), 10) != 0)
      throw std::invalid_argument("parse_json_int: not a decimal string");
    return v;
  }
  throw std::invalid_argument("parse_json_int: unexpected JSON type");
}

std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string format_epoint_omega(const EPoint& p) {
  if (p.y == 0) return int_str(p.x);
  std::string wpart;
  if (p.y == 1) wpart = "w";
  else if (p.y == -1) wpart = "-w";
  else wpart = int_str(p.y) + "w";
  if (p.x == 0) return wpart;
  if (p.y > 0) return int_str(p.x) + "+" + wpart;
  return int_str(p.x) + wpart;
}

nlohmann::json tree_to_json(const tree::TreeNode& node) {
  nlohmann::json j;
  j["a"] = json_int(node.pair.a());
  j["b"] = json_int(node.pair.b());
  j["s"] = json_int(node.pair.s());
  j["t"] = json_int(node.pair.t());
  j["sigma"] = node.pair.sigma();
  j["depth"] = node.depth;
  if (node.parent_edge) {
    j["parent_edge"] = {
        {"map", node.parent_edge->map_index == 1 ? "phi1" : "phi2"},
        {"u", json_int(node.parent_edge->u_value)}};
  } else {
    j["parent_edge"] = nullptr;
  }
  auto children = nlohmann::json::array();
  for (const tree::TreeNode& child : node.children) children.push_back(tree_to_json(child));
  j["children"] = std::move(children);
  return j;
}

bool operator==(const TreeRecord& lhs, const TreeRecord& rhs) {
  if (!(lhs.a == rhs.a && lhs.b == rhs.b && lhs.s == rhs.s && lhs.t == rhs.t &&
        lhs.sigma == rhs.sigma && lhs.depth == rhs.depth))
    return false;
  if (lhs.parent_edge.has_value() != rhs.parent_edge.has_value()) return false;
  if (lhs.parent_edge &&
      !(lhs.parent_edge->first == rhs.parent_edge->first &&
        lhs.parent_edge->second == rhs.parent_edge->second))
    return false;
  return lhs.children == rhs.children;
}

TreeRecord tree_record_of(const tree::TreeNode& node) {
  TreeRecord rec;
  rec.a = node.pair.a();
  rec.b = node.pair.b();
  rec.s = node.pair.s();
  rec.t = node.pair.t();
  rec.sigma = node.pair.sigma();
  rec.depth = node.depth;
  if (node.parent_edge)
    rec.parent_edge = {node.parent_edge->map_index, node.parent_edge->u_value};
  for (const tree::TreeNode& child : node.children)
    rec.children.push_back(tree_record_of(child));
  return rec;
}

TreeRecord tree_record_from_json(const nlohmann::json& j) {
  TreeRecord rec;
  rec.a = parse_json_int(j.at("a"));
  rec.b = parse_json_int(j.at("b"));
  rec.s = parse_json_int(j.at("s"));
  rec.t = parse_json_int(j.at("t"));
  rec.sigma = j.at("sigma").get<int>();
  rec.depth = j.at("depth").get<unsigned>();
  if (!j.at("parent_edge").is_null()) {
    const auto& e = j.at("parent_edge");
    rec.parent_edge = {e.at("map").get<std::string>() == "phi1" ? 1 : 2,
                       parse_json_int(e.at("u"))};
  }
  for (const auto& c : j.at("children")) rec.children.push_back(tree_record_from_json(c));
  return rec;
}

namespace {

std::string dot_id(const tree::TreeNode& node) {
  return "\"" + int_str(node.pair.a()) + "," + int_str(node.pair.b()) + "\"";
}

}  // namespace

std::string tree_to_dot(const tree::TreeNode& root) {
  std::ostringstream out;
  out << "graph elep_tree {\n";
  out << "  node [shape=box];\n";
  const auto order = breadth_first(root);
  for (const tree::TreeNode* node : order) {
    out << "  " << dot_id(*node) << " [label=\"(" << int_str(node->pair.a()) << ","
        << int_str(node->pair.b()) << ")\\n(" << int_str(node->pair.s()) << ","
        << int_str(node->pair.t()) << ")\"];\n";
  }
  for (const tree::TreeNode* node : order) {
    for (const tree::TreeNode& child : node->children) {
      out << "  " << dot_id(*node) << " -- " << dot_id(child) << " [label=\"phi"
          << child.parent_edge->map_index << "," << int_str(child.parent_edge->u_value)
          << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string tree_to_csv(const tree::TreeNode& root) {
  std::string out = csv_row({"depth", "a", "b", "s", "t", "sigma", "parent_a",
                             "parent_b", "edge_map", "edge_u"});
  // Parent pointers need the parent pair; walk with explicit pairing.
  std::deque<std::pair<const tree::TreeNode*, const tree::TreeNode*>> queue;
  queue.emplace_back(&root, nullptr);
  while (!queue.empty()) {
    const auto [node, parent] = queue.front();
    queue.pop_front();
    std::vector<std::string> row{
        std::to_string(node->depth), int_str(node->pair.a()), int_str(node->pair.b()),
        int_str(node->pair.s()), int_str(node->pair.t()),
        std::to_string(node->pair.sigma())};
    if (parent) {
      row.push_back(int_str(parent->pair.a()));
      row.push_back(int_str(parent->pair.b()));
      row.push_back(node->parent_edge->map_index == 1 ? "phi1" : "phi2");
      row.push_back(int_str(node->parent_edge->u_value));
    } else {
      row.insert(row.end(), {"", "", "", ""});
    }
    out += csv_row(row);
    for (const tree::TreeNode& child : node->children) queue.emplace_back(&child, node);
  }
  return out;
}

std::optional<FamilyKind> parse_family_kind(const std::string& name) {
  if (name == "horizontal") return FamilyKind::horizontal;
  if (name == "vs2") return FamilyKind::vs2;
  if (name == "vs4a") return FamilyKind::vs4a;
  if (name == "vs4b") return FamilyKind::vs4b;
  return std::nullopt;
}

namespace {

std::pair<Nat, Nat> side_params(const Nat& a, const Nat& b) {
  const auto p = pairs::ElepPair::from_sides(a, b);
  return {p.s(), p.t()};
}

}  // namespace

std::string family_csv(FamilyKind kind, std::size_t count) {
  if (count == 0) throw std::invalid_argument("family_csv: count must be >= 1");
  std::string out;
  switch (kind) {
    case FamilyKind::horizontal: {
      out = csv_row({"n", "(q,u)", "a", "b", "A", "B", "(s,t)"});
      const auto states =
          numth::iterate_recurrence(families::pell_q_u_recurrence(), count);
      for (std::size_t n = 0; n < count; ++n) {
        const Nat& q = states[n][0];
        const Nat& u = states[n][1];
        const Nat u_next = q + 2 * u;
        const Nat a = 2 * q;
        const Nat b = 6 * u + 4 * q;
        const EPoint vertex_a{-6 * u - 2, -4};
        const EPoint vertex_b{6 * (u_next - u), 0};
        const auto [s, t] = side_params(a, b);
        out += csv_row({std::to_string(n), pair_str(q, u), int_str(a), int_str(b),
                        format_epoint_omega(vertex_a), format_epoint_omega(vertex_b),
                        pair_str(s, t)});
      }
      break;
    }
    case FamilyKind::vs2: {
      out = csv_row({"n", "(u,m)", "b", "x", "y", "(s,t)"});
      const auto states = numth::iterate_recurrence(families::vs2_recurrence(), count);
      for (std::size_t n = 1; n <= count; ++n) {
        const Nat& u = states[n - 1][0];
        const Nat& m = states[n - 1][1];
        const Nat b = 1 + 3 * u;
        const Nat x = 3 + 3 * u;
        const Nat y = 2 * m;
        const auto [s, t] = side_params(2, b);
        out += csv_row({std::to_string(n), pair_str(u, m), int_str(b), int_str(x),
                        int_str(y), pair_str(s, t)});
      }
      break;
    }
    case FamilyKind::vs4a:
    case FamilyKind::vs4b: {
      out = csv_row({"n", "(w,y)", "b", "x", "(s,t)"});
      const int branch = kind == FamilyKind::vs4a ? 1 : 2;
      const auto states =
          numth::iterate_recurrence(families::vs4_recurrence(branch), count);
      for (std::size_t n = 1; n <= count; ++n) {
        const Nat& w = states[n - 1][0];
        const Nat& y = states[n - 1][1];
        const Nat b = 2 * (1 + 6 * w);
        const Nat x = 6 * w + 3;
        const auto [s, t] = side_params(4, b);
        out += csv_row({std::to_string(n), pair_str(w, y), int_str(b), int_str(x),
                        pair_str(s, t)});
      }
      break;
    }
  }
  return out;
}

nlohmann::json check_to_json(const Nat& a, const Nat& b) {
  const Nat lo = a < b ? a : b;
  const Nat hi = a < b ? b : a;
  nlohmann::json j;
  if (lo == hi) {
    j["valid"] = false;
    j["reason"] = "equal sides: no equable lattice rhombus exists";
    return j;
  }
  const auto pair = pairs::ElepPair::try_from_sides(lo, hi);
  if (!pair) {
    j["valid"] = false;
    j["reason"] = "9a^2b^2 - 12(a+b)^2 is not a perfect square";
    return j;
  }
  const auto m = pairs::metrics(*pair);
  j["valid"] = true;
  j["a"] = json_int(pair->a());
  j["b"] = json_int(pair->b());
  j["disc"] = json_int(pair->disc());
  j["s"] = json_int(pair->s());
  j["t"] = json_int(pair->t());
  j["sigma"] = pair->sigma();
  j["dl_sq"] = json_int(m.dl_sq);
  j["ds_sq"] = json_int(m.ds_sq);
  j["h_l"] = rat_str(m.h_l);
  j["h_s"] = rat_str(m.h_s);
  j["eta_l_sq"] = rat_str(m.eta_l_sq);
  j["eta_s_sq"] = rat_str(m.eta_s_sq);
  return j;
}

namespace {

nlohmann::json epoint_json(const EPoint& p) {
  return nlohmann::json::array({json_int(p.x), json_int(p.y)});
}

nlohmann::json cartesian_json(const EPoint& p) {
  const auto [cx, cy] = to_cartesian(p);
  return nlohmann::json::array({rat_str(cx), rat_str(cy)});
}

}  // namespace

nlohmann::json realization_to_json(const search::Realization& r) {
  const auto pair = pairs::ElepPair::from_sides(r.a, r.b);
  const auto m = pairs::metrics(pair);
  nlohmann::json j;
  j["a"] = json_int(r.a);
  j["b"] = json_int(r.b);
  j["v1"] = epoint_json(r.v1);
  j["v2"] = epoint_json(r.v2);
  const EPoint origin{0, 0};
  j["vertices_omega"] = nlohmann::json::array(
      {epoint_json(origin), epoint_json(r.v1), epoint_json(r.v1 + r.v2), epoint_json(r.v2)});
  // Cartesian pairs [x, y] denote the point x + y*sqrt(3)i.
  j["vertices_cartesian"] = nlohmann::json::array(
      {cartesian_json(origin), cartesian_json(r.v1), cartesian_json(r.v1 + r.v2),
       cartesian_json(r.v2)});
  j["determinant"] = json_int(area2_units(LatticeParallelogram{r.v1, r.v2}));
  j["dl_sq"] = json_int(m.dl_sq);
  j["ds_sq"] = json_int(m.ds_sq);
  return j;
}

nlohmann::json scan_report_to_json(const search::ScanReport& report) {
  nlohmann::json j;
  j["max_coord"] = json_int(report.max_coord);
  auto found = nlohmann::json::array();
  for (const auto& entry : report.found) {
    nlohmann::json e;
    e["a"] = json_int(entry.a);
    e["b"] = json_int(entry.b);
    e["congruence_classes"] = json_int(entry.congruence_classes);
    e["representative"] = {{"v1", epoint_json(entry.representative.v1)},
                           {"v2", epoint_json(entry.representative.v2)}};
    e["flags"] = {{"horizontal_diagonal", entry.flags.has_horizontal_diagonal},
                  {"vertical_diagonal", entry.flags.has_vertical_diagonal},
                  {"vertical_side", entry.flags.has_vertical_side},
                  {"horizontal_side", entry.flags.has_horizontal_side}};
    found.push_back(std::move(e));
  }
  j["found"] = std::move(found);
  auto anomalies = nlohmann::json::array();
  for (const auto& pg : report.anomalies)
    anomalies.push_back({{"v1", epoint_json(pg.v1)}, {"v2", epoint_json(pg.v2)}});
  j["anomalies"] = std::move(anomalies);
  return j;
}

}  // namespace elep::cli
