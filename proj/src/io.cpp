#include "radio/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "radio/errors.hpp"

namespace radio {

namespace {

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    out.push_back(t);
  }
  return out;
}

long long parse_int(const std::string& s, const std::string& what) {
  size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw Error(ErrorCode::parse_error, "expected an integer for " + what + ", got '" + s + "'");
  }
  if (used != s.size()) throw Error(ErrorCode::parse_error, "expected an integer for " + what + ", got '" + s + "'");
  return v;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::parse_error, std::string("invalid JSON: ") + e.what());
  }
}

bool looks_like_json(std::string_view text) {
  auto t = trim(text);
  return !t.empty() && (t[0] == '[' || t[0] == '{');
}

int vertex_of(const ProductGraph& g, const json& pair) {
  if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer())
    throw Error(ErrorCode::parse_error, "expected [x, y], got " + pair.dump());
  int x = pair[0].get<int>(), y = pair[1].get<int>();
  if (x < 0 || x >= g.m() || y < 0 || y >= g.n())
    throw Error(ErrorCode::parse_error, "vertex " + pair.dump() + " is not in the product");
  return g.id(x, y);
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::parse_error, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Tree parse_tree_text(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorCode::parse_error, "empty tree description");
  long long order = parse_int(lines[0], "tree order");
  if (order < 1 || order > 10000000) throw Error(ErrorCode::parse_error, "tree order out of range");
  std::vector<Edge> edges;
  for (size_t i = 1; i < lines.size(); ++i) {
    std::istringstream ls(lines[i]);
    std::string a, b, extra;
    if (!(ls >> a >> b) || (ls >> extra))
      throw Error(ErrorCode::parse_error, "line " + std::to_string(i + 1) + ": expected 'u v', got '" + lines[i] + "'");
    edges.push_back({static_cast<int>(parse_int(a, "edge endpoint")), static_cast<int>(parse_int(b, "edge endpoint"))});
  }
  return Tree::from_edges(static_cast<int>(order), edges);
}

std::string tree_to_text(const Tree& t) {
  std::ostringstream out;
  out << t.order() << '\n';
  for (const auto& e : t.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Tree tree_from_spec(const std::string& spec) {
  for (std::string kind : {"path", "star"}) {
    if (spec.size() > kind.size() && spec.compare(0, kind.size(), kind) == 0 &&
        (spec[kind.size()] == ':' || spec[kind.size()] == ' ')) {
      long long k = parse_int(trim(spec.substr(kind.size() + 1)), kind + " size");
      if (k < 0 || k > 10000000) throw Error(ErrorCode::parse_error, kind + " size out of range");
      return kind == "path" ? Tree::path(static_cast<int>(k)) : Tree::star(static_cast<int>(k));
    }
  }
  return parse_tree_text(read_file(spec));
}

json tree_to_json(const Tree& t) {
  json edges = json::array();
  for (const auto& e : t.edges()) edges.push_back({e.u, e.v});
  return {{"order", t.order()}, {"edges", edges}};
}

Tree tree_from_json(const json& j) {
  try {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    return Tree::from_edges(j.at("order").get<int>(), edges);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("bad tree object: ") + e.what());
  }
}

std::vector<int> parse_ordering(std::string_view text, const ProductGraph& g) {
  std::vector<int> seq;
  if (looks_like_json(text)) {
    json j = parse_json(text);
    if (j.is_object()) {
      if (!j.contains("ordering")) throw Error(ErrorCode::parse_error, "JSON object has no \"ordering\" member");
      j = j["ordering"];
    }
    if (!j.is_array()) throw Error(ErrorCode::parse_error, "ordering must be a JSON array");
    for (const auto& e : j) seq.push_back(vertex_of(g, e));
    return seq;
  }
  for (const auto& line : content_lines(text)) seq.push_back(static_cast<int>(parse_int(line, "vertex id")));
  return seq;
}

json ordering_to_json(const VertexOrdering& ord) {
  json out = json::array();
  for (int v : ord.sequence()) {
    auto [x, y] = ord.graph().vertex(v);
    out.push_back({x, y});
  }
  return out;
}

RadioLabeling parse_labeling(std::string_view text, std::shared_ptr<const ProductGraph> g) {
  const int p = g->order();
  std::vector<std::int64_t> labels(p, 0);
  std::vector<char> seen(p, 0);
  auto assign = [&](long long x, long long y, long long label) {
    if (x < 0 || x >= g->m() || y < 0 || y >= g->n())
      throw Error(ErrorCode::parse_error,
                  "vertex (" + std::to_string(x) + "," + std::to_string(y) + ") is not in the product");
    int v = g->id(static_cast<int>(x), static_cast<int>(y));
    if (seen[v]) throw Error(ErrorCode::parse_error, "vertex (" + std::to_string(x) + "," + std::to_string(y) + ") labeled twice");
    seen[v] = 1;
    labels[v] = label;
  };
  if (looks_like_json(text)) {
    json j = parse_json(text);
    if (j.is_object()) {
      if (!j.contains("labeling")) throw Error(ErrorCode::parse_error, "JSON object has no \"labeling\" member");
      j = j["labeling"];
    }
    if (!j.is_array()) throw Error(ErrorCode::parse_error, "labeling must be a JSON array");
    try {
      for (const auto& e : j) assign(e.at("x").get<long long>(), e.at("y").get<long long>(), e.at("label").get<long long>());
    } catch (const json::exception& e) {
      throw Error(ErrorCode::parse_error, std::string("bad labeling entry: ") + e.what());
    }
  } else {
    auto lines = content_lines(text);
    if (lines.empty()) throw Error(ErrorCode::parse_error, "empty labeling");
    std::string header = lines[0];
    header.erase(std::remove_if(header.begin(), header.end(), ::isspace), header.end());
    if (header != "x,y,label") throw Error(ErrorCode::parse_error, "CSV header must be x,y,label");
    for (size_t i = 1; i < lines.size(); ++i) {
      std::vector<std::string> cells;
      std::stringstream ls(lines[i]);
      std::string cell;
      while (std::getline(ls, cell, ',')) cells.push_back(trim(cell));
      if (cells.size() != 3) throw Error(ErrorCode::parse_error, "CSV line " + std::to_string(i + 1) + " needs 3 fields");
      assign(parse_int(cells[0], "x"), parse_int(cells[1], "y"), parse_int(cells[2], "label"));
    }
  }
  for (int v = 0; v < p; ++v)
    if (!seen[v]) {
      auto [x, y] = g->vertex(v);
      throw Error(ErrorCode::parse_error, "vertex (" + std::to_string(x) + "," + std::to_string(y) + ") has no label");
    }
  return RadioLabeling(std::move(g), std::move(labels));
}

json labeling_to_json(const RadioLabeling& lab) {
  json out = json::array();
  for (int v = 0; v < lab.graph().order(); ++v) {
    auto [x, y] = lab.graph().vertex(v);
    out.push_back({{"x", x}, {"y", y}, {"label", lab.label(v)}});
  }
  return out;
}

std::string labeling_to_csv(const RadioLabeling& lab) {
  std::ostringstream out;
  out << "x,y,label\n";
  for (int v = 0; v < lab.graph().order(); ++v) {
    auto [x, y] = lab.graph().vertex(v);
    out << x << ',' << y << ',' << lab.label(v) << '\n';
  }
  return out.str();
}

std::string_view bound_case_name(BoundCase c) noexcept {
  switch (c) {
    case BoundCase::one_center: return "one_center";
    case BoundCase::two_centers: return "two_centers";
    case BoundCase::four_centers: return "four_centers";
  }
  return "unknown";
}

json bound_to_json(const ProductGraph& g, const BoundReport& r) {
  return {{"schema", kSchemaVersion},
          {"value", r.value},
          {"case", bound_case_name(r.bound_case)},
          {"xi", r.xi},
          {"p", r.p},
          {"d", r.d},
          {"attainability", attainability(g) == Attainability::open ? "open" : "strictly_above_bound"}};
}

json verdict_to_json(const ConditionVerdict& v) {
  json out{{"condition", condition_name(v.condition)}, {"holds", v.holds}};
  if (v.witness)
    out["witness"] = {{"a", v.witness->a},
                      {"b", v.witness->b},
                      {"lhs", v.witness->lhs},
                      {"rhs", v.witness->rhs},
                      {"clause", v.witness->clause}};
  return out;
}

json violations_to_json(const ProductGraph& g, const std::vector<Violation>& vs) {
  json out = json::array();
  for (const auto& v : vs) {
    auto a = g.vertex(v.u), b = g.vertex(v.v);
    out.push_back({{"u", {a.x, a.y}}, {"v", {b.x, b.y}}, {"gap", v.gap}, {"required", v.required}});
  }
  return out;
}

json oracle_to_json(const OracleResult& r) {
  json out{{"schema", kSchemaVersion},
           {"status", r.status == OracleStatus::exact ? "exact" : "bracket"},
           {"lo", r.lo},
           {"hi", r.hi},
           {"nodes_explored", r.nodes_explored}};
  if (r.status == OracleStatus::exact) out["value"] = r.lo;
  if (r.best) out["labeling"] = labeling_to_json(*r.best);
  return out;
}

std::string to_dot(const ProductGraph& g, const RadioLabeling* lab) {
  std::ostringstream out;
  auto name = [&](int v) {
    auto [x, y] = g.vertex(v);
    return "\"(" + std::to_string(x) + "," + std::to_string(y) + ")\"";
  };
  out << "graph product {\n";
  for (int v = 0; v < g.order(); ++v) {
    out << "  " << name(v);
    if (lab) out << " [label=\"" << lab->label(v) << "\"]";
    out << ";\n";
  }
  for (int v = 0; v < g.order(); ++v)
    for (int w : g.neighbors(v))
      if (v < w) out << "  " << name(v) << " -- " << name(w) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace radio
