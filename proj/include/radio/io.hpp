#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "radio/bounds.hpp"
#include "radio/labeling.hpp"
#include "radio/oracle.hpp"

namespace radio {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// First line the order, then one `u v` edge per line. Blank lines and
/// lines starting with '#' are skipped. Throws Error(parse_error).
Tree parse_tree_text(std::string_view text);
std::string tree_to_text(const Tree& t);

/// `path:m`, `star:n`, `path m`, `star n`, or a file in the tree text format.
Tree tree_from_spec(const std::string& spec);

/// {"order": n, "edges": [[u, v], ...]}
json tree_to_json(const Tree& t);
Tree tree_from_json(const json& j);

/// One flat id per line, or a JSON array of [x, y] pairs, or a JSON object
/// with an "ordering" member holding such an array.
std::vector<int> parse_ordering(std::string_view text, const ProductGraph& g);
json ordering_to_json(const VertexOrdering& ord);

/// JSON array of {"x", "y", "label"}, a JSON object with a "labeling"
/// member holding one, or CSV with header x,y,label. Unlisted vertices are
/// a parse error.
RadioLabeling parse_labeling(std::string_view text, std::shared_ptr<const ProductGraph> g);
json labeling_to_json(const RadioLabeling& lab);
std::string labeling_to_csv(const RadioLabeling& lab);

std::string_view bound_case_name(BoundCase c) noexcept;
json bound_to_json(const ProductGraph& g, const BoundReport& r);
json verdict_to_json(const ConditionVerdict& v);
json violations_to_json(const ProductGraph& g, const std::vector<Violation>& vs);
json oracle_to_json(const OracleResult& r);

/// Graphviz text; vertices named "(i,j)", with a label attribute when a
/// labeling is given.
std::string to_dot(const ProductGraph& g, const RadioLabeling* lab = nullptr);

std::string read_file(const std::string& path);

}  // namespace radio
