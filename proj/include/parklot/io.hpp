#pragma once

// Text and JSON forms of every object kind. Cars and spots are 1-based.
//
//   2,1,4,4,1                                   preference (all entries >= 1)
//   2,-1,0,1,-1,-1,0,3,-1,-1,-1,0               word (some entry <= 0)
//   EENENNEENN / UUDUDDUUDD                     Dyck path
//   {"kind":"pf","prefs":[...]}
//   {"kind":"luk","steps":[...]}
//   {"kind":"labelled_luk","steps":[...],"labels":[[...],null,...]}
//   {"kind":"dyck","path":"EENENNEENN"}
//   {"kind":"tree","children":[[],[[]]]}        each node is the array of its children

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "parklot/bijections.hpp"
#include "parklot/error.hpp"
#include "parklot/lattice_paths.hpp"
#include "parklot/parking.hpp"

namespace parklot::io {

using json = nlohmann::json;

enum class Kind { pf, luk, labelled_luk, dyck, tree };

using Parsed = std::variant<ParkingPreference, LukasiewiczWord, LabelledLukasiewiczWord, DyckPath, PlaneTree>;

inline std::string_view kind_name(Kind k) {
  switch (k) {
  case Kind::pf: return "pf";
  case Kind::luk: return "luk";
  case Kind::labelled_luk: return "labelled_luk";
  case Kind::dyck: return "dyck";
  case Kind::tree: return "tree";
  }
  return "?";
}

inline Kind parse_kind(std::string_view name) {
  for (Kind k : {Kind::pf, Kind::luk, Kind::labelled_luk, Kind::dyck, Kind::tree}) {
    if (kind_name(k) == name) return k;
  }
  if (name == "labelled") return Kind::labelled_luk;
  throw input_error("unknown object kind '" + std::string(name) + "'");
}

inline Kind kind_of(const Parsed& obj) { return static_cast<Kind>(obj.index()); }

inline std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

// Comma- or space-separated integers, optionally wrapped in () or [].
// The Unicode minus sign is accepted for pasted values.
inline std::vector<int> parse_integer_list(std::string_view text) {
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.substr(i, 3) == "\xE2\x88\x92") {
      s += '-';
      i += 2;
    } else {
      s += text[i];
    }
  }
  s = trim(s);
  if (!s.empty() && (s.front() == '(' || s.front() == '[')) {
    const char close = s.front() == '(' ? ')' : ']';
    if (s.back() != close) throw input_error("unbalanced brackets in '" + std::string(text) + "'");
    s = trim(std::string_view(s).substr(1, s.size() - 2));
  }
  std::vector<int> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ',' || std::isspace(static_cast<unsigned char>(s[i])))) ++i;
    if (i >= s.size()) break;
    std::size_t j = i;
    if (s[j] == '-' || s[j] == '+') ++j;
    const std::size_t digits = j;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == digits) throw input_error("expected an integer at '" + s.substr(i) + "'");
    if (j - digits > 9) throw input_error("integer too large: '" + s.substr(i, j - i) + "'");
    out.push_back(std::stoi(s.substr(i, j - i)));
    i = j;
    if (i < s.size() && s[i] != ',' && !std::isspace(static_cast<unsigned char>(s[i])))
      throw input_error("unexpected character '" + std::string(1, s[i]) + "'");
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON

inline json tree_children_json(const PlaneTree& t, std::size_t node) {
  json arr = json::array();
  for (std::size_t child : t.children(node)) arr.push_back(tree_children_json(t, child));
  return arr;
}

inline void tree_from_json(PlaneTree& t, std::size_t node, const json& children) {
  if (!children.is_array()) throw input_error("tree nodes must be arrays of children");
  for (const auto& c : children) tree_from_json(t, t.add_child(node), c);
}

inline json to_json(const ParkingPreference& p) { return {{"kind", "pf"}, {"prefs", p.vector()}}; }
inline json to_json(const LukasiewiczWord& w) { return {{"kind", "luk"}, {"steps", w.vector()}}; }
inline json to_json(const DyckPath& d) { return {{"kind", "dyck"}, {"path", d.to_string(DyckStyle::EN)}}; }
inline json to_json(const PlaneTree& t) { return {{"kind", "tree"}, {"children", tree_children_json(t, t.root())}}; }
inline json to_json(const LabelledLukasiewiczWord& lw) {
  json labels = json::array();
  for (const auto& label : lw.labels()) labels.push_back(label ? json(*label) : json(nullptr));
  return {{"kind", "labelled_luk"}, {"steps", lw.word().vector()}, {"labels", labels}};
}
inline json to_json(const Parsed& obj) {
  return std::visit([](const auto& o) { return to_json(o); }, obj);
}

template <class T>
std::vector<T> json_array(const json& j, const char* field) {
  if (!j.contains(field) || !j.at(field).is_array()) throw input_error(std::string("missing array field '") + field + "'");
  try {
    return j.at(field).get<std::vector<T>>();
  } catch (const json::exception& e) {
    throw input_error(std::string("bad field '") + field + "': " + e.what());
  }
}

inline Parsed from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw input_error("JSON input needs a string field 'kind'");
  switch (parse_kind(j.at("kind").get<std::string>())) {
  case Kind::pf: return ParkingPreference(json_array<int>(j, "prefs"));
  case Kind::luk: return LukasiewiczWord(json_array<int>(j, "steps"));
  case Kind::dyck:
    if (!j.contains("path") || !j.at("path").is_string()) throw input_error("missing string field 'path'");
    return DyckPath::parse(j.at("path").get<std::string>());
  case Kind::tree: {
    PlaneTree t;
    if (!j.contains("children")) throw input_error("missing field 'children'");
    tree_from_json(t, t.root(), j.at("children"));
    return t;
  }
  case Kind::labelled_luk: {
    auto word = LukasiewiczWord(json_array<int>(j, "steps"));
    if (!j.contains("labels") || !j.at("labels").is_array()) throw input_error("missing array field 'labels'");
    std::vector<LabelledLukasiewiczWord::Label> labels;
    for (const auto& l : j.at("labels")) {
      if (l.is_null()) {
        labels.emplace_back();
      } else if (l.is_array()) {
        try {
          labels.emplace_back(l.get<std::vector<int>>());
        } catch (const json::exception& e) {
          throw input_error(std::string("bad label: ") + e.what());
        }
      } else {
        throw input_error("labels must be arrays or null");
      }
    }
    return LabelledLukasiewiczWord(std::move(word), std::move(labels));
  }
  }
  throw input_error("unsupported kind");
}

// Parses any supported text form. `hint` forces how a bare integer list is read.
inline Parsed parse_object(std::string_view text, std::optional<Kind> hint = std::nullopt) {
  const std::string s = trim(text);
  if (s.empty()) throw input_error("empty input");
  if (s.front() == '{') {
    json j;
    try {
      j = json::parse(s);
    } catch (const json::parse_error& e) {
      throw input_error(std::string("invalid JSON: ") + e.what());
    }
    return from_json(j);
  }
  if (std::isalpha(static_cast<unsigned char>(s.front()))) return DyckPath::parse(s);
  auto values = parse_integer_list(s);
  Kind kind = Kind::pf;
  if (hint) {
    kind = *hint;
  } else if (std::any_of(values.begin(), values.end(), [](int v) { return v <= 0; })) {
    kind = Kind::luk;
  }
  switch (kind) {
  case Kind::pf: return ParkingPreference(std::move(values));
  case Kind::luk: return LukasiewiczWord(std::move(values));
  default: throw input_error("integer lists can only be read as pf or luk");
  }
}

inline std::string to_text(const Parsed& obj) {
  return std::visit(
      [](const auto& o) -> std::string {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, ParkingPreference>) {
          return join(o.vector());
        } else if constexpr (std::is_same_v<T, LukasiewiczWord>) {
          return join(o.vector());
        } else if constexpr (std::is_same_v<T, DyckPath>) {
          return o.to_string(DyckStyle::EN);
        } else if constexpr (std::is_same_v<T, PlaneTree>) {
          return to_json(o).at("children").dump();
        } else {
          std::string out;
          for (std::size_t i = 0; i < o.word().size(); ++i) {
            if (i) out += ',';
            out += std::to_string(o.word().vector()[i]);
            if (const auto& label = o.labels()[i]) out += "{" + join(*label) + "}";
          }
          return out;
        }
      },
      obj);
}

} // namespace parklot::io
