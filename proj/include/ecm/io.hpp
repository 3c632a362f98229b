#pragma once

// Poset documents, witnesses and DOT output. Needs nlohmann/json on the
// include path (vendor/json.hpp).

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "ecm/cm.hpp"
#include "ecm/poset.hpp"

namespace ecm::io {

using json = nlohmann::ordered_json;

/// {"name": ..., "elements": [...], "covers": [[lo, hi], ...]}
inline json poset_to_json(const Poset& p, const std::string& name) {
  json covers = json::array();
  for (auto [a, b] : p.cover_list()) covers.push_back({p.label(a), p.label(b)});
  return json{{"name", name}, {"elements", p.labels()}, {"covers", covers}};
}

struct PosetDocument {
  std::string name;
  Poset poset;
};

/// Parses and validates a poset document. Schema and Hasse-diagram violations
/// raise ecm::Error.
inline PosetDocument poset_from_json(const json& doc) {
  auto bad = [](const std::string& what) { return Error(ErrorCode::BadInput, what); };
  if (!doc.is_object()) throw bad("poset document must be a JSON object");
  if (!doc.contains("name") || !doc["name"].is_string()) throw bad("field 'name' must be a string");
  if (!doc.contains("elements") || !doc["elements"].is_array()) throw bad("field 'elements' must be a list");
  if (!doc.contains("covers") || !doc["covers"].is_array()) throw bad("field 'covers' must be a list");
  std::vector<std::string> labels;
  for (const auto& e : doc["elements"]) {
    if (!e.is_string()) throw bad("elements must be strings");
    labels.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& c : doc["covers"]) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string()) {
      throw bad("each cover must be a 2-element list of strings");
    }
    covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }
  return {doc["name"].get<std::string>(), build_poset(std::move(labels), covers)};
}

inline PosetDocument parse_poset(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::BadInput, std::string("malformed JSON: ") + e.what());
  }
  return poset_from_json(doc);
}

inline json witness_to_json(const Witness& w) {
  json j{{"kind", to_string(w.kind)}, {"elements", w.elements}};
  if (w.betti_index) j["betti_index"] = *w.betti_index;
  j["detail"] = w.detail;
  if (!w.cause.empty()) j["cause"] = witness_to_json(w.cause.front());
  return j;
}

inline Witness witness_from_json(const json& j) {
  static const std::vector<WitnessKind> kinds{WitnessKind::not_pure,         WitnessKind::link_face,
                                              WitnessKind::open_interval,    WitnessKind::vertex_set,
                                              WitnessKind::removed_interval, WitnessKind::rank_too_small,
                                              WitnessKind::not_cm};
  Witness w;
  const std::string kind = j.at("kind").get<std::string>();
  bool known = false;
  for (auto k : kinds) {
    if (kind == to_string(k)) {
      w.kind = k;
      known = true;
    }
  }
  if (!known) throw Error(ErrorCode::BadInput, "unknown witness kind '" + kind + "'");
  w.elements = j.at("elements").get<std::vector<std::string>>();
  if (j.contains("betti_index")) w.betti_index = j["betti_index"].get<int>();
  w.detail = j.value("detail", "");
  if (j.contains("cause")) w.cause.push_back(witness_from_json(j["cause"]));
  return w;
}

inline json verdict_to_json(const CmVerdict& v) {
  json j{{"property", v.property}, {"holds", v.holds}};
  j["witness"] = v.witness ? witness_to_json(*v.witness) : json(nullptr);
  return j;
}

/// FNV-1a over the compact poset document; stable across runs.
inline std::string fingerprint(const Poset& p) {
  std::string text = poset_to_json(p, "").dump();
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

/// Hasse diagram drawn bottom to top; graded posets get one rank per row.
inline std::string to_dot(const Poset& p, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << dot_quote(name.empty() ? "poset" : name) << " {\n";
  os << "  rankdir=BT;\n  node [shape=circle];\n";
  for (const auto& s : p.labels()) os << "  " << dot_quote(s) << ";\n";
  if (auto ranks = rank_function(p); ranks && !p.empty()) {
    int top = *std::max_element(ranks->begin(), ranks->end());
    for (int r = 0; r <= top; ++r) {
      os << "  { rank=same;";
      for (int i = 0; i < p.size(); ++i)
        if ((*ranks)[i] == r) os << " " << dot_quote(p.label(i)) << ";";
      os << " }\n";
    }
  }
  for (auto [a, b] : p.cover_list()) os << "  " << dot_quote(p.label(a)) << " -> " << dot_quote(p.label(b)) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace ecm::io
