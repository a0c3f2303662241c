#include "thrackle/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace thrackle {

namespace {

std::string fmt(double v) {
  if (!std::isfinite(v)) throw Error("cannot serialize a non-finite number");
  v += 0.0;  // flush negative zero so the text round-trips
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

}  // namespace

std::string serialize(const DrawingDocument& doc) {
  const bool spherical = doc.kind == DrawingKind::Spherical;
  const Graph& g = spherical ? doc.spherical.graph : doc.planar.graph;
  std::ostringstream out;
  out << "{\n";
  out << "  \"kind\": \"" << (spherical ? "spherical" : "planar") << "\",\n";
  out << "  \"n\": " << g.n << ",\n";
  out << "  \"edges\": [";
  for (size_t e = 0; e < g.edges.size(); ++e) {
    if (e) out << ", ";
    out << "[" << g.edges[e].first << ", " << g.edges[e].second << "]";
  }
  out << "],\n";
  out << "  \"positions\": [";
  if (spherical) {
    for (size_t i = 0; i < doc.spherical.positions.size(); ++i) {
      const UnitVec3& p = doc.spherical.positions[i];
      out << (i ? ",\n    " : "\n    ");
      out << "[" << fmt(p.x) << ", " << fmt(p.y) << ", " << fmt(p.z) << "]";
    }
    if (!doc.spherical.positions.empty()) out << "\n  ";
  } else {
    for (size_t i = 0; i < doc.planar.positions.size(); ++i) {
      const Vec2& p = doc.planar.positions[i];
      out << (i ? ",\n    " : "\n    ");
      out << "[" << fmt(p.x) << ", " << fmt(p.y) << "]";
    }
    if (!doc.planar.positions.empty()) out << "\n  ";
  }
  out << "],\n";
  out << "  \"long_flags\": [";
  if (spherical)
    for (size_t e = 0; e < doc.spherical.long_flags.size(); ++e)
      out << (e ? ", " : "") << (doc.spherical.long_flags[e] ? "true" : "false");
  out << "],\n";
  out << "  \"meta\": {";
  bool first = true;
  for (const auto& [key, value] : doc.meta) {
    out << (first ? "\n    " : ",\n    ") << quote(key) << ": " << quote(value);
    first = false;
  }
  if (!doc.meta.empty()) out << "\n  ";
  out << "}\n";
  out << "}\n";
  return out.str();
}

namespace {

using nlohmann::json;

int line_of_offset(const std::string& text, size_t byte) {
  int line = 1;
  const size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
  for (size_t i = 0; i < end; ++i)
    if (text[i] == '\n') ++line;
  return line;
}

const json& field(const json& j, const char* name) {
  const auto it = j.find(name);
  if (it == j.end()) throw ParseError("missing required field", 0, name);
  return *it;
}

}  // namespace

DrawingDocument deserialize(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), line_of_offset(text, e.byte), "");
  }
  if (!j.is_object()) throw ParseError("document must be a JSON object", 0, "");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "kind" && key != "n" && key != "edges" && key != "positions" &&
        key != "long_flags" && key != "meta")
      throw ParseError("unknown field", 0, key);
  }

  const json& jkind = field(j, "kind");
  if (!jkind.is_string()) throw ParseError("kind must be a string", 0, "kind");
  const std::string kind = jkind.get<std::string>();
  if (kind != "spherical" && kind != "planar")
    throw ParseError("kind must be \"spherical\" or \"planar\"", 0, "kind");
  const bool spherical = kind == "spherical";

  const json& jn = field(j, "n");
  if (!jn.is_number_integer() || jn.get<long long>() < 0)
    throw ParseError("n must be a non-negative integer", 0, "n");
  Graph g;
  g.n = jn.get<int>();

  const json& jedges = field(j, "edges");
  if (!jedges.is_array()) throw ParseError("edges must be an array", 0, "edges");
  for (const json& je : jedges) {
    if (!je.is_array() || je.size() != 2 || !je[0].is_number_integer() ||
        !je[1].is_number_integer())
      throw ParseError("each edge must be a pair of integers", 0, "edges");
    g.edges.emplace_back(je[0].get<int>(), je[1].get<int>());
  }
  const auto problems = validate(g);
  if (!problems.empty()) throw ParseError(problems.front(), 0, "edges");

  const json& jpos = field(j, "positions");
  if (!jpos.is_array() || static_cast<int>(jpos.size()) != g.n)
    throw ParseError("positions must hold one entry per vertex", 0, "positions");
  const size_t dims = spherical ? 3 : 2;
  std::vector<std::vector<double>> coords;
  for (const json& jp : jpos) {
    if (!jp.is_array() || jp.size() != dims)
      throw ParseError(spherical ? "each position must be [x, y, z]" : "each position must be [x, y]",
                       0, "positions");
    std::vector<double> row;
    for (const json& c : jp) {
      if (!c.is_number()) throw ParseError("position coordinates must be numbers", 0, "positions");
      row.push_back(c.get<double>());
    }
    coords.push_back(std::move(row));
  }

  const json& jflags = field(j, "long_flags");
  if (!jflags.is_array()) throw ParseError("long_flags must be an array", 0, "long_flags");
  std::vector<bool> flags;
  for (const json& jf : jflags) {
    if (!jf.is_boolean()) throw ParseError("long_flags entries must be booleans", 0, "long_flags");
    flags.push_back(jf.get<bool>());
  }
  if (spherical && flags.size() != g.edges.size())
    throw ParseError("long_flags must hold one entry per edge", 0, "long_flags");
  if (!spherical && !flags.empty())
    throw ParseError("planar documents take no long flags", 0, "long_flags");

  DrawingDocument doc;
  if (const auto it = j.find("meta"); it != j.end()) {
    if (!it->is_object()) throw ParseError("meta must be an object", 0, "meta");
    for (const auto& [key, value] : it->items()) {
      if (!value.is_string()) throw ParseError("meta values must be strings", 0, "meta");
      doc.meta[key] = value.get<std::string>();
    }
  }

  if (spherical) {
    std::vector<UnitVec3> positions;
    for (const auto& row : coords) {
      const UnitVec3 p{row[0], row[1], row[2]};
      if (!is_unit(p, 1e-9))
        throw ParseError("spherical positions must be unit vectors", 0, "positions");
      positions.push_back(p);
    }
    doc.kind = DrawingKind::Spherical;
    doc.spherical = build_spherical_drawing(g, positions, flags);
  } else {
    doc.kind = DrawingKind::Planar;
    doc.planar.graph = g;
    for (const auto& row : coords) doc.planar.positions.push_back(Vec2{row[0], row[1]});
  }
  return doc;
}

}  // namespace thrackle
