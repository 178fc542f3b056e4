#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "latlas/lattice.hpp"
#include "latlas/serialize.hpp"
#include "latlas/taxonomy.hpp"

namespace latlas {

/// A renderable per-group document: the weighted lattice with a structure
/// name per class and the classes grouped into ranks by subgroup order.
struct AtlasPage {
  std::string name;
  std::string family;
  WeightedLattice lattice;
  std::vector<std::vector<size_t>> ranks;  // class ids, by order descending
};

inline AtlasPage make_atlas_page(std::string name, std::string family,
                                 WeightedLattice lat,
                                 const NameDatabase& db = NameDatabase::builtins(),
                                 const Config& cfg = {}) {
  AtlasPage page;
  page.name = std::move(name);
  page.family = std::move(family);
  page.lattice = std::move(lat);
  for (auto& c : page.lattice.classes) {
    try {
      c.name = name_group(c.representative, db, cfg);
    } catch (const error&) {
      try {
        c.name = name_group_base(c.representative, cfg);
      } catch (const error&) {
        c.name = "?" + c.order.str();
      }
    }
  }
  std::map<BigInt, std::vector<size_t>, std::greater<BigInt>> by_order;
  for (const auto& c : page.lattice.classes) by_order[c.order].push_back(c.id);
  for (auto& [o, ids] : by_order) page.ranks.push_back(ids);
  return page;
}

/// DOT digraph: one labeled box per class, one labeled edge per cover,
/// classes of equal order on the same rank.
inline std::string emit_dot(const AtlasPage& page) {
  std::string out = "digraph \"" + page.name + "\" {\n";
  out += "  rankdir=TB;\n  node [shape=box, fontsize=10];\n";
  for (const auto& c : page.lattice.classes)
    out += "  c" + std::to_string(c.id) + " [label=\"" + c.name + " (" +
           c.order.str() + ", " + c.class_length.str() + ")\"];\n";
  for (const auto& rank : page.ranks) {
    if (rank.size() < 2) continue;
    out += "  { rank=same;";
    for (size_t id : rank) out += " c" + std::to_string(id) + ";";
    out += " }\n";
  }
  for (const auto& e : page.lattice.covers)
    out += "  c" + std::to_string(e.a) + " -> c" + std::to_string(e.b) +
           " [label=\"" + e.n_ab.str() + "/" + e.n_ba.str() +
           "\", fontsize=9];\n";
  out += "}\n";
  return out;
}

/// Lattice JSON with name and family added to the group object; parses back
/// with lattice_from_json.
inline std::string emit_json(const AtlasPage& page) {
  json doc = lattice_to_json(page.lattice);
  json group;
  group["name"] = page.name;
  group["family"] = page.family;
  for (auto& [k, v] : doc["group"].items()) group[k] = v;
  doc["group"] = std::move(group);
  return doc.dump(2) + "\n";
}

namespace detail {

inline std::string html_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '&')
      out += "&amp;";
    else if (c == '<')
      out += "&lt;";
    else if (c == '>')
      out += "&gt;";
    else
      out += c;
  }
  return out;
}

}  // namespace detail

/// Self-contained static page: metadata header, class table, and an inline
/// SVG Hasse diagram with one row per rank.
inline std::string emit_html(const AtlasPage& page) {
  const auto& lat = page.lattice;
  std::string out =
      "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n<title>" +
      detail::html_escape(page.name) +
      "</title>\n<style>\n"
      "body { font-family: sans-serif; margin: 2em; }\n"
      "table { border-collapse: collapse; }\n"
      "td, th { border: 1px solid #999; padding: 2px 8px; }\n"
      "svg { margin-top: 2em; }\n"
      "</style>\n</head>\n<body>\n";
  out += "<h1>" + detail::html_escape(page.name) + "</h1>\n";
  out += "<p>order " + lat.ambient.order().str() + ", degree " +
         std::to_string(lat.ambient.degree()) + ", family " +
         detail::html_escape(page.family) + ", " +
         std::to_string(lat.classes.size()) + " classes of subgroups</p>\n";

  out += "<table>\n<tr><th>id</th><th>structure</th><th>order</th>"
         "<th>length</th></tr>\n";
  for (const auto& c : lat.classes)
    out += "<tr class=\"cls\"><td>" + std::to_string(c.id) + "</td><td>" +
           detail::html_escape(c.name) + "</td><td>" + c.order.str() +
           "</td><td>" + c.class_length.str() + "</td></tr>\n";
  out += "</table>\n";

  // layered diagram: one row per rank, nodes evenly spaced
  size_t maxrow = 1;
  for (const auto& r : page.ranks) maxrow = std::max(maxrow, r.size());
  const size_t node_w = 110, gap = 30, row_h = 80;
  size_t width = maxrow * (node_w + gap) + gap;
  size_t height = page.ranks.size() * row_h + 40;
  std::vector<std::pair<size_t, size_t>> pos(lat.classes.size());
  for (size_t r = 0; r < page.ranks.size(); ++r) {
    const auto& row = page.ranks[r];
    size_t span = width / (row.size() + 1);
    for (size_t i = 0; i < row.size(); ++i)
      pos[row[i]] = {span * (i + 1), 40 + r * row_h};
  }
  out += "<svg width=\"" + std::to_string(width) + "\" height=\"" +
         std::to_string(height) + "\" xmlns=\"http://www.w3.org/2000/svg\">\n";
  for (const auto& e : lat.covers) {
    auto [x1, y1] = pos[e.a];
    auto [x2, y2] = pos[e.b];
    out += "<line x1=\"" + std::to_string(x1) + "\" y1=\"" +
           std::to_string(y1 + 10) + "\" x2=\"" + std::to_string(x2) +
           "\" y2=\"" + std::to_string(y2 - 10) +
           "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
    out += "<text x=\"" + std::to_string((x1 + x2) / 2) + "\" y=\"" +
           std::to_string((y1 + y2) / 2) +
           "\" font-size=\"9\" fill=\"#555\" text-anchor=\"middle\">" +
           e.n_ab.str() + "/" + e.n_ba.str() + "</text>\n";
  }
  for (const auto& c : lat.classes) {
    auto [x, y] = pos[c.id];
    out += "<text x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
           "\" font-size=\"11\" text-anchor=\"middle\">" +
           detail::html_escape(c.name) + " (" + c.order.str() + ", " +
           c.class_length.str() + ")</text>\n";
  }
  out += "</svg>\n</body>\n</html>\n";
  return out;
}

}  // namespace latlas
