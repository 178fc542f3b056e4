#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "latlas/errors.hpp"
#include "latlas/group.hpp"
#include "latlas/lattice.hpp"
#include "latlas/topdown.hpp"

namespace latlas {

using json = nlohmann::ordered_json;

namespace detail {

constexpr std::uint64_t kExactDouble = (std::uint64_t{1} << 53);

/// Integers render as JSON numbers while exactly representable in a double,
/// as decimal strings beyond that.
inline json big_to_json(const BigInt& x) {
  if (x >= 0 && x <= BigInt(kExactDouble))
    return json(x.convert_to<std::uint64_t>());
  return json(x.str());
}

inline BigInt big_from_json(const json& j, const char* what) {
  try {
    if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) return BigInt(j.get<std::string>());
  } catch (const std::exception&) {
  }
  throw parse_error(std::string("expected an integer for ") + what);
}

inline json gens_to_json(const std::vector<Perm>& gens) {
  json a = json::array();
  for (const auto& g : gens) a.push_back(g.to_cycles());
  return a;
}

inline std::vector<Perm> gens_from_json(const json& j, Point degree) {
  if (!j.is_array()) throw parse_error("expected an array of generators");
  std::vector<Perm> out;
  for (const auto& s : j) {
    if (!s.is_string()) throw parse_error("expected a cycle-notation string");
    out.push_back(Perm::parse_cycles(s.get<std::string>(), degree));
  }
  return out;
}

inline const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    throw parse_error(std::string("missing field \"") + key + "\"");
  return *it;
}

inline json group_to_json(const PermGroup& g) {
  json out;
  out["degree"] = g.degree();
  out["order"] = big_to_json(g.order());
  out["generators"] = gens_to_json(g.generators());
  return out;
}

inline PermGroup group_from_json(const json& j) {
  if (!j.is_object()) throw parse_error("expected a group object");
  Point degree = field(j, "degree").get<Point>();
  PermGroup g(degree, gens_from_json(field(j, "generators"), degree));
  if (g.order() != big_from_json(field(j, "order"), "order"))
    throw parse_error("group order does not match its generators");
  return g;
}

}  // namespace detail

/// Parses the group text format: first meaningful line `degree n`, then one
/// generator per line in disjoint-cycle notation ("()" = identity).  Blank
/// lines and lines starting with '#' are ignored.  `source` names the input
/// in diagnostics.
inline PermGroup parse_group_text(const std::string& text,
                                  const std::string& source = "input") {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_degree = false;
  Point degree = 0;
  std::vector<Perm> gens;
  while (std::getline(in, line)) {
    ++lineno;
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    size_t e = line.find_last_not_of(" \t\r");
    std::string body = line.substr(b, e - b + 1);
    if (!have_degree) {
      std::istringstream head(body);
      std::string word;
      std::uint64_t n = 0;
      if (!(head >> word >> n) || word != "degree" || !(head >> std::ws).eof())
        throw parse_error(source + ": expected `degree n` on the first line",
                          lineno);
      if (n == 0 || n > 1'000'000)
        throw parse_error(source + ": unreasonable degree", lineno);
      degree = static_cast<Point>(n);
      have_degree = true;
      continue;
    }
    try {
      gens.push_back(Perm::parse_cycles(body, degree));
    } catch (const parse_error& e) {
      throw parse_error(source + ": " + e.what(), lineno);
    }
  }
  if (!have_degree)
    throw parse_error(source + ": empty input, expected `degree n`");
  return PermGroup(degree, gens);
}

inline PermGroup parse_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open group file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_text(buf.str(), path);
}

/// Lattice document: `{"group": {...}, "classes": [...], "covers": [...]}`.
/// Class names default to empty strings until the naming layer fills them.
inline json lattice_to_json(const WeightedLattice& lat) {
  json out;
  out["group"] = detail::group_to_json(lat.ambient);
  json classes = json::array();
  for (const auto& c : lat.classes) {
    json rec;
    rec["id"] = c.id;
    rec["order"] = detail::big_to_json(c.order);
    rec["length"] = detail::big_to_json(c.class_length);
    rec["name"] = c.name;
    rec["generators"] = detail::gens_to_json(c.representative.generators());
    classes.push_back(std::move(rec));
  }
  out["classes"] = std::move(classes);
  json covers = json::array();
  for (const auto& e : lat.covers) {
    json rec;
    rec["a"] = e.a;
    rec["b"] = e.b;
    rec["n_ab"] = detail::big_to_json(e.n_ab);
    rec["n_ba"] = detail::big_to_json(e.n_ba);
    covers.push_back(std::move(rec));
  }
  out["covers"] = std::move(covers);
  return out;
}

inline WeightedLattice lattice_from_json(const json& doc) {
  WeightedLattice lat;
  lat.ambient = detail::group_from_json(detail::field(doc, "group"));
  const json& classes = detail::field(doc, "classes");
  if (!classes.is_array()) throw parse_error("\"classes\" must be an array");
  for (const auto& rec : classes) {
    ClassNode node;
    node.id = detail::field(rec, "id").get<size_t>();
    if (node.id != lat.classes.size())
      throw parse_error("class ids must be consecutive from 0");
    node.order = detail::big_from_json(detail::field(rec, "order"), "order");
    node.class_length =
        detail::big_from_json(detail::field(rec, "length"), "length");
    node.name = detail::field(rec, "name").get<std::string>();
    node.representative = PermGroup(
        lat.ambient.degree(),
        detail::gens_from_json(detail::field(rec, "generators"),
                               lat.ambient.degree()));
    if (node.representative.order() != node.order)
      throw parse_error("class order does not match its generators");
    lat.classes.push_back(std::move(node));
  }
  const json& covers = detail::field(doc, "covers");
  if (!covers.is_array()) throw parse_error("\"covers\" must be an array");
  for (const auto& rec : covers) {
    CoverEdge e;
    e.a = detail::field(rec, "a").get<size_t>();
    e.b = detail::field(rec, "b").get<size_t>();
    if (e.a >= lat.classes.size() || e.b >= lat.classes.size())
      throw parse_error("cover edge endpoint out of range");
    e.n_ab = detail::big_from_json(detail::field(rec, "n_ab"), "n_ab");
    e.n_ba = detail::big_from_json(detail::field(rec, "n_ba"), "n_ba");
    lat.covers.push_back(std::move(e));
  }
  return lat;
}

/// Checkpoint document: the lattice schema over the classes discovered so
/// far, plus `"frontier"` (generator lists of unexpanded representatives, in
/// processing order) and a `"fingerprint"` of the ambient group.
inline json checkpoint_to_json(const PermGroup& ambient,
                               const TopDownEngine::Snapshot& snap) {
  json out;
  json fp;
  fp["degree"] = ambient.degree();
  fp["order"] = detail::big_to_json(ambient.order());
  fp["generators"] = detail::gens_to_json(ambient.generators());
  out["fingerprint"] = std::move(fp);
  out["group"] = detail::group_to_json(ambient);

  json classes = json::array();
  for (size_t i = 0; i < snap.class_gens.size(); ++i) {
    json rec;
    rec["id"] = i;
    rec["order"] = detail::big_to_json(snap.orders[i]);
    rec["length"] = detail::big_to_json(snap.lengths[i]);
    rec["name"] = "";
    rec["generators"] = detail::gens_to_json(snap.class_gens[i]);
    classes.push_back(std::move(rec));
  }
  out["classes"] = std::move(classes);

  json covers = json::array();
  for (const auto& [a, b, n_ab] : snap.edges) {
    json rec;
    rec["a"] = a;
    rec["b"] = b;
    rec["n_ab"] = detail::big_to_json(n_ab);
    BigInt lhs = snap.lengths[a] * n_ab;
    if (lhs % snap.lengths[b] != 0)
      throw error("internal: weight identity violated in checkpoint");
    rec["n_ba"] = detail::big_to_json(lhs / snap.lengths[b]);
    covers.push_back(std::move(rec));
  }
  out["covers"] = std::move(covers);

  json frontier = json::array();
  for (size_t id : snap.pending) {
    if (id >= snap.class_gens.size())
      throw error("internal: pending id out of range");
    frontier.push_back(detail::gens_to_json(snap.class_gens[id]));
  }
  out["frontier"] = std::move(frontier);
  return out;
}

/// Validates the fingerprint against `ambient` (degree, order, and sifting
/// every recorded generator) and rebuilds a resumable snapshot.
inline TopDownEngine::Snapshot snapshot_from_json(const json& doc,
                                                  const PermGroup& ambient) {
  const json& fp = detail::field(doc, "fingerprint");
  if (detail::field(fp, "degree").get<Point>() != ambient.degree())
    throw checkpoint_mismatch("checkpoint degree differs from the group");
  if (detail::big_from_json(detail::field(fp, "order"), "order") !=
      ambient.order())
    throw checkpoint_mismatch("checkpoint order differs from the group");
  for (const Perm& g :
       detail::gens_from_json(detail::field(fp, "generators"), ambient.degree()))
    if (!ambient.contains(g))
      throw checkpoint_mismatch(
          "checkpoint generators do not lie in the group");

  TopDownEngine::Snapshot snap;
  const json& classes = detail::field(doc, "classes");
  if (!classes.is_array()) throw parse_error("\"classes\" must be an array");
  std::map<json, size_t> by_gens;
  for (const auto& rec : classes) {
    if (detail::field(rec, "id").get<size_t>() != snap.class_gens.size())
      throw parse_error("class ids must be consecutive from 0");
    const json& gens = detail::field(rec, "generators");
    by_gens[gens] = snap.class_gens.size();
    snap.class_gens.push_back(
        detail::gens_from_json(gens, ambient.degree()));
    snap.orders.push_back(
        detail::big_from_json(detail::field(rec, "order"), "order"));
    snap.lengths.push_back(
        detail::big_from_json(detail::field(rec, "length"), "length"));
    snap.expanded.push_back(true);  // frontier entries flip this below
  }
  for (const json& gens : detail::field(doc, "frontier")) {
    auto it = by_gens.find(gens);
    if (it == by_gens.end())
      throw parse_error("frontier entry is not a recorded class");
    snap.expanded[it->second] = false;
    snap.pending.push_back(it->second);
  }
  for (const auto& rec : detail::field(doc, "covers")) {
    size_t a = detail::field(rec, "a").get<size_t>();
    size_t b = detail::field(rec, "b").get<size_t>();
    if (a >= snap.class_gens.size() || b >= snap.class_gens.size())
      throw parse_error("cover edge endpoint out of range");
    snap.edges.push_back(
        {a, b, detail::big_from_json(detail::field(rec, "n_ab"), "n_ab")});
  }
  return snap;
}

}  // namespace latlas
