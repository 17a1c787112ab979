#pragma once

#include <initializer_list>
#include <string>

#include <json.hpp>

#include "shd/diagram.hpp"
#include "shd/errors.hpp"

namespace shd {

using ojson = nlohmann::ordered_json;

namespace detail {

// Every key is checked: unknown keys are rejected so derived data ("sign",
// "corners") can never sneak in from a file.
inline void expect_keys(const ojson& o, std::initializer_list<const char*> keys,
                        const std::string& where) {
  for (auto it = o.begin(); it != o.end(); ++it) {
    bool known = false;
    for (const char* k : keys)
      if (it.key() == k) {
        known = true;
        break;
      }
    if (!known)
      throw SyntaxError("unexpected key '" + it.key() + "' in " + where);
  }
  for (const char* k : keys)
    if (!o.contains(k))
      throw SyntaxError("missing key '" + std::string(k) + "' in " + where);
}

inline std::string str_field(const ojson& o, const char* k,
                             const std::string& where) {
  const ojson& v = o.at(k);
  if (!v.is_string())
    throw SyntaxError("'" + std::string(k) + "' in " + where +
                      " must be a string");
  return v.get<std::string>();
}

inline bool bool_field(const ojson& o, const char* k, const std::string& where) {
  const ojson& v = o.at(k);
  if (!v.is_boolean())
    throw SyntaxError("'" + std::string(k) + "' in " + where +
                      " must be a boolean");
  return v.get<bool>();
}

inline long long int_field(const ojson& o, const char* k,
                           const std::string& where) {
  const ojson& v = o.at(k);
  if (!v.is_number_integer())
    throw SyntaxError("'" + std::string(k) + "' in " + where +
                      " must be an integer");
  return v.get<long long>();
}

inline std::vector<std::vector<std::string>> curve_lists(const ojson& v,
                                                         const char* k) {
  if (!v.is_array())
    throw SyntaxError("'" + std::string(k) + "' must be an array of arrays");
  std::vector<std::vector<std::string>> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const ojson& lst = v[i];
    if (!lst.is_array())
      throw SyntaxError("'" + std::string(k) + "' entry " + std::to_string(i) +
                        " must be an array of point ids");
    std::vector<std::string> pts;
    for (const ojson& p : lst) {
      if (!p.is_string())
        throw SyntaxError("'" + std::string(k) + "' entry " +
                          std::to_string(i) + " must contain strings");
      pts.push_back(p.get<std::string>());
    }
    out.push_back(std::move(pts));
  }
  return out;
}

inline RawSide parse_side(const ojson& s, const std::string& where) {
  if (!s.is_object()) throw SyntaxError(where + " must be an object");
  RawSide side;
  if (s.contains("suture")) {
    expect_keys(s, {"suture"}, where);
    const long long idx = int_field(s, "suture", where);
    if (idx < 0) throw SyntaxError("'suture' in " + where + " must be >= 0");
    side.kind = RawSide::Kind::Suture;
    side.suture = static_cast<int>(idx);
    return side;
  }
  const bool closed = s.contains("closed");
  if (closed) {
    expect_keys(s, {"curve", "closed", "orient"}, where);
    if (!s.at("closed").is_boolean() || !s.at("closed").get<bool>())
      throw SyntaxError("'closed' in " + where + " must be true");
    side.kind = RawSide::Kind::Closed;
  } else {
    expect_keys(s, {"curve", "from", "to", "orient"}, where);
    side.kind = RawSide::Kind::Arc;
    side.from = str_field(s, "from", where);
    side.to = str_field(s, "to", where);
  }
  side.curve = str_field(s, "curve", where);
  const long long orient = int_field(s, "orient", where);
  if (orient != 1 && orient != -1)
    throw SyntaxError("'orient' in " + where + " must be 1 or -1");
  side.orient = static_cast<int>(orient);
  return side;
}

}  // namespace detail

inline RawDiagram parse_raw(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(e.what());
  }
  if (!j.is_object()) throw SyntaxError("top level must be an object");
  detail::expect_keys(j, {"name", "alpha", "beta", "regions"}, "top-level object");
  RawDiagram d;
  d.name = detail::str_field(j, "name", "top-level object");
  d.alpha = detail::curve_lists(j.at("alpha"), "alpha");
  d.beta = detail::curve_lists(j.at("beta"), "beta");
  const ojson& regions = j.at("regions");
  if (!regions.is_array()) throw SyntaxError("'regions' must be an array");
  for (std::size_t ri = 0; ri < regions.size(); ++ri) {
    const ojson& r = regions[ri];
    const std::string rwhere = "region " + std::to_string(ri);
    if (!r.is_object()) throw SyntaxError(rwhere + " must be an object");
    detail::expect_keys(r, {"id", "outer", "boundary"}, rwhere);
    RawRegion reg;
    reg.id = detail::str_field(r, "id", rwhere);
    reg.outer = detail::bool_field(r, "outer", rwhere);
    const ojson& boundary = r.at("boundary");
    if (!boundary.is_array())
      throw SyntaxError("'boundary' in " + rwhere + " must be an array");
    for (std::size_t si = 0; si < boundary.size(); ++si)
      reg.sides.push_back(detail::parse_side(
          boundary[si],
          "side " + std::to_string(si) + " of region " + reg.id));
    d.regions.push_back(std::move(reg));
  }
  return d;
}

inline Diagram parse_diagram(const std::string& text) {
  return Diagram::link(parse_raw(text));
}

inline ojson to_json(const RawDiagram& d) {
  ojson j;
  j["name"] = d.name;
  auto lists = [](const std::vector<std::vector<std::string>>& fam) {
    ojson arr = ojson::array();
    for (const auto& lst : fam) {
      ojson cur = ojson::array();
      for (const auto& p : lst) cur.push_back(p);
      arr.push_back(std::move(cur));
    }
    return arr;
  };
  j["alpha"] = lists(d.alpha);
  j["beta"] = lists(d.beta);
  ojson regions = ojson::array();
  for (const RawRegion& r : d.regions) {
    ojson jr;
    jr["id"] = r.id;
    jr["outer"] = r.outer;
    ojson boundary = ojson::array();
    for (const RawSide& s : r.sides) {
      ojson js;
      switch (s.kind) {
        case RawSide::Kind::Arc:
          js["curve"] = s.curve;
          js["from"] = s.from;
          js["to"] = s.to;
          js["orient"] = s.orient;
          break;
        case RawSide::Kind::Closed:
          js["curve"] = s.curve;
          js["closed"] = true;
          js["orient"] = s.orient;
          break;
        case RawSide::Kind::Suture:
          js["suture"] = s.suture;
          break;
      }
      boundary.push_back(std::move(js));
    }
    jr["boundary"] = std::move(boundary);
    regions.push_back(std::move(jr));
  }
  j["regions"] = std::move(regions);
  return j;
}

inline std::string serialize(const Diagram& d) { return to_json(d.raw).dump(2) + "\n"; }

}  // namespace shd
