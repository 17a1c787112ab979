#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "shd/admissibility.hpp"
#include "shd/classify.hpp"
#include "shd/exact.hpp"
#include "shd/floer.hpp"
#include "shd/generators.hpp"
#include "shd/lattice.hpp"
#include "shd/parse.hpp"
#include "shd/tangle.hpp"
#include "shd/validate.hpp"
#include "shd/version.hpp"

namespace shd {

// Exact integers are emitted as JSON numbers while they fit, as decimal
// strings beyond that; rationals always as "p/q" strings. Same value, same
// bytes, on every platform.
inline ojson int_json(const Int& v) {
  static const Int lo = (std::numeric_limits<std::int64_t>::min)();
  static const Int hi = (std::numeric_limits<std::int64_t>::max)();
  if (v >= lo && v <= hi) return ojson(static_cast<std::int64_t>(v));
  return ojson(v.str());
}

inline ojson rat_json(const Rat& v) { return ojson(rat_to_string(v)); }

inline ojson domain_json(const DomainVector& dom) {
  ojson out = ojson::object();
  for (const auto& [id, mult] : dom) out[id] = int_json(mult);
  return out;
}

struct Report {
  std::string tool_version = kVersion;
  std::string diagram_name;
  std::vector<std::pair<std::string, ojson>> sections;

  void add(std::string name, ojson payload) {
    sections.emplace_back(std::move(name), std::move(payload));
  }

  ojson to_json() const {
    ojson out;
    out["tool_version"] = tool_version;
    out["diagram_name"] = diagram_name;
    ojson secs = ojson::object();
    for (const auto& [name, payload] : sections) secs[name] = payload;
    out["sections"] = std::move(secs);
    return out;
  }
};

namespace detail {

inline std::string scalar_text(const ojson& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_null()) return "none";
  return v.dump();
}

inline void render_value(const ojson& v, const std::string& indent, std::string& out);

inline void render_object(const ojson& v, const std::string& indent, std::string& out) {
  for (auto it = v.begin(); it != v.end(); ++it) {
    out += indent + it.key() + ":";
    if (it->is_object() || it->is_array()) {
      if (it->empty()) {
        out += it->is_object() ? " {}\n" : " []\n";
      } else {
        out += "\n";
        render_value(*it, indent + "  ", out);
      }
    } else {
      out += " " + scalar_text(*it) + "\n";
    }
  }
}

inline void render_value(const ojson& v, const std::string& indent, std::string& out) {
  if (v.is_object()) {
    render_object(v, indent, out);
    return;
  }
  if (v.is_array()) {
    bool scalars = true;
    for (const auto& e : v)
      if (e.is_object() || e.is_array()) scalars = false;
    if (scalars) {
      for (const auto& e : v) out += indent + "- " + scalar_text(e) + "\n";
    } else {
      for (const auto& e : v) {
        out += indent + "-\n";
        render_value(e, indent + "  ", out);
      }
    }
    return;
  }
  out += indent + scalar_text(v) + "\n";
}

}  // namespace detail

inline std::string render_text(const Report& r) {
  std::string out;
  out += "diagram: " + r.diagram_name + "\n";
  out += "tool:    " + r.tool_version + "\n";
  for (const auto& [name, payload] : r.sections) {
    out += "\n[" + name + "]\n";
    detail::render_value(payload, "", out);
  }
  return out;
}

inline std::string render_json(const Report& r) { return r.to_json().dump(2) + "\n"; }

// Section builders, one per pipeline stage.

inline ojson validation_section(const ValidationReport& rep) {
  ojson out;
  out["ok"] = rep.ok();
  out["violations"] = rep.violations;
  return out;
}

inline ojson lattice_section(const PeriodicLattice& lat) {
  ojson out;
  out["rank"] = static_cast<std::int64_t>(lat.rank());
  out["interior_regions"] = lat.region_ids;
  ojson basis = ojson::array();
  for (const DomainVector& dom : lat.basis) basis.push_back(domain_json(dom));
  out["basis"] = std::move(basis);
  return out;
}

inline ojson admissibility_section(const AdmissibilityVerdict& v) {
  ojson out;
  out["admissible"] = v.admissible;
  if (v.admissible)
    out["certificate"] = domain_json(v.certificate.areas);
  else
    out["witness"] = domain_json(v.witness);
  return out;
}

inline ojson generators_section(const Diagram& d, const std::vector<Generator>& gens) {
  ojson out;
  out["count"] = static_cast<std::int64_t>(gens.size());
  ojson list = ojson::array();
  for (const Generator& g : gens) list.push_back(g.names(d));
  out["generators"] = std::move(list);
  return out;
}

inline ojson tangle_section(const BoundReport& rep) {
  ojson out;
  out["admissible"] = rep.admissible;
  if (!rep.admissible) {
    out["witness"] = domain_json(rep.witness);
    return out;
  }
  out["areas"] = domain_json(rep.certificate.areas);
  out["strands_per_region"] = domain_json(rep.tangle->points_per_region);
  out["total_strands"] = int_json(rep.tangle->total_strands);
  out["sign_assignments"] = int_json(rep.sign_assignments);
  out["bound"] = int_json(*rep.bound);
  return out;
}

inline ojson floer_section(const Diagram& d, const FloerComplex& cx) {
  ojson out;
  out["generators"] = static_cast<std::int64_t>(cx.generators.size());
  out["differential_entries"] = differential_entries(d, cx);
  const Int rank = Int(cx.generators.size()) - 2 * Int(rank_f2(cx.differential));
  out["rank"] = int_json(rank);
  ojson domains = ojson::array();
  for (const DomainAudit& a : cx.domains) {
    ojson entry;
    entry["from"] = generator_label(d, cx.generators[static_cast<std::size_t>(a.from)]);
    entry["to"] = generator_label(d, cx.generators[static_cast<std::size_t>(a.to)]);
    entry["domain"] = domain_json(a.domain);
    entry["e"] = rat_json(a.e);
    entry["n_x"] = rat_json(a.n_x);
    entry["n_y"] = rat_json(a.n_y);
    entry["mu"] = rat_json(a.mu);
    domains.push_back(std::move(entry));
  }
  out["domains"] = std::move(domains);
  return out;
}

inline ojson classification_section(const Classification& c) {
  ojson out;
  out["admissible"] = c.admissible;
  out["nice"] = c.nice;
  if (c.strong_diagram)
    out["strong_diagram"] = *c.strong_diagram;
  else
    out["strong_diagram"] = "unknown";
  if (c.h1)
    out["h1"] = int_json(*c.h1);
  else
    out["h1"] = "infinite";
  out["h1_applicable"] = c.h1_applicable;
  if (c.generator_count) out["generator_count"] = int_json(*c.generator_count);
  if (c.sfh) out["sfh_rank"] = int_json(*c.sfh);
  out["strong_lspace_witness"] = c.strong_lspace_witness;
  if (c.implied_instanton_bound)
    out["implied_instanton_bound"] = int_json(*c.implied_instanton_bound);
  if (!c.admissible) out["witness"] = domain_json(c.witness);
  out["statements"] = c.statements;
  return out;
}

inline ojson trajectory_section(const TrajectoryReport& rep) {
  ojson out;
  if (rep.minimum)
    out["minimum"] = int_json(*rep.minimum);
  else
    out["minimum"] = nullptr;
  if (!rep.attained_by.empty()) out["attained_by"] = rep.attained_by;
  ojson per = ojson::array();
  for (const auto& e : rep.per_diagram) {
    ojson entry;
    entry["name"] = e.name;
    entry["admissible"] = e.admissible;
    if (e.count)
      entry["count"] = int_json(*e.count);
    else
      entry["skipped"] = true;
    per.push_back(std::move(entry));
  }
  out["per_diagram"] = std::move(per);
  return out;
}

}  // namespace shd
