#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "shd/parse.hpp"

namespace shd {

// Once-punctured torus diagram of a lens space: p intersection points, p
// square cells, beta advancing one cell per strand. Cells listed in
// `punctured` (0-based) become outer regions with sutures 0, 1, ... in list
// order; with a second puncture the diagram presents a knot complement
// instead of a closed manifold.
inline std::string make_lens(const std::string& name, int p,
                             const std::vector<int>& punctured) {
  if (p < 1) throw std::invalid_argument("lens parameter must be at least 1");
  const auto q = [](int j, int p_) { return "q" + std::to_string(j % p_ + 1); };
  ojson doc;
  doc["name"] = name;
  ojson pts = ojson::array();
  for (int j = 0; j < p; ++j) pts.push_back(q(j, p));
  doc["alpha"] = ojson::array({pts});
  doc["beta"] = ojson::array({pts});
  const auto arc = [](const std::string& curve, const std::string& from,
                      const std::string& to, int orient) {
    ojson s;
    s["curve"] = curve;
    s["from"] = from;
    s["to"] = to;
    s["orient"] = orient;
    return s;
  };
  ojson regions = ojson::array();
  for (int j = 0; j < p; ++j) {
    ojson region;
    region["id"] = "P" + std::to_string(j + 1);
    int suture = -1;
    for (std::size_t s = 0; s < punctured.size(); ++s)
      if (punctured[s] == j) suture = static_cast<int>(s);
    region["outer"] = suture >= 0;
    ojson boundary = ojson::array();
    boundary.push_back(arc("a1", q(j, p), q(j + 1, p), 1));
    boundary.push_back(arc("b1", q(j + 1, p), q(j + 2, p), 1));
    boundary.push_back(arc("a1", q(j + 1, p), q(j + 2, p), -1));
    boundary.push_back(arc("b1", q(j, p), q(j + 1, p), -1));
    if (suture >= 0) boundary.push_back(ojson{{"suture", suture}});
    region["boundary"] = std::move(boundary);
    regions.push_back(std::move(region));
  }
  doc["regions"] = std::move(regions);
  return doc.dump(2) + "\n";
}

namespace detail {

inline const char* kBallText = R"({
  "name": "ball",
  "alpha": [],
  "beta": [],
  "regions": [
    {"id": "R0", "outer": true, "boundary": [
      {"suture": 0}
    ]}
  ]
})";

inline const char* kS3Text = R"({
  "name": "s3",
  "alpha": [["q1"]],
  "beta": [["q1"]],
  "regions": [
    {"id": "R0", "outer": true, "boundary": [
      {"curve": "a1", "from": "q1", "to": "q1", "orient": 1},
      {"curve": "b1", "from": "q1", "to": "q1", "orient": 1},
      {"curve": "a1", "from": "q1", "to": "q1", "orient": -1},
      {"curve": "b1", "from": "q1", "to": "q1", "orient": -1},
      {"suture": 0}
    ]}
  ]
})";

inline const char* kRp3Text = R"({
  "name": "rp3",
  "alpha": [["q1", "q2"]],
  "beta": [["q1", "q2"]],
  "regions": [
    {"id": "R0", "outer": true, "boundary": [
      {"curve": "a1", "from": "q2", "to": "q1", "orient": 1},
      {"curve": "b1", "from": "q1", "to": "q2", "orient": 1},
      {"curve": "a1", "from": "q1", "to": "q2", "orient": -1},
      {"curve": "b1", "from": "q2", "to": "q1", "orient": -1},
      {"suture": 0}
    ]},
    {"id": "R1", "outer": false, "boundary": [
      {"curve": "a1", "from": "q1", "to": "q2", "orient": 1},
      {"curve": "b1", "from": "q2", "to": "q1", "orient": 1},
      {"curve": "a1", "from": "q2", "to": "q1", "orient": -1},
      {"curve": "b1", "from": "q1", "to": "q2", "orient": -1}
    ]}
  ]
})";

inline const char* kS1S2AdmissibleText = R"({
  "name": "s1s2-admissible",
  "alpha": [["q1", "q2"]],
  "beta": [["q1", "q2"]],
  "regions": [
    {"id": "B1", "outer": false, "boundary": [
      {"curve": "a1", "from": "q1", "to": "q2", "orient": 1},
      {"curve": "b1", "from": "q1", "to": "q2", "orient": -1}
    ]},
    {"id": "B2", "outer": false, "boundary": [
      {"curve": "b1", "from": "q2", "to": "q1", "orient": 1},
      {"curve": "a1", "from": "q2", "to": "q1", "orient": -1}
    ]},
    {"id": "R", "outer": true, "boundary": [
      {"curve": "b1", "from": "q1", "to": "q2", "orient": 1},
      {"curve": "a1", "from": "q2", "to": "q1", "orient": 1},
      {"curve": "a1", "from": "q1", "to": "q2", "orient": -1},
      {"curve": "b1", "from": "q2", "to": "q1", "orient": -1},
      {"suture": 0}
    ]}
  ]
})";

inline const char* kS1S2InadmissibleText = R"({
  "name": "s1s2-inadmissible",
  "alpha": [[]],
  "beta": [[]],
  "regions": [
    {"id": "Rint", "outer": false, "boundary": [
      {"curve": "a1", "closed": true, "orient": 1},
      {"curve": "b1", "closed": true, "orient": -1}
    ]},
    {"id": "Rout", "outer": true, "boundary": [
      {"curve": "b1", "closed": true, "orient": 1},
      {"curve": "a1", "closed": true, "orient": -1},
      {"suture": 0}
    ]}
  ]
})";

inline std::string normalize(const std::string& text) {
  return to_json(parse_raw(text)).dump(2) + "\n";
}

}  // namespace detail

// Bundled diagrams in display order. Texts are in canonical serialized form,
// so exported files round-trip bit-exactly.
inline const std::vector<std::pair<std::string, std::string>>& corpus() {
  static const std::vector<std::pair<std::string, std::string>> files = [] {
    std::vector<std::pair<std::string, std::string>> out;
    out.emplace_back("ball", detail::normalize(detail::kBallText));
    out.emplace_back("s3", detail::normalize(detail::kS3Text));
    out.emplace_back("rp3", detail::normalize(detail::kRp3Text));
    for (int p = 2; p <= 5; ++p)
      out.emplace_back("lens" + std::to_string(p),
                       make_lens("lens" + std::to_string(p), p, {p - 1}));
    out.emplace_back("s1s2-admissible", detail::normalize(detail::kS1S2AdmissibleText));
    out.emplace_back("s1s2-inadmissible", detail::normalize(detail::kS1S2InadmissibleText));
    out.emplace_back("knot-l51", make_lens("knot-l51", 5, {4, 1}));
    return out;
  }();
  return files;
}

inline std::vector<std::string> corpus_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : corpus()) names.push_back(name);
  return names;
}

inline const std::string* corpus_text(const std::string& name) {
  for (const auto& [n, text] : corpus())
    if (n == name) return &text;
  return nullptr;
}

}  // namespace shd
