#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "shd/shd.hpp"

namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A diagram argument names a file on disk, a file under SHD_CORPUS_DIR, or a
// bundled corpus entry ("rp3", "rp3.shd", "corpus/rp3.shd" all work).
std::string load_text(const std::string& arg) {
  std::error_code ec;
  if (fs::is_regular_file(arg, ec)) return slurp(arg);
  std::string base = fs::path(arg).filename().string();
  std::string name = base;
  if (name.size() > 4 && name.ends_with(".shd")) name.resize(name.size() - 4);
  if (const char* dir = std::getenv("SHD_CORPUS_DIR")) {
    for (const fs::path cand : {fs::path(dir) / base, fs::path(dir) / (name + ".shd")})
      if (fs::is_regular_file(cand, ec)) return slurp(cand);
  }
  if (const std::string* text = shd::corpus_text(name)) return *text;
  throw std::runtime_error("cannot resolve '" + arg +
                           "': no such file and no bundled corpus entry");
}

shd::Diagram load_diagram(const std::string& arg) {
  return shd::parse_diagram(load_text(arg));
}

void emit(const shd::Report& rep, bool json) {
  std::cout << (json ? shd::render_json(rep) : shd::render_text(rep));
}

int cmd_validate(const std::string& file, bool json) {
  const shd::Diagram d = load_diagram(file);
  const shd::ValidationReport v = shd::validate(d);
  shd::Report rep;
  rep.diagram_name = d.name;
  rep.add("validation", shd::validation_section(v));
  emit(rep, json);
  return v.ok() ? 0 : 2;
}

int cmd_lattice(const std::string& file, bool json) {
  const shd::Diagram d = load_diagram(file);
  shd::Report rep;
  rep.diagram_name = d.name;
  rep.add("lattice", shd::lattice_section(shd::periodic_domain_basis(d)));
  emit(rep, json);
  return 0;
}

int cmd_admissible(const std::string& file, bool json) {
  const shd::Diagram d = load_diagram(file);
  shd::Report rep;
  rep.diagram_name = d.name;
  rep.add("admissibility", shd::admissibility_section(shd::is_admissible(d)));
  emit(rep, json);
  return 0;
}

int cmd_areas(const std::string& file, bool json) {
  const shd::Diagram d = load_diagram(file);
  const shd::AreaCertificate cert = shd::area_certificate(d);  // throws when inadmissible
  shd::AdmissibilityVerdict v;
  v.admissible = true;
  v.certificate = cert;
  shd::Report rep;
  rep.diagram_name = d.name;
  rep.add("admissibility", shd::admissibility_section(v));
  emit(rep, json);
  return 0;
}

int cmd_generators(const std::string& file, bool json) {
  const shd::Diagram d = load_diagram(file);
  shd::Report rep;
  rep.diagram_name = d.name;
  rep.add("generators", shd::generators_section(d, shd::enumerate_generators(d)));
  emit(rep, json);
  return 0;
}

int cmd_bound(const std::string& file, bool json) {
  const shd::Diagram d = load_diagram(file);
  const shd::BoundReport b = shd::shi_upper_bound(d);
  shd::Report rep;
  rep.diagram_name = d.name;
  rep.add("tangle", shd::tangle_section(b));
  emit(rep, json);
  if (!b.admissible) {
    std::cerr << "error: diagram '" << d.name
              << "' is not admissible; no bound is asserted (see witness)\n";
    return 1;
  }
  return 0;
}

int cmd_sfh(const std::string& file, bool json) {
  const shd::Diagram d = load_diagram(file);
  const shd::FloerComplex cx = shd::differential(d);
  shd::Report rep;
  rep.diagram_name = d.name;
  rep.add("floer", shd::floer_section(d, cx));
  emit(rep, json);
  return 0;
}

int cmd_classify(const std::string& file, bool json) {
  const shd::Diagram d = load_diagram(file);
  shd::Report rep;
  rep.diagram_name = d.name;
  rep.add("classification", shd::classification_section(shd::classify(d)));
  emit(rep, json);
  return 0;
}

int cmd_trajectory(const std::vector<std::string>& files, bool json) {
  std::vector<shd::Diagram> diags;
  std::string joined;
  for (const std::string& f : files) {
    diags.push_back(load_diagram(f));
    if (!joined.empty()) joined += ",";
    joined += diags.back().name;
  }
  shd::Report rep;
  rep.diagram_name = joined;
  rep.add("trajectory", shd::trajectory_section(shd::trajectory_min(diags)));
  emit(rep, json);
  return 0;
}

int cmd_corpus_list(bool json) {
  if (json) {
    shd::ojson out;
    out["tool_version"] = shd::kVersion;
    out["corpus"] = shd::corpus_names();
    std::cout << out.dump(2) << "\n";
  } else {
    for (const std::string& name : shd::corpus_names()) std::cout << name << "\n";
  }
  return 0;
}

int cmd_corpus_export(const std::string& dir) {
  fs::create_directories(dir);
  for (const auto& [name, text] : shd::corpus()) {
    const fs::path path = fs::path(dir) / (name + ".shd");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << text;
    std::cout << "wrote " << path.string() << "\n";
  }
  return 0;
}

int cmd_selftest(bool json) {
  const std::vector<shd::SuiteResult> results = shd::run_selftest();
  if (json) {
    shd::ojson out;
    out["tool_version"] = shd::kVersion;
    shd::ojson suites = shd::ojson::array();
    for (const auto& r : results) {
      shd::ojson entry;
      entry["name"] = r.name;
      entry["ok"] = r.ok;
      if (!r.detail.empty()) entry["detail"] = r.detail;
      suites.push_back(std::move(entry));
    }
    out["suites"] = std::move(suites);
    out["ok"] = shd::selftest_ok(results);
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << (r.ok ? "ok   " : "FAIL ") << r.name;
      if (!r.detail.empty()) std::cout << ": " << r.detail;
      std::cout << "\n";
    }
  }
  return shd::selftest_ok(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorial engine for balanced sutured Heegaard diagrams"};
  app.require_subcommand(1);
  bool json = false;
  std::string file;
  std::vector<std::string> files;
  std::string export_dir = "corpus";

  auto add_file_cmd = [&](const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("file", file, "diagram file or bundled corpus name")->required();
    sub->add_flag("--json", json, "emit the report as JSON");
    return sub;
  };

  CLI::App* c_validate = add_file_cmd("validate", "check the structural invariants");
  CLI::App* c_generators = add_file_cmd("generators", "enumerate the generator set");
  CLI::App* c_lattice = add_file_cmd("lattice", "basis of the periodic domain lattice");
  CLI::App* c_admissible = add_file_cmd("admissible", "admissibility verdict with certificate or witness");
  CLI::App* c_areas = add_file_cmd("areas", "positive integer area certificate");
  CLI::App* c_bound = add_file_cmd("bound", "instanton dimension bound via the full tangle");
  CLI::App* c_sfh = add_file_cmd("sfh", "Floer homology rank over F2");
  CLI::App* c_classify = add_file_cmd("classify", "strong diagram and L-space classification");

  CLI::App* c_traj = app.add_subcommand("trajectory", "minimum generator count over admissible diagrams");
  c_traj->add_option("files", files, "diagram files or bundled corpus names")->required();
  c_traj->add_flag("--json", json, "emit the report as JSON");

  CLI::App* c_corpus = app.add_subcommand("corpus", "bundled example diagrams");
  c_corpus->require_subcommand(1);
  CLI::App* c_list = c_corpus->add_subcommand("list", "names of the bundled diagrams");
  c_list->add_flag("--json", json, "emit the list as JSON");
  CLI::App* c_export = c_corpus->add_subcommand("export", "write the bundled diagrams to a directory");
  c_export->add_option("dir", export_dir, "target directory (default corpus)");

  CLI::App* c_selftest = app.add_subcommand("selftest", "run the invariant suites");
  c_selftest->add_flag("--json", json, "emit the results as JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_validate->parsed()) return cmd_validate(file, json);
    if (c_generators->parsed()) return cmd_generators(file, json);
    if (c_lattice->parsed()) return cmd_lattice(file, json);
    if (c_admissible->parsed()) return cmd_admissible(file, json);
    if (c_areas->parsed()) return cmd_areas(file, json);
    if (c_bound->parsed()) return cmd_bound(file, json);
    if (c_sfh->parsed()) return cmd_sfh(file, json);
    if (c_classify->parsed()) return cmd_classify(file, json);
    if (c_traj->parsed()) return cmd_trajectory(files, json);
    if (c_corpus->parsed()) {
      if (c_list->parsed()) return cmd_corpus_list(json);
      if (c_export->parsed()) return cmd_corpus_export(export_dir);
    }
    if (c_selftest->parsed()) return cmd_selftest(json);
  } catch (const shd::NotAdmissible& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& [id, mult] : e.witness)
      std::cerr << "  witness " << id << ": " << mult.str() << "\n";
    return 1;
  } catch (const shd::NotNice& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
