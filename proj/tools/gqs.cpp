#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gqs/checks.hpp"
#include "gqs/classification.hpp"
#include "gqs/closed_forms.hpp"

namespace {

using nlohmann::ordered_json;
using namespace gqs;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string family_positional;
  std::string family;
  int m = -1;
  int n = -1;
  bool extended = true;
  bool nondistinguished = false;
  int max_delete = 3;
  std::string format = "text";
  std::string out;
  int jobs = default_jobs();
  std::uint64_t seed = 1;
  std::string case_id;
  int position = 0;
  int system = 0;
  std::string deleted;
  int grading = -1;
  bool table2 = false;
  int max_rank = 2;
};

Family family_of(const Config& c) {
  std::string tag = !c.family.empty() ? c.family : c.family_positional;
  if (tag.empty()) throw UsageError("a family is required (A, B, B0, C or D)");
  Family f;
  try {
    f.tag = parse_family_tag(tag);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  switch (f.tag) {
    case FamilyTag::A: f.m = std::max(c.m, 0); f.n = std::max(c.n, 0); break;
    case FamilyTag::B: case FamilyTag::D: f.m = c.m; f.n = c.n; break;
    case FamilyTag::B0: case FamilyTag::C: f.m = 0; f.n = c.n; break;
  }
  try {
    f.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return f;
}

void emit(const Config& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + c.out);
  f << text;
}

ordered_json root_json(const Root& r) { return {{"eps", r.eps}, {"delta", r.delta}, {"name", r.str()}}; }

int cmd_build(const Config& c) {
  const Family f = family_of(c);
  const AlgebraModel model = build(f);
  if (c.format == "json") {
    ordered_json j;
    j["schema_version"] = 1;
    j["family"] = f.name();
    j["matrix_size"] = model.matrix_size();
    j["dimension"] = model.dimension();
    j["cartan_dimension"] = model.cartan_dim();
    ordered_json roots = ordered_json::array();
    for (int i = model.cartan_dim(); i < model.dimension(); ++i) {
      ordered_json r = root_json(model.basis_root(i));
      r["parity"] = model.basis_parity(i);
      r["omega"] = {{"index", model.omega(i).index}, {"scale", model.omega(i).scale.str()}};
      roots.push_back(std::move(r));
    }
    j["roots"] = std::move(roots);
    emit(c, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << f.name() << ": matrix size " << model.matrix_size() << ", dimension " << model.dimension() << " ("
        << model.cartan_dim() << " Cartan + " << model.root_vectors().size() << " root vectors)\n";
    for (int i = model.cartan_dim(); i < model.dimension(); ++i)
      out << "  " << model.basis_root(i).str() << (model.basis_parity(i) ? "  odd" : "  even") << "\n";
    emit(c, out.str());
  }
  return kExitOk;
}

std::vector<SimpleSystem> systems_for(const Config& c, const Family& f) {
  return c.nondistinguished ? enumerate_simple_systems(f) : std::vector{distinguished_system(f)};
}

int cmd_diagrams(const Config& c) {
  const Family f = family_of(c);
  const auto systems = systems_for(c, f);
  ordered_json list = ordered_json::array();
  std::ostringstream out;
  for (std::size_t s = 0; s < systems.size(); ++s) {
    for (bool ext : {false, true}) {
      if (ext && !c.extended) continue;
      const Diagram d = diagram_of(systems[s], ext);
      ordered_json roots = ordered_json::array();
      for (const auto& node : d.nodes) roots.push_back({{"label", node.label}, {"root", node.root.str()}, {"kind", to_string(node.kind)}});
      list.push_back({{"system", s}, {"extended", ext}, {"nodes", std::move(roots)}, {"canonical", canonical_form(d)}});
      out << "system " << s << (ext ? " (extended)" : "") << "\n" << render_ascii(d) << "\n";
    }
  }
  if (c.format == "json") {
    ordered_json j = {{"schema_version", 1}, {"family", f.name()}, {"diagrams", std::move(list)}};
    emit(c, j.dump(2) + "\n");
  } else {
    emit(c, out.str());
  }
  return kExitOk;
}

EnumerationOptions enumeration_options(const Config& c) {
  if (c.max_delete < 1 || c.max_delete > 3) throw UsageError("--max-delete must be 1, 2 or 3");
  if (c.jobs < 1) throw UsageError("--jobs must be positive");
  EnumerationOptions o;
  o.include_nondistinguished = c.nondistinguished;
  o.extended = c.extended;
  o.max_delete = c.max_delete;
  o.jobs = c.jobs;
  return o;
}

int cmd_classify(const Config& c) {
  const Family f = family_of(c);
  const Classification result = enumerate_all(f, enumeration_options(c));
  emit(c, c.format == "json" ? classification_json(result) : classification_text(result));
  return result.all_valid() ? kExitOk : kExitFail;
}

std::set<int> parse_labels(const std::string& text) {
  std::set<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.insert(v);
    } catch (const std::exception&) {
      throw UsageError("bad node label '" + item + "' in --deleted");
    }
  }
  return out;
}

struct Selected {
  std::string description;
  CaoSet caos;
};

Selected select_caos(const Config& c) {
  if (!c.case_id.empty()) {
    const auto& ids = closed_form_ids();
    if (std::find(ids.begin(), ids.end(), c.case_id) == ids.end()) {
      std::string list;
      for (const auto& id : ids) list += " " + id;
      throw UsageError("unknown case '" + c.case_id + "'; known cases:" + list);
    }
    try {
      ClosedForm cf = build_closed_form(c.case_id, std::max(c.m, 0), std::max(c.n, 0), std::max(c.position, 1));
      return {cf.id + " in " + cf.family.name(), cf.caos};
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (c.deleted.empty()) throw UsageError("select a case with --case, or with --deleted [--system] [--extended] [--grading]");
  const Family f = family_of(c);
  const AlgebraModel model = build(f);
  const auto systems = c.system == 0 ? std::vector{distinguished_system(f)} : enumerate_simple_systems(f);
  if (c.system < 0 || c.system >= static_cast<int>(systems.size()))
    throw UsageError("--system must be in 0.." + std::to_string(systems.size() - 1));
  const Diagram d = diagram_of(systems[static_cast<std::size_t>(c.system)], c.extended);
  std::set<int> deleted = parse_labels(c.deleted);
  for (int label : deleted) {
    const auto labels = d.labels();
    if (std::find(labels.begin(), labels.end(), label) == labels.end())
      throw UsageError("node " + std::to_string(label) + " is not in the diagram");
  }
  DeletionAnalysis a = analyze_deletion(model, d, deleted);
  std::ostringstream where;
  where << f.name() << " system " << c.system << (c.extended ? " extended" : "") << " delete {" << c.deleted << "}";
  if (a.gradings.empty()) throw UsageError(where.str() + " yields no grading");
  int pick = c.grading;
  if (pick < 0 && a.gradings.size() == 1) pick = 0;
  if (pick < 0 || pick >= static_cast<int>(a.gradings.size())) {
    std::ostringstream msg;
    msg << where.str() << " has " << a.gradings.size() << " gradings; choose one with --grading:";
    for (std::size_t i = 0; i < a.gradings.size(); ++i)
      msg << "\n  " << i << ": G0 = " << a.gradings[i].g0.name.str() << ", l = " << a.gradings[i].length
          << ", N = " << a.gradings[i].N();
    throw UsageError(msg.str());
  }
  const Grading& g = a.gradings[static_cast<std::size_t>(pick)];
  where << " grading " << pick;
  return {where.str(), cao_set(model, g)};
}

int cmd_relations(const Config& c) {
  const Selected s = select_caos(c);
  const RelationSet rel = generate_relations(s.caos);
  if (c.format == "latex") {
    emit(c, "% " + s.description + "\n" + relations_latex(rel, s.caos));
  } else if (c.format == "json") {
    ordered_json caos = ordered_json::array();
    for (const auto& p : s.caos.pairs) caos.push_back({{"label", p.label}, {"parity", p.parity}});
    ordered_json j = {{"schema_version", 1},
                      {"selection", s.description},
                      {"N", rel.N},
                      {"caos", std::move(caos)},
                      {"quadratic_count", rel.quadratic.size()},
                      {"triple_count", rel.triple.size()},
                      {"relation_digest", digest_hex(relation_digest(rel))},
                      {"text", relations_text(rel, s.caos)}};
    emit(c, j.dump(2) + "\n");
  } else {
    emit(c, "# " + s.description + "\n" + relations_text(rel, s.caos));
  }
  return kExitOk;
}

// Ranges of the closed-form suite.
std::vector<std::tuple<std::string, int, int>> closed_form_suite() {
  std::vector<std::tuple<std::string, int, int>> out;
  for (int n = 1; n <= 3; ++n) out.emplace_back("sl1n", 0, n);
  for (int n = 1; n <= 3; ++n) out.emplace_back("pBose", 0, n);
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) {
      out.emplace_back("A1", m, n);
      out.emplace_back("A2", m, n);
      if (m + n >= 1) out.emplace_back("Adouble", m, n);
    }
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; m + n <= 3; ++n)
      if (m + n >= 1) out.emplace_back("A21R", m, n);
  for (int m = 0; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n) out.emplace_back("GB3", m, n);
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n) {
      out.emplace_back("pBose", m, n);
      out.emplace_back("pFermi", m, n);
    }
  for (int n = 2; n <= 3; ++n) {
    out.emplace_back("CS1", 0, n);
    out.emplace_back("CS2", 0, n);
  }
  return out;
}

bool verify_cases(const Config& c, std::ostream& out) {
  std::vector<std::tuple<std::string, int, int>> runs;
  if (c.case_id == "all")
    runs = closed_form_suite();
  else
    runs.emplace_back(c.case_id, std::max(c.m, 0), std::max(c.n, 0));
  bool ok = true;
  for (const auto& [id, m, n] : runs) {
    std::vector<ClosedFormReport> reports;
    try {
      reports = c.position > 0 ? std::vector{verify_closed_form(id, m, n, c.position)} : verify_closed_form_all(id, m, n);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    for (const auto& r : reports) {
      const bool pass = r.passed();
      ok = ok && pass;
      out << (pass ? "PASS " : "FAIL ") << r.id << " " << r.family.name();
      if (r.position) out << " position " << r.position;
      out << ": " << r.holding << "/" << r.instances << " identities exact; completeness "
          << (r.complete() ? "linear" : r.complete_with_jacobi() ? "with super-Jacobi" : "missing") << "\n";
      for (const auto& f : r.failures) out << "    " << f << "\n";
    }
  }
  return ok;
}

std::vector<Family> table2_families(int max_rank) {
  std::vector<Family> out;
  for (int m = 0; m <= max_rank; ++m)
    for (int n = 0; n <= max_rank; ++n)
      if (m + n >= 1) out.push_back(Family::A(m, n));
  for (int m = 1; m <= max_rank; ++m)
    for (int n = 1; n <= max_rank; ++n) out.push_back(Family::B(m, n));
  for (int n = 1; n <= max_rank + 1; ++n) out.push_back(Family::B0(n));
  for (int m = 2; m <= max_rank; ++m)
    for (int n = 1; n <= max_rank; ++n) out.push_back(Family::D(m, n));
  for (int n = 2; n <= max_rank + 1; ++n) out.push_back(Family::C(n));
  return out;
}

bool verify_family_table(const Family& f, const Config& c, std::ostream& out) {
  EnumerationOptions o = enumeration_options(c);
  o.extended = true;
  o.plain = true;
  const Classification got = enumerate_all(f, o);
  std::set<std::string> have, want;
  for (const auto& cs : got.cases) have.insert(cs.key());
  for (const auto& r : table2_expected(f))
    if (c.nondistinguished || !r.nondistinguished_only) want.insert(r.key());
  const bool ok = have == want && got.all_valid();
  out << (ok ? "PASS " : "FAIL ") << "table " << f.name() << ": " << have.size() << " cases, " << want.size()
      << " expected rows" << (got.all_valid() ? "" : ", invalid witnesses") << "\n";
  for (const auto& k : have)
    if (!want.count(k)) out << "    unexpected " << k << "\n";
  for (const auto& k : want)
    if (!have.count(k)) out << "    missing " << k << "\n";
  return ok;
}

int cmd_verify(const Config& c) {
  std::ostringstream out;
  bool ok = true;
  bool any = false;
  if (!c.case_id.empty()) {
    any = true;
    ok = verify_cases(c, out) && ok;
  }
  if (c.table2) {
    any = true;
    if (c.max_rank < 1 || c.max_rank > 3) throw UsageError("--max-rank must be 1..3");
    for (const Family& f : table2_families(c.max_rank)) ok = verify_family_table(f, c, out) && ok;
  }
  if (!c.family.empty() || !c.family_positional.empty()) {
    any = true;
    const Family f = family_of(c);
    const AlgebraCheckReport r = check_algebra(build(f), 500, c.seed);
    out << (r.ok() ? "PASS " : "FAIL ") << "algebra " << f.name() << ": dimension " << r.dimension << "/"
        << r.expected_dimension << ", super-Jacobi " << r.jacobi_samples - r.jacobi_failures << "/" << r.jacobi_samples
        << "\n";
    for (const auto& msg : r.failures) out << "    " << msg << "\n";
    ok = ok && r.ok();
    ok = verify_family_table(f, c, out) && ok;
  }
  if (!any) throw UsageError("nothing to verify: give --case, --table2 or a family");
  emit(c, out.str());
  return ok ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized quantum statistics for classical Lie superalgebras"};
  app.require_subcommand(1);
  Config cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("FAMILY", cfg.family_positional, "Family: A, B, B0, C or D");
    sub->add_option("-f,--family", cfg.family, "Family: A, B, B0, C or D");
    sub->add_option("--m", cfg.m, "First rank parameter");
    sub->add_option("--n", cfg.n, "Second rank parameter");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "latex", "text"}));
    sub->add_option("--out", cfg.out, "Write output to this file");
    sub->add_option("--jobs", cfg.jobs, "Worker threads (default GQS_JOBS or 1)");
    sub->add_option("--seed", cfg.seed, "Seed for randomized checks");
  };
  auto enumeration = [&](CLI::App* sub) {
    sub->add_flag("--extended,!--no-extended", cfg.extended, "Include extended diagrams (default on)");
    sub->add_flag("--nondistinguished", cfg.nondistinguished, "Use every simple system, not only the distinguished one");
    sub->add_option("--max-delete", cfg.max_delete, "Largest deletion set (1..3)");
  };

  auto* build_cmd = app.add_subcommand("build", "Construct an algebra and list its roots");
  common(build_cmd);
  auto* diagrams_cmd = app.add_subcommand("diagrams", "Dynkin diagrams of the simple systems");
  common(diagrams_cmd);
  enumeration(diagrams_cmd);
  auto* classify_cmd = app.add_subcommand("classify", "Enumerate gradings and bucket them");
  common(classify_cmd);
  enumeration(classify_cmd);
  auto* relations_cmd = app.add_subcommand("relations", "Emit the quadratic and triple relations of one case");
  common(relations_cmd);
  relations_cmd->add_option("--case", cfg.case_id, "Named case (sl1n, pBose, pFermi, GB3, A1, A2, Adouble, A21R, CS1, CS2)");
  relations_cmd->add_option("--position", cfg.position, "Deleted node pair for A21R");
  relations_cmd->add_option("--system", cfg.system, "Simple system index (0 = distinguished)");
  relations_cmd->add_option("--deleted", cfg.deleted, "Deleted node labels, comma separated");
  relations_cmd->add_option("--grading", cfg.grading, "Grading index when the deletion gives several");
  relations_cmd->add_flag("--extended", cfg.extended, "Delete from the extended diagram");
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  common(verify_cmd);
  verify_cmd->add_flag("--nondistinguished", cfg.nondistinguished, "Enumerate every simple system");
  verify_cmd->add_option("--max-delete", cfg.max_delete, "Largest deletion set (1..3)");
  verify_cmd->add_option("--case", cfg.case_id, "Named closed-form case, or 'all'");
  verify_cmd->add_option("--position", cfg.position, "Only this A21R position");
  verify_cmd->add_flag("--table2", cfg.table2, "Compare the classification with the summary table");
  verify_cmd->add_option("--max-rank", cfg.max_rank, "Rank bound for --table2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  // Relations are taken from the plain diagram unless --extended is given.
  if (relations_cmd->parsed() && relations_cmd->count("--extended") == 0) cfg.extended = false;

  try {
    if (build_cmd->parsed()) return cmd_build(cfg);
    if (diagrams_cmd->parsed()) return cmd_diagrams(cfg);
    if (classify_cmd->parsed()) return cmd_classify(cfg);
    if (relations_cmd->parsed()) return cmd_relations(cfg);
    if (verify_cmd->parsed()) return cmd_verify(cfg);
  } catch (const UsageError& e) {
    std::cerr << "gqs: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "gqs: internal error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
