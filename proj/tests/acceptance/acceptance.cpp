// Acceptance suite: one PASS/FAIL line per criterion, details indented below.
// Exit status is 0 only when every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "gqs/checks.hpp"
#include "gqs/classification.hpp"
#include "gqs/closed_forms.hpp"

using namespace gqs;

namespace {

struct Outcome {
  bool pass = false;
  std::string summary;
  std::vector<std::string> details;
};

std::string cli_path;

std::vector<Family> table_families() {
  std::vector<Family> out;
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n)
      if (m + n >= 1) out.push_back(Family::A(m, n));
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n) out.push_back(Family::B(m, n));
  for (int n = 1; n <= 3; ++n) out.push_back(Family::B0(n));
  for (int n = 1; n <= 2; ++n) out.push_back(Family::D(2, n));
  // C(n) = D(1|n-1): ranks m,n <= 2 reach C(3).
  for (int n = 2; n <= 3; ++n) out.push_back(Family::C(n));
  return out;
}

std::set<std::string> case_keys(const std::vector<ClassificationCase>& cases) {
  std::set<std::string> out;
  for (const auto& c : cases) out.insert(c.key());
  return out;
}

std::string join(const std::set<std::string>& s) {
  std::string out;
  for (const auto& x : s) out += (out.empty() ? "" : ", ") + x;
  return out.empty() ? "-" : out;
}

// N values allowed by the closed formulas for each family.
std::set<int> allowed_N(const Family& f) {
  std::set<int> out;
  const int m = f.m, n = f.n;
  switch (f.tag) {
    case FamilyTag::A:
      for (int i = 1; i <= m + n + 1; ++i) out.insert(i * (m + n + 2 - i));
      break;
    case FamilyTag::B:
      for (int i = 1; i <= m + n; ++i) out.insert(2 * i * (m + n) - i * (2 * i - 1));
      out.insert(2 * m + 2 * n - 1);
      break;
    case FamilyTag::B0:
      for (int i = 1; i <= n; ++i) out.insert(i * (2 * n - 2 * i + 1));
      break;
    case FamilyTag::D:
      for (int i = 1; i < m + n; ++i) out.insert(2 * i * (m + n - i));
      out.insert((m + n) * (m + n + 1) / 2 - m);
      out.insert(2 * (m + n - 1));
      break;
    case FamilyTag::C:
      for (int i = 1; i < n; ++i) out.insert(2 * i * (n - i));
      out.insert(2 * (n - 1));
      out.insert(n * (n + 1) / 2 - 1);
      break;
  }
  return out;
}

Outcome closed_forms() {
  std::vector<std::tuple<std::string, int, int>> runs;
  for (int n = 1; n <= 3; ++n) runs.emplace_back("pBose", 0, n);
  for (int n = 1; n <= 3; ++n) runs.emplace_back("sl1n", 0, n);
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) {
      runs.emplace_back("A1", m, n);
      runs.emplace_back("A2", m, n);
      if (m + n >= 1) runs.emplace_back("Adouble", m, n);
    }
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; m + n <= 3; ++n)
      if (m + n >= 1) runs.emplace_back("A21R", m, n);
  for (int m = 0; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n) runs.emplace_back("GB3", m, n);
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n) {
      runs.emplace_back("pBose", m, n);
      runs.emplace_back("pFermi", m, n);
    }
  for (int n = 2; n <= 3; ++n) {
    runs.emplace_back("CS1", 0, n);
    runs.emplace_back("CS2", 0, n);
  }
  Outcome o;
  long instances = 0, holding = 0, reports = 0, incomplete = 0;
  for (const auto& [id, m, n] : runs)
    for (const auto& r : verify_closed_form_all(id, m, n)) {
      ++reports;
      instances += r.instances;
      holding += r.holding;
      if (!r.identities_hold())
        for (const auto& f : r.failures) o.details.push_back(r.id + " " + r.family.name() + ": " + f);
      if (!r.complete_with_jacobi()) {
        ++incomplete;
        o.details.push_back(r.id + " " + r.family.name() + ": relation span differs from the generated relations");
      }
    }
  o.pass = instances > 0 && instances == holding && incomplete == 0;
  o.summary = std::to_string(holding) + "/" + std::to_string(instances) + " identity instances exact over " +
              std::to_string(reports) + " cases, " + std::to_string(reports - incomplete) + " complete";
  return o;
}

Outcome table_reproduction() {
  Outcome o;
  o.pass = true;
  int families = 0;
  for (const Family& f : table_families()) {
    ++families;
    const Classification c = enumerate_all(f);
    std::set<std::string> want;
    for (const auto& r : table2_expected(f))
      if (!r.nondistinguished_only) want.insert(r.key());
    const std::set<std::string> have = case_keys(c.cases);
    const std::set<int> allowed = allowed_N(f);
    bool formula_ok = true;
    for (const auto& k : c.cases) formula_ok = formula_ok && allowed.count(k.N);
    if (have != want || !formula_ok) {
      o.pass = false;
      std::set<std::string> extra, missing;
      for (const auto& k : have)
        if (!want.count(k)) extra.insert(k);
      for (const auto& k : want)
        if (!have.count(k)) missing.insert(k);
      o.details.push_back(f.name() + ": unexpected {" + join(extra) + "} missing {" + join(missing) + "}" +
                          (formula_ok ? "" : " N outside the closed formulas"));
    }
  }
  o.summary = std::to_string(families) + " algebras, distinguished + extended-distinguished diagrams";
  return o;
}

Outcome nondistinguished_coverage() {
  Outcome o;
  bool found_all = true, bzero = true;
  EnumerationOptions opt;
  opt.include_nondistinguished = true;
  for (const Family& f : {Family::D(2, 1), Family::D(2, 2)}) {
    const std::set<std::string> have = case_keys(enumerate_all(f, opt).cases);
    const std::set<std::string> distinguished = case_keys(enumerate_all(f).cases);
    const int m = f.m, n = f.n;
    int hits = 0;
    for (int l = 0; l <= n - 1; ++l) {
      SubalgebraName g0;
      g0.add(normalize_sl(m - 1, l));
      g0.add(normalize_d_super(1, n - l));
      const int N = 2 * (m - 1 + l) * (n + 1 - l);
      const std::string key = g0.key() + "|5|" + std::to_string(N);
      const bool hit = have.count(key) > 0;
      hits += hit;
      o.details.push_back(f.name() + " l=" + std::to_string(l) + " G0=H+" + g0.key() + " length 5 N=" + std::to_string(N) +
                          ": " + (hit ? (distinguished.count(key) ? "found" : "found, non-distinguished only") : "not found"));
      if (!hit && l == 0)
        o.details.push_back("  at l=0 the sl part vanishes and G0 equals the length-3 G0 H+D(m-1|n) with the same N; "
                            "the grading functional vanishing on those roots only takes values 0, +-1");
    }
    if (hits == 0) found_all = false;
  }
  for (int n = 1; n <= 3; ++n) {
    const std::size_t count = enumerate_simple_systems(Family::B0(n)).size();
    o.details.push_back("B(0|" + std::to_string(n) + "): " + std::to_string(count) + " simple system(s)");
    bzero = bzero && count == 1;
  }
  o.pass = found_all && bzero;
  o.summary = std::string(found_all ? "extra D case found at D(2|1) and D(2|2)" : "extra D case not found at every rank") +
              (bzero ? ", B(0|n) has one simple system" : ", B(0|n) has several simple systems");
  return o;
}

Outcome definition_suite() {
  Outcome o;
  long cases = 0, witnesses = 0, rechecked = 0, bad = 0;
  EnumerationOptions opt;
  opt.include_nondistinguished = true;
  for (const Family& f : table_families()) {
    const Classification c = enumerate_all(f, opt);
    const AlgebraModel model = build(f);
    const std::vector<SimpleSystem> systems = enumerate_simple_systems(f);
    for (const auto& k : c.cases) {
      ++cases;
      for (const auto& w : k.provenance) {
        ++witnesses;
        if (!w.valid || !w.generates) {
          ++bad;
          o.details.push_back(f.name() + " " + k.key() + ": " + w.str());
        }
      }
      // Recompute the first witness from scratch.
      const Witness& w = k.provenance.front();
      const Diagram d = diagram_of(systems.at(w.system_id), w.extended);
      const DeletionAnalysis a = analyze_deletion(model, d, std::set<int>(w.deleted.begin(), w.deleted.end()));
      ++rechecked;
      if (w.grading_index >= static_cast<int>(a.gradings.size())) {
        ++bad;
        o.details.push_back(f.name() + " " + k.key() + ": witness grading not reproduced");
        continue;
      }
      const Grading& g = a.gradings[w.grading_index];
      const GradingValidation v = validate_grading(model, g);
      const CaoSet caos = cao_set(model, g);
      if (!v.ok() || !generation_check(model, caos) || g.length != k.length || g.N() != k.N ||
          caos.all_odd() != w.odd_only) {
        ++bad;
        o.details.push_back(f.name() + " " + k.key() + ": recomputed witness disagrees" +
                            (v.failures.empty() ? "" : " (" + v.failures.front() + ")"));
      }
    }
  }
  o.pass = cases > 0 && bad == 0;
  o.summary = std::to_string(cases) + " cases, " + std::to_string(witnesses) + " witnesses valid and generating, " +
              std::to_string(rechecked) + " recomputed";
  return o;
}

Outcome negative_space_suite() {
  Outcome o;
  long checked = 0, violations = 0;
  for (const Family& f : table_families()) {
    const bool a = f.tag == FamilyTag::A;
    const NegativeSpaceReport r = negative_space(f, 3, a ? 4 : 3, f.rank() + 1);
    checked += r.checked;
    violations += static_cast<long>(r.violations.size());
    for (const auto& v : r.violations) o.details.push_back(f.name() + " " + v);
  }
  if (violations)
    o.details.push_back("each listed extended set leaves the same nodes as a valid two-node deletion of the plain "
                        "diagram, so it yields that deletion's gradings again");
  o.pass = checked > 0 && violations == 0;
  o.summary = std::to_string(checked) + " deletion sets (plain >= 3, extended >= 3, A extended >= 4), " +
              std::to_string(violations) + " with a valid grading";
  return o;
}

Outcome algebra_suite() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::vector<Family> fams;
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n)
      if (m + n >= 1) fams.push_back(Family::A(m, n));
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) fams.push_back(Family::B(m, n));
  for (int n = 1; n <= 3; ++n) fams.push_back(Family::B0(n));
  for (int n = 2; n <= 3; ++n) fams.push_back(Family::C(n));
  for (int m = 2; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) fams.push_back(Family::D(m, n));
  int ok = 0;
  for (const Family& f : fams) {
    const AlgebraCheckReport r = check_algebra(build(f), 500, 1);
    if (r.ok())
      ++ok;
    else
      o.details.push_back(f.name() + ": " + (r.failures.empty() ? "dimension mismatch" : r.failures.front()));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.pass = ok == static_cast<int>(fams.size()) && secs < 120;
  std::ostringstream s;
  s.precision(2);
  s << std::fixed << ok << "/" << fams.size() << " algebras pass, " << secs << " s";
  o.summary = s.str();
  return o;
}

Outcome odd_only_suite() {
  Outcome o;
  o.pass = true;
  int families = 0;
  for (const Family& f : table_families()) {
    ++families;
    const std::set<std::string> have = case_keys(odd_only_filter(enumerate_all(f).cases));
    std::set<std::string> want;
    for (const auto& r : odd_only_expected(f)) want.insert(r.key());
    if (have != want) {
      o.pass = false;
      o.details.push_back(f.name() + ": got {" + join(have) + "} expected {" + join(want) + "}");
    }
  }
  o.summary = std::to_string(families) + " algebras";
  return o;
}

std::string run_cli(const std::string& args) {
  std::string out;
  FILE* p = popen((cli_path + " " + args).c_str(), "r");
  if (!p) return out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
  pclose(p);
  return out;
}

Outcome determinism() {
  Outcome o;
  o.pass = true;
  int compared = 0;
  for (const Family& f : {Family::A(1, 2), Family::D(2, 2), Family::C(3)}) {
    EnumerationOptions one, many;
    one.include_nondistinguished = many.include_nondistinguished = true;
    many.jobs = 4;
    const std::string a = classification_json(enumerate_all(f, one));
    const std::string b = classification_json(enumerate_all(f, one));
    const std::string c = classification_json(enumerate_all(f, many));
    compared += 3;
    if (a != b || a != c) {
      o.pass = false;
      o.details.push_back(f.name() + ": JSON differs between runs");
    }
  }
  if (!cli_path.empty()) {
    const std::string args = "classify D --m 2 --n 2 --nondistinguished --format json";
    const std::string x = run_cli(args), y = run_cli(args + " --jobs 2");
    compared += 2;
    if (x.empty() || x != y) {
      o.pass = false;
      o.details.push_back("gqs " + args + ": output differs or is empty");
    }
  }
  o.summary = std::to_string(compared) + " classify outputs compared byte for byte";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") cli_path = argv[i + 1];

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"closed-form relations", closed_forms},
      {"classification table", table_reproduction},
      {"non-distinguished coverage", nondistinguished_coverage},
      {"grading properties", definition_suite},
      {"negative space", negative_space_suite},
      {"algebra construction", algebra_suite},
      {"odd-only filter", odd_only_suite},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.summary = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::printf("%s criterion %zu (%s): %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.summary.c_str(), secs);
    for (const auto& d : o.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
