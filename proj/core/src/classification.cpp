#include "gqs/classification.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace gqs {

namespace {

// All subsets of `labels` with size in [lo, hi], in lexicographic order.
std::vector<std::set<int>> subsets(const std::vector<int>& labels, int lo, int hi) {
  std::vector<std::set<int>> out;
  const int n = static_cast<int>(labels.size());
  for (int k = std::max(lo, 1); k <= std::min(hi, n); ++k) {
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      std::set<int> s;
      for (int i : pick) s.insert(labels[i]);
      out.push_back(std::move(s));
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

struct Task {
  int system_id;
  bool extended;
  std::set<int> deleted;
};

struct TaskResult {
  std::vector<std::pair<std::string, ClassificationCase>> found;  // key, single-witness case
  long gradings = 0;
  std::string error;
};

TaskResult run_task(const AlgebraModel& model, const Diagram& diagram, const Task& task) {
  TaskResult out;
  DeletionAnalysis a = analyze_deletion(model, diagram, task.deleted);
  if (!a.error.empty()) {
    out.error = std::string(task.extended ? "extended " : "") + "system " + std::to_string(task.system_id) +
                " delete {" + join({task.deleted.begin(), task.deleted.end()}) + "}: " + a.error;
    return out;
  }
  for (std::size_t gi = 0; gi < a.gradings.size(); ++gi) {
    const Grading& g = a.gradings[gi];
    ++out.gradings;
    Witness w;
    w.system_id = task.system_id;
    w.extended = task.extended;
    w.deleted.assign(task.deleted.begin(), task.deleted.end());
    w.grading_index = static_cast<int>(gi);
    GradingValidation v = validate_grading(model, g);
    w.valid = v.ok();
    w.h_in_bracket = v.h_in_g1_bracket;
    w.failures = v.failures;
    CaoSet caos = cao_set(model, g);
    w.odd_only = caos.all_odd();
    w.generates = generation_check(model, caos);
    if (!w.generates) w.failures.push_back("CAOs and their brackets do not span the algebra");
    try {
      w.relation_digest = digest_hex(relation_digest(generate_relations(caos)));
    } catch (const std::logic_error& e) {
      w.valid = false;
      w.failures.push_back(e.what());
    }
    ClassificationCase c;
    c.family = model.family();
    c.g0_name = g.g0.name;
    c.length = g.length;
    c.N = g.N();
    c.odd_only = w.odd_only;
    c.relation_digest = w.relation_digest;
    c.provenance.push_back(std::move(w));
    std::string key = c.key();
    out.found.emplace_back(std::move(key), std::move(c));
  }
  return out;
}

template <class F>
void parallel_for(std::size_t count, int jobs, F&& body) {
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) body(i);
    });
  for (auto& th : pool) th.join();
}

SubalgebraName name_of(std::initializer_list<std::vector<Summand>> parts) {
  SubalgebraName n;
  for (const auto& p : parts) n.add(p);
  return n;
}

bool pure(int k, int l) { return k == 0 || l == 0; }

void push_row(std::vector<ExpectedRow>& rows, SubalgebraName g0, int length, int N, bool nondistinguished_only) {
  rows.push_back(ExpectedRow{std::move(g0), length, N, nondistinguished_only});
}

// Keeps one row per key; a row counts as reachable from distinguished
// diagrams if any instance of it is.
std::vector<ExpectedRow> dedupe(std::vector<ExpectedRow> rows) {
  std::map<std::string, ExpectedRow> by_key;
  for (auto& r : rows) {
    auto [it, fresh] = by_key.emplace(r.key(), r);
    if (!fresh) it->second.nondistinguished_only = it->second.nondistinguished_only && r.nondistinguished_only;
  }
  std::vector<ExpectedRow> out;
  for (auto& [k, r] : by_key) out.push_back(std::move(r));
  return out;
}

}  // namespace

DeletionAnalysis analyze_deletion(const AlgebraModel& model, const Diagram& diagram, const std::set<int>& deleted) {
  DeletionAnalysis a;
  try {
    SubalgebraSpan g0 = delete_to_subalgebra(model, diagram, deleted);
    std::vector<ModuleBlock> blocks = decompose_modules(model, g0);
    a.initial_name = g0.name;
    a.initial_blocks = static_cast<int>(blocks.size());
    auto [g0b, blocksb] = absorb_invariant_modules(model, std::move(g0), std::move(blocks));
    a.g0_name = g0b.name;
    a.blocks = static_cast<int>(blocksb.size());
    a.gradings = search_gradings(model, g0b, blocksb, &a.stats);
  } catch (const std::logic_error& e) {
    a.error = e.what();
    a.gradings.clear();
  }
  return a;
}

std::string Witness::str() const {
  std::ostringstream out;
  out << (extended ? "extended " : "") << "system " << system_id << " delete {" << join(deleted) << "} grading "
      << grading_index;
  return out.str();
}

std::string ClassificationCase::key() const {
  return g0_name.key() + "|" + std::to_string(length) + "|" + std::to_string(N);
}

bool ClassificationCase::all_valid() const {
  for (const auto& w : provenance)
    if (!w.valid || !w.generates) return false;
  return true;
}

bool Classification::all_valid() const {
  if (!errors.empty()) return false;
  for (const auto& c : cases)
    if (!c.all_valid()) return false;
  return true;
}

Classification enumerate_all(const Family& family, const EnumerationOptions& options) {
  family.validate();
  if (options.max_delete < 1 || options.max_delete > 3) throw std::invalid_argument("max_delete must be 1..3");
  Classification result;
  result.family = family;
  result.options = options;

  const AlgebraModel model = build(family);
  std::vector<SimpleSystem> systems =
      options.include_nondistinguished ? enumerate_simple_systems(family) : std::vector{distinguished_system(family)};
  result.systems = static_cast<int>(systems.size());

  std::vector<Diagram> diagrams;  // index 2*system + extended
  std::vector<Task> tasks;
  for (std::size_t s = 0; s < systems.size(); ++s)
    for (bool ext : {false, true}) {
      diagrams.push_back(diagram_of(systems[s], ext));
      if ((ext && !options.extended) || (!ext && !options.plain)) continue;
      for (auto& d : subsets(diagrams.back().labels(), 1, options.max_delete))
        tasks.push_back(Task{static_cast<int>(s), ext, std::move(d)});
    }
  result.deletion_sets = static_cast<long>(tasks.size());

  std::vector<TaskResult> results(tasks.size());
  parallel_for(tasks.size(), options.jobs, [&](std::size_t i) {
    const Task& t = tasks[i];
    results[i] = run_task(model, diagrams[2 * static_cast<std::size_t>(t.system_id) + (t.extended ? 1 : 0)], t);
  });

  // Merge in task order so the output does not depend on scheduling.
  std::map<std::string, ClassificationCase> buckets;
  for (auto& r : results) {
    result.gradings += r.gradings;
    if (!r.error.empty()) result.errors.push_back(r.error);
    for (auto& [key, c] : r.found) {
      auto [it, fresh] = buckets.emplace(key, c);
      if (fresh) continue;
      it->second.odd_only = it->second.odd_only || c.odd_only;
      for (auto& w : c.provenance) it->second.provenance.push_back(std::move(w));
    }
  }
  for (auto& [k, c] : buckets) result.cases.push_back(std::move(c));
  return result;
}

std::vector<ClassificationCase> odd_only_filter(const std::vector<ClassificationCase>& cases) {
  std::vector<ClassificationCase> out;
  for (const auto& c : cases)
    if (c.odd_only) out.push_back(c);
  return out;
}

std::string ExpectedRow::key() const { return g0.key() + "|" + std::to_string(length) + "|" + std::to_string(N); }

std::vector<ExpectedRow> table2_expected(const Family& family) {
  family.validate();
  const int m = family.m, n = family.n;
  std::vector<ExpectedRow> rows;
  switch (family.tag) {
    case FamilyTag::A: {
      const int E = m + 1, O = n + 1, total = m + n + 2;
      for (int k = 0; k <= E; ++k)
        for (int l = 0; l <= O; ++l) {
          const int p = E - k, q = O - l;
          if (k + l == 0 || p + q == 0) continue;
          push_row(rows, name_of({normalize_sl(k, l), normalize_sl(p, q)}), 3, (k + l) * (p + q), false);
        }
      // Three parts (k|l), (p|q), (r|s); N = s*(total-s) for the size s of
      // any one part.
      for (int k = 0; k <= E; ++k)
        for (int l = 0; l <= O; ++l)
          for (int p = 0; p <= E - k; ++p)
            for (int q = 0; q <= O - l; ++q) {
              const int r = E - k - p, s = O - l - q;
              if (k + l == 0 || p + q == 0 || r + s == 0) continue;
              const bool nd = !pure(k, l) && !pure(p, q) && !pure(r, s);
              SubalgebraName g0 = name_of({normalize_sl(k, l), normalize_sl(p, q), normalize_sl(r, s)});
              for (int size : {k + l, p + q, r + s}) push_row(rows, g0, 5, size * (total - size), nd);
            }
      break;
    }
    case FamilyTag::B:
      for (int k = 0; k <= m; ++k)
        for (int l = 0; l <= n; ++l) {
          if ((k == 0 && l == 0) || (k == 1 && l == 0)) continue;
          push_row(rows, name_of({normalize_sl(k, l), normalize_b_super(m - k, n - l)}), 5,
                   (k + l) * (2 * (m - k) + 2 * (n - l) + 1), false);
        }
      push_row(rows, name_of({normalize_b_super(m - 1, n)}), 3, 2 * m + 2 * n - 1, false);
      break;
    case FamilyTag::B0:
      for (int i = 1; i <= n; ++i)
        push_row(rows, name_of({normalize_sl(i, 0), normalize_b_super(0, n - i)}), 5, i * (2 * n - 2 * i + 1), false);
      break;
    case FamilyTag::D: {
      for (int k = 0; k <= m; ++k)
        for (int l = 0; l <= n; ++l) {
          if ((k == 0 && l == 0) || (k == 1 && l == 0) || (k == m - 1 && l == n) || (k == m && l == n)) continue;
          // k = m-1, l < n is the extra case found only on non-distinguished diagrams.
          push_row(rows, name_of({normalize_sl(k, l), normalize_d_super(m - k, n - l)}), 5,
                   2 * (k + l) * (m + n - k - l), k == m - 1);
        }
      const int big = (m + n) * (m + n + 1) / 2 - m;
      push_row(rows, name_of({normalize_d_super(m - 1, n)}), 3, 2 * (m + n - 1), false);
      push_row(rows, name_of({normalize_sl(m, n)}), 3, big, false);
      push_row(rows, name_of({normalize_sl(m - 1, n)}), 5, big, false);
      push_row(rows, name_of({normalize_sl(m - 1, n)}), 5, 2 * (m + n - 1), false);
      break;
    }
    case FamilyTag::C: {
      for (int k = 0; k <= 1; ++k)
        for (int l = 1; l <= n - 2; ++l)
          push_row(rows, name_of({normalize_sl(k, l), normalize_d_super(1 - k, n - 1 - l)}), 5,
                   2 * (k + l) * (n - k - l), false);
      push_row(rows, name_of({normalize_c_lie(n - 1)}), 3, 2 * (n - 1), false);
      push_row(rows, name_of({normalize_sl(1, n - 1)}), 3, n * (n + 1) / 2 - 1, false);
      push_row(rows, name_of({normalize_sl(n - 1, 0)}), 5, n * (n + 1) / 2 - 1, false);
      push_row(rows, name_of({normalize_sl(n - 1, 0)}), 5, 2 * (n - 1), false);
      break;
    }
  }
  return dedupe(std::move(rows));
}

std::vector<ExpectedRow> odd_only_expected(const Family& family) {
  family.validate();
  const int m = family.m, n = family.n;
  std::vector<ExpectedRow> rows;
  switch (family.tag) {
    case FamilyTag::A: {
      const int N = (m + 1) * (n + 1);
      push_row(rows, name_of({normalize_sl(m + 1, 0), normalize_sl(n + 1, 0)}), 3, N, false);
      for (int i = 1; i <= m; ++i)
        push_row(rows, name_of({normalize_sl(i, 0), normalize_sl(m + 1 - i, 0), normalize_sl(n + 1, 0)}), 5, N, false);
      for (int k = 1; k <= n; ++k)
        push_row(rows, name_of({normalize_sl(m + 1, 0), normalize_sl(k, 0), normalize_sl(n + 1 - k, 0)}), 5, N, false);
      break;
    }
    case FamilyTag::B:
      push_row(rows, name_of({normalize_sl(n, 0), normalize_b_lie(m)}), 5, 2 * n * (m + n) - n * (2 * n - 1), false);
      break;
    case FamilyTag::B0:
      push_row(rows, name_of({normalize_sl(n, 0)}), 5, n, false);
      break;
    case FamilyTag::D:
      push_row(rows, name_of({normalize_sl(n, 0), normalize_d_lie(m)}), 5, 2 * n * m, false);
      push_row(rows, name_of({normalize_sl(m, 0), normalize_c_lie(n)}), 5, 2 * n * m, false);
      break;
    case FamilyTag::C:
      push_row(rows, name_of({normalize_c_lie(n - 1)}), 3, 2 * (n - 1), false);
      push_row(rows, name_of({normalize_sl(n - 1, 0)}), 5, 2 * (n - 1), false);
      break;
  }
  return dedupe(std::move(rows));
}

NegativeSpaceReport negative_space(const Family& family, int min_plain, int min_extended, int max_size) {
  family.validate();
  NegativeSpaceReport report;
  const AlgebraModel model = build(family);
  const SimpleSystem system = distinguished_system(family);
  for (bool ext : {false, true}) {
    const Diagram diagram = diagram_of(system, ext);
    for (const auto& d : subsets(diagram.labels(), ext ? min_extended : min_plain, max_size)) {
      ++report.checked;
      DeletionAnalysis a = analyze_deletion(model, diagram, d);
      int valid = 0;
      for (const auto& g : a.gradings)
        if (validate_grading(model, g).ok()) ++valid;
      if (valid > 0 || !a.error.empty())
        report.violations.push_back(std::string(ext ? "extended" : "plain") + " delete {" +
                                    join({d.begin(), d.end()}) + "}: " +
                                    (a.error.empty() ? std::to_string(valid) + " valid grading(s)" : a.error));
    }
  }
  return report;
}

std::string classification_json(const Classification& c, int indent) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema_version"] = 1;
  j["family"] = {{"tag", to_string(c.family.tag)}, {"m", c.family.m}, {"n", c.family.n}, {"name", c.family.name()}};
  j["options"] = {{"nondistinguished", c.options.include_nondistinguished},
                  {"plain", c.options.plain},
                  {"extended", c.options.extended},
                  {"max_delete", c.options.max_delete}};
  j["systems"] = c.systems;
  j["deletion_sets"] = c.deletion_sets;
  j["gradings"] = c.gradings;
  j["all_valid"] = c.all_valid();
  j["errors"] = c.errors;
  ordered_json cases = ordered_json::array();
  for (const auto& cs : c.cases) {
    ordered_json prov = ordered_json::array();
    for (const auto& w : cs.provenance) {
      ordered_json pw = {{"system", w.system_id},
                         {"extended", w.extended},
                         {"deleted", w.deleted},
                         {"grading", w.grading_index},
                         {"valid", w.valid},
                         {"generates", w.generates},
                         {"h_in_bracket", w.h_in_bracket},
                         {"odd_only", w.odd_only},
                         {"relation_digest", w.relation_digest}};
      if (!w.failures.empty()) pw["failures"] = w.failures;
      prov.push_back(std::move(pw));
    }
    cases.push_back({{"g0", cs.g0_name.str()},
                     {"g0_key", cs.g0_name.key()},
                     {"length", cs.length},
                     {"N", cs.N},
                     {"odd_only", cs.odd_only},
                     {"relation_digest", cs.relation_digest},
                     {"valid", cs.all_valid()},
                     {"provenance", std::move(prov)}});
  }
  j["cases"] = std::move(cases);
  return j.dump(indent) + "\n";
}

std::string classification_text(const Classification& c) {
  std::ostringstream out;
  out << c.family.name() << ": " << c.cases.size() << " case(s) from " << c.systems << " simple system(s), "
      << c.deletion_sets << " deletion set(s), " << c.gradings << " grading(s)\n";
  for (const auto& cs : c.cases) {
    out << "  G0 = " << cs.g0_name.str() << "  l=" << cs.length << "  N=" << cs.N << (cs.odd_only ? "  odd-only" : "")
        << (cs.all_valid() ? "" : "  INVALID") << "  [" << cs.provenance.size() << " witness(es); first "
        << cs.provenance.front().str() << "]\n";
  }
  for (const auto& e : c.errors) out << "  error: " << e << "\n";
  return out.str();
}

int default_jobs() {
  if (const char* v = std::getenv("GQS_JOBS")) {
    char* end = nullptr;
    long j = std::strtol(v, &end, 10);
    if (end != v && *end == '\0' && j > 0) return static_cast<int>(std::min(j, 256L));
  }
  return 1;
}

}  // namespace gqs
