#pragma once

#include <set>
#include <string>
#include <vector>

#include "gqs/grading.hpp"
#include "gqs/relations.hpp"

namespace gqs {

// Everything the three-stage method produces for one deletion set.
struct DeletionAnalysis {
  SubalgebraName initial_name;  // before omega-invariant modules are absorbed
  int initial_blocks = 0;
  SubalgebraName g0_name;
  int blocks = 0;
  std::vector<Grading> gradings;
  SearchStats stats;
  std::string error;  // set when absorption fails; no gradings then
};

DeletionAnalysis analyze_deletion(const AlgebraModel& model, const Diagram& diagram, const std::set<int>& deleted);

struct Witness {
  int system_id = 0;  // index into enumerate_simple_systems (0 = distinguished)
  bool extended = false;
  std::vector<int> deleted;  // node labels, 0 is the extension node
  int grading_index = 0;
  bool valid = false;        // validate_grading(...).ok()
  bool generates = false;    // generation_check
  bool h_in_bracket = false; // H within [[G_{+1},G_{-1}]]
  bool odd_only = false;
  std::string relation_digest;
  std::vector<std::string> failures;

  std::string str() const;
};

struct ClassificationCase {
  Family family;
  SubalgebraName g0_name;
  int length = 0;
  int N = 0;
  bool odd_only = false;  // some witness has only odd CAOs
  std::string relation_digest;  // of the first witness
  std::vector<Witness> provenance;

  std::string key() const;  // "g0|length|N"
  bool all_valid() const;
};

struct EnumerationOptions {
  bool include_nondistinguished = false;
  bool plain = true;
  bool extended = true;
  int max_delete = 3;
  int jobs = 1;
};

struct Classification {
  Family family;
  EnumerationOptions options;
  int systems = 0;
  long deletion_sets = 0;
  long gradings = 0;
  std::vector<ClassificationCase> cases;  // sorted by key
  std::vector<std::string> errors;        // deletion sets the method could not process

  bool all_valid() const;
};

Classification enumerate_all(const Family& family, const EnumerationOptions& options = {});

std::vector<ClassificationCase> odd_only_filter(const std::vector<ClassificationCase>& cases);

// One (G0, length, N) row of the classification summary at given ranks.
struct ExpectedRow {
  SubalgebraName g0;
  int length = 0;
  int N = 0;
  // Only reachable from non-distinguished simple systems.
  bool nondistinguished_only = false;

  std::string key() const;
};

// Rows of the summary table instantiated at the family's ranks, deduplicated.
std::vector<ExpectedRow> table2_expected(const Family& family);
// Rows with only odd CAOs.
std::vector<ExpectedRow> odd_only_expected(const Family& family);

struct NegativeSpaceReport {
  long checked = 0;
  std::vector<std::string> violations;  // deletions that still produced a grading
};

// Deletes every set of at least `min_plain` nodes from the distinguished
// diagram and at least `min_extended` nodes from its extension (up to
// `max_size`), and records each one that yields a grading.
NegativeSpaceReport negative_space(const Family& family, int min_plain, int min_extended, int max_size);

std::string classification_json(const Classification& classification, int indent = 2);
std::string classification_text(const Classification& classification);

// Parallelism default: GQS_JOBS if set and positive, else 1.
int default_jobs();

}  // namespace gqs
