#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace skeinalg::checks {

/// Instance counts and size limits for one run of the check suites.
struct Scale {
  std::size_t systems = 200;
  std::size_t singular_systems = 50;
  std::size_t max_system_dim = 3;
  std::size_t max_word_length = 6;
  std::size_t hom_pairs = 100;
  std::size_t conjugations = 50;
  bool include_m3 = true;
  std::size_t composable_pairs = 100;
  std::size_t max_space_dim = 3;
  std::size_t tl_max_total = 10;
  std::size_t tl_relations_n = 5;
  std::size_t reidemeister_insertions = 500;
  std::size_t max_braid_crossings = 6;
  std::size_t max_braid_strands = 4;
  std::size_t r1_moves = 40;
  std::size_t random_corpus = 30;
  std::size_t corpus_max_crossings = 8;
  std::size_t annulus_max_identity = 5;
  std::size_t annulus_pairs = 50;
  std::size_t annulus_max_crossings = 4;
  std::size_t projectivity = 50;
  std::size_t property_trials = 40;

  static Scale full() { return {}; }
  static Scale quick();
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string detail;  // first failure, or a short summary
};

struct Check {
  int id = 0;  // acceptance criterion number, 0 for the other invariants
  std::string name;
  std::function<CheckResult(const Scale&, std::uint64_t seed)> run;
};

/// Criteria 1-10, in order.
const std::vector<Check>& acceptance_criteria();

/// The remaining invariants and properties of each module.
const std::vector<Check>& invariant_checks();

/// Closed braid words used as the fixed evaluator corpus: (name, word, strands).
struct CorpusEntry {
  std::string name;
  std::vector<int> word;
  std::size_t strands;
};
const std::vector<CorpusEntry>& braid_corpus();

}  // namespace skeinalg::checks
