#pragma once

#include <cmtkit/classify.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cmt::verify {

struct CorpusOptions {
  /// Random complexes and boundary spheres use at most this many vertices.
  std::size_t max_n = 7;
  /// Number of random pure complexes.
  std::size_t random_count = 50;
  /// First seed; random complex i uses seed + i.
  std::uint64_t seed = 1;
};

struct CorpusEntry {
  std::string name;
  SimplicialComplex complex;
};

/**
 * Glued two-simplex families for 2 ≤ d ≤ 5 (plus two three-simplex
 * families), boundary spheres up to max_n vertices, a few named fixtures
 * and `random_count` random pure complexes.
 */
std::vector<CorpusEntry> build_corpus(const CorpusOptions& options);

struct Counterexample {
  std::string complex_name;
  SimplicialComplex complex;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::size_t cases = 0;
  std::vector<Counterexample> failures;
  bool ok() const { return failures.empty(); }
};

/// link_laws, criteria_equivalence, link_recursion, k_link_recursion,
/// deletion_theorem, skeleton_theorem, monotonicity, paper_fixtures.
const std::vector<std::string>& suite_names();

/// Runs one named suite (not "all"). Throws on an unknown name.
SuiteResult run_suite(std::string_view name, const std::vector<CorpusEntry>& corpus,
                      const FieldSpec& field, Exec exec = {});

} // namespace cmt::verify
