#pragma once

#include <cmtkit/complex.hpp>
#include <cmtkit/field.hpp>
#include <cmtkit/homology.hpp>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cmt {

enum class CmtCriterion {
  /// Purity plus Reisner's criterion applied to every link of a face with #σ ≥ t.
  definition_links,
  /// Purity plus H̃_i(lk σ) = 0 for #σ ≥ t and i < d - #σ - 1.
  reisner_homology,
  /// Purity plus vanishing local homology H_i(|Δ|, |Δ| - p), i < d - 1, at
  /// interior points p of faces with #σ ≥ max(t, 1); for t = 0 the global
  /// condition at σ = ∅ is added.
  local_homology,
};

inline constexpr CmtCriterion kAllCriteria[] = {
    CmtCriterion::definition_links, CmtCriterion::reisner_homology,
    CmtCriterion::local_homology};

std::string to_string(CmtCriterion c);
/// "def", "reisner", "local" (also accepts the full enumerator names).
CmtCriterion parse_criterion(std::string_view text);

/// Worker count for the subset and face loops. Results never depend on it.
struct Exec {
  unsigned jobs = 1;
};

/// Outcome of a CM / CM_t decision with a counterexample when it fails.
struct CmtVerdict {
  bool holds = true;
  bool impure = false;
  /// Face whose link (or local homology) violates the condition.
  std::optional<Face> face;
};

/// Outcome of a k-CM_t decision.
struct KCmtVerdict {
  bool holds = true;
  /// The removed vertex set W of the first failing restriction.
  std::optional<VertexSet> removed;
  /// Δ_{V-W} lost dimension.
  bool dimension_drop = false;
  /// Failure inside Δ_{V-W} (impurity or a witness face).
  CmtVerdict inner;
};

bool is_pure(const SimplicialComplex& complex);

/// Reisner's criterion over every face, ∅ included.
CmtVerdict check_cm(const SimplicialComplex& complex, const FieldSpec& field);
bool is_cm(const SimplicialComplex& complex, const FieldSpec& field);

/// t ≤ 0 means CM_0; t beyond every face size leaves purity alone.
CmtVerdict check_cm_t(const SimplicialComplex& complex, int t, const FieldSpec& field,
                      CmtCriterion criterion = CmtCriterion::definition_links);
bool is_cm_t(const SimplicialComplex& complex, int t, const FieldSpec& field,
             CmtCriterion criterion = CmtCriterion::definition_links);

/// CM_1.
bool is_buchsbaum(const SimplicialComplex& complex, const FieldSpec& field);

/**
 * Every restriction Δ_{V-W} with #W < k is CM_t (definition_links) of
 * dimension dim Δ, V being the support of Δ. Throws if k < 1 or
 * k > #V + 1.
 */
KCmtVerdict check_k_cm_t(const SimplicialComplex& complex, std::size_t k, int t,
                         const FieldSpec& field, Exec exec = {});
bool is_k_cm_t(const SimplicialComplex& complex, std::size_t k, int t, const FieldSpec& field,
               Exec exec = {});

/**
 * Same predicate with k capped at #V + 1. Once k exceeds #V + 1 the set of
 * admissible W no longer grows, so the cap does not change the meaning; this
 * is the total form used when k is derived rather than user supplied.
 */
bool is_k_cm_t_saturated(const SimplicialComplex& complex, std::size_t k, int t,
                         const FieldSpec& field, Exec exec = {});

/// k-CM_1.
bool is_k_buchsbaum(const SimplicialComplex& complex, std::size_t k, const FieldSpec& field,
                    Exec exec = {});

/**
 * Least t in 0..d-1 with CM_t (0 for {∅}). Throws for impure complexes.
 * Also re-checks CM_t for every larger t and throws std::logic_error if the
 * monotonicity fails.
 */
std::optional<int> min_t(const SimplicialComplex& complex, const FieldSpec& field);

/**
 * Largest k with k-CM_t, capped at #V + 1. Throws "not CM_t" when the complex
 * is not CM_t.
 */
std::size_t max_k(const SimplicialComplex& complex, int t, const FieldSpec& field,
                  Exec exec = {});

struct ClassificationReport {
  FieldSpec field = FieldSpec::prime(2);
  int dimension = -1;
  bool pure = false;
  std::optional<int> min_t;
  /// Every t in 0..d-1 at which CM_t holds, mapped to the largest k.
  std::map<int, std::size_t> max_k_per_t;
  /// CM_t per t in 0..d-1 under definition_links.
  std::map<int, bool> cm_t;
  bool criteria_agree = true;
};

ClassificationReport classify(const SimplicialComplex& complex, const FieldSpec& field,
                              Exec exec = {});

struct JoinObservation {
  std::size_t first = 0;
  std::size_t second = 0;
  std::optional<int> first_min_t;
  std::optional<int> second_min_t;
  std::optional<int> join_min_t;
};

/// min_t of each factor and of the join, for every unordered pair i < j.
std::vector<JoinObservation> explore_join(const std::vector<SimplicialComplex>& pool,
                                          const FieldSpec& field);

namespace detail {
/// Index of the first i in [0, count) with !pass(i), or count. Deterministic
/// regardless of the worker count.
std::size_t first_failure(std::size_t count, unsigned jobs,
                          const std::function<bool(std::size_t)>& pass);
} // namespace detail

} // namespace cmt
