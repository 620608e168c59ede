#include <cmtkit/classify.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace cmt {

std::string to_string(CmtCriterion c) {
  switch (c) {
  case CmtCriterion::definition_links:
    return "definition_links";
  case CmtCriterion::reisner_homology:
    return "reisner_homology";
  case CmtCriterion::local_homology:
    return "local_homology";
  }
  return "?";
}

CmtCriterion parse_criterion(std::string_view text) {
  if (text == "def" || text == "definition_links")
    return CmtCriterion::definition_links;
  if (text == "reisner" || text == "reisner_homology")
    return CmtCriterion::reisner_homology;
  if (text == "local" || text == "local_homology")
    return CmtCriterion::local_homology;
  throw Error("unknown criterion '" + std::string(text) + "' (expected def, reisner or local)");
}

namespace detail {

std::size_t first_failure(std::size_t count, unsigned jobs,
                          const std::function<bool(std::size_t)>& pass) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i)
      if (!pass(i))
        return i;
    return count;
  }
  // Indices are handed out in increasing order, so every index below the
  // final minimum has been evaluated by the time all workers stop.
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{count};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= best.load())
        return;
      bool ok;
      try {
        ok = pass(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error)
          error = std::current_exception();
        best.store(0);
        return;
      }
      if (!ok) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = std::min<std::size_t>(jobs, count);
  for (unsigned w = 0; w < n; ++w)
    pool.emplace_back(worker);
  for (auto& th : pool)
    th.join();
  if (error)
    std::rethrow_exception(error);
  return best.load();
}

} // namespace detail

namespace {

// Faces with at least `min_size` vertices, in canonical order.
std::vector<Face> faces_from(const SimplicialComplex& complex, std::size_t min_size) {
  const auto& all = complex.faces();
  auto first = std::partition_point(all.begin(), all.end(),
                                    [min_size](Face f) { return f.size() < min_size; });
  return {first, all.end()};
}

// Reisner's vanishing condition for a single link: H̃_i = 0 for i < dim.
// Links of dimension ≤ 0 satisfy it without computation.
bool link_homology_vanishes(const SimplicialComplex& lk, int below, const FieldSpec& field) {
  if (below <= -1)
    return true;
  if (below == 0 && !lk.is_irrelevant())
    return true;
  return reduced_betti(lk, field).vanishes_below(below);
}

} // namespace

bool is_pure(const SimplicialComplex& complex) {
  if (complex.is_void())
    throw Error("purity of the void complex");
  const auto& facets = complex.facets();
  return std::all_of(facets.begin(), facets.end(),
                     [&](Face f) { return f.size() == facets.front().size(); });
}

CmtVerdict check_cm(const SimplicialComplex& complex, const FieldSpec& field) {
  if (complex.is_void())
    throw Error("Cohen-Macaulay test on the void complex");
  for (Face sigma : complex.faces()) {
    const SimplicialComplex lk = link(complex, sigma);
    if (!link_homology_vanishes(lk, lk.dim(), field))
      return {false, false, sigma};
  }
  return {};
}

bool is_cm(const SimplicialComplex& complex, const FieldSpec& field) {
  return check_cm(complex, field).holds;
}

CmtVerdict check_cm_t(const SimplicialComplex& complex, int t, const FieldSpec& field,
                      CmtCriterion criterion) {
  if (complex.is_void())
    throw Error("CM_t test on the void complex");
  t = std::max(t, 0);
  if (!is_pure(complex))
    return {false, true, std::nullopt};
  const int d = complex.dim() + 1;

  switch (criterion) {
  case CmtCriterion::definition_links:
    // lk(τ, lk σ) = lk(σ ∪ τ), so the inner witness lifts to a face of Δ.
    for (Face sigma : faces_from(complex, static_cast<std::size_t>(t))) {
      const CmtVerdict inner = check_cm(link(complex, sigma), field);
      if (!inner.holds)
        return {false, false, sigma | inner.face.value_or(Face{})};
    }
    return {};

  case CmtCriterion::reisner_homology:
    for (Face sigma : faces_from(complex, static_cast<std::size_t>(t))) {
      const int bound = d - static_cast<int>(sigma.size()) - 1;
      if (!link_homology_vanishes(link(complex, sigma), bound, field))
        return {false, false, sigma};
    }
    return {};

  case CmtCriterion::local_homology:
    if (t == 0 && !reduced_betti(complex, field).vanishes_below(d - 1))
      return {false, false, Face{}};
    for (Face sigma : faces_from(complex, static_cast<std::size_t>(std::max(t, 1))))
      if (!local_betti(complex, sigma, field).vanishes_below(d - 1))
        return {false, false, sigma};
    return {};
  }
  throw std::logic_error("unhandled criterion");
}

bool is_cm_t(const SimplicialComplex& complex, int t, const FieldSpec& field,
             CmtCriterion criterion) {
  return check_cm_t(complex, t, field, criterion).holds;
}

bool is_buchsbaum(const SimplicialComplex& complex, const FieldSpec& field) {
  return is_cm_t(complex, 1, field);
}

namespace {

// Removal sets W ⊆ V with #W < k: by size, then canonical order.
std::vector<VertexSet> removal_sets(VertexSet support, std::size_t k) {
  std::vector<VertexSet> out;
  for (std::size_t j = 0; j < k && j <= support.size(); ++j) {
    auto level = subsets_of_size(support, j);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

KCmtVerdict check_removal(const SimplicialComplex& complex, VertexSet removed, int t,
                          const FieldSpec& field) {
  KCmtVerdict v;
  const SimplicialComplex rest = restrict(complex, complex.vertices() - removed);
  if (rest.dim() != complex.dim()) {
    v.holds = false;
    v.removed = removed;
    v.dimension_drop = true;
    return v;
  }
  v.inner = check_cm_t(rest, t, field, CmtCriterion::definition_links);
  if (!v.inner.holds) {
    v.holds = false;
    v.removed = removed;
  }
  return v;
}

KCmtVerdict check_k_cm_t_unchecked(const SimplicialComplex& complex, std::size_t k, int t,
                                   const FieldSpec& field, Exec exec) {
  const auto sets = removal_sets(complex.vertices(), k);
  const std::size_t bad = detail::first_failure(sets.size(), exec.jobs, [&](std::size_t i) {
    return check_removal(complex, sets[i], t, field).holds;
  });
  if (bad == sets.size())
    return {};
  return check_removal(complex, sets[bad], t, field);
}

} // namespace

KCmtVerdict check_k_cm_t(const SimplicialComplex& complex, std::size_t k, int t,
                         const FieldSpec& field, Exec exec) {
  if (complex.is_void())
    throw Error("k-CM_t test on the void complex");
  if (k < 1)
    throw Error("k must be positive");
  if (k > complex.vertices().size() + 1)
    throw Error("k exceeds vertex budget");
  return check_k_cm_t_unchecked(complex, k, t, field, exec);
}

bool is_k_cm_t(const SimplicialComplex& complex, std::size_t k, int t, const FieldSpec& field,
               Exec exec) {
  return check_k_cm_t(complex, k, t, field, exec).holds;
}

bool is_k_cm_t_saturated(const SimplicialComplex& complex, std::size_t k, int t,
                         const FieldSpec& field, Exec exec) {
  if (complex.is_void())
    throw Error("k-CM_t test on the void complex");
  if (k < 1)
    throw Error("k must be positive");
  k = std::min(k, complex.vertices().size() + 1);
  return check_k_cm_t_unchecked(complex, k, t, field, exec).holds;
}

bool is_k_buchsbaum(const SimplicialComplex& complex, std::size_t k, const FieldSpec& field,
                    Exec exec) {
  return is_k_cm_t(complex, k, 1, field, exec);
}

std::optional<int> min_t(const SimplicialComplex& complex, const FieldSpec& field) {
  if (!is_pure(complex))
    throw Error("min_t undefined for impure complexes");
  const int last = std::max(complex.dim(), 0);
  std::optional<int> found;
  for (int t = 0; t <= last; ++t) {
    const bool holds = is_cm_t(complex, t, field);
    if (!found && holds)
      found = t;
    else if (found && !holds)
      throw std::logic_error("CM_" + std::to_string(*found) + " holds but CM_" +
                             std::to_string(t) + " fails");
  }
  if (!found)
    throw std::logic_error("pure complex is not CM_t for any t up to d-1");
  return found;
}

std::size_t max_k(const SimplicialComplex& complex, int t, const FieldSpec& field, Exec exec) {
  if (!is_cm_t(complex, t, field))
    throw Error("not CM_t");
  const VertexSet support = complex.vertices();
  // k-CM_t holds iff every W with #W ≤ k-1 passes, so the answer is the size
  // of the smallest failing W.
  for (std::size_t j = 1; j <= support.size(); ++j) {
    const auto level = subsets_of_size(support, j);
    const std::size_t bad = detail::first_failure(level.size(), exec.jobs, [&](std::size_t i) {
      return check_removal(complex, level[i], t, field).holds;
    });
    if (bad != level.size())
      return j;
  }
  return support.size() + 1;
}

ClassificationReport classify(const SimplicialComplex& complex, const FieldSpec& field,
                              Exec exec) {
  ClassificationReport report;
  report.field = field;
  report.dimension = complex.dim();
  report.pure = is_pure(complex);
  const int last = std::max(report.dimension, 0);

  for (int t = 0; t <= last; ++t) {
    const bool by_def = is_cm_t(complex, t, field, CmtCriterion::definition_links);
    const bool by_reisner = is_cm_t(complex, t, field, CmtCriterion::reisner_homology);
    const bool by_local = is_cm_t(complex, t, field, CmtCriterion::local_homology);
    if (by_def != by_reisner || by_def != by_local)
      report.criteria_agree = false;
    report.cm_t[t] = by_def;
  }
  if (!report.pure)
    return report;

  report.min_t = min_t(complex, field);
  for (const auto& [t, holds] : report.cm_t)
    if (holds)
      report.max_k_per_t[t] = max_k(complex, t, field, exec);
  return report;
}

std::vector<JoinObservation> explore_join(const std::vector<SimplicialComplex>& pool,
                                          const FieldSpec& field) {
  auto safe_min_t = [&](const SimplicialComplex& c) -> std::optional<int> {
    if (c.is_void() || !is_pure(c))
      return std::nullopt;
    return min_t(c, field);
  };
  std::vector<std::optional<int>> factor_t;
  factor_t.reserve(pool.size());
  for (const auto& c : pool)
    factor_t.push_back(safe_min_t(c));

  std::vector<JoinObservation> rows;
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j)
      rows.push_back({i, j, factor_t[i], factor_t[j], safe_min_t(join(pool[i], pool[j]))});
  return rows;
}

} // namespace cmt
