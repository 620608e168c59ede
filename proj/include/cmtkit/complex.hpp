#pragma once

#include <cmtkit/face.hpp>

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cmt {

/**
 * A finite abstract simplicial complex stored by its facets.
 *
 * Two special values are distinct: the void complex (no faces at all, the
 * default-constructed value) and the irrelevant complex {∅} whose only face
 * is the empty face. Values are immutable; the full face list is computed on
 * first request and shared between copies.
 *
 * Complexes built with `from_facets` have dense ids 0..n-1. Complexes derived
 * by `link`, `restrict`, `skeleton` and `delete_cofaces` keep the ambient id
 * space (and labels) of their parent, so their vertex support can be a proper
 * subset of 0..n-1. The vertex set V used by k-CM_t is always the support.
 */
class SimplicialComplex {
public:
  /// The void complex.
  SimplicialComplex();

  /**
   * Canonical construction: drops non-maximal and repeated faces and compacts
   * vertex ids to 0..m-1 preserving their relative order. Ids below `n_hint`
   * that occur in no face are dropped; a note is appended to `warnings` when
   * given. `labels`, if non-empty, names the input ids and must cover them.
   */
  static SimplicialComplex from_facets(std::span<const Face> raw_faces,
                                       std::optional<std::size_t> n_hint = {},
                                       std::vector<std::string> labels = {},
                                       std::vector<std::string>* warnings = nullptr);
  static SimplicialComplex from_facets(std::initializer_list<Face> raw_faces) {
    return from_facets(std::span<const Face>(raw_faces.begin(), raw_faces.size()));
  }

  /// The complex {∅}.
  static SimplicialComplex irrelevant();

  /**
   * Builds a complex in a given ambient space without compacting ids. Faces
   * are maximalized and ordered canonically. Used by the derived operations.
   */
  static SimplicialComplex in_ambient(std::size_t n_vertices, std::vector<Face> faces,
                                      std::shared_ptr<const std::vector<std::string>> labels);

  bool is_void() const { return facets_.empty(); }
  bool is_irrelevant() const { return facets_.size() == 1 && facets_[0].empty(); }

  /// Size of the ambient id space.
  std::size_t n_vertices() const { return n_vertices_; }
  /// The vertices that lie in some face.
  VertexSet vertices() const { return support_; }

  const std::vector<Face>& facets() const { return facets_; }

  /// Maximum facet dimension; -1 for {∅}. Throws on the void complex.
  int dim() const;

  /// True iff `sigma` is a subset of some facet.
  bool contains(Face sigma) const;

  /// Every face including ∅, in canonical order. Throws on the void complex.
  const std::vector<Face>& faces() const;
  /// Faces of the given cardinality, in canonical order.
  std::vector<Face> faces_of_size(std::size_t size) const;

  /// f[i] = number of faces with i vertices, i = 0..dim+1 (f[0] = 1 for ∅).
  std::vector<std::size_t> face_counts() const;

  const std::vector<std::string>& labels() const { return *labels_; }
  const std::string& label(VertexId v) const { return labels_->at(v); }
  std::shared_ptr<const std::vector<std::string>> shared_labels() const { return labels_; }

  /// Same set of faces (ambient size and labels are not compared).
  bool operator==(const SimplicialComplex& other) const { return facets_ == other.facets_; }

private:
  struct FaceCache;

  std::size_t n_vertices_ = 0;
  std::vector<Face> facets_;
  VertexSet support_;
  std::shared_ptr<const std::vector<std::string>> labels_;
  std::shared_ptr<FaceCache> cache_;
};

/// all_faces with an optional cardinality filter.
std::vector<Face> all_faces(const SimplicialComplex& complex,
                            std::optional<std::size_t> size = {});

/// lk(σ) = {τ : τ ∪ σ ∈ Δ, τ ∩ σ = ∅}. Throws "not a face" if σ ∉ Δ.
SimplicialComplex link(const SimplicialComplex& complex, Face sigma);

/// Δ_keep: faces of Δ contained in `keep`. Nonvoid input gives at least {∅}.
SimplicialComplex restrict(const SimplicialComplex& complex, VertexSet keep);

/// Faces of dimension ≤ j. j = -1 gives {∅}; j < -1 throws.
SimplicialComplex skeleton(const SimplicialComplex& complex, int j);

/**
 * Simplicial join. The second operand's ids are shifted by
 * `first.n_vertices()`. Labels are kept; a label of the second operand that
 * collides with one of the first gets a trailing "'" appended.
 */
SimplicialComplex join(const SimplicialComplex& first, const SimplicialComplex& second);

struct DeletionResult {
  SimplicialComplex complex;
  /// σ_i ∪ σ_j ∉ Δ for all i ≠ j.
  bool unions_outside = true;
  /// dim Δ_1 < dim Δ (a void result counts as a drop).
  bool dimension_drops = false;
};

/// Δ_1 = {τ ∈ Δ : τ ⊉ σ_i for all i}, plus the two hypothesis flags.
DeletionResult delete_cofaces(const SimplicialComplex& complex, std::span<const Face> sigmas);

/// Re-index the support to 0..m-1, keeping labels.
SimplicialComplex compacted(const SimplicialComplex& complex);

/// Human-readable face using the complex's labels, e.g. "{1,3}".
std::string format_face(const SimplicialComplex& complex, Face face);

} // namespace cmt
