#include <cmtkit/complex.hpp>

#include <algorithm>
#include <mutex>
#include <set>
#include <unordered_set>

namespace cmt {

struct SimplicialComplex::FaceCache {
  std::once_flag once;
  std::vector<Face> faces;
};

std::vector<Face> subsets_of_size(Face ground, std::size_t k) {
  std::vector<Face> out;
  const auto members = ground.vertices();
  const std::size_t n = members.size();
  if (k > n)
    return out;
  // Gosper's hack over positions within `members`.
  if (k == 0) {
    out.push_back(Face{});
    return out;
  }
  std::uint64_t pos = (k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = (n == 64) ? 0 : (std::uint64_t{1} << n);
  while (true) {
    std::uint64_t bits = 0;
    for (std::uint64_t p = pos; p; p &= p - 1)
      bits |= std::uint64_t{1} << members[std::countr_zero(p)];
    out.push_back(Face::from_bits(bits));
    const std::uint64_t c = pos & (~pos + 1);
    const std::uint64_t r = pos + c;
    if (r == 0)
      break;
    pos = (((r ^ pos) >> 2) / c) | r;
    if (limit != 0 && pos >= limit)
      break;
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

namespace {

std::vector<Face> maximal_faces(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end(),
            [](Face a, Face b) { return a.size() > b.size() || (a.size() == b.size() && a.bits() < b.bits()); });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<Face> kept;
  for (Face f : faces) {
    bool covered = std::any_of(kept.begin(), kept.end(),
                               [f](Face g) { return f.is_subset_of(g); });
    if (!covered)
      kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end(), CanonicalLess{});
  return kept;
}

std::shared_ptr<const std::vector<std::string>> numeric_labels(std::size_t n) {
  auto labels = std::make_shared<std::vector<std::string>>();
  labels->reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    labels->push_back(std::to_string(i));
  return labels;
}

} // namespace

SimplicialComplex::SimplicialComplex()
    : labels_(std::make_shared<const std::vector<std::string>>()),
      cache_(std::make_shared<FaceCache>()) {}

SimplicialComplex SimplicialComplex::in_ambient(
    std::size_t n_vertices, std::vector<Face> faces,
    std::shared_ptr<const std::vector<std::string>> labels) {
  SimplicialComplex c;
  c.n_vertices_ = n_vertices;
  c.facets_ = maximal_faces(std::move(faces));
  for (Face f : c.facets_) {
    if (f.span_end() > n_vertices)
      throw Error("face uses a vertex outside the ambient space");
    c.support_ = c.support_ | f;
  }
  c.labels_ = labels ? std::move(labels) : numeric_labels(n_vertices);
  if (c.labels_->size() < n_vertices)
    throw Error("label table smaller than the ambient vertex space");
  return c;
}

SimplicialComplex SimplicialComplex::irrelevant() {
  return in_ambient(0, {Face{}}, nullptr);
}

SimplicialComplex SimplicialComplex::from_facets(std::span<const Face> raw_faces,
                                                 std::optional<std::size_t> n_hint,
                                                 std::vector<std::string> labels,
                                                 std::vector<std::string>* warnings) {
  if (raw_faces.empty())
    return SimplicialComplex();

  Face support;
  for (Face f : raw_faces)
    support = support | f;
  const std::size_t input_span = std::max<std::size_t>(support.span_end(), n_hint.value_or(0));
  if (!labels.empty() && labels.size() < input_span)
    throw Error("label table does not cover every vertex id");

  // Old id -> new dense id.
  std::vector<VertexId> remap(input_span, 0);
  auto new_labels = std::make_shared<std::vector<std::string>>();
  VertexId next = 0;
  for (std::size_t v = 0; v < input_span; ++v) {
    if (support.contains(static_cast<VertexId>(v))) {
      remap[v] = next++;
      new_labels->push_back(labels.empty() ? std::to_string(v) : labels[v]);
    } else if (warnings) {
      warnings->push_back("vertex " + (labels.empty() ? std::to_string(v) : labels[v]) +
                          " lies in no face and was dropped");
    }
  }

  std::vector<Face> faces;
  faces.reserve(raw_faces.size());
  for (Face f : raw_faces) {
    std::uint64_t bits = 0;
    for (VertexId v : f)
      bits |= std::uint64_t{1} << remap[v];
    faces.push_back(Face::from_bits(bits));
  }
  return in_ambient(next, std::move(faces), std::move(new_labels));
}

int SimplicialComplex::dim() const {
  if (is_void())
    throw Error("dimension of the void complex is undefined");
  int d = -1;
  for (Face f : facets_)
    d = std::max(d, f.dim());
  return d;
}

bool SimplicialComplex::contains(Face sigma) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [sigma](Face f) { return sigma.is_subset_of(f); });
}

const std::vector<Face>& SimplicialComplex::faces() const {
  if (is_void())
    throw Error("void complex has no faces");
  std::call_once(cache_->once, [this] {
    std::unordered_set<Face, FaceHash> seen;
    std::vector<Face> out;
    for (Face facet : facets_)
      for_each_subset(facet, [&](Face sub) {
        if (seen.insert(sub).second)
          out.push_back(sub);
      });
    std::sort(out.begin(), out.end(), CanonicalLess{});
    cache_->faces = std::move(out);
  });
  return cache_->faces;
}

std::vector<Face> SimplicialComplex::faces_of_size(std::size_t size) const {
  const auto& all = faces();
  auto first = std::partition_point(all.begin(), all.end(),
                                    [size](Face f) { return f.size() < size; });
  auto last = std::partition_point(first, all.end(),
                                   [size](Face f) { return f.size() <= size; });
  return {first, last};
}

std::vector<std::size_t> SimplicialComplex::face_counts() const {
  std::vector<std::size_t> counts(static_cast<std::size_t>(dim() + 2), 0);
  for (Face f : faces())
    ++counts[f.size()];
  return counts;
}

std::vector<Face> all_faces(const SimplicialComplex& complex, std::optional<std::size_t> size) {
  if (size)
    return complex.faces_of_size(*size);
  return complex.faces();
}

SimplicialComplex link(const SimplicialComplex& complex, Face sigma) {
  std::vector<Face> pieces;
  for (Face f : complex.facets())
    if (sigma.is_subset_of(f))
      pieces.push_back(f - sigma);
  if (pieces.empty())
    throw Error("not a face");
  return SimplicialComplex::in_ambient(complex.n_vertices(), std::move(pieces),
                                       complex.shared_labels());
}

SimplicialComplex restrict(const SimplicialComplex& complex, VertexSet keep) {
  if (complex.is_void())
    return complex;
  std::vector<Face> pieces;
  pieces.reserve(complex.facets().size());
  for (Face f : complex.facets())
    pieces.push_back(f & keep);
  return SimplicialComplex::in_ambient(complex.n_vertices(), std::move(pieces),
                                       complex.shared_labels());
}

SimplicialComplex skeleton(const SimplicialComplex& complex, int j) {
  if (j < -1)
    throw Error("skeleton dimension must be at least -1");
  if (complex.is_void())
    throw Error("skeleton of the void complex");
  const auto width = static_cast<std::size_t>(j + 1);
  std::vector<Face> pieces;
  for (Face f : complex.facets()) {
    if (f.size() <= width) {
      pieces.push_back(f);
    } else {
      auto subs = subsets_of_size(f, width);
      pieces.insert(pieces.end(), subs.begin(), subs.end());
    }
  }
  return SimplicialComplex::in_ambient(complex.n_vertices(), std::move(pieces),
                                       complex.shared_labels());
}

SimplicialComplex join(const SimplicialComplex& first, const SimplicialComplex& second) {
  if (first.is_void() || second.is_void())
    throw Error("join with the void complex");
  const std::size_t offset = first.n_vertices();
  const std::size_t total = offset + second.n_vertices();
  if (total > kMaxVertices)
    throw Error("join exceeds the " + std::to_string(kMaxVertices) + "-vertex limit");

  auto labels = std::make_shared<std::vector<std::string>>(first.labels());
  std::set<std::string> taken(labels->begin(), labels->end());
  for (const auto& name : second.labels()) {
    std::string candidate = name;
    while (taken.count(candidate))
      candidate += "'";
    taken.insert(candidate);
    labels->push_back(candidate);
  }

  std::vector<Face> pieces;
  for (Face f : first.facets())
    for (Face g : second.facets())
      pieces.push_back(f | Face::from_bits(g.bits() << offset));
  return SimplicialComplex::in_ambient(total, std::move(pieces), std::move(labels));
}

namespace {

// Maximal subsets of `face` containing none of `sigmas`.
void avoiding_subsets(Face face, std::span<const Face> sigmas, std::vector<Face>& out) {
  for (Face s : sigmas) {
    if (s.is_subset_of(face)) {
      for (VertexId v : s)
        avoiding_subsets(face.without(v), sigmas, out);
      return;
    }
  }
  out.push_back(face);
}

} // namespace

DeletionResult delete_cofaces(const SimplicialComplex& complex, std::span<const Face> sigmas) {
  for (Face s : sigmas)
    if (!complex.contains(s))
      throw Error("not a face");

  DeletionResult result;
  for (std::size_t i = 0; i < sigmas.size(); ++i)
    for (std::size_t j = i + 1; j < sigmas.size(); ++j)
      if (complex.contains(sigmas[i] | sigmas[j]))
        result.unions_outside = false;

  std::vector<Face> pieces;
  for (Face f : complex.facets())
    avoiding_subsets(f, sigmas, pieces);
  result.complex = SimplicialComplex::in_ambient(complex.n_vertices(), std::move(pieces),
                                                 complex.shared_labels());
  result.dimension_drops = result.complex.is_void() || result.complex.dim() < complex.dim();
  return result;
}

SimplicialComplex compacted(const SimplicialComplex& complex) {
  if (complex.is_void())
    return complex;
  return SimplicialComplex::from_facets(complex.facets(), complex.n_vertices(), complex.labels());
}

std::string format_face(const SimplicialComplex& complex, Face face) {
  std::string out = "{";
  bool first = true;
  for (VertexId v : face) {
    if (!first)
      out += ",";
    first = false;
    out += v < complex.labels().size() ? complex.label(v) : std::to_string(v);
  }
  return out + "}";
}

} // namespace cmt
