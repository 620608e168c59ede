#include <cmtkit/homology.hpp>

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace cmt {

std::size_t BettiVector::operator[](int degree) const {
  if (degree < first_ || degree > last_index())
    return 0;
  return values_[static_cast<std::size_t>(degree - first_)];
}

bool BettiVector::vanishes_below(int bound) const {
  for (int i = first_; i < bound && i <= last_index(); ++i)
    if ((*this)[i] != 0)
      return false;
  return true;
}

long long BettiVector::euler_characteristic() const {
  long long chi = 0;
  for (int i = first_; i <= last_index(); ++i)
    chi += ((i % 2 == 0) ? 1 : -1) * static_cast<long long>((*this)[i]);
  return chi;
}

std::string BettiVector::to_string() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < values_.size(); ++k)
    out << (k ? " " : "") << values_[k];
  return out.str();
}

namespace {

BoundaryMatrix build_boundary(const std::vector<Face>& rows, const std::vector<Face>& cols,
                              int degree) {
  BoundaryMatrix out;
  out.degree = degree;
  out.row_faces = rows;
  out.col_faces = cols;
  out.matrix = SparseIntMatrix(rows.size(), cols.size());

  std::unordered_map<Face, std::size_t, FaceHash> row_index;
  row_index.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    row_index.emplace(rows[r], r);

  for (std::size_t c = 0; c < cols.size(); ++c) {
    std::vector<SparseIntMatrix::Entry> entries;
    std::int64_t sign = 1;
    for (VertexId v : cols[c]) {
      entries.push_back({row_index.at(cols[c].without(v)), sign});
      sign = -sign;
    }
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.row < b.row; });
    out.matrix.set_column(c, std::move(entries));
  }
  return out;
}

} // namespace

BoundaryMatrix boundary_matrix(const SimplicialComplex& complex, int degree) {
  if (degree < 0)
    throw Error("boundary degree must be non-negative");
  const auto d = static_cast<std::size_t>(degree);
  return build_boundary(complex.faces_of_size(d), complex.faces_of_size(d + 1), degree);
}

BettiVector reduced_betti(const SimplicialComplex& complex, const FieldSpec& field) {
  if (complex.is_void())
    throw Error("homology of the void complex");
  const int top = complex.dim();

  // layers[s] = faces with s vertices, s = 0..top+1.
  std::vector<std::vector<Face>> layers(static_cast<std::size_t>(top + 2));
  for (Face f : complex.faces())
    layers[f.size()].push_back(f);

  // ranks[i] = rank ∂_i for i = 0..top (∂_i maps layer i+1 to layer i).
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 2), 0);
  for (int i = 0; i <= top; ++i) {
    auto idx = static_cast<std::size_t>(i);
    ranks[idx] = rank(build_boundary(layers[idx], layers[idx + 1], i).matrix, field);
  }

  std::vector<std::size_t> betti;
  betti.reserve(layers.size());
  for (int i = -1; i <= top; ++i) {
    const auto chains = layers[static_cast<std::size_t>(i + 1)].size();
    const std::size_t out_rank = i >= 0 ? ranks[static_cast<std::size_t>(i)] : 0;
    const std::size_t in_rank = ranks[static_cast<std::size_t>(i + 1)];
    betti.push_back(chains - out_rank - in_rank);
  }
  return BettiVector(-1, std::move(betti));
}

BettiVector local_betti(const SimplicialComplex& complex, Face sigma, const FieldSpec& field) {
  if (sigma.empty())
    throw Error("local homology needs a nonempty face");
  if (!complex.contains(sigma))
    throw Error("not a face");
  BettiVector of_link = reduced_betti(link(complex, sigma), field);
  const int shift = static_cast<int>(sigma.size());
  return BettiVector(of_link.first_index() + shift, of_link.values());
}

long long reduced_euler_characteristic(const SimplicialComplex& complex) {
  long long chi = 0;
  for (Face f : complex.faces())
    chi += (f.dim() % 2 == 0) ? 1 : -1;
  return chi;
}

} // namespace cmt
