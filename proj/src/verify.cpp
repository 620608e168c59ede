#include <cmtkit/verify.hpp>

#include <cmtkit/generators.hpp>
#include <cmtkit/io.hpp>

#include <functional>
#include <map>
#include <random>

namespace cmt::verify {

std::vector<CorpusEntry> build_corpus(const CorpusOptions& options) {
  std::vector<CorpusEntry> corpus;
  for (std::size_t d = 2; d <= 5; ++d)
    for (int t = 1; t <= static_cast<int>(d) - 1; ++t)
      corpus.push_back({"glued_d" + std::to_string(d) + "_t" + std::to_string(t),
                        gen::glued_simplices(gen::GluedFamilySpec::uniform(d, 2, t - 2))});
  corpus.push_back({"glued_d3_m3_o0", gen::glued_simplices(gen::GluedFamilySpec::uniform(3, 3, 0))});
  corpus.push_back({"glued_d4_m3_o0", gen::glued_simplices(gen::GluedFamilySpec::uniform(4, 3, 0))});

  for (std::size_t n = 2; n <= std::min<std::size_t>(options.max_n, 6); ++n)
    corpus.push_back({"boundary_simplex_" + std::to_string(n), gen::boundary_simplex(n)});
  corpus.push_back({"simplex_3", gen::simplex(3)});
  corpus.push_back({"cycle_5", gen::cycle(5)});
  corpus.push_back({"miyazaki_base", gen::miyazaki_base()});
  if (options.max_n >= 7)
    corpus.push_back({"miyazaki", gen::miyazaki_example().complex});
  if (options.max_n >= 6)
    corpus.push_back({"rp2_6", gen::projective_plane_6()});

  for (std::size_t i = 0; i < options.random_count; ++i) {
    const std::uint64_t seed = options.seed + i;
    std::mt19937_64 params(seed ^ 0x9e3779b97f4a7c15ULL);
    const std::size_t top = std::max<std::size_t>(options.max_n, 3);
    const std::size_t n = 3 + params() % (top - 2);
    const std::size_t d = 1 + params() % std::min<std::size_t>(n, 4);
    const double density = 0.3 + 0.1 * static_cast<double>(params() % 7);
    corpus.push_back({"random_n" + std::to_string(n) + "_d" + std::to_string(d) + "_s" +
                          std::to_string(seed),
                      gen::random_pure(n, d, density, seed)});
  }
  return corpus;
}

namespace {

struct Recorder {
  SuiteResult& result;
  const CorpusEntry& entry;
  void check(bool ok, const std::function<std::string()>& detail) {
    ++result.cases;
    if (!ok)
      result.failures.push_back({entry.name, entry.complex, detail()});
  }
};

std::string face_str(const SimplicialComplex& c, Face f) { return format_face(c, f); }

int top_t(const SimplicialComplex& c) { return std::max(c.dim(), 0); }

void link_laws(const CorpusEntry& e, Recorder& rec, const FieldSpec&, Exec) {
  const auto& c = e.complex;
  for (Face sigma : c.faces()) {
    const SimplicialComplex lk = link(c, sigma);
    for (Face tau : lk.faces())
      rec.check(link(lk, tau) == link(c, sigma | tau), [&] {
        return "lk_lk(" + face_str(c, sigma) + ")(" + face_str(c, tau) + ") != lk(union)";
      });
  }

  const VertexSet v = c.vertices();
  const std::size_t max_w = v.size() <= 7 ? v.size() : 2;
  for (std::size_t j = 0; j <= max_w; ++j)
    for (VertexSet w : subsets_of_size(v, j))
      for (Face sigma : c.faces()) {
        if (sigma.intersects(w))
          continue;
        rec.check(link(restrict(c, v - w), sigma) == restrict(link(c, sigma), v - w), [&] {
          return "restriction/link mismatch at sigma=" + face_str(c, sigma) +
                 " W=" + face_str(c, w);
        });
      }

  for (int j = -1; j <= c.dim(); ++j) {
    const SimplicialComplex s = skeleton(c, j);
    rec.check(skeleton(s, j) == s, [&] { return "skeleton not idempotent at j=" + std::to_string(j); });
    const SimplicialComplex bigger = skeleton(c, j + 1);
    bool monotone = true;
    for (Face f : s.facets())
      monotone = monotone && bigger.contains(f);
    rec.check(monotone, [&] { return "skeleton not monotone at j=" + std::to_string(j); });
  }
  rec.check(skeleton(c, c.dim()) == c, [] { return "top skeleton differs"; });

  const SimplicialComplex canon = compacted(c);
  rec.check(SimplicialComplex::from_facets(canon.facets()) == canon,
            [] { return "from_facets not idempotent"; });
  rec.check(io::parse_facets(io::emit_facets(canon)) == canon,
            [] { return "facet file round trip differs"; });

  const SimplicialComplex point = gen::simplex(1);
  const SimplicialComplex edge = gen::simplex(2);
  const SimplicialComplex j1 = join(c, point);
  rec.check(j1.dim() == c.dim() + 1, [] { return "join dimension"; });
  rec.check(join(join(c, point), edge) == join(c, join(point, edge)),
            [] { return "join not associative"; });
  rec.check(join(c, SimplicialComplex::irrelevant()) == c, [] { return "{∅} is not a join unit"; });
}

void criteria_equivalence(const CorpusEntry& e, Recorder& rec, const FieldSpec& field, Exec) {
  const auto& c = e.complex;
  for (int t = 0; t <= top_t(c); ++t) {
    const bool a = is_cm_t(c, t, field, CmtCriterion::definition_links);
    const bool b = is_cm_t(c, t, field, CmtCriterion::reisner_homology);
    const bool l = is_cm_t(c, t, field, CmtCriterion::local_homology);
    rec.check(a == b && b == l, [&] {
      return "t=" + std::to_string(t) + " def=" + std::to_string(a) +
             " reisner=" + std::to_string(b) + " local=" + std::to_string(l);
    });
  }
}

// Vertex-link recursion; the equivalence is claimed for t ≥ 1.
void link_recursion(const CorpusEntry& e, Recorder& rec, const FieldSpec& field, Exec) {
  const auto& c = e.complex;
  for (int t = 1; t <= top_t(c) + 1; ++t) {
    bool rhs = is_pure(c);
    for (VertexId x : c.vertices())
      rhs = rhs && is_cm_t(link(c, Face::of({x})), t - 1, field);
    const bool lhs = is_cm_t(c, t, field);
    rec.check(lhs == rhs, [&] {
      return "t=" + std::to_string(t) + " CM_t=" + std::to_string(lhs) +
             " via vertex links=" + std::to_string(rhs);
    });
  }
}

void k_link_recursion(const CorpusEntry& e, Recorder& rec, const FieldSpec& field, Exec exec) {
  const auto& c = e.complex;
  if (!is_pure(c))
    return;
  std::vector<Face> nonempty(c.faces().begin() + 1, c.faces().end());
  for (std::size_t k = 1; k <= 3; ++k) {
    for (int t = 1; t <= top_t(c); ++t) {
      const bool lhs = is_k_cm_t_saturated(c, k, t, field, exec);
      bool rhs = true;
      for (Face sigma : nonempty)
        rhs = rhs && is_k_cm_t_saturated(link(c, sigma), k, t - 1, field, exec);
      rec.check(lhs == rhs, [&] {
        return "k=" + std::to_string(k) + " t=" + std::to_string(t) +
               " k-CM_t=" + std::to_string(lhs) + " via links=" + std::to_string(rhs);
      });
    }
    for (int t = 0; t <= top_t(c); ++t) {
      const bool holds = is_k_cm_t_saturated(c, k, t, field, exec);
      if (holds)
        for (Face sigma : nonempty) {
          const int s = static_cast<int>(sigma.size());
          rec.check(is_k_cm_t_saturated(link(c, sigma), k, t - s, field, exec), [&] {
            return "link drop: k=" + std::to_string(k) + " t=" + std::to_string(t) +
                   " sigma=" + face_str(c, sigma);
          });
        }
      // (k-CM)_t: every link of a face with #σ ≥ t is k-Cohen-Macaulay.
      bool remark = true;
      for (Face sigma : c.faces())
        if (static_cast<int>(sigma.size()) >= t)
          remark = remark && is_k_cm_t_saturated(link(c, sigma), k, 0, field, exec);
      rec.check(holds == remark, [&] {
        return "(k-CM)_t mismatch: k=" + std::to_string(k) + " t=" + std::to_string(t);
      });
    }
  }
}

void deletion_theorem(const CorpusEntry& e, Recorder& rec, const FieldSpec& field, Exec exec) {
  const auto& c = e.complex;
  if (c.dim() < 0)
    return;
  const std::vector<Face> candidates(c.faces().begin() + 1, c.faces().end());

  std::vector<std::vector<Face>> families;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    families.push_back({candidates[i]});
    for (std::size_t j = i + 1; j < candidates.size(); ++j)
      if (!c.contains(candidates[i] | candidates[j]))
        families.push_back({candidates[i], candidates[j]});
  }

  for (int t = 0; t <= top_t(c); ++t) {
    if (!is_cm_t(c, t, field))
      continue;
    std::map<Face, bool, CanonicalLess> link_ok;
    auto link_is_2cm = [&](Face s) {
      auto it = link_ok.find(s);
      if (it == link_ok.end())
        it = link_ok.emplace(s, is_k_cm_t_saturated(link(c, s), 2, t - 1, field, exec)).first;
      return it->second;
    };
    for (const auto& sigmas : families) {
      DeletionResult del = delete_cofaces(c, sigmas);
      if (!del.unions_outside || !del.dimension_drops)
        continue;
      bool admissible = true;
      for (Face s : sigmas)
        admissible = admissible && link_is_2cm(s);
      if (!admissible)
        continue;
      const bool holds = !del.complex.is_void() && del.complex.dim() == c.dim() - 1 &&
                         is_k_cm_t_saturated(del.complex, 2, t, field, exec);
      rec.check(holds, [&] {
        std::string names;
        for (Face s : sigmas)
          names += face_str(c, s);
        return "t=" + std::to_string(t) + " sigmas=" + names + ": deletion is not 2-CM_t";
      });
    }
  }
}

void skeleton_theorem(const CorpusEntry& e, Recorder& rec, const FieldSpec& field, Exec exec) {
  const auto& c = e.complex;
  if (!is_pure(c) || c.dim() < 0)
    return;
  const int d = c.dim() + 1;
  for (int t = 0; t <= d - 1; ++t) {
    if (!is_cm_t(c, t, field))
      continue;
    const std::size_t k = max_k(c, t, field, exec);
    for (int s = 1; s <= std::min(2, d); ++s) {
      const SimplicialComplex skel = skeleton(c, d - s - 1);
      rec.check(is_k_cm_t_saturated(skel, k + static_cast<std::size_t>(s), t, field, exec), [&] {
        return "t=" + std::to_string(t) + " k=" + std::to_string(k) + " s=" + std::to_string(s) +
               ": skeleton is not (k+s)-CM_t";
      });
    }
  }
}

void monotonicity(const CorpusEntry& e, Recorder& rec, const FieldSpec& field, Exec exec) {
  const auto& c = e.complex;
  for (int t = 0; t <= top_t(c); ++t)
    if (is_cm_t(c, t, field))
      rec.check(is_cm_t(c, t + 1, field), [&] {
        return "CM_" + std::to_string(t) + " without CM_" + std::to_string(t + 1);
      });
  for (int t = 0; t <= top_t(c); ++t) {
    bool previous = true;
    for (std::size_t k = 1; k <= c.vertices().size() + 1; ++k) {
      const bool now = is_k_cm_t(c, k, t, field, exec);
      rec.check(previous || !now, [&] {
        return std::to_string(k) + "-CM_" + std::to_string(t) + " without " +
               std::to_string(k - 1) + "-CM_" + std::to_string(t);
      });
      previous = now;
    }
  }
}

void paper_fixtures(SuiteResult& result, const FieldSpec& field, Exec exec) {
  auto record = [&](const std::string& name, const SimplicialComplex& c, bool ok,
                    const std::string& detail) {
    ++result.cases;
    if (!ok)
      result.failures.push_back({name, c, detail});
  };

  for (std::size_t d = 2; d <= 5; ++d)
    for (int t = 1; t <= static_cast<int>(d) - 1; ++t) {
      const auto c = gen::glued_simplices(gen::GluedFamilySpec::uniform(d, 2, t - 2));
      const auto got = min_t(c, field);
      record("glued_d" + std::to_string(d) + "_t" + std::to_string(t), c, got == t,
             "min_t=" + (got ? std::to_string(*got) : std::string("none")) +
                 " expected " + std::to_string(t));
    }

  const auto gamma = gen::glued_simplices(gen::GluedFamilySpec::uniform(4, 3, 0));
  record("glued_d4_m3_o0", gamma, is_cm_t(gamma, 2, field) && !is_cm_t(gamma, 1, field),
         "expected CM_2 and not CM_1");

  const auto ex = gen::miyazaki_example();
  record("miyazaki", ex.complex, is_cm(ex.complex, field), "expected Cohen-Macaulay");
  const auto lk = link(ex.complex, ex.sigma);
  record("miyazaki_link", lk, compacted(lk) == gen::miyazaki_base(), "link of {x,y} is not Δ_1");
  record("miyazaki_link", lk,
         is_k_cm_t(lk, 2, 1, field, exec) && !is_k_cm_t(lk, 2, 0, field, exec),
         "expected 2-CM_1 and not 2-CM_0");
  const Face sigma = ex.sigma;
  const auto del = delete_cofaces(ex.complex, std::span<const Face>(&sigma, 1));
  record("miyazaki_deletion", del.complex, !is_k_cm_t(del.complex, 2, 1, field, exec),
         "expected not 2-CM_1");

  for (std::size_t d : {3u, 4u}) {
    const auto sphere = gen::boundary_simplex(d + 1);
    record("boundary_simplex_" + std::to_string(d + 1), sphere, is_k_cm_t(sphere, 2, 0, field, exec),
           "expected 2-CM_0");
    for (int s = 1; s <= 2; ++s) {
      const auto skel = skeleton(sphere, static_cast<int>(d) - 1 - s);
      record("boundary_simplex_" + std::to_string(d + 1) + "_skeleton_s" + std::to_string(s), skel,
             is_k_cm_t(skel, 2 + static_cast<std::size_t>(s), 0, field, exec),
             "expected (2+s)-CM_0");
    }
  }

  const auto rp2 = gen::projective_plane_6();
  record("rp2_6", rp2,
         !is_cm(rp2, FieldSpec::prime(2)) && is_cm(rp2, FieldSpec::prime(3)) &&
             is_cm(rp2, FieldSpec::rationals()),
         "expected CM over GF(3) and Q only");
}

using SuiteFn = void (*)(const CorpusEntry&, Recorder&, const FieldSpec&, Exec);

const std::map<std::string, SuiteFn, std::less<>>& per_complex_suites() {
  static const std::map<std::string, SuiteFn, std::less<>> table = {
      {"link_laws", link_laws},
      {"criteria_equivalence", criteria_equivalence},
      {"link_recursion", link_recursion},
      {"k_link_recursion", k_link_recursion},
      {"deletion_theorem", deletion_theorem},
      {"skeleton_theorem", skeleton_theorem},
      {"monotonicity", monotonicity},
  };
  return table;
}

} // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "link_laws",        "criteria_equivalence", "link_recursion", "k_link_recursion",
      "deletion_theorem", "skeleton_theorem",     "monotonicity",   "paper_fixtures"};
  return names;
}

SuiteResult run_suite(std::string_view name, const std::vector<CorpusEntry>& corpus,
                      const FieldSpec& field, Exec exec) {
  SuiteResult result;
  result.suite = std::string(name);
  if (name == "paper_fixtures") {
    paper_fixtures(result, field, exec);
    return result;
  }
  const auto& table = per_complex_suites();
  auto it = table.find(name);
  if (it == table.end())
    throw Error("unknown suite '" + std::string(name) + "'");
  for (const auto& entry : corpus) {
    Recorder rec{result, entry};
    it->second(entry, rec, field, exec);
  }
  return result;
}

} // namespace cmt::verify
