// cmtkit: command-line front end for the CM_t / k-CM_t toolkit.
//
// Exit codes: 0 property holds / success, 1 property fails, 2 usage or input
// error. Machine-readable reports are JSON objects carrying "schema": 1.

#include <cmtkit/classify.hpp>
#include <cmtkit/generators.hpp>
#include <cmtkit/homology.hpp>
#include <cmtkit/io.hpp>
#include <cmtkit/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;
using namespace cmt;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;

// Inputs that fail validation before any file is touched.
class UsageError : public Error {
  using Error::Error;
};

json face_json(const SimplicialComplex& c, Face f) {
  json out = json::array();
  for (VertexId v : f)
    out.push_back(c.label(v));
  return out;
}

SimplicialComplex load(const std::string& path) {
  std::vector<std::string> warnings;
  SimplicialComplex c = io::read_complex_file(path, &warnings);
  for (const auto& w : warnings)
    std::cerr << "warning: " << path << ": " << w << "\n";
  return c;
}

void require_nonvoid(const SimplicialComplex& c, const std::string& path) {
  if (c.is_void())
    throw Error(path + ": the void complex has no faces");
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out)
    throw Error("cannot write '" + out_path + "'");
  out << text;
}

Face parse_face(const SimplicialComplex& c, const std::string& text) {
  std::istringstream in(text);
  std::string name;
  Face f;
  while (in >> name) {
    bool found = false;
    for (VertexId v = 0; v < c.n_vertices(); ++v)
      if (c.label(v) == name && c.vertices().contains(v)) {
        f = f.with(v);
        found = true;
        break;
      }
    if (!found)
      throw Error("unknown vertex label '" + name + "'");
  }
  return f;
}

json cm_verdict_json(const SimplicialComplex& c, const CmtVerdict& v) {
  json out;
  out["ok"] = v.holds;
  json witnesses = json::array();
  if (!v.holds) {
    if (v.impure)
      out["reason"] = "purity";
    if (v.face) {
      out["reason"] = "link";
      witnesses.push_back({{"kind", "face"}, {"face", face_json(c, *v.face)}});
    }
  }
  out["witnesses"] = witnesses;
  return out;
}

json report_json(const ClassificationReport& r) {
  json out;
  out["schema"] = 1;
  out["command"] = "classify";
  out["field"] = r.field.name();
  out["dimension"] = r.dimension;
  out["pure"] = r.pure;
  out["min_t"] = r.min_t ? json(*r.min_t) : json(nullptr);
  json cm = json::object();
  for (const auto& [t, holds] : r.cm_t)
    cm[std::to_string(t)] = holds;
  out["cm_t"] = cm;
  json ks = json::object();
  for (const auto& [t, k] : r.max_k_per_t)
    ks[std::to_string(t)] = k;
  out["max_k_per_t"] = ks;
  out["criteria_agree"] = r.criteria_agree;
  return out;
}

std::uint64_t env_seed(std::uint64_t fallback) {
  if (const char* s = std::getenv("CMTKIT_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw UsageError("CMTKIT_SEED must be an unsigned integer");
    }
  }
  return fallback;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohen-Macaulay type properties of finite simplicial complexes"};
  app.require_subcommand(1);

  std::string field_text = "gf2";
  std::string out_path;
  unsigned jobs = 1;
  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--field", field_text, "Coefficient field: gf<p> or q")->capture_default_str();
  };
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  };

  std::string file, file2;
  std::vector<std::string> files;

  auto* homology = app.add_subcommand("homology", "Reduced Betti numbers b[-1..dim]");
  homology->add_option("file", file)->required();
  add_field(homology);
  bool homology_json = false;
  homology->add_flag("--json", homology_json, "Print a JSON object instead of a line");

  int t = 0;
  std::size_t k = 1;
  std::string criterion_text = "def";
  auto* check = app.add_subcommand("check", "Decide k-CM_t (k=1: CM_t)");
  check->add_option("file", file)->required();
  check->add_option("--t", t, "t (values <= 0 mean CM_0)");
  check->add_option("--k", k, "k >= 1")->check(CLI::PositiveNumber);
  check->add_option("--criterion", criterion_text, "def|reisner|local (k = 1 only)");
  add_field(check);
  add_jobs(check);

  auto* classify_cmd = app.add_subcommand("classify", "Full classification report as JSON");
  classify_cmd->add_option("file", file)->required();
  add_field(classify_cmd);
  add_jobs(classify_cmd);

  std::string face_text;
  auto* link_cmd = app.add_subcommand("link", "Link of a face");
  link_cmd->add_option("file", file)->required();
  link_cmd->add_option("--face", face_text, "Space-separated vertex labels")->required();
  link_cmd->add_option("-o", out_path, "Output facet file");

  int j = 0;
  auto* skeleton_cmd = app.add_subcommand("skeleton", "j-skeleton");
  skeleton_cmd->add_option("file", file)->required();
  skeleton_cmd->add_option("--j", j, "Dimension bound (>= -1)")->required();
  skeleton_cmd->add_option("-o", out_path, "Output facet file");

  auto* join_cmd = app.add_subcommand("join", "Simplicial join");
  join_cmd->add_option("file1", file)->required();
  join_cmd->add_option("file2", file2)->required();
  join_cmd->add_option("-o", out_path, "Output facet file");

  std::string kind;
  std::size_t gen_n = 4, gen_d = 3, gen_m = 2;
  int gen_overlap = -1;
  double density = 0.5;
  std::uint64_t seed = 1;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a complex");
  gen_cmd->add_option("kind", kind, "simplex|boundary|glued|miyazaki|rp2|random")
      ->required()
      ->check(CLI::IsMember({"simplex", "boundary", "glued", "miyazaki", "rp2", "random"}));
  gen_cmd->add_option("--n", gen_n, "Vertex count (simplex, boundary, random)");
  gen_cmd->add_option("--d", gen_d, "Facet size (glued, random)");
  gen_cmd->add_option("--m", gen_m, "Number of simplices (glued)");
  gen_cmd->add_option("--overlap", gen_overlap, "Pairwise intersection dimension (glued)");
  gen_cmd->add_option("--density", density, "Facet probability (random)");
  gen_cmd->add_option("--seed", seed, "Seed (random)");
  gen_cmd->add_option("-o", out_path, "Output facet file");

  auto* explore = app.add_subcommand("explore-join", "min_t of factors and joins (exploratory)");
  explore->add_option("files", files, "Facet files (two or more)")->required()->expected(2, -1);
  add_field(explore);

  std::string suite = "all";
  std::size_t max_n = 7, seeds = 20;
  std::string out_dir;
  auto* verify_cmd = app.add_subcommand("verify", "Run property suites");
  verify_cmd->add_option("--suite", suite, "Suite name or all")->capture_default_str();
  verify_cmd->add_option("--max-n", max_n, "Largest random/sphere vertex count")->capture_default_str();
  verify_cmd->add_option("--seeds", seeds, "Number of random complexes")->capture_default_str();
  verify_cmd->add_option("--out-dir", out_dir, "Directory for counterexample facet files");
  add_field(verify_cmd);
  add_jobs(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    const FieldSpec field = FieldSpec::parse(field_text);
    const Exec exec{jobs};

    if (*homology) {
      const auto c = load(file);
      require_nonvoid(c, file);
      const auto betti = reduced_betti(c, field);
      if (homology_json) {
        std::cout << json{{"schema", 1}, {"command", "homology"}, {"field", field.name()},
                          {"first_index", betti.first_index()}, {"betti", betti.values()}}
                         .dump()
                  << "\n";
      } else {
        std::cout << betti.to_string() << "\n";
      }
      return kExitHolds;
    }

    if (*check) {
      const auto criterion = parse_criterion(criterion_text);
      if (k > 1 && criterion != CmtCriterion::definition_links)
        throw UsageError("--criterion applies only with --k 1");
      const auto c = load(file);
      require_nonvoid(c, file);
      json out;
      out["schema"] = 1;
      out["command"] = "check";
      out["field"] = field.name();
      out["t"] = t;
      out["k"] = k;
      out["criterion"] = to_string(criterion);
      if (k == 1) {
        out.update(cm_verdict_json(c, check_cm_t(c, t, field, criterion)));
      } else {
        const auto v = check_k_cm_t(c, k, t, field, exec);
        out["ok"] = v.holds;
        json witnesses = json::array();
        if (!v.holds) {
          witnesses.push_back({{"kind", "removed"}, {"vertices", face_json(c, *v.removed)}});
          if (v.dimension_drop) {
            out["reason"] = "dimension";
          } else if (v.inner.impure) {
            out["reason"] = "purity";
          } else if (v.inner.face) {
            out["reason"] = "link";
            witnesses.push_back({{"kind", "face"}, {"face", face_json(c, *v.inner.face)}});
          }
        }
        out["witnesses"] = witnesses;
      }
      std::cout << out.dump(2) << "\n";
      return out["ok"].get<bool>() ? kExitHolds : kExitFails;
    }

    if (*classify_cmd) {
      const auto c = load(file);
      require_nonvoid(c, file);
      std::cout << report_json(classify(c, field, exec)).dump(2) << "\n";
      return kExitHolds;
    }

    if (*link_cmd) {
      const auto c = load(file);
      require_nonvoid(c, file);
      emit(out_path, io::emit_facets(link(c, parse_face(c, face_text))));
      return kExitHolds;
    }

    if (*skeleton_cmd) {
      if (j < -1)
        throw UsageError("--j must be at least -1");
      const auto c = load(file);
      require_nonvoid(c, file);
      emit(out_path, io::emit_facets(skeleton(c, j)));
      return kExitHolds;
    }

    if (*join_cmd) {
      const auto a = load(file);
      const auto b = load(file2);
      require_nonvoid(a, file);
      require_nonvoid(b, file2);
      emit(out_path, io::emit_facets(join(a, b)));
      return kExitHolds;
    }

    if (*gen_cmd) {
      SimplicialComplex c;
      if (kind == "simplex")
        c = gen::simplex(gen_n);
      else if (kind == "boundary")
        c = gen::boundary_simplex(gen_n);
      else if (kind == "glued")
        c = gen::glued_simplices(gen::GluedFamilySpec::uniform(gen_d, gen_m, gen_overlap));
      else if (kind == "miyazaki")
        c = gen::miyazaki_example().complex;
      else if (kind == "rp2")
        c = gen::projective_plane_6();
      else
        c = gen::random_pure(gen_n, gen_d, density, seed);
      emit(out_path, io::emit_facets(c));
      return kExitHolds;
    }

    if (*explore) {
      std::vector<SimplicialComplex> pool;
      for (const auto& f : files) {
        pool.push_back(load(f));
        require_nonvoid(pool.back(), f);
      }
      auto show = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("-"); };
      std::cout << "# exploratory data only: min_t of each factor and of their join (field "
                << field.name() << ")\n";
      std::cout << "first\tsecond\tmin_t(first)\tmin_t(second)\tmin_t(join)\n";
      for (const auto& row : explore_join(pool, field))
        std::cout << files[row.first] << "\t" << files[row.second] << "\t" << show(row.first_min_t)
                  << "\t" << show(row.second_min_t) << "\t" << show(row.join_min_t) << "\n";
      return kExitHolds;
    }

    if (*verify_cmd) {
      std::vector<std::string> selected;
      if (suite == "all") {
        selected = verify::suite_names();
      } else {
        const auto& names = verify::suite_names();
        if (std::find(names.begin(), names.end(), suite) == names.end())
          throw UsageError("unknown suite '" + suite + "'");
        selected = {suite};
      }
      verify::CorpusOptions options;
      options.max_n = max_n;
      options.random_count = seeds;
      options.seed = env_seed(options.seed);
      const auto corpus = verify::build_corpus(options);

      json out;
      out["schema"] = 1;
      out["command"] = "verify";
      out["field"] = field.name();
      out["seed"] = options.seed;
      out["corpus_size"] = corpus.size();
      json suites = json::array();
      json witnesses = json::array();
      bool ok = true;
      for (const auto& name : selected) {
        const auto result = verify::run_suite(name, corpus, field, exec);
        ok = ok && result.ok();
        suites.push_back({{"suite", name}, {"cases", result.cases},
                          {"failures", result.failures.size()}, {"ok", result.ok()}});
        for (std::size_t i = 0; i < result.failures.size(); ++i) {
          const auto& f = result.failures[i];
          json w{{"kind", "counterexample"}, {"suite", name}, {"complex", f.complex_name},
                 {"detail", f.detail}, {"facets", json::parse(io::emit_facets_json(f.complex))["facets"]}};
          if (!out_dir.empty()) {
            std::filesystem::create_directories(out_dir);
            const auto path = std::filesystem::path(out_dir) /
                              (name + "_" + std::to_string(i) + "_" + f.complex_name + ".cplx");
            io::write_complex_file(path.string(), f.complex);
            w["file"] = path.string();
          }
          witnesses.push_back(std::move(w));
        }
      }
      out["suites"] = suites;
      out["ok"] = ok;
      out["witnesses"] = witnesses;
      std::cout << out.dump(2) << "\n";
      return ok ? kExitHolds : kExitFails;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
