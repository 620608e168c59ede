#include <cmtkit/io.hpp>

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace cmt::io {

namespace {

bool is_decimal(std::string_view s) {
  if (s.empty() || s.size() > 18)
    return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

struct RawFace {
  std::vector<std::string> labels;
  std::size_t line;
};

SimplicialComplex assemble(const std::vector<RawFace>& raw, std::vector<std::string>* warnings) {
  if (raw.empty())
    return SimplicialComplex();

  std::vector<std::string> names;
  for (const auto& f : raw)
    names.insert(names.end(), f.labels.begin(), f.labels.end());
  std::sort(names.begin(), names.end(),
            [](const std::string& a, const std::string& b) { return natural_label_less(a, b); });
  names.erase(std::unique(names.begin(), names.end()), names.end());
  if (names.size() > kMaxVertices)
    throw ParseError(0, "more than " + std::to_string(kMaxVertices) + " distinct vertices");

  std::map<std::string, VertexId, std::less<>> id_of;
  for (std::size_t i = 0; i < names.size(); ++i)
    id_of.emplace(names[i], static_cast<VertexId>(i));

  std::vector<Face> faces;
  faces.reserve(raw.size());
  for (const auto& f : raw) {
    Face face;
    for (const auto& name : f.labels) {
      VertexId v = id_of.at(name);
      if (face.contains(v))
        throw ParseError(f.line, "vertex '" + name + "' repeated within a facet");
      face = face.with(v);
    }
    faces.push_back(face);
  }
  return SimplicialComplex::from_facets(faces, names.size(), names, warnings);
}

} // namespace

bool natural_label_less(std::string_view a, std::string_view b) {
  const bool da = is_decimal(a), db = is_decimal(b);
  if (da != db)
    return da;
  if (da) {
    // Compare numerically without overflow concerns: strip leading zeros.
    auto strip = [](std::string_view s) {
      std::size_t i = 0;
      while (i + 1 < s.size() && s[i] == '0')
        ++i;
      return s.substr(i);
    };
    auto sa = strip(a), sb = strip(b);
    if (sa.size() != sb.size())
      return sa.size() < sb.size();
    if (sa != sb)
      return sa < sb;
  }
  return a < b;
}

SimplicialComplex parse_facets(std::string_view text, std::vector<std::string>* warnings) {
  std::vector<RawFace> raw;
  bool saw_empty_face = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos)
      eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    std::istringstream tokens{std::string(line)};
    std::vector<std::string> labels;
    std::string tok;
    while (tokens >> tok) {
      if (labels.empty() && tok[0] == '#')
        break;
      labels.push_back(tok);
    }
    if (labels.empty())
      continue;
    if (labels.size() == 1 && labels[0] == "@empty-face") {
      saw_empty_face = true;
      raw.push_back({{}, line_no});
      continue;
    }
    for (const auto& l : labels) {
      if (l[0] == '@')
        throw ParseError(line_no, "unknown directive '" + l + "'");
      if (l[0] == '#')
        throw ParseError(line_no, "'#' inside a facet line");
    }
    raw.push_back({std::move(labels), line_no});
  }
  if (saw_empty_face && raw.size() > 1) {
    const auto it = std::find_if(raw.begin(), raw.end(), [](const RawFace& f) { return f.labels.empty(); });
    throw ParseError(it->line, "@empty-face must be the only facet line");
  }
  return assemble(raw, warnings);
}

SimplicialComplex parse_facets_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("facets") || !doc["facets"].is_array())
    throw ParseError(0, "expected an object with a \"facets\" array");
  std::vector<RawFace> raw;
  std::size_t index = 0;
  for (const auto& facet : doc["facets"]) {
    ++index;
    if (!facet.is_array())
      throw ParseError(0, "facet " + std::to_string(index) + " is not an array");
    RawFace f{{}, 0};
    for (const auto& v : facet) {
      if (v.is_string())
        f.labels.push_back(v.get<std::string>());
      else if (v.is_number_integer())
        f.labels.push_back(std::to_string(v.get<long long>()));
      else
        throw ParseError(0, "facet " + std::to_string(index) + " has a non-label entry");
    }
    raw.push_back(std::move(f));
  }
  return assemble(raw, nullptr);
}

SimplicialComplex read_complex_file(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return parse_facets_json(text);
  return parse_facets(text, warnings);
}

std::string emit_facets(const SimplicialComplex& complex) {
  std::string out;
  if (complex.is_void())
    return out;
  if (complex.is_irrelevant())
    return "@empty-face\n";
  for (Face f : complex.facets()) {
    bool first = true;
    for (VertexId v : f) {
      if (!first)
        out += ' ';
      first = false;
      out += complex.label(v);
    }
    out += '\n';
  }
  return out;
}

std::string emit_facets_json(const SimplicialComplex& complex) {
  nlohmann::json facets = nlohmann::json::array();
  for (Face f : complex.facets()) {
    nlohmann::json row = nlohmann::json::array();
    for (VertexId v : f)
      row.push_back(complex.label(v));
    facets.push_back(std::move(row));
  }
  return nlohmann::json{{"facets", facets}}.dump();
}

void write_complex_file(const std::string& path, const SimplicialComplex& complex) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error("cannot write '" + path + "'");
  out << emit_facets(complex);
}

} // namespace cmt::io
