#pragma once

#include <cmtkit/complex.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace cmt::io {

/// Malformed input. `line` is 1-based, 0 when not line-specific.
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/**
 * Facet file format: one facet per line as whitespace-separated vertex labels.
 * Lines whose first non-blank character is '#' are comments and blank lines
 * are skipped. A file with no facet lines is the void complex; a file whose
 * only facet line is `@empty-face` is {∅}.
 *
 * Vertex ids are assigned in natural label order: labels that are decimal
 * integers come first in numeric order, then all other labels in byte order.
 */
SimplicialComplex parse_facets(std::string_view text, std::vector<std::string>* warnings = nullptr);

/// `{"facets": [["1","2","3"], ...]}`; labels may be strings or integers.
SimplicialComplex parse_facets_json(std::string_view text);

/// Dispatches on content: JSON if the first non-blank character is '{'.
SimplicialComplex read_complex_file(const std::string& path,
                                    std::vector<std::string>* warnings = nullptr);

/// Canonical text form (facets in canonical order, one per line).
std::string emit_facets(const SimplicialComplex& complex);
std::string emit_facets_json(const SimplicialComplex& complex);

void write_complex_file(const std::string& path, const SimplicialComplex& complex);

/// Natural label order used for id assignment.
bool natural_label_less(std::string_view a, std::string_view b);

} // namespace cmt::io
