#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "reescm/complex.hpp"

namespace reescm::cli {

// The .cplx format: UTF-8 text, one facet per line, vertices as positive
// integers separated by whitespace. '#' starts a comment running to end of
// line; blank lines are ignored. An optional header line "vertices N"
// fixes the vertex count; otherwise it is the maximum label. The single
// token "0" denotes the empty facet, so the complex {{}} has a file form.
SimplicialComplex parse_complex(std::string_view text);

// Canonical form: a "vertices N" header, then the facets in canonical
// order, vertices ascending. parse(print(c)) == c, byte-stable.
std::string print_complex(const SimplicialComplex& c);

std::string read_file(const std::string& path);

// FNV-1a over the raw bytes; stable input fingerprint for reports.
std::uint64_t fnv1a(std::string_view bytes);

}  // namespace reescm::cli
