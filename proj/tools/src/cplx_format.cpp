#include "cplx_format.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "reescm/errors.hpp"

namespace reescm::cli {

namespace {

struct RawFacet {
  std::vector<int> vertices;  // empty = the empty facet ("0")
  int line = 0;
};

}  // namespace

SimplicialComplex parse_complex(std::string_view text) {
  std::vector<RawFacet> raw;
  int declared_vertices = -1;
  int max_label = 0;

  std::istringstream stream{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;  // blank

    if (first == "vertices") {
      if (declared_vertices != -1 || !raw.empty())
        throw SyntaxError("line " + std::to_string(line_no) +
                          ": 'vertices' header must come first and only once");
      std::string count;
      std::string extra;
      if (!(tokens >> count) || (tokens >> extra))
        throw SyntaxError("line " + std::to_string(line_no) +
                          ": expected 'vertices N'");
      try {
        declared_vertices = std::stoi(count);
      } catch (const std::exception&) {
        throw SyntaxError("line " + std::to_string(line_no) + ": bad vertex count '" +
                          count + "'");
      }
      if (declared_vertices < 1 || declared_vertices > 64)
        throw VertexOutOfRange("line " + std::to_string(line_no) +
                               ": vertex count must lie in [1, 64]");
      continue;
    }

    RawFacet facet{{}, line_no};
    std::string tok = first;
    do {
      int v = 0;
      try {
        std::size_t used = 0;
        v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw SyntaxError("line " + std::to_string(line_no) + ": bad vertex '" + tok +
                          "'");
      }
      if (v == 0) {
        if (tok != first || (tokens >> tok))
          throw SyntaxError("line " + std::to_string(line_no) +
                            ": '0' (the empty facet) must stand alone");
        facet.vertices.clear();
        break;
      }
      if (v < 0 || v > 64)
        throw VertexOutOfRange("line " + std::to_string(line_no) + ": vertex " +
                               std::to_string(v) + " outside 1..64");
      facet.vertices.push_back(v);
      max_label = std::max(max_label, v);
    } while (tokens >> tok);
    raw.push_back(std::move(facet));
  }

  if (raw.empty()) throw EmptyInput("no facets in input");
  const int n = declared_vertices != -1 ? declared_vertices : std::max(max_label, 1);
  std::vector<Face> facets;
  facets.reserve(raw.size());
  for (const auto& rf : raw) {
    Face f;
    for (int v : rf.vertices) {
      if (v > n)
        throw VertexOutOfRange("line " + std::to_string(rf.line) + ": vertex " +
                               std::to_string(v) + " exceeds declared count " +
                               std::to_string(n));
      f = f.with(v);
    }
    facets.push_back(f);
  }
  return SimplicialComplex::from_facets(n, facets);
}

std::string print_complex(const SimplicialComplex& c) {
  std::ostringstream os;
  os << "vertices " << c.vertex_count() << '\n';
  for (Face f : c.facets()) {
    if (f.is_empty()) {
      os << "0\n";
      continue;
    }
    bool first = true;
    for (int v : f.vertices()) {
      if (!first) os << ' ';
      os << v;
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace reescm::cli
