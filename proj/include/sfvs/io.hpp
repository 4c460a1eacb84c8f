#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>

#include "sfvs/multigraph.hpp"

namespace sfvs {

struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

/// Reads the text format:
///   p sfvs <n> <m> <k>     header, before anything else
///   v <id>                 optional, 1 <= id <= n
///   e <u> <v> <s|->        m edge lines, flag s marks an S-edge
///   c <x> <y>              pair constraint
///   # ...                  comment
/// Vertices are 1..n; edges get ids 0..m-1 in file order.
PairInstance parse_instance(std::istream& in);
PairInstance parse_instance_string(const std::string& text);

/// Writes vertices renumbered 1..n in ascending order, edges by id, pairs
/// sorted. Each vertex gets a "# map <new> <orig>" comment whenever the
/// numbering is not already 1..n or an origin map is supplied; orig is
/// origin[v] when present and v otherwise.
void write_instance(std::ostream& out, const PairInstance& inst,
                    const std::map<Vertex, Vertex>& origin = {});
std::string instance_to_string(const PairInstance& inst,
                               const std::map<Vertex, Vertex>& origin = {});

}  // namespace sfvs
