#include "sfvs/io.hpp"

#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace sfvs {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

long long to_integer(const std::string& tok, int line) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) throw ParseError(line, "expected an integer, got '" + tok + "'");
  return v;
}

}  // namespace

PairInstance parse_instance(std::istream& in) {
  PairInstance inst;
  std::optional<long long> n, m;
  long long edges_seen = 0;
  int line_no = 0;

  auto vertex = [&](const std::string& tok) {
    long long v = to_integer(tok, line_no);
    if (v < 1 || v > *n)
      throw ParseError(line_no, "vertex " + tok + " outside 1.." + std::to_string(*n));
    return static_cast<Vertex>(v);
  };

  for (std::string line; std::getline(in, line);) {
    ++line_no;
    auto t = tokens(line);
    if (t.empty() || t[0][0] == '#') continue;
    const std::string& kind = t[0];
    if (kind == "p") {
      if (n) throw ParseError(line_no, "second header line");
      if (t.size() != 5 || t[1] != "sfvs") throw ParseError(line_no, "header must be 'p sfvs <n> <m> <k>'");
      n = to_integer(t[2], line_no);
      m = to_integer(t[3], line_no);
      long long k = to_integer(t[4], line_no);
      if (*n < 0 || *m < 0) throw ParseError(line_no, "negative size in header");
      if (*n > std::numeric_limits<Vertex>::max() / 2 || k < std::numeric_limits<int>::min() ||
          k > std::numeric_limits<int>::max())
        throw ParseError(line_no, "header value out of range");
      inst.base.budget = static_cast<int>(k);
      for (Vertex v = 1; v <= *n; ++v) inst.base.graph.add_vertex(v);
      continue;
    }
    if (!n) throw ParseError(line_no, "'" + kind + "' line before the header");
    if (kind == "v") {
      if (t.size() != 2) throw ParseError(line_no, "vertex line must be 'v <id>'");
      vertex(t[1]);
    } else if (kind == "e") {
      if (t.size() != 4) throw ParseError(line_no, "edge line must be 'e <u> <v> <s|->'");
      Vertex u = vertex(t[1]), v = vertex(t[2]);
      if (t[3] != "s" && t[3] != "-") throw ParseError(line_no, "edge flag must be 's' or '-'");
      if (++edges_seen > *m) throw ParseError(line_no, "more edge lines than announced");
      EdgeId e = inst.base.graph.add_edge(u, v);
      if (t[3] == "s") inst.base.s_edges.insert(e);
    } else if (kind == "c") {
      if (t.size() != 3) throw ParseError(line_no, "pair line must be 'c <x> <y>'");
      Vertex x = vertex(t[1]), y = vertex(t[2]);
      if (x == y) throw ParseError(line_no, "pair with equal ends");
      inst.pairs.insert(make_vertex_pair(x, y));
    } else {
      throw ParseError(line_no, "unknown line type '" + kind + "'");
    }
  }
  if (!n) throw ParseError(line_no, "missing header");
  if (edges_seen != *m)
    throw ParseError(line_no, "expected " + std::to_string(*m) + " edges, found " + std::to_string(edges_seen));
  return inst;
}

PairInstance parse_instance_string(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

void write_instance(std::ostream& out, const PairInstance& inst,
                    const std::map<Vertex, Vertex>& origin) {
  const Multigraph& g = inst.base.graph;
  std::map<Vertex, int> id;
  bool identity = true;
  for (Vertex v : g.vertices()) {
    int next = static_cast<int>(id.size()) + 1;
    id[v] = next;
    if (v != next) identity = false;
  }
  out << "p sfvs " << g.num_vertices() << ' ' << g.num_edges() << ' ' << inst.base.budget << '\n';
  if (!identity || !origin.empty())
    for (const auto& [v, i] : id) {
      auto it = origin.find(v);
      out << "# map " << i << ' ' << (it == origin.end() ? v : it->second) << '\n';
    }
  for (const auto& [e, ed] : g.edges())
    out << "e " << id[ed.u] << ' ' << id[ed.v] << ' ' << (inst.base.s_edges.count(e) ? 's' : '-') << '\n';
  std::set<std::pair<int, int>> pairs;
  for (const auto& [x, y] : inst.pairs) {
    int a = id.at(x), b = id.at(y);
    pairs.insert({std::min(a, b), std::max(a, b)});
  }
  for (const auto& [a, b] : pairs) out << "c " << a << ' ' << b << '\n';
}

std::string instance_to_string(const PairInstance& inst, const std::map<Vertex, Vertex>& origin) {
  std::ostringstream os;
  write_instance(os, inst, origin);
  return os.str();
}

}  // namespace sfvs
