#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "croute/multigraph.hpp"

namespace croute {

// Line-oriented text format:
//   p <n> <m>      header; vertices are 1..n
//   e <u> <v>      one line per edge, parallel edges repeated
//   d <s> <t>      demand pair
// Demand lines may live in the same file as the graph or in a separate one.
struct ParsedInput {
  MultiGraph g;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  bool saw_header = false;
};

inline void parse_into(std::istream& in, ParsedInput& out) {
  std::string line;
  long long declared_n = -1, declared_m = -1, seen_m = 0;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#' || tag[0] == 'c') continue;
    if (tag == "p") {
      require(!out.saw_header, Err::MalformedInput, "duplicate p header");
      require(static_cast<bool>(ls >> declared_n >> declared_m) && declared_n >= 0 &&
                  declared_m >= 0,
              Err::MalformedInput, "bad p header at line " + std::to_string(lineno));
      out.saw_header = true;
      for (long long v = 1; v <= declared_n; ++v) out.g.add_vertex(static_cast<Vertex>(v));
    } else if (tag == "e") {
      long long u, v;
      require(static_cast<bool>(ls >> u >> v), Err::MalformedInput,
              "bad e line at line " + std::to_string(lineno));
      require(out.saw_header, Err::MalformedInput, "e line before p header");
      require(u >= 1 && u <= declared_n && v >= 1 && v <= declared_n && u != v,
              Err::MalformedInput, "edge endpoints out of range at line " +
                                       std::to_string(lineno));
      out.g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
      ++seen_m;
    } else if (tag == "d") {
      long long s, t;
      require(static_cast<bool>(ls >> s >> t), Err::MalformedInput,
              "bad d line at line " + std::to_string(lineno));
      require(s != t, Err::MalformedInput,
              "demand with identical endpoints at line " + std::to_string(lineno));
      out.pairs.emplace_back(static_cast<Vertex>(s), static_cast<Vertex>(t));
    } else {
      fail(Err::MalformedInput, "unknown line tag '" + tag + "' at line " +
                                    std::to_string(lineno));
    }
  }
  if (out.saw_header && declared_m >= 0)
    require(seen_m == declared_m, Err::MalformedInput,
            "edge count disagrees with p header");
}

inline ParsedInput parse_text(const std::string& text) {
  ParsedInput out;
  std::istringstream in(text);
  parse_into(in, out);
  for (auto [s, t] : out.pairs)
    require(out.g.has_vertex(s) && out.g.has_vertex(t), Err::MalformedInput,
            "demand endpoint is not a vertex");
  return out;
}

inline void write_graph(std::ostream& os, const MultiGraph& g,
                        const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  os << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const auto& [e, ee] : g.edge_map()) os << "e " << ee.u << " " << ee.v << "\n";
  for (auto [s, t] : pairs) os << "d " << s << " " << t << "\n";
}

}  // namespace croute
