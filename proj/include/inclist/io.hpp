#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "inclist/graph.hpp"

// Line-oriented text formats. Tokens are whitespace-separated decimal
// integers; '#' starts a comment that runs to the end of the line.
//
//   multigraph <n>             header, exactly once, before any edge
//   e <id> <u> <v>             edge
//   l <u> <eid> <c1> ... <ck>  incidence list
//   c <u> <eid> <color>        incidence color
//   p <v> A|B                  bipartition side (bipartite files only)
//   le <eid> <c1> ... <ck>     edge list (strong edge coloring)
//   ce <eid> <color>           edge color (strong edge coloring)
//
// Every reader throws ParseError with the offending line number.

namespace inclist {

enum class Side { A, B };

struct BipartiteText {
    Multigraph graph;
    std::vector<Side> side;
};

using EdgeLists = std::map<EdgeId, std::vector<Color>>;
using EdgeColoring = std::map<EdgeId, Color>;

Multigraph read_graph(std::istream& in);
ListAssignment read_lists(std::istream& in);
IncidenceColoring read_coloring(std::istream& in);
// Every vertex needs exactly one `p` line.
BipartiteText read_bipartite(std::istream& in);
EdgeLists read_edge_lists(std::istream& in);
EdgeColoring read_edge_coloring(std::istream& in);

void write_graph(std::ostream& out, const Multigraph& g);
void write_lists(std::ostream& out, const ListAssignment& lists);
void write_coloring(std::ostream& out, const IncidenceColoring& coloring);
void write_bipartite(std::ostream& out, const Multigraph& g, const std::vector<Side>& side);
void write_edge_lists(std::ostream& out, const EdgeLists& lists);
void write_edge_coloring(std::ostream& out, const EdgeColoring& coloring);

// Convenience wrappers for files; open failures are reported as ParseError at line 0.
Multigraph load_graph(const std::string& path);
ListAssignment load_lists(const std::string& path);
IncidenceColoring load_coloring(const std::string& path);
BipartiteText load_bipartite(const std::string& path);
EdgeLists load_edge_lists(const std::string& path);

}  // namespace inclist
