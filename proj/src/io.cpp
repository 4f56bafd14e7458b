#include "inclist/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace inclist {

namespace {

struct Record {
    int line = 0;
    std::string keyword;
    std::vector<std::string> args;
};

std::vector<Record> tokenize(std::istream& in) {
    std::vector<Record> out;
    std::string text;
    int line = 0;
    while (std::getline(in, text)) {
        ++line;
        if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
        std::istringstream ss(text);
        Record rec;
        rec.line = line;
        if (!(ss >> rec.keyword)) continue;
        std::string tok;
        while (ss >> tok) rec.args.push_back(tok);
        out.push_back(std::move(rec));
    }
    return out;
}

long long parse_int(const Record& rec, const std::string& tok) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(rec.line, "expected an integer, got '" + tok + "'");
    return value;
}

int parse_nonneg(const Record& rec, const std::string& tok) {
    long long v = parse_int(rec, tok);
    if (v < 0 || v > 2'000'000'000) throw ParseError(rec.line, "value out of range: " + tok);
    return static_cast<int>(v);
}

void expect_args(const Record& rec, std::size_t n) {
    if (rec.args.size() != n)
        throw ParseError(rec.line, "'" + rec.keyword + "' expects " + std::to_string(n) + " fields");
}

struct GraphParts {
    int n = -1;
    std::vector<Edge> edges;
};

// Consumes `multigraph` and `e` records; returns false for any other keyword.
bool take_graph_record(GraphParts& parts, const Record& rec) {
    if (rec.keyword == "multigraph") {
        expect_args(rec, 1);
        if (parts.n >= 0) throw ParseError(rec.line, "duplicate 'multigraph' header");
        parts.n = parse_nonneg(rec, rec.args[0]);
        return true;
    }
    if (rec.keyword == "e") {
        expect_args(rec, 3);
        if (parts.n < 0) throw ParseError(rec.line, "edge before 'multigraph' header");
        parts.edges.push_back({parse_nonneg(rec, rec.args[0]), parse_nonneg(rec, rec.args[1]),
                               parse_nonneg(rec, rec.args[2])});
        return true;
    }
    return false;
}

Multigraph finish_graph(GraphParts parts, int last_line) {
    if (parts.n < 0) throw ParseError(last_line, "missing 'multigraph' header");
    try {
        return Multigraph(parts.n, std::move(parts.edges));
    } catch (const GraphError& err) {
        throw ParseError(last_line, err.what());
    }
}

std::vector<Color> parse_colors(const Record& rec, std::size_t from) {
    std::vector<Color> colors;
    for (std::size_t i = from; i < rec.args.size(); ++i) colors.push_back(parse_nonneg(rec, rec.args[i]));
    if (colors.empty()) throw ParseError(rec.line, "empty color list");
    return colors;
}

[[noreturn]] void unknown(const Record& rec) {
    throw ParseError(rec.line, "unknown record '" + rec.keyword + "'");
}

int last_line_of(const std::vector<Record>& recs) { return recs.empty() ? 0 : recs.back().line; }

template <class F>
auto load(const std::string& path, F reader) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    return reader(in);
}

}  // namespace

Multigraph read_graph(std::istream& in) {
    auto recs = tokenize(in);
    GraphParts parts;
    for (const Record& rec : recs)
        if (!take_graph_record(parts, rec)) unknown(rec);
    return finish_graph(std::move(parts), last_line_of(recs));
}

ListAssignment read_lists(std::istream& in) {
    ListAssignment out;
    for (const Record& rec : tokenize(in)) {
        if (rec.keyword != "l") unknown(rec);
        if (rec.args.size() < 3) throw ParseError(rec.line, "'l' expects a vertex, an edge and colors");
        Incidence inc{parse_nonneg(rec, rec.args[0]), parse_nonneg(rec, rec.args[1])};
        if (out.contains(inc)) throw ParseError(rec.line, "duplicate list for " + to_string(inc));
        out.set(inc, parse_colors(rec, 2));
    }
    return out;
}

IncidenceColoring read_coloring(std::istream& in) {
    IncidenceColoring out;
    for (const Record& rec : tokenize(in)) {
        if (rec.keyword != "c") unknown(rec);
        expect_args(rec, 3);
        Incidence inc{parse_nonneg(rec, rec.args[0]), parse_nonneg(rec, rec.args[1])};
        if (out.contains(inc)) throw ParseError(rec.line, "duplicate color for " + to_string(inc));
        out.set(inc, parse_nonneg(rec, rec.args[2]));
    }
    return out;
}

BipartiteText read_bipartite(std::istream& in) {
    auto recs = tokenize(in);
    GraphParts parts;
    std::map<VertexId, Side> sides;
    for (const Record& rec : recs) {
        if (take_graph_record(parts, rec)) continue;
        if (rec.keyword != "p") unknown(rec);
        expect_args(rec, 2);
        VertexId v = parse_nonneg(rec, rec.args[0]);
        if (rec.args[1] != "A" && rec.args[1] != "B")
            throw ParseError(rec.line, "partition side must be A or B");
        if (!sides.emplace(v, rec.args[1] == "A" ? Side::A : Side::B).second)
            throw ParseError(rec.line, "duplicate side for vertex " + std::to_string(v));
    }
    BipartiteText out;
    out.graph = finish_graph(std::move(parts), last_line_of(recs));
    for (VertexId v = 0; v < out.graph.vertex_count(); ++v) {
        auto it = sides.find(v);
        if (it == sides.end()) throw ParseError(last_line_of(recs), "vertex " + std::to_string(v) + " has no side");
        out.side.push_back(it->second);
    }
    if (sides.size() != static_cast<std::size_t>(out.graph.vertex_count()))
        throw ParseError(last_line_of(recs), "side given for a vertex out of range");
    return out;
}

EdgeLists read_edge_lists(std::istream& in) {
    EdgeLists out;
    for (const Record& rec : tokenize(in)) {
        if (rec.keyword != "le") unknown(rec);
        if (rec.args.size() < 2) throw ParseError(rec.line, "'le' expects an edge and colors");
        EdgeId e = parse_nonneg(rec, rec.args[0]);
        auto colors = parse_colors(rec, 1);
        std::set<Color> uniq(colors.begin(), colors.end());
        if (!out.emplace(e, std::vector<Color>(uniq.begin(), uniq.end())).second)
            throw ParseError(rec.line, "duplicate list for edge " + std::to_string(e));
    }
    return out;
}

EdgeColoring read_edge_coloring(std::istream& in) {
    EdgeColoring out;
    for (const Record& rec : tokenize(in)) {
        if (rec.keyword != "ce") unknown(rec);
        expect_args(rec, 2);
        if (!out.emplace(parse_nonneg(rec, rec.args[0]), parse_nonneg(rec, rec.args[1])).second)
            throw ParseError(rec.line, "duplicate color for edge " + rec.args[0]);
    }
    return out;
}

void write_graph(std::ostream& out, const Multigraph& g) {
    out << "multigraph " << g.vertex_count() << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.id << ' ' << e.u << ' ' << e.v << '\n';
}

void write_lists(std::ostream& out, const ListAssignment& lists) {
    for (const auto& [inc, colors] : lists) {
        out << "l " << inc.vertex << ' ' << inc.edge;
        for (Color c : colors) out << ' ' << c;
        out << '\n';
    }
}

void write_coloring(std::ostream& out, const IncidenceColoring& coloring) {
    for (const auto& [inc, c] : coloring) out << "c " << inc.vertex << ' ' << inc.edge << ' ' << c << '\n';
}

void write_bipartite(std::ostream& out, const Multigraph& g, const std::vector<Side>& side) {
    write_graph(out, g);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        out << "p " << v << ' ' << (side.at(v) == Side::A ? 'A' : 'B') << '\n';
}

void write_edge_lists(std::ostream& out, const EdgeLists& lists) {
    for (const auto& [e, colors] : lists) {
        out << "le " << e;
        for (Color c : colors) out << ' ' << c;
        out << '\n';
    }
}

void write_edge_coloring(std::ostream& out, const EdgeColoring& coloring) {
    for (const auto& [e, c] : coloring) out << "ce " << e << ' ' << c << '\n';
}

Multigraph load_graph(const std::string& path) {
    return load(path, [](std::istream& in) { return read_graph(in); });
}
ListAssignment load_lists(const std::string& path) {
    return load(path, [](std::istream& in) { return read_lists(in); });
}
IncidenceColoring load_coloring(const std::string& path) {
    return load(path, [](std::istream& in) { return read_coloring(in); });
}
BipartiteText load_bipartite(const std::string& path) {
    return load(path, [](std::istream& in) { return read_bipartite(in); });
}
EdgeLists load_edge_lists(const std::string& path) {
    return load(path, [](std::istream& in) { return read_edge_lists(in); });
}

}  // namespace inclist
