#include "pcc/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "pcc/errors.hpp"

namespace pcc {

namespace {

struct Line {
    std::size_t number;
    std::string_view text;
};

// Splits on LF; drops one trailing empty line and strips a CR before LF.
std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t start = 0;
    std::size_t number = 1;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back({number++, line});
        if (end == text.size()) break;
        start = end + 1;
    }
    if (!lines.empty() && lines.back().text.empty()) lines.pop_back();
    return lines;
}

std::vector<long long> parse_ints(const Line& line, std::size_t expected) {
    std::vector<long long> values;
    std::string_view s = line.text;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        if (i == s.size()) break;
        long long value = 0;
        auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), value);
        if (ec != std::errc() || (ptr != s.data() + s.size() && *ptr != ' ' && *ptr != '\t')) {
            throw ParseError(line.number, "expected integers, got \"" + std::string(s) + "\"");
        }
        values.push_back(value);
        i = static_cast<std::size_t>(ptr - s.data());
    }
    if (values.size() != expected) {
        throw ParseError(line.number, "expected " + std::to_string(expected) + " integers, got " +
                                          std::to_string(values.size()));
    }
    return values;
}

}  // namespace

Graph read_graph(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty()) throw ParseError(1, "empty graph file");
    const auto header = parse_ints(lines[0], 2);
    const long long n = header[0];
    const long long m = header[1];
    if (n < 1) throw ParseError(1, "vertex count must be >= 1");
    if (m < 0) throw ParseError(1, "edge count must be >= 0");
    if (static_cast<long long>(lines.size()) - 1 != m) {
        const std::size_t where = lines.size() - 1 < static_cast<std::size_t>(m) ? lines.size() + 1 : static_cast<std::size_t>(m) + 2;
        throw ParseError(where, "header declares " + std::to_string(m) + " edges, file has " +
                                    std::to_string(lines.size() - 1));
    }
    std::vector<Edge> edges;
    std::vector<std::vector<Vertex>> seen(static_cast<std::size_t>(n));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto uv = parse_ints(lines[i], 2);
        if (uv[0] < 0 || uv[0] >= n || uv[1] < 0 || uv[1] >= n) {
            throw ParseError(lines[i].number, "vertex out of range");
        }
        if (uv[0] >= uv[1]) throw ParseError(lines[i].number, "edge must satisfy u < v");
        const auto u = static_cast<Vertex>(uv[0]);
        const auto v = static_cast<Vertex>(uv[1]);
        auto& list = seen[static_cast<std::size_t>(u)];
        for (Vertex w : list) {
            if (w == v) throw ParseError(lines[i].number, "duplicate edge");
        }
        list.push_back(v);
        edges.push_back({u, v});
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << g.num_vertices() << ' ' << g.num_edges();
    for (const Edge& e : g.edges()) out << '\n' << e.u << ' ' << e.v;
    return out.str();
}

EdgeColoring read_coloring(std::string_view text, const Graph& g) {
    const auto lines = split_lines(text);
    std::vector<Color> colors;
    colors.reserve(static_cast<std::size_t>(g.num_edges()));
    for (const Line& line : lines) {
        const auto uvc = parse_ints(line, 3);
        const auto index = colors.size();
        if (index >= static_cast<std::size_t>(g.num_edges())) {
            throw ParseError(line.number, "more coloring lines than graph edges");
        }
        const Edge& expected = g.edge(static_cast<EdgeId>(index));
        if (uvc[0] != expected.u || uvc[1] != expected.v) {
            throw ParseError(line.number, "expected edge " + std::to_string(expected.u) + " " +
                                              std::to_string(expected.v) + " (edge order must match the graph)");
        }
        if (uvc[2] < 1 || uvc[2] > 1'000'000) throw ParseError(line.number, "color must be >= 1");
        colors.push_back(static_cast<Color>(uvc[2]));
    }
    if (colors.size() < static_cast<std::size_t>(g.num_edges())) {
        const Edge& missing = g.edge(static_cast<EdgeId>(colors.size()));
        throw ParseError(lines.size() + 1, "uncolored edge " + std::to_string(missing.u) + " " +
                                               std::to_string(missing.v));
    }
    return EdgeColoring(std::move(colors));
}

std::string write_coloring(const Graph& g, const EdgeColoring& coloring) {
    if (coloring.size() != static_cast<std::size_t>(g.num_edges())) {
        throw InputError("coloring size does not match graph edge count");
    }
    std::ostringstream out;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (e > 0) out << '\n';
        out << g.edge(e).u << ' ' << g.edge(e).v << ' ' << coloring[e];
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << contents << '\n';
}

}  // namespace pcc
