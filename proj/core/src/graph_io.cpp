#include "sqcolor/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

namespace sqcolor {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ss(raw);
        Line line{number, {}};
        for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

std::optional<long long> parse_int(const std::string& s) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

long long require_count(const Line& line, const std::string& tok, const char* what) {
    auto v = parse_int(tok);
    if (!v || *v < 0) throw ParseError(line.number, std::string("expected a nonnegative ") + what + ", got '" + tok + "'");
    return *v;
}

std::unordered_map<std::string, Vertex> label_index(const LabeledGraph& g) {
    std::unordered_map<std::string, Vertex> index;
    for (std::size_t v = 0; v < g.labels.size(); ++v) index.emplace(g.labels[v], static_cast<Vertex>(v));
    return index;
}

Vertex lookup(const std::unordered_map<std::string, Vertex>& index, const std::string& label) {
    auto it = index.find(label);
    return it == index.end() ? -1 : it->second;
}

}  // namespace

Vertex LabeledGraph::find(const std::string& label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    return it == labels.end() ? -1 : static_cast<Vertex>(it - labels.begin());
}

LabeledGraph read_edge_list(std::istream& in, bool subcubic_mode) {
    auto lines = tokenize(in);
    if (lines.empty()) throw ParseError(0, "missing header line `n m`");
    const Line& header = lines.front();
    if (header.tokens.size() != 2) throw ParseError(header.number, "header must be `n m`");
    auto n = static_cast<std::size_t>(require_count(header, header.tokens[0], "vertex count"));
    auto m = static_cast<std::size_t>(require_count(header, header.tokens[1], "edge count"));
    if (lines.size() < m + 1)
        throw ParseError(lines.back().number, "expected " + std::to_string(m) + " edge lines");

    std::vector<std::string> order;
    std::unordered_map<std::string, std::size_t> seen;
    auto note = [&](const std::string& label) {
        if (seen.emplace(label, order.size()).second) order.push_back(label);
    };
    std::vector<std::pair<std::string, std::string>> raw_edges;
    std::set<std::pair<std::string, std::string>> edge_set;
    std::unordered_map<std::string, int> degree;
    for (std::size_t i = 1; i <= m; ++i) {
        const Line& line = lines[i];
        if (line.tokens.size() != 2) throw ParseError(line.number, "edge line must be `u v`");
        const auto& a = line.tokens[0];
        const auto& b = line.tokens[1];
        if (a == b) throw ParseError(line.number, "self-loop at '" + a + "'");
        auto key = std::minmax(a, b);
        if (!edge_set.emplace(key.first, key.second).second)
            throw ParseError(line.number, "duplicate edge " + a + " " + b);
        if (subcubic_mode && (++degree[a] > 3 || ++degree[b] > 3))
            throw ParseError(line.number, "degree exceeds 3");
        note(a);
        note(b);
        raw_edges.emplace_back(a, b);
    }
    for (std::size_t i = m + 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.tokens.size() != 1) throw ParseError(line.number, "expected a single isolated-vertex label");
        if (seen.count(line.tokens[0])) throw ParseError(line.number, "vertex '" + line.tokens[0] + "' declared twice");
        note(line.tokens[0]);
    }
    if (order.size() != n)
        throw ParseError(header.number, "header declares " + std::to_string(n) + " vertices but " +
                                            std::to_string(order.size()) + " labels were found");

    bool numeric = std::all_of(order.begin(), order.end(), [](const std::string& s) { return parse_int(s).has_value(); });
    if (numeric)
        std::stable_sort(order.begin(), order.end(),
                         [](const std::string& a, const std::string& b) { return *parse_int(a) < *parse_int(b); });
    std::unordered_map<std::string, Vertex> id;
    for (std::size_t i = 0; i < order.size(); ++i) id[order[i]] = static_cast<Vertex>(i);

    std::vector<Edge> edges;
    edges.reserve(raw_edges.size());
    for (const auto& [a, b] : raw_edges) edges.emplace_back(id[a], id[b]);
    LabeledGraph out;
    out.graph = Graph::from_edge_list(edges, subcubic_mode, n);
    out.labels = std::move(order);
    return out;
}

void write_edge_list(std::ostream& out, const LabeledGraph& g) {
    out << g.graph.vertex_count() << ' ' << g.graph.edge_count() << '\n';
    for (const auto& [a, b] : g.graph.edges())
        out << g.labels[static_cast<std::size_t>(a)] << ' ' << g.labels[static_cast<std::size_t>(b)] << '\n';
    for (std::size_t v = 0; v < g.graph.vertex_count(); ++v)
        if (g.graph.degree(static_cast<Vertex>(v)) == 0) out << g.labels[v] << '\n';
}

ListAssignment read_list_assignment(std::istream& in, const LabeledGraph& g) {
    std::vector<std::vector<Color>> lists(g.graph.vertex_count());
    std::vector<char> given(g.graph.vertex_count(), 0);
    auto index = label_index(g);
    for (const Line& line : tokenize(in)) {
        std::string label = line.tokens.front();
        std::size_t first = 1;
        if (!label.empty() && label.back() == ':') {
            label.pop_back();
        } else if (line.tokens.size() > 1 && line.tokens[1] == ":") {
            first = 2;
        } else {
            throw ParseError(line.number, "expected `label: c1 c2 ...`");
        }
        Vertex v = lookup(index, label);
        if (v < 0) throw ParseError(line.number, "unknown vertex '" + label + "'");
        if (given[static_cast<std::size_t>(v)]) throw ParseError(line.number, "second list for '" + label + "'");
        given[static_cast<std::size_t>(v)] = 1;
        for (std::size_t i = first; i < line.tokens.size(); ++i)
            lists[static_cast<std::size_t>(v)].push_back(static_cast<Color>(require_count(line, line.tokens[i], "color")));
    }
    for (std::size_t v = 0; v < given.size(); ++v)
        if (!given[v]) throw ParseError(0, "no list given for vertex '" + g.labels[v] + "'");
    return ListAssignment(std::move(lists));
}

void write_list_assignment(std::ostream& out, const LabeledGraph& g, const ListAssignment& lists) {
    for (std::size_t v = 0; v < lists.size(); ++v) {
        out << g.labels[v] << ':';
        for (Color c : lists[static_cast<Vertex>(v)]) out << ' ' << c;
        out << '\n';
    }
}

void write_coloring(std::ostream& out, const LabeledGraph& g, const Coloring& coloring) {
    for (std::size_t v = 0; v < coloring.size(); ++v) out << g.labels[v] << " = " << coloring[v] << '\n';
}

Coloring read_coloring(std::istream& in, const LabeledGraph& g) {
    Coloring coloring(g.graph.vertex_count(), kNoColor);
    auto index = label_index(g);
    for (const Line& line : tokenize(in)) {
        if (line.tokens.size() != 3 || line.tokens[1] != "=") throw ParseError(line.number, "expected `label = c`");
        Vertex v = lookup(index, line.tokens[0]);
        if (v < 0) throw ParseError(line.number, "unknown vertex '" + line.tokens[0] + "'");
        coloring[static_cast<std::size_t>(v)] = static_cast<Color>(require_count(line, line.tokens[2], "color"));
    }
    return coloring;
}

LabeledGraph with_default_labels(Graph g) {
    LabeledGraph out;
    out.labels.reserve(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) out.labels.push_back(std::to_string(v));
    out.graph = std::move(g);
    return out;
}

}  // namespace sqcolor
