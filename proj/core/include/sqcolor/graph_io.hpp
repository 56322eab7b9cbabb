#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sqcolor/graph.hpp"
#include "sqcolor/list_coloring.hpp"

namespace sqcolor {

/// Malformed text input; `line` is 1-based (0 when the problem is not tied to a line).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// A graph with the external label of each dense vertex id.
struct LabeledGraph {
    Graph graph;
    std::vector<std::string> labels;

    /// Dense id for a label, or -1.
    Vertex find(const std::string& label) const;
};

/// Edge-list text: header `n m`, then m lines `u v`. Lines after the edges holding a single
/// label declare isolated vertices. `#` starts a comment. All-integer label sets are numbered
/// in numeric order, otherwise in order of first appearance.
LabeledGraph read_edge_list(std::istream& in, bool subcubic_mode = true);
void write_edge_list(std::ostream& out, const LabeledGraph& g);

/// One line per vertex: `label: c1 c2 ...`.
ListAssignment read_list_assignment(std::istream& in, const LabeledGraph& g);
void write_list_assignment(std::ostream& out, const LabeledGraph& g, const ListAssignment& lists);

/// One line per vertex: `label = c`.
void write_coloring(std::ostream& out, const LabeledGraph& g, const Coloring& coloring);
Coloring read_coloring(std::istream& in, const LabeledGraph& g);

/// Labels are the decimal vertex ids.
LabeledGraph with_default_labels(Graph g);

}  // namespace sqcolor
