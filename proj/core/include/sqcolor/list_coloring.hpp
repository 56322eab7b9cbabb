#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sqcolor/graph.hpp"

namespace sqcolor {

using Color = int;
inline constexpr Color kNoColor = -1;

/// Per-vertex sorted, duplicate-free lists of nonnegative color ids.
class ListAssignment {
public:
    ListAssignment() = default;
    explicit ListAssignment(std::vector<std::vector<Color>> lists);

    /// Every vertex gets {1..k}.
    static ListAssignment uniform(std::size_t n, int k);

    std::size_t size() const { return lists_.size(); }
    std::span<const Color> operator[](Vertex v) const { return lists_[static_cast<std::size_t>(v)]; }
    bool contains(Vertex v, Color c) const;
    std::size_t min_size() const;

    bool operator==(const ListAssignment&) const = default;

private:
    std::vector<std::vector<Color>> lists_;
};

/// Total coloring indexed by vertex id.
using Coloring = std::vector<Color>;

/// Sequence of uncolored vertices to be colored in turn.
using ExtensionOrder = std::vector<Vertex>;

class ColoringError : public std::runtime_error {
public:
    enum class Kind {
        StuckAt,
        PreconditionViolated,
        Disconnected,
        NotAnEdge,
        AlreadyColored,
        NotAvailable,
        SizeMismatch,
    };

    ColoringError(Kind kind, const std::string& what, Vertex vertex = -1)
        : std::runtime_error(what), kind_(kind), vertex_(vertex) {}
    Kind kind() const { return kind_; }
    /// The vertex the failure is about, or -1.
    Vertex vertex() const { return vertex_; }

private:
    Kind kind_;
    Vertex vertex_;
};

struct TraceEntry {
    std::string lemma;
    std::string case_id;
    Vertex vertex = -1;
    Color color = kNoColor;
    std::string reason;
};

/// Decision log: which routine and case produced each color.
class Trace {
public:
    void add(TraceEntry e) { entries_.push_back(std::move(e)); }
    const std::vector<TraceEntry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    /// `LEMMA <id> CASE <id> vertex <label> color <c> reason <text>` lines. Vertex ids are
    /// printed through `labels` when given.
    std::string render(std::span<const std::string> labels = {}) const;

private:
    std::vector<TraceEntry> entries_;
};

/// A proper partial coloring of the square of a graph. Remaining lists are derived on demand
/// from the colored square-neighbours, so they are always consistent with the colors.
class PartialColoring {
public:
    PartialColoring(const Graph& g, ListAssignment lists);
    PartialColoring(std::shared_ptr<const Graph> g, std::shared_ptr<const Graph> sq, ListAssignment lists);

    const Graph& graph() const { return *graph_; }
    const Graph& square_graph() const { return *square_; }
    const ListAssignment& lists() const { return lists_; }
    std::size_t vertex_count() const { return colors_.size(); }

    bool is_colored(Vertex v) const { return colors_[static_cast<std::size_t>(v)] != kNoColor; }
    Color color(Vertex v) const { return colors_[static_cast<std::size_t>(v)]; }
    bool square_adjacent(Vertex a, Vertex b) const { return square_->has_edge(a, b); }

    std::vector<Color> remaining(Vertex v) const;
    bool available(Vertex v, Color c) const;
    int uncolored_square_degree(Vertex v) const;

    /// 1 + |remaining(v)| - (uncolored square-neighbours of v). Requires v uncolored.
    int excess(Vertex v) const;

    /// Colors v with c; c must be in remaining(v).
    void assign(Vertex v, Color c, const std::string& reason = "chosen");
    /// Colors v with its minimum remaining color; throws StuckAt if there is none.
    Color assign_min(Vertex v, const std::string& reason = "greedy");
    void unassign(Vertex v);

    std::size_t uncolored_count() const { return uncolored_; }
    std::vector<Vertex> uncolored_vertices() const;
    bool complete() const { return uncolored_ == 0; }
    Coloring to_coloring() const;

    /// Subsequent trace entries are tagged with this lemma and case.
    void set_context(std::string lemma, std::string case_id);
    const Trace& trace() const { return trace_; }

    /// Recomputes properness and list membership from scratch; throws on the first problem.
    void check_consistency() const;

private:
    std::shared_ptr<const Graph> graph_;
    std::shared_ptr<const Graph> square_;
    ListAssignment lists_;
    std::vector<Color> colors_;
    std::size_t uncolored_ = 0;
    std::string lemma_ = "-";
    std::string case_ = "-";
    Trace trace_;
};

/// Colors `order` in sequence with minimum available colors. Fails atomically.
PartialColoring greedy_extend(const PartialColoring& pc, std::span<const Vertex> order);

/// In-place variant; on StuckAt the coloring is left partially extended.
void greedy_in_place(PartialColoring& pc, std::span<const Vertex> order, const std::string& reason = "greedy");

/// Uncolored vertices outside `keep` by decreasing distance to the anchor edge's endpoints,
/// ties by id. The anchor endpoints must be in `keep`.
ExtensionOrder distance_class_order(const PartialColoring& pc, std::span<const Vertex> keep, Edge anchor);

/// Greedily colors every uncolored vertex except those in `keep`, farthest from the anchor first.
void color_all_except(PartialColoring& pc, std::span<const Vertex> keep, Edge anchor);

/// Proper partial coloring with exactly u and v uncolored.
PartialColoring color_all_but_edge(const Graph& g, const ListAssignment& lists, Edge uv);

/// An order of the uncolored vertices ending with u, v in which every other vertex has at least
/// two square-neighbours after it, if one exists.
std::optional<ExtensionOrder> two_excess_order(const PartialColoring& pc, Vertex u, Vertex v);

/// Completes the coloring along `order`. Requires excess(u) >= 1, excess(v) >= 2 and the order
/// shape above; the greedy run cannot then get stuck.
PartialColoring finish_two_excess(const PartialColoring& pc, Vertex u, Vertex v, std::span<const Vertex> order);
void finish_two_excess_in_place(PartialColoring& pc, Vertex u, Vertex v, std::span<const Vertex> order);

/// Colors for x and y that remove at most one color from remaining(v): a common color, else a
/// color outside remaining(v). One always exists when |remaining(x)| + |remaining(y)| > |remaining(v)|;
/// throws PreconditionViolated when none does.
std::pair<Color, Color> pick_saving_pair(const PartialColoring& pc, Vertex x, Vertex y, Vertex v);

struct SdrResult {
    bool satisfiable = false;
    /// One distinct color per list when satisfiable.
    std::vector<Color> colors;
    /// Indices of lists whose union is smaller than their number when unsatisfiable.
    std::vector<std::size_t> hall_witness;
};

/// Distinct representatives by augmenting paths, trying smaller colors first.
SdrResult sdr_assign(std::span<const std::vector<Color>> lists);

struct Violation {
    enum class Kind { NotInList, Clash, Uncolored, SizeMismatch };
    Kind kind;
    Vertex a = -1;
    Vertex b = -1;
    std::string message() const;
};

/// nullopt when the coloring is a proper list coloring of square(g).
std::optional<Violation> verify_square_coloring(const Graph& g, const ListAssignment& lists,
                                                const Coloring& coloring);

}  // namespace sqcolor
