#include "sqcolor/list_coloring.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace sqcolor {

ListAssignment::ListAssignment(std::vector<std::vector<Color>> lists) : lists_(std::move(lists)) {
    for (auto& l : lists_) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
        if (!l.empty() && l.front() < 0) throw std::invalid_argument("negative color id in list");
    }
}

ListAssignment ListAssignment::uniform(std::size_t n, int k) {
    std::vector<Color> base;
    for (int c = 1; c <= k; ++c) base.push_back(c);
    return ListAssignment(std::vector<std::vector<Color>>(n, base));
}

bool ListAssignment::contains(Vertex v, Color c) const {
    const auto& l = lists_[static_cast<std::size_t>(v)];
    return std::binary_search(l.begin(), l.end(), c);
}

std::size_t ListAssignment::min_size() const {
    std::size_t best = lists_.empty() ? 0 : lists_.front().size();
    for (const auto& l : lists_) best = std::min(best, l.size());
    return best;
}

std::string Trace::render(std::span<const std::string> labels) const {
    std::ostringstream out;
    for (const auto& e : entries_) {
        out << "LEMMA " << e.lemma << " CASE " << e.case_id << " vertex ";
        if (e.vertex >= 0 && static_cast<std::size_t>(e.vertex) < labels.size())
            out << labels[static_cast<std::size_t>(e.vertex)];
        else
            out << e.vertex;
        out << " color " << e.color << " reason " << e.reason << '\n';
    }
    return out.str();
}

PartialColoring::PartialColoring(const Graph& g, ListAssignment lists)
    : PartialColoring(std::make_shared<const Graph>(g), std::make_shared<const Graph>(square(g)), std::move(lists)) {}

PartialColoring::PartialColoring(std::shared_ptr<const Graph> g, std::shared_ptr<const Graph> sq,
                                 ListAssignment lists)
    : graph_(std::move(g)), square_(std::move(sq)), lists_(std::move(lists)) {
    if (lists_.size() != graph_->vertex_count())
        throw ColoringError(ColoringError::Kind::SizeMismatch, "list assignment does not match vertex count");
    colors_.assign(graph_->vertex_count(), kNoColor);
    uncolored_ = colors_.size();
}

std::vector<Color> PartialColoring::remaining(Vertex v) const {
    std::vector<Color> used;
    for (Vertex w : square_->neighbors(v))
        if (is_colored(w)) used.push_back(color(w));
    std::sort(used.begin(), used.end());
    std::vector<Color> out;
    for (Color c : lists_[v])
        if (!std::binary_search(used.begin(), used.end(), c)) out.push_back(c);
    return out;
}

bool PartialColoring::available(Vertex v, Color c) const {
    if (!lists_.contains(v, c)) return false;
    for (Vertex w : square_->neighbors(v))
        if (color(w) == c) return false;
    return true;
}

int PartialColoring::uncolored_square_degree(Vertex v) const {
    int n = 0;
    for (Vertex w : square_->neighbors(v))
        if (!is_colored(w)) ++n;
    return n;
}

int PartialColoring::excess(Vertex v) const {
    if (is_colored(v))
        throw ColoringError(ColoringError::Kind::AlreadyColored, "excess of colored vertex " + std::to_string(v), v);
    return 1 + static_cast<int>(remaining(v).size()) - uncolored_square_degree(v);
}

void PartialColoring::assign(Vertex v, Color c, const std::string& reason) {
    if (is_colored(v))
        throw ColoringError(ColoringError::Kind::AlreadyColored, "vertex " + std::to_string(v) + " already colored", v);
    if (!available(v, c))
        throw ColoringError(ColoringError::Kind::NotAvailable,
                            "color " + std::to_string(c) + " not available at vertex " + std::to_string(v), v);
    colors_[static_cast<std::size_t>(v)] = c;
    --uncolored_;
    trace_.add({lemma_, case_, v, c, reason});
}

Color PartialColoring::assign_min(Vertex v, const std::string& reason) {
    auto rem = remaining(v);
    if (rem.empty())
        throw ColoringError(ColoringError::Kind::StuckAt, "no color left at vertex " + std::to_string(v), v);
    assign(v, rem.front(), reason);
    return rem.front();
}

void PartialColoring::unassign(Vertex v) {
    if (!is_colored(v)) return;
    colors_[static_cast<std::size_t>(v)] = kNoColor;
    ++uncolored_;
    trace_.add({lemma_, case_, v, kNoColor, "uncolor"});
}

std::vector<Vertex> PartialColoring::uncolored_vertices() const {
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < colors_.size(); ++v)
        if (colors_[v] == kNoColor) out.push_back(static_cast<Vertex>(v));
    return out;
}

Coloring PartialColoring::to_coloring() const {
    if (!complete())
        throw ColoringError(ColoringError::Kind::PreconditionViolated, "coloring is not total");
    return colors_;
}

void PartialColoring::set_context(std::string lemma, std::string case_id) {
    lemma_ = std::move(lemma);
    case_ = std::move(case_id);
}

void PartialColoring::check_consistency() const {
    for (std::size_t i = 0; i < colors_.size(); ++i) {
        auto v = static_cast<Vertex>(i);
        if (!is_colored(v)) continue;
        if (!lists_.contains(v, color(v)))
            throw ColoringError(ColoringError::Kind::NotAvailable, "color outside list at " + std::to_string(v), v);
        for (Vertex w : square_->neighbors(v))
            if (w > v && color(w) == color(v))
                throw ColoringError(ColoringError::Kind::NotAvailable,
                                    "clash between " + std::to_string(v) + " and " + std::to_string(w), v);
    }
}

void greedy_in_place(PartialColoring& pc, std::span<const Vertex> order, const std::string& reason) {
    for (Vertex v : order) pc.assign_min(v, reason);
}

PartialColoring greedy_extend(const PartialColoring& pc, std::span<const Vertex> order) {
    PartialColoring out = pc;
    greedy_in_place(out, order);
    return out;
}

ExtensionOrder distance_class_order(const PartialColoring& pc, std::span<const Vertex> keep, Edge anchor) {
    const Graph& g = pc.graph();
    if (!g.has_edge(anchor.first, anchor.second))
        throw ColoringError(ColoringError::Kind::NotAnEdge, "anchor is not an edge");
    std::vector<char> kept(g.vertex_count(), 0);
    for (Vertex v : keep) kept[static_cast<std::size_t>(v)] = 1;
    if (!kept[static_cast<std::size_t>(anchor.first)] || !kept[static_cast<std::size_t>(anchor.second)])
        throw ColoringError(ColoringError::Kind::PreconditionViolated, "anchor endpoints must stay uncolored");
    const Vertex roots[2] = {anchor.first, anchor.second};
    auto dist = bfs_distances(g, std::span<const Vertex>(roots));
    ExtensionOrder order;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        auto v = static_cast<Vertex>(i);
        if (kept[i] || pc.is_colored(v)) continue;
        if (dist[i] < 0) throw ColoringError(ColoringError::Kind::Disconnected, "graph is disconnected", v);
        order.push_back(v);
    }
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return dist[static_cast<std::size_t>(a)] > dist[static_cast<std::size_t>(b)];
    });
    return order;
}

void color_all_except(PartialColoring& pc, std::span<const Vertex> keep, Edge anchor) {
    auto order = distance_class_order(pc, keep, anchor);
    greedy_in_place(pc, order, "distance class");
}

PartialColoring color_all_but_edge(const Graph& g, const ListAssignment& lists, Edge uv) {
    if (!is_connected(g)) throw ColoringError(ColoringError::Kind::Disconnected, "graph is disconnected");
    PartialColoring pc(g, lists);
    const Vertex keep[2] = {uv.first, uv.second};
    color_all_except(pc, keep, uv);
    return pc;
}

std::optional<ExtensionOrder> two_excess_order(const PartialColoring& pc, Vertex u, Vertex v) {
    const Graph& sq = pc.square_graph();
    std::vector<int> count(pc.vertex_count(), 0);
    std::vector<char> placed(pc.vertex_count(), 0);
    std::deque<Vertex> ready;
    std::vector<Vertex> seq;
    auto place = [&](Vertex x) {
        placed[static_cast<std::size_t>(x)] = 1;
        for (Vertex w : sq.neighbors(x)) {
            auto wi = static_cast<std::size_t>(w);
            if (placed[wi] || pc.is_colored(w)) continue;
            if (++count[wi] == 2) ready.push_back(w);
        }
    };
    place(u);
    place(v);
    while (!ready.empty()) {
        Vertex x = ready.front();
        ready.pop_front();
        if (placed[static_cast<std::size_t>(x)]) continue;
        seq.push_back(x);
        place(x);
    }
    if (seq.size() + 2 != pc.uncolored_count()) return std::nullopt;
    ExtensionOrder order(seq.rbegin(), seq.rend());
    order.push_back(u);
    order.push_back(v);
    return order;
}

namespace {

[[noreturn]] void violated(const std::string& clause) {
    throw ColoringError(ColoringError::Kind::PreconditionViolated, "precondition violated: " + clause);
}

}  // namespace

void finish_two_excess_in_place(PartialColoring& pc, Vertex u, Vertex v, std::span<const Vertex> order) {
    if (u == v) violated("u and v must differ");
    if (pc.is_colored(u) || pc.is_colored(v)) violated("u and v must be uncolored");
    if (!pc.square_adjacent(u, v)) violated("u and v must be adjacent in the square");
    if (pc.excess(u) < 1) violated("excess(u) >= 1");
    if (pc.excess(v) < 2) violated("excess(v) >= 2");
    if (order.size() != pc.uncolored_count()) violated("order must list every uncolored vertex once");
    if (order.size() < 2 || order[order.size() - 2] != u || order.back() != v) violated("order must end with u, v");
    std::vector<int> pos(pc.vertex_count(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
        auto x = static_cast<std::size_t>(order[i]);
        if (pc.is_colored(order[i]) || pos[x] != -1) violated("order must list every uncolored vertex once");
        pos[x] = static_cast<int>(i);
    }
    for (std::size_t i = 0; i + 2 < order.size(); ++i) {
        int later = 0;
        for (Vertex w : pc.square_graph().neighbors(order[i]))
            if (pos[static_cast<std::size_t>(w)] > static_cast<int>(i)) ++later;
        if (later < 2) violated("vertex " + std::to_string(order[i]) + " has fewer than two later square-neighbors");
    }
    greedy_in_place(pc, order, "two-excess finish");
}

PartialColoring finish_two_excess(const PartialColoring& pc, Vertex u, Vertex v, std::span<const Vertex> order) {
    PartialColoring out = pc;
    finish_two_excess_in_place(out, u, v, order);
    return out;
}

std::pair<Color, Color> pick_saving_pair(const PartialColoring& pc, Vertex x, Vertex y, Vertex v) {
    if (pc.is_colored(x) || pc.is_colored(y)) violated("x and y must be uncolored");
    if (!pc.square_adjacent(x, v) || !pc.square_adjacent(y, v)) violated("x and y must be square-adjacent to v");
    if (x == y || pc.square_adjacent(x, y)) violated("x and y must not be square-adjacent");
    auto rx = pc.remaining(x);
    auto ry = pc.remaining(y);
    auto rv = pc.remaining(v);
    for (Color c : rx)
        if (std::binary_search(ry.begin(), ry.end(), c)) return {c, c};
    for (Color c : rx)
        if (!std::binary_search(rv.begin(), rv.end(), c)) return {c, ry.front()};
    for (Color c : ry)
        if (!std::binary_search(rv.begin(), rv.end(), c)) return {rx.front(), c};
    // Only possible when |rx| + |ry| <= |rv|.
    violated("no saving pair: remaining(x) and remaining(y) are disjoint subsets of remaining(v)");
}

SdrResult sdr_assign(std::span<const std::vector<Color>> lists) {
    std::map<Color, std::size_t> index;
    std::vector<std::vector<std::size_t>> opts(lists.size());
    for (std::size_t i = 0; i < lists.size(); ++i) {
        std::vector<Color> l = lists[i];
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
        for (Color c : l) opts[i].push_back(index.emplace(c, index.size()).first->second);
    }
    std::vector<Color> color_of(index.size());
    for (const auto& [c, k] : index) color_of[k] = c;
    for (auto& o : opts)
        std::sort(o.begin(), o.end(), [&](std::size_t a, std::size_t b) { return color_of[a] < color_of[b]; });

    std::vector<long> owner(index.size(), -1);
    std::vector<long> match(lists.size(), -1);
    std::vector<char> seen_left;
    std::vector<char> seen_right;
    auto augment = [&](auto&& self, std::size_t i) -> bool {
        seen_left[i] = 1;
        for (std::size_t k : opts[i]) {
            if (seen_right[k]) continue;
            seen_right[k] = 1;
            if (owner[k] < 0 || self(self, static_cast<std::size_t>(owner[k]))) {
                owner[k] = static_cast<long>(i);
                match[i] = static_cast<long>(k);
                return true;
            }
        }
        return false;
    };

    SdrResult result;
    for (std::size_t i = 0; i < lists.size(); ++i) {
        seen_left.assign(lists.size(), 0);
        seen_right.assign(index.size(), 0);
        if (!augment(augment, i)) {
            for (std::size_t j = 0; j < lists.size(); ++j)
                if (seen_left[j]) result.hall_witness.push_back(j);
            return result;
        }
    }
    result.satisfiable = true;
    for (long k : match) result.colors.push_back(color_of[static_cast<std::size_t>(k)]);
    return result;
}

std::string Violation::message() const {
    switch (kind) {
        case Kind::NotInList:
            return "vertex " + std::to_string(a) + " has a color outside its list";
        case Kind::Clash:
            return "vertices " + std::to_string(a) + " and " + std::to_string(b) + " are within distance 2 and share a color";
        case Kind::Uncolored:
            return "vertex " + std::to_string(a) + " is uncolored";
        case Kind::SizeMismatch:
            return "coloring or lists do not match the vertex count";
    }
    return "violation";
}

std::optional<Violation> verify_square_coloring(const Graph& g, const ListAssignment& lists,
                                                const Coloring& coloring) {
    const std::size_t n = g.vertex_count();
    if (coloring.size() != n || lists.size() != n) return Violation{Violation::Kind::SizeMismatch};
    for (std::size_t i = 0; i < n; ++i) {
        auto v = static_cast<Vertex>(i);
        if (coloring[i] == kNoColor) return Violation{Violation::Kind::Uncolored, v};
        if (!lists.contains(v, coloring[i])) return Violation{Violation::Kind::NotInList, v};
    }
    for (std::size_t i = 0; i < n; ++i) {
        auto v = static_cast<Vertex>(i);
        for (Vertex w : g.neighbors(v)) {
            if (w > v && coloring[static_cast<std::size_t>(w)] == coloring[i])
                return Violation{Violation::Kind::Clash, v, w};
            for (Vertex x : g.neighbors(w))
                if (x > v && coloring[static_cast<std::size_t>(x)] == coloring[i])
                    return Violation{Violation::Kind::Clash, v, x};
        }
    }
    return std::nullopt;
}

}  // namespace sqcolor
