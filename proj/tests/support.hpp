#pragma once

#include <vector>

#include "sqcolor/graph.hpp"
#include "sqcolor/list_coloring.hpp"

namespace sqcolor::test {

/// Partial coloring in which every vertex with an empty target is precolored with its own filler
/// color (1000 + id) and every other vertex is uncolored with remaining list exactly its target.
inline PartialColoring with_targets(const Graph& g, const std::vector<std::vector<Color>>& target) {
    const Graph sq = square(g);
    auto filler = [](Vertex w) { return 1000 + w; };
    auto open = [&](Vertex v) { return !target[static_cast<std::size_t>(v)].empty(); };
    std::vector<std::vector<Color>> lists(g.vertex_count());
    for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
        auto& l = lists[static_cast<std::size_t>(v)];
        if (!open(v)) {
            l = {filler(v)};
            continue;
        }
        l = target[static_cast<std::size_t>(v)];
        for (Vertex w : sq.neighbors(v))
            if (!open(w)) l.push_back(filler(w));
    }
    PartialColoring pc(g, ListAssignment(lists));
    for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v)
        if (!open(v)) pc.assign(v, filler(v), "precolored");
    return pc;
}

}  // namespace sqcolor::test
