#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sqcolor/rational.hpp"

namespace sqcolor {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::runtime_error {
public:
    enum class Kind {
        DuplicateEdge,
        SelfLoop,
        DegreeExceeded,
        NegativeVertex,
        UndeclaredIsolatedVertex,
        VertexOutOfRange,
        EmptyGraph,
        NotAThreeVertex,
    };

    GraphError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Simple undirected graph on dense vertex ids 0..n-1 with sorted adjacency lists.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. When `vertex_count` is omitted it is max id + 1 and
    /// every vertex must be incident to some edge.
    static Graph from_edge_list(std::span<const Edge> edges, bool subcubic_mode,
                                std::optional<std::size_t> vertex_count = std::nullopt);

    /// Empty graph on n isolated vertices.
    static Graph isolated(std::size_t n);

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    int max_degree() const;
    bool has_edge(Vertex u, Vertex v) const;
    std::vector<Edge> edges() const;

    bool operator==(const Graph& o) const = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

/// u~v in the result iff 1 <= dist(u,v) <= 2.
Graph square(const Graph& g);

/// BFS distances from `source`; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source, int max_depth = -1);

/// BFS distances from the nearest vertex of `sources`.
std::vector<int> bfs_distances(const Graph& g, std::span<const Vertex> sources, int max_depth = -1);

/// Distance between two vertices, or -1 if disconnected.
int distance(const Graph& g, Vertex u, Vertex v);

bool is_connected(const Graph& g);

/// Nullopt encodes infinite girth (forests).
using Girth = std::optional<int>;

Girth girth(const Graph& g);

/// Ordered cycle v0..v(k-1); consecutive vertices (cyclically) are adjacent.
struct CycleWitness {
    std::vector<Vertex> vertices;

    std::size_t length() const { return vertices.size(); }
    bool valid_in(const Graph& g) const;
};

/// A shortest cycle, found from the smallest root id that lies on one.
std::optional<CycleWitness> shortest_cycle(const Graph& g);

/// Shortest cycle passing through `v`, if any.
std::optional<CycleWitness> shortest_cycle_through(const Graph& g, Vertex v);

/// Maximum over nonempty induced subgraphs H of 2|E(H)|/|V(H)|.
Rational mad_exact(const Graph& g);

/// Exhaustive subset enumeration (n <= 24).
Rational mad_bruteforce(const Graph& g);

/// Parametric max-flow (maximum density subgraph) route.
Rational mad_flow(const Graph& g);

/// Decides mad(g) < bound. Tries a linear-time fractional orientation first (each edge uv puts
/// d(v)/(d(u)+d(v)) of its weight on u); every H then has |E(H)| <= sum of loads over H, so
/// loads below bound/2 certify the answer. Falls back to mad_exact otherwise.
bool mad_below(const Graph& g, const Rational& bound);

inline Rational average_degree(const Graph& g) {
    if (g.vertex_count() == 0) throw GraphError(GraphError::Kind::EmptyGraph, "average degree of empty graph");
    return {static_cast<std::int64_t>(2 * g.edge_count()), static_cast<std::int64_t>(g.vertex_count())};
}

/// Strong type for the number of degree-2 neighbours of a 3-vertex.
struct VertexClass {
    int index = 0;
    bool operator==(const VertexClass&) const = default;
};

VertexClass vertex_class(const Graph& g, Vertex v);

/// Raw class count without the degree precondition (callers that already know d(v) = 3).
int count_degree2_neighbors(const Graph& g, Vertex v);

bool is_petersen(const Graph& g);

/// True iff there is a bijection mapping edges of a onto edges of b. Small graphs only.
bool isomorphic(const Graph& a, const Graph& b);

/// Canonical Petersen graph: outer 5-cycle 0..4, spokes i--i+5, inner pentagram.
Graph petersen_graph();

/// Subgraph induced on `keep`, relabelled densely in the order given.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

}  // namespace sqcolor
