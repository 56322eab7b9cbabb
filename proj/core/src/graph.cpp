#include "sqcolor/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>

namespace sqcolor {

Graph Graph::from_edge_list(std::span<const Edge> edges, bool subcubic_mode,
                            std::optional<std::size_t> vertex_count) {
    std::size_t n = vertex_count.value_or(0);
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0) throw GraphError(GraphError::Kind::NegativeVertex, "negative vertex id");
        const auto hi = static_cast<std::size_t>(std::max(u, v)) + 1;
        if (vertex_count && hi > *vertex_count) {
            throw GraphError(GraphError::Kind::VertexOutOfRange,
                             "vertex id " + std::to_string(hi - 1) + " exceeds declared count");
        }
        n = std::max(n, hi);
    }

    Graph g;
    g.adj_.assign(n, {});
    for (const auto& [u, v] : edges) {
        if (u == v) throw GraphError(GraphError::Kind::SelfLoop, "self-loop at " + std::to_string(u));
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (std::size_t v = 0; v < n; ++v) {
        auto& list = g.adj_[v];
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
            throw GraphError(GraphError::Kind::DuplicateEdge, "duplicate edge at vertex " + std::to_string(v));
        }
        if (subcubic_mode && list.size() > 3) {
            throw GraphError(GraphError::Kind::DegreeExceeded,
                             "vertex " + std::to_string(v) + " has degree " + std::to_string(list.size()));
        }
        if (!vertex_count && list.empty()) {
            throw GraphError(GraphError::Kind::UndeclaredIsolatedVertex,
                             "vertex " + std::to_string(v) + " has no incident edge");
        }
    }
    g.edge_count_ = edges.size();
    return g;
}

Graph Graph::isolated(std::size_t n) {
    Graph g;
    g.adj_.assign(n, {});
    return g;
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& list : adj_) best = std::max(best, static_cast<int>(list.size()));
    return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& list = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < adj_.size(); ++u) {
        for (Vertex v : adj_[u]) {
            if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
        }
    }
    return out;
}

Graph square(const Graph& g) {
    std::vector<Edge> edges;
    const auto n = static_cast<Vertex>(g.vertex_count());
    std::vector<Vertex> seen(g.vertex_count(), -1);
    for (Vertex u = 0; u < n; ++u) {
        seen[static_cast<std::size_t>(u)] = u;
        auto visit = [&](Vertex w) {
            if (seen[static_cast<std::size_t>(w)] == u) return;
            seen[static_cast<std::size_t>(w)] = u;
            if (u < w) edges.emplace_back(u, w);
        };
        for (Vertex x : g.neighbors(u)) {
            visit(x);
            for (Vertex y : g.neighbors(x)) visit(y);
        }
    }
    return Graph::from_edge_list(edges, false, g.vertex_count());
}

std::vector<int> bfs_distances(const Graph& g, std::span<const Vertex> sources, int max_depth) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<Vertex> queue;
    for (Vertex s : sources) {
        if (dist[static_cast<std::size_t>(s)] != 0) {
            dist[static_cast<std::size_t>(s)] = 0;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        const Vertex x = queue.front();
        queue.pop_front();
        const int dx = dist[static_cast<std::size_t>(x)];
        if (max_depth >= 0 && dx >= max_depth) continue;
        for (Vertex y : g.neighbors(x)) {
            if (dist[static_cast<std::size_t>(y)] < 0) {
                dist[static_cast<std::size_t>(y)] = dx + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source, int max_depth) {
    const Vertex s[] = {source};
    return bfs_distances(g, std::span<const Vertex>(s), max_depth);
}

int distance(const Graph& g, Vertex u, Vertex v) {
    if (u == v) return 0;
    return bfs_distances(g, u)[static_cast<std::size_t>(v)];
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    const auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

namespace {

// BFS from root recording parent and the root-neighbour each vertex descends from. Returns the
// shortest cycle through root whose two root paths are disjoint, or the best length found
// below `bound`.
struct RootCycle {
    int length = 0;
    Vertex x = -1;
    Vertex y = -1;
};

std::optional<RootCycle> bfs_cycle_through(const Graph& g, Vertex root, std::vector<int>& dist,
                                           std::vector<Vertex>& parent, std::vector<Vertex>& branch,
                                           int bound) {
    std::vector<Vertex> touched;
    std::deque<Vertex> queue;
    auto mark = [&](Vertex v, int d, Vertex p, Vertex b) {
        dist[static_cast<std::size_t>(v)] = d;
        parent[static_cast<std::size_t>(v)] = p;
        branch[static_cast<std::size_t>(v)] = b;
        touched.push_back(v);
        queue.push_back(v);
    };
    mark(root, 0, -1, -1);
    std::optional<RootCycle> best;
    while (!queue.empty()) {
        const Vertex x = queue.front();
        queue.pop_front();
        const int dx = dist[static_cast<std::size_t>(x)];
        if (2 * dx + 1 >= (best ? best->length : bound)) break;
        for (Vertex y : g.neighbors(x)) {
            const int dy = dist[static_cast<std::size_t>(y)];
            if (dy < 0) {
                mark(y, dx + 1, x, x == root ? y : branch[static_cast<std::size_t>(x)]);
            } else if (y != parent[static_cast<std::size_t>(x)] && x != root && y != root &&
                       branch[static_cast<std::size_t>(x)] != branch[static_cast<std::size_t>(y)]) {
                const int len = dx + dy + 1;
                if (len < (best ? best->length : bound)) best = RootCycle{len, x, y};
            }
        }
    }
    if (best) {
        // Keep the parent chains for the caller; reset only distances.
        for (Vertex v : touched) dist[static_cast<std::size_t>(v)] = -1;
        return best;
    }
    for (Vertex v : touched) dist[static_cast<std::size_t>(v)] = -1;
    return std::nullopt;
}

CycleWitness assemble(Vertex root, const RootCycle& rc, const std::vector<Vertex>& parent) {
    std::vector<Vertex> left;
    for (Vertex v = rc.x; v != root; v = parent[static_cast<std::size_t>(v)]) left.push_back(v);
    std::reverse(left.begin(), left.end());
    CycleWitness c;
    c.vertices.push_back(root);
    c.vertices.insert(c.vertices.end(), left.begin(), left.end());
    for (Vertex v = rc.y; v != root; v = parent[static_cast<std::size_t>(v)]) c.vertices.push_back(v);
    return c;
}

}  // namespace

Girth girth(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<int> dist(n, -1);
    std::vector<Vertex> parent(n, -1), branch(n, -1);
    int best = std::numeric_limits<int>::max();
    for (Vertex r = 0; r < static_cast<Vertex>(n); ++r) {
        if (auto rc = bfs_cycle_through(g, r, dist, parent, branch, best)) best = rc->length;
        if (best == 3) break;
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

std::optional<CycleWitness> shortest_cycle_through(const Graph& g, Vertex v) {
    const std::size_t n = g.vertex_count();
    std::vector<int> dist(n, -1);
    std::vector<Vertex> parent(n, -1), branch(n, -1);
    auto rc = bfs_cycle_through(g, v, dist, parent, branch, std::numeric_limits<int>::max());
    if (!rc) return std::nullopt;
    return assemble(v, *rc, parent);
}

std::optional<CycleWitness> shortest_cycle(const Graph& g) {
    const Girth gg = girth(g);
    if (!gg) return std::nullopt;
    const std::size_t n = g.vertex_count();
    std::vector<int> dist(n, -1);
    std::vector<Vertex> parent(n, -1), branch(n, -1);
    for (Vertex r = 0; r < static_cast<Vertex>(n); ++r) {
        auto rc = bfs_cycle_through(g, r, dist, parent, branch, *gg + 1);
        if (rc && rc->length == *gg) return assemble(r, *rc, parent);
    }
    return std::nullopt;  // unreachable: some root lies on a shortest cycle
}

bool CycleWitness::valid_in(const Graph& g) const {
    const std::size_t k = vertices.size();
    if (k < 3) return false;
    std::vector<Vertex> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t i = 0; i < k; ++i) {
        const Vertex a = vertices[i];
        if (a < 0 || static_cast<std::size_t>(a) >= g.vertex_count()) return false;
        if (!g.has_edge(a, vertices[(i + 1) % k])) return false;
    }
    return true;
}

// --- maximum average degree -------------------------------------------------------------

Rational mad_bruteforce(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw GraphError(GraphError::Kind::EmptyGraph, "mad of empty graph");
    if (n > 24) throw std::invalid_argument("mad_bruteforce: n > 24");
    std::vector<std::uint32_t> nbr_mask(n, 0);
    for (const auto& [u, v] : g.edges()) {
        nbr_mask[static_cast<std::size_t>(u)] |= 1u << v;
        nbr_mask[static_cast<std::size_t>(v)] |= 1u << u;
    }
    // Track the best as a fraction 2e/k compared by cross-multiplication.
    std::int64_t best_num = 0, best_den = 1;
    const std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1);
    for (std::uint32_t s = 1; s != 0 && s <= full; ++s) {
        int twice_edges = 0;
        for (std::uint32_t rest = s; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            twice_edges += std::popcount(nbr_mask[static_cast<std::size_t>(v)] & s);
        }
        const int k = std::popcount(s);
        if (static_cast<std::int64_t>(twice_edges) * best_den > best_num * k) {
            best_num = twice_edges;
            best_den = k;
        }
    }
    return {best_num, best_den};
}

namespace {

// Dinic max flow on int64 capacities.
class MaxFlow {
public:
    explicit MaxFlow(std::size_t n) : graph_(n), level_(n), it_(n) {}

    void add_edge(int from, int to, std::int64_t cap) {
        graph_[static_cast<std::size_t>(from)].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({to, cap});
        graph_[static_cast<std::size_t>(to)].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({from, 0});
    }

    std::int64_t run(int s, int t) {
        std::int64_t flow = 0;
        while (bfs(s, t)) {
            std::fill(it_.begin(), it_.end(), 0);
            while (std::int64_t f = dfs(s, t, std::numeric_limits<std::int64_t>::max())) flow += f;
        }
        return flow;
    }

    // Vertices reachable from s in the residual graph after run().
    std::vector<bool> source_side(int s) const {
        std::vector<bool> seen(graph_.size(), false);
        std::vector<int> stack{s};
        seen[static_cast<std::size_t>(s)] = true;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (int id : graph_[static_cast<std::size_t>(x)]) {
                const auto& a = arcs_[static_cast<std::size_t>(id)];
                if (a.cap > 0 && !seen[static_cast<std::size_t>(a.to)]) {
                    seen[static_cast<std::size_t>(a.to)] = true;
                    stack.push_back(a.to);
                }
            }
        }
        return seen;
    }

private:
    struct Arc {
        int to;
        std::int64_t cap;
    };

    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::deque<int> q{s};
        level_[static_cast<std::size_t>(s)] = 0;
        while (!q.empty()) {
            const int x = q.front();
            q.pop_front();
            for (int id : graph_[static_cast<std::size_t>(x)]) {
                const auto& a = arcs_[static_cast<std::size_t>(id)];
                if (a.cap > 0 && level_[static_cast<std::size_t>(a.to)] < 0) {
                    level_[static_cast<std::size_t>(a.to)] = level_[static_cast<std::size_t>(x)] + 1;
                    q.push_back(a.to);
                }
            }
        }
        return level_[static_cast<std::size_t>(t)] >= 0;
    }

    std::int64_t dfs(int x, int t, std::int64_t pushed) {
        if (x == t) return pushed;
        auto& i = it_[static_cast<std::size_t>(x)];
        for (; i < graph_[static_cast<std::size_t>(x)].size(); ++i) {
            const int id = graph_[static_cast<std::size_t>(x)][i];
            auto& a = arcs_[static_cast<std::size_t>(id)];
            if (a.cap <= 0 || level_[static_cast<std::size_t>(a.to)] != level_[static_cast<std::size_t>(x)] + 1) continue;
            if (std::int64_t f = dfs(a.to, t, std::min(pushed, a.cap))) {
                a.cap -= f;
                arcs_[static_cast<std::size_t>(id ^ 1)].cap += f;
                return f;
            }
        }
        return 0;
    }

    std::vector<std::vector<int>> graph_;
    std::vector<Arc> arcs_;
    std::vector<int> level_;
    std::vector<std::size_t> it_;
};

// Maximises q|E(S)| - p|S| over vertex sets S; returns the maximiser.
std::vector<Vertex> densest_for_ratio(const Graph& g, const std::vector<Edge>& edges, std::int64_t p,
                                      std::int64_t q) {
    const int m = static_cast<int>(edges.size());
    const int n = static_cast<int>(g.vertex_count());
    const int source = m + n, sink = m + n + 1;
    MaxFlow flow(static_cast<std::size_t>(m + n + 2));
    const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
    for (int i = 0; i < m; ++i) {
        flow.add_edge(source, i, q);
        flow.add_edge(i, m + edges[static_cast<std::size_t>(i)].first, inf);
        flow.add_edge(i, m + edges[static_cast<std::size_t>(i)].second, inf);
    }
    for (int v = 0; v < n; ++v) flow.add_edge(m + v, sink, p);
    flow.run(source, sink);
    const auto side = flow.source_side(source);
    std::vector<Vertex> chosen;
    for (int v = 0; v < n; ++v) {
        if (side[static_cast<std::size_t>(m + v)]) chosen.push_back(v);
    }
    return chosen;
}

std::int64_t induced_edge_count(const Graph& g, const std::vector<Vertex>& set) {
    std::vector<bool> in(g.vertex_count(), false);
    for (Vertex v : set) in[static_cast<std::size_t>(v)] = true;
    std::int64_t twice = 0;
    for (Vertex v : set) {
        for (Vertex w : g.neighbors(v)) twice += in[static_cast<std::size_t>(w)] ? 1 : 0;
    }
    return twice / 2;
}

}  // namespace

Rational mad_flow(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw GraphError(GraphError::Kind::EmptyGraph, "mad of empty graph");
    const auto edges = g.edges();
    if (edges.empty()) return Rational(0);
    // Dinkelbach iteration on the edge density |E(S)|/|S|: each improving set strictly raises
    // the ratio, and there are finitely many ratios.
    std::int64_t e_best = static_cast<std::int64_t>(edges.size());
    std::int64_t v_best = static_cast<std::int64_t>(n);
    for (;;) {
        const auto set = densest_for_ratio(g, edges, e_best, v_best);
        if (set.empty()) break;
        const std::int64_t e_set = induced_edge_count(g, set);
        const auto v_set = static_cast<std::int64_t>(set.size());
        if (e_set * v_best <= e_best * v_set) break;
        e_best = e_set;
        v_best = v_set;
    }
    return {2 * e_best, v_best};
}

bool mad_below(const Graph& g, const Rational& bound) {
    if (g.vertex_count() == 0) throw GraphError(GraphError::Kind::EmptyGraph, "mad of empty graph");
    // Loads scaled by 60, a common multiple of every d(u)+d(v) <= 6 in a subcubic graph.
    if (g.max_degree() <= 3) {
        std::int64_t worst = 0;
        for (std::size_t u = 0; u < g.vertex_count(); ++u) {
            const int du = g.degree(static_cast<Vertex>(u));
            std::int64_t load = 0;
            for (Vertex v : g.neighbors(static_cast<Vertex>(u))) load += 60 * g.degree(v) / (du + g.degree(v));
            worst = std::max(worst, load);
        }
        if (Rational(2 * worst, 60) < bound) return true;
    }
    return mad_exact(g) < bound;
}

Rational mad_exact(const Graph& g) {
    if (g.vertex_count() == 0) throw GraphError(GraphError::Kind::EmptyGraph, "mad of empty graph");
    return g.vertex_count() <= 24 ? mad_bruteforce(g) : mad_flow(g);
}

// --- vertex classes ------------------------------------------------------------------------

int count_degree2_neighbors(const Graph& g, Vertex v) {
    int count = 0;
    for (Vertex w : g.neighbors(v)) count += g.degree(w) == 2 ? 1 : 0;
    return count;
}

VertexClass vertex_class(const Graph& g, Vertex v) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.vertex_count()) {
        throw GraphError(GraphError::Kind::VertexOutOfRange, "vertex out of range");
    }
    if (g.degree(v) != 3) {
        throw GraphError(GraphError::Kind::NotAThreeVertex,
                         "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
    }
    return {count_degree2_neighbors(g, v)};
}

// --- Petersen recognition -----------------------------------------------------------------

Graph petersen_graph() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::from_edge_list(edges, true);
}

namespace {

bool extend_isomorphism(const Graph& a, const Graph& b, std::vector<Vertex>& map, std::vector<bool>& used,
                        Vertex next) {
    const auto n = static_cast<Vertex>(a.vertex_count());
    if (next == n) return true;
    for (Vertex cand = 0; cand < n; ++cand) {
        if (used[static_cast<std::size_t>(cand)] || a.degree(next) != b.degree(cand)) continue;
        bool ok = true;
        for (Vertex prev = 0; prev < next && ok; ++prev) {
            ok = a.has_edge(next, prev) == b.has_edge(cand, map[static_cast<std::size_t>(prev)]);
        }
        if (!ok) continue;
        map[static_cast<std::size_t>(next)] = cand;
        used[static_cast<std::size_t>(cand)] = true;
        if (extend_isomorphism(a, b, map, used, next + 1)) return true;
        used[static_cast<std::size_t>(cand)] = false;
    }
    return false;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (Vertex v = 0; v < static_cast<Vertex>(a.vertex_count()); ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    std::vector<Vertex> map(a.vertex_count(), -1);
    std::vector<bool> used(a.vertex_count(), false);
    return extend_isomorphism(a, b, map, used, 0);
}

bool is_petersen(const Graph& g) {
    if (g.vertex_count() != 10 || g.edge_count() != 15) return false;
    for (Vertex v = 0; v < 10; ++v) {
        if (g.degree(v) != 3) return false;
    }
    if (girth(g) != 5) return false;
    static const Graph canonical = petersen_graph();
    return isomorphic(g, canonical);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
    std::vector<Vertex> index(g.vertex_count(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) index[static_cast<std::size_t>(keep[i])] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        for (Vertex w : g.neighbors(keep[i])) {
            const Vertex j = index[static_cast<std::size_t>(w)];
            if (j > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), j);
        }
    }
    return Graph::from_edge_list(edges, false, keep.size());
}

}  // namespace sqcolor
