#include "sqcolor/testkit.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <set>

namespace sqcolor {

namespace {

/// Backtracking list coloring over dense color indices with forward checking.
class ExactColorer {
public:
    ExactColorer(const Graph& g, const ListAssignment& lists) : g_(g), n_(g.vertex_count()) {
        for (std::size_t v = 0; v < n_; ++v)
            for (Color c : lists[static_cast<Vertex>(v)]) colors_.push_back(c);
        std::sort(colors_.begin(), colors_.end());
        colors_.erase(std::unique(colors_.begin(), colors_.end()), colors_.end());
        const std::size_t u = colors_.size();
        dom_.resize(n_);
        in_list_.assign(n_, std::vector<char>(u, 0));
        blocked_.assign(n_, std::vector<int>(u, 0));
        avail_.resize(n_);
        for (std::size_t v = 0; v < n_; ++v) {
            for (Color c : lists[static_cast<Vertex>(v)]) {
                auto i = static_cast<int>(std::lower_bound(colors_.begin(), colors_.end(), c) - colors_.begin());
                dom_[v].push_back(i);
                in_list_[v][static_cast<std::size_t>(i)] = 1;
            }
            avail_[v] = static_cast<int>(dom_[v].size());
        }
        assigned_.assign(n_, -1);
    }

    std::optional<Coloring> run() {
        if (!solve(n_)) return std::nullopt;
        Coloring out(n_);
        for (std::size_t v = 0; v < n_; ++v) out[v] = colors_[static_cast<std::size_t>(assigned_[v])];
        return out;
    }

private:
    bool solve(std::size_t left) {
        if (left == 0) return true;
        std::size_t best = n_;
        for (std::size_t v = 0; v < n_; ++v) {
            if (assigned_[v] >= 0) continue;
            if (best == n_ || avail_[v] < avail_[best] ||
                (avail_[v] == avail_[best] && g_.degree(static_cast<Vertex>(v)) > g_.degree(static_cast<Vertex>(best))))
                best = v;
        }
        if (avail_[best] == 0) return false;
        const Vertex x = static_cast<Vertex>(best);
        for (int c : dom_[best]) {
            if (blocked_[best][static_cast<std::size_t>(c)]) continue;
            assigned_[best] = c;
            bool dead = false;
            for (Vertex w : g_.neighbors(x)) {
                auto wi = static_cast<std::size_t>(w);
                if (blocked_[wi][static_cast<std::size_t>(c)]++ == 0 && in_list_[wi][static_cast<std::size_t>(c)]) {
                    --avail_[wi];
                    if (assigned_[wi] < 0 && avail_[wi] == 0) dead = true;
                }
            }
            if (!dead && solve(left - 1)) return true;
            for (Vertex w : g_.neighbors(x)) {
                auto wi = static_cast<std::size_t>(w);
                if (--blocked_[wi][static_cast<std::size_t>(c)] == 0 && in_list_[wi][static_cast<std::size_t>(c)])
                    ++avail_[wi];
            }
            assigned_[best] = -1;
        }
        return false;
    }

    const Graph& g_;
    std::size_t n_;
    std::vector<Color> colors_;
    std::vector<std::vector<int>> dom_;
    std::vector<std::vector<char>> in_list_;
    std::vector<std::vector<int>> blocked_;
    std::vector<int> avail_;
    std::vector<int> assigned_;
};

std::size_t max_clique(const Graph& g) {
    std::size_t best = 0;
    std::function<void(std::vector<Vertex>&, std::vector<Vertex>, std::vector<Vertex>)> bk =
        [&](std::vector<Vertex>& r, std::vector<Vertex> p, std::vector<Vertex> x) {
            if (p.empty() && x.empty()) best = std::max(best, r.size());
            if (r.size() + p.size() <= best) return;
            while (!p.empty()) {
                const Vertex v = p.back();
                p.pop_back();
                std::vector<Vertex> np, nx;
                for (Vertex w : p)
                    if (g.has_edge(v, w)) np.push_back(w);
                for (Vertex w : x)
                    if (g.has_edge(v, w)) nx.push_back(w);
                r.push_back(v);
                bk(r, np, nx);
                r.pop_back();
                x.push_back(v);
            }
        };
    std::vector<Vertex> r, p(g.vertex_count());
    std::iota(p.begin(), p.end(), 0);
    bk(r, p, {});
    return best;
}

Graph graph_of(std::size_t n, const std::vector<Edge>& edges) { return Graph::from_edge_list(edges, false, n); }

Graph cycle_graph(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
    return graph_of(n, e);
}

std::optional<std::size_t> cycle_length(std::string_view name) {
    if (name.substr(0, 5) != "cycle") return std::nullopt;
    std::string_view rest = name.substr(5);
    if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
    std::size_t len = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), len);
    if (rest.empty() || ec != std::errc() || ptr != rest.data() + rest.size()) return std::nullopt;
    return len;
}

}  // namespace

std::optional<Coloring> exact_list_color(const Graph& g, const ListAssignment& lists) {
    if (lists.size() != g.vertex_count())
        throw TestkitError(TestkitError::Kind::InvalidArgument, "list assignment does not match vertex count");
    return ExactColorer(g, lists).run();
}

int chromatic_number_exact(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return 0;
    for (auto k = static_cast<int>(max_clique(g));; ++k)
        if (exact_list_color(g, ListAssignment::uniform(n, k))) return k;
}

ChoosabilityResult is_k_choosable_bounded(const Graph& g, int k, int universe) {
    if (k < 1 || universe < k)
        throw TestkitError(TestkitError::Kind::InvalidArgument, "need 1 <= k <= universe");
    ChoosabilityResult res;
    res.note = "searched all assignments of " + std::to_string(k) + "-subsets of {1.." + std::to_string(universe) +
               "} with colors renamed in first-seen order; a true result is not a proof of choosability";
    std::vector<std::vector<Color>> subsets;
    std::vector<Color> cur;
    std::function<void(Color)> gen = [&](Color next) {
        if (static_cast<int>(cur.size()) == k) return subsets.push_back(cur);
        for (Color c = next; c <= universe; ++c) {
            cur.push_back(c);
            gen(c + 1);
            cur.pop_back();
        }
    };
    gen(1);

    const std::size_t n = g.vertex_count();
    std::vector<std::vector<Color>> lists(n);
    std::function<bool(std::size_t, int)> go = [&](std::size_t v, int used) {
        if (v == n) {
            ++res.assignments_checked;
            ListAssignment la(lists);
            if (exact_list_color(g, la)) return false;
            res.no_counterexample = false;
            res.witness = std::move(la);
            return true;
        }
        for (const auto& s : subsets) {
            int fresh = 0;
            bool canonical = true;
            for (Color c : s)
                if (c > used) canonical = canonical && c == used + 1 + fresh++;
            if (!canonical) continue;
            lists[v] = s;
            if (go(v + 1, used + fresh)) return true;
        }
        return false;
    };
    go(0, 0);
    return res;
}

Graph from_lcf(std::size_t n, std::span<const int> pattern) {
    if (pattern.empty() || n < 4) throw TestkitError(TestkitError::Kind::InvalidArgument, "bad LCF pattern");
    std::set<Edge> edges;
    const auto sn = static_cast<long>(n);
    for (long i = 0; i < sn; ++i) {
        const long j = (((i + pattern[static_cast<std::size_t>(i) % pattern.size()]) % sn) + sn) % sn;
        edges.emplace(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % sn));
        edges.emplace(static_cast<Vertex>(std::min(i, j)), static_cast<Vertex>(std::max(i, j)));
    }
    std::set<Edge> norm;
    for (auto [a, b] : edges) norm.emplace(std::min(a, b), std::max(a, b));
    return graph_of(n, {norm.begin(), norm.end()});
}

std::vector<std::string> named_graphs() {
    return {"petersen", "petersen-minus-edge", "figure1a", "figure1b", "prism",
            "prism-subdivided", "heawood", "mcgee",  "k4",       "dodecahedron", "tutte-coxeter"};
}

Graph gen_named(std::string_view name) {
    if (name == "petersen") return petersen_graph();
    if (name == "petersen-minus-edge") {
        auto e = petersen_graph().edges();
        e.erase(e.begin());
        return graph_of(10, e);
    }
    if (name == "figure1a") {
        std::vector<Edge> e;
        for (Vertex i = 0; i < 8; ++i) e.emplace_back(i, (i + 1) % 8);
        for (Vertex i = 0; i < 4; ++i) e.emplace_back(i, i + 4);
        return graph_of(8, e);
    }
    if (name == "figure1b")
        return graph_of(8, {{0, 1}, {0, 3}, {0, 6}, {1, 5}, {1, 6}, {2, 3}, {2, 4}, {2, 5}, {3, 7}, {4, 6}, {4, 7}, {5, 7}});
    if (auto len = cycle_length(name)) {
        if (*len < 3) throw TestkitError(TestkitError::Kind::InvalidArgument, "a cycle needs at least 3 vertices");
        return cycle_graph(*len);
    }
    if (name == "prism") return graph_of(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
    if (name == "prism-subdivided")
        return graph_of(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 6}, {6, 3}, {1, 4}, {2, 5}});
    if (name == "k4") return graph_of(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    if (name == "heawood") {
        const int p[] = {5, -5};
        return from_lcf(14, p);
    }
    if (name == "mcgee") {
        const int p[] = {12, 7, -7};
        return from_lcf(24, p);
    }
    if (name == "dodecahedron") {
        const int p[] = {10, 7, 4, -4, -7, 10, -4, 7, -7, 4};
        return from_lcf(20, p);
    }
    if (name == "tutte-coxeter") {
        const int p[] = {-13, -9, 7, -7, 9, 13};
        return from_lcf(30, p);
    }
    throw TestkitError(TestkitError::Kind::UnknownName, "unknown fixture '" + std::string(name) + "'");
}

Graph subdivide_edges(const Graph& g, std::span<const int> counts) {
    const auto edges = g.edges();
    if (counts.size() != edges.size())
        throw TestkitError(TestkitError::Kind::InvalidArgument, "one subdivision count per edge is required");
    std::vector<Edge> out;
    auto next = static_cast<Vertex>(g.vertex_count());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (counts[i] < 0) throw TestkitError(TestkitError::Kind::InvalidArgument, "negative subdivision count");
        Vertex prev = edges[i].first;
        for (int j = 0; j < counts[i]; ++j) {
            out.emplace_back(prev, next);
            prev = next++;
        }
        out.emplace_back(prev, edges[i].second);
    }
    return graph_of(static_cast<std::size_t>(next), out);
}

Graph subdivide(const Graph& g, int k) {
    if (k < 0) throw TestkitError(TestkitError::Kind::InvalidArgument, "negative subdivision count");
    std::vector<int> counts(g.edge_count(), k);
    return subdivide_edges(g, counts);
}

Graph gen_random_cubic(int n, std::uint64_t seed) {
    if (n < 4 || n % 2 != 0)
        throw TestkitError(TestkitError::Kind::OddOrder, "OddOrder: a cubic graph needs an even order >= 4, got " +
                                                             std::to_string(n));
    std::mt19937_64 rng(seed);
    std::vector<Vertex> points(static_cast<std::size_t>(3 * n));
    for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<Vertex>(i / 3);
    for (;;) {
        std::shuffle(points.begin(), points.end(), rng);
        std::set<Edge> edges;
        bool ok = true;
        for (std::size_t i = 0; ok && i < points.size(); i += 2) {
            const Vertex a = std::min(points[i], points[i + 1]), b = std::max(points[i], points[i + 1]);
            ok = a != b && edges.emplace(a, b).second;
        }
        if (ok) return graph_of(static_cast<std::size_t>(n), {edges.begin(), edges.end()});
    }
}

std::optional<Graph> gen_random_cubic_girth(int n, int min_girth, std::uint64_t seed, int attempts) {
    if (n < 4 || n % 2 != 0)
        throw TestkitError(TestkitError::Kind::OddOrder, "OddOrder: a cubic graph needs an even order >= 4");
    std::mt19937_64 rng(seed);
    const auto un = static_cast<std::size_t>(n);
    for (int attempt = 0; attempt < attempts; ++attempt) {
        std::vector<std::vector<Vertex>> adj(un);
        std::vector<Edge> edges;
        auto far_enough = [&](Vertex s, Vertex t) {
            std::vector<int> dist(un, -1);
            std::vector<Vertex> queue{s};
            dist[static_cast<std::size_t>(s)] = 0;
            for (std::size_t h = 0; h < queue.size(); ++h) {
                const Vertex x = queue[h];
                if (dist[static_cast<std::size_t>(x)] >= min_girth - 2) continue;
                for (Vertex y : adj[static_cast<std::size_t>(x)])
                    if (dist[static_cast<std::size_t>(y)] < 0) {
                        if (y == t) return false;
                        dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                        queue.push_back(y);
                    }
            }
            return true;
        };
        bool stuck = false;
        while (!stuck) {
            std::vector<Vertex> open;
            for (std::size_t v = 0; v < un; ++v)
                if (adj[v].size() < 3) open.push_back(static_cast<Vertex>(v));
            if (open.empty()) return graph_of(un, edges);
            std::shuffle(open.begin(), open.end(), rng);
            const Vertex s = open.front();
            stuck = true;
            for (std::size_t i = 1; i < open.size(); ++i) {
                const Vertex t = open[i];
                if (!far_enough(s, t)) continue;
                adj[static_cast<std::size_t>(s)].push_back(t);
                adj[static_cast<std::size_t>(t)].push_back(s);
                edges.emplace_back(std::min(s, t), std::max(s, t));
                stuck = false;
                break;
            }
        }
    }
    return std::nullopt;
}

ListAssignment random_lists(std::size_t n, int k, int universe, std::mt19937_64& rng) {
    if (k < 0 || universe < k) throw TestkitError(TestkitError::Kind::InvalidArgument, "need 0 <= k <= universe");
    std::vector<Color> all(static_cast<std::size_t>(universe));
    std::iota(all.begin(), all.end(), 1);
    std::vector<std::vector<Color>> lists(n);
    for (auto& l : lists) std::sample(all.begin(), all.end(), std::back_inserter(l), k, rng);
    return ListAssignment(std::move(lists));
}

}  // namespace sqcolor
