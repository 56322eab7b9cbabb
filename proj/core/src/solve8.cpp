#include "sqcolor/solve8.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <set>

namespace sqcolor {

std::string_view to_string(StructureKind kind) {
    switch (kind) {
        case StructureKind::LowDegreeVertex: return "LowDegreeVertex";
        case StructureKind::Triangle: return "Triangle";
        case StructureKind::FourCycle: return "FourCycle";
        case StructureKind::TwoFiveCyclesSharingPath: return "TwoFiveCyclesSharingPath";
        case StructureKind::TwoFiveCyclesSharingEdge: return "TwoFiveCyclesSharingEdge";
        case StructureKind::FiveCycle: return "FiveCycle";
        case StructureKind::SixCycle: return "SixCycle";
        case StructureKind::HighGirthCycle: return "HighGirthCycle";
    }
    return "?";
}

namespace {

using Lists = std::vector<Color>;

[[noreturn]] void fail(const PartialColoring& pc, const std::string& what) {
    throw SolveError(SolveError::Kind::InternalCaseFailure, what, pc.trace().render());
}

bool contains(const Lists& l, Color c) { return std::binary_search(l.begin(), l.end(), c); }

std::optional<Color> first_common(const Lists& a, const Lists& b) {
    for (Color c : a)
        if (contains(b, c)) return c;
    return std::nullopt;
}

std::optional<Color> first_outside(const Lists& a, const Lists& b) {
    for (Color c : a)
        if (!contains(b, c)) return c;
    return std::nullopt;
}

Lists without(Lists l, std::initializer_list<Color> drop) {
    std::erase_if(l, [&](Color c) { return std::find(drop.begin(), drop.end(), c) != drop.end(); });
    return l;
}

/// The neighbour of v other than a and b.
Vertex third_neighbor(const Graph& g, Vertex v, Vertex a, Vertex b) {
    for (Vertex w : g.neighbors(v))
        if (w != a && w != b) return w;
    return -1;
}

bool is_cycle(const Graph& g, std::span<const Vertex> c) {
    std::set<Vertex> seen(c.begin(), c.end());
    if (c.size() < 3 || seen.size() != c.size()) return false;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!g.has_edge(c[i], c[(i + 1) % c.size()])) return false;
    return true;
}

/// Off-cycle neighbours u_i of a cycle in a 3-regular graph.
std::vector<Vertex> pendants_of(const Graph& g, std::span<const Vertex> cyc) {
    std::vector<Vertex> u;
    const std::size_t k = cyc.size();
    for (std::size_t i = 0; i < k; ++i) u.push_back(third_neighbor(g, cyc[i], cyc[(i + k - 1) % k], cyc[(i + 1) % k]));
    return u;
}

/// Colors x and y so that v loses at most one color. When the remaining lists are too short
/// for a saving pair, v already has the slack a saving would provide and any colors do.
void save_at(PartialColoring& pc, Vertex x, Vertex y, Vertex v) {
    auto rx = pc.remaining(x);
    auto ry = pc.remaining(y);
    auto rv = pc.remaining(v);
    if (rx.size() + ry.size() > rv.size()) {
        auto [a, b] = pick_saving_pair(pc, x, y, v);
        pc.assign(x, a, "save at " + std::to_string(v));
        pc.assign(y, b, "save at " + std::to_string(v));
    } else {
        pc.assign_min(x, "slack at " + std::to_string(v) + " (list larger than baseline)");
        pc.assign_min(y, "slack at " + std::to_string(v) + " (list larger than baseline)");
    }
}

/// Completes the coloring with a second-to-last and v last.
void finish_with(PartialColoring& pc, Vertex a, Vertex v) {
    auto order = two_excess_order(pc, a, v);
    if (!order) fail(pc, "no two-excess order ending at " + std::to_string(a) + ", " + std::to_string(v));
    finish_two_excess_in_place(pc, a, v, *order);
}

void greedy(PartialColoring& pc, std::initializer_list<Vertex> order) {
    for (Vertex v : order) pc.assign_min(v);
}

/// Colors a set of at most a handful of vertices exhaustively, smallest colors first.
bool color_core(PartialColoring& pc, std::span<const Vertex> verts, const std::string& reason) {
    std::function<bool(std::size_t)> go = [&](std::size_t i) {
        if (i == verts.size()) return true;
        for (Color c : pc.remaining(verts[i])) {
            pc.assign(verts[i], c, reason);
            if (go(i + 1)) return true;
            pc.unassign(verts[i]);
        }
        return false;
    };
    return go(0);
}

/// Colors four vertices forming a 4-cycle p0 p1 p2 p3 in the square (opposite pairs not
/// square-adjacent) from lists of size >= 2, or with one list of size 1 and the opposite
/// list large enough.
void color_square_c4(PartialColoring& pc, std::array<Vertex, 4> p) {
    for (int i = 0; i < 4; ++i)
        if (pc.remaining(p[i]).size() == 1) {
            greedy(pc, {p[i], p[(i + 1) % 4], p[(i + 3) % 4], p[(i + 2) % 4]});
            return;
        }
    for (int i = 0; i < 4; ++i)
        for (int d : {1, 3}) {
            Vertex a = p[i];
            Vertex b = p[(i + d) % 4];
            auto c = first_outside(pc.remaining(a), pc.remaining(b));
            if (!c) continue;
            pc.assign(a, *c, "color missing at " + std::to_string(b));
            greedy(pc, {p[(i + 4 - d) % 4], p[(i + 2) % 4], b});
            return;
        }
    greedy(pc, {p[0], p[2], p[1], p[3]});
}

// ---------------------------------------------------------------- detection

std::optional<std::vector<Vertex>> find_five_cycles_sharing_path(const Graph& g) {
    const auto n = static_cast<Vertex>(g.vertex_count());
    for (Vertex apex = 0; apex < n; ++apex) {
        auto nb = g.neighbors(apex);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                Vertex a = nb[i];
                Vertex b = nb[j];
                std::vector<std::array<Vertex, 2>> paths;
                for (Vertex x : g.neighbors(a)) {
                    if (x == apex || x == b) continue;
                    for (Vertex y : g.neighbors(x)) {
                        if (y == a || y == apex || y == b) continue;
                        if (g.has_edge(y, b)) paths.push_back({x, y});
                    }
                }
                for (std::size_t p = 0; p < paths.size(); ++p)
                    for (std::size_t q = p + 1; q < paths.size(); ++q) {
                        auto [x1, y1] = paths[p];
                        auto [x2, y2] = paths[q];
                        if (x1 == x2 || x1 == y2 || y1 == x2 || y1 == y2) continue;
                        return std::vector<Vertex>{a, x1, y1, b, y2, x2, apex};
                    }
            }
    }
    return std::nullopt;
}

std::optional<std::vector<Vertex>> find_five_cycles_sharing_edge(const Graph& g) {
    for (const auto& [a, b] : g.edges()) {
        std::vector<std::array<Vertex, 3>> paths;
        for (Vertex x : g.neighbors(a)) {
            if (x == b) continue;
            for (Vertex y : g.neighbors(x)) {
                if (y == a || y == b) continue;
                for (Vertex z : g.neighbors(y)) {
                    if (z == x || z == a || z == b) continue;
                    if (g.has_edge(z, b)) paths.push_back({x, y, z});
                }
            }
        }
        for (std::size_t p = 0; p < paths.size(); ++p)
            for (std::size_t q = p + 1; q < paths.size(); ++q) {
                std::set<Vertex> inner(paths[p].begin(), paths[p].end());
                inner.insert(paths[q].begin(), paths[q].end());
                if (inner.size() != 6) continue;
                const auto& s = paths[p];
                const auto& t = paths[q];
                return std::vector<Vertex>{a, s[0], s[1], s[2], b, t[2], t[1], t[0]};
            }
    }
    return std::nullopt;
}

}  // namespace

bool StructureWitness::valid_in(const Graph& g) const {
    const auto n = static_cast<Vertex>(g.vertex_count());
    for (Vertex v : vertices)
        if (v < -1 || v >= n) return false;
    const auto& w = vertices;
    switch (kind) {
        case StructureKind::LowDegreeVertex:
            if (w.size() != 2 || w[0] < 0 || g.degree(w[0]) > 2) return false;
            return w[1] == -1 ? g.degree(w[0]) == 0 : g.has_edge(w[0], w[1]);
        case StructureKind::Triangle: return w.size() == 3 && is_cycle(g, w);
        case StructureKind::FourCycle: return w.size() == 4 && is_cycle(g, w);
        case StructureKind::FiveCycle: return w.size() == 5 && is_cycle(g, w);
        case StructureKind::SixCycle: return w.size() == 6 && is_cycle(g, w);
        case StructureKind::TwoFiveCyclesSharingPath:
            return w.size() == 7 && is_cycle(g, std::span(w).first(6)) && g.has_edge(w[6], w[0]) &&
                   g.has_edge(w[6], w[3]) && std::find(w.begin(), w.begin() + 6, w[6]) == w.begin() + 6;
        case StructureKind::TwoFiveCyclesSharingEdge:
            return w.size() == 8 && is_cycle(g, w) && g.has_edge(w[0], w[4]);
        case StructureKind::HighGirthCycle: {
            auto gi = girth(g);
            return w.size() >= 7 && gi && static_cast<std::size_t>(*gi) == w.size() && is_cycle(g, w);
        }
    }
    return false;
}

StructureWitness detect_structure(const Graph& g) {
    if (g.vertex_count() == 0) throw SolveError(SolveError::Kind::PreconditionViolated, "empty graph");
    if (g.max_degree() > 3) throw SolveError(SolveError::Kind::NotSubcubic, "graph is not subcubic");
    if (!is_connected(g)) throw SolveError(SolveError::Kind::Disconnected, "graph is disconnected");
    if (is_petersen(g)) throw SolveError(SolveError::Kind::PetersenInput, "PetersenInput: the Petersen graph needs 10 colors");

    const auto n = static_cast<Vertex>(g.vertex_count());
    for (Vertex u = 0; u < n; ++u)
        if (g.degree(u) <= 2) {
            Vertex v = g.degree(u) == 0 ? -1 : g.neighbors(u).front();
            return {StructureKind::LowDegreeVertex, {u, v}};
        }
    auto c = shortest_cycle(g);
    // Every 3-regular graph has a cycle.
    const int gi = static_cast<int>(c->length());
    if (gi == 3) return {StructureKind::Triangle, c->vertices};
    if (gi == 4) return {StructureKind::FourCycle, c->vertices};
    if (gi == 5) {
        if (auto w = find_five_cycles_sharing_path(g)) return {StructureKind::TwoFiveCyclesSharingPath, *w};
        if (auto w = find_five_cycles_sharing_edge(g)) return {StructureKind::TwoFiveCyclesSharingEdge, *w};
        return {StructureKind::FiveCycle, c->vertices};
    }
    if (gi == 6) return {StructureKind::SixCycle, c->vertices};
    return {StructureKind::HighGirthCycle, c->vertices};
}

std::array<Color, 6> color_c6_square(std::span<const std::vector<Color>> in) {
    if (in.size() != 6) throw std::invalid_argument("expected six lists");
    std::array<Lists, 6> L;
    for (int i = 0; i < 6; ++i) {
        L[i] = in[static_cast<std::size_t>(i)];
        std::sort(L[i].begin(), L[i].end());
        L[i].erase(std::unique(L[i].begin(), L[i].end()), L[i].end());
        if (L[i].size() < 3) {
            SolveError e(SolveError::Kind::ListTooShort, "list " + std::to_string(i) + " has fewer than 3 colors");
            e.vertex = i;
            throw e;
        }
    }
    std::array<Color, 6> col;
    col.fill(kNoColor);
    auto adjacent = [](int a, int b) { return a != b && ((a - b + 6) % 6 != 3); };
    auto avail = [&](int x) {
        Lists out;
        for (Color c : L[x]) {
            bool used = false;
            for (int y = 0; y < 6; ++y) used = used || (adjacent(x, y) && col[y] == c);
            if (!used) out.push_back(c);
        }
        return out;
    };
    auto greedy_put = [&](std::initializer_list<int> order) {
        for (int x : order) {
            auto a = avail(x);
            if (a.empty()) throw SolveError(SolveError::Kind::InternalCaseFailure, "C6 square coloring stuck at " + std::to_string(x));
            col[x] = a.front();
        }
    };

    for (int r = 0; r < 3; ++r) {
        auto c1 = first_common(L[r], L[r + 3]);
        if (!c1) continue;
        auto V = [r](int j) { return (j + r) % 6; };
        col[V(0)] = col[V(3)] = *c1;
        if (auto c2 = first_common(avail(V(1)), avail(V(4)))) {
            col[V(1)] = col[V(4)] = *c2;
            greedy_put({V(2), V(5)});
        } else {
            col[V(2)] = avail(V(2)).at(0);
            if (avail(V(1)).size() >= 2)
                greedy_put({V(4), V(5), V(1)});
            else
                greedy_put({V(1), V(5), V(4)});
        }
        return col;
    }

    // Every antipodal pair of lists is disjoint.
    col[0] = L[0].front();
    std::optional<Color> c2;
    for (int k : {1, 2, 4, 5})
        if (avail(k).size() == 2) {
            c2 = first_outside(L[3], avail(k));
            break;
        }
    col[3] = c2 ? *c2 : L[3].front();
    int small = -1;
    int smalls = 0;
    for (int k : {1, 2, 4, 5}) {
        auto s = avail(k).size();
        if (s == 0) throw SolveError(SolveError::Kind::InternalCaseFailure, "C6 square: empty list after two colors");
        if (s == 1) {
            small = k;
            ++smalls;
        }
    }
    if (smalls == 0) {
        col[2] = avail(2).front();
        if (avail(1).size() >= 2)
            greedy_put({4, 5, 1});
        else
            greedy_put({1, 5, 4});
    } else if (smalls == 1) {
        int partner = small == 1 ? 2 : small == 2 ? 1 : small == 4 ? 5 : 4;
        greedy_put({small, partner, (partner + 3) % 6, (small + 3) % 6});
    } else {
        throw SolveError(SolveError::Kind::InternalCaseFailure, "C6 square: two lists reduced to one color");
    }
    return col;
}

namespace {

void low_degree_routine(PartialColoring& pc, Vertex u, Vertex v) {
    pc.set_context("low-degree", "-");
    if (v < 0) {
        pc.assign_min(u);
        return;
    }
    finish_with(pc, v, u);
}

void triangle_routine(PartialColoring& pc, const std::vector<Vertex>& t) {
    pc.set_context("triangle", "-");
    finish_with(pc, t[0], t[1]);
}

void four_cycle_routine(PartialColoring& pc, const std::vector<Vertex>& cyc) {
    const Graph& g = pc.graph();
    const auto n = static_cast<Vertex>(g.vertex_count());
    for (Vertex x = 0; x < n; ++x) {
        std::vector<Vertex> first_hop;
        auto nb = g.neighbors(x);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                for (Vertex b : g.neighbors(nb[i]))
                    if (b != x && g.has_edge(b, nb[j])) first_hop.push_back(nb[i]);
        if (first_hop.size() >= 2) {
            pc.set_context("four-cycle", "two-4-cycles");
            finish_with(pc, first_hop.front(), x);
            return;
        }
    }

    auto u = pendants_of(g, cyc);
    std::vector<Vertex> keep(cyc);
    keep.insert(keep.end(), u.begin(), u.end());
    pc.set_context("four-cycle", "setup");
    color_all_except(pc, keep, {cyc[0], cyc[1]});

    for (int pass = 0; pass < 2; ++pass)
        for (int r = 0; r < 4; ++r)
            for (bool refl : {false, true}) {
                auto at = [&](int i) { return static_cast<std::size_t>(refl ? (r - i + 8) % 4 : (r + i) % 4); };
                auto V = [&](int i) { return cyc[at(i)]; };
                auto U = [&](int i) { return u[at(i)]; };
                if (pass == 0 && distance(g, U(0), V(2)) == 3) {
                    pc.set_context("four-cycle", "1");
                    save_at(pc, U(0), V(2), V(0));
                    const std::vector<Vertex> order{U(1), U(2), U(3), V(3), V(1), V(0)};
                    finish_two_excess_in_place(pc, V(1), V(0), order);
                    return;
                }
                if (pass == 1 && distance(g, U(0), U(1)) == 3) {
                    pc.set_context("four-cycle", "2");
                    save_at(pc, U(0), U(1), V(0));
                    finish_with(pc, V(1), V(0));
                    return;
                }
            }
    fail(pc, "four-cycle: no labeling meets the distance conditions (would force a triangle)");
}

using Hexagon = std::array<Vertex, 7>;

Hexagon reflect(const Hexagon& a) { return {a[3], a[2], a[1], a[0], a[5], a[4], a[6]}; }

void five_cycles_path_case1(PartialColoring& pc, Hexagon V) {
    if (!first_common(pc.remaining(V[1]), pc.remaining(V[4])) &&
        first_common(pc.remaining(V[2]), pc.remaining(V[5])))
        V = reflect(V);
    if (auto c1 = first_common(pc.remaining(V[1]), pc.remaining(V[4]))) {
        pc.set_context("five-cycles-path", "1.1");
        pc.assign(V[1], *c1, "common color");
        pc.assign(V[4], *c1, "common color");
        save_at(pc, V[2], V[5], V[6]);
        greedy(pc, {V[0], V[3], V[6]});
        return;
    }
    pc.set_context("five-cycles-path", "1.2");
    for (Color c1 : pc.remaining(V[0]))
        for (Color c4 : pc.remaining(V[3])) {
            if (c4 == c1) continue;
            for (Color c7 : pc.remaining(V[6])) {
                if (c7 == c1 || c7 == c4) continue;
                int ones = 0;
                bool ok = true;
                for (int x : {1, 2, 4, 5}) {
                    auto s = without(pc.remaining(V[x]), {c1, c4, c7}).size();
                    ok = ok && s > 0;
                    ones += s == 1 ? 1 : 0;
                }
                if (!ok || ones > 1) continue;
                pc.assign(V[0], c1, "keep the 4-cycle colorable");
                pc.assign(V[3], c4, "keep the 4-cycle colorable");
                pc.assign(V[6], c7, "keep the 4-cycle colorable");
                color_square_c4(pc, {V[1], V[2], V[4], V[5]});
                return;
            }
        }
    fail(pc, "five-cycles-path 1.2: no admissible colors for v1, v4, v7");
}

void five_cycles_path_case2(PartialColoring& pc, const Hexagon& V) {
    const Graph& g = pc.graph();
    Vertex u2 = third_neighbor(g, V[1], V[0], V[2]);
    pc.set_context("five-cycles-path", "2");
    pc.unassign(u2);
    if (auto c1 = first_common(pc.remaining(u2), pc.remaining(V[3]))) {
        pc.set_context("five-cycles-path", "2.1");
        pc.assign(u2, *c1, "common color");
        pc.assign(V[3], *c1, "common color");
        save_at(pc, V[1], V[4], V[2]);
        greedy(pc, {V[6], V[5], V[0], V[2]});
        return;
    }
    pc.set_context("five-cycles-path", "2.2");
    if (auto c = first_common(pc.remaining(V[1]), pc.remaining(V[4]))) {
        pc.assign(V[1], *c, "common color");
        pc.assign(V[4], *c, "common color");
        save_at(pc, u2, V[3], V[2]);
        greedy(pc, {V[6], V[5], V[0], V[2]});
        return;
    }
    save_at(pc, u2, V[3], V[2]);
    for (Color c6 : pc.remaining(V[5]))
        for (Color c7 : pc.remaining(V[6])) {
            if (c7 == c6) continue;
            if (without(pc.remaining(V[1]), {c6, c7}).empty() || without(pc.remaining(V[4]), {c6, c7}).empty()) continue;
            pc.assign(V[5], c6, "keep v2 and v5 colorable");
            pc.assign(V[6], c7, "keep v2 and v5 colorable");
            const std::array<Vertex, 4> core{V[0], V[1], V[2], V[4]};
            if (!color_core(pc, core, "core")) fail(pc, "five-cycles-path 2.2: core not colorable");
            return;
        }
    fail(pc, "five-cycles-path 2.2: no admissible colors for v6, v7");
}

void five_cycles_path_routine(const PartialColoring& fresh, PartialColoring& out, Hexagon V, bool relabeled) {
    const Graph& g = fresh.graph();
    PartialColoring pc = fresh;
    pc.set_context("five-cycles-path", relabeled ? "3" : "setup");
    color_all_except(pc, V, {V[0], V[1]});
    const int d25 = distance(g, V[1], V[4]);
    const int d36 = distance(g, V[2], V[5]);
    if (d25 >= 3 && d36 >= 3) {
        five_cycles_path_case1(pc, V);
    } else if (d25 >= 3 || d36 >= 3) {
        five_cycles_path_case2(pc, d25 >= 3 ? V : reflect(V));
    } else {
        if (relabeled) fail(pc, "five-cycles-path 3: relabeled structure is again in case 3");
        Vertex v8 = third_neighbor(g, V[1], V[0], V[2]);
        Vertex v9 = third_neighbor(g, V[2], V[1], V[3]);
        if (!g.has_edge(v8, V[4]) || !g.has_edge(v9, V[5])) fail(pc, "five-cycles-path 3: expected common neighbours");
        Hexagon alt;
        if (distance(g, V[6], v8) == 3)
            alt = {V[1], V[0], V[6], V[3], V[4], v8, V[2]};
        else if (distance(g, V[6], v9) == 3)
            alt = {V[0], V[5], v9, V[2], V[3], V[6], V[1]};
        else if (distance(g, v8, v9) == 3)
            alt = {V[1], v8, V[4], V[5], v9, V[2], V[0]};
        else
            fail(pc, "five-cycles-path 3: v7, v8, v9 share a neighbour (Petersen)");
        five_cycles_path_routine(fresh, out, alt, true);
        return;
    }
    out = std::move(pc);
}

void five_cycles_edge_routine(PartialColoring& pc, const std::vector<Vertex>& w) {
    pc.set_context("five-cycles-edge", "setup");
    color_all_except(pc, w, {w[0], w[1]});
    if (auto c1 = first_common(pc.remaining(w[3]), pc.remaining(w[7]))) {
        pc.set_context("five-cycles-edge", "1");
        pc.assign(w[3], *c1, "common color");
        pc.assign(w[7], *c1, "common color");
        save_at(pc, w[1], w[5], w[4]);
        finish_with(pc, w[0], w[4]);
        return;
    }
    pc.set_context("five-cycles-edge", "2");
    save_at(pc, w[1], w[5], w[4]);
    greedy(pc, {w[2], w[6]});
    for (int round = 0; round < 2; ++round) {
        if (pc.excess(w[3]) >= 2) return finish_with(pc, w[4], w[3]);
        if (pc.excess(w[7]) >= 2) return finish_with(pc, w[4], w[7]);
        if (round == 0) pc.assign_min(w[0]);
    }
    fail(pc, "five-cycles-edge 2: neither v4 nor v8 reached excess 2");
}

void five_cycle_routine(PartialColoring& pc, const std::vector<Vertex>& cyc) {
    const Graph& g = pc.graph();
    auto u = pendants_of(g, cyc);
    std::vector<Vertex> keep(cyc);
    keep.insert(keep.end(), u.begin(), u.end());
    pc.set_context("five-cycle", "setup");
    color_all_except(pc, keep, {cyc[0], cyc[1]});

    for (int cs = 1; cs <= 2; ++cs)
        for (int r = 0; r < 5; ++r)
            for (bool refl : {false, true}) {
                auto at = [&](int i) { return static_cast<std::size_t>(refl ? (r - i + 10) % 5 : (r + i) % 5); };
                auto V = [&](int i) { return cyc[at(i)]; };
                auto U = [&](int i) { return u[at(i)]; };
                if (cs == 1) {
                    auto c1 = first_common(pc.remaining(U(0)), pc.remaining(V(2)));
                    if (!c1) continue;
                    pc.set_context("five-cycle", "1");
                    pc.assign(U(0), *c1, "common color");
                    pc.assign(V(2), *c1, "common color");
                    greedy(pc, {U(1), U(2), U(3)});
                    save_at(pc, U(4), V(1), V(0));
                    greedy(pc, {V(3), V(4), V(0)});
                    return;
                }
                auto c1 = first_common(pc.remaining(U(0)), pc.remaining(U(1)));
                if (!c1) continue;
                pc.set_context("five-cycle", "2");
                pc.assign(U(0), *c1, "common color");
                pc.assign(U(1), *c1, "common color");
                save_at(pc, V(4), U(2), V(1));
                pc.assign_min(U(4));
                finish_with(pc, V(0), V(1));
                return;
            }

    pc.set_context("five-cycle", "3");
    std::vector<Lists> lists;
    for (Vertex x : keep) lists.push_back(pc.remaining(x));
    auto sdr = sdr_assign(lists);
    if (!sdr.satisfiable) fail(pc, "five-cycle 3: no system of distinct representatives");
    for (std::size_t i = 0; i < keep.size(); ++i) pc.assign(keep[i], sdr.colors[i], "distinct representative");
}

void six_cycle_routine(PartialColoring& pc, const std::vector<Vertex>& cyc) {
    pc.set_context("six-cycle", "setup");
    color_all_except(pc, cyc, {cyc[0], cyc[1]});
    std::vector<Lists> lists;
    for (Vertex x : cyc) lists.push_back(pc.remaining(x));
    pc.set_context("six-cycle", "claim");
    std::array<Color, 6> cols{};
    try {
        cols = color_c6_square(lists);
    } catch (const SolveError& e) {
        fail(pc, std::string("six-cycle: ") + e.what());
    }
    for (std::size_t i = 0; i < 6; ++i) pc.assign(cyc[i], cols[i], "C6 square");
}

}  // namespace

namespace {

/// The cycle v_0..v_{k-1} with pendants u_i, read in one of the two orientations.
struct CycleView {
    PartialColoring& pc;
    const std::vector<Vertex>& cyc;
    const std::vector<Vertex>& pend;
    int dir = 1;

    std::size_t at(int i) const {
        const int k = static_cast<int>(cyc.size());
        return static_cast<std::size_t>(((dir * i) % k + k) % k);
    }
    Vertex v(int i) const { return cyc[at(i)]; }
    Vertex u(int i) const { return pend[at(i)]; }

    /// excess(w) after coloring two of its square-neighbours with a and b.
    int excess_after(Vertex w, Color a, Color b) const {
        auto r = pc.remaining(w);
        int lost = contains(r, a) ? 1 : 0;
        if (b != a && contains(r, b)) ++lost;
        return pc.excess(w) + 2 - lost;
    }

    /// A color for x after which w has excess >= 1, if any.
    std::optional<Color> slack_color(Vertex x, Vertex w) const {
        auto rx = pc.remaining(x);
        if (rx.empty()) return std::nullopt;
        if (pc.excess(w) >= 1) return rx.front();
        return first_outside(rx, pc.remaining(w));
    }

    void case1_continue(int i) {
        pc.set_context("cycle", "1");
        save_at(pc, u(i - 1), v(i + 2), v(i));
        pc.assign_min(u(i + 2));
        finish_with(pc, v(i + 1), v(i));
    }

    void case2(int i, Color c1) {
        pc.set_context("cycle", "2");
        pc.assign(u(i), c1, "gain at v_i");
        const Vertex x = u(i - 1), y = v(i + 1), w = v(i - 1);
        auto rx = pc.remaining(x), ry = pc.remaining(y), rw = pc.remaining(w);
        if (auto c = first_common(rx, ry)) {
            pc.assign(x, *c, "common color");
            pc.assign(y, *c, "common color");
            pc.assign_min(u(i + 1));
            finish_with(pc, v(i - 1), v(i));
        } else if (auto c2 = first_outside(rx, rw)) {
            pc.assign(x, *c2, "gain at v_{i-1}");
            case1_continue(i - 1);
        } else {
            auto c3 = first_outside(ry, rw);
            pc.assign(y, c3 ? *c3 : ry.at(0), c3 ? "gain at v_{i-1}" : "slack at v_{i-1} (list larger than baseline)");
            greedy(pc, {u(i + 1), u(i + 2)});
            if (pc.excess(v(i)) < 2) save_at(pc, u(i - 1), v(i + 2), v(i));
            finish_with(pc, v(i - 1), v(i));
        }
    }

    void case3(int i, Color c1) {
        pc.set_context("cycle", "3");
        pc.assign(u(i + 1), c1, "gain at v_i");
        const Vertex x = u(i), y = v(i + 2), w = v(i + 1);
        auto rx = pc.remaining(x), ry = pc.remaining(y), rw = pc.remaining(w);
        if (auto c = first_common(rx, ry)) {
            pc.assign(x, *c, "common color");
            pc.assign(y, *c, "common color");
            finish_with(pc, v(i + 1), v(i));
        } else if (auto c2 = first_outside(rx, rw)) {
            pc.assign(x, *c2, "gain at v_{i+1}");
            case1_continue(i);
        } else {
            auto c3 = first_outside(ry, rw);
            pc.assign(y, c3 ? *c3 : ry.at(0), c3 ? "gain at v_{i+1}" : "slack at v_{i+1} (list larger than baseline)");
            pc.assign_min(u(i + 2));
            if (pc.excess(v(i + 1)) < 2) save_at(pc, u(i), v(i + 3), v(i + 1));
            finish_with(pc, v(i), v(i + 1));
        }
    }

    void case4(int i, Color c1, Color c2) {
        pc.set_context("cycle", "4");
        pc.assign(u(i - 1), c1, "gain at v_i");
        pc.assign(u(i + 1), c2, "gain at v_i");
        const Vertex x = u(i), y = v(i + 2), w = v(i + 1);
        auto rx = pc.remaining(x), ry = pc.remaining(y), rw = pc.remaining(w);
        if (auto c = first_common(rx, ry)) {
            pc.assign(x, *c, "common color");
            pc.assign(y, *c, "common color");
            finish_with(pc, v(i + 1), v(i));
        } else if (auto c3 = first_outside(rx, rw)) {
            pc.assign(x, *c3, "gain at v_{i+1}");
            save_at(pc, v(i - 1), u(i + 2), v(i + 1));
            finish_with(pc, v(i), v(i + 1));
        } else {
            auto c4 = first_outside(ry, rw);
            pc.assign(y, c4 ? *c4 : ry.at(0), c4 ? "gain at v_{i+1}" : "slack at v_{i+1} (list larger than baseline)");
            greedy(pc, {u(i + 2), u(i + 3)});
            save_at(pc, u(i), v(i + 3), v(i + 1));
            finish_with(pc, v(i), v(i + 1));
        }
    }
};

}  // namespace

void extend_high_girth_core(PartialColoring& pc, const CycleWitness& cycle) {
    const Graph& g = pc.graph();
    const auto& cyc = cycle.vertices;
    const int k = static_cast<int>(cyc.size());
    const auto pend = pendants_of(g, cyc);
    try {
        CycleView fwd{pc, cyc, pend, 1};
        CycleView bwd{pc, cyc, pend, -1};

        for (int i = 0; i < k; ++i)
            for (Color c1 : pc.remaining(fwd.u(i)))
                for (Color c2 : pc.remaining(fwd.u(i + 1))) {
                    if (fwd.excess_after(fwd.v(i), c1, c2) < 1 || fwd.excess_after(fwd.v(i + 1), c1, c2) < 1) continue;
                    pc.set_context("cycle", "1");
                    pc.assign(fwd.u(i), c1, "gain at v_i and v_{i+1}");
                    pc.assign(fwd.u(i + 1), c2, "gain at v_i and v_{i+1}");
                    fwd.case1_continue(i);
                    return;
                }
        for (int i = 0; i < k; ++i)
            if (auto c1 = fwd.slack_color(fwd.u(i), fwd.v(i))) return fwd.case2(i, *c1);
        for (CycleView* view : {&fwd, &bwd})
            for (int i = 0; i < k; ++i)
                if (auto c1 = view->slack_color(view->u(i + 1), view->v(i))) return view->case3(i, *c1);
        for (int i = 0; i < k; ++i)
            for (Color c1 : pc.remaining(fwd.u(i - 1)))
                for (Color c2 : pc.remaining(fwd.u(i + 1)))
                    if (fwd.excess_after(fwd.v(i), c1, c2) >= 1) return fwd.case4(i, c1, c2);

        pc.set_context("cycle", "5");
        std::vector<Lists> orig(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j) orig[static_cast<std::size_t>(j)] = pc.remaining(fwd.u(j));
        for (int j = 0; j < k; ++j) {
            auto rv = pc.remaining(fwd.v(j));
            for (int d = -1; d <= 1; ++d)
                for (Color c : orig[fwd.at(j + d)])
                    if (!contains(rv, c)) fail(pc, "cycle 5: pendant list not inside the cycle vertex list");
            for (int d : {1, 2})
                if (first_common(orig[fwd.at(j)], orig[fwd.at(j + d)]))
                    fail(pc, "cycle 5: pendant lists within distance 2 intersect");
        }
        for (int j = 0; j < k; ++j) pc.assign_min(fwd.u(j), "arbitrary");
        for (int j = 0; j < k; ++j) {
            bool done = false;
            for (Color c : orig[fwd.at(j)])
                if (c != pc.color(fwd.u(j)) && pc.available(fwd.v(j), c)) {
                    pc.assign(fwd.v(j), c, "pendant list minus pendant color");
                    done = true;
                    break;
                }
            if (!done) fail(pc, "cycle 5: no color for cycle vertex " + std::to_string(fwd.v(j)));
        }
    } catch (const ColoringError& e) {
        fail(pc, std::string("cycle: ") + e.what());
    }
}

namespace {

void check_lists(const Graph& g, const ListAssignment& lists, std::size_t k) {
    if (lists.size() != g.vertex_count())
        throw SolveError(SolveError::Kind::PreconditionViolated, "list assignment does not match vertex count");
    for (std::size_t v = 0; v < lists.size(); ++v)
        if (lists[static_cast<Vertex>(v)].size() < k) {
            SolveError e(SolveError::Kind::ListTooShort,
                         "ListTooShort: vertex " + std::to_string(v) + " has fewer than " + std::to_string(k) + " colors");
            e.vertex = static_cast<Vertex>(v);
            throw e;
        }
}

void finish_and_verify(const PartialColoring& pc, Coloring& out, Trace* trace) {
    if (!pc.complete()) fail(pc, "routine left vertices uncolored");
    out = pc.to_coloring();
    if (auto bad = verify_square_coloring(pc.graph(), pc.lists(), out)) fail(pc, "output fails verification: " + bad->message());
    if (trace)
        for (const auto& e : pc.trace().entries()) trace->add(e);
}

Coloring solve_connected(const Graph& g, const ListAssignment& lists, Trace* trace) {
    const StructureWitness w = detect_structure(g);
    PartialColoring fresh(g, lists);
    PartialColoring pc = fresh;
    const auto& x = w.vertices;
    try {
        switch (w.kind) {
            case StructureKind::LowDegreeVertex: low_degree_routine(pc, x[0], x[1]); break;
            case StructureKind::Triangle: triangle_routine(pc, x); break;
            case StructureKind::FourCycle: four_cycle_routine(pc, x); break;
            case StructureKind::TwoFiveCyclesSharingPath: {
                Hexagon h;
                std::copy(x.begin(), x.end(), h.begin());
                five_cycles_path_routine(fresh, pc, h, false);
                break;
            }
            case StructureKind::TwoFiveCyclesSharingEdge: five_cycles_edge_routine(pc, x); break;
            case StructureKind::FiveCycle: five_cycle_routine(pc, x); break;
            case StructureKind::SixCycle: six_cycle_routine(pc, x); break;
            case StructureKind::HighGirthCycle: {
                auto pend = pendants_of(g, x);
                std::vector<Vertex> keep(x);
                keep.insert(keep.end(), pend.begin(), pend.end());
                pc.set_context("cycle", "setup");
                color_all_except(pc, keep, {x[0], x[1]});
                extend_high_girth_core(pc, CycleWitness{x});
                break;
            }
        }
    } catch (const ColoringError& e) {
        fail(pc, std::string(to_string(w.kind)) + ": " + e.what());
    }
    Coloring out;
    finish_and_verify(pc, out, trace);
    return out;
}

}  // namespace

Coloring solve8(const Graph& g, const ListAssignment& lists, Trace* trace) {
    if (g.max_degree() > 3) throw SolveError(SolveError::Kind::NotSubcubic, "graph is not subcubic");
    check_lists(g, lists, 8);
    const std::size_t n = g.vertex_count();
    Coloring out(n, kNoColor);
    std::vector<char> seen(n, 0);
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        auto dist = bfs_distances(g, static_cast<Vertex>(s));
        std::vector<Vertex> comp;
        for (std::size_t v = 0; v < n; ++v)
            if (dist[v] >= 0) {
                comp.push_back(static_cast<Vertex>(v));
                seen[v] = 1;
            }
        if (comp.size() == n) return solve_connected(g, lists, trace);
        Graph sub = induced_subgraph(g, comp);
        std::vector<std::vector<Color>> sub_lists;
        for (Vertex v : comp) sub_lists.emplace_back(lists[v].begin(), lists[v].end());
        Trace local;
        Coloring c = solve_connected(sub, ListAssignment(std::move(sub_lists)), trace ? &local : nullptr);
        for (std::size_t i = 0; i < comp.size(); ++i) out[static_cast<std::size_t>(comp[i])] = c[i];
        if (trace)
            for (auto e : local.entries()) {
                if (e.vertex >= 0) e.vertex = comp[static_cast<std::size_t>(e.vertex)];
                trace->add(std::move(e));
            }
    }
    return out;
}

Coloring extend_high_girth(const Graph& g, const ListAssignment& lists, const CycleWitness& cycle, Trace* trace) {
    const std::size_t n = g.vertex_count();
    for (std::size_t v = 0; v < n; ++v)
        if (g.degree(static_cast<Vertex>(v)) != 3)
            throw SolveError(SolveError::Kind::PreconditionViolated, "graph is not 3-regular");
    auto gi = girth(g);
    if (!gi || *gi < 7) {
        SolveError e(SolveError::Kind::GirthTooSmall, "precondition girth >= 7 violated (girth " +
                                                          std::to_string(gi.value_or(0)) + ")");
        if (gi) e.value = Rational(*gi);
        throw e;
    }
    if (!cycle.valid_in(g) || cycle.length() != static_cast<std::size_t>(*gi))
        throw SolveError(SolveError::Kind::PreconditionViolated, "cycle is not a shortest cycle of the graph");
    check_lists(g, lists, 8);

    const auto& x = cycle.vertices;
    auto pend = pendants_of(g, x);
    PartialColoring pc(g, lists);
    std::set<Vertex> distinct(pend.begin(), pend.end());
    if (distinct.size() != pend.size()) fail(pc, "cycle pendants are not distinct");
    for (std::size_t i = 0; i < pend.size(); ++i)
        for (std::size_t j = i + 1; j < pend.size(); ++j)
            if (g.has_edge(pend[i], pend[j])) fail(pc, "cycle pendants " + std::to_string(pend[i]) + " and " +
                                                       std::to_string(pend[j]) + " are adjacent");
    std::vector<Vertex> keep(x);
    keep.insert(keep.end(), pend.begin(), pend.end());
    pc.set_context("cycle", "setup");
    try {
        color_all_except(pc, keep, {x[0], x[1]});
    } catch (const ColoringError& e) {
        fail(pc, std::string("cycle setup: ") + e.what());
    }
    extend_high_girth_core(pc, cycle);
    Coloring out;
    finish_and_verify(pc, out, trace);
    return out;
}

}  // namespace sqcolor
