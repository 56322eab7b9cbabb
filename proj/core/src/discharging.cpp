#include "sqcolor/discharging.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <sstream>
#include <unordered_set>

namespace sqcolor {

std::string_view to_string(ReducibleKind kind) {
    switch (kind) {
        case ReducibleKind::Pendant: return "Pendant";
        case ReducibleKind::Conf1: return "Conf1";
        case ReducibleKind::Conf2: return "Conf2";
        case ReducibleKind::Conf3: return "Conf3";
        case ReducibleKind::Conf4: return "Conf4";
        case ReducibleKind::ShortCycle2Vertex: return "ShortCycle2Vertex";
        case ReducibleKind::Adjacent2Vertices: return "Adjacent2Vertices";
        case ReducibleKind::AdjacentClass2Pair: return "AdjacentClass2Pair";
        case ReducibleKind::Class3NearClass23: return "Class3NearClass23";
        case ReducibleKind::HConfiguration: return "HConfiguration";
        case ReducibleKind::YConfiguration: return "YConfiguration";
    }
    return "?";
}

int arity(ReducibleKind kind) {
    switch (kind) {
        case ReducibleKind::Pendant:
        case ReducibleKind::ShortCycle2Vertex: return 1;
        case ReducibleKind::Conf1:
        case ReducibleKind::Adjacent2Vertices: return 2;
        case ReducibleKind::Conf2: return 3;
        case ReducibleKind::Conf3:
        case ReducibleKind::YConfiguration: return 4;
        case ReducibleKind::AdjacentClass2Pair:
        case ReducibleKind::Class3NearClass23: return 6;
        case ReducibleKind::Conf4: return 7;
        case ReducibleKind::HConfiguration: return 8;
    }
    return 0;
}

std::span<const ReducibleKind> kinds_of(DecomposeMode mode) {
    using K = ReducibleKind;
    static constexpr std::array seven{K::Pendant, K::Conf1, K::Conf2, K::Conf3, K::Conf4, K::ShortCycle2Vertex};
    static constexpr std::array six{K::Pendant,           K::Adjacent2Vertices, K::AdjacentClass2Pair,
                                    K::Class3NearClass23, K::HConfiguration,    K::YConfiguration};
    if (mode == DecomposeMode::Seven) return seven;
    return six;
}

namespace {

struct Nbrs {
    std::array<Vertex, 3> v{};
    int size = 0;
    const Vertex* begin() const { return v.data(); }
    const Vertex* end() const { return v.data() + size; }
};

/// A subcubic graph with vertices being deleted; everything is read through the alive mask.
class WorkGraph {
public:
    WorkGraph(const Graph& g, std::vector<char> alive) : g_(&g), alive_(std::move(alive)), deg_(alive_.size(), 0) {
        for (std::size_t v = 0; v < alive_.size(); ++v) {
            if (!alive_[v]) continue;
            ++count_;
            for (Vertex w : g.neighbors(static_cast<Vertex>(v)))
                if (alive_[static_cast<std::size_t>(w)]) ++deg_[v];
        }
    }
    explicit WorkGraph(const Graph& g) : WorkGraph(g, std::vector<char>(g.vertex_count(), 1)) {}

    std::size_t vertex_count() const { return alive_.size(); }
    std::size_t alive_count() const { return count_; }
    bool alive(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < alive_.size() && alive_[idx(v)]; }
    int deg(Vertex v) const { return deg_[idx(v)]; }
    bool adj(Vertex a, Vertex b) const { return alive(a) && alive(b) && g_->has_edge(a, b); }

    Nbrs nbrs(Vertex v) const {
        Nbrs out;
        for (Vertex w : g_->neighbors(v))
            if (alive_[idx(w)] && out.size < 3) out.v[static_cast<std::size_t>(out.size++)] = w;
        return out;
    }

    /// Number of 2-neighbours of a 3-vertex.
    int klass(Vertex v) const {
        int k = 0;
        for (Vertex w : nbrs(v)) k += deg(w) == 2;
        return k;
    }

    /// The neighbour of 2-vertex v other than `from`, or -1.
    Vertex other(Vertex v, Vertex from) const {
        for (Vertex w : nbrs(v))
            if (w != from) return w;
        return -1;
    }

    void remove(Vertex v) {
        alive_[idx(v)] = 0;
        --count_;
        for (Vertex w : g_->neighbors(v))
            if (alive_[idx(w)]) --deg_[idx(w)];
    }

private:
    static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }
    const Graph* g_;
    std::vector<char> alive_;
    std::vector<int> deg_;
    std::size_t count_ = 0;
};

using K = ReducibleKind;

bool is2(const WorkGraph& w, Vertex v) { return w.deg(v) == 2; }
bool is3(const WorkGraph& w, Vertex v) { return w.deg(v) == 3; }

/// The template of `kind` holds for tuple t in w.
bool holds(const WorkGraph& w, K kind, std::span<const Vertex> t) {
    if (static_cast<int>(t.size()) != arity(kind)) return false;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!w.alive(t[i])) return false;
        for (std::size_t j = 0; j < i; ++j)
            if (t[i] == t[j]) return false;
    }
    switch (kind) {
        case K::Pendant: return w.deg(t[0]) <= 1;
        case K::Conf1:
        case K::Adjacent2Vertices: return is2(w, t[0]) && is2(w, t[1]) && w.adj(t[0], t[1]);
        case K::Conf2:
            return is3(w, t[0]) && w.adj(t[0], t[1]) && w.adj(t[0], t[2]) && is2(w, t[1]) && is2(w, t[2]);
        case K::Conf3:
            return is3(w, t[0]) && is3(w, t[1]) && w.adj(t[0], t[1]) && w.adj(t[0], t[2]) && w.adj(t[1], t[3]) &&
                   is2(w, t[2]) && is2(w, t[3]);
        case K::Conf4: {
            if (!is3(w, t[6])) return false;
            for (int i = 0; i < 3; ++i) {
                Vertex v = t[static_cast<std::size_t>(i)], u = t[static_cast<std::size_t>(i + 3)];
                if (!w.adj(t[6], v) || !is3(w, v) || !w.adj(v, u) || !is2(w, u)) return false;
            }
            return true;
        }
        case K::ShortCycle2Vertex: {
            if (!is2(w, t[0])) return false;
            auto n = w.nbrs(t[0]);
            if (w.adj(n.v[0], n.v[1])) return true;
            for (Vertex z : w.nbrs(n.v[0]))
                if (z != t[0] && w.adj(z, n.v[1])) return true;
            return false;
        }
        case K::AdjacentClass2Pair:
            return is3(w, t[0]) && is3(w, t[1]) && w.adj(t[0], t[1]) && w.klass(t[0]) == 2 && w.klass(t[1]) == 2 &&
                   w.adj(t[0], t[2]) && w.adj(t[0], t[3]) && w.adj(t[1], t[4]) && w.adj(t[1], t[5]) &&
                   is2(w, t[2]) && is2(w, t[3]) && is2(w, t[4]) && is2(w, t[5]);
        case K::Class3NearClass23:
            return is3(w, t[0]) && w.klass(t[0]) == 3 && w.adj(t[0], t[2]) && w.adj(t[0], t[3]) &&
                   w.adj(t[0], t[4]) && is3(w, t[1]) && w.klass(t[1]) >= 2 && w.adj(t[1], t[4]) &&
                   w.adj(t[1], t[5]) && is2(w, t[5]);
        case K::HConfiguration:
            return is3(w, t[1]) && w.klass(t[1]) == 1 && w.adj(t[1], t[0]) && w.adj(t[1], t[2]) &&
                   w.adj(t[1], t[7]) && is2(w, t[7]) && is3(w, t[0]) && is3(w, t[2]) && w.klass(t[0]) == 2 &&
                   w.klass(t[2]) == 2 && w.adj(t[0], t[3]) && w.adj(t[0], t[4]) && w.adj(t[2], t[5]) &&
                   w.adj(t[2], t[6]) && is2(w, t[3]) && is2(w, t[4]) && is2(w, t[5]) && is2(w, t[6]);
        case K::YConfiguration: {
            if (!is3(w, t[0]) || w.klass(t[0]) != 3 || !w.adj(t[0], t[1]) || !w.adj(t[0], t[2]) || !w.adj(t[0], t[3]))
                return false;
            Vertex v2 = w.other(t[3], t[0]);
            if (v2 < 0 || !is3(w, v2) || w.klass(v2) != 1) return false;
            int seen1 = 0, seen2 = 0;
            for (Vertex x : w.nbrs(v2)) {
                if (x == t[3]) continue;
                const int k = w.klass(x);
                seen1 += k == 1;
                seen2 += k == 2;
            }
            return seen1 == 1 && seen2 == 1;
        }
    }
    return false;
}

/// First tuple of `kind` anchored at a, in neighbour order.
std::optional<std::vector<Vertex>> match(const WorkGraph& w, K kind, Vertex a) {
    if (!w.alive(a)) return std::nullopt;
    auto check = [&](std::span<const Vertex> t) -> std::optional<std::vector<Vertex>> {
        if (holds(w, kind, t)) return std::vector<Vertex>(t.begin(), t.end());
        return std::nullopt;
    };
    auto ok = [&](std::initializer_list<Vertex> t) { return check({t.begin(), t.size()}); };
    const Nbrs n = w.nbrs(a);
    switch (kind) {
        case K::Pendant:
        case K::ShortCycle2Vertex: return ok({a});
        case K::Conf1:
        case K::Adjacent2Vertices:
            for (Vertex b : n)
                if (auto t = ok({a, b})) return t;
            return std::nullopt;
        case K::Conf2: {
            Nbrs twos;
            for (Vertex b : n)
                if (is2(w, b)) twos.v[static_cast<std::size_t>(twos.size++)] = b;
            if (twos.size < 2) return std::nullopt;
            return ok({a, twos.v[0], twos.v[1]});
        }
        case K::Conf3:
            for (Vertex v2 : n)
                for (Vertex u1 : n)
                    for (Vertex u2 : w.nbrs(v2))
                        if (auto t = ok({a, v2, u1, u2})) return t;
            return std::nullopt;
        case K::Conf4: {
            if (n.size != 3) return std::nullopt;
            const Nbrs n0 = w.nbrs(n.v[0]), n1 = w.nbrs(n.v[1]), n2 = w.nbrs(n.v[2]);
            for (Vertex x : n0)
                for (Vertex y : n1)
                    for (Vertex z : n2)
                        if (auto t = ok({n.v[0], n.v[1], n.v[2], x, y, z, a})) return t;
            return std::nullopt;
        }
        case K::AdjacentClass2Pair: {
            if (!is3(w, a) || w.klass(a) != 2) return std::nullopt;
            Nbrs mine, theirs;
            Vertex v2 = -1;
            for (Vertex b : n) (is2(w, b) ? void(mine.v[static_cast<std::size_t>(mine.size++)] = b) : void(v2 = b));
            if (v2 < 0 || !is3(w, v2)) return std::nullopt;
            for (Vertex b : w.nbrs(v2))
                if (is2(w, b)) theirs.v[static_cast<std::size_t>(theirs.size++)] = b;
            if (theirs.size != 2) return std::nullopt;
            return ok({a, v2, mine.v[0], mine.v[1], theirs.v[0], theirs.v[1]});
        }
        case K::Class3NearClass23:
            if (n.size != 3) return std::nullopt;
            for (int i = 0; i < 3; ++i) {
                const Vertex u3 = n.v[static_cast<std::size_t>(i)];
                const Vertex u1 = n.v[static_cast<std::size_t>((i + 1) % 3)];
                const Vertex u2 = n.v[static_cast<std::size_t>((i + 2) % 3)];
                const Vertex v2 = w.other(u3, a);
                if (v2 < 0) continue;
                for (Vertex u4 : w.nbrs(v2))
                    if (auto t = ok({a, v2, std::min(u1, u2), std::max(u1, u2), u3, u4})) return t;
            }
            return std::nullopt;
        case K::HConfiguration: {
            if (n.size != 3) return std::nullopt;
            for (int i = 0; i < 3; ++i) {
                const Vertex u5 = n.v[static_cast<std::size_t>(i)];
                const Vertex v1 = n.v[static_cast<std::size_t>(i == 0 ? 1 : 0)];
                const Vertex v3 = n.v[static_cast<std::size_t>(i == 2 ? 1 : 2)];
                std::array<Vertex, 8> t{v1, a, v3};
                std::size_t len = 3;
                for (Vertex x : {v1, v3})
                    for (Vertex b : w.nbrs(x))
                        if (b != a && len < 7) t[len++] = b;
                if (len != 7) continue;
                t[len++] = u5;
                if (auto r = check(t)) return r;
            }
            return std::nullopt;
        }
        case K::YConfiguration:
            if (n.size != 3) return std::nullopt;
            for (int i = 0; i < 3; ++i) {
                const Vertex u3 = n.v[static_cast<std::size_t>(i)];
                const Vertex u1 = n.v[static_cast<std::size_t>((i + 1) % 3)];
                const Vertex u2 = n.v[static_cast<std::size_t>((i + 2) % 3)];
                if (auto t = ok({a, std::min(u1, u2), std::max(u1, u2), u3})) return t;
            }
            return std::nullopt;
    }
    return std::nullopt;
}

std::optional<ConfigInstance> find_first(const Graph& g, DecomposeMode mode) {
    WorkGraph w(g);
    for (K kind : kinds_of(mode))
        for (std::size_t a = 0; a < g.vertex_count(); ++a)
            if (auto t = match(w, kind, static_cast<Vertex>(a))) return ConfigInstance{kind, std::move(*t), 0};
    return std::nullopt;
}

void require_subcubic(const Graph& g) {
    if (g.max_degree() > 3) throw SolveError(SolveError::Kind::NotSubcubic, "NotSubcubic: maximum degree exceeds 3");
}

void require_girth7(const Graph& g) {
    auto gi = girth(g);
    if (gi && *gi < 7) {
        SolveError e(SolveError::Kind::GirthTooSmall, "GirthTooSmall: girth = " + std::to_string(*gi) + " < 7");
        e.value = Rational(*gi);
        throw e;
    }
}

}  // namespace

bool instance_valid(const Graph& g, const ConfigInstance& inst) {
    for (Vertex v : inst.vertices)
        if (v < 0 || static_cast<std::size_t>(v) >= g.vertex_count()) return false;
    return holds(WorkGraph(g), inst.kind, inst.vertices);
}

std::optional<ConfigInstance> find_7_reducible(const Graph& g) {
    require_subcubic(g);
    return find_first(g, DecomposeMode::Seven);
}

std::optional<ConfigInstance> find_6prime_reducible(const Graph& g) {
    require_subcubic(g);
    require_girth7(g);
    return find_first(g, DecomposeMode::SixPrime);
}

namespace {

/// Farthest vertex, counted from a template's anchor, whose degree the template reads. After a
/// removal only anchors this close to a vertex that lost a neighbour can gain an instance.
int rescan_radius(DecomposeMode mode) { return mode == DecomposeMode::Seven ? 2 : 4; }

struct TupleHash {
    std::size_t operator()(const std::vector<Vertex>& t) const {
        std::size_t h = 1469598103934665603ull;
        for (Vertex v : t) h = (h ^ static_cast<std::size_t>(v + 1)) * 1099511628211ull;
        return h;
    }
};

std::vector<Vertex> key_of(K kind, std::span<const Vertex> t) {
    std::vector<Vertex> k{static_cast<Vertex>(kind)};
    k.insert(k.end(), t.begin(), t.end());
    return k;
}

bool member(std::span<const Vertex> t, Vertex v) { return std::find(t.begin(), t.end(), v) != t.end(); }

[[noreturn]] void internal(const PartialColoring& pc, const std::string& what) {
    throw SolveError(SolveError::Kind::InternalCaseFailure, "InternalCaseFailure: " + what, pc.trace().render());
}

}  // namespace

DecomposeTrace decompose(const Graph& g, DecomposeMode mode) {
    require_subcubic(g);
    if (mode == DecomposeMode::SixPrime) require_girth7(g);
    const Rational bound = mode == DecomposeMode::Seven ? Rational(14, 5) : Rational(18, 7);
    if (g.vertex_count() > 0 && !mad_below(g, bound)) {
        const Rational m = mad_exact(g);
        {
            SolveError e(SolveError::Kind::MadTooLarge, "MadTooLarge: mad = " + m.str() + " is not below " + bound.str());
            e.value = m;
            throw e;
        }
    }

    const std::size_t n = g.vertex_count();
    DecomposeTrace tr;
    tr.mode = mode;
    tr.vertex_count = n;
    WorkGraph w(g);
    std::deque<ConfigInstance> B;
    std::unordered_set<std::vector<Vertex>, TupleHash> pending;
    std::uint64_t stamp = 0;

    auto scan = [&](Vertex a) {
        for (K kind : kinds_of(mode))
            if (auto t = match(w, kind, a))
                if (pending.insert(key_of(kind, *t)).second) {
                    B.push_back(ConfigInstance{kind, std::move(*t), stamp++});
                    ++tr.configs_added_to_B;
                }
    };
    for (std::size_t a = 0; a < n; ++a) scan(static_cast<Vertex>(a));

    std::vector<int> seen(n, -1);
    int epoch = 0;
    std::vector<std::vector<Vertex>> outside;
    std::vector<Vertex> boundary, frontier, next, ball;
    while (w.alive_count() > 0) {
        if (B.empty()) {
            ++tr.full_rescans;
            for (std::size_t a = 0; a < n; ++a) scan(static_cast<Vertex>(a));
            if (B.empty())
                throw SolveError(SolveError::Kind::NoConfigurationFound,
                                 "NoConfigurationFound: " + std::to_string(w.alive_count()) +
                                     " vertices remain and none lies in a reducible configuration");
        }
        ConfigInstance inst = std::move(B.front());
        B.pop_front();
        pending.erase(key_of(inst.kind, inst.vertices));
        if (!holds(w, inst.kind, inst.vertices)) {
            ++tr.configs_discarded_as_destroyed;
            continue;
        }

        outside.resize(inst.vertices.size());
        boundary.clear();
        for (std::size_t i = 0; i < inst.vertices.size(); ++i) {
            outside[i].clear();
            for (Vertex y : w.nbrs(inst.vertices[i]))
                if (!member(inst.vertices, y)) {
                    outside[i].push_back(y);
                    boundary.push_back(y);
                }
        }
        for (Vertex x : inst.vertices) w.remove(x);
        for (std::size_t k = 0; k < inst.vertices.size(); ++k) {
            const auto& out = outside[k];
            for (std::size_t i = 0; i < out.size(); ++i)
                for (std::size_t j = i + 1; j < out.size(); ++j) {
                    bool close = w.adj(out[i], out[j]);
                    for (Vertex z : w.nbrs(out[i])) close = close || w.adj(z, out[j]);
                    if (!close)
                        throw SolveError(SolveError::Kind::InternalCaseFailure,
                                         "InternalCaseFailure: removing " + std::string(to_string(inst.kind)) +
                                             " changes the square of the remainder");
                }
        }
        tr.removed.push_back(std::move(inst));

        ++epoch;
        frontier.clear();
        for (Vertex b : boundary)
            if (seen[static_cast<std::size_t>(b)] != epoch) {
                seen[static_cast<std::size_t>(b)] = epoch;
                frontier.push_back(b);
            }
        ball = frontier;
        for (int depth = 0; depth < rescan_radius(mode) && !frontier.empty(); ++depth) {
            next.clear();
            for (Vertex x : frontier)
                for (Vertex y : w.nbrs(x))
                    if (seen[static_cast<std::size_t>(y)] != epoch) {
                        seen[static_cast<std::size_t>(y)] = epoch;
                        next.push_back(y);
                    }
            ball.insert(ball.end(), next.begin(), next.end());
            std::swap(frontier, next);
        }
        std::sort(ball.begin(), ball.end());
        for (Vertex a : ball) scan(a);
    }
    return tr;
}

namespace {

Color outside_or_min(const PartialColoring& pc, Vertex a, Vertex b) {
    auto ra = pc.remaining(a);
    if (ra.empty()) throw ColoringError(ColoringError::Kind::StuckAt, "no color left", a);
    auto rb = pc.remaining(b);
    for (Color c : ra)
        if (!std::binary_search(rb.begin(), rb.end(), c)) return c;
    return ra.front();
}

void greedy(PartialColoring& pc, std::initializer_list<Vertex> order) {
    for (Vertex v : order) pc.assign_min(v);
}

bool search(PartialColoring& pc, std::span<const Vertex> verts) {
    std::function<bool(std::size_t)> go = [&](std::size_t i) {
        if (i == verts.size()) return true;
        for (Color c : pc.remaining(verts[i])) {
            pc.assign(verts[i], c, "search");
            if (go(i + 1)) return true;
            pc.unassign(verts[i]);
        }
        return false;
    };
    return go(0);
}

/// Colors v1, v2, u4 of a (v1, v2, u1, u2, u3, u4) instance and returns the options left at u3.
std::vector<Color> near_class3_prefix(PartialColoring& pc, std::span<const Vertex> t) {
    pc.assign(t[0], outside_or_min(pc, t[0], t[2]), "missing from u1");
    greedy(pc, {t[1], t[5]});
    return pc.remaining(t[4]);
}

void near_class3_finish(PartialColoring& pc, std::span<const Vertex> t, Color c) {
    pc.assign(t[4], c, "u3 option");
    greedy(pc, {t[3], t[2]});
}

void color_h(PartialColoring& pc, std::span<const Vertex> t) {
    try {
        pc.assign(t[1], outside_or_min(pc, t[1], t[7]), "missing from u5");
        greedy(pc, {t[3], t[4], t[0], t[5], t[2], t[6], t[7]});
        return;
    } catch (const ColoringError&) {
        for (Vertex v : t)
            if (pc.is_colored(v)) pc.unassign(v);
    }
    const std::array<Vertex, 8> order{t[1], t[0], t[2], t[3], t[4], t[5], t[6], t[7]};
    if (!search(pc, order)) internal(pc, "HConfiguration has no extension");
}

bool color_k4_by_sdr(PartialColoring& pc, std::span<const Vertex> t) {
    std::vector<std::vector<Color>> lists;
    for (Vertex v : t) lists.push_back(pc.remaining(v));
    SdrResult r = sdr_assign(lists);
    if (!r.satisfiable) return false;
    for (std::size_t i = 0; i < t.size(); ++i) pc.assign(t[i], r.colors[i], "distinct representative");
    return true;
}

std::vector<char> present_mask(const PartialColoring& pc, std::span<const Vertex> extra) {
    std::vector<char> alive(pc.vertex_count(), 0);
    for (std::size_t v = 0; v < alive.size(); ++v) alive[v] = pc.is_colored(static_cast<Vertex>(v));
    for (Vertex v : extra) alive[static_cast<std::size_t>(v)] = 1;
    return alive;
}

/// The class-3 instance around the Y-configuration's outer vertex once the Y has been cut off.
std::optional<ConfigInstance> overlapping_near_class3(const PartialColoring& pc, std::span<const Vertex> y) {
    const Graph& g = pc.graph();
    Vertex v2 = -1;
    for (Vertex x : g.neighbors(y[3]))
        if (x != y[0]) v2 = x;
    if (v2 < 0 || !pc.is_colored(v2)) return std::nullopt;
    WorkGraph w(g, present_mask(pc, {}));
    for (Vertex x : w.nbrs(v2)) {
        if (w.deg(x) != 3 || w.klass(x) != 3) continue;
        std::vector<Vertex> rest;
        for (Vertex u : w.nbrs(x))
            if (u != v2) rest.push_back(u);
        const Vertex other = w.other(v2, x);
        if (rest.size() != 2 || other < 0) continue;
        for (Vertex u4 : w.nbrs(other)) {
            std::vector<Vertex> t{x, other, rest[0], rest[1], v2, u4};
            if (holds(w, K::Class3NearClass23, t)) return ConfigInstance{K::Class3NearClass23, t, 0};
        }
    }
    return std::nullopt;
}

void color_y(PartialColoring& pc, std::span<const Vertex> t) {
    if (color_k4_by_sdr(pc, t)) return;
    auto inst = overlapping_near_class3(pc, t);
    if (!inst) internal(pc, "YConfiguration: no overlapping class-3 instance validates");
    const Vertex v2 = inst->vertices[4];
    const Color old = pc.color(v2);
    RecolorPair pair = recolor_u3(*inst, pc);
    const auto& pick = pair.phi[4] != old ? pair.phi : pair.psi;
    pc.set_context("YConfiguration", "recolor");
    for (Vertex v : inst->vertices) pc.unassign(v);
    for (std::size_t i = 0; i < pick.size(); ++i) pc.assign(inst->vertices[i], pick[i], "alternate coloring");
    pc.set_context("YConfiguration", "retry");
    if (!color_k4_by_sdr(pc, t)) internal(pc, "YConfiguration: lists still identical after recoloring");
}

/// Vertices at distance >= 3 inside the instance must stay at distance >= 3 in the graph, so that
/// they may share colors. Girth >= 7 guarantees this for the 6-list templates.
void check_template_distances(const PartialColoring& pc, std::span<const Vertex> t) {
    const std::size_t k = t.size();
    std::vector<int> d(k * k, 99);
    for (std::size_t i = 0; i < k; ++i) {
        d[i * k + i] = 0;
        for (std::size_t j = 0; j < k; ++j)
            if (pc.graph().has_edge(t[i], t[j])) d[i * k + j] = 1;
    }
    for (std::size_t m = 0; m < k; ++m)
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) d[i * k + j] = std::min(d[i * k + j], d[i * k + m] + d[m * k + j]);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (d[i * k + j] >= 3 && pc.square_adjacent(t[i], t[j]))
                internal(pc, "vertices " + std::to_string(t[i]) + " and " + std::to_string(t[j]) +
                                 " are far apart in the configuration but close in the graph");
}

void color_instance(PartialColoring& pc, const ConfigInstance& inst) {
    const auto& t = inst.vertices;
    pc.set_context(std::string(to_string(inst.kind)), "-");
    if (inst.kind == K::AdjacentClass2Pair || inst.kind == K::Class3NearClass23 || inst.kind == K::HConfiguration ||
        inst.kind == K::YConfiguration)
        check_template_distances(pc, t);
    switch (inst.kind) {
        case K::Pendant:
        case K::ShortCycle2Vertex:
        case K::Conf1:
        case K::Conf2:
        case K::Conf3:
        case K::Adjacent2Vertices: greedy_in_place(pc, t); return;
        case K::Conf4: greedy(pc, {t[0], t[1], t[2], t[6], t[3], t[4], t[5]}); return;
        case K::AdjacentClass2Pair:
            pc.assign(t[0], outside_or_min(pc, t[0], t[2]), "missing from u1");
            greedy(pc, {t[4], t[5], t[1], t[3], t[2]});
            return;
        case K::Class3NearClass23: {
            auto options = near_class3_prefix(pc, t);
            if (options.empty()) internal(pc, "Class3NearClass23: no color left at u3");
            near_class3_finish(pc, t, options.front());
            return;
        }
        case K::HConfiguration: color_h(pc, t); return;
        case K::YConfiguration: color_y(pc, t); return;
    }
}

void require_lists(const Graph& g, const ListAssignment& lists, std::size_t k) {
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

}  // namespace

RecolorPair recolor_u3(const ConfigInstance& inst, const PartialColoring& pc) {
    const auto& t = inst.vertices;
    if (inst.kind != K::Class3NearClass23 ||
        !std::all_of(t.begin(), t.end(), [&](Vertex v) { return v >= 0 && static_cast<std::size_t>(v) < pc.vertex_count(); }) ||
        !holds(WorkGraph(pc.graph(), present_mask(pc, t)), inst.kind, t))
        throw SolveError(SolveError::Kind::InvalidInstance, "InvalidInstance: not a valid class-3 instance");

    PartialColoring work = pc;
    for (Vertex v : t)
        if (work.is_colored(v)) work.unassign(v);
    work.set_context("recolor-u3", "-");
    RecolorPair out;
    try {
        auto options = near_class3_prefix(work, t);
        if (options.size() < 2) internal(work, "recolor-u3: fewer than two colors left at u3");
        for (int k = 0; k < 2; ++k) {
            PartialColoring branch = work;
            near_class3_finish(branch, t, options[static_cast<std::size_t>(k)]);
            auto& dst = k == 0 ? out.phi : out.psi;
            for (Vertex v : t) dst.push_back(branch.color(v));
        }
    } catch (const ColoringError& e) {
        internal(work, std::string("recolor-u3: ") + e.what());
    }
    return out;
}

Coloring rebuild(const Graph& g, const DecomposeTrace& trace, const ListAssignment& lists, Trace* log) {
    if (trace.vertex_count != g.vertex_count())
        throw SolveError(SolveError::Kind::PreconditionViolated, "trace was produced for a different graph");
    require_lists(g, lists, trace.mode == DecomposeMode::Seven ? 7 : 6);
    PartialColoring pc(g, lists);
    try {
        for (auto it = trace.removed.rbegin(); it != trace.removed.rend(); ++it) color_instance(pc, *it);
    } catch (const ColoringError& e) {
        internal(pc, e.what());
    }
    if (!pc.complete()) internal(pc, "trace does not cover every vertex");
    Coloring out = pc.to_coloring();
    if (auto bad = verify_square_coloring(g, lists, out)) internal(pc, "output fails verification: " + bad->message());
    if (log)
        for (const auto& e : pc.trace().entries()) log->add(e);
    return out;
}

Coloring solve7(const Graph& g, const ListAssignment& lists, Trace* log, DecomposeTrace* out) {
    require_subcubic(g);
    require_lists(g, lists, 7);
    DecomposeTrace tr = decompose(g, DecomposeMode::Seven);
    Coloring c = rebuild(g, tr, lists, log);
    if (out) *out = std::move(tr);
    return c;
}

Coloring solve6(const Graph& g, const ListAssignment& lists, Trace* log, DecomposeTrace* out) {
    require_subcubic(g);
    require_girth7(g);
    require_lists(g, lists, 6);
    DecomposeTrace tr = decompose(g, DecomposeMode::SixPrime);
    Coloring c = rebuild(g, tr, lists, log);
    if (out) *out = std::move(tr);
    return c;
}

namespace {

DischargeResult finish_charges(const std::vector<std::int64_t>& scaled) {
    DischargeResult r;
    for (std::int64_t x : scaled) r.charge.emplace_back(x, 70);
    if (!r.charge.empty()) r.minimum = *std::min_element(r.charge.begin(), r.charge.end());
    return r;
}

/// Vertices at distance exactly 2 from v.
std::vector<Vertex> second_ring(const Graph& g, Vertex v) {
    std::vector<Vertex> ring;
    for (Vertex a : g.neighbors(v))
        for (Vertex b : g.neighbors(a))
            if (b != v && !g.has_edge(v, b) && !member(ring, b)) ring.push_back(b);
    return ring;
}

}  // namespace

DischargeResult discharge_check_7(const Graph& g) {
    require_subcubic(g);
    std::vector<std::int64_t> mu(g.vertex_count());
    for (std::size_t v = 0; v < mu.size(); ++v) mu[v] = 70 * g.degree(static_cast<Vertex>(v));
    for (std::size_t v = 0; v < mu.size(); ++v) {
        const Vertex x = static_cast<Vertex>(v);
        if (g.degree(x) != 3) continue;
        auto give = [&](Vertex y, int amount) {
            if (g.degree(y) != 2) return;
            mu[v] -= amount;
            mu[static_cast<std::size_t>(y)] += amount;
        };
        for (Vertex y : g.neighbors(x)) give(y, 14);
        for (Vertex y : second_ring(g, x)) give(y, 7);
    }
    return finish_charges(mu);
}

DischargeResult discharge_check_6(const Graph& g) {
    require_subcubic(g);
    require_girth7(g);
    const std::size_t n = g.vertex_count();
    std::vector<int> cls(n, -1);
    for (std::size_t v = 0; v < n; ++v)
        if (g.degree(static_cast<Vertex>(v)) == 3) cls[v] = count_degree2_neighbors(g, static_cast<Vertex>(v));
    std::vector<std::int64_t> mu(n);
    for (std::size_t v = 0; v < n; ++v) mu[v] = 70 * g.degree(static_cast<Vertex>(v));
    auto give = [&](std::size_t from, Vertex to, int amount) {
        mu[from] -= amount;
        mu[static_cast<std::size_t>(to)] += amount;
    };
    for (std::size_t v = 0; v < n; ++v) {
        const Vertex x = static_cast<Vertex>(v);
        if (cls[v] < 0) continue;
        for (Vertex y : g.neighbors(x)) {
            const int cy = cls[static_cast<std::size_t>(y)];
            if (g.degree(y) == 2) give(v, y, 20);
            if (cls[v] == 0 && cy >= 0) give(v, y, 10);
            if (cls[v] == 1 && cy == 2) give(v, y, 10);
        }
        if (cls[v] == 1)
            for (Vertex y : second_ring(g, x))
                if (cls[static_cast<std::size_t>(y)] == 3) give(v, y, 10);
    }
    return finish_charges(mu);
}

std::string render_decompose_trace(const DecomposeTrace& trace, const Coloring& coloring,
                                   std::span<const std::string> labels) {
    auto name = [&](Vertex v) {
        return static_cast<std::size_t>(v) < labels.size() ? labels[static_cast<std::size_t>(v)] : std::to_string(v);
    };
    std::ostringstream os;
    for (const auto& inst : trace.removed) {
        os << "REMOVE " << to_string(inst.kind) << " [";
        for (std::size_t i = 0; i < inst.vertices.size(); ++i) os << (i ? " " : "") << name(inst.vertices[i]);
        os << "]\n";
    }
    for (auto it = trace.removed.rbegin(); it != trace.removed.rend(); ++it) {
        os << "COLOR " << to_string(it->kind) << " [";
        for (std::size_t i = 0; i < it->vertices.size(); ++i) {
            const Vertex v = it->vertices[i];
            os << (i ? " " : "") << name(v) << '=';
            if (static_cast<std::size_t>(v) < coloring.size()) os << coloring[static_cast<std::size_t>(v)];
            else os << '?';
        }
        os << "]\n";
    }
    return os.str();
}

}  // namespace sqcolor
