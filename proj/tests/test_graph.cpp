#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "sqcolor/graph.hpp"
#include "sqcolor/graph_io.hpp"
#include "sqcolor/testkit.hpp"

using namespace sqcolor;

namespace {

Graph make(std::initializer_list<Edge> edges, bool subcubic = true) {
    std::vector<Edge> e(edges);
    return Graph::from_edge_list(e, subcubic);
}

// Floyd-Warshall distances, independent of the BFS code under test.
std::vector<std::vector<int>> all_pairs(const Graph& g) {
    const int n = static_cast<int>(g.vertex_count()), inf = 1 << 20;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v) {
        d[v][v] = 0;
        for (Vertex w : g.neighbors(v)) d[v][w] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

// Girth as the shortest closed walk found by deleting each edge and measuring the detour.
std::optional<int> girth_by_edge_deletion(const Graph& g) {
    std::optional<int> best;
    for (const Edge& e : g.edges()) {
        std::vector<Edge> rest;
        for (const Edge& f : g.edges())
            if (f != e) rest.push_back(f);
        const Graph h = Graph::from_edge_list(rest, false, g.vertex_count());
        const int d = distance(h, e.first, e.second);
        if (d > 0 && (!best || d + 1 < *best)) best = d + 1;
    }
    return best;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
    std::vector<Edge> e;
    for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
    return Graph::from_edge_list(e, false, g.vertex_count());
}

}  // namespace

TEST_CASE("rational arithmetic stays reduced") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(14, 5) > Rational(18, 7));
    CHECK(Rational(14, 5).str() == "14/5");
    CHECK(Rational(4, 2).str() == "2");
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("edge list construction") {
    const Graph t = make({{0, 1}, {1, 2}, {2, 0}});
    CHECK(t.vertex_count() == 3);
    CHECK(t.edge_count() == 3);

    auto kind_of = [](auto&& f) {
        try {
            f();
        } catch (const GraphError& e) {
            return e.kind();
        }
        FAIL("no error");
        return GraphError::Kind::EmptyGraph;
    };
    CHECK(kind_of([] { make({{0, 1}, {0, 1}}); }) == GraphError::Kind::DuplicateEdge);
    CHECK(kind_of([] { make({{0, 1}, {1, 0}}); }) == GraphError::Kind::DuplicateEdge);
    CHECK(kind_of([] { make({{2, 2}}); }) == GraphError::Kind::SelfLoop);
    CHECK(kind_of([] { make({{0, 1}, {0, 2}, {0, 3}, {0, 4}}); }) == GraphError::Kind::DegreeExceeded);
    CHECK_NOTHROW(make({{0, 1}, {0, 2}, {0, 3}, {0, 4}}, false));
}

TEST_CASE("square matches distance <= 2") {
    CHECK(square(gen_named("petersen")).edge_count() == 45);

    const Graph c6sq = square(gen_named("cycle6"));
    CHECK(c6sq.edge_count() == 12);
    for (Vertex v = 0; v < 6; ++v) CHECK(c6sq.degree(v) == 4);

    for (const char* name : {"figure1a", "figure1b"}) CHECK(square(gen_named(name)).edge_count() == 28);

    std::mt19937_64 rng(1);
    for (int i = 0; i < 30; ++i) {
        const Graph g = subdivide_edges(gen_random_cubic(12, rng()), std::vector<int>(18, i % 3));
        const auto d = all_pairs(g);
        const Graph sq = square(g);
        for (Vertex u = 0; u < static_cast<Vertex>(g.vertex_count()); ++u)
            for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v)
                CHECK(sq.has_edge(u, v) == (u != v && d[u][v] <= 2));
    }
}

TEST_CASE("girth and shortest cycles") {
    CHECK(girth(gen_named("figure1a")) == 4);
    CHECK(girth(gen_named("figure1b")) == 3);
    CHECK(girth(gen_named("cycle9")) == 9);
    CHECK(girth(gen_named("mcgee")) == 7);
    CHECK(girth(gen_named("heawood")) == 6);
    CHECK(girth(gen_named("tutte-coxeter")) == 8);
    CHECK_FALSE(girth(make({{0, 1}, {1, 2}, {1, 3}})).has_value());

    const auto pc = shortest_cycle(gen_named("petersen"));
    REQUIRE(pc);
    CHECK(pc->length() == 5);
    CHECK(pc->valid_in(gen_named("petersen")));

    const auto c7 = shortest_cycle(gen_named("cycle7"));
    REQUIRE(c7);
    CHECK(c7->length() == 7);
    CHECK_FALSE(shortest_cycle(make({{0, 1}, {1, 2}, {2, 3}})).has_value());

    std::mt19937_64 rng(2);
    for (int i = 0; i < 40; ++i) {
        std::vector<int> counts(24);
        for (int& c : counts) c = std::uniform_int_distribution<int>(0, 2)(rng);
        const Graph g = subdivide_edges(gen_random_cubic(16, rng()), counts);
        CHECK(girth(g) == girth_by_edge_deletion(g));
        const auto cyc = shortest_cycle(g);
        REQUIRE(cyc);
        CHECK(cyc->valid_in(g));
        CHECK(static_cast<int>(cyc->length()) == *girth(g));
    }
}

TEST_CASE("maximum average degree") {
    CHECK(mad_exact(gen_named("petersen-minus-edge")) == Rational(14, 5));
    CHECK(mad_exact(gen_named("cycle5")) == Rational(2));
    const Graph k4p = make({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}}, false);
    CHECK(mad_exact(k4p) == Rational(3));
    CHECK(mad_bruteforce(k4p) == Rational(3));

    std::mt19937_64 rng(3);
    for (int i = 0; i < 60; ++i) {
        std::vector<int> counts(12);
        for (int& c : counts) c = std::bernoulli_distribution(0.4)(rng) ? 1 : 0;
        const Graph g = subdivide_edges(gen_random_cubic(8, rng()), counts);
        if (g.vertex_count() > 20) continue;
        const Rational brute = mad_bruteforce(g);
        CHECK(mad_flow(g) == brute);
        CHECK(mad_exact(g) == brute);
        for (const Rational& b : {Rational(14, 5), Rational(18, 7), Rational(5, 2), brute})
            CHECK(mad_below(g, b) == (brute < b));
    }
}

TEST_CASE("vertex classes") {
    const Graph k4s = subdivide(gen_named("k4"), 1);
    for (Vertex v = 0; v < 4; ++v) CHECK(vertex_class(k4s, v) == VertexClass{3});
    const Graph p = gen_named("petersen");
    for (Vertex v = 0; v < 10; ++v) CHECK(vertex_class(p, v) == VertexClass{0});
    CHECK_THROWS_AS(vertex_class(k4s, 4), GraphError);
}

TEST_CASE("Petersen recognition") {
    const Graph p = petersen_graph();
    CHECK(is_petersen(p));
    CHECK_FALSE(is_petersen(gen_named("petersen-minus-edge")));
    CHECK_FALSE(is_petersen(gen_named("prism")));

    std::mt19937_64 rng(4);
    std::vector<Vertex> perm(10);
    for (int i = 0; i < 20; ++i) {
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const Graph q = relabel(p, perm);
        CHECK(is_petersen(q));
        CHECK(isomorphic(p, q));
    }
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = gen_random_cubic(10, seed);
        CHECK(is_petersen(g) == (girth(g) == 5));
    }
}

TEST_CASE("induced subgraph relabels in the given order") {
    const Graph c6 = gen_named("cycle6");
    const std::vector<Vertex> keep{3, 2, 1};
    const Graph h = induced_subgraph(c6, keep);
    CHECK(h.vertex_count() == 3);
    CHECK(h.has_edge(0, 1));
    CHECK(h.has_edge(1, 2));
    CHECK_FALSE(h.has_edge(0, 2));
}

TEST_CASE("edge list text round trip") {
    std::istringstream in("# demo\n4 2\na b\nb c\nz\n");
    const LabeledGraph lg = read_edge_list(in);
    CHECK(lg.graph.vertex_count() == 4);
    CHECK(lg.find("z") == 3);
    CHECK(lg.graph.degree(3) == 0);

    std::ostringstream out;
    write_edge_list(out, lg);
    std::istringstream back(out.str());
    const LabeledGraph again = read_edge_list(back);
    CHECK(again.graph == lg.graph);
    CHECK(again.labels == lg.labels);

    std::istringstream numeric("3 2\n10 2\n2 1\n");
    const LabeledGraph ng = read_edge_list(numeric);
    CHECK(ng.labels == std::vector<std::string>{"1", "2", "10"});

    std::istringstream bad("3 2\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(bad), ParseError);
}

TEST_CASE("list and coloring text round trip") {
    const LabeledGraph lg = with_default_labels(gen_named("cycle5"));
    std::mt19937_64 rng(5);
    const ListAssignment lists = random_lists(5, 3, 7, rng);
    std::ostringstream out;
    write_list_assignment(out, lg, lists);
    std::istringstream in(out.str());
    CHECK(read_list_assignment(in, lg) == lists);

    const Coloring c{1, 2, 3, 4, 5};
    std::ostringstream cout_;
    write_coloring(cout_, lg, c);
    CHECK(cout_.str().starts_with("0 = 1\n"));
    std::istringstream cin_(cout_.str());
    CHECK(read_coloring(cin_, lg) == c);
}
