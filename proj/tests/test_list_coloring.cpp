#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>

#include "sqcolor/list_coloring.hpp"
#include "sqcolor/testkit.hpp"

using namespace sqcolor;

namespace {

ColoringError::Kind error_kind(auto&& f) {
    try {
        f();
    } catch (const ColoringError& e) {
        return e.kind();
    }
    FAIL("expected a ColoringError");
    return ColoringError::Kind::StuckAt;
}

Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edge_list(e, true);
}

// Hall's condition by subset enumeration.
bool hall_holds(const std::vector<std::vector<Color>>& lists) {
    const std::size_t n = lists.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::set<Color> u;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) u.insert(lists[i].begin(), lists[i].end());
        if (u.size() < static_cast<std::size_t>(std::popcount(mask))) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("excess on an uncolored graph") {
    const auto lists8 = [](const Graph& g) { return ListAssignment::uniform(g.vertex_count(), 8); };
    const Graph c9 = gen_named("cycle9");
    CHECK(PartialColoring(c9, lists8(c9)).excess(0) >= 3);

    const Graph p = gen_named("petersen");
    CHECK(PartialColoring(p, lists8(p)).excess(0) == 0);

    const Graph prism = gen_named("prism");
    PartialColoring pc(prism, lists8(prism));
    for (Vertex v = 0; v < 6; ++v) CHECK(pc.excess(v) >= 2);

    pc.assign(0, 1);
    CHECK(error_kind([&] { pc.excess(0); }) == ColoringError::Kind::AlreadyColored);
}

TEST_CASE("partial coloring bookkeeping") {
    const Graph c5 = gen_named("cycle5");
    PartialColoring pc(c5, ListAssignment::uniform(5, 5));
    pc.assign(0, 3);
    CHECK(pc.remaining(1) == std::vector<Color>{1, 2, 4, 5});
    CHECK(pc.remaining(2) == std::vector<Color>{1, 2, 4, 5});
    CHECK(error_kind([&] { pc.assign(1, 3); }) == ColoringError::Kind::NotAvailable);
    CHECK(error_kind([&] { pc.assign(0, 2); }) == ColoringError::Kind::AlreadyColored);
    pc.unassign(0);
    CHECK(pc.remaining(1).size() == 5);
    CHECK(pc.uncolored_count() == 5);
}

TEST_CASE("greedy extension") {
    const Graph g = path(3);
    PartialColoring pc(g, ListAssignment({{1, 2}, {2, 4}, {1, 5}}));
    pc.assign(0, 2);
    pc.assign(2, 1);
    const std::vector<Vertex> order{1};
    const PartialColoring done = greedy_extend(pc, order);
    CHECK(done.color(1) == 4);

    PartialColoring stuck(g, ListAssignment({{1}, {1}, {2}}));
    stuck.assign(0, 1);
    const std::vector<Vertex> bad{1, 2};
    try {
        greedy_extend(stuck, bad);
        FAIL("expected StuckAt");
    } catch (const ColoringError& e) {
        CHECK(e.kind() == ColoringError::Kind::StuckAt);
        CHECK(e.vertex() == 1);
    }
    CHECK(stuck.uncolored_count() == 2);
}

TEST_CASE("distance-class order leaves only the anchor edge") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const Graph g = gen_random_cubic(2 * std::uniform_int_distribution<int>(3, 40)(rng), rng());
        const auto lists = random_lists(g.vertex_count(), 8, 20, rng);
        const Vertex u = 0, v = g.neighbors(0)[0];
        if (!is_connected(g)) continue;
        const PartialColoring pc = color_all_but_edge(g, lists, {u, v});
        CHECK(pc.uncolored_count() == 2);
        CHECK_FALSE(pc.is_colored(u));
        CHECK_FALSE(pc.is_colored(v));
        CHECK_NOTHROW(pc.check_consistency());
    }
    for (const char* name : {"petersen", "cycle7"}) {
        const Graph g = gen_named(name);
        const PartialColoring pc = color_all_but_edge(g, random_lists(g.vertex_count(), 8, 24, rng), {0, 1});
        CHECK(pc.uncolored_count() == 2);
    }
    const Graph two = Graph::from_edge_list(std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}, true);
    CHECK(error_kind([&] { color_all_but_edge(two, ListAssignment::uniform(6, 8), {0, 1}); }) ==
          ColoringError::Kind::Disconnected);
}

TEST_CASE("finishing from a 2-vertex") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 100; ++i) {
        std::vector<int> counts(std::size_t{30});
        counts[0] = 1;
        const Graph g = subdivide_edges(gen_random_cubic(20, rng()), counts);
        const Vertex u = 20, v = g.neighbors(u)[0];
        const auto lists = random_lists(g.vertex_count(), 8, 24, rng);
        const PartialColoring pc(g, lists);
        // The 2-vertex goes last: it keeps excess >= 2 until then.
        const auto order = two_excess_order(pc, v, u);
        REQUIRE(order);
        const PartialColoring done = finish_two_excess(pc, v, u, *order);
        CHECK(done.complete());
        CHECK_FALSE(verify_square_coloring(g, lists, done.to_coloring()));
    }

    const Graph p = gen_named("petersen");
    const PartialColoring tight(p, ListAssignment::uniform(10, 8));
    const std::vector<Vertex> any{2, 3, 4, 5, 6, 7, 8, 9, 0, 1};
    CHECK(error_kind([&] { finish_two_excess(tight, 0, 1, any); }) == ColoringError::Kind::PreconditionViolated);

    const Graph c9 = gen_named("cycle9");
    const PartialColoring far(c9, ListAssignment::uniform(9, 8));
    const std::vector<Vertex> order9{1, 2, 3, 5, 6, 7, 8, 0, 4};
    CHECK(error_kind([&] { finish_two_excess(far, 0, 4, order9); }) == ColoringError::Kind::PreconditionViolated);
}

TEST_CASE("saving pairs") {
    // x and y sit at distance 2 from v and 4 from each other.
    const Graph g = path(5);
    const Vertex x = 0, v = 2, y = 4;
    const auto lists = [](std::vector<Color> lx, std::vector<Color> lv, std::vector<Color> ly) {
        return ListAssignment({lx, {1, 2, 3, 4, 5, 6, 7, 8}, lv, {1, 2, 3, 4, 5, 6, 7, 8}, ly});
    };
    CHECK(pick_saving_pair(PartialColoring(g, lists({1, 2}, {1, 2, 3, 4}, {1, 3})), x, y, v) == std::pair{1, 1});
    CHECK(pick_saving_pair(PartialColoring(g, lists({5}, {1}, {6})), x, y, v) == std::pair{5, 6});
    CHECK(error_kind([&] { pick_saving_pair(PartialColoring(g, lists({1}, {1, 2}, {2})), x, y, v); }) ==
          ColoringError::Kind::PreconditionViolated);
}

TEST_CASE("distinct representatives") {
    const std::vector<std::vector<Color>> tri{{1, 2}, {2, 3}, {3, 1}};
    const SdrResult r = sdr_assign(tri);
    CHECK(r.satisfiable);
    CHECK(std::set<Color>(r.colors.begin(), r.colors.end()).size() == 3);

    const std::vector<std::vector<Color>> tight{{1, 2}, {1, 2}, {1, 2}};
    const SdrResult u = sdr_assign(tight);
    CHECK_FALSE(u.satisfiable);
    CHECK(u.hall_witness == std::vector<std::size_t>{0, 1, 2});

    // Five 2-lists with consecutive ones disjoint, five 6-lists each missing the 2-list two steps back.
    std::mt19937_64 rng(13);
    for (int t = 0; t < 200; ++t) {
        std::vector<std::vector<Color>> lists(10);
        std::vector<Color> pool(12);
        std::iota(pool.begin(), pool.end(), 1);
        for (int i = 0; i < 5; ++i) {
            std::vector<Color> avoid;
            if (i > 0) avoid = lists[static_cast<std::size_t>(i - 1)];
            if (i == 4) avoid.insert(avoid.end(), lists[0].begin(), lists[0].end());
            std::vector<Color> options;
            for (Color c : pool)
                if (std::find(avoid.begin(), avoid.end(), c) == avoid.end()) options.push_back(c);
            std::sample(options.begin(), options.end(), std::back_inserter(lists[static_cast<std::size_t>(i)]), 2, rng);
        }
        for (int i = 0; i < 5; ++i) {
            const auto& avoid = lists[static_cast<std::size_t>((i + 3) % 5)];
            std::vector<Color> options;
            for (Color c : pool)
                if (std::find(avoid.begin(), avoid.end(), c) == avoid.end()) options.push_back(c);
            std::sample(options.begin(), options.end(), std::back_inserter(lists[static_cast<std::size_t>(5 + i)]), 6, rng);
        }
        const SdrResult s = sdr_assign(lists);
        REQUIRE(s.satisfiable);
        CHECK(std::set<Color>(s.colors.begin(), s.colors.end()).size() == 10);
        for (std::size_t i = 0; i < 10; ++i)
            CHECK(std::find(lists[i].begin(), lists[i].end(), s.colors[i]) != lists[i].end());
    }

    for (int t = 0; t < 500; ++t) {
        const int n = std::uniform_int_distribution<int>(1, 7)(rng);
        std::vector<std::vector<Color>> lists(static_cast<std::size_t>(n));
        for (auto& l : lists) {
            const int k = std::uniform_int_distribution<int>(1, 3)(rng);
            for (int j = 0; j < k; ++j) l.push_back(std::uniform_int_distribution<int>(1, 6)(rng));
        }
        CHECK(sdr_assign(lists).satisfiable == hall_holds(lists));
    }
}

TEST_CASE("square coloring verification") {
    const Graph c6 = gen_named("cycle6");
    const auto lists = ListAssignment::uniform(6, 3);
    CHECK_FALSE(verify_square_coloring(c6, lists, {1, 2, 3, 1, 2, 3}));

    const auto clash = verify_square_coloring(c6, lists, {1, 2, 1, 3, 2, 3});
    REQUIRE(clash);
    CHECK(clash->kind == Violation::Kind::Clash);
    CHECK(clash->a == 0);
    CHECK(clash->b == 2);

    const auto missing = verify_square_coloring(c6, lists, {1, 2, 3, 1, 2, 4});
    REQUIRE(missing);
    CHECK(missing->kind == Violation::Kind::NotInList);
    CHECK(missing->a == 5);
}
