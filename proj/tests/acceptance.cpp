// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "sqcolor/discharging.hpp"
#include "sqcolor/testkit.hpp"
#include "sqcolor/solve8.hpp"

using namespace sqcolor;

namespace {

// Pinned limits.
constexpr double kAc1Seconds = 1e-3;
constexpr double kAc2Seconds = 1.0;
constexpr double kAc3Seconds = 30.0;
constexpr int kAc3Trials = 10000;
constexpr double kAc4Seconds = 1.0;
constexpr int kAc5Trials = 100000;
constexpr double kAc5Seconds = 60.0;
constexpr int kAc6Graphs = 500;
constexpr double kSuiteSeconds = 300.0;
constexpr int kAc7Graphs = 300;
constexpr std::size_t kAc7AddedPerVertex = 10;
constexpr int kAc8Graphs = 300;
constexpr int kAc9Graphs = 1000;
constexpr double kAc10MaxRatio = 3.0;
constexpr int kAc10Runs = 5;
constexpr int kAc11Instances = 100;

using Clock = std::chrono::steady_clock;
double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

bool is_complete(const Graph& g) { return g.edge_count() * 2 == g.vertex_count() * (g.vertex_count() - 1); }

Outcome ac1() {
    const Graph p = gen_named("petersen");
    double best = 1e9;
    Graph sq;
    for (int i = 0; i < 5; ++i) {
        auto t = Clock::now();
        sq = square(p);
        best = std::min(best, since(t));
    }
    const bool ok = sq.vertex_count() == 10 && sq.edge_count() == 45 && is_complete(sq);
    return {ok && best < kAc1Seconds, "edges " + std::to_string(sq.edge_count()) + ", " + fmt(best * 1e3) + " ms"};
}

Outcome ac2() {
    auto t = Clock::now();
    bool ok = true;
    std::string detail;
    for (const char* name : {"figure1a", "figure1b"}) {
        const Graph sq = square(gen_named(name));
        const bool k8 = sq.vertex_count() == 8 && is_complete(sq);
        const bool unsat7 = !exact_list_color(sq, ListAssignment::uniform(8, 7));
        const bool sat8 = exact_list_color(sq, ListAssignment::uniform(8, 8)).has_value();
        ok = ok && k8 && unsat7 && sat8;
        detail += std::string(name) + (k8 ? " K8" : " not-K8") + (unsat7 ? " unsat@7" : " sat@7") +
                  (sat8 ? " sat@8; " : " unsat@8; ");
    }
    const double s = since(t);
    return {ok && s < kAc2Seconds, detail + fmt(s) + " s"};
}

Outcome ac3() {
    auto t = Clock::now();
    const Graph g = gen_named("petersen-minus-edge");
    const Rational m = mad_exact(g);
    bool rejected = false;
    try {
        solve7(g, ListAssignment::uniform(10, 7));
    } catch (const SolveError& e) {
        rejected = e.kind() == SolveError::Kind::MadTooLarge && e.value == Rational(14, 5);
    }
    std::mt19937_64 rng(3);
    int good = 0;
    for (int i = 0; i < kAc3Trials; ++i) {
        const auto lists = random_lists(10, 8, 24, rng);
        try {
            if (!verify_square_coloring(g, lists, solve8(g, lists))) ++good;
        } catch (const SolveError&) {
        }
    }
    const double s = since(t);
    return {m == Rational(14, 5) && rejected && good == kAc3Trials && s < kAc3Seconds,
            "mad " + m.str() + (rejected ? ", solve7 rejects" : ", solve7 accepts") + ", solve8 " +
                std::to_string(good) + "/" + std::to_string(kAc3Trials) + ", " + fmt(s) + " s"};
}

Outcome ac4() {
    auto t = Clock::now();
    const int chi = chromatic_number_exact(square(gen_named("prism-subdivided")));
    const double s = since(t);
    return {chi == 7 && s < kAc4Seconds, "chi " + std::to_string(chi) + ", " + fmt(s) + " s"};
}

Outcome ac5() {
    auto t = Clock::now();
    const Graph c6 = gen_named("cycle6");
    const Graph sq = square(c6);
    std::mt19937_64 rng(5);
    int failures = 0, disagreements = 0;
    for (int i = 0; i < kAc5Trials; ++i) {
        const auto lists = random_lists(6, 3, 9, rng);
        std::vector<std::vector<Color>> raw;
        for (Vertex v = 0; v < 6; ++v) raw.emplace_back(lists[v].begin(), lists[v].end());
        bool ok = false;
        try {
            auto c = color_c6_square(raw);
            ok = !verify_square_coloring(c6, lists, Coloring(c.begin(), c.end()));
        } catch (const std::exception&) {
        }
        failures += !ok;
        disagreements += ok != exact_list_color(sq, lists).has_value();
    }
    const double s = since(t);
    return {failures == 0 && disagreements == 0 && s < kAc5Seconds,
            std::to_string(failures) + " failures, " + std::to_string(disagreements) + " oracle disagreements, " +
                fmt(s) + " s"};
}

int even_in(std::mt19937_64& rng, int lo, int hi) {
    return 2 * std::uniform_int_distribution<int>(lo / 2, hi / 2)(rng);
}

Outcome ac6() {
    auto t = Clock::now();
    std::mt19937_64 rng(6);
    std::vector<Graph> graphs;
    while (static_cast<int>(graphs.size()) < kAc6Graphs) {
        Graph g = gen_random_cubic(even_in(rng, 10, 200), rng());
        if (!is_petersen(g)) graphs.push_back(std::move(g));
    }
    for (const char* name : {"mcgee", "heawood", "figure1a", "figure1b", "petersen-minus-edge"})
        graphs.push_back(gen_named(name));
    std::size_t good = 0;
    std::string first_error;
    for (const Graph& g : graphs) {
        const auto lists = random_lists(g.vertex_count(), 8, 24, rng);
        try {
            if (!verify_square_coloring(g, lists, solve8(g, lists))) ++good;
        } catch (const SolveError& e) {
            if (first_error.empty()) first_error = e.what();
        }
    }
    const double s = since(t);
    return {good == graphs.size() && s < kSuiteSeconds,
            std::to_string(good) + "/" + std::to_string(graphs.size()) + " verified, " + fmt(s) + " s" +
                (first_error.empty() ? "" : "; " + first_error)};
}

Outcome ac7() {
    auto t = Clock::now();
    std::mt19937_64 rng(7);
    int good = 0;
    bool mad_ok = true, linear_ok = true;
    std::size_t worst_added = 0, worst_n = 1;
    std::string first_error;
    for (int i = 0; i < kAc7Graphs; ++i) {
        const Graph g = subdivide(gen_random_cubic(even_in(rng, 4, 200), rng()), 1);
        mad_ok = mad_ok && mad_exact(g) < Rational(14, 5);
        const auto lists = random_lists(g.vertex_count(), 7, 21, rng);
        try {
            DecomposeTrace tr;
            if (!verify_square_coloring(g, lists, solve7(g, lists, nullptr, &tr))) ++good;
            linear_ok = linear_ok && tr.configs_added_to_B <= kAc7AddedPerVertex * g.vertex_count();
            if (tr.configs_added_to_B * worst_n > worst_added * g.vertex_count()) {
                worst_added = tr.configs_added_to_B;
                worst_n = g.vertex_count();
            }
        } catch (const SolveError& e) {
            if (first_error.empty()) first_error = e.what();
        }
    }
    const double s = since(t);
    return {good == kAc7Graphs && mad_ok && linear_ok && s < kSuiteSeconds,
            std::to_string(good) + "/" + std::to_string(kAc7Graphs) + " verified, max B-additions " +
                std::to_string(worst_added) + " for n=" + std::to_string(worst_n) + ", " + fmt(s) + " s" +
                (first_error.empty() ? "" : "; " + first_error)};
}

Outcome ac8() {
    auto t = Clock::now();
    std::mt19937_64 rng(8);
    // Once-subdivided K4 has girth 6, outside the solver's domain: it must be rejected.
    bool k4_rejected = false;
    try {
        const Graph k4s = subdivide(gen_named("k4"), 1);
        solve6(k4s, ListAssignment::uniform(k4s.vertex_count(), 6));
    } catch (const SolveError& e) {
        k4_rejected = e.kind() == SolveError::Kind::GirthTooSmall;
    }
    std::vector<Graph> graphs{subdivide(gen_named("petersen"), 1), subdivide(gen_named("k4"), 2)};
    int mixed = 0;
    while (static_cast<int>(graphs.size()) < kAc8Graphs) {
        const Graph base = gen_random_cubic(even_in(rng, 4, 100), rng());
        if (graphs.size() % 2 == 0) {
            graphs.push_back(subdivide(base, 2));
            continue;
        }
        std::vector<int> counts(base.edge_count());
        for (int& c : counts) c = std::bernoulli_distribution(0.5)(rng) ? 1 : 2;
        Graph g = subdivide_edges(base, counts);
        const Girth gi = girth(g);
        if (gi && *gi < 7) continue;
        if (!(mad_exact(g) < Rational(18, 7))) continue;
        ++mixed;
        graphs.push_back(std::move(g));
    }
    int good = 0, girth7 = 0;
    std::string first_error;
    for (const Graph& g : graphs) {
        girth7 += girth(g).value_or(99) < 9;
        const auto lists = random_lists(g.vertex_count(), 6, 18, rng);
        try {
            if (!verify_square_coloring(g, lists, solve6(g, lists))) ++good;
        } catch (const SolveError& e) {
            if (first_error.empty()) first_error = e.what();
        }
    }
    const double s = since(t);
    return {good == static_cast<int>(graphs.size()) && k4_rejected && s < kSuiteSeconds,
            std::string(k4_rejected ? "subdivided K4 rejected (girth 6), " : "subdivided K4 not rejected, ") +
                std::to_string(good) + "/" + std::to_string(graphs.size()) + " verified (" + std::to_string(mixed) +
                " mixed subdivisions, " + std::to_string(girth7) + " with girth 7 or 8), " + fmt(s) + " s" +
                (first_error.empty() ? "" : "; " + first_error)};
}

/// Random subcubic graph: a cubic graph with some edges deleted and some subdivided.
Graph random_subcubic(std::mt19937_64& rng, bool high_girth) {
    const int n = even_in(rng, high_girth ? 30 : 6, high_girth ? 60 : 40);
    Graph base = high_girth ? gen_random_cubic_girth(n, 7, rng()).value_or(gen_named("mcgee"))
                            : gen_random_cubic(n, rng());
    const double p_delete = std::uniform_real_distribution<double>(0, 0.15)(rng);
    const double p_subdivide = std::uniform_real_distribution<double>(0, 0.3)(rng);
    std::vector<Edge> kept;
    for (const Edge& e : base.edges())
        if (!std::bernoulli_distribution(p_delete)(rng)) kept.push_back(e);
    Graph pruned = Graph::from_edge_list(kept, true, base.vertex_count());
    std::vector<int> counts(pruned.edge_count());
    for (int& c : counts) c = std::bernoulli_distribution(p_subdivide)(rng) ? std::uniform_int_distribution<int>(1, 2)(rng) : 0;
    return subdivide_edges(pruned, counts);
}

Outcome ac9() {
    auto t = Clock::now();
    std::mt19937_64 rng(9);
    int none7 = 0, none6 = 0, bad7 = 0, bad6 = 0, with2 = 0;
    for (int i = 0; i < kAc9Graphs; ++i) {
        const Graph g = random_subcubic(rng, i % 2 == 1);
        if (!find_7_reducible(g)) {
            ++none7;
            bad7 += discharge_check_7(g).minimum < Rational(14, 5);
            for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v)
                if (g.degree(v) == 2) {
                    ++with2;
                    break;
                }
        }
        const Girth gi = girth(g);
        if ((!gi || *gi >= 7) && !find_6prime_reducible(g)) {
            ++none6;
            bad6 += discharge_check_6(g).minimum < Rational(18, 7);
        }
    }
    const double s = since(t);
    return {bad7 == 0 && bad6 == 0,
            "7-free " + std::to_string(none7) + " (" + std::to_string(with2) + " with 2-vertices), exceptions " +
                std::to_string(bad7) + "; 6'-free " + std::to_string(none6) + ", exceptions " + std::to_string(bad6) +
                "; " + fmt(s) + " s"};
}

Outcome ac10() {
    auto time_for = [](int n) {
        const Graph g = subdivide(gen_random_cubic(n * 2 / 5, static_cast<std::uint64_t>(n)), 1);
        std::mt19937_64 rng(10);
        const auto lists = random_lists(g.vertex_count(), 7, 21, rng);
        std::vector<double> runs;
        for (int r = 0; r < kAc10Runs; ++r) {
            auto t = Clock::now();
            solve7(g, lists);
            runs.push_back(since(t));
        }
        std::nth_element(runs.begin(), runs.begin() + kAc10Runs / 2, runs.end());
        return runs[kAc10Runs / 2];
    };
    const double t1 = time_for(10000), t2 = time_for(20000), t4 = time_for(40000);
    const double r1 = t2 / t1, r2 = t4 / t2;
    return {r1 <= kAc10MaxRatio && r2 <= kAc10MaxRatio,
            "medians " + fmt(t1) + "/" + fmt(t2) + "/" + fmt(t4) + " s, ratios " + fmt(r1) + ", " + fmt(r2)};
}

Outcome ac11() {
    std::mt19937_64 rng(11);
    int good = 0;
    std::string first_error;
    for (int i = 0; i < kAc11Instances; ++i) {
        Graph base;
        do base = gen_random_cubic(even_in(rng, 10, 60), rng());
        while (girth(base).value_or(99) < 4);
        const Graph g = subdivide(base, 1);
        const auto lists = random_lists(g.vertex_count(), 6, 18, rng);
        try {
            // v1 an original vertex; u3 one of its subdivision neighbours; v2 across u3.
            const Vertex v1 = std::uniform_int_distribution<Vertex>(0, static_cast<Vertex>(base.vertex_count()) - 1)(rng);
            auto nb = g.neighbors(v1);
            const std::size_t pick = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
            const Vertex u3 = nb[pick];
            const Vertex u1 = nb[(pick + 1) % 3], u2 = nb[(pick + 2) % 3];
            const Vertex v2 = g.neighbors(u3)[0] == v1 ? g.neighbors(u3)[1] : g.neighbors(u3)[0];
            Vertex u4 = -1;
            for (Vertex x : g.neighbors(v2))
                if (x != u3) u4 = x;
            const ConfigInstance inst{ReducibleKind::Class3NearClass23, {v1, v2, std::min(u1, u2), std::max(u1, u2), u3, u4}};
            if (!instance_valid(g, inst)) throw std::runtime_error("constructed instance does not validate");

            std::vector<Vertex> rest;
            for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v)
                if (std::find(inst.vertices.begin(), inst.vertices.end(), v) == inst.vertices.end()) rest.push_back(v);
            const Graph h = induced_subgraph(g, rest);
            std::vector<std::vector<Color>> hl;
            for (Vertex v : rest) hl.emplace_back(lists[v].begin(), lists[v].end());
            const Coloring hc = solve6(h, ListAssignment(hl));
            PartialColoring pc(g, lists);
            for (std::size_t j = 0; j < rest.size(); ++j) pc.assign(rest[j], hc[j], "outside");

            const RecolorPair pair = recolor_u3(inst, pc);
            bool ok = pair.phi[4] != pair.psi[4];
            for (const auto* ext : {&pair.phi, &pair.psi}) {
                Coloring full(g.vertex_count());
                for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) full[static_cast<std::size_t>(v)] = pc.color(v);
                for (std::size_t j = 0; j < inst.vertices.size(); ++j)
                    full[static_cast<std::size_t>(inst.vertices[j])] = (*ext)[j];
                ok = ok && !verify_square_coloring(g, lists, full);
            }
            good += ok;
        } catch (const std::exception& e) {
            if (first_error.empty()) first_error = e.what();
        }
    }
    return {good == kAc11Instances, std::to_string(good) + "/" + std::to_string(kAc11Instances) +
                                        " instances with two verified extensions" +
                                        (first_error.empty() ? "" : "; " + first_error)};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"square of Petersen is K10", ac1},
        {"figure1a/b squares are K8, 7-lists unsat, 8-lists sat", ac2},
        {"Petersen minus an edge: mad 14/5, 7 rejected, 8 colors", ac3},
        {"subdivided prism square has chromatic number 7", ac4},
        {"C6 square from 3-lists", ac5},
        {"8-list solver on cubic graphs and fixtures", ac6},
        {"7-list solver on once-subdivided cubic graphs", ac7},
        {"6-list solver on girth >= 7 subdivided graphs", ac8},
        {"discharging audits", ac9},
        {"7-list solver scales linearly", ac10},
        {"class-3 recoloring gives two u3 colors", ac11},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o{false, ""};
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("AC%zu %s %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first, o.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
