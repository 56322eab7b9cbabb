#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sqcolor/graph.hpp"
#include "sqcolor/list_coloring.hpp"

namespace sqcolor {

class TestkitError : public std::invalid_argument {
public:
    enum class Kind { OddOrder, UnknownName, InvalidArgument };
    TestkitError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Proper coloring of g from its lists by backtracking with forward checking, or nullopt when
/// none exists. Pass square(G) to color the square of G.
std::optional<Coloring> exact_list_color(const Graph& g, const ListAssignment& lists);

/// Chromatic number by branch and bound from a maximum-clique lower bound.
int chromatic_number_exact(const Graph& g);

struct ChoosabilityResult {
    /// True when no uncolorable assignment exists within the bounded universe.
    bool no_counterexample = true;
    std::optional<ListAssignment> witness;
    std::size_t assignments_checked = 0;
    /// States the universe bound and the symmetry reduction used.
    std::string note;
};

/// Bounded falsifier: tries every assignment of k-subsets of {0..universe-1}, up to renaming of
/// colors in first-seen order. Not a choosability decision.
ChoosabilityResult is_k_choosable_bounded(const Graph& g, int k, int universe);

/// Fixture names: petersen, petersen-minus-edge, figure1a, figure1b, cycle<n> (or cycle(n)), prism,
/// prism-subdivided, heawood, mcgee, k4, dodecahedron, tutte-coxeter.
Graph gen_named(std::string_view name);
/// The fixed-size fixture names (every name above except the cycles).
std::vector<std::string> named_graphs();

/// Cubic graph from LCF notation, pattern repeated to cover n vertices.
Graph from_lcf(std::size_t n, std::span<const int> pattern);

/// Every edge replaced by a path with k internal vertices.
Graph subdivide(const Graph& g, int k);
/// Edge i of g.edges() receives counts[i] internal vertices.
Graph subdivide_edges(const Graph& g, std::span<const int> counts);

/// 3-regular simple graph from the pairing model with rejection; deterministic per seed.
Graph gen_random_cubic(int n, std::uint64_t seed);

/// 3-regular graph of girth >= min_girth by random greedy edge insertion with restarts, or
/// nullopt after `attempts` failures.
std::optional<Graph> gen_random_cubic_girth(int n, int min_girth, std::uint64_t seed, int attempts = 200);

/// Each list a uniform k-subset of {1..universe}.
ListAssignment random_lists(std::size_t n, int k, int universe, std::mt19937_64& rng);

}  // namespace sqcolor
