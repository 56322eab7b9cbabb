#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sqcolor/graph.hpp"
#include "sqcolor/list_coloring.hpp"
#include "sqcolor/rational.hpp"
#include "sqcolor/solve_error.hpp"

namespace sqcolor {

enum class DecomposeMode { Seven, SixPrime };

/// Removable configurations. Vertex tuples:
///   Pendant                 (p)                       d(p) <= 1
///   Conf1                   (u1, u2)                  adjacent 2-vertices
///   Conf2                   (v, u1, u2)               3-vertex with two 2-neighbours
///   Conf3                   (v1, v2, u1, u2)          adjacent 3-vertices, distinct 2-neighbours u_i ~ v_i
///   Conf4                   (v1, v2, v3, u1, u2, u3, w)
///   ShortCycle2Vertex       (s)                       2-vertex whose neighbours are adjacent or share
///                                                     a second common neighbour
///   Adjacent2Vertices       (u1, u2)
///   AdjacentClass2Pair      (v1, v2, u1, u2, u3, u4)  u1,u2 ~ v1 and u3,u4 ~ v2
///   Class3NearClass23       (v1, v2, u1, u2, u3, u4)  v1 class 3 on u1,u2,u3; v2 ~ u3, u4
///   HConfiguration          (v1, v2, v3, u1, u2, u3, u4, u5)  v2 class 1 on u5
///   YConfiguration          (v1, u1, u2, u3)          v1 class 3; u3's other neighbour is the class 1
///                                                     vertex with a class 2 and a class 1 neighbour
enum class ReducibleKind {
    Pendant,
    Conf1,
    Conf2,
    Conf3,
    Conf4,
    ShortCycle2Vertex,
    Adjacent2Vertices,
    AdjacentClass2Pair,
    Class3NearClass23,
    HConfiguration,
    YConfiguration,
};

std::string_view to_string(ReducibleKind kind);
/// Length of the vertex tuple of `kind`.
int arity(ReducibleKind kind);
/// Search priority of each mode, highest first.
std::span<const ReducibleKind> kinds_of(DecomposeMode mode);

struct ConfigInstance {
    ReducibleKind kind;
    std::vector<Vertex> vertices;
    std::uint64_t generation_stamp = 0;

    bool operator==(const ConfigInstance& o) const { return kind == o.kind && vertices == o.vertices; }
};

/// True iff the template of `inst` holds in g (degrees, classes, adjacencies, distinctness).
bool instance_valid(const Graph& g, const ConfigInstance& inst);

struct DecomposeTrace {
    DecomposeMode mode = DecomposeMode::Seven;
    std::size_t vertex_count = 0;
    /// Removed instances in removal order.
    std::vector<ConfigInstance> removed;
    std::size_t configs_added_to_B = 0;
    std::size_t configs_discarded_as_destroyed = 0;
    /// Times B ran dry with vertices left and the whole remainder had to be rescanned.
    std::size_t full_rescans = 0;
};

/// Lowest-id instance of the highest-priority kind, or nullopt.
std::optional<ConfigInstance> find_7_reducible(const Graph& g);
/// Requires girth >= 7.
std::optional<ConfigInstance> find_6prime_reducible(const Graph& g);

/// Removes configurations until the graph is empty. Checks the mode's preconditions.
DecomposeTrace decompose(const Graph& g, DecomposeMode mode);

/// Colors the configurations of `trace` in reverse removal order.
Coloring rebuild(const Graph& g, const DecomposeTrace& trace, const ListAssignment& lists, Trace* log = nullptr);

/// List coloring of the square from 7-lists, for subcubic g with mad < 14/5.
Coloring solve7(const Graph& g, const ListAssignment& lists, Trace* log = nullptr, DecomposeTrace* out = nullptr);
/// List coloring of the square from 6-lists, for subcubic g with girth >= 7 and mad < 18/7.
Coloring solve6(const Graph& g, const ListAssignment& lists, Trace* log = nullptr, DecomposeTrace* out = nullptr);

/// Two proper extensions of `pc` to a Class3NearClass23 instance that differ at u3, indexed like
/// instance.vertices. The instance must be valid in the graph induced by the colored vertices and
/// the instance itself; its own vertices are recolored from scratch.
struct RecolorPair {
    std::vector<Color> phi;
    std::vector<Color> psi;
};
RecolorPair recolor_u3(const ConfigInstance& inst, const PartialColoring& pc);

struct DischargeResult {
    std::vector<Rational> charge;
    Rational minimum;
};

/// Final charges after the single 7-color rule.
DischargeResult discharge_check_7(const Graph& g);
/// Final charges after the three 6-color rules. Requires girth >= 7.
DischargeResult discharge_check_6(const Graph& g);

/// `REMOVE <kind> [v ...]` lines in removal order, then `COLOR <kind> [v=c ...]` lines in rebuild
/// order using the final colors.
std::string render_decompose_trace(const DecomposeTrace& trace, const Coloring& coloring,
                                   std::span<const std::string> labels = {});

}  // namespace sqcolor
