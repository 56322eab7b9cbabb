#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "sqcolor/graph.hpp"
#include "sqcolor/list_coloring.hpp"
#include "sqcolor/solve_error.hpp"

namespace sqcolor {

enum class StructureKind {
    LowDegreeVertex,
    Triangle,
    FourCycle,
    TwoFiveCyclesSharingPath,
    TwoFiveCyclesSharingEdge,
    FiveCycle,
    SixCycle,
    HighGirthCycle,
};

std::string_view to_string(StructureKind kind);

/// What the 8-color dispatcher found.
///   LowDegreeVertex:          vertices = {u, v}, d(u) <= 2 and v a neighbour (-1 when isolated)
///   Triangle .. SixCycle:     vertices = a cycle in order
///   TwoFiveCyclesSharingPath: vertices = v1..v6 (a 6-cycle) then v7, adjacent to v1 and v4
///   TwoFiveCyclesSharingEdge: vertices = v1..v8 (an 8-cycle) with chord v1v5
///   HighGirthCycle:           vertices = a shortest cycle
struct StructureWitness {
    StructureKind kind;
    std::vector<Vertex> vertices;

    bool valid_in(const Graph& g) const;
};

/// First applicable structure in the fixed priority order, lowest ids first.
StructureWitness detect_structure(const Graph& g);

/// Proper coloring of square(g) from lists of size >= 8. Components are solved independently;
/// none may be the Petersen graph.
Coloring solve8(const Graph& g, const ListAssignment& lists, Trace* trace = nullptr);

/// Colors the square of a 6-cycle from lists of size >= 3 given in cycle order.
std::array<Color, 6> color_c6_square(std::span<const std::vector<Color>> lists);

/// The cycle routine for 3-regular graphs of girth >= 7; `cycle` must be a shortest cycle.
Coloring extend_high_girth(const Graph& g, const ListAssignment& lists, const CycleWitness& cycle,
                           Trace* trace = nullptr);

/// Case 1-5 analysis on a prepared coloring where exactly the cycle and its neighbours are
/// uncolored. Exposed for tests that construct tight instances.
void extend_high_girth_core(PartialColoring& pc, const CycleWitness& cycle);

}  // namespace sqcolor
