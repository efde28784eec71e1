#pragma once

#include "sharpmilnor/reduction.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sharpmilnor {

enum class GraphVariant { Full, Reduced, Last, LastMin };
enum class GraphFamily { Base, Zero, Zero3, Zero34 };
enum class EdgeOrder { Lt, Gt };  // source-line before / after target-line
enum class EdgeCause { S, UMax, N, H0 };
enum class EdgeClass { E1, E2, E3, E4, E5, E6, E7, E8, Unclassified };

struct GraphVertex {
    int line;
    int point;
    bool min_vertex = false;  // lastmin variant: point is min(line) rather than last(line)
};

struct GraphEdge {
    int from, to;  // vertex indices
    EdgeOrder order;
    EdgeCause cause;
    EdgeClass cls = EdgeClass::Unclassified;
};

struct HomologyGraph {
    GraphVariant variant;
    GraphFamily family;
    std::vector<GraphVertex> vertices;
    std::vector<GraphEdge> edges;

    std::vector<ReduceVertex> reduce_vertices() const {
        std::vector<ReduceVertex> v;
        for (const auto& g : vertices) v.push_back(ReduceVertex{g.line, g.point});
        return v;
    }
};

// Relation between the closing-edge endpoints of a bi-monotone cycle.
enum class CycleRelation { BarAfter, BarBefore };  // H-bar after / before H-prime

struct ObstructionCycle {
    std::vector<int> vertices;  // cycle order
    int length = 0;
    int peak = -1, after_peak = -1, hbar = -1, hprime = -1;  // vertex indices
    int ascents = 0, descents = 0;
    CycleRelation relation = CycleRelation::BarAfter;
};

HomologyGraph build_graph(const PolarContext& polar, GraphVariant variant, GraphFamily family);

// All simple directed cycles whose label sequence is one ascending run and one
// descending run; enumeration aborts above the configured cycle budget.
std::vector<ObstructionCycle> find_obstruction_cycles(const HomologyGraph& graph);

bool bad_cycle_predicate(const ObstructionCycle& cycle, GraphVariant variant);

struct GraphTooCyclic : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A family line whose final point falls back onto the sharp line (or that
// lacks a second point) has no usable vertex; the graph rules do not apply.
struct GraphUnavailable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

long long max_cycle_budget();  // SHARPMILNOR_MAX_CYCLES override, default 1e6

struct DoublePointGraph {
    int lines = 0;
    std::vector<std::pair<int, int>> edges;
    bool connected = false;
};

DoublePointGraph double_point_graph(const SharpFrame& frame);
DoublePointGraph double_point_graph(const Arrangement& affine);

std::string graph_dot(const SharpFrame& frame, const HomologyGraph& graph,
                      const std::vector<ObstructionCycle>* highlight = nullptr);

}  // namespace sharpmilnor
