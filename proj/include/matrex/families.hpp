#pragma once

#include <string>
#include <utility>
#include <vector>

#include "matrex/functors.hpp"
#include "matrex/matroid.hpp"

namespace matrex {

/// Undirected multigraph; loops (u == v) and parallel edges allowed.
/// Vertices are 1-based; edge labels are distinct ground elements.
struct MultiGraph {
    struct Edge {
        Label label;
        int u = 0;
        int v = 0;
    };
    int vertex_count = 0;
    std::vector<Edge> edges;

    /// Validates and canonicalizes (endpoints normalized u <= v, edges
    /// sorted by label).
    static MultiGraph make(int vertex_count, std::vector<Edge> edges);
};

/// Indexed family (A_j : j in J) of subsets of a ground set; duplicates
/// allowed, member order preserved. Doubles as the partition P.
struct SetSystem {
    GroundSet ground;
    std::vector<std::pair<std::string, Mask>> members;

    static SetSystem make(GroundSet ground,
                          std::vector<std::pair<std::string, Mask>> members);
};

/// U_{t,n} on ground x1..xn.
Matroid uniform(int t, int n);
/// U_{t,|ground|} on the given labels.
Matroid uniform_on(GroundSet ground, int t);

/// Bases are the t-subsets meeting every block at most once.
Matroid partition_matroid(const SetSystem& partition, int t);

/// Bases are the spanning-tree edge sets; loops appear in no basis.
Matroid graphic_matroid(const MultiGraph& g);

/// True iff a matching of G[A] covers every member (Hall's condition).
bool has_transversal(const SetSystem& s);

/// Bases are the maximum-cardinality partial transversals; ground elements
/// outside every member become loops.
Matroid transversal_matroid(const SetSystem& s);

/// Expands every member along with the ground.
SetSystem expand_presentation(const SetSystem& s, const ExpansionVector& alpha);

/// Circuit criterion: every pair of distinct circuits has a circuit inside
/// its symmetric difference.
bool is_binary(const Matroid& m);

}  // namespace matrex
