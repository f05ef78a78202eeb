#include "matrex/families.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace matrex {

MultiGraph MultiGraph::make(int vertex_count, std::vector<Edge> edges) {
    if (vertex_count < 1) throw std::invalid_argument("graph needs at least one vertex");
    for (Edge& e : edges) {
        if (e.u < 1 || e.u > vertex_count || e.v < 1 || e.v > vertex_count)
            throw std::invalid_argument("edge endpoint outside vertex range");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return a.label < b.label; });
    for (size_t i = 1; i < edges.size(); ++i)
        if (edges[i].label == edges[i - 1].label)
            throw std::invalid_argument("duplicate edge label " + edges[i].label.str());
    return MultiGraph{vertex_count, std::move(edges)};
}

SetSystem SetSystem::make(GroundSet ground,
                          std::vector<std::pair<std::string, Mask>> members) {
    Mask full = ground.full_mask();
    for (const auto& [name, m] : members)
        if (m & ~full) throw std::invalid_argument("member set outside ground mask");
    return SetSystem{std::move(ground), std::move(members)};
}

Matroid uniform(int t, int n) {
    if (n < 1) throw std::invalid_argument("ground size must be positive");
    std::vector<Label> labels;
    labels.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) labels.push_back(Label{i, 0});
    return uniform_on(GroundSet::of(std::move(labels)), t);
}

Matroid uniform_on(GroundSet ground, int t) {
    int n = ground.size();
    if (t < 0 || t > n) throw std::invalid_argument("rank outside 0..n");
    std::vector<Mask> bases = subsets_of_size(ground.full_mask(), t);
    return Matroid(SetFamily::make(std::move(ground), std::move(bases)));
}

Matroid partition_matroid(const SetSystem& partition, int t) {
    const GroundSet& ground = partition.ground;
    Mask covered = 0;
    for (const auto& [name, block] : partition.members) {
        if (block == 0) throw std::invalid_argument("empty block in partition");
        if (block & covered)
            throw std::invalid_argument("blocks overlap or do not cover");
        covered |= block;
    }
    if (covered != ground.full_mask())
        throw std::invalid_argument("blocks overlap or do not cover");
    int blocks = static_cast<int>(partition.members.size());
    if (t < 1) throw std::invalid_argument("rank must be positive");
    if (t > blocks)
        throw std::invalid_argument("rank exceeds number of blocks");

    // Direct transcription: t-subsets hitting each block at most once.
    std::vector<Mask> bases;
    for (Mask s : subsets_of_size(ground.full_mask(), t)) {
        bool ok = true;
        for (const auto& [name, block] : partition.members)
            if (popcount(s & block) > 1) { ok = false; break; }
        if (ok) bases.push_back(s);
    }
    return Matroid(SetFamily::make(ground, std::move(bases)));
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<size_t>(a)] = b;
        return true;
    }
};

void spanning_trees(const std::vector<MultiGraph::Edge>& edges,
                    const std::vector<int>& ground_index, size_t next, int chosen,
                    int target, Mask acc, Dsu dsu, std::vector<Mask>& out) {
    if (chosen == target) {
        out.push_back(acc);
        return;
    }
    if (next >= edges.size()) return;
    if (chosen + static_cast<int>(edges.size() - next) < target) return;
    // Take edges[next] if it joins two components, then skip it.
    Dsu with = dsu;
    if (with.unite(edges[next].u - 1, edges[next].v - 1))
        spanning_trees(edges, ground_index, next + 1, chosen + 1, target,
                       acc | bit(ground_index[next]), std::move(with), out);
    spanning_trees(edges, ground_index, next + 1, chosen, target, acc, std::move(dsu), out);
}

}  // namespace

Matroid graphic_matroid(const MultiGraph& g) {
    if (g.edges.empty()) throw std::invalid_argument("graph has no edges");
    std::vector<Label> labels;
    for (const auto& e : g.edges) labels.push_back(e.label);
    GroundSet ground = GroundSet::of(std::move(labels));

    std::vector<MultiGraph::Edge> tree_edges;
    std::vector<int> ground_index;
    Dsu dsu(g.vertex_count);
    int components = g.vertex_count;
    for (const auto& e : g.edges) {
        if (e.u == e.v) continue;  // loops never span
        tree_edges.push_back(e);
        ground_index.push_back(ground.index_of(e.label));
        if (dsu.unite(e.u - 1, e.v - 1)) --components;
    }
    if (components != 1) throw std::invalid_argument("graph not connected");

    std::vector<Mask> bases;
    spanning_trees(tree_edges, ground_index, 0, 0, g.vertex_count - 1, 0,
                   Dsu(g.vertex_count), bases);
    return Matroid(SetFamily::make(std::move(ground), std::move(bases)));
}

namespace {

// Kuhn augmenting paths; match_of maps ground elements to member indices.
bool try_augment(int j, const std::vector<Mask>& members, int n, Mask allowed,
                 std::vector<int>& match_of, std::vector<bool>& visited) {
    for (int x = 0; x < n; ++x) {
        if (!(members[static_cast<size_t>(j)] & allowed & bit(x))) continue;
        if (visited[static_cast<size_t>(x)]) continue;
        visited[static_cast<size_t>(x)] = true;
        if (match_of[static_cast<size_t>(x)] < 0 ||
            try_augment(match_of[static_cast<size_t>(x)], members, n, allowed, match_of, visited)) {
            match_of[static_cast<size_t>(x)] = j;
            return true;
        }
    }
    return false;
}

int max_matching(const std::vector<Mask>& members, int n, Mask allowed) {
    std::vector<int> match_of(static_cast<size_t>(n), -1);
    int matched = 0;
    for (size_t j = 0; j < members.size(); ++j) {
        std::vector<bool> visited(static_cast<size_t>(n), false);
        if (try_augment(static_cast<int>(j), members, n, allowed, match_of, visited)) ++matched;
    }
    return matched;
}

}  // namespace

bool has_transversal(const SetSystem& s) {
    std::vector<Mask> members;
    for (const auto& [name, m] : s.members) members.push_back(m);
    return max_matching(members, s.ground.size(), s.ground.full_mask()) ==
           static_cast<int>(members.size());
}

Matroid transversal_matroid(const SetSystem& s) {
    if (s.ground.size() == 0) throw std::invalid_argument("empty ground");
    std::vector<Mask> members;
    for (const auto& [name, m] : s.members) members.push_back(m);
    int n = s.ground.size();
    int rank = max_matching(members, n, s.ground.full_mask());

    // An r-subset is a basis iff a matching saturates it.
    std::vector<Mask> bases;
    for (Mask sub : subsets_of_size(s.ground.full_mask(), rank))
        if (max_matching(members, n, sub) == rank) bases.push_back(sub);
    return Matroid(SetFamily::make(s.ground, std::move(bases)));
}

SetSystem expand_presentation(const SetSystem& s, const ExpansionVector& alpha) {
    Expansion e = expand_ground(s.ground, alpha);
    std::vector<std::pair<std::string, Mask>> members;
    members.reserve(s.members.size());
    for (const auto& [name, m] : s.members) members.emplace_back(name, expand_set(e, m));
    return SetSystem::make(e.ground, std::move(members));
}

bool is_binary(const Matroid& m) {
    const std::vector<Mask>& circuits = m.circuits();
    for (size_t i = 0; i < circuits.size(); ++i)
        for (size_t j = i + 1; j < circuits.size(); ++j) {
            Mask diff = circuits[i] ^ circuits[j];
            bool found = false;
            for (Mask c : circuits)
                if ((c & ~diff) == 0) { found = true; break; }
            if (!found) return false;
        }
    return true;
}

}  // namespace matrex
