// Shared helpers for the test suites: tiny constructors, the fixed corpus
// of small matroids, and brute-force oracles kept independent of the
// library code paths they cross-check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "matrex/exchange.hpp"
#include "matrex/families.hpp"
#include "matrex/functors.hpp"
#include "matrex/io.hpp"
#include "matrex/matroid.hpp"

namespace testsupport {

using namespace matrex;

inline Label L(const std::string& s) { return Label::parse(s); }

inline GroundSet ground_of(const std::vector<std::string>& names) {
    std::vector<Label> labels;
    for (const auto& n : names) labels.push_back(L(n));
    return GroundSet::of(std::move(labels));
}

inline Mask set_of(const GroundSet& g, const std::vector<std::string>& names) {
    std::vector<Label> labels;
    for (const auto& n : names) labels.push_back(L(n));
    return mask_from_labels(g, labels);
}

inline SetFamily family_of(const std::vector<std::string>& ground,
                           const std::vector<std::vector<std::string>>& sets) {
    GroundSet g = ground_of(ground);
    std::vector<Mask> masks;
    for (const auto& s : sets) masks.push_back(set_of(g, s));
    return SetFamily::make(std::move(g), std::move(masks));
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in.good()) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::string fixture_path(const std::string& name) {
    return std::string(MATREX_FIXTURE_DIR) + "/" + name;
}

inline SetFamily load_fixture_family(const std::string& name) {
    return parse_family(read_file(fixture_path(name)));
}

// ---------------------------------------------------------------------------
// Fixed corpus: uniforms t<=3 n<=5, partition matroids on <=6 elements,
// graphic matroids of <=5-edge multigraphs, transversal matroids of <=3-set
// systems, plus direct sums and coloop extensions.

struct NamedMatroid {
    std::string name;
    Matroid m;
};

inline SetSystem partition_system(const std::vector<int>& block_sizes) {
    std::vector<Label> labels;
    int next = 1;
    std::vector<std::pair<std::string, std::vector<Label>>> blocks;
    for (size_t b = 0; b < block_sizes.size(); ++b) {
        std::vector<Label> block;
        for (int i = 0; i < block_sizes[b]; ++i) block.push_back(Label{next++, 0});
        labels.insert(labels.end(), block.begin(), block.end());
        blocks.emplace_back("P" + std::to_string(b + 1), block);
    }
    GroundSet g = GroundSet::of(labels);
    std::vector<std::pair<std::string, Mask>> members;
    for (auto& [name, block] : blocks) members.emplace_back(name, mask_from_labels(g, block));
    return SetSystem::make(std::move(g), std::move(members));
}

inline MultiGraph graph_of(int vertices, const std::vector<std::pair<int, int>>& ends) {
    std::vector<MultiGraph::Edge> edges;
    for (size_t i = 0; i < ends.size(); ++i)
        edges.push_back({Label{static_cast<int>(i) + 1, 0}, ends[i].first, ends[i].second});
    return MultiGraph::make(vertices, std::move(edges));
}

inline SetSystem system_of(const std::vector<std::string>& ground,
                           const std::vector<std::vector<std::string>>& sets) {
    GroundSet g = ground_of(ground);
    std::vector<std::pair<std::string, Mask>> members;
    for (size_t j = 0; j < sets.size(); ++j)
        members.emplace_back("A" + std::to_string(j + 1), set_of(g, sets[j]));
    return SetSystem::make(std::move(g), std::move(members));
}

inline std::vector<NamedMatroid> corpus() {
    std::vector<NamedMatroid> out;
    auto add = [&out](std::string name, Matroid m) {
        out.push_back({std::move(name), std::move(m)});
    };

    for (int n = 1; n <= 5; ++n)
        for (int t = 0; t <= std::min(3, n); ++t)
            add("U_{" + std::to_string(t) + "," + std::to_string(n) + "}", uniform(t, n));

    const std::vector<std::vector<int>> shapes = {{2, 1}, {2, 2}, {3, 2}, {2, 2, 1},
                                                  {2, 2, 2}, {3, 3}};
    for (const auto& shape : shapes) {
        SetSystem p = partition_system(shape);
        for (int t = 1; t <= std::min<int>(3, static_cast<int>(shape.size())); ++t) {
            std::string name = "M(P";
            for (int b : shape) name += std::to_string(b);
            add(name + ",t=" + std::to_string(t) + ")", partition_matroid(p, t));
        }
    }

    add("graphic:edge", graphic_matroid(graph_of(2, {{1, 2}})));
    add("graphic:double_edge", graphic_matroid(graph_of(2, {{1, 2}, {1, 2}})));
    add("graphic:triangle", graphic_matroid(graph_of(3, {{1, 2}, {2, 3}, {1, 3}})));
    add("graphic:triangle+loop",
        graphic_matroid(graph_of(3, {{1, 2}, {2, 3}, {1, 3}, {2, 2}})));
    add("graphic:triangle+parallel",
        graphic_matroid(graph_of(3, {{1, 2}, {1, 2}, {2, 3}, {1, 3}})));
    add("graphic:path3", graphic_matroid(graph_of(4, {{1, 2}, {2, 3}, {3, 4}})));
    add("graphic:4cycle", graphic_matroid(graph_of(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})));
    add("graphic:4cycle+chord",
        graphic_matroid(graph_of(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}})));

    add("transversal:fig", transversal_matroid(system_of({"x1", "x2", "x3"},
                                                         {{"x1", "x2"}, {"x1", "x3"}})));
    add("transversal:star", transversal_matroid(system_of({"x1", "x2", "x3"},
                                                          {{"x1"}, {"x2", "x3"}})));
    add("transversal:chain",
        transversal_matroid(system_of({"x1", "x2", "x3", "x4"},
                                      {{"x1", "x2"}, {"x2", "x3"}, {"x3", "x4"}})));
    add("transversal:loopy", transversal_matroid(system_of({"x1", "x2", "x3"},
                                                           {{"x1"}, {"x1", "x2"}})));
    add("transversal:dup", transversal_matroid(system_of({"x1", "x2"},
                                                         {{"x1", "x2"}, {"x1", "x2"}})));

    add("U_{1,2}+U_{1,2}",
        direct_sum(uniform(1, 2), uniform_on(ground_of({"x3", "x4"}), 1)));
    add("U_{2,3}+U_{1,2}",
        direct_sum(uniform(2, 3), uniform_on(ground_of({"x4", "x5"}), 1)));
    add("triangle+U_{1,1}",
        direct_sum(graphic_matroid(graph_of(3, {{1, 2}, {2, 3}, {1, 3}})),
                   uniform_on(ground_of({"x9"}), 1)));

    add("coloop(U_{2,3})", add_coloop(uniform(2, 3), L("x9")));
    add("coloop(M(P22,t=2))", add_coloop(partition_matroid(partition_system({2, 2}), 2), L("x9")));
    add("contraction_of_m7",
        add_coloop(uniform_on(ground_of({"x1", "x3", "x5", "x7"}), 3), L("x2")));

    return out;
}

// ---------------------------------------------------------------------------
// Brute-force oracles (independent of the library algorithms they check).

/// Dependent = contained in no basis; circuit = dependent with every
/// one-element-smaller subset independent. Enumerates all 2^n subsets.
inline std::vector<Mask> oracle_circuits(const Matroid& m) {
    auto dependent = [&m](Mask s) {
        for (Mask b : m.bases())
            if ((s & ~b) == 0) return false;
        return true;
    };
    int n = m.ground().size();
    std::vector<Mask> out;
    for (Mask s = 1; s < (Mask{1} << n); ++s) {
        if (!dependent(s)) continue;
        bool minimal = true;
        for (int e = 0; e < n && minimal; ++e)
            if ((s & bit(e)) && dependent(s & ~bit(e))) minimal = false;
        if (minimal) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), set_lex_less);
    return out;
}

/// Hall's condition checked over every subset of members.
inline bool oracle_hall(const SetSystem& s) {
    size_t j = s.members.size();
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << j); ++k) {
        Mask covered = 0;
        int picked = 0;
        for (size_t i = 0; i < j; ++i)
            if (k & (std::uint64_t{1} << i)) {
                covered |= s.members[i].second;
                ++picked;
            }
        if (popcount(covered) < picked) return false;
    }
    return true;
}

/// Connectivity of every compatibility class of basis pairs (m = 2) under
/// single moves derived straight from the definitions, via union-find over
/// the explicit pair graph. Cross-checks te_check's BFS.
inline bool oracle_te_pairs(const Matroid& m, int cls) {
    const auto& bases = m.bases();
    size_t nb = bases.size();
    auto count_key = [&](size_t i, size_t j) {
        std::vector<int> c(static_cast<size_t>(m.ground().size()), 0);
        for (int e = 0; e < m.ground().size(); ++e) {
            if (bases[i] & bit(e)) ++c[static_cast<size_t>(e)];
            if (bases[j] & bit(e)) ++c[static_cast<size_t>(e)];
        }
        return c;
    };

    // One single-move test per ordered pair of pairs.
    auto single_move = [&](size_t a0, size_t a1, size_t b0, size_t b1) {
        Mask A0 = bases[a0], A1 = bases[a1], B0 = bases[b0], B1 = bases[b1];
        if (cls == 2 && B0 == A1 && B1 == A0) return true;
        if (cls == 3) {
            for (Mask u = A0;; u = (u - 1) & A0) {
                for (Mask v = A1;; v = (v - 1) & A1) {
                    if (((A0 & ~u) | v) == B0 && ((A1 & ~v) | u) == B1 &&
                        m.is_basis(B0) && m.is_basis(B1))
                        return true;
                    if (v == 0) break;
                }
                if (u == 0) break;
            }
            return false;
        }
        for (int x = 0; x < m.ground().size(); ++x) {
            if (!(A0 & bit(x))) continue;
            for (int y = 0; y < m.ground().size(); ++y) {
                if (!(A1 & bit(y))) continue;
                if (((A0 & ~bit(x)) | bit(y)) == B0 && ((A1 & ~bit(y)) | bit(x)) == B1)
                    return true;
            }
        }
        return false;
    };

    std::vector<size_t> parent(nb * nb);
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    std::function<size_t(size_t)> find = [&](size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };

    std::map<std::vector<int>, std::vector<size_t>> classes;
    for (size_t i = 0; i < nb; ++i)
        for (size_t j = 0; j < nb; ++j) classes[count_key(i, j)].push_back(i * nb + j);

    for (const auto& [key, members] : classes)
        for (size_t p : members)
            for (size_t q : members) {
                if (p == q) continue;
                if (single_move(p / nb, p % nb, q / nb, q % nb))
                    parent[find(p)] = find(q);
            }

    for (const auto& [key, members] : classes)
        for (size_t p : members)
            if (find(p) != find(members.front())) return false;
    return true;
}

}  // namespace testsupport
