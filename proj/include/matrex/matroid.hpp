#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "matrex/label.hpp"

namespace matrex {

/// A ground set together with a family of its subsets, kept in canonical
/// order (sets sorted by set_lex_less, duplicates removed). This is the
/// unvalidated input type; Matroid wraps a family that passed the axiom.
struct SetFamily {
    GroundSet ground;
    std::vector<Mask> sets;

    static SetFamily make(GroundSet ground, std::vector<Mask> sets);
    static SetFamily from_labels(GroundSet ground,
                                 const std::vector<std::vector<Label>>& sets);

    bool contains(Mask s) const;

    friend bool operator==(const SetFamily& a, const SetFamily& b) {
        return a.ground == b.ground && a.sets == b.sets;
    }
    friend bool operator!=(const SetFamily& a, const SetFamily& b) { return !(a == b); }
};

/// True iff no member properly contains another. Throws on an empty family.
bool is_antichain(const std::vector<Mask>& sets);

/// Inclusion-maximal members of a family.
std::vector<Mask> maximal_elements(const std::vector<Mask>& sets);

/// The basis-exchange axiom: the family is an antichain and for every
/// B1, B2 and x in B1\B2 some y in B2\B1 has (B1\x) u y in the family.
/// Antichain violations yield false, not an error.
bool is_matroid(const SetFamily& family);

/// A set family that passed is_matroid. Immutable; circuits are computed
/// on first use and shared between copies.
class Matroid {
public:
    explicit Matroid(SetFamily family);

    const GroundSet& ground() const { return family_.ground; }
    const std::vector<Mask>& bases() const { return family_.sets; }
    const SetFamily& family() const { return family_; }

    int rank() const { return rank_; }
    bool is_basis(Mask s) const { return family_.contains(s); }
    /// S is independent iff it is contained in some basis.
    bool is_independent(Mask s) const;

    /// All minimal dependent sets, in canonical order.
    const std::vector<Mask>& circuits() const;

private:
    struct CircuitCache {
        std::once_flag once;
        std::vector<Mask> circuits;
    };

    SetFamily family_;
    int rank_ = 0;
    std::shared_ptr<CircuitCache> cache_;
};

/// Matroid on X whose bases are the maximal members of {B n X : B basis}.
Matroid restriction(const Matroid& m, Mask keep);

/// Matroid on the disjoint union of grounds; bases are all unions B1 u B2.
Matroid direct_sum(const Matroid& a, const Matroid& b);

/// Adds a fresh element present in every basis.
Matroid add_coloop(const Matroid& m, const Label& z);

/// Rewrites a family through an index bijection into a new ground set
/// (image[i] = index in new_ground of the image of ground element i).
SetFamily relabel_family(const SetFamily& family, const GroundSet& new_ground,
                         const std::vector<int>& image);

/// Searches for a basis-family-preserving bijection between ground sets.
/// Returns image indices into m2's ground, or nullopt. Backtracking with
/// degree and pair-degree pruning; meant for grounds up to ~12 elements.
std::optional<std::vector<int>> matroids_isomorphic(const Matroid& m1, const Matroid& m2);

}  // namespace matrex
