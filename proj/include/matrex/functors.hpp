#pragma once

#include <vector>

#include "matrex/matroid.hpp"

namespace matrex {

/// Per-element multiplicities (k_1,...,k_n), aligned with the ground order.
using ExpansionVector = std::vector<int>;

ExpansionVector ones(int n);
/// All-ones vector with position i (0-based) bumped by one.
ExpansionVector ones_plus_unit(int n, int i);

/// Expanded ground set plus, per original element, the indices of its copies
/// (in copy order j = 1..k_i).
struct Expansion {
    GroundSet ground;
    std::vector<std::vector<int>> copies;
};

/// Replaces element i by copies x_{i,1}..x_{i,k_i}. A ground that already
/// carries copy indices is first flattened to fresh base ids in canonical
/// order, so repeated expansion keeps labels two-level.
Expansion expand_ground(const GroundSet& ground, const ExpansionVector& alpha);

/// A^alpha: every copy of every member.
Mask expand_set(const Expansion& e, Mask a);

/// {A}^alpha: all ways of choosing one copy per member.
std::vector<Mask> expand_choices(const Expansion& e, Mask a);

/// Union of {A}^alpha over the family, in canonical order.
SetFamily expand_family(const SetFamily& family, const ExpansionVector& alpha);
SetFamily expand_family(const SetFamily& family, const Expansion& e);

/// pi on ground sets: strips copy indices. Throws "label has no copy index"
/// if any element is unexpanded.
GroundSet project_ground(const GroundSet& expanded);

/// pi on subsets: {x_i : some x_{i,j} in s}.
Mask project_set(const GroundSet& expanded, const GroundSet& projected, Mask s);

struct ContractionResult {
    /// Family over the class-representative labels (least member per class).
    SetFamily contracted;
    /// Class sizes a_1..a_m aligned with the contracted ground.
    ExpansionVector alpha;
    /// Original ground index -> contracted ground index.
    std::vector<int> class_of;
};

/// Quotient by x_i ~ x_j when both leave the same basis traces. Elements in
/// no member share the empty trace and collapse into a single loop class.
/// Applies to the maximal elements of the family; throws on an empty family.
ContractionResult contract(const SetFamily& family);

/// True iff every ~ class is a singleton.
bool is_contracted(const SetFamily& family);

}  // namespace matrex
