#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace matrex {

/// Ground set element: `x3` (base only) or `x3.2` (copy 2 of element 3).
/// A copy index of 0 means "no copy index" (an unexpanded element).
struct Label {
    int base = 0;
    int copy = 0;

    static Label parse(std::string_view text);
    std::string str() const;

    // Ordering treats a missing copy index as copy 1; the plain label sorts
    // just before its own first copy so mixed grounds stay strictly ordered.
    friend bool operator==(const Label& a, const Label& b) {
        return a.base == b.base && a.copy == b.copy;
    }
    friend bool operator!=(const Label& a, const Label& b) { return !(a == b); }
    friend bool operator<(const Label& a, const Label& b) {
        if (a.base != b.base) return a.base < b.base;
        int ac = a.copy == 0 ? 1 : a.copy;
        int bc = b.copy == 0 ? 1 : b.copy;
        if (ac != bc) return ac < bc;
        return (a.copy != 0) < (b.copy != 0);
    }
};

/// Subsets of a ground set are bitmasks over its element indices.
using Mask = std::uint64_t;

constexpr Mask bit(int i) { return Mask{1} << i; }
int popcount(Mask m);

/// Compares subsets in lexicographic order of their sorted element lists,
/// the canonical order for serialized basis families.
bool set_lex_less(Mask a, Mask b);

/// All k-element submasks of `universe`, in canonical (set_lex) order.
std::vector<Mask> subsets_of_size(Mask universe, int k);

/// Ordered list of distinct labels; always kept sorted in label order.
class GroundSet {
public:
    GroundSet() = default;
    /// Sorts and validates; throws on duplicates or more than 64 elements.
    static GroundSet of(std::vector<Label> labels);

    const std::vector<Label>& elems() const { return elems_; }
    int size() const { return static_cast<int>(elems_.size()); }
    const Label& operator[](int i) const { return elems_[static_cast<size_t>(i)]; }

    /// Index of a label, or -1 when absent.
    int index_of(const Label& l) const;
    bool contains(const Label& l) const { return index_of(l) >= 0; }

    Mask full_mask() const;

    friend bool operator==(const GroundSet& a, const GroundSet& b) {
        return a.elems_ == b.elems_;
    }
    friend bool operator!=(const GroundSet& a, const GroundSet& b) { return !(a == b); }

private:
    std::vector<Label> elems_;
};

/// Builds a subset mask from labels; throws "element outside ground set".
Mask mask_from_labels(const GroundSet& ground, const std::vector<Label>& labels);
std::vector<Label> labels_from_mask(const GroundSet& ground, Mask m);

/// Renders a subset as space-separated labels in canonical order.
std::string format_set(const GroundSet& ground, Mask m);

}  // namespace matrex
