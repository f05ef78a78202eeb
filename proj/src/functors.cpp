#include "matrex/functors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace matrex {

ExpansionVector ones(int n) { return ExpansionVector(static_cast<size_t>(n), 1); }

ExpansionVector ones_plus_unit(int n, int i) {
    ExpansionVector a = ones(n);
    a.at(static_cast<size_t>(i)) += 1;
    return a;
}

Expansion expand_ground(const GroundSet& ground, const ExpansionVector& alpha) {
    if (static_cast<int>(alpha.size()) != ground.size())
        throw std::invalid_argument("expansion vector misaligned with ground set");
    for (int k : alpha)
        if (k < 1) throw std::invalid_argument("multiplicities must be positive");

    bool already_expanded = false;
    for (const Label& l : ground.elems())
        if (l.copy != 0) { already_expanded = true; break; }

    std::vector<Label> labels;
    Expansion e;
    e.copies.resize(static_cast<size_t>(ground.size()));
    int idx = 0;
    for (int i = 0; i < ground.size(); ++i) {
        int base = already_expanded ? i + 1 : ground[i].base;
        for (int j = 1; j <= alpha[static_cast<size_t>(i)]; ++j) {
            labels.push_back(Label{base, j});
            e.copies[static_cast<size_t>(i)].push_back(idx++);
        }
    }
    // Construction order is already canonical; GroundSet::of re-checks.
    e.ground = GroundSet::of(std::move(labels));
    return e;
}

Mask expand_set(const Expansion& e, Mask a) {
    Mask out = 0;
    for (size_t i = 0; i < e.copies.size(); ++i)
        if (a & bit(static_cast<int>(i)))
            for (int c : e.copies[i]) out |= bit(c);
    return out;
}

std::vector<Mask> expand_choices(const Expansion& e, Mask a) {
    std::vector<int> members;
    for (size_t i = 0; i < e.copies.size(); ++i)
        if (a & bit(static_cast<int>(i))) members.push_back(static_cast<int>(i));

    std::vector<Mask> out;
    std::vector<size_t> pick(members.size(), 0);
    while (true) {
        Mask m = 0;
        for (size_t p = 0; p < members.size(); ++p)
            m |= bit(e.copies[static_cast<size_t>(members[p])][pick[p]]);
        out.push_back(m);
        size_t p = 0;
        for (; p < members.size(); ++p) {
            if (++pick[p] < e.copies[static_cast<size_t>(members[p])].size()) break;
            pick[p] = 0;
        }
        if (p == members.size()) break;
    }
    return out;
}

SetFamily expand_family(const SetFamily& family, const Expansion& e) {
    std::vector<Mask> sets;
    for (Mask a : family.sets) {
        auto choices = expand_choices(e, a);
        sets.insert(sets.end(), choices.begin(), choices.end());
    }
    return SetFamily::make(e.ground, std::move(sets));
}

SetFamily expand_family(const SetFamily& family, const ExpansionVector& alpha) {
    return expand_family(family, expand_ground(family.ground, alpha));
}

GroundSet project_ground(const GroundSet& expanded) {
    std::vector<Label> labels;
    for (const Label& l : expanded.elems()) {
        if (l.copy == 0)
            throw std::invalid_argument("label has no copy index: " + l.str());
        Label base{l.base, 0};
        if (labels.empty() || labels.back() != base) labels.push_back(base);
    }
    return GroundSet::of(std::move(labels));
}

Mask project_set(const GroundSet& expanded, const GroundSet& projected, Mask s) {
    Mask out = 0;
    for (int i = 0; i < expanded.size(); ++i) {
        if (!(s & bit(i))) continue;
        if (expanded[i].copy == 0)
            throw std::invalid_argument("label has no copy index: " + expanded[i].str());
        int p = projected.index_of(Label{expanded[i].base, 0});
        if (p < 0) throw std::invalid_argument("element outside ground set: x" +
                                               std::to_string(expanded[i].base));
        out |= bit(p);
    }
    return out;
}

namespace {

// Sorted traces {A \ x : A in B, x in A} identify the ~ class of x.
std::vector<Mask> trace_of(const std::vector<Mask>& maximal, int x) {
    std::vector<Mask> t;
    for (Mask a : maximal)
        if (a & bit(x)) t.push_back(a & ~bit(x));
    std::sort(t.begin(), t.end(), set_lex_less);
    return t;
}

}  // namespace

ContractionResult contract(const SetFamily& family) {
    if (family.sets.empty()) throw std::invalid_argument("empty family");
    const std::vector<Mask> maximal = maximal_elements(family.sets);
    int n = family.ground.size();

    ContractionResult res;
    res.class_of.assign(static_cast<size_t>(n), -1);
    std::map<std::vector<Mask>, int> seen;
    std::vector<Label> reps;
    for (int i = 0; i < n; ++i) {
        auto t = trace_of(maximal, i);
        auto [it, inserted] = seen.emplace(std::move(t), static_cast<int>(reps.size()));
        if (inserted) {
            reps.push_back(family.ground[i]);
            res.alpha.push_back(0);
        }
        res.class_of[static_cast<size_t>(i)] = it->second;
        res.alpha[static_cast<size_t>(it->second)] += 1;
    }

    std::vector<Mask> contracted_sets;
    contracted_sets.reserve(maximal.size());
    for (Mask a : maximal) {
        Mask c = 0;
        for (int i = 0; i < n; ++i)
            if (a & bit(i)) c |= bit(res.class_of[static_cast<size_t>(i)]);
        contracted_sets.push_back(c);
    }
    res.contracted = SetFamily::make(GroundSet::of(std::move(reps)),
                                     std::move(contracted_sets));
    return res;
}

bool is_contracted(const SetFamily& family) {
    ContractionResult r = contract(family);
    for (int a : r.alpha)
        if (a != 1) return false;
    return true;
}

}  // namespace matrex
