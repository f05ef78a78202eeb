#include "matrex/matroid.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace matrex {

SetFamily SetFamily::make(GroundSet ground, std::vector<Mask> sets) {
    Mask full = ground.full_mask();
    for (Mask s : sets)
        if (s & ~full) throw std::invalid_argument("set has bits outside ground mask");
    std::sort(sets.begin(), sets.end(), set_lex_less);
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    return SetFamily{std::move(ground), std::move(sets)};
}

SetFamily SetFamily::from_labels(GroundSet ground,
                                 const std::vector<std::vector<Label>>& sets) {
    std::vector<Mask> masks;
    masks.reserve(sets.size());
    for (const auto& s : sets) masks.push_back(mask_from_labels(ground, s));
    return make(std::move(ground), std::move(masks));
}

bool SetFamily::contains(Mask s) const {
    return std::binary_search(sets.begin(), sets.end(), s, set_lex_less);
}

bool is_antichain(const std::vector<Mask>& sets) {
    if (sets.empty()) throw std::invalid_argument("empty family");
    for (size_t i = 0; i < sets.size(); ++i)
        for (size_t j = 0; j < sets.size(); ++j) {
            if (i == j) continue;
            if ((sets[i] & ~sets[j]) == 0 && sets[i] != sets[j]) return false;
        }
    return true;
}

std::vector<Mask> maximal_elements(const std::vector<Mask>& sets) {
    std::vector<Mask> out;
    for (Mask a : sets) {
        bool dominated = false;
        for (Mask b : sets)
            if (a != b && (a & ~b) == 0) { dominated = true; break; }
        if (!dominated) out.push_back(a);
    }
    std::sort(out.begin(), out.end(), set_lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_matroid(const SetFamily& family) {
    const auto& b = family.sets;
    if (!is_antichain(b)) return false;
    int n = family.ground.size();
    for (Mask b1 : b)
        for (Mask b2 : b) {
            Mask diff1 = b1 & ~b2;
            if (diff1 == 0) continue;
            Mask diff2 = b2 & ~b1;
            for (int x = 0; x < n; ++x) {
                if (!(diff1 & bit(x))) continue;
                Mask removed = b1 & ~bit(x);
                bool found = false;
                for (int y = 0; y < n && !found; ++y)
                    if ((diff2 & bit(y)) && family.contains(removed | bit(y))) found = true;
                if (!found) return false;
            }
        }
    return true;
}

Matroid::Matroid(SetFamily family)
    : family_(std::move(family)), cache_(std::make_shared<CircuitCache>()) {
    if (!is_matroid(family_))
        throw std::invalid_argument("family is not a matroid");
    rank_ = popcount(family_.sets.front());
    for (Mask b : family_.sets)
        if (popcount(b) != rank_)
            throw std::invalid_argument("bases are not equicardinal");
}

bool Matroid::is_independent(Mask s) const {
    for (Mask b : family_.sets)
        if ((s & ~b) == 0) return true;
    return false;
}

const std::vector<Mask>& Matroid::circuits() const {
    std::call_once(cache_->once, [this] {
        std::vector<Mask>& out = cache_->circuits;
        int n = ground().size();
        // Subsets in ascending cardinality; a dependent set that contains
        // no smaller circuit is itself a circuit.
        for (int k = 1; k <= rank_ + 1 && k <= n; ++k) {
            for (Mask s : subsets_of_size(ground().full_mask(), k)) {
                bool covered = false;
                for (Mask c : out)
                    if ((c & ~s) == 0) { covered = true; break; }
                if (!covered && !is_independent(s)) out.push_back(s);
            }
        }
        std::sort(out.begin(), out.end(), set_lex_less);
    });
    return cache_->circuits;
}

namespace {

// Maps old ground indices to positions inside `kept` (subset of old ground).
std::vector<int> subset_index_map(const GroundSet& old_ground, Mask kept) {
    std::vector<int> map(static_cast<size_t>(old_ground.size()), -1);
    int next = 0;
    for (int i = 0; i < old_ground.size(); ++i)
        if (kept & bit(i)) map[static_cast<size_t>(i)] = next++;
    return map;
}

Mask remap(Mask s, const std::vector<int>& map) {
    Mask out = 0;
    for (size_t i = 0; i < map.size(); ++i)
        if ((s & bit(static_cast<int>(i))) && map[i] >= 0) out |= bit(map[i]);
    return out;
}

}  // namespace

Matroid restriction(const Matroid& m, Mask keep) {
    if (keep & ~m.ground().full_mask())
        throw std::invalid_argument("restriction set outside ground set");
    GroundSet sub = GroundSet::of(labels_from_mask(m.ground(), keep));
    auto map = subset_index_map(m.ground(), keep);
    std::vector<Mask> traces;
    traces.reserve(m.bases().size());
    for (Mask b : m.bases()) traces.push_back(remap(b & keep, map));
    return Matroid(SetFamily::make(std::move(sub), maximal_elements(traces)));
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
    for (const Label& l : a.ground().elems())
        if (b.ground().contains(l))
            throw std::invalid_argument("ground sets not disjoint");
    std::vector<Label> all = a.ground().elems();
    all.insert(all.end(), b.ground().elems().begin(), b.ground().elems().end());
    GroundSet ground = GroundSet::of(std::move(all));

    std::vector<int> map_a(static_cast<size_t>(a.ground().size()));
    std::vector<int> map_b(static_cast<size_t>(b.ground().size()));
    for (int i = 0; i < a.ground().size(); ++i) map_a[static_cast<size_t>(i)] = ground.index_of(a.ground()[i]);
    for (int i = 0; i < b.ground().size(); ++i) map_b[static_cast<size_t>(i)] = ground.index_of(b.ground()[i]);

    std::vector<Mask> bases;
    bases.reserve(a.bases().size() * b.bases().size());
    for (Mask ba : a.bases())
        for (Mask bb : b.bases())
            bases.push_back(remap(ba, map_a) | remap(bb, map_b));
    return Matroid(SetFamily::make(std::move(ground), std::move(bases)));
}

Matroid add_coloop(const Matroid& m, const Label& z) {
    if (m.ground().contains(z))
        throw std::invalid_argument("element already present: " + z.str());
    std::vector<Label> labels = m.ground().elems();
    labels.push_back(z);
    GroundSet ground = GroundSet::of(std::move(labels));
    std::vector<int> map(static_cast<size_t>(m.ground().size()));
    for (int i = 0; i < m.ground().size(); ++i) map[static_cast<size_t>(i)] = ground.index_of(m.ground()[i]);
    int zi = ground.index_of(z);
    std::vector<Mask> bases;
    bases.reserve(m.bases().size());
    for (Mask b : m.bases()) bases.push_back(remap(b, map) | bit(zi));
    return Matroid(SetFamily::make(std::move(ground), std::move(bases)));
}

SetFamily relabel_family(const SetFamily& family, const GroundSet& new_ground,
                         const std::vector<int>& image) {
    if (static_cast<int>(image.size()) != family.ground.size() ||
        new_ground.size() != family.ground.size())
        throw std::invalid_argument("relabeling is not a bijection");
    std::vector<Mask> sets;
    sets.reserve(family.sets.size());
    for (Mask s : family.sets) sets.push_back(remap(s, image));
    return SetFamily::make(new_ground, std::move(sets));
}

namespace {

struct IsoContext {
    int n = 0;
    const std::vector<Mask>* bases1 = nullptr;
    const SetFamily* fam2 = nullptr;
    std::vector<int> deg1, deg2;
    std::vector<std::vector<int>> pair1, pair2;
    std::vector<int> order;    // assignment order over m1 indices
    std::vector<int> image;    // m1 index -> m2 index or -1
    std::vector<bool> used;
};

bool iso_leaf_check(const IsoContext& ctx) {
    std::vector<Mask> mapped;
    mapped.reserve(ctx.bases1->size());
    for (Mask b : *ctx.bases1) {
        Mask out = 0;
        for (int i = 0; i < ctx.n; ++i)
            if (b & bit(i)) out |= bit(ctx.image[static_cast<size_t>(i)]);
        mapped.push_back(out);
    }
    std::sort(mapped.begin(), mapped.end(), set_lex_less);
    return mapped == ctx.fam2->sets;
}

bool iso_backtrack(IsoContext& ctx, size_t pos) {
    if (pos == ctx.order.size()) return iso_leaf_check(ctx);
    int e = ctx.order[pos];
    for (int v = 0; v < ctx.n; ++v) {
        if (ctx.used[static_cast<size_t>(v)]) continue;
        if (ctx.deg1[static_cast<size_t>(e)] != ctx.deg2[static_cast<size_t>(v)]) continue;
        bool ok = true;
        for (size_t p = 0; p < pos && ok; ++p) {
            int e2 = ctx.order[p];
            if (ctx.pair1[static_cast<size_t>(e)][static_cast<size_t>(e2)] !=
                ctx.pair2[static_cast<size_t>(v)][static_cast<size_t>(ctx.image[static_cast<size_t>(e2)])])
                ok = false;
        }
        if (!ok) continue;
        ctx.image[static_cast<size_t>(e)] = v;
        ctx.used[static_cast<size_t>(v)] = true;
        if (iso_backtrack(ctx, pos + 1)) return true;
        ctx.image[static_cast<size_t>(e)] = -1;
        ctx.used[static_cast<size_t>(v)] = false;
    }
    return false;
}

std::vector<int> element_degrees(const std::vector<Mask>& sets, int n) {
    std::vector<int> deg(static_cast<size_t>(n), 0);
    for (Mask s : sets)
        for (int i = 0; i < n; ++i)
            if (s & bit(i)) ++deg[static_cast<size_t>(i)];
    return deg;
}

std::vector<std::vector<int>> element_pair_degrees(const std::vector<Mask>& sets, int n) {
    std::vector<std::vector<int>> pd(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    for (Mask s : sets)
        for (int i = 0; i < n; ++i) {
            if (!(s & bit(i))) continue;
            for (int j = 0; j < n; ++j)
                if (s & bit(j)) ++pd[static_cast<size_t>(i)][static_cast<size_t>(j)];
        }
    return pd;
}

}  // namespace

std::optional<std::vector<int>> matroids_isomorphic(const Matroid& m1, const Matroid& m2) {
    int n = m1.ground().size();
    if (n != m2.ground().size()) return std::nullopt;
    if (m1.bases().size() != m2.bases().size()) return std::nullopt;
    if (m1.rank() != m2.rank()) return std::nullopt;

    IsoContext ctx;
    ctx.n = n;
    ctx.bases1 = &m1.bases();
    ctx.fam2 = &m2.family();
    ctx.deg1 = element_degrees(m1.bases(), n);
    ctx.deg2 = element_degrees(m2.bases(), n);

    std::vector<int> sorted1 = ctx.deg1, sorted2 = ctx.deg2;
    std::sort(sorted1.begin(), sorted1.end());
    std::sort(sorted2.begin(), sorted2.end());
    if (sorted1 != sorted2) return std::nullopt;

    ctx.pair1 = element_pair_degrees(m1.bases(), n);
    ctx.pair2 = element_pair_degrees(m2.bases(), n);

    // Assign rare degrees first; ties in canonical element order.
    std::map<int, int> freq;
    for (int d : ctx.deg1) ++freq[d];
    ctx.order.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) ctx.order[static_cast<size_t>(i)] = i;
    std::stable_sort(ctx.order.begin(), ctx.order.end(), [&](int a, int b) {
        return freq[ctx.deg1[static_cast<size_t>(a)]] < freq[ctx.deg1[static_cast<size_t>(b)]];
    });

    ctx.image.assign(static_cast<size_t>(n), -1);
    ctx.used.assign(static_cast<size_t>(n), false);
    if (iso_backtrack(ctx, 0)) return ctx.image;
    return std::nullopt;
}

}  // namespace matrex
