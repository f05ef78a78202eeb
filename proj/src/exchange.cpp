#include "matrex/exchange.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace matrex {

BasisSequence make_sequence(const Matroid& m, std::vector<Mask> bases) {
    BasisSequence s;
    s.union_multiset.assign(static_cast<size_t>(m.ground().size()), 0);
    for (Mask b : bases) {
        if (!m.is_basis(b))
            throw std::invalid_argument("sequence entry is not a basis");
        for (int i = 0; i < m.ground().size(); ++i)
            if (b & bit(i)) ++s.union_multiset[static_cast<size_t>(i)];
    }
    s.bases = std::move(bases);
    return s;
}

bool compatible(const BasisSequence& a, const BasisSequence& b) {
    if (a.bases.size() != b.bases.size())
        throw std::invalid_argument("sequence length mismatch");
    return a.union_multiset == b.union_multiset;
}

Mask exchange_candidates(const Matroid& m, Mask a_r, Mask a_s, int x) {
    if (!(a_r & bit(x)))
        throw std::invalid_argument("exchange element not in its basis");
    Mask out = 0;
    Mask removed = a_r & ~bit(x);
    for (int y = 0; y < m.ground().size(); ++y) {
        if (!(a_s & bit(y))) continue;
        if (m.is_basis(removed | bit(y)) && m.is_basis((a_s & ~bit(y)) | bit(x)))
            out |= bit(y);
    }
    return out;
}

std::vector<Mask> subset_exchange_candidates(const Matroid& m, Mask a_r, Mask a_s, Mask u) {
    if (u & ~a_r)
        throw std::invalid_argument("exchange subset not within its basis");
    std::vector<Mask> out;
    int size = popcount(u);
    Mask removed = a_r & ~u;
    for (Mask v : subsets_of_size(a_s, size))
        if (m.is_basis(removed | v) && m.is_basis((a_s & ~v) | u)) out.push_back(v);
    return out;
}

namespace {

BasisSequence reorder(const Matroid& m, const BasisSequence& seq, const std::vector<int>& perm) {
    size_t n = seq.bases.size();
    if (perm.size() != n) throw std::invalid_argument("permutation length mismatch");
    std::vector<bool> hit(n, false);
    for (int p : perm) {
        if (p < 0 || static_cast<size_t>(p) >= n || hit[static_cast<size_t>(p)])
            throw std::invalid_argument("not a permutation of sequence positions");
        hit[static_cast<size_t>(p)] = true;
    }
    std::vector<Mask> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = seq.bases[static_cast<size_t>(perm[i])];
    return make_sequence(m, std::move(out));
}

}  // namespace

BasisSequence apply_move(const Matroid& m, const BasisSequence& seq, const Move& mv) {
    size_t len = seq.bases.size();
    if (const auto* se = std::get_if<SymmetricExchange>(&mv)) {
        if (se->r < 0 || se->s <= se->r || static_cast<size_t>(se->s) >= len)
            throw std::invalid_argument("exchange positions out of range");
        Mask a_r = seq.bases[static_cast<size_t>(se->r)];
        Mask a_s = seq.bases[static_cast<size_t>(se->s)];
        if (!(a_r & bit(se->x)))
            throw std::invalid_argument("exchange element not in its basis");
        if (!(exchange_candidates(m, a_r, a_s, se->x) & bit(se->y)))
            throw std::invalid_argument("partner not in E(x; A_r, A_s)");
        std::vector<Mask> out = seq.bases;
        out[static_cast<size_t>(se->r)] = (a_r & ~bit(se->x)) | bit(se->y);
        out[static_cast<size_t>(se->s)] = (a_s & ~bit(se->y)) | bit(se->x);
        return make_sequence(m, std::move(out));
    }
    if (const auto* pm = std::get_if<PermuteBases>(&mv)) return reorder(m, seq, pm->perm);
    const auto& sx = std::get<SubsetExchange>(mv);
    if (sx.r < 0 || sx.s <= sx.r || static_cast<size_t>(sx.s) >= len)
        throw std::invalid_argument("exchange positions out of range");
    Mask a_r = seq.bases[static_cast<size_t>(sx.r)];
    Mask a_s = seq.bases[static_cast<size_t>(sx.s)];
    if (sx.u & ~a_r) throw std::invalid_argument("exchange subset not within its basis");
    if (sx.v & ~a_s) throw std::invalid_argument("exchange partner not within its basis");
    Mask b_r = (a_r & ~sx.u) | sx.v;
    Mask b_s = (a_s & ~sx.v) | sx.u;
    if (!m.is_basis(b_r)) throw std::invalid_argument("result (A_r \\ U) u V is not a basis");
    if (!m.is_basis(b_s)) throw std::invalid_argument("result (A_s \\ V) u U is not a basis");
    std::vector<Mask> out = seq.bases;
    out[static_cast<size_t>(sx.r)] = b_r;
    out[static_cast<size_t>(sx.s)] = b_s;
    return make_sequence(m, std::move(out));
}

const char* to_string(TeVerdict v) {
    switch (v) {
        case TeVerdict::holds_at_m: return "holds_at_m";
        case TeVerdict::fails_at_m: return "fails_at_m";
        case TeVerdict::budget_exceeded: return "budget_exceeded";
    }
    return "?";
}

namespace {

// Sequences are encoded as mixed-radix integers over basis indices, the
// first position most significant, so numeric order = lexicographic order.
struct TeSearch {
    const Matroid& m;
    int cls;
    int len;
    std::uint64_t nb;
    std::unordered_map<Mask, int> basis_index;
    std::vector<std::uint64_t> pow;

    TeSearch(const Matroid& mat, int exchange_class, int length)
        : m(mat), cls(exchange_class), len(length),
          nb(static_cast<std::uint64_t>(mat.bases().size())) {
        for (size_t i = 0; i < m.bases().size(); ++i)
            basis_index.emplace(m.bases()[i], static_cast<int>(i));
        pow.resize(static_cast<size_t>(len) + 1, 1);
        for (int i = 1; i <= len; ++i)
            pow[static_cast<size_t>(i)] = pow[static_cast<size_t>(i - 1)] * nb;
    }

    std::vector<int> decode(std::uint64_t code) const {
        std::vector<int> t(static_cast<size_t>(len));
        for (int i = len - 1; i >= 0; --i) {
            t[static_cast<size_t>(i)] = static_cast<int>(code % nb);
            code /= nb;
        }
        return t;
    }

    std::uint64_t encode(const std::vector<int>& t) const {
        std::uint64_t code = 0;
        for (int i : t) code = code * nb + static_cast<std::uint64_t>(i);
        return code;
    }

    std::vector<Mask> masks_of(const std::vector<int>& t) const {
        std::vector<Mask> out;
        out.reserve(t.size());
        for (int i : t) out.push_back(m.bases()[static_cast<size_t>(i)]);
        return out;
    }

    // Replacing positions r and s shifts the code by the digit deltas.
    std::uint64_t shifted(std::uint64_t code, const std::vector<int>& t, int r, int s,
                          int new_r, int new_s) const {
        std::int64_t delta =
            (static_cast<std::int64_t>(new_r) - t[static_cast<size_t>(r)]) *
                static_cast<std::int64_t>(pow[static_cast<size_t>(len - 1 - r)]) +
            (static_cast<std::int64_t>(new_s) - t[static_cast<size_t>(s)]) *
                static_cast<std::int64_t>(pow[static_cast<size_t>(len - 1 - s)]);
        return code + static_cast<std::uint64_t>(delta);
    }

    template <typename Fn>
    void neighbors(std::uint64_t code, const std::vector<int>& t, Fn&& fn) const {
        int n = m.ground().size();
        for (int r = 0; r < len; ++r) {
            for (int s = r + 1; s < len; ++s) {
                Mask a_r = m.bases()[static_cast<size_t>(t[static_cast<size_t>(r)])];
                Mask a_s = m.bases()[static_cast<size_t>(t[static_cast<size_t>(s)])];
                if (cls == 3) {
                    if (a_r == 0) continue;
                    Mask u = a_r;
                    // All nonempty U within A_r, V within A_s of equal size.
                    do {
                        for (Mask v : subsets_of_size(a_s, popcount(u))) {
                            Mask b_r = (a_r & ~u) | v;
                            auto ir = basis_index.find(b_r);
                            if (ir == basis_index.end()) continue;
                            Mask b_s = (a_s & ~v) | u;
                            auto is = basis_index.find(b_s);
                            if (is == basis_index.end()) continue;
                            fn(shifted(code, t, r, s, ir->second, is->second));
                        }
                        u = (u - 1) & a_r;
                    } while (u != 0);
                } else {
                    for (int x = 0; x < n; ++x) {
                        if (!(a_r & bit(x))) continue;
                        Mask removed = a_r & ~bit(x);
                        for (int y = 0; y < n; ++y) {
                            if (!(a_s & bit(y)) || y == x) continue;
                            auto ir = basis_index.find(removed | bit(y));
                            if (ir == basis_index.end()) continue;
                            auto is = basis_index.find((a_s & ~bit(y)) | bit(x));
                            if (is == basis_index.end()) continue;
                            fn(shifted(code, t, r, s, ir->second, is->second));
                        }
                    }
                }
            }
        }
        if (cls == 2) {
            for (int r = 0; r + 1 < len; ++r)
                fn(shifted(code, t, r, r + 1, t[static_cast<size_t>(r + 1)],
                           t[static_cast<size_t>(r)]));
        }
    }
};

std::vector<int> union_counts(const Matroid& m, const std::vector<int>& t) {
    std::vector<int> counts(static_cast<size_t>(m.ground().size()), 0);
    for (int i : t) {
        Mask b = m.bases()[static_cast<size_t>(i)];
        for (int e = 0; e < m.ground().size(); ++e)
            if (b & bit(e)) ++counts[static_cast<size_t>(e)];
    }
    return counts;
}

TeWitness make_witness(const TeSearch& search, std::uint64_t a, std::uint64_t b) {
    return TeWitness{{search.masks_of(search.decode(a)), search.masks_of(search.decode(b))}};
}

}  // namespace

TeResult te_check(const Matroid& m, int exchange_class, int length, TeOptions opt) {
    if (exchange_class < 1 || exchange_class > 3)
        throw std::invalid_argument("exchange class must be 1, 2 or 3");
    if (length < 2) throw std::invalid_argument("sequence length must be at least 2");

    TeResult res;
    std::uint64_t nb = static_cast<std::uint64_t>(m.bases().size());
    std::uint64_t total = 1;
    for (int i = 0; i < length; ++i) {
        if (total > opt.max_nodes / nb) {
            res.verdict = TeVerdict::budget_exceeded;
            return res;
        }
        total *= nb;
    }
    res.sequences_total = total;

    TeSearch search(m, exchange_class, length);

    // Group all sequences into compatibility classes by union multiset.
    std::map<std::vector<int>, std::vector<std::uint64_t>> classes;
    {
        std::vector<int> tuple(static_cast<size_t>(length), 0);
        for (std::uint64_t code = 0; code < total; ++code) {
            classes[union_counts(m, search.decode(code))].push_back(code);
        }
    }

    std::vector<std::uint8_t> seen(total, 0);
    for (auto& [key, members] : classes) {
        if (members.size() <= 1) {
            res.nodes_expanded += 1;
            continue;
        }
        // BFS from the least member; members are already sorted ascending.
        for (std::uint64_t c : members) seen[c] = 0;
        std::deque<std::uint64_t> queue{members.front()};
        seen[members.front()] = 1;
        std::uint64_t reached = 1;
        while (!queue.empty()) {
            std::uint64_t cur = queue.front();
            queue.pop_front();
            if (++res.nodes_expanded > opt.max_nodes) {
                res.verdict = TeVerdict::budget_exceeded;
                res.witness.reset();
                return res;
            }
            search.neighbors(cur, search.decode(cur), [&](std::uint64_t nxt) {
                if (!seen[nxt]) {
                    seen[nxt] = 1;
                    ++reached;
                    queue.push_back(nxt);
                }
            });
        }
        if (reached < members.size()) {
            for (std::uint64_t c : members) {
                if (!seen[c]) {
                    res.verdict = TeVerdict::fails_at_m;
                    res.witness = make_witness(search, members.front(), c);
                    return res;
                }
            }
        }
    }
    res.verdict = TeVerdict::holds_at_m;
    return res;
}

TeResult te1_via_lemma(const Matroid& m, int length, TeOptions opt) {
    TeResult res = te_check(m, 2, length, opt);
    if (res.verdict != TeVerdict::holds_at_m) return res;

    // Swap connectivity: (A, B) -> (B, A) under symmetric exchanges alone.
    TeSearch search(m, 1, 2);
    std::uint64_t nb = static_cast<std::uint64_t>(m.bases().size());
    std::vector<std::uint8_t> seen(nb * nb, 0);
    for (std::uint64_t i = 0; i < nb; ++i) {
        for (std::uint64_t j = i + 1; j < nb; ++j) {
            std::uint64_t start = i * nb + j;
            std::uint64_t target = j * nb + i;
            std::fill(seen.begin(), seen.end(), 0);
            std::deque<std::uint64_t> queue{start};
            seen[start] = 1;
            bool found = false;
            while (!queue.empty() && !found) {
                std::uint64_t cur = queue.front();
                queue.pop_front();
                if (++res.nodes_expanded > opt.max_nodes) {
                    res.verdict = TeVerdict::budget_exceeded;
                    return res;
                }
                search.neighbors(cur, search.decode(cur), [&](std::uint64_t nxt) {
                    if (nxt == target) found = true;
                    if (!seen[nxt]) {
                        seen[nxt] = 1;
                        queue.push_back(nxt);
                    }
                });
            }
            if (!found && !seen[target]) {
                res.verdict = TeVerdict::fails_at_m;
                res.witness = make_witness(search, start, target);
                return res;
            }
        }
    }
    res.verdict = TeVerdict::holds_at_m;
    return res;
}

std::vector<Move> uniform_swap_chain(const Matroid& m, Mask a1, Mask a2) {
    if (popcount(a1) != popcount(a2)) throw std::invalid_argument("size mismatch");
    if (!m.is_basis(a1) || !m.is_basis(a2))
        throw std::invalid_argument("sequence entry is not a basis");

    std::vector<int> only1, only2;
    for (int i = 0; i < m.ground().size(); ++i) {
        if ((a1 & ~a2) & bit(i)) only1.push_back(i);
        if ((a2 & ~a1) & bit(i)) only2.push_back(i);
    }

    std::vector<Move> chain;
    Mask cur1 = a1, cur2 = a2;
    for (size_t p = 0; p < only1.size(); ++p) {
        int x = only1[p], y = only2[p];
        if (!(exchange_candidates(m, cur1, cur2, x) & bit(y)))
            throw std::invalid_argument("partner not in E(x; A_r, A_s)");
        chain.push_back(SymmetricExchange{0, 1, x, y});
        cur1 = (cur1 & ~bit(x)) | bit(y);
        cur2 = (cur2 & ~bit(y)) | bit(x);
    }
    return chain;
}

std::array<std::vector<Mask>, 2> lift_compatible_sequences(const Expansion& e,
                                                           const std::vector<Mask>& seq_a,
                                                           const std::vector<Mask>& seq_b) {
    auto lift = [&e](const std::vector<Mask>& seq) {
        std::vector<int> occurrences(e.copies.size(), 0);
        std::vector<Mask> out;
        out.reserve(seq.size());
        for (Mask a : seq) {
            Mask lifted = 0;
            for (size_t i = 0; i < e.copies.size(); ++i) {
                if (!(a & bit(static_cast<int>(i)))) continue;
                const auto& copies = e.copies[i];
                lifted |= bit(copies[static_cast<size_t>(occurrences[i]) % copies.size()]);
                ++occurrences[i];
            }
            out.push_back(lifted);
        }
        return out;
    };
    return {lift(seq_a), lift(seq_b)};
}

std::vector<Mask> project_sequence(const GroundSet& expanded, const GroundSet& projected,
                                   const std::vector<Mask>& seq) {
    std::vector<Mask> out;
    out.reserve(seq.size());
    for (Mask s : seq) out.push_back(project_set(expanded, projected, s));
    return out;
}

WhiteReport white_report(const Matroid& m, int m_max, TeOptions opt) {
    if (m_max < 2) throw std::invalid_argument("sequence length must be at least 2");
    WhiteReport rep;
    rep.ground_before = m.ground().size();
    rep.bases_before = static_cast<int>(m.bases().size());

    ContractionResult c = contract(m.family());
    rep.contracted = c.contracted;
    rep.ground_after = c.contracted.ground.size();
    rep.bases_after = static_cast<int>(c.contracted.sets.size());

    Matroid contracted(rep.contracted);
    for (int cls = 1; cls <= 3; ++cls) {
        for (int len = 2; len <= m_max; ++len) {
            WhiteReport::Entry entry;
            entry.exchange_class = cls;
            entry.length = len;
            entry.result = te_check(contracted, cls, len, opt);
            rep.sequences_total += entry.result.sequences_total;
            rep.nodes_expanded += entry.result.nodes_expanded;
            if (entry.result.verdict != TeVerdict::holds_at_m) rep.all_hold = false;
            rep.entries.push_back(std::move(entry));
        }
    }
    return rep;
}

namespace {

std::string render_sequence(const GroundSet& g, const std::vector<Mask>& seq) {
    std::string out;
    for (size_t i = 0; i < seq.size(); ++i) {
        if (i) out += " | ";
        out += format_set(g, seq[i]);
    }
    return out;
}

}  // namespace

std::string render_white_report(const WhiteReport& r, bool kv_format) {
    std::string out;
    GroundSet g = r.contracted.ground;
    if (kv_format) {
        out += "ground=" + std::to_string(r.ground_before) + "\n";
        out += "contracted_ground=" + std::to_string(r.ground_after) + "\n";
        out += "bases=" + std::to_string(r.bases_before) + "\n";
        out += "contracted_bases=" + std::to_string(r.bases_after) + "\n";
        for (const auto& e : r.entries) {
            std::string key = "te" + std::to_string(e.exchange_class) + "_m" + std::to_string(e.length);
            out += key + "=" + to_string(e.result.verdict) + "\n";
            if (e.result.witness) {
                out += key + "_witness_a=" + render_sequence(g, e.result.witness->sequences[0]) + "\n";
                out += key + "_witness_b=" + render_sequence(g, e.result.witness->sequences[1]) + "\n";
            }
        }
        out += "sequences=" + std::to_string(r.sequences_total) + "\n";
        out += "nodes=" + std::to_string(r.nodes_expanded) + "\n";
        out += std::string("all_hold=") + (r.all_hold ? "yes" : "no") + "\n";
        return out;
    }
    out += "contraction: ground " + std::to_string(r.ground_before) + " -> " +
           std::to_string(r.ground_after) + ", bases " + std::to_string(r.bases_before) +
           " -> " + std::to_string(r.bases_after) + "\n";
    for (const auto& e : r.entries) {
        out += "te class=" + std::to_string(e.exchange_class) + " m=" +
               std::to_string(e.length) + ": " + to_string(e.result.verdict) + "\n";
        if (e.result.witness) {
            out += "  witness A: " + render_sequence(g, e.result.witness->sequences[0]) + "\n";
            out += "  witness B: " + render_sequence(g, e.result.witness->sequences[1]) + "\n";
        }
    }
    out += "explored: sequences=" + std::to_string(r.sequences_total) +
           " nodes=" + std::to_string(r.nodes_expanded) + "\n";
    return out;
}

}  // namespace matrex
