#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "matrex/functors.hpp"
#include "matrex/matroid.hpp"

namespace matrex {

/// Ordered tuple of bases with its multiset union cached per ground index.
struct BasisSequence {
    std::vector<Mask> bases;
    std::vector<int> union_multiset;
};

BasisSequence make_sequence(const Matroid& m, std::vector<Mask> bases);

/// Equal multiset unions. Throws on length mismatch.
bool compatible(const BasisSequence& a, const BasisSequence& b);

/// E(x; A_r, A_s) as a mask over y candidates. x is a ground index in A_r.
Mask exchange_candidates(const Matroid& m, Mask a_r, Mask a_s, int x);

/// E(U; A_r, A_s): every V with both exchange results bases. All returned
/// sets satisfy |V| = |U|.
std::vector<Mask> subset_exchange_candidates(const Matroid& m, Mask a_r, Mask a_s, Mask u);

struct SymmetricExchange {
    int r = 0, s = 0;  // positions, r < s
    int x = 0, y = 0;  // ground indices
};
struct PermuteBases {
    std::vector<int> perm;  // new[i] = old[perm[i]]
};
struct SubsetExchange {
    int r = 0, s = 0;
    Mask u = 0, v = 0;
};
using Move = std::variant<SymmetricExchange, PermuteBases, SubsetExchange>;

/// Rewrites the sequence; throws naming the violated condition when the
/// move is not valid for it.
BasisSequence apply_move(const Matroid& m, const BasisSequence& seq, const Move& mv);

enum class TeVerdict { holds_at_m, fails_at_m, budget_exceeded };
const char* to_string(TeVerdict v);

struct TeOptions {
    std::uint64_t max_nodes = 1'000'000;
};

struct TeWitness {
    std::array<std::vector<Mask>, 2> sequences;
};

struct TeResult {
    TeVerdict verdict = TeVerdict::holds_at_m;
    std::optional<TeWitness> witness;
    std::uint64_t nodes_expanded = 0;
    std::uint64_t sequences_total = 0;
};

/// Bounded TE(i) check at sequence length m: every compatibility class of
/// length-m basis sequences must be connected under the class-i moves
/// (1: symmetric exchanges; 2: plus adjacent transpositions; 3: symmetric
/// subset exchanges). The witness of a failure is the lexicographically
/// least pair of compatible sequences in different components.
TeResult te_check(const Matroid& m, int exchange_class, int length, TeOptions opt = {});

/// TE(1) via the TE(2) reduction: te_check(m, 2, length) plus, for every
/// pair of bases, reachability of the swapped pair under symmetric
/// exchanges alone.
TeResult te1_via_lemma(const Matroid& m, int length, TeOptions opt = {});

/// The explicit chain of symmetric exchanges carrying (A1, A2) to (A2, A1)
/// in a uniform matroid: swap the p-th differing pair at step p. Every step
/// is validated through exchange_candidates.
std::vector<Move> uniform_swap_chain(const Matroid& m, Mask a1, Mask a2);

/// Greedy copy assignment realizing compatible lifts: scans bases in order,
/// giving the c-th occurrence of element x the copy index c mod k_x. Both
/// outputs project back onto the inputs and are mutually compatible.
std::array<std::vector<Mask>, 2> lift_compatible_sequences(const Expansion& e,
                                                           const std::vector<Mask>& seq_a,
                                                           const std::vector<Mask>& seq_b);

std::vector<Mask> project_sequence(const GroundSet& expanded, const GroundSet& projected,
                                   const std::vector<Mask>& seq);

struct WhiteReport {
    int ground_before = 0, ground_after = 0;
    int bases_before = 0, bases_after = 0;
    SetFamily contracted;
    struct Entry {
        int exchange_class = 0;
        int length = 0;
        TeResult result;
    };
    std::vector<Entry> entries;
    std::uint64_t sequences_total = 0;
    std::uint64_t nodes_expanded = 0;
    bool all_hold = true;
};

/// Contracts first, then runs te_check on the contraction for classes 1..3
/// and lengths 2..m_max.
WhiteReport white_report(const Matroid& m, int m_max, TeOptions opt = {});

std::string render_white_report(const WhiteReport& r, bool kv_format);

}  // namespace matrex
