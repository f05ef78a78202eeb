#include "matrex/label.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>

namespace matrex {

namespace {

int parse_positive_int(std::string_view s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || value < 1) return -1;
    return value;
}

}  // namespace

Label Label::parse(std::string_view text) {
    if (text.size() < 2 || text[0] != 'x')
        throw std::invalid_argument("bad element label '" + std::string(text) + "'");
    std::string_view rest = text.substr(1);
    size_t dot = rest.find('.');
    Label l;
    if (dot == std::string_view::npos) {
        l.base = parse_positive_int(rest);
    } else {
        l.base = parse_positive_int(rest.substr(0, dot));
        l.copy = parse_positive_int(rest.substr(dot + 1));
        if (l.copy < 1) l.base = -1;
    }
    if (l.base < 1)
        throw std::invalid_argument("bad element label '" + std::string(text) + "'");
    return l;
}

std::string Label::str() const {
    std::string s = "x" + std::to_string(base);
    if (copy != 0) s += "." + std::to_string(copy);
    return s;
}

int popcount(Mask m) { return std::popcount(m); }

bool set_lex_less(Mask a, Mask b) {
    Mask diff = a ^ b;
    if (diff == 0) return false;
    Mask low = diff & (~diff + 1);
    return (a & low) != 0;
}

namespace {

void combine(const std::vector<int>& positions, size_t from, int left, Mask acc,
             std::vector<Mask>& out) {
    if (left == 0) {
        out.push_back(acc);
        return;
    }
    if (positions.size() - from < static_cast<size_t>(left)) return;
    combine(positions, from + 1, left - 1, acc | bit(positions[from]), out);
    combine(positions, from + 1, left, acc, out);
}

}  // namespace

std::vector<Mask> subsets_of_size(Mask universe, int k) {
    std::vector<Mask> out;
    if (k < 0 || k > popcount(universe)) return out;
    std::vector<int> positions;
    for (int i = 0; i < 64; ++i)
        if (universe & bit(i)) positions.push_back(i);
    combine(positions, 0, k, 0, out);
    return out;
}

GroundSet GroundSet::of(std::vector<Label> labels) {
    std::sort(labels.begin(), labels.end());
    for (size_t i = 1; i < labels.size(); ++i)
        if (labels[i] == labels[i - 1])
            throw std::invalid_argument("duplicate element " + labels[i].str());
    if (labels.size() > 64)
        throw std::invalid_argument("ground set too large (max 64 elements)");
    GroundSet g;
    g.elems_ = std::move(labels);
    return g;
}

int GroundSet::index_of(const Label& l) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), l);
    if (it == elems_.end() || *it != l) return -1;
    return static_cast<int>(it - elems_.begin());
}

Mask GroundSet::full_mask() const {
    if (elems_.empty()) return 0;
    return elems_.size() == 64 ? ~Mask{0} : (Mask{1} << elems_.size()) - 1;
}

Mask mask_from_labels(const GroundSet& ground, const std::vector<Label>& labels) {
    Mask m = 0;
    for (const Label& l : labels) {
        int i = ground.index_of(l);
        if (i < 0) throw std::invalid_argument("element outside ground set: " + l.str());
        m |= bit(i);
    }
    return m;
}

std::vector<Label> labels_from_mask(const GroundSet& ground, Mask m) {
    std::vector<Label> out;
    for (int i = 0; i < ground.size(); ++i)
        if (m & bit(i)) out.push_back(ground[i]);
    return out;
}

std::string format_set(const GroundSet& ground, Mask m) {
    std::string s;
    for (int i = 0; i < ground.size(); ++i) {
        if (!(m & bit(i))) continue;
        if (!s.empty()) s += ' ';
        s += ground[i].str();
    }
    return s;
}

}  // namespace matrex
