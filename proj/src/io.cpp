#include "matrex/io.hpp"

#include <charconv>
#include <sstream>

namespace matrex {

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line line;
        line.number = number;
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

int parse_int(const Line& line, const std::string& tok, int min_value) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < min_value)
        throw ParseError(line.number, "bad number '" + tok + "'");
    return value;
}

Label parse_label(const Line& line, const std::string& tok) {
    try {
        return Label::parse(tok);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line.number, e.what());
    }
}

GroundSet parse_ground_line(const Line& line) {
    if (line.tokens.size() < 2)
        throw ParseError(line.number, "ground line needs at least one element");
    std::vector<Label> labels;
    for (size_t i = 1; i < line.tokens.size(); ++i)
        labels.push_back(parse_label(line, line.tokens[i]));
    try {
        return GroundSet::of(std::move(labels));
    } catch (const std::invalid_argument& e) {
        throw ParseError(line.number, e.what());
    }
}

Mask parse_set_line(const Line& line, const GroundSet& ground, size_t first_token) {
    Mask m = 0;
    for (size_t i = first_token; i < line.tokens.size(); ++i) {
        Label l = parse_label(line, line.tokens[i]);
        int idx = ground.index_of(l);
        if (idx < 0)
            throw ParseError(line.number, "unknown element '" + line.tokens[i] + "'");
        if (m & bit(idx))
            throw ParseError(line.number, "duplicate element '" + line.tokens[i] + "'");
        m |= bit(idx);
    }
    return m;
}

SetFamily parse_family_lines(const std::vector<Line>& lines) {
    GroundSet ground;
    bool have_ground = false;
    std::vector<Mask> sets;
    for (size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const std::string& directive = line.tokens[0];
        if (directive == "ground") {
            if (have_ground) throw ParseError(line.number, "duplicate ground line");
            ground = parse_ground_line(line);
            have_ground = true;
        } else if (directive == "basis") {
            if (!have_ground)
                throw ParseError(line.number, "basis line before ground line");
            sets.push_back(parse_set_line(line, ground, 1));
        } else {
            throw ParseError(line.number, "unknown directive '" + directive + "'");
        }
    }
    int last = lines.empty() ? 1 : lines.back().number;
    if (!have_ground) throw ParseError(last, "missing ground line");
    if (sets.empty()) throw ParseError(last, "empty family");
    return SetFamily::make(std::move(ground), std::move(sets));
}

MultiGraph parse_graph_lines(const std::vector<Line>& lines) {
    int vertices = -1;
    std::vector<MultiGraph::Edge> edges;
    for (size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const std::string& directive = line.tokens[0];
        if (directive == "vertices") {
            if (vertices >= 0) throw ParseError(line.number, "duplicate vertices line");
            if (line.tokens.size() != 2)
                throw ParseError(line.number, "vertices line needs one count");
            vertices = parse_int(line, line.tokens[1], 1);
        } else if (directive == "edge") {
            if (vertices < 0)
                throw ParseError(line.number, "edge line before vertices line");
            if (line.tokens.size() != 4)
                throw ParseError(line.number, "edge line needs label and two endpoints");
            MultiGraph::Edge e;
            e.label = parse_label(line, line.tokens[1]);
            e.u = parse_int(line, line.tokens[2], 1);
            e.v = parse_int(line, line.tokens[3], 1);
            if (e.u > vertices || e.v > vertices)
                throw ParseError(line.number, "edge endpoint outside vertex range");
            edges.push_back(e);
        } else {
            throw ParseError(line.number, "unknown directive '" + directive + "'");
        }
    }
    int last = lines.empty() ? 1 : lines.back().number;
    if (vertices < 0) throw ParseError(last, "missing vertices line");
    try {
        return MultiGraph::make(vertices, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(last, e.what());
    }
}

SetSystem parse_system_lines(const std::vector<Line>& lines) {
    GroundSet ground;
    bool have_ground = false;
    std::vector<std::pair<std::string, Mask>> members;
    for (size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const std::string& directive = line.tokens[0];
        if (directive == "ground") {
            if (have_ground) throw ParseError(line.number, "duplicate ground line");
            ground = parse_ground_line(line);
            have_ground = true;
        } else if (directive == "set") {
            if (!have_ground) throw ParseError(line.number, "set line before ground line");
            if (line.tokens.size() < 2)
                throw ParseError(line.number, "set line needs a name");
            members.emplace_back(line.tokens[1], parse_set_line(line, ground, 2));
        } else {
            throw ParseError(line.number, "unknown directive '" + directive + "'");
        }
    }
    int last = lines.empty() ? 1 : lines.back().number;
    if (!have_ground) throw ParseError(last, "missing ground line");
    return SetSystem::make(std::move(ground), std::move(members));
}

ExpansionVector parse_alpha_lines(const std::vector<Line>& lines) {
    if (lines.size() != 2)
        throw ParseError(lines.size() < 2 ? lines[0].number : lines[2].number,
                         "alpha file needs exactly one line of multiplicities");
    ExpansionVector alpha;
    for (const std::string& tok : lines[1].tokens)
        alpha.push_back(parse_int(lines[1], tok, 1));
    return alpha;
}

}  // namespace

Document parse(const std::string& text) {
    std::vector<Line> lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, "empty document");
    const Line& header = lines.front();
    if (header.tokens.size() != 2 || header.tokens[1] != "v1")
        throw ParseError(header.number, "expected header '<kind> v1'");
    const std::string& kind = header.tokens[0];
    if (kind == "matroid") return parse_family_lines(lines);
    if (kind == "graph") return parse_graph_lines(lines);
    if (kind == "system") return parse_system_lines(lines);
    if (kind == "alpha") return parse_alpha_lines(lines);
    throw ParseError(header.number, "unknown document kind '" + kind + "'");
}

namespace {

template <typename T>
T parse_as(const std::string& text, const char* kind) {
    Document d = parse(text);
    if (const T* v = std::get_if<T>(&d)) return *v;
    throw ParseError(1, std::string("expected a ") + kind + " document");
}

}  // namespace

SetFamily parse_family(const std::string& text) { return parse_as<SetFamily>(text, "matroid"); }
MultiGraph parse_graph(const std::string& text) { return parse_as<MultiGraph>(text, "graph"); }
SetSystem parse_system(const std::string& text) { return parse_as<SetSystem>(text, "system"); }
ExpansionVector parse_alpha(const std::string& text) {
    return parse_as<ExpansionVector>(text, "alpha");
}

std::string serialize_family(const SetFamily& f) {
    std::string out = "matroid v1\nground";
    for (const Label& l : f.ground.elems()) out += " " + l.str();
    out += "\n";
    for (Mask s : f.sets) {
        out += "basis";
        std::string body = format_set(f.ground, s);
        if (!body.empty()) out += " " + body;
        out += "\n";
    }
    return out;
}

std::string serialize_graph(const MultiGraph& g) {
    std::string out = "graph v1\nvertices " + std::to_string(g.vertex_count) + "\n";
    for (const auto& e : g.edges)
        out += "edge " + e.label.str() + " " + std::to_string(e.u) + " " +
               std::to_string(e.v) + "\n";
    return out;
}

std::string serialize_system(const SetSystem& s) {
    std::string out = "system v1\nground";
    for (const Label& l : s.ground.elems()) out += " " + l.str();
    out += "\n";
    for (const auto& [name, m] : s.members) {
        out += "set " + name;
        std::string body = format_set(s.ground, m);
        if (!body.empty()) out += " " + body;
        out += "\n";
    }
    return out;
}

std::string serialize_alpha(const ExpansionVector& a) {
    std::string out = "alpha v1\n";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(a[i]);
    }
    out += "\n";
    return out;
}

std::string serialize(const Document& d) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, SetFamily>) return serialize_family(v);
            else if constexpr (std::is_same_v<T, MultiGraph>) return serialize_graph(v);
            else if constexpr (std::is_same_v<T, SetSystem>) return serialize_system(v);
            else return serialize_alpha(v);
        },
        d);
}

}  // namespace matrex
