#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "matrex/families.hpp"
#include "matrex/matroid.hpp"

namespace matrex {

/// Parse failure with the 1-based line it was detected on.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_ = 0;
};

/// One parsed file: `matroid v1`, `graph v1`, `system v1` or `alpha v1`.
/// Values are canonicalized on parse, so parse(serialize(d)) == d.
using Document = std::variant<SetFamily, MultiGraph, SetSystem, ExpansionVector>;

Document parse(const std::string& text);

/// Typed parse helpers; throw ParseError when the file has another kind.
SetFamily parse_family(const std::string& text);
MultiGraph parse_graph(const std::string& text);
SetSystem parse_system(const std::string& text);
ExpansionVector parse_alpha(const std::string& text);

std::string serialize(const Document& d);
std::string serialize_family(const SetFamily& f);
std::string serialize_graph(const MultiGraph& g);
std::string serialize_system(const SetSystem& s);
std::string serialize_alpha(const ExpansionVector& a);

}  // namespace matrex
