#pragma once

#include "achsat/formula.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace achsat {

// Reads "p cnf n m" followed by 0-terminated clauses (which may span lines;
// 'c' lines are comments). All clauses must have the same width; an empty
// instance takes `width_if_empty` (default 1). Throws ParseError.
Formula read_dimacs(std::istream& in, std::optional<std::uint32_t> width_if_empty = std::nullopt);
Formula read_dimacs_file(const std::string& path);

void write_dimacs(std::ostream& out, FormulaView f, const std::vector<std::string>& comments = {});
void write_dimacs_file(const std::string& path, FormulaView f,
                       const std::vector<std::string>& comments = {});

} // namespace achsat
