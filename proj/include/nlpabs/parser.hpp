// Edinburgh-style concrete syntax.
//
// Supported: facts `h.`, rules `h :- b1, ..., bn.`, negation `\+ b`,
// variables (uppercase or '_' start), '_' anonymous variables, integers
// as constants, list sugar [a,b|T], '%' line comments, and goal directives
// `:- query(Goal, Annotation).` where Goal is a literal or a parenthesized
// comma-sequence of literals. Operators, arithmetic, cut and other built-ins
// are rejected with an error naming the unsupported feature.

#pragma once

#include "nlpabs/program.hpp"
#include "nlpabs/subst.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nlpabs {

struct ParseError : std::runtime_error {
    std::size_t line;
    std::size_t column;

    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + msg),
          line(line), column(column) {}
};

PointedProgram parse_program(std::string_view text);

// Concrete sample substitutions for the bounded executor, one per line:
//   sample(5, Y = [2,1], Z = [3,1]).
// The unit index must name a goal of the program, bound variables must
// belong to that goal, and each sample must be in solved form.
std::map<std::size_t, std::vector<Substitution>>
parse_samples(std::string_view text, const PointedProgram& program);

} // namespace nlpabs
