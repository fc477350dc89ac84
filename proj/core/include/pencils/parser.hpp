#ifndef PENCILS_PARSER_HPP
#define PENCILS_PARSER_HPP

#include <string>
#include <vector>

#include "pencils/multipoly.hpp"

namespace pencils {

/// Parses an arithmetic expression over +, -, *, /, ^, parentheses,
/// integer/rational literals, the field generator symbol, and the given
/// variables. Division is allowed by constants only. Errors carry the
/// 1-based line and column.
MultiPoly parse_polynomial(const std::string& text, const FieldPtr& field,
                           const std::vector<std::string>& variables,
                           bool require_homogeneous = false);

/// Parses a constant expression (no variables) into a field element.
FieldElement parse_field_element(const std::string& text, const FieldPtr& field);

/// The parsed content of an input file: a sectioned text with key = "value"
/// lines under [field] (optional; defaults to Q) and [pencil] headers.
struct ParsedInput {
    FieldPtr field;
    MultiPoly F, G;
    std::string f_text, g_text;
};

ParsedInput parse_input(const std::string& text);

}  // namespace pencils

#endif
