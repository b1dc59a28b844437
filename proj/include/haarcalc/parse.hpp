#pragma once

#include <string>

#include "haarcalc/haar.hpp"

namespace haarcalc {

// Grammar: expr := term ("+" term)*, term := atom ("^" nat)?,
// atom := "R" | "Qp(p)" | "Zp(p)" | "Prufer(p)" | "K(q)" | "O(q)" | "Z"
//       | "T" | "Z/n" | "D(label)".  "0" and the empty string are the zero
// group. Errors are std::invalid_argument carrying the offending position.
GroupExpr parse_expr(const std::string& text);

// Inline morphism forms over a given source group:
//   "id", "mul(5)", "mul(3/2)", "mul(c)", "mul(2*c^3)", "val(-1)",
// or a JSON block list [{"block":"R^2","matrix":[[1,1],[0,1]]}, ...] with
// payload key one of "matrix", "mul", "val", "perm", "id".
Morphism parse_morphism(const std::string& text, const GroupExpr& source);

// {"vertices": ["Qp(5)", ...], "edges": [{"from":0,"to":0,"morphism":"mul(5)"}]}
Diagram parse_diagram(const std::string& json_text);

// Positive scalar literal: "5", "3/2", "c", "3/2*c^2". Must be positive.
PositiveReal parse_scalar(const std::string& text);

}  // namespace haarcalc
