#pragma once

#include <string>

#include "gorder/fo/ast.hpp"

namespace gorder::fo {

struct parse_error : validation_error {
    parse_error(const std::string& msg, int line, int col)
        : validation_error(msg + " at " + std::to_string(line) + ":" + std::to_string(col)),
          line(line),
          col(col) {}
    int line;
    int col;
};

/// Parses a single formula. Grammar (precedence low to high):
///   formula := implies ("<->" implies)*
///   implies := or ("->" implies)?
///   or      := and ("|" and)*
///   and     := unary ("&" unary)*
///   unary   := "!" unary | quantifier | atom
///   quantifier := ("forall"|"exists") IDENT ["in" "N"] [":" arith] "." formula
///   atom    := "(" formula ")" | IDENT "(" terms ")" | operand RELOP operand
/// Graph relations: <=s <=i <=m <s <i <m <.s <.se <.sv <.i <.m = != and the
/// negated forms !<=s !<=i !<=m. Numeric comparisons: = != < <= > >=; a bare
/// graph term in numeric position means its vertex count. Terms: variables,
/// named constants (K2, P3N1, emptyg, double3star), indexed families N[e]
/// P[e] C[e] K[e] S[e] C1[e] C2[e], gadgets CP4C[e,e] PCS[e,e], and "cup".
FormulaPtr parse_formula(const std::string& text);

}  // namespace gorder::fo
