#pragma once

#include <stdexcept>
#include <string>

#include "laumon/poly.hpp"

namespace laumon {

struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(size_t p, const std::string &msg)
        : std::runtime_error(msg + " at position " + std::to_string(p)), pos(p) {}
};

// Coefficient-expression grammar: integers, symbols q, qp, t1..tn, operators
// + - * / ^ with integer exponents (negative allowed), parentheses.
// With allow_any_symbol, arbitrary identifiers are interned (used for the
// Laurent-polynomial inputs m(z_i,...,z_j) of the CLI).
Rat parse_expr(const std::string &text, bool allow_any_symbol = false);

// Canonical printer: reduced fraction, monomial denominators folded into
// Laurent exponents, deterministic term order.
std::string print_scalar(const Rat &x);

}  // namespace laumon
