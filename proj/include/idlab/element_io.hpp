#ifndef IDLAB_ELEMENT_IO_HPP
#define IDLAB_ELEMENT_IO_HPP

#include <stdexcept>
#include <string>

#include "idlab/lie_ring.hpp"

namespace idlab {

struct ParseError : std::runtime_error {
    size_t position; // 0-based offset into the input text
    ParseError(const std::string& message, size_t pos)
        : std::runtime_error(message + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

/* Element grammar (whitespace permitted between tokens):
 *
 *   element    = ["-"] term { ("+" | "-") term } ;
 *   term       = [ uint "*" ] monomial ;
 *   monomial   = { varfactor "*" } deriv | deriv ;
 *   varfactor  = "x" uint [ "^" uint ] ;
 *   deriv      = "d" uint ;
 *
 * A coefficient defaults to 1; "-" negates the following term; repeated
 * x-indices within one monomial accumulate exponents. The single token "0"
 * denotes the zero element. Syntax errors throw ParseError with a position;
 * invalid basis elements (part >= direction, index out of range) throw
 * ParseError with a semantic message.
 */
RingElement parse_element(const RingContext& ctx, const std::string& text);

// Canonical rendering: terms in (direction, weight, multiplicity-vector)
// order, x-factors by ascending index, "*" separators, "^" only for
// exponents > 1, coefficient magnitude omitted when 1, "0" for zero.
// parse_element(print_element(x)) == x.
std::string print_element(const RingElement& x);

std::string print_basis_element(const BasisElement& e);

} // namespace idlab

#endif
