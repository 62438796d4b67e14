#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "morbit/element.hpp"
#include "morbit/term.hpp"

namespace morbit {

/* Syntax error with the 0-based byte offset of the offending input. */
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t offset)
        : std::runtime_error(std::move(message)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/* Term grammar (whitespace insignificant, tails left-associative):
 *
 *   term    := factor { "x" factor }
 *   factor  := primary { tail }
 *   tail    := "wr" "[" INT "]" "Z"        -- base wr[m] Z
 *            | "wr" "Z_" INT               -- base wr Z_m
 *   primary := "1" | "Z" | "Z_" INT | "(" term ")"
 *
 * INT must be >= 1.  Parsing never normalizes. */
TermPtr parse_term(std::string_view text);

/* Element literals, shape-checked against a term:
 *
 *   elem := "u"                            -- unit entry
 *         | INT                            -- Z value or Z_m residue
 *         | "<" elem { "," elem } ">"      -- product tuple
 *         | "(" "[" elem { "," elem } "]" ";" INT ")"   -- (table; shift)
 *
 * Residues and Z_m shifts are reduced mod m on construction. */
Element parse_element(const Term& t, std::string_view text);

std::string print_element(const Element& e);

}  // namespace morbit
