#pragma once

#include <string>

#include "circfn/components.hpp"

namespace circfn {

/// Parse failure with the 0-based position of the offending character.
class ExprError : public std::runtime_error {
public:
    ExprError(std::size_t position, const std::string& what)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Tiny expression grammar for scalar functions of x:
///
///   expr   := term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := '-' factor | '+' factor | power
///   power  := atom ('^' integer)?
///   atom   := number | number 'i' | 'i' | 'x' | name '(' expr ')' | '(' expr ')'
///   name   := exp | sin | cos | sinh | cosh
///
/// No division, no user-defined names. Complex literals are written "a+b*i"
/// or with an imaginary suffix, "2i".
ScalarFunction parse_function(const std::string& text);

/// Parses a constant expression ("1", "0.5+0.5i"). Throws ExprError when the
/// text does not parse or mentions x.
Cplx parse_complex(const std::string& text);

} // namespace circfn
