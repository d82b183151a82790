#include "circfn/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace circfn {

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;
    bool uses_x = false;

    explicit Parser(const std::string& t) : text(t) {}

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) { throw ExprError(pos, what); }

    ScalarFunction parse_expr() {
        ScalarFunction lhs = parse_term();
        while (true) {
            if (accept('+')) {
                ScalarFunction rhs = parse_term();
                lhs = [lhs, rhs](Cplx x) { return lhs(x) + rhs(x); };
            } else if (accept('-')) {
                ScalarFunction rhs = parse_term();
                lhs = [lhs, rhs](Cplx x) { return lhs(x) - rhs(x); };
            } else {
                return lhs;
            }
        }
    }

    ScalarFunction parse_term() {
        ScalarFunction lhs = parse_factor();
        while (accept('*')) {
            ScalarFunction rhs = parse_factor();
            lhs = [lhs, rhs](Cplx x) { return lhs(x) * rhs(x); };
        }
        return lhs;
    }

    ScalarFunction parse_factor() {
        if (accept('-')) {
            ScalarFunction inner = parse_factor();
            return [inner](Cplx x) { return -inner(x); };
        }
        if (accept('+')) return parse_factor();
        return parse_power();
    }

    ScalarFunction parse_power() {
        ScalarFunction base = parse_atom();
        if (!accept('^')) return base;
        skip_space();
        const std::size_t at = pos;
        unsigned long exponent = 0;
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected a nonnegative integer exponent");
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            exponent = exponent * 10 + static_cast<unsigned long>(text[pos++] - '0');
        if (exponent > 64) throw ExprError(at, "exponent too large (max 64)");
        return [base, exponent](Cplx x) {
            Cplx v = 1.0;
            const Cplx b = base(x);
            for (unsigned long q = 0; q < exponent; ++q) v *= b;
            return v;
        };
    }

    ScalarFunction parse_atom() {
        skip_space();
        if (pos >= text.size()) fail("unexpected end of expression");
        const char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_name();
        if (accept('(')) {
            ScalarFunction inner = parse_expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        fail("unexpected character");
    }

    ScalarFunction parse_number() {
        const std::size_t start = pos;
        const char* begin = text.c_str() + pos;
        char* end = nullptr;
        const double value = std::strtod(begin, &end);
        if (end == begin) throw ExprError(start, "malformed number");
        pos += static_cast<std::size_t>(end - begin);
        if (pos < text.size() && text[pos] == 'i') {
            ++pos;
            return [value](Cplx) { return Cplx{0.0, value}; };
        }
        return [value](Cplx) { return Cplx{value, 0.0}; };
    }

    ScalarFunction parse_name() {
        const std::size_t start = pos;
        std::string name;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos])))
            name += text[pos++];
        if (name == "x") {
            uses_x = true;
            return [](Cplx x) { return x; };
        }
        if (name == "i") return [](Cplx) { return Cplx{0.0, 1.0}; };

        ScalarFunction fn;
        if (name == "exp") fn = [](Cplx x) { return std::exp(x); };
        else if (name == "sin") fn = [](Cplx x) { return std::sin(x); };
        else if (name == "cos") fn = [](Cplx x) { return std::cos(x); };
        else if (name == "sinh") fn = [](Cplx x) { return std::sinh(x); };
        else if (name == "cosh") fn = [](Cplx x) { return std::cosh(x); };
        else throw ExprError(start, "unknown name '" + name + "'");

        if (!accept('(')) fail("expected '(' after function name");
        ScalarFunction arg = parse_expr();
        if (!accept(')')) fail("expected ')'");
        return [fn, arg](Cplx x) { return fn(arg(x)); };
    }
};

} // namespace

ScalarFunction parse_function(const std::string& text) {
    Parser p(text);
    ScalarFunction fn = p.parse_expr();
    p.skip_space();
    if (p.pos != text.size()) throw ExprError(p.pos, "trailing input");
    return fn;
}

Cplx parse_complex(const std::string& text) {
    Parser p(text);
    ScalarFunction fn = p.parse_expr();
    p.skip_space();
    if (p.pos != text.size()) throw ExprError(p.pos, "trailing input");
    if (p.uses_x) throw ExprError(0, "expected a constant, found x");
    return fn(Cplx{0.0});
}

} // namespace circfn
