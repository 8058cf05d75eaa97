#include "laumon/expr.hpp"

#include <cctype>

#include "laumon/symbols.hpp"

namespace laumon {

namespace {

struct Parser {
    const std::string &s;
    size_t i = 0;
    bool allow_any;

    void skip() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }

    bool peek(char c) {
        skip();
        return i < s.size() && s[i] == c;
    }

    bool eat(char c) {
        if (peek(c)) {
            ++i;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string &msg) { throw ParseError(i, msg); }

    Rat parse_sum() {
        Rat r = parse_product();
        for (;;) {
            if (eat('+'))
                r = r + parse_product();
            else if (eat('-'))
                r = r - parse_product();
            else
                return r;
        }
    }

    Rat parse_product() {
        Rat r = parse_unary();
        for (;;) {
            if (eat('*'))
                r = r * parse_unary();
            else if (eat('/')) {
                Rat d = parse_unary();
                if (d.is_zero()) fail("division by zero");
                r = r / d;
            } else
                return r;
        }
    }

    Rat parse_unary() {
        if (eat('-')) return -parse_unary();
        if (eat('+')) return parse_unary();
        return parse_power();
    }

    Rat parse_power() {
        Rat base = parse_atom();
        skip();
        if (eat('^')) {
            long e = parse_int_literal();
            if (e > 64 || e < -64) fail("exponent out of range");
            return base.pow((int)e);
        }
        return base;
    }

    long parse_int_literal() {
        skip();
        bool neg = false;
        if (eat('-')) neg = true;
        skip();
        if (i >= s.size() || !std::isdigit((unsigned char)s[i])) fail("expected integer");
        long v = 0;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) {
            v = v * 10 + (s[i] - '0');
            if (v > 1000000000L) fail("integer literal too large");
            ++i;
        }
        return neg ? -v : v;
    }

    Rat parse_atom() {
        skip();
        if (i >= s.size()) fail("unexpected end of input");
        char c = s[i];
        if (c == '(') {
            ++i;
            Rat r = parse_sum();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit((unsigned char)c)) {
            size_t start = i;
            while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
            return Rat(Poly(Int(s.substr(start, i - start))));
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            size_t start = i;
            while (i < s.size() &&
                   (std::isalnum((unsigned char)s[i]) || s[i] == '_'))
                ++i;
            std::string name = s.substr(start, i - start);
            if (!allow_any) {
                bool ok = (name == "q" || name == "qp");
                if (!ok && name.size() >= 2 && name[0] == 't') {
                    ok = true;
                    for (size_t k = 1; k < name.size(); ++k)
                        if (!std::isdigit((unsigned char)name[k])) ok = false;
                }
                if (!ok) {
                    i = start;
                    fail("unknown symbol '" + name + "'");
                }
            }
            return Rat::var(intern(name));
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

Rat parse_expr(const std::string &text, bool allow_any_symbol) {
    Parser p{text, 0, allow_any_symbol};
    Rat r = p.parse_sum();
    p.skip();
    if (p.i != text.size()) p.fail("trailing input");
    return r;
}

std::string print_scalar(const Rat &x) {
    Rat r = x.reduced();
    if (r.den().is_monomial()) {
        Poly folded = r.num().mul_mono(r.den().terms().begin()->first.inv());
        const Int &c = r.den().terms().begin()->second;
        if (c == 1) return folded.str();
        return "(" + folded.str() + ")/" + c.get_str();
    }
    return "(" + r.num().str() + ")/(" + r.den().str() + ")";
}

}  // namespace laumon
