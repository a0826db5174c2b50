#include "ffa/parse.hpp"

#include <cctype>

namespace ffa {

namespace {

// Recursive-descent parser over a whitespace-stripped buffer.
struct Parser {
    const FieldCtx& F;
    std::string s;
    size_t pos = 0;

    explicit Parser(const FieldCtx& f, const std::string& text) : F(f) {
        s.reserve(text.size());
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw Error("funcspec parse error at offset " + std::to_string(pos) + ": " + why);
    }

    bool eof() const { return pos >= s.size(); }
    char peek() const { return eof() ? '\0' : s[pos]; }
    bool accept(char c) {
        if (peek() == c) { ++pos; return true; }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    uint64_t integer() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
        uint64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + uint64_t(s[pos] - '0');
            if (v > (uint64_t(1) << 62)) fail("integer too large");
            ++pos;
        }
        return v;
    }

    // exponent := integer | 'p' integer   ("p3" means p^3)
    uint64_t exponent() {
        if (accept('p')) {
            uint64_t k = integer();
            uint64_t e = 1;
            for (uint64_t i = 0; i < k; ++i) {
                e *= F.p();
                if (e > (uint64_t(1) << 62)) fail("exponent overflow");
            }
            return e;
        }
        return integer();
    }

    bool at_element() const {
        char c = peek();
        if (c == 'g' || c == '[') return true;
        return std::isdigit(static_cast<unsigned char>(c)) != 0;
    }

    uint32_t element() {
        if (accept('g')) {
            uint64_t k = accept('^') ? integer() : 1;
            return F.pow(F.generator_raw(), k);
        }
        if (accept('[')) {
            std::vector<uint8_t> coords;
            coords.push_back(uint8_t(integer()));
            while (accept(',')) coords.push_back(uint8_t(integer()));
            expect(']');
            return F.from_coords(coords);
        }
        uint64_t v = integer();
        if (v >= F.q()) fail("element index out of range");
        return uint32_t(v);
    }

    // factor := 'X' ['^' exp] | 'Tr' ['_' int] '(' spec ')' ['^' exp]
    //         | '(' spec ')' '^' exp | element
    FuncSpec factor(uint32_t coeff) {
        if (s.compare(pos, 2, "Tr") == 0) {
            pos += 2;
            unsigned m = 1;
            if (accept('_')) m = unsigned(integer());
            expect('(');
            FuncSpec inner = spec();
            expect(')');
            uint64_t e = accept('^') ? exponent() : 1;
            return FuncSpec::trace_power(F, std::move(inner), m, e, coeff);
        }
        if (accept('X')) {
            uint64_t e = accept('^') ? exponent() : 1;
            return FuncSpec::monomial(F, coeff, e);
        }
        if (accept('(')) {
            FuncSpec base = spec();
            expect(')');
            expect('^');
            uint64_t e = exponent();
            return FuncSpec::composite_power(F, std::move(base), e, coeff);
        }
        if (at_element()) return FuncSpec::constant(F, F.mul(coeff, element()));
        fail("expected term");
    }

    // term := [element '*'] factor
    FuncSpec term(bool negate) {
        uint32_t coeff = 1;
        if (at_element() && peek() != 'g') {
            // integer or coords could still be a bare constant; look for '*'
            size_t save = pos;
            uint32_t e = element();
            if (accept('*')) {
                coeff = e;
            } else {
                pos = save;
            }
        } else if (peek() == 'g') {
            size_t save = pos;
            uint32_t e = element();
            if (accept('*')) {
                coeff = e;
            } else {
                pos = save;
            }
        }
        if (negate) coeff = F.neg(coeff);
        return factor(coeff);
    }

    // spec := term (('+'|'-') term)*
    FuncSpec spec() {
        FuncSpec acc = term(false);
        while (true) {
            if (accept('+')) acc.append(term(false));
            else if (accept('-')) acc.append(term(true));
            else break;
        }
        return acc;
    }
};

}  // namespace

FuncSpec parse_funcspec(const FieldCtx& F, const std::string& text) {
    Parser p(F, text);
    FuncSpec r = p.spec();
    if (!p.eof()) p.fail("trailing input");
    return r;
}

uint32_t parse_elem(const FieldCtx& F, const std::string& text) {
    Parser p(F, text);
    uint32_t v = p.element();
    if (!p.eof()) p.fail("trailing input");
    return v;
}

}  // namespace ffa
