#include "idlab/element_io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace idlab {

namespace {

enum class Tok { Integer, X, D, Star, Caret, Plus, Minus, End };

struct Token {
    Tok kind;
    i64 value = 0; // for Integer
    size_t pos = 0;
};

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            i64 v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = checked_add(checked_mul(v, 10), text[i] - '0');
                ++i;
            }
            out.push_back({Tok::Integer, v, start});
            continue;
        }
        switch (c) {
        case 'x': out.push_back({Tok::X, 0, start}); break;
        case 'd': out.push_back({Tok::D, 0, start}); break;
        case '*': out.push_back({Tok::Star, 0, start}); break;
        case '^': out.push_back({Tok::Caret, 0, start}); break;
        case '+': out.push_back({Tok::Plus, 0, start}); break;
        case '-': out.push_back({Tok::Minus, 0, start}); break;
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
        ++i;
    }
    out.push_back({Tok::End, 0, text.size()});
    return out;
}

class Parser {
public:
    Parser(const RingContext& ctx, const std::string& text)
        : ctx_(ctx), toks_(lex(text)) {}

    RingElement parse() {
        // the zero element is written as the bare token "0"
        if (toks_.size() == 2 && toks_[0].kind == Tok::Integer && toks_[0].value == 0)
            return RingElement{};
        RingElement out;
        i64 sign = 1;
        if (accept(Tok::Minus))
            sign = -1;
        parse_term(out, sign);
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            sign = advance().kind == Tok::Plus ? 1 : -1;
            parse_term(out, sign);
        }
        expect(Tok::End, "end of input");
        return out;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& advance() { return toks_[pos_++]; }
    bool accept(Tok k) {
        if (peek().kind == k) {
            ++pos_;
            return true;
        }
        return false;
    }
    const Token& expect(Tok k, const char* what) {
        if (peek().kind != k)
            throw ParseError(std::string("expected ") + what, peek().pos);
        return advance();
    }
    i64 expect_uint(const char* what) {
        return expect(Tok::Integer, what).value;
    }

    void parse_term(RingElement& out, i64 sign) {
        i64 coeff = 1;
        if (peek().kind == Tok::Integer) {
            coeff = advance().value;
            expect(Tok::Star, "'*' after coefficient");
        }
        Partition monomial;
        std::ostringstream spelled; // for semantic error messages
        while (peek().kind == Tok::X) {
            size_t xpos = advance().pos;
            i64 index = expect_uint("variable index after 'x'");
            if (index < 1)
                throw ParseError("variable index must be >= 1", xpos);
            if (index > 1000000)
                throw ParseError("variable index too large", xpos);
            i64 exponent = 1;
            if (accept(Tok::Caret))
                exponent = expect_uint("exponent after '^'");
            if (exponent > 0)
                monomial.add(static_cast<int>(index), exponent);
            spelled << "x" << index;
            if (exponent != 1)
                spelled << "^" << exponent;
            spelled << "*";
            expect(Tok::Star, "'*' after variable factor");
        }
        size_t dpos = peek().pos;
        expect(Tok::D, "a monomial ('x<i>' factors) or derivation 'd<k>'");
        i64 k = expect_uint("derivation index after 'd'");
        spelled << "d" << k;
        if (k < 1 || k > ctx_.n)
            throw ParseError("derivation index " + std::to_string(k) +
                                 " out of range 1.." + std::to_string(ctx_.n),
                             dpos);
        if (monomial.max_part() > static_cast<int>(k) - 1)
            throw ParseError("part " + std::to_string(monomial.max_part()) +
                                 " exceeds direction bound in monomial " + spelled.str(),
                             dpos);
        out.add_term(BasisElement{std::move(monomial), static_cast<int>(k)},
                     checked_mul(sign, coeff));
    }

    const RingContext& ctx_;
    std::vector<Token> toks_;
    size_t pos_ = 0;
};

} // namespace

RingElement parse_element(const RingContext& ctx, const std::string& text) {
    return Parser(ctx, text).parse();
}

std::string print_basis_element(const BasisElement& e) {
    std::ostringstream out;
    for (const auto& entry : e.partition.entries()) {
        out << "x" << entry.part;
        if (entry.mult != 1)
            out << "^" << entry.mult;
        out << "*";
    }
    out << "d" << e.direction;
    return out.str();
}

std::string print_element(const RingElement& x) {
    if (x.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : x.terms()) {
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        u64 mag = c < 0 ? u64{0} - static_cast<u64>(c) : static_cast<u64>(c);
        if (mag != 1)
            out << mag << "*";
        out << print_basis_element(e);
        first = false;
    }
    return out.str();
}

} // namespace idlab
