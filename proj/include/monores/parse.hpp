#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "monores/ideal.hpp"

namespace monores {

// Ideal grammar:
//   input  := [ "vars:" ident ("," ident)* (";" | newline) ] gens
//   gens   := gen ("," gen)*
//   gen    := term ("*" term)*
//   term   := ident ("^" positive-integer)?
//   ident  := [A-Za-z_][A-Za-z0-9_]*
// Whitespace is insignificant. Without a vars: header the variable order
// is first-appearance order. Generators are minimalized on ingest.

namespace detail {

class IdealLexer {
public:
    explicit IdealLexer(std::string_view text) : text_(text) {}

    void skip_ws(bool stop_at_newline = false) {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            if (text_[pos_] == '\n') {
                if (stop_at_newline) return;
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
    }

    bool eof() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool accept(char c) {
        skip_ws();
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        skip_ws();
        if (peek() != c) fail(std::string("expected ") + what);
        advance();
    }

    std::string ident() {
        skip_ws();
        const char c = peek();
        if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_'))
            fail("expected an identifier");
        std::string out;
        while (pos_ < text_.size()) {
            const char d = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(d)) || d == '_') {
                out += d;
                advance();
            } else
                break;
        }
        return out;
    }

    long long positive_integer() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
        long long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000) fail("exponent too large");
            advance();
        }
        if (value == 0) fail("zero exponent is not allowed");
        return value;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col_, msg); }

    bool lookahead_keyword(std::string_view kw) {
        skip_ws();
        if (text_.substr(pos_, kw.size()) != kw) return false;
        pos_ += kw.size();
        col_ += static_cast<int>(kw.size());
        return true;
    }

    /// True if a newline occurs before the next non-space character.
    bool newline_before_token() const {
        for (std::size_t k = pos_; k < text_.size(); ++k) {
            if (text_[k] == '\n') return true;
            if (!std::isspace(static_cast<unsigned char>(text_[k]))) return false;
        }
        return false;
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

}  // namespace detail

/// Parses an ideal from text; see the grammar above. Syntax errors carry
/// line and column.
inline MonomialIdeal parse_ideal(std::string_view text) {
    detail::IdealLexer lex(text);

    std::vector<VarId> declared;
    bool have_header = false;
    if (lex.lookahead_keyword("vars:")) {
        have_header = true;
        for (;;) {
            const std::string name = lex.ident();
            declared.push_back(VarPool::intern(name));
            if (lex.newline_before_token()) break;
            if (lex.accept(';')) break;
            if (lex.accept(',')) continue;
            if (lex.eof()) lex.fail("expected generators after the vars: header");
            lex.fail("expected ',' or ';' in the vars: header");
        }
    }

    std::vector<Monomial> gens;
    std::vector<VarId> order = declared;
    auto var_known = [&](VarId v) {
        return std::find(order.begin(), order.end(), v) != order.end();
    };

    if (lex.eof()) lex.fail("no generators given");
    do {
        std::vector<Monomial::Factor> factors;
        for (;;) {
            const std::string name = lex.ident();
            const VarId v = VarPool::intern(name);
            if (!var_known(v)) {
                if (have_header) lex.fail("unknown variable '" + name + "'");
                order.push_back(v);
            }
            long long e = 1;
            if (lex.accept('^')) e = lex.positive_integer();
            factors.emplace_back(v, static_cast<int>(e));
            if (!lex.accept('*')) break;
        }
        gens.push_back(Monomial::make(std::move(factors)));
    } while (lex.accept(','));
    if (!lex.eof()) lex.fail("unexpected trailing input");

    return MonomialIdeal::make(std::move(order), std::move(gens));
}

/// Renders an ideal in the input grammar, including the vars: header, so
/// that parsing the output reproduces the ideal exactly.
inline std::string format_ideal(const MonomialIdeal& I, bool with_header = true) {
    std::string out;
    if (with_header) {
        out += "vars: ";
        for (std::size_t k = 0; k < I.vars().size(); ++k) {
            if (k) out += ", ";
            out += VarPool::name(I.vars()[k]);
        }
        out += "; ";
    }
    out += I.str();
    return out;
}

}  // namespace monores
