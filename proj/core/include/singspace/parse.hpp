#pragma once

#include <cctype>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "singspace/polynomial.hpp"

namespace singspace {

namespace detail {

enum class TokKind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
    TokKind kind;
    std::string_view text;
    std::size_t offset;
};

inline std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({TokKind::Number, text.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
                ++j;
            }
            out.push_back({TokKind::Ident, text.substr(i, j - i), i});
            i = j;
            continue;
        }
        TokKind kind;
        switch (c) {
            case '+': kind = TokKind::Plus; break;
            case '-': kind = TokKind::Minus; break;
            case '*': kind = TokKind::Star; break;
            case '^': kind = TokKind::Caret; break;
            case '(': kind = TokKind::LParen; break;
            case ')': kind = TokKind::RParen; break;
            default:
                throw Error(Errc::SyntaxError,
                            "unexpected character '" + std::string(1, c) + "' at byte " +
                                std::to_string(i),
                            i);
        }
        out.push_back({kind, text.substr(i, 1), i});
        ++i;
    }
    out.push_back({TokKind::End, {}, text.size()});
    return out;
}

// Recursive-descent parser over the token stream. Grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' number)?
//   base   := number | variable | '(' expr ')'
template <Field F>
class Parser {
  public:
    Parser(std::vector<Token> toks, std::span<const std::string> variables, const F& field)
        : toks_(std::move(toks)), variables_(variables), field_(field) {}

    Polynomial<F> run() {
        Polynomial<F> p = expr();
        expect(TokKind::End, "end of input");
        return p;
    }

  private:
    const Token& peek() const { return toks_[pos_]; }
    Token next() { return toks_[pos_++]; }

    [[noreturn]] void fail(const Token& tok, const std::string& wanted) {
        std::string got = tok.kind == TokKind::End ? "end of input" : "'" + std::string(tok.text) + "'";
        throw Error(Errc::SyntaxError,
                    "expected " + wanted + " but found " + got + " at byte " +
                        std::to_string(tok.offset),
                    tok.offset);
    }

    void expect(TokKind kind, const std::string& wanted) {
        if (peek().kind != kind) fail(peek(), wanted);
        ++pos_;
    }

    int nvars() const { return static_cast<int>(variables_.size()); }

    Polynomial<F> expr() {
        bool negate = false;
        if (peek().kind == TokKind::Minus) {
            next();
            negate = true;
        }
        Polynomial<F> acc = term();
        if (negate) acc = neg(field_, acc);
        while (peek().kind == TokKind::Plus || peek().kind == TokKind::Minus) {
            bool minus = next().kind == TokKind::Minus;
            Polynomial<F> rhs = term();
            acc = minus ? sub(field_, acc, rhs) : add(field_, acc, rhs);
        }
        return acc;
    }

    Polynomial<F> term() {
        Polynomial<F> acc = factor();
        while (peek().kind == TokKind::Star) {
            next();
            acc = multiply(field_, acc, factor());
        }
        return acc;
    }

    Polynomial<F> factor() {
        Polynomial<F> b = base();
        if (peek().kind == TokKind::Caret) {
            next();
            if (peek().kind != TokKind::Number) fail(peek(), "integer exponent");
            Token tok = next();
            if (tok.text.size() > 4) {
                throw Error(Errc::SyntaxError,
                            "exponent too large at byte " + std::to_string(tok.offset), tok.offset);
            }
            int e = 0;
            for (char c : tok.text) e = e * 10 + (c - '0');
            b = power(field_, b, e);
        }
        return b;
    }

    Polynomial<F> base() {
        const Token& tok = peek();
        switch (tok.kind) {
            case TokKind::Number: {
                next();
                Polynomial<F> p(nvars());
                p.add_term(field_, Monomial::unit(nvars()), field_.from_decimal(tok.text));
                return p;
            }
            case TokKind::Ident: {
                next();
                for (int j = 0; j < nvars(); ++j) {
                    if (variables_[static_cast<std::size_t>(j)] == tok.text) {
                        std::vector<int> exps(static_cast<std::size_t>(nvars()), 0);
                        exps[static_cast<std::size_t>(j)] = 1;
                        return monomial_poly(field_, Monomial(std::move(exps)), field_.one());
                    }
                }
                throw Error(Errc::UnknownVariable,
                            "unknown variable '" + std::string(tok.text) + "' at byte " +
                                std::to_string(tok.offset),
                            tok.offset);
            }
            case TokKind::LParen: {
                next();
                Polynomial<F> p = expr();
                expect(TokKind::RParen, "')'");
                return p;
            }
            default:
                fail(tok, "number, variable, or '('");
        }
    }

    std::vector<Token> toks_;
    std::span<const std::string> variables_;
    const F& field_;
    std::size_t pos_ = 0;
};

}  // namespace detail

// Parses the textual polynomial grammar (integer literals, declared
// variables, +, -, *, ^, parentheses) with coefficients reduced into
// the field. Satisfies parse(render(P)) = P for every polynomial P.
template <Field F>
Polynomial<F> parse_polynomial(std::string_view text, std::span<const std::string> variables,
                               const F& field) {
    detail::Parser<F> parser(detail::tokenize(text), variables, field);
    return parser.run();
}

}  // namespace singspace
