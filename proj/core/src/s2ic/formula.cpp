// Copyright 2026 The dvworkbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dv/s2ic/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "dv/error.hpp"

namespace dv::s2ic {

Formula Formula::var(std::string name) { return {Connective::variable, std::move(name), {}}; }
Formula Formula::bottom() { return {Connective::bottom, {}, {}}; }
Formula Formula::top() { return {Connective::top, {}, {}}; }
Formula Formula::neg(Formula a) { return {Connective::negation, {}, {std::move(a)}}; }
Formula Formula::conj(Formula a, Formula b) { return {Connective::conjunction, {}, {std::move(a), std::move(b)}}; }
Formula Formula::disj(Formula a, Formula b) { return {Connective::disjunction, {}, {std::move(a), std::move(b)}}; }
Formula Formula::imp(Formula a, Formula b) { return {Connective::implication, {}, {std::move(a), std::move(b)}}; }
Formula Formula::strict(Formula a, Formula b) { return {Connective::strict, {}, {std::move(a), std::move(b)}}; }

namespace {

enum class Tok { ident, zero, one, lparen, rparen, tilde, amp, bar, arrow, strict_arrow, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::string describe(const Token& t) { return t.kind == Tok::end ? "end of input" : "'" + t.text + "'"; }

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    while (i < s.size()) {
        const char c = s[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        const std::size_t l = line, k = col;
        auto simple = [&](Tok kind, std::size_t n) {
            out.push_back({kind, std::string(s.substr(i, n)), l, k});
            advance(n);
        };
        if (c >= 'a' && c <= 'z') {
            std::size_t j = i + 1;
            while (j < s.size() && ((s[j] >= 'a' && s[j] <= 'z') || (s[j] >= '0' && s[j] <= '9') || s[j] == '_')) ++j;
            simple(Tok::ident, j - i);
        } else if (c == '0' || c == '1') {
            if (i + 1 < s.size() && std::isalnum(static_cast<unsigned char>(s[i + 1]))) {
                throw ParseError("unknown token starting with '" + std::string(1, c) + "'", l, k);
            }
            simple(c == '0' ? Tok::zero : Tok::one, 1);
        } else if (c == '(') {
            simple(Tok::lparen, 1);
        } else if (c == ')') {
            simple(Tok::rparen, 1);
        } else if (c == '~') {
            simple(Tok::tilde, 1);
        } else if (c == '&') {
            simple(Tok::amp, 1);
        } else if (c == '|') {
            simple(Tok::bar, 1);
        } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
            simple(Tok::arrow, 2);
        } else if (c == '=' && i + 1 < s.size() && s[i + 1] == '>') {
            simple(Tok::strict_arrow, 2);
        } else {
            throw ParseError("unknown token '" + std::string(1, c) + "'", l, k);
        }
    }
    out.push_back({Tok::end, {}, line, col});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    Formula run() {
        Formula f = strict();
        if (peek().kind != Tok::end) fail("expected end of input");
        return f;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    bool accept(Tok kind) {
        if (peek().kind != kind) return false;
        ++pos_;
        return true;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + ", found " + describe(peek()), peek().line, peek().column);
    }

    Formula strict() {
        Formula lhs = implication();
        if (accept(Tok::strict_arrow)) return Formula::strict(std::move(lhs), strict());
        return lhs;
    }
    Formula implication() {
        Formula lhs = disjunction();
        if (accept(Tok::arrow)) return Formula::imp(std::move(lhs), implication());
        return lhs;
    }
    Formula disjunction() {
        Formula f = conjunction();
        while (accept(Tok::bar)) f = Formula::disj(std::move(f), conjunction());
        return f;
    }
    Formula conjunction() {
        Formula f = unary();
        while (accept(Tok::amp)) f = Formula::conj(std::move(f), unary());
        return f;
    }
    Formula unary() {
        if (accept(Tok::tilde)) return Formula::neg(unary());
        const Token& t = peek();
        switch (t.kind) {
            case Tok::ident:
                ++pos_;
                return Formula::var(t.text);
            case Tok::zero:
                ++pos_;
                return Formula::bottom();
            case Tok::one:
                ++pos_;
                return Formula::top();
            case Tok::lparen: {
                ++pos_;
                Formula f = strict();
                if (!accept(Tok::rparen)) fail("expected ')'");
                return f;
            }
            default:
                fail("expected a formula");
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

int level(const Formula& f) {
    switch (f.op) {
        case Connective::strict:
            return 1;
        case Connective::implication:
            return 2;
        case Connective::disjunction:
            return 3;
        case Connective::conjunction:
            return 4;
        case Connective::negation:
            return 5;
        default:
            return 6;
    }
}

void render(const Formula& f, std::string& out) {
    auto child = [&](const Formula& c, bool parens) {
        if (parens) out += '(';
        render(c, out);
        if (parens) out += ')';
    };
    const int own = level(f);
    switch (f.op) {
        case Connective::variable:
            out += f.name;
            return;
        case Connective::bottom:
            out += '0';
            return;
        case Connective::top:
            out += '1';
            return;
        case Connective::negation:
            out += '~';
            child(f.args[0], level(f.args[0]) < own);
            return;
        default:
            break;
    }
    const bool right_assoc = f.op == Connective::strict || f.op == Connective::implication;
    const char* sym = f.op == Connective::strict        ? " => "
                      : f.op == Connective::implication ? " -> "
                      : f.op == Connective::disjunction ? " | "
                                                        : " & ";
    child(f.args[0], right_assoc ? level(f.args[0]) <= own : level(f.args[0]) < own);
    out += sym;
    child(f.args[1], right_assoc ? level(f.args[1]) < own : level(f.args[1]) <= own);
}

void collect(const Formula& f, std::set<std::string>& names) {
    if (f.op == Connective::variable) names.insert(f.name);
    for (const auto& a : f.args) collect(a, names);
}

}  // namespace

Formula parse(std::string_view text) { return Parser(lex(text)).run(); }

std::string to_string(const Formula& f) {
    std::string out;
    render(f, out);
    return out;
}

std::vector<std::string> variables(const Formula& f) {
    std::set<std::string> names;
    collect(f, names);
    return {names.begin(), names.end()};
}

std::size_t size(const Formula& f) {
    std::size_t n = 1;
    for (const auto& a : f.args) n += size(a);
    return n;
}

}  // namespace dv::s2ic
