// Copyright (c) intdec contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Hand-written lexer and recursive-descent parser for formula text.
#include <array>
#include <cctype>
#include <optional>
#include <set>
#include <utility>

#include "intdec/error.hpp"
#include "intdec/formula.hpp"

namespace intdec::frontend {

namespace {

enum class Tok { kIdent, kInteger, kSymbol, kEnd };

struct Token {
    Tok kind;
    std::string text;
    SourcePos pos;
};

// Multi-byte spellings first so that "<->" wins over "<=" and "<".
constexpr std::array<std::pair<std::string_view, std::string_view>, 28> kSymbols{{
    {"<->", "<->"}, {"<=", "<="}, {">=", ">="}, {"!=", "!="}, {"->", "->"}, {"&&", "and"}, {"||", "or"},
    {"≤", "<="}, {"≥", ">="}, {"≠", "!="}, {"∧", "and"}, {"∨", "or"},
    {"¬", "not"}, {"→", "->"}, {"↔", "<->"}, {"∃", "exists"}, {"∀", "forall"},
    {"<", "<"}, {">", ">"}, {"=", "="}, {"(", "("}, {")", ")"}, {":", ":"}, {".", "."}, {",", ","},
    {"+", "+"}, {"-", "-"}, {"*", "*"},
}};

const std::set<std::string_view> kKeywords{"exists", "forall", "real", "int",   "not",     "and",
                                           "or",     "true",   "false", "iff", "implies"};

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t column = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t count) {
        for (std::size_t k = 0; k < count; ++k) {
            // continuation bytes of UTF-8 do not start a column
            if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) ++column;
            if (text[i] == '\n') {
                ++line;
                column = 1;
            }
            ++i;
        }
    };
    while (i < text.size()) {
        const char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            advance(1);
            continue;
        }
        if (ch == '#') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        const SourcePos pos{line, column};
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' || text[j] == '\'')) {
                ++j;
            }
            out.push_back({Tok::kIdent, std::string(text.substr(i, j - i)), pos});
            advance(j - i);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Tok::kInteger, std::string(text.substr(i, j - i)), pos});
            advance(j - i);
            continue;
        }
        if (ch == '/') {
            out.push_back({Tok::kSymbol, "/", pos});
            advance(1);
            continue;
        }
        bool matched = false;
        for (const auto& [spelling, meaning] : kSymbols) {
            if (text.substr(i).starts_with(spelling)) {
                const bool word = std::isalpha(static_cast<unsigned char>(meaning[0]));
                out.push_back({word ? Tok::kIdent : Tok::kSymbol, std::string(meaning), pos});
                advance(spelling.size());
                matched = true;
                break;
            }
        }
        if (!matched) {
            if (ch == '!') {
                out.push_back({Tok::kIdent, "not", pos});
                advance(1);
                continue;
            }
            throw ParseError(std::string("unexpected character '") + ch + "'", line, column);
        }
    }
    out.push_back({Tok::kEnd, "", {line, column}});
    return out;
}

struct LinearTerm {
    std::map<std::string, Rational> coeffs;
    Rational constant = 0;

    bool is_constant() const { return coeffs.empty(); }

    LinearTerm& add(const LinearTerm& other, const Rational& scale) {
        for (const auto& [name, c] : other.coeffs) {
            Rational& slot = coeffs[name];
            slot += scale * c;
            if (slot == 0) coeffs.erase(name);
        }
        constant += scale * other.constant;
        return *this;
    }

    LinearTerm& scale(const Rational& factor) {
        if (factor == 0) {
            coeffs.clear();
        } else {
            for (auto& [name, c] : coeffs) c *= factor;
        }
        constant *= factor;
        return *this;
    }
};

enum class SurfaceRelation { kLe, kLt, kEq, kGe, kGt, kNe };

class Parser {
  public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    FormulaPtr parse_all() {
        auto f = formula();
        if (peek().kind != Tok::kEnd) fail("expected end of input");
        return f;
    }

  private:
    const Token& peek(std::size_t ahead = 0) const {
        return tokens_[std::min(index_ + ahead, tokens_.size() - 1)];
    }

    bool is_symbol(std::string_view s, std::size_t ahead = 0) const {
        return peek(ahead).kind == Tok::kSymbol && peek(ahead).text == s;
    }

    bool is_word(std::string_view s) const { return peek().kind == Tok::kIdent && peek().text == s; }

    bool accept_symbol(std::string_view s) {
        if (!is_symbol(s)) return false;
        ++index_;
        return true;
    }

    bool accept_word(std::string_view s) {
        if (!is_word(s)) return false;
        ++index_;
        return true;
    }

    [[noreturn]] void fail(const std::string& message) const {
        const Token& t = peek();
        std::string found = t.kind == Tok::kEnd ? "end of input" : "'" + t.text + "'";
        throw ParseError(message + ", found " + found, t.pos.line, t.pos.column);
    }

    void expect_symbol(std::string_view s) {
        if (!accept_symbol(s)) fail("expected '" + std::string(s) + "'");
    }

    static FormulaPtr at(FormulaPtr f, SourcePos pos) {
        auto g = std::make_shared<Formula>(*f);
        g->pos = pos;
        return g;
    }

    FormulaPtr formula() {
        if (is_word("exists") || is_word("forall")) return quantified();
        return iff();
    }

    FormulaPtr quantified() {
        const SourcePos pos = peek().pos;
        const bool exists = peek().text == "exists";
        ++index_;
        std::vector<std::pair<std::string, Sort>> bound;
        do {
            if (peek().kind != Tok::kIdent || kKeywords.contains(peek().text)) fail("expected a variable name");
            std::string name = peek().text;
            ++index_;
            Sort sort = Sort::kReal;
            if (accept_symbol(":")) {
                if (accept_word("int")) {
                    sort = Sort::kInt;
                } else if (!accept_word("real")) {
                    fail("expected 'int' or 'real'");
                }
            }
            bound.emplace_back(std::move(name), sort);
        } while (accept_symbol(","));
        expect_symbol(".");
        FormulaPtr body = formula();
        for (auto it = bound.rbegin(); it != bound.rend(); ++it) {
            body = exists ? make_exists(it->first, it->second, body) : make_forall(it->first, it->second, body);
            body = at(body, pos);
        }
        return body;
    }

    FormulaPtr iff() {
        FormulaPtr left = implication();
        while (true) {
            const SourcePos pos = peek().pos;
            if (!accept_symbol("<->") && !accept_word("iff")) return left;
            left = at(make_iff(left, implication()), pos);
        }
    }

    FormulaPtr implication() {
        FormulaPtr left = disjunction();
        const SourcePos pos = peek().pos;
        if (accept_symbol("->") || accept_word("implies")) return at(make_implies(left, implication()), pos);
        return left;
    }

    FormulaPtr disjunction() {
        FormulaPtr left = conjunction();
        while (true) {
            const SourcePos pos = peek().pos;
            if (!accept_word("or")) return left;
            left = at(make_or(left, conjunction()), pos);
        }
    }

    FormulaPtr conjunction() {
        FormulaPtr left = negation();
        while (true) {
            const SourcePos pos = peek().pos;
            if (!accept_word("and")) return left;
            left = at(make_and(left, negation()), pos);
        }
    }

    FormulaPtr negation() {
        const SourcePos pos = peek().pos;
        if (accept_word("not")) return at(make_not(negation()), pos);
        if (accept_word("true")) return at(make_true(), pos);
        if (accept_word("false")) return at(make_false(), pos);
        if (is_word("exists") || is_word("forall")) return quantified();
        if (is_symbol("(")) {
            // "(" opens either a subformula or a parenthesized term; try the
            // subformula first and report whichever attempt got further.
            const std::size_t start = index_;
            std::optional<ParseError> first;
            try {
                ++index_;
                FormulaPtr inner = formula();
                expect_symbol(")");
                return inner;
            } catch (const ParseError& e) {
                first = e;
            }
            index_ = start;
            try {
                return atom();
            } catch (const ParseError& e) {
                if (std::pair(e.line(), e.column()) >= std::pair(first->line(), first->column())) throw;
                throw *first;
            }
        }
        return atom();
    }

    std::optional<SurfaceRelation> relation() {
        static const std::array<std::pair<std::string_view, SurfaceRelation>, 6> table{{
            {"<=", SurfaceRelation::kLe},
            {"<", SurfaceRelation::kLt},
            {"=", SurfaceRelation::kEq},
            {">=", SurfaceRelation::kGe},
            {">", SurfaceRelation::kGt},
            {"!=", SurfaceRelation::kNe},
        }};
        for (const auto& [spelling, rel] : table) {
            if (accept_symbol(spelling)) return rel;
        }
        return std::nullopt;
    }

    FormulaPtr atom() {
        const SourcePos pos = peek().pos;
        LinearTerm left = term();
        auto rel = relation();
        if (!rel) fail("expected a comparison operator");
        FormulaPtr result;
        while (rel) {
            LinearTerm right = term();
            FormulaPtr link = at(comparison(left, *rel, right), pos);
            result = result ? at(make_and(result, link), pos) : link;
            left = std::move(right);
            rel = relation();
        }
        return result;
    }

    // left REL right as normalized atoms over integer coefficients.
    static FormulaPtr comparison(const LinearTerm& left, SurfaceRelation rel, const LinearTerm& right) {
        LinearTerm diff = left;
        diff.add(right, Rational(-1));
        // clear denominators
        Integer scale = diff.constant.get_den();
        for (const auto& [name, c] : diff.coeffs) scale = lcm(scale, Integer(c.get_den()));
        auto build = [&](int sign, Relation r) {
            Atom a;
            for (const auto& [name, c] : diff.coeffs) {
                Rational v = c * Rational(scale) * sign;
                a.coeffs.emplace(name, v.get_num());
            }
            Rational k = -diff.constant * Rational(scale) * sign;
            a.constant = k.get_num();
            a.relation = r;
            return make_atom(std::move(a));
        };
        switch (rel) {
        case SurfaceRelation::kLe: return build(1, Relation::kLe);
        case SurfaceRelation::kLt: return build(1, Relation::kLt);
        case SurfaceRelation::kEq: return build(1, Relation::kEq);
        case SurfaceRelation::kGe: return build(-1, Relation::kLe);
        case SurfaceRelation::kGt: return build(-1, Relation::kLt);
        case SurfaceRelation::kNe: return make_or(build(1, Relation::kLt), build(-1, Relation::kLt));
        }
        return nullptr;
    }

    LinearTerm term() {
        LinearTerm result;
        Rational sign = 1;
        if (accept_symbol("-")) {
            sign = -1;
        } else {
            accept_symbol("+");
        }
        result.add(product(), sign);
        while (true) {
            if (accept_symbol("+")) {
                result.add(product(), Rational(1));
            } else if (accept_symbol("-")) {
                result.add(product(), Rational(-1));
            } else {
                return result;
            }
        }
    }

    LinearTerm product() {
        LinearTerm result = factor();
        while (true) {
            const SourcePos pos = peek().pos;
            if (accept_symbol("*")) {
                result = multiply(result, factor(), pos);
            } else if (accept_symbol("/")) {
                LinearTerm divisor = factor();
                if (!divisor.is_constant()) throw ParseError("division by a variable", pos.line, pos.column);
                if (divisor.constant == 0) throw ParseError("division by zero", pos.line, pos.column);
                result.scale(1 / divisor.constant);
            } else if (result.is_constant() && peek().kind == Tok::kIdent && !kKeywords.contains(peek().text)) {
                // juxtaposition such as "2x"
                result = multiply(result, factor(), pos);
            } else {
                return result;
            }
        }
    }

    static LinearTerm multiply(LinearTerm a, LinearTerm b, SourcePos pos) {
        if (a.is_constant()) return b.scale(a.constant);
        if (b.is_constant()) return a.scale(b.constant);
        throw ParseError("product of two variables is not linear", pos.line, pos.column);
    }

    LinearTerm factor() {
        const Token& t = peek();
        if (accept_symbol("-")) return factor().scale(Rational(-1));
        if (t.kind == Tok::kInteger) {
            LinearTerm c;
            c.constant = Rational(Integer(t.text));
            ++index_;
            return c;
        }
        if (t.kind == Tok::kIdent && !kKeywords.contains(t.text)) {
            LinearTerm v;
            v.coeffs.emplace(t.text, Rational(1));
            ++index_;
            return v;
        }
        if (accept_symbol("(")) {
            LinearTerm inner = term();
            expect_symbol(")");
            return inner;
        }
        fail("expected a number, a variable or '('");
    }

    std::vector<Token> tokens_;
    std::size_t index_ = 0;
};

}  // namespace

FormulaPtr parse(std::string_view text) { return Parser(lex(text)).parse_all(); }

}  // namespace intdec::frontend
