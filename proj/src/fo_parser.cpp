#include "gorder/fo/parser.hpp"

#include <cctype>
#include <variant>
#include <vector>

namespace gorder::fo {

namespace {

enum class Tok {
    End, Ident, Int,
    LParen, RParen, LBracket, RBracket, Comma, Dot, Colon, Bar,
    Amp, Bang, Arrow, DArrow,
    Plus, Minus, Star, Slash,
    Eq, Neq, Lt, Le, Gt, Ge,
    LeqS, LeqI, LeqM, LtS, LtI, LtM, NLeqS, NLeqI, NLeqM,
    CovS, CovSE, CovSV, CovI, CovM,
    KwForall, KwExists, KwIn, KwCup,
};

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

struct Lexer {
    const std::string& src;
    std::size_t pos = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& s) : src(s) {}

    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, line, col); }

    char peek(std::size_t ahead = 0) const { return pos + ahead < src.size() ? src[pos + ahead] : '\0'; }

    void advance(std::size_t k = 1) {
        for (std::size_t i = 0; i < k && pos < src.size(); ++i, ++pos) {
            if (src[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    }

    Token next() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) advance();
        Token t{Tok::End, "", line, col};
        if (pos >= src.size()) return t;
        char c = peek();
        auto punct = [&](Tok k, std::size_t len) {
            t.kind = k;
            t.text = src.substr(pos, len);
            advance(len);
            return t;
        };
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < src.size() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) advance();
            t.text = src.substr(start, pos - start);
            if (t.text == "forall") t.kind = Tok::KwForall;
            else if (t.text == "exists") t.kind = Tok::KwExists;
            else if (t.text == "in") t.kind = Tok::KwIn;
            else if (t.text == "cup") t.kind = Tok::KwCup;
            else t.kind = Tok::Ident;
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(peek()))) advance();
            t.kind = Tok::Int;
            t.text = src.substr(start, pos - start);
            return t;
        }
        switch (c) {
            case '(': return punct(Tok::LParen, 1);
            case ')': return punct(Tok::RParen, 1);
            case '[': return punct(Tok::LBracket, 1);
            case ']': return punct(Tok::RBracket, 1);
            case ',': return punct(Tok::Comma, 1);
            case '.': return punct(Tok::Dot, 1);
            case ':': return punct(Tok::Colon, 1);
            case '|': return punct(Tok::Bar, 1);
            case '&': return punct(Tok::Amp, 1);
            case '+': return punct(Tok::Plus, 1);
            case '*': return punct(Tok::Star, 1);
            case '/': return punct(Tok::Slash, 1);
            case '=': return punct(Tok::Eq, 1);
            case '>':
                return peek(1) == '=' ? punct(Tok::Ge, 2) : punct(Tok::Gt, 1);
            case '-':
                if (peek(1) == '>') return punct(Tok::Arrow, 2);
                return punct(Tok::Minus, 1);
            case '!':
                if (peek(1) == '=') return punct(Tok::Neq, 2);
                if (peek(1) == '<' && peek(2) == '=') {
                    char k = peek(3);
                    if (k == 's') return punct(Tok::NLeqS, 4);
                    if (k == 'i') return punct(Tok::NLeqI, 4);
                    if (k == 'm') return punct(Tok::NLeqM, 4);
                }
                return punct(Tok::Bang, 1);
            case '<': {
                if (peek(1) == '-' && peek(2) == '>') return punct(Tok::DArrow, 3);
                if (peek(1) == '=') {
                    char k = peek(2);
                    if ((k == 's' || k == 'i' || k == 'm') && !std::isalnum(static_cast<unsigned char>(peek(3))))
                        return punct(k == 's' ? Tok::LeqS : k == 'i' ? Tok::LeqI : Tok::LeqM, 3);
                    return punct(Tok::Le, 2);
                }
                if (peek(1) == '.') {
                    if (peek(2) == 's' && peek(3) == 'e' && !std::isalnum(static_cast<unsigned char>(peek(4))))
                        return punct(Tok::CovSE, 4);
                    if (peek(2) == 's' && peek(3) == 'v' && !std::isalnum(static_cast<unsigned char>(peek(4))))
                        return punct(Tok::CovSV, 4);
                    char k = peek(2);
                    if ((k == 's' || k == 'i' || k == 'm') && !std::isalnum(static_cast<unsigned char>(peek(3))))
                        return punct(k == 's' ? Tok::CovS : k == 'i' ? Tok::CovI : Tok::CovM, 3);
                    fail("bad cover operator");
                }
                {
                    char k = peek(1);
                    if ((k == 's' || k == 'i' || k == 'm') && !std::isalnum(static_cast<unsigned char>(peek(2))))
                        return punct(k == 's' ? Tok::LtS : k == 'i' ? Tok::LtI : Tok::LtM, 2);
                }
                return punct(Tok::Lt, 1);
            }
            default:
                fail(std::string("unexpected character '") + c + "'");
        }
    }
};

using Operand = std::variant<TermPtr, ArithPtr>;

struct Parser {
    std::vector<Token> toks;
    std::size_t idx = 0;

    explicit Parser(const std::string& text) {
        Lexer lex(text);
        for (;;) {
            Token t = lex.next();
            bool end = t.kind == Tok::End;
            toks.push_back(std::move(t));
            if (end) break;
        }
    }

    const Token& peek(std::size_t ahead = 0) const {
        return toks[std::min(idx + ahead, toks.size() - 1)];
    }
    Token take() { return toks[std::min(idx++, toks.size() - 1)]; }
    bool at(Tok k) const { return peek().kind == k; }
    Token expect(Tok k, const std::string& what) {
        if (!at(k)) fail("expected " + what);
        return take();
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg + " (got '" + (peek().text.empty() ? "<end>" : peek().text) + "')",
                          peek().line, peek().col);
    }

    // --- operands ---

    ArithPtr to_arith(Operand op) {
        if (std::holds_alternative<ArithPtr>(op)) return std::get<ArithPtr>(op);
        return ArithExpr::card(std::get<TermPtr>(op));
    }

    TermPtr to_term(Operand op) {
        if (std::holds_alternative<TermPtr>(op)) return std::get<TermPtr>(op);
        fail("expected a graph term, found an arithmetic expression");
    }

    TermPtr parse_base_term() {
        Token t = expect(Tok::Ident, "a graph term");
        if (at(Tok::LBracket)) {
            take();
            ArithPtr a = parse_arith();
            if (at(Tok::Comma)) {
                take();
                ArithPtr b = parse_arith();
                expect(Tok::RBracket, "']'");
                if (t.text != "CP4C" && t.text != "PCS") fail("unknown two-index gadget '" + t.text + "'");
                return GraphTerm::gadget(t.text, std::move(a), std::move(b));
            }
            expect(Tok::RBracket, "']'");
            auto fam = named_family_from_string(t.text);
            if (!fam) fail("unknown indexed family '" + t.text + "'");
            return GraphTerm::indexed(*fam, std::move(a));
        }
        if (lookup_constant(t.text)) return GraphTerm::constant(t.text);
        return GraphTerm::var(t.text);
    }

    TermPtr parse_term() {
        TermPtr t = parse_base_term();
        while (at(Tok::KwCup)) {
            take();
            t = GraphTerm::cup(std::move(t), parse_base_term());
        }
        return t;
    }

    Operand parse_primary_operand() {
        if (at(Tok::Int)) return ArithExpr::constant(Natural(take().text));
        if (at(Tok::Bar)) {
            take();
            if (at(Tok::Bar)) {
                take();
                TermPtr t = parse_term();
                expect(Tok::Bar, "'||'");
                expect(Tok::Bar, "'||'");
                return ArithExpr::size(std::move(t));
            }
            TermPtr t = parse_term();
            expect(Tok::Bar, "'|'");
            return ArithExpr::card(std::move(t));
        }
        if (at(Tok::LParen)) {  // parenthesised sub-operand
            take();
            Operand inner = parse_operand();
            expect(Tok::RParen, "')'");
            return inner;
        }
        return parse_term();
    }

    Operand parse_mul_operand() {
        Operand lhs = parse_primary_operand();
        while (at(Tok::Star) || at(Tok::Slash)) {
            auto k = take().kind == Tok::Star ? ArithExpr::Kind::Mul : ArithExpr::Kind::Div;
            Operand rhs = parse_primary_operand();
            lhs = ArithExpr::binary(k, to_arith(std::move(lhs)), to_arith(std::move(rhs)));
        }
        return lhs;
    }

    Operand parse_operand() {
        Operand lhs = parse_mul_operand();
        while (at(Tok::Plus) || at(Tok::Minus)) {
            auto k = take().kind == Tok::Plus ? ArithExpr::Kind::Add : ArithExpr::Kind::Sub;
            Operand rhs = parse_mul_operand();
            lhs = ArithExpr::binary(k, to_arith(std::move(lhs)), to_arith(std::move(rhs)));
        }
        return lhs;
    }

    ArithPtr parse_arith() { return to_arith(parse_operand()); }

    // --- formulas ---

    FormulaPtr parse_atom() {
        if (at(Tok::LParen)) {
            // Could be a parenthesised subformula or a parenthesised term
            // starting a relational atom; try the formula reading first.
            std::size_t save = idx;
            try {
                take();
                FormulaPtr f = parse_iff();
                expect(Tok::RParen, "')'");
                return f;
            } catch (const parse_error&) {
                idx = save;
            }
        }
        // predicate call?
        if (at(Tok::Ident) && peek(1).kind == Tok::LParen && !lookup_constant(peek().text)) {
            std::string name = take().text;
            take();  // (
            std::vector<TermPtr> args;
            if (!at(Tok::RParen)) {
                args.push_back(parse_term());
                while (at(Tok::Comma)) {
                    take();
                    args.push_back(parse_term());
                }
            }
            expect(Tok::RParen, "')'");
            return Formula::make_call(std::move(name), std::move(args));
        }
        Operand lhs = parse_operand();
        Token op = take();
        switch (op.kind) {
            case Tok::LeqS: return Formula::make_rel(GraphRel::LeqS, to_term(lhs), parse_term());
            case Tok::LeqI: return Formula::make_rel(GraphRel::LeqI, to_term(lhs), parse_term());
            case Tok::LeqM: return Formula::make_rel(GraphRel::LeqM, to_term(lhs), parse_term());
            case Tok::LtS: return Formula::make_rel(GraphRel::LtS, to_term(lhs), parse_term());
            case Tok::LtI: return Formula::make_rel(GraphRel::LtI, to_term(lhs), parse_term());
            case Tok::LtM: return Formula::make_rel(GraphRel::LtM, to_term(lhs), parse_term());
            case Tok::NLeqS: return Formula::make_not(Formula::make_rel(GraphRel::LeqS, to_term(lhs), parse_term()));
            case Tok::NLeqI: return Formula::make_not(Formula::make_rel(GraphRel::LeqI, to_term(lhs), parse_term()));
            case Tok::NLeqM: return Formula::make_not(Formula::make_rel(GraphRel::LeqM, to_term(lhs), parse_term()));
            case Tok::CovS: return Formula::make_rel(GraphRel::CovS, to_term(lhs), parse_term());
            case Tok::CovSE: return Formula::make_rel(GraphRel::CovSE, to_term(lhs), parse_term());
            case Tok::CovSV: return Formula::make_rel(GraphRel::CovSV, to_term(lhs), parse_term());
            case Tok::CovI: return Formula::make_rel(GraphRel::CovI, to_term(lhs), parse_term());
            case Tok::CovM: return Formula::make_rel(GraphRel::CovM, to_term(lhs), parse_term());
            case Tok::Lt: return Formula::make_cmp(ArithCmp::Lt, to_arith(lhs), parse_arith());
            case Tok::Le: return Formula::make_cmp(ArithCmp::Le, to_arith(lhs), parse_arith());
            case Tok::Gt: return Formula::make_cmp(ArithCmp::Gt, to_arith(lhs), parse_arith());
            case Tok::Ge: return Formula::make_cmp(ArithCmp::Ge, to_arith(lhs), parse_arith());
            case Tok::Eq:
            case Tok::Neq: {
                Operand rhs = parse_operand();
                bool graph_eq = std::holds_alternative<TermPtr>(lhs) && std::holds_alternative<TermPtr>(rhs);
                if (graph_eq)
                    return Formula::make_rel(op.kind == Tok::Eq ? GraphRel::Eq : GraphRel::Neq,
                                             to_term(lhs), to_term(rhs));
                return Formula::make_cmp(op.kind == Tok::Eq ? ArithCmp::Eq : ArithCmp::Neq,
                                         to_arith(lhs), to_arith(rhs));
            }
            default:
                --idx;
                fail("expected a relation");
        }
    }

    FormulaPtr parse_unary() {
        if (at(Tok::Bang)) {
            take();
            return Formula::make_not(parse_unary());
        }
        if (at(Tok::KwForall) || at(Tok::KwExists)) {
            bool forall = take().kind == Tok::KwForall;
            std::string var = expect(Tok::Ident, "a variable").text;
            bool in_n = false;
            if (at(Tok::KwIn)) {
                take();
                Token n = expect(Tok::Ident, "'N'");
                if (n.text != "N") fail("expected 'N' after 'in'");
                in_n = true;
            }
            ArithPtr bound;
            if (at(Tok::Colon)) {
                take();
                bound = parse_arith();
            }
            expect(Tok::Dot, "'.'");
            FormulaPtr body = parse_iff();
            return Formula::make_quant(forall, std::move(var), in_n, std::move(bound), std::move(body));
        }
        return parse_atom();
    }

    FormulaPtr parse_and() {
        FormulaPtr f = parse_unary();
        while (at(Tok::Amp)) {
            take();
            f = Formula::make_binary(Formula::Kind::And, std::move(f), parse_unary());
        }
        return f;
    }

    FormulaPtr parse_or() {
        FormulaPtr f = parse_and();
        while (at(Tok::Bar)) {
            take();
            f = Formula::make_binary(Formula::Kind::Or, std::move(f), parse_and());
        }
        return f;
    }

    FormulaPtr parse_implies() {
        FormulaPtr f = parse_or();
        if (at(Tok::Arrow)) {
            take();
            return Formula::make_binary(Formula::Kind::Implies, std::move(f), parse_implies());
        }
        return f;
    }

    FormulaPtr parse_iff() {
        FormulaPtr f = parse_implies();
        while (at(Tok::DArrow)) {
            take();
            f = Formula::make_binary(Formula::Kind::Iff, std::move(f), parse_implies());
        }
        return f;
    }

    FormulaPtr parse_all() {
        FormulaPtr f = parse_iff();
        if (!at(Tok::End)) fail("trailing input");
        return f;
    }
};

}  // namespace

FormulaPtr parse_formula(const std::string& text) { return Parser(text).parse_all(); }

}  // namespace gorder::fo
