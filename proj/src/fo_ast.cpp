#include "gorder/fo/ast.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gorder::fo {

TermPtr GraphTerm::var(std::string n) {
    auto t = std::make_shared<GraphTerm>();
    t->kind = Kind::Var;
    t->name = std::move(n);
    return t;
}

TermPtr GraphTerm::constant(std::string n) {
    auto t = std::make_shared<GraphTerm>();
    t->kind = Kind::Const;
    t->name = std::move(n);
    return t;
}

TermPtr GraphTerm::indexed(NamedFamily f, ArithPtr idx) {
    auto t = std::make_shared<GraphTerm>();
    t->kind = Kind::Indexed;
    t->family = f;
    t->index = std::move(idx);
    return t;
}

TermPtr GraphTerm::gadget(std::string n, ArithPtr a, ArithPtr b) {
    auto t = std::make_shared<GraphTerm>();
    t->kind = Kind::Gadget;
    t->name = std::move(n);
    t->a = std::move(a);
    t->b = std::move(b);
    return t;
}

TermPtr GraphTerm::cup(TermPtr l, TermPtr r) {
    auto t = std::make_shared<GraphTerm>();
    t->kind = Kind::Cup;
    t->left = std::move(l);
    t->right = std::move(r);
    return t;
}

ArithPtr ArithExpr::constant(Natural v) {
    auto a = std::make_shared<ArithExpr>();
    a->kind = Kind::Const;
    a->value = std::move(v);
    return a;
}

ArithPtr ArithExpr::card(TermPtr t) {
    auto a = std::make_shared<ArithExpr>();
    a->kind = Kind::Card;
    a->term = std::move(t);
    return a;
}

ArithPtr ArithExpr::size(TermPtr t) {
    auto a = std::make_shared<ArithExpr>();
    a->kind = Kind::Size;
    a->term = std::move(t);
    return a;
}

ArithPtr ArithExpr::binary(Kind k, ArithPtr l, ArithPtr r) {
    auto a = std::make_shared<ArithExpr>();
    a->kind = k;
    a->lhs = std::move(l);
    a->rhs = std::move(r);
    return a;
}

FormulaPtr Formula::make_rel(GraphRel r, TermPtr a, TermPtr b) {
    auto f = std::make_shared<Formula>();
    f->kind = Kind::Rel;
    f->rel = r;
    f->t1 = std::move(a);
    f->t2 = std::move(b);
    return f;
}

FormulaPtr Formula::make_cmp(ArithCmp c, ArithPtr a, ArithPtr b) {
    auto f = std::make_shared<Formula>();
    f->kind = Kind::Cmp;
    f->cmp = c;
    f->a1 = std::move(a);
    f->a2 = std::move(b);
    return f;
}

FormulaPtr Formula::make_call(std::string name, std::vector<TermPtr> args) {
    auto f = std::make_shared<Formula>();
    f->kind = Kind::Call;
    f->name = std::move(name);
    f->args = std::move(args);
    return f;
}

FormulaPtr Formula::make_not(FormulaPtr g) {
    auto f = std::make_shared<Formula>();
    f->kind = Kind::Not;
    f->f1 = std::move(g);
    return f;
}

FormulaPtr Formula::make_binary(Kind k, FormulaPtr a, FormulaPtr b) {
    auto f = std::make_shared<Formula>();
    f->kind = k;
    f->f1 = std::move(a);
    f->f2 = std::move(b);
    return f;
}

FormulaPtr Formula::make_quant(bool forall, std::string var, bool in_naturals, ArithPtr bound, FormulaPtr body) {
    auto f = std::make_shared<Formula>();
    f->kind = Kind::Quant;
    f->is_forall = forall;
    f->var = std::move(var);
    f->in_naturals = in_naturals;
    f->bound = std::move(bound);
    f->body = std::move(body);
    return f;
}

namespace {

const char* rel_token(GraphRel r) {
    switch (r) {
        case GraphRel::LeqS: return "<=s";
        case GraphRel::LeqI: return "<=i";
        case GraphRel::LeqM: return "<=m";
        case GraphRel::LtS: return "<s";
        case GraphRel::LtI: return "<i";
        case GraphRel::LtM: return "<m";
        case GraphRel::Eq: return "=";
        case GraphRel::Neq: return "!=";
        case GraphRel::CovS: return "<.s";
        case GraphRel::CovSE: return "<.se";
        case GraphRel::CovSV: return "<.sv";
        case GraphRel::CovI: return "<.i";
        case GraphRel::CovM: return "<.m";
    }
    return "?";
}

const char* cmp_token(ArithCmp c) {
    switch (c) {
        case ArithCmp::Eq: return "=";
        case ArithCmp::Neq: return "!=";
        case ArithCmp::Lt: return "<";
        case ArithCmp::Le: return "<=";
        case ArithCmp::Gt: return ">";
        case ArithCmp::Ge: return ">=";
    }
    return "?";
}

const char* family_token(NamedFamily f) {
    switch (f) {
        case NamedFamily::N: return "N";
        case NamedFamily::P: return "P";
        case NamedFamily::C: return "C";
        case NamedFamily::K: return "K";
        case NamedFamily::S: return "S";
        case NamedFamily::C1: return "C1";
        case NamedFamily::C2: return "C2";
    }
    return "?";
}

void print_term(std::ostream& os, const TermPtr& t);

void print_arith(std::ostream& os, const ArithPtr& a) {
    switch (a->kind) {
        case ArithExpr::Kind::Const:
            os << a->value;
            return;
        case ArithExpr::Kind::Card:
            os << '|';
            print_term(os, a->term);
            os << '|';
            return;
        case ArithExpr::Kind::Size:
            os << "||";
            print_term(os, a->term);
            os << "||";
            return;
        case ArithExpr::Kind::Add:
        case ArithExpr::Kind::Sub:
        case ArithExpr::Kind::Mul:
        case ArithExpr::Kind::Div: {
            const char* op = a->kind == ArithExpr::Kind::Add   ? "+"
                             : a->kind == ArithExpr::Kind::Sub ? "-"
                             : a->kind == ArithExpr::Kind::Mul ? "*"
                                                               : "/";
            os << '(';
            print_arith(os, a->lhs);
            os << ' ' << op << ' ';
            print_arith(os, a->rhs);
            os << ')';
            return;
        }
    }
}

void print_term(std::ostream& os, const TermPtr& t) {
    switch (t->kind) {
        case GraphTerm::Kind::Var:
        case GraphTerm::Kind::Const:
            os << t->name;
            return;
        case GraphTerm::Kind::Indexed:
            os << family_token(t->family) << '[';
            print_arith(os, t->index);
            os << ']';
            return;
        case GraphTerm::Kind::Gadget:
            os << t->name << '[';
            print_arith(os, t->a);
            os << ", ";
            print_arith(os, t->b);
            os << ']';
            return;
        case GraphTerm::Kind::Cup:
            os << '(';
            print_term(os, t->left);
            os << " cup ";
            print_term(os, t->right);
            os << ')';
            return;
    }
}

void print_formula(std::ostream& os, const FormulaPtr& f) {
    switch (f->kind) {
        case Formula::Kind::Rel:
            print_term(os, f->t1);
            os << ' ' << rel_token(f->rel) << ' ';
            print_term(os, f->t2);
            return;
        case Formula::Kind::Cmp:
            print_arith(os, f->a1);
            os << ' ' << cmp_token(f->cmp) << ' ';
            print_arith(os, f->a2);
            return;
        case Formula::Kind::Call: {
            os << f->name << '(';
            bool first = true;
            for (const auto& a : f->args) {
                if (!first) os << ", ";
                first = false;
                print_term(os, a);
            }
            os << ')';
            return;
        }
        case Formula::Kind::Not:
            os << '!';
            os << '(';
            print_formula(os, f->f1);
            os << ')';
            return;
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
        case Formula::Kind::Iff: {
            const char* op = f->kind == Formula::Kind::And   ? "&"
                             : f->kind == Formula::Kind::Or  ? "|"
                             : f->kind == Formula::Kind::Implies ? "->"
                                                                 : "<->";
            os << '(';
            print_formula(os, f->f1);
            os << ' ' << op << ' ';
            print_formula(os, f->f2);
            os << ')';
            return;
        }
        case Formula::Kind::Quant:
            os << (f->is_forall ? "forall " : "exists ") << f->var;
            if (f->in_naturals) os << " in N";
            if (f->bound) {
                os << " : ";
                print_arith(os, f->bound);
            }
            os << " . (";
            print_formula(os, f->body);
            os << ')';
            return;
    }
}

}  // namespace

std::string print(const FormulaPtr& f) {
    std::ostringstream os;
    print_formula(os, f);
    return os.str();
}

std::string print(const TermPtr& t) {
    std::ostringstream os;
    print_term(os, t);
    return os.str();
}

std::string print(const ArithPtr& a) {
    std::ostringstream os;
    print_arith(os, a);
    return os.str();
}

bool equal(const TermPtr& a, const TermPtr& b) {
    if (!a || !b) return !a && !b;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case GraphTerm::Kind::Var:
        case GraphTerm::Kind::Const:
            return a->name == b->name;
        case GraphTerm::Kind::Indexed:
            return a->family == b->family && equal(a->index, b->index);
        case GraphTerm::Kind::Gadget:
            return a->name == b->name && equal(a->a, b->a) && equal(a->b, b->b);
        case GraphTerm::Kind::Cup:
            return equal(a->left, b->left) && equal(a->right, b->right);
    }
    return false;
}

bool equal(const ArithPtr& a, const ArithPtr& b) {
    if (!a || !b) return !a && !b;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case ArithExpr::Kind::Const:
            return a->value == b->value;
        case ArithExpr::Kind::Card:
        case ArithExpr::Kind::Size:
            return equal(a->term, b->term);
        default:
            return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
    }
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
    if (!a || !b) return !a && !b;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Formula::Kind::Rel:
            return a->rel == b->rel && equal(a->t1, b->t1) && equal(a->t2, b->t2);
        case Formula::Kind::Cmp:
            return a->cmp == b->cmp && equal(a->a1, b->a1) && equal(a->a2, b->a2);
        case Formula::Kind::Call: {
            if (a->name != b->name || a->args.size() != b->args.size()) return false;
            for (std::size_t i = 0; i < a->args.size(); ++i)
                if (!equal(a->args[i], b->args[i])) return false;
            return true;
        }
        case Formula::Kind::Not:
            return equal(a->f1, b->f1);
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
        case Formula::Kind::Iff:
            return equal(a->f1, b->f1) && equal(a->f2, b->f2);
        case Formula::Kind::Quant:
            return a->is_forall == b->is_forall && a->var == b->var && a->in_naturals == b->in_naturals &&
                   equal(a->bound, b->bound) && equal(a->body, b->body);
    }
    return false;
}

namespace {

void collect_arith_vars(const ArithPtr& a, std::vector<std::string>& out, std::vector<std::string>& bound);

void collect_term_vars(const TermPtr& t, std::vector<std::string>& out, std::vector<std::string>& bound) {
    if (!t) return;
    switch (t->kind) {
        case GraphTerm::Kind::Var:
            if (std::find(bound.begin(), bound.end(), t->name) == bound.end() &&
                std::find(out.begin(), out.end(), t->name) == out.end())
                out.push_back(t->name);
            return;
        case GraphTerm::Kind::Const:
            return;
        case GraphTerm::Kind::Indexed:
            collect_arith_vars(t->index, out, bound);
            return;
        case GraphTerm::Kind::Gadget:
            collect_arith_vars(t->a, out, bound);
            collect_arith_vars(t->b, out, bound);
            return;
        case GraphTerm::Kind::Cup:
            collect_term_vars(t->left, out, bound);
            collect_term_vars(t->right, out, bound);
            return;
    }
}

void collect_arith_vars(const ArithPtr& a, std::vector<std::string>& out, std::vector<std::string>& bound) {
    if (!a) return;
    switch (a->kind) {
        case ArithExpr::Kind::Const:
            return;
        case ArithExpr::Kind::Card:
        case ArithExpr::Kind::Size:
            collect_term_vars(a->term, out, bound);
            return;
        default:
            collect_arith_vars(a->lhs, out, bound);
            collect_arith_vars(a->rhs, out, bound);
            return;
    }
}

void collect_vars(const FormulaPtr& f, std::vector<std::string>& out, std::vector<std::string>& bound) {
    switch (f->kind) {
        case Formula::Kind::Rel:
            collect_term_vars(f->t1, out, bound);
            collect_term_vars(f->t2, out, bound);
            return;
        case Formula::Kind::Cmp:
            collect_arith_vars(f->a1, out, bound);
            collect_arith_vars(f->a2, out, bound);
            return;
        case Formula::Kind::Call:
            for (const auto& a : f->args) collect_term_vars(a, out, bound);
            return;
        case Formula::Kind::Not:
            collect_vars(f->f1, out, bound);
            return;
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
        case Formula::Kind::Iff:
            collect_vars(f->f1, out, bound);
            collect_vars(f->f2, out, bound);
            return;
        case Formula::Kind::Quant: {
            if (f->bound) collect_arith_vars(f->bound, out, bound);
            bound.push_back(f->var);
            collect_vars(f->body, out, bound);
            bound.pop_back();
            return;
        }
    }
}

}  // namespace

std::vector<std::string> free_variables(const FormulaPtr& f) {
    std::vector<std::string> out, bound;
    collect_vars(f, out, bound);
    return out;
}

bool is_builtin(const std::string& name, int arity) {
    if (name == "sameCard" || name == "sameSize") return arity == 2;
    if (name == "disjointUnion") return arity == 3;
    if (name == "plus" || name == "times") return arity == 3;
    if (name == "coverN_i") return arity == 3;
    if (name == "seqat") return arity == 3;
    if (name == "seqsum" || name == "seqinv" || name == "seqwithin") return arity == 2;
    return false;
}

std::optional<CanonicalGraph> lookup_constant(const std::string& name) {
    if (name == "emptyg") return CanonicalGraph();
    if (name == "double3star") return make_double3star();
    // concatenation of family letters and sizes: K2, N3, K2N1, P3N1, ...
    CanonicalGraph acc;
    std::size_t i = 0;
    if (name.empty()) return std::nullopt;
    while (i < name.size()) {
        char fam = name[i];
        if (fam != 'N' && fam != 'P' && fam != 'C' && fam != 'K' && fam != 'S') return std::nullopt;
        ++i;
        std::size_t start = i;
        while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]))) ++i;
        if (start == i) return std::nullopt;
        int k = std::stoi(name.substr(start, i - start));
        NamedFamily f = fam == 'N'   ? NamedFamily::N
                        : fam == 'P' ? NamedFamily::P
                        : fam == 'C' ? NamedFamily::C
                        : fam == 'K' ? NamedFamily::K
                                     : NamedFamily::S;
        try {
            acc = disjoint_union(acc, make_named(f, k));
        } catch (const domain_error&) {
            return std::nullopt;
        }
    }
    return acc;
}

}  // namespace gorder::fo
