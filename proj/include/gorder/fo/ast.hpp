#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gorder/graph.hpp"

namespace gorder::fo {

struct GraphTerm;
struct ArithExpr;
struct Formula;
using TermPtr = std::shared_ptr<const GraphTerm>;
using ArithPtr = std::shared_ptr<const ArithExpr>;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Terms denote isomorphism types: variables, named constants (emptyg, K2,
/// P3N1, ...), family members indexed by an arithmetic expression (C[k]),
/// the two-cycle gadgets CP4C[i,j] / PCS[i,j], and disjoint unions (cup).
struct GraphTerm {
    enum class Kind { Var, Const, Indexed, Gadget, Cup };
    Kind kind;
    std::string name;            // Var, Const (constant name), Gadget ("CP4C"/"PCS")
    NamedFamily family{};        // Indexed
    ArithPtr index;              // Indexed
    ArithPtr a, b;               // Gadget
    TermPtr left, right;         // Cup

    static TermPtr var(std::string n);
    static TermPtr constant(std::string n);
    static TermPtr indexed(NamedFamily f, ArithPtr idx);
    static TermPtr gadget(std::string n, ArithPtr a, ArithPtr b);
    static TermPtr cup(TermPtr l, TermPtr r);
};

/// Arithmetic over naturals. A bare variable in arithmetic position denotes
/// the vertex count of the graph it is bound to. Subtraction clamps at zero
/// and division is floor division.
struct ArithExpr {
    enum class Kind { Const, Card, Size, Add, Sub, Mul, Div };
    Kind kind;
    Natural value;  // Const
    TermPtr term;   // Card (|t|), Size (||t||)
    ArithPtr lhs, rhs;

    static ArithPtr constant(Natural v);
    static ArithPtr card(TermPtr t);
    static ArithPtr size(TermPtr t);
    static ArithPtr binary(Kind k, ArithPtr l, ArithPtr r);
};

enum class GraphRel { LeqS, LeqI, LeqM, LtS, LtI, LtM, Eq, Neq, CovS, CovSE, CovSV, CovI, CovM };
enum class ArithCmp { Eq, Neq, Lt, Le, Gt, Ge };

struct Formula {
    enum class Kind { Rel, Cmp, Call, Not, And, Or, Implies, Iff, Quant };
    Kind kind;
    // Rel
    GraphRel rel{};
    TermPtr t1, t2;
    // Cmp
    ArithCmp cmp{};
    ArithPtr a1, a2;
    // Call (defined predicate, extern, or builtin relation)
    std::string name;
    std::vector<TermPtr> args;
    // connectives
    FormulaPtr f1, f2;
    // Quant
    bool is_forall = false;
    std::string var;
    bool in_naturals = false;
    ArithPtr bound;  // may be null (unbounded; evaluation is then truncated)
    FormulaPtr body;

    static FormulaPtr make_rel(GraphRel r, TermPtr a, TermPtr b);
    static FormulaPtr make_cmp(ArithCmp c, ArithPtr a, ArithPtr b);
    static FormulaPtr make_call(std::string name, std::vector<TermPtr> args);
    static FormulaPtr make_not(FormulaPtr f);
    static FormulaPtr make_binary(Kind k, FormulaPtr a, FormulaPtr b);
    static FormulaPtr make_quant(bool forall, std::string var, bool in_naturals, ArithPtr bound, FormulaPtr body);
};

/// Canonical fully-parenthesised rendering; parse(print(f)) == f.
std::string print(const FormulaPtr& f);
std::string print(const TermPtr& t);
std::string print(const ArithPtr& a);

bool equal(const FormulaPtr& a, const FormulaPtr& b);
bool equal(const TermPtr& a, const TermPtr& b);
bool equal(const ArithPtr& a, const ArithPtr& b);

/// Free variables in first-occurrence order.
std::vector<std::string> free_variables(const FormulaPtr& f);

/// Builtin relations available as calls in every environment.
bool is_builtin(const std::string& name, int arity);

/// Named graph constants: emptyg, double3star, and concatenations of family
/// letters with sizes (K2, P3, N11, K2N1, P3N1, S5, C1_7 via C1 indexing is
/// separate). Returns nothing for unknown names.
std::optional<CanonicalGraph> lookup_constant(const std::string& name);

}  // namespace gorder::fo
