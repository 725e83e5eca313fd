#pragma once

#include <map>
#include <memory>
#include <random>

#include "gorder/fo/ast.hpp"

namespace gorder::fo {

/// First-order arithmetic over (N, plus, times) with bounded quantifiers;
/// terms are variables or constants.
struct ArithFormula;
using AFPtr = std::shared_ptr<const ArithFormula>;

struct ArithTerm {
    bool is_var = false;
    std::string var;
    Natural value;

    static ArithTerm v(std::string name);
    static ArithTerm c(Natural k);
};

struct ArithFormula {
    enum class Kind { Plus, Times, Eq, Not, And, Or, Implies, Forall, Exists };
    Kind kind;
    ArithTerm x, y, z;  // Plus/Times: x + y = z, x * y = z; Eq: x = y
    AFPtr f1, f2;
    std::string var;  // quantifiers
    Natural bound;
    AFPtr body;

    static AFPtr plus(ArithTerm a, ArithTerm b, ArithTerm c);
    static AFPtr times(ArithTerm a, ArithTerm b, ArithTerm c);
    static AFPtr eq(ArithTerm a, ArithTerm b);
    static AFPtr neg(AFPtr f);
    static AFPtr binary(Kind k, AFPtr a, AFPtr b);
    static AFPtr quant(bool forall, std::string var, Natural bound, AFPtr body);
};

/// Direct semantics over the naturals (the independent side of the
/// preservation check).
bool eval_arith_formula(const AFPtr& f, std::map<std::string, Natural>& env);

/// Numbers become members of the edgeless family, plus/times become the
/// relational arithmetic atoms, and quantifiers relativise to that family
/// with the same bounds; satisfaction is preserved along k -> N_k.
FormulaPtr translate_arith(const AFPtr& f);

std::string print(const AFPtr& f);

/// Random closed sentence with quantifier bounds and constants <= max_value.
AFPtr random_arith_sentence(std::mt19937& rng, int max_depth, int max_value);

}  // namespace gorder::fo
