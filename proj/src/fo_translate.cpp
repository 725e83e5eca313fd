#include "gorder/fo/translate.hpp"

#include <sstream>

namespace gorder::fo {

ArithTerm ArithTerm::v(std::string name) {
    ArithTerm t;
    t.is_var = true;
    t.var = std::move(name);
    return t;
}

ArithTerm ArithTerm::c(Natural k) {
    ArithTerm t;
    t.value = std::move(k);
    return t;
}

AFPtr ArithFormula::plus(ArithTerm a, ArithTerm b, ArithTerm c) {
    auto f = std::make_shared<ArithFormula>();
    f->kind = Kind::Plus;
    f->x = std::move(a);
    f->y = std::move(b);
    f->z = std::move(c);
    return f;
}

AFPtr ArithFormula::times(ArithTerm a, ArithTerm b, ArithTerm c) {
    auto f = std::make_shared<ArithFormula>();
    f->kind = Kind::Times;
    f->x = std::move(a);
    f->y = std::move(b);
    f->z = std::move(c);
    return f;
}

AFPtr ArithFormula::eq(ArithTerm a, ArithTerm b) {
    auto f = std::make_shared<ArithFormula>();
    f->kind = Kind::Eq;
    f->x = std::move(a);
    f->y = std::move(b);
    return f;
}

AFPtr ArithFormula::neg(AFPtr g) {
    auto f = std::make_shared<ArithFormula>();
    f->kind = Kind::Not;
    f->f1 = std::move(g);
    return f;
}

AFPtr ArithFormula::binary(Kind k, AFPtr a, AFPtr b) {
    auto f = std::make_shared<ArithFormula>();
    f->kind = k;
    f->f1 = std::move(a);
    f->f2 = std::move(b);
    return f;
}

AFPtr ArithFormula::quant(bool forall, std::string var, Natural bound, AFPtr body) {
    auto f = std::make_shared<ArithFormula>();
    f->kind = forall ? Kind::Forall : Kind::Exists;
    f->var = std::move(var);
    f->bound = std::move(bound);
    f->body = std::move(body);
    return f;
}

namespace {

Natural term_value(const ArithTerm& t, const std::map<std::string, Natural>& env) {
    if (!t.is_var) return t.value;
    auto it = env.find(t.var);
    if (it == env.end()) throw domain_error("arith: unbound variable " + t.var);
    return it->second;
}

}  // namespace

bool eval_arith_formula(const AFPtr& f, std::map<std::string, Natural>& env) {
    switch (f->kind) {
        case ArithFormula::Kind::Plus:
            return term_value(f->x, env) + term_value(f->y, env) == term_value(f->z, env);
        case ArithFormula::Kind::Times:
            return term_value(f->x, env) * term_value(f->y, env) == term_value(f->z, env);
        case ArithFormula::Kind::Eq:
            return term_value(f->x, env) == term_value(f->y, env);
        case ArithFormula::Kind::Not:
            return !eval_arith_formula(f->f1, env);
        case ArithFormula::Kind::And:
            return eval_arith_formula(f->f1, env) && eval_arith_formula(f->f2, env);
        case ArithFormula::Kind::Or:
            return eval_arith_formula(f->f1, env) || eval_arith_formula(f->f2, env);
        case ArithFormula::Kind::Implies:
            return !eval_arith_formula(f->f1, env) || eval_arith_formula(f->f2, env);
        case ArithFormula::Kind::Forall: {
            for (Natural k = 0; k <= f->bound; ++k) {
                env[f->var] = k;
                bool ok = eval_arith_formula(f->body, env);
                env.erase(f->var);
                if (!ok) return false;
            }
            return true;
        }
        case ArithFormula::Kind::Exists: {
            for (Natural k = 0; k <= f->bound; ++k) {
                env[f->var] = k;
                bool ok = eval_arith_formula(f->body, env);
                env.erase(f->var);
                if (ok) return true;
            }
            return false;
        }
    }
    throw domain_error("bad arith formula");
}

namespace {

TermPtr translate_term(const ArithTerm& t) {
    if (t.is_var) return GraphTerm::var(t.var);
    return GraphTerm::indexed(NamedFamily::N, ArithExpr::constant(t.value));
}

}  // namespace

FormulaPtr translate_arith(const AFPtr& f) {
    switch (f->kind) {
        case ArithFormula::Kind::Plus:
            return Formula::make_call("plus", {translate_term(f->x), translate_term(f->y), translate_term(f->z)});
        case ArithFormula::Kind::Times:
            return Formula::make_call("times", {translate_term(f->x), translate_term(f->y), translate_term(f->z)});
        case ArithFormula::Kind::Eq:
            return Formula::make_rel(GraphRel::Eq, translate_term(f->x), translate_term(f->y));
        case ArithFormula::Kind::Not:
            return Formula::make_not(translate_arith(f->f1));
        case ArithFormula::Kind::And:
            return Formula::make_binary(Formula::Kind::And, translate_arith(f->f1), translate_arith(f->f2));
        case ArithFormula::Kind::Or:
            return Formula::make_binary(Formula::Kind::Or, translate_arith(f->f1), translate_arith(f->f2));
        case ArithFormula::Kind::Implies:
            return Formula::make_binary(Formula::Kind::Implies, translate_arith(f->f1), translate_arith(f->f2));
        case ArithFormula::Kind::Forall:
        case ArithFormula::Kind::Exists:
            return Formula::make_quant(f->kind == ArithFormula::Kind::Forall, f->var, /*in_naturals=*/true,
                                       ArithExpr::constant(f->bound), translate_arith(f->body));
    }
    throw domain_error("bad arith formula");
}

std::string print(const AFPtr& f) {
    std::ostringstream os;
    auto term = [](const ArithTerm& t) { return t.is_var ? t.var : t.value.str(); };
    switch (f->kind) {
        case ArithFormula::Kind::Plus:
            os << "plus(" << term(f->x) << "," << term(f->y) << "," << term(f->z) << ")";
            break;
        case ArithFormula::Kind::Times:
            os << "times(" << term(f->x) << "," << term(f->y) << "," << term(f->z) << ")";
            break;
        case ArithFormula::Kind::Eq:
            os << term(f->x) << " = " << term(f->y);
            break;
        case ArithFormula::Kind::Not:
            os << "!(" << print(f->f1) << ")";
            break;
        case ArithFormula::Kind::And:
            os << "(" << print(f->f1) << " & " << print(f->f2) << ")";
            break;
        case ArithFormula::Kind::Or:
            os << "(" << print(f->f1) << " | " << print(f->f2) << ")";
            break;
        case ArithFormula::Kind::Implies:
            os << "(" << print(f->f1) << " -> " << print(f->f2) << ")";
            break;
        case ArithFormula::Kind::Forall:
            os << "forall " << f->var << " <= " << f->bound << " . (" << print(f->body) << ")";
            break;
        case ArithFormula::Kind::Exists:
            os << "exists " << f->var << " <= " << f->bound << " . (" << print(f->body) << ")";
            break;
    }
    return os.str();
}

AFPtr random_arith_sentence(std::mt19937& rng, int max_depth, int max_value) {
    std::vector<std::string> scope;
    auto pick_term = [&]() -> ArithTerm {
        std::uniform_int_distribution<int> coin(0, 1);
        if (!scope.empty() && coin(rng) == 1) {
            std::uniform_int_distribution<std::size_t> pick(0, scope.size() - 1);
            return ArithTerm::v(scope[pick(rng)]);
        }
        std::uniform_int_distribution<int> val(0, max_value);
        return ArithTerm::c(val(rng));
    };
    auto gen = [&](auto&& self, int depth) -> AFPtr {
        std::uniform_int_distribution<int> choice(0, depth <= 0 ? 2 : 6);
        switch (choice(rng)) {
            case 0:
                return ArithFormula::plus(pick_term(), pick_term(), pick_term());
            case 1:
                return ArithFormula::times(pick_term(), pick_term(), pick_term());
            case 2:
                return ArithFormula::eq(pick_term(), pick_term());
            case 3:
                return ArithFormula::neg(self(self, depth - 1));
            case 4: {
                std::uniform_int_distribution<int> op(0, 2);
                int o = op(rng);
                auto k = o == 0   ? ArithFormula::Kind::And
                         : o == 1 ? ArithFormula::Kind::Or
                                  : ArithFormula::Kind::Implies;
                return ArithFormula::binary(k, self(self, depth - 1), self(self, depth - 1));
            }
            default: {
                std::uniform_int_distribution<int> bound(0, max_value);
                std::uniform_int_distribution<int> fa(0, 1);
                std::string var = "q" + std::to_string(scope.size());
                scope.push_back(var);
                AFPtr body = self(self, depth - 1);
                scope.pop_back();
                return ArithFormula::quant(fa(rng) == 1, var, bound(rng), body);
            }
        }
    };
    // force at least one quantifier so the sentence exercises relativisation
    std::uniform_int_distribution<int> bound(0, max_value);
    std::string var = "q0";
    scope.push_back(var);
    AFPtr body = gen(gen, max_depth - 1);
    scope.pop_back();
    std::uniform_int_distribution<int> fa(0, 1);
    return ArithFormula::quant(fa(rng) == 1, var, bound(rng), body);
}

}  // namespace gorder::fo
