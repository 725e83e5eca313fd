#include "gorder/fo/env.hpp"

#include <algorithm>

namespace gorder::fo {

namespace {

void check_calls(const FormulaPtr& f, const Environment& env, const std::string& current) {
    switch (f->kind) {
        case Formula::Kind::Call: {
            int arity = static_cast<int>(f->args.size());
            if (is_builtin(f->name, arity)) return;
            const Definition* d = env.find(f->name);
            if (!d) {
                if (f->name == current)
                    throw validation_error("cyclic definition: '" + current + "' calls itself");
                throw validation_error("unknown predicate name '" + f->name + "'" +
                                       (current.empty() ? "" : " in definition of '" + current + "'"));
            }
            if (static_cast<int>(d->params.size()) != arity)
                throw validation_error("predicate '" + f->name + "' called with " + std::to_string(arity) +
                                       " arguments, expects " + std::to_string(d->params.size()));
            return;
        }
        case Formula::Kind::Not:
            check_calls(f->f1, env, current);
            return;
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
        case Formula::Kind::Iff:
            check_calls(f->f1, env, current);
            check_calls(f->f2, env, current);
            return;
        case Formula::Kind::Quant:
            check_calls(f->body, env, current);
            return;
        default:
            return;
    }
}

}  // namespace

void Environment::add(Definition def) {
    if (by_name_.count(def.name)) throw validation_error("duplicate definition '" + def.name + "'");
    if (def.is_extern) {
        if (def.body) throw validation_error("extern '" + def.name + "' must not carry a body");
    } else {
        if (!def.body) throw validation_error("definition '" + def.name + "' has no body");
        check_calls(def.body, *this, def.name);
        for (const auto& v : free_variables(def.body))
            if (std::find(def.params.begin(), def.params.end(), v) == def.params.end())
                throw validation_error("definition '" + def.name + "' uses unbound variable '" + v + "'");
    }
    by_name_.emplace(def.name, static_cast<int>(defs_.size()));
    defs_.push_back(std::move(def));
}

const Definition* Environment::find(const std::string& name) const {
    auto it = by_name_.find(name);
    return it == by_name_.end() ? nullptr : &defs_[static_cast<std::size_t>(it->second)];
}

int Environment::index_of(const std::string& name) const {
    auto it = by_name_.find(name);
    return it == by_name_.end() ? -1 : it->second;
}

void Environment::check_formula(const FormulaPtr& f) const { check_calls(f, *this, ""); }

}  // namespace gorder::fo
