#include "gorder/fo/eval.hpp"

#include <algorithm>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gorder/encoding.hpp"
#include "gorder/orders.hpp"
#include "gorder/predicates.hpp"
#include "gorder/sequences.hpp"

namespace gorder::fo {

namespace {

const CanonicalGraph& cached_constant(const std::string& name) {
    static std::shared_mutex mu;
    static std::unordered_map<std::string, CanonicalGraph> cache;
    {
        std::shared_lock lock(mu);
        auto it = cache.find(name);
        if (it != cache.end()) return it->second;
    }
    auto g = lookup_constant(name);
    if (!g) throw domain_error("unknown constant '" + name + "'");
    std::unique_lock lock(mu);
    return cache.emplace(name, *g).first->second;
}

constexpr long kMaxNaturalsSweep = 2'000'000;

}  // namespace

Evaluator::Evaluator(const Universe& uni, const Environment& env, const OracleSet* oracles)
    : uni_(uni), env_(env), oracles_(oracles) {}

CanonicalGraph Evaluator::eval_term(const TermPtr& t, const Assignment& asg) const {
    switch (t->kind) {
        case GraphTerm::Kind::Var: {
            for (auto it = asg.rbegin(); it != asg.rend(); ++it)
                if (it->first == t->name) return it->second;
            throw domain_error("unbound variable '" + t->name + "'");
        }
        case GraphTerm::Kind::Const:
            return cached_constant(t->name);
        case GraphTerm::Kind::Indexed: {
            Natural idx = eval_arith(t->index, asg);
            if (t->family == NamedFamily::N) return CanonicalGraph::edgeless(idx);
            if (idx > LabelledGraph::kMaxVertices)
                throw resource_error("family index " + idx.str() + " too large");
            return make_named(t->family, static_cast<int>(idx));
        }
        case GraphTerm::Kind::Gadget: {
            Natural a = eval_arith(t->a, asg), b = eval_arith(t->b, asg);
            if (a > LabelledGraph::kMaxVertices || b > LabelledGraph::kMaxVertices)
                throw resource_error("gadget index too large");
            int ia = static_cast<int>(a), ib = static_cast<int>(b);
            if (t->name == "CP4C") return ia <= ib ? make_cp4c(ia, ib) : make_cp4c(ib, ia);
            if (t->name == "PCS") return make_pointed_cycle_sum(ia, ib);
            throw domain_error("unknown gadget '" + t->name + "'");
        }
        case GraphTerm::Kind::Cup:
            return disjoint_union(eval_term(t->left, asg), eval_term(t->right, asg));
    }
    throw domain_error("bad term");
}

Natural Evaluator::eval_arith(const ArithPtr& a, const Assignment& asg) const {
    switch (a->kind) {
        case ArithExpr::Kind::Const:
            return a->value;
        case ArithExpr::Kind::Card:
            return eval_term(a->term, asg).order_n();
        case ArithExpr::Kind::Size:
            return eval_term(a->term, asg).size_n();
        case ArithExpr::Kind::Add:
            return eval_arith(a->lhs, asg) + eval_arith(a->rhs, asg);
        case ArithExpr::Kind::Sub: {
            Natural l = eval_arith(a->lhs, asg), r = eval_arith(a->rhs, asg);
            return l > r ? l - r : Natural(0);  // clamped at zero
        }
        case ArithExpr::Kind::Mul:
            return eval_arith(a->lhs, asg) * eval_arith(a->rhs, asg);
        case ArithExpr::Kind::Div: {
            Natural d = eval_arith(a->rhs, asg);
            if (d == 0) throw domain_error("division by zero in formula arithmetic");
            return eval_arith(a->lhs, asg) / d;
        }
    }
    throw domain_error("bad arithmetic expression");
}

bool Evaluator::eval_builtin(const std::string& name, std::span<const CanonicalGraph> args) const {
    auto nat = [](const CanonicalGraph& g) -> std::optional<Natural> {
        if (!g.is_edgeless()) return std::nullopt;
        return g.order_n();
    };
    if (name == "sameCard") return same_card(args[0], args[1]);
    if (name == "sameSize") return same_size(args[0], args[1]);
    if (name == "disjointUnion") return disjoint_union_check(args[0], args[1], args[2]);
    if (name == "plus") return psi_plus(args[0], args[1], args[2]);
    if (name == "times") return psi_times(args[0], args[1], args[2]);
    if (name == "coverN_i") {
        auto n = nat(args[2]);
        if (!n) return false;
        if (*n > LabelledGraph::kMaxVertices) return false;
        return cover_n_fast(OrderKind::Induced, args[0], args[1], static_cast<int>(*n));
    }
    if (name == "seqat") {
        auto n = nat(args[0]), i = nat(args[1]), j = nat(args[2]);
        if (!n || !i || !j || *n < 1 || *i < 1) return false;
        return prime_exponent(*n, static_cast<std::size_t>(*i)) == *j;
    }
    if (name == "seqsum") {
        auto n = nat(args[0]), m = nat(args[1]);
        if (!n || !m || *n < 1) return false;
        return prime_exponent_sum(*n) == *m;
    }
    if (name == "seqinv") {
        auto m = nat(args[0]), n = nat(args[1]);
        if (!m || !n || *m < 1 || *n < 1) return false;
        try {
            return copies_to_counts(ExpSequence::from_packed(*m)).packed() == *n;
        } catch (const domain_error&) {
            return false;
        }
    }
    if (name == "seqwithin") {
        auto n = nat(args[0]), k = nat(args[1]);
        if (!n || !k || *n < 1) return false;
        if (*k > 64) return true;
        return factors_within(*n, static_cast<std::size_t>(*k));
    }
    throw domain_error("unknown builtin '" + name + "'");
}

EvalResult Evaluator::eval_call(const Formula& f, Assignment& asg) const {
    std::vector<CanonicalGraph> args;
    args.reserve(f.args.size());
    for (const auto& t : f.args) args.push_back(eval_term(t, asg));
    return call_impl(f.name, args);
}

EvalResult Evaluator::call(const std::string& name, std::span<const CanonicalGraph> args) const {
    return call_impl(name, std::vector<CanonicalGraph>(args.begin(), args.end()));
}

EvalResult Evaluator::call_impl(const std::string& name, const std::vector<CanonicalGraph>& args) const {
    if (is_builtin(name, static_cast<int>(args.size()))) return {eval_builtin(name, args), false};
    const Definition* d = env_.find(name);
    if (!d) throw domain_error("unresolved predicate name '" + name + "'");
    if (d->params.size() != args.size())
        throw domain_error("arity mismatch calling '" + name + "'");
    if (d->is_extern) {
        if (!oracles_) throw domain_error("extern '" + name + "' has no oracle table");
        const auto* fn = oracles_->find(d->oracle_name);
        if (!fn) throw domain_error("extern oracle '" + d->oracle_name + "' not registered");
        if (fn->first != static_cast<int>(args.size()))
            throw domain_error("extern oracle arity mismatch for '" + name + "'");
        return {fn->second(args), false};
    }

    CallKey key{env_.index_of(name), {}};
    key.args.reserve(args.size());
    for (const auto& g : args) key.args.push_back(intern(g));
    {
        std::shared_lock lock(memo_mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    Assignment inner;
    inner.reserve(args.size());
    for (std::size_t i = 0; i < args.size(); ++i) inner.emplace_back(d->params[i], args[i]);
    EvalResult r = eval(d->body, inner);
    std::unique_lock lock(memo_mu_);
    memo_.emplace(std::move(key), r);
    return r;
}

EvalResult Evaluator::eval_quant(const Formula& f, Assignment& asg) const {
    std::optional<Natural> bound;
    if (f.bound) bound = eval_arith(f.bound, asg);
    bool domain_truncated = false;

    std::vector<CanonicalGraph> extra;  // naturals beyond the universe
    int member_prefix = 0;
    if (f.in_naturals) {
        Natural b = bound ? *bound : Natural(uni_.max_vertices());
        if (!bound) domain_truncated = true;
        if (b > kMaxNaturalsSweep) throw resource_error("naturals quantifier bound too large");
        for (Natural k = 0; k <= b; ++k) extra.push_back(CanonicalGraph::edgeless(k));
    } else {
        int cap = uni_.max_vertices();
        if (bound) {
            if (*bound > cap)
                domain_truncated = true;
            else
                cap = static_cast<int>(*bound);
        } else {
            domain_truncated = true;
        }
        member_prefix = uni_.prefix_size(cap);
    }

    bool value = f.is_forall;
    bool any_truncated = false;
    auto consider = [&](const CanonicalGraph& g) -> std::optional<EvalResult> {
        asg.emplace_back(f.var, g);
        EvalResult r = eval(f.body, asg);
        asg.pop_back();
        if (f.is_forall) {
            if (!r.value && !r.truncated) return EvalResult{false, false};
            if (!r.value) value = false;
        } else {
            if (r.value && !r.truncated) return EvalResult{true, false};
            if (r.value) value = true;
        }
        any_truncated |= r.truncated;
        return std::nullopt;
    };
    for (int i = 0; i < member_prefix; ++i)
        if (auto done = consider(uni_.members()[static_cast<std::size_t>(i)])) return *done;
    for (const auto& g : extra)
        if (auto done = consider(g)) return *done;
    return {value, domain_truncated || any_truncated};
}

EvalResult Evaluator::eval(const FormulaPtr& f, Assignment& asg) const {
    switch (f->kind) {
        case Formula::Kind::Rel: {
            CanonicalGraph a = eval_term(f->t1, asg), b = eval_term(f->t2, asg);
            bool v = false;
            switch (f->rel) {
                case GraphRel::LeqS: v = leq(OrderKind::Subgraph, a, b); break;
                case GraphRel::LeqI: v = leq(OrderKind::Induced, a, b); break;
                case GraphRel::LeqM: v = leq(OrderKind::Minor, a, b); break;
                case GraphRel::LtS: v = lt(OrderKind::Subgraph, a, b); break;
                case GraphRel::LtI: v = lt(OrderKind::Induced, a, b); break;
                case GraphRel::LtM: v = lt(OrderKind::Minor, a, b); break;
                case GraphRel::Eq: v = a == b; break;
                case GraphRel::Neq: v = a != b; break;
                case GraphRel::CovS: v = covers_fast(OrderKind::Subgraph, a, b); break;
                case GraphRel::CovSE: v = cover_kind_s(a, b) == SubgraphCoverKind::EdgeCover; break;
                case GraphRel::CovSV: v = cover_kind_s(a, b) == SubgraphCoverKind::VertexCover; break;
                case GraphRel::CovI: v = covers_fast(OrderKind::Induced, a, b); break;
                case GraphRel::CovM: v = covers_fast(OrderKind::Minor, a, b); break;
            }
            return {v, false};
        }
        case Formula::Kind::Cmp: {
            Natural a = eval_arith(f->a1, asg), b = eval_arith(f->a2, asg);
            bool v = false;
            switch (f->cmp) {
                case ArithCmp::Eq: v = a == b; break;
                case ArithCmp::Neq: v = a != b; break;
                case ArithCmp::Lt: v = a < b; break;
                case ArithCmp::Le: v = a <= b; break;
                case ArithCmp::Gt: v = a > b; break;
                case ArithCmp::Ge: v = a >= b; break;
            }
            return {v, false};
        }
        case Formula::Kind::Call:
            return eval_call(*f, asg);
        case Formula::Kind::Not: {
            EvalResult r = eval(f->f1, asg);
            return {!r.value, r.truncated};
        }
        case Formula::Kind::And: {
            EvalResult a = eval(f->f1, asg);
            if (!a.value && !a.truncated) return {false, false};
            EvalResult b = eval(f->f2, asg);
            if (!b.value && !b.truncated) return {false, false};
            return {a.value && b.value, a.truncated || b.truncated};
        }
        case Formula::Kind::Or: {
            EvalResult a = eval(f->f1, asg);
            if (a.value && !a.truncated) return {true, false};
            EvalResult b = eval(f->f2, asg);
            if (b.value && !b.truncated) return {true, false};
            return {a.value || b.value, a.truncated || b.truncated};
        }
        case Formula::Kind::Implies: {
            EvalResult a = eval(f->f1, asg);
            if (!a.value && !a.truncated) return {true, false};
            EvalResult b = eval(f->f2, asg);
            if (b.value && !b.truncated) return {true, false};
            return {!a.value || b.value, a.truncated || b.truncated};
        }
        case Formula::Kind::Iff: {
            EvalResult a = eval(f->f1, asg);
            EvalResult b = eval(f->f2, asg);
            return {a.value == b.value, a.truncated || b.truncated};
        }
        case Formula::Kind::Quant:
            return eval_quant(*f, asg);
    }
    throw domain_error("bad formula");
}

EvalResult Evaluator::evaluate(const FormulaPtr& f, const Assignment& assignment) const {
    env_.check_formula(f);
    Assignment asg = assignment;
    return eval(f, asg);
}

std::vector<std::vector<CanonicalGraph>> Evaluator::extension(const FormulaPtr& f, int arity) const {
    env_.check_formula(f);
    auto vars = free_variables(f);
    if (static_cast<int>(vars.size()) != arity)
        throw domain_error("extension: formula has " + std::to_string(vars.size()) +
                           " free variables, expected " + std::to_string(arity));
    const auto& mem = uni_.members();
    int n = static_cast<int>(mem.size());
    if (arity == 0) {
        Assignment asg;
        if (eval(f, asg).value) return {{}};
        return {};
    }

    std::vector<std::vector<std::vector<CanonicalGraph>>> buckets(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 1)
    for (int first = 0; first < n; ++first) {
        std::vector<int> idx(static_cast<std::size_t>(arity), 0);
        idx[0] = first;
        Assignment asg;
        for (int k = 0; k < arity; ++k) asg.emplace_back(vars[static_cast<std::size_t>(k)], mem[0]);
        auto& out = buckets[static_cast<std::size_t>(first)];
        // odometer over the remaining coordinates
        for (;;) {
            for (int k = 0; k < arity; ++k) asg[static_cast<std::size_t>(k)].second = mem[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])];
            Assignment local = asg;
            if (eval(f, local).value) {
                std::vector<CanonicalGraph> tuple;
                for (int k = 0; k < arity; ++k) tuple.push_back(mem[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])]);
                out.push_back(std::move(tuple));
            }
            int k = arity - 1;
            while (k >= 1) {
                if (++idx[static_cast<std::size_t>(k)] < n) break;
                idx[static_cast<std::size_t>(k)] = 0;
                --k;
            }
            if (k < 1) break;
        }
    }
    std::vector<std::vector<CanonicalGraph>> out;
    for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::vector<std::vector<CanonicalGraph>> Evaluator::extension_of(const std::string& defname) const {
    const Definition* d = env_.find(defname);
    if (!d) throw domain_error("unknown definition '" + defname + "'");
    std::vector<TermPtr> args;
    for (const auto& p : d->params) args.push_back(GraphTerm::var(p));
    return extension(Formula::make_call(defname, std::move(args)), static_cast<int>(d->params.size()));
}

}  // namespace gorder::fo
