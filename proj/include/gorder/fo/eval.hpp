#pragma once

#include <shared_mutex>
#include <unordered_map>

#include "gorder/fo/env.hpp"
#include "gorder/universe.hpp"

namespace gorder::fo {

struct EvalResult {
    bool value = false;
    /// Set when some quantifier may have missed witnesses: it ranged over a
    /// truncated domain and the outcome was not settled by an untruncated
    /// witness. Advisory; the margin stability check is the real guard.
    bool truncated = false;
};

using Assignment = std::vector<std::pair<std::string, CanonicalGraph>>;

/// Bounded Tarskian evaluation over a universe. Plain quantifiers range over
/// the universe members of order up to their bound; quantifiers marked
/// "in N" range over N_0..N_bound exactly (beyond the universe if needed),
/// so they never truncate when bounded. Defined predicates are memoised per
/// (definition, argument) pair; caches take shared locks for reads and
/// exclusive locks for inserts, so evaluation may run from parallel sweeps.
class Evaluator {
public:
    Evaluator(const Universe& uni, const Environment& env, const OracleSet* oracles = nullptr);

    EvalResult evaluate(const FormulaPtr& f, const Assignment& assignment) const;
    EvalResult call(const std::string& name, std::span<const CanonicalGraph> args) const;

    /// Satisfying tuples of a formula over the universe, in lexicographic
    /// member-index order; the tuple components follow free_variables(f).
    std::vector<std::vector<CanonicalGraph>> extension(const FormulaPtr& f, int arity) const;
    std::vector<std::vector<CanonicalGraph>> extension_of(const std::string& defname) const;

    const Universe& universe() const { return uni_; }
    const Environment& environment() const { return env_; }

private:
    EvalResult eval(const FormulaPtr& f, Assignment& asg) const;
    EvalResult eval_quant(const Formula& f, Assignment& asg) const;
    EvalResult eval_call(const Formula& f, Assignment& asg) const;
    EvalResult call_impl(const std::string& name, const std::vector<CanonicalGraph>& args) const;
    CanonicalGraph eval_term(const TermPtr& t, const Assignment& asg) const;
    Natural eval_arith(const ArithPtr& a, const Assignment& asg) const;
    bool eval_builtin(const std::string& name, std::span<const CanonicalGraph> args) const;

    const Universe& uni_;
    const Environment& env_;
    const OracleSet* oracles_;

    struct CallKey {
        int def;
        std::vector<int> args;
        bool operator==(const CallKey&) const = default;
    };
    struct CallKeyHash {
        std::size_t operator()(const CallKey& k) const {
            std::size_t h = std::hash<int>()(k.def);
            for (int a : k.args) h = h * 1000003u + static_cast<std::size_t>(a) + 1;
            return h;
        }
    };
    mutable std::shared_mutex memo_mu_;
    mutable std::unordered_map<CallKey, EvalResult, CallKeyHash> memo_;
};

}  // namespace gorder::fo
