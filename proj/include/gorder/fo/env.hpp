#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gorder/fo/ast.hpp"

namespace gorder::fo {

/// Semantic predicates a corpus can bind by name ("extern"); the harness
/// populates one table from the oracle registry.
class OracleSet {
public:
    using Fn = std::function<bool(std::span<const CanonicalGraph>)>;
    void add(const std::string& name, int arity, Fn fn) { fns_[name] = {arity, std::move(fn)}; }
    const std::pair<int, Fn>* find(const std::string& name) const {
        auto it = fns_.find(name);
        return it == fns_.end() ? nullptr : &it->second;
    }

private:
    std::map<std::string, std::pair<int, Fn>> fns_;
};

struct Definition {
    std::string name;
    std::vector<std::string> params;
    FormulaPtr body;  // null for externs
    bool is_extern = false;
    std::string oracle_name;  // externs: key into the OracleSet
};

/// Ordered list of named definitions. Bodies may only call builtins,
/// externs, and names defined earlier, so the call graph is acyclic by
/// construction; a self or forward reference is rejected.
class Environment {
public:
    /// Validates and appends. Throws validation_error on duplicate names,
    /// unresolved or mis-ary calls (including self-reference), and bodies
    /// with free variables outside the parameter list.
    void add(Definition def);

    const Definition* find(const std::string& name) const;
    int index_of(const std::string& name) const;  // -1 when absent
    const std::vector<Definition>& definitions() const { return defs_; }

    /// Validates that every call in f resolves against this environment.
    void check_formula(const FormulaPtr& f) const;

private:
    std::vector<Definition> defs_;
    std::map<std::string, int> by_name_;
};

}  // namespace gorder::fo
