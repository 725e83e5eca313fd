#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "gorder/fo/corpus.hpp"
#include "gorder/universe.hpp"

namespace gorder {

/// A registered structural oracle: a pure predicate over graph tuples. The
/// universe argument gives the enumeration context for the few oracles that
/// need an exhaustive minimality scan; most ignore it.
struct Oracle {
    int arity;
    std::function<bool(std::span<const CanonicalGraph>, const Universe&)> fn;
};

const std::map<std::string, Oracle>& oracle_registry();

/// Extern-binding table for an evaluation universe.
fo::OracleSet make_oracle_set(const Universe& uni);

struct ConformanceReport {
    std::string formula;
    std::string oracle;
    std::string citation;
    int universe_n = 0;
    int margin = 0;
    int arity = 0;
    long long agreements = 0;
    long long disagreement_count = 0;
    std::vector<std::vector<std::string>> disagreements;  // graph6 tuples (capped)
    std::vector<bool> stable_at_margin;  // step k: results at n+k equal those at n+k-1
    bool truncated_any = false;
    double elapsed_seconds = 0;
};

nlohmann::json report_to_json(const ConformanceReport& r);

/// Evaluates the corpus formula on every argument tuple from U_n against the
/// oracle, with the formula evaluated over U_{n+margin} (and at each smaller
/// margin for the stability record).
ConformanceReport conformance(const fo::Corpus& corpus, const std::string& formula_name,
                              const std::string& oracle_name, int n, int margin);

struct SuiteResult {
    std::vector<ConformanceReport> reports;
    std::vector<std::string> failures;            // human-readable failure lines
    std::vector<std::string> confirmed_expected;  // as-printed variants that failed as they should
    bool ok = false;
    double elapsed_seconds = 0;
};

/// profile: "quick" runs each @verify-n entry at its annotated size;
/// "full" additionally grows the size by one where the hard enumeration
/// limit allows. Fails on any unannotated disagreement and on any as-printed
/// variant that does not fail in its expected way.
SuiteResult run_suite(const fo::Corpus& corpus, const std::string& profile);

nlohmann::json suite_to_json(const SuiteResult& r);

/// Concrete regressions pinned by the worked examples: the small Hasse
/// diagrams, the P_3 code chain, the S_4 gadgets, and the clique-completion
/// example.
struct FigureCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};
std::vector<FigureCheck> figure_regressions();
nlohmann::json figures_to_json(const std::vector<FigureCheck>& checks);

}  // namespace gorder
