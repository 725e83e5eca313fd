#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gorder/fo/env.hpp"

namespace gorder::fo {

/// One corpus block: a definition (or extern) plus its annotations.
struct CorpusEntry {
    std::string name;
    std::string body_text;
    bool is_extern = false;

    std::string cite;
    std::optional<int> verify_n;
    int margin = 1;
    std::string oracle;       // conformance partner; empty = helper only
    bool oracle_only = false; // transcribed, but infeasible to evaluate
    bool as_printed = false;  // verbatim variant expected to fail
    std::string corrects;     // name of the corrected twin
    std::string expect;       // as-printed failure mode: disagreement | parse-error | cycle-error
    bool known_divergence = false;
    std::string note;         // corrected / reconstructed / bound remarks

    bool load_failed = false;       // parse or cycle error while loading
    std::string load_error_kind;    // "parse-error" | "cycle-error"
    std::string load_error_message;
};

struct Corpus {
    Environment env;
    std::vector<CorpusEntry> entries;

    const CorpusEntry* find(const std::string& name) const;
};

/// Corpus file format: '#' comment lines; blocks of either
///   def NAME(p1, p2) := FORMULA        (may span lines)
///     @cite ... / @oracle NAME / @verify-n K / @margin K / @exact /
///     @corrected ... / @reconstructed ... / @as-printed NAME /
///     @expect disagreement|parse-error|cycle-error / @known-divergence ... /
///     @bound ... / @monotone-safe ... / @oracle-only / @note ...
/// or
///   extern NAME(p1, p2) @oracle ORACLE
/// Entries tagged @expect parse-error / cycle-error are allowed to fail to
/// load; any other load failure is fatal.
Corpus load_corpus_text(const std::string& text);
Corpus load_corpus(const std::string& path);

/// The canonical transcription shipped in-repo (data/corpus.fo).
const Corpus& builtin_corpus();
std::string builtin_corpus_path();

}  // namespace gorder::fo
