#include "gorder/fo/corpus.hpp"

#include <fstream>
#include <sstream>

#include "gorder/fo/parser.hpp"

namespace gorder::fo {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

struct RawBlock {
    std::string header;  // "def name(args) := body..." or "extern name(args) @oracle x"
    std::vector<std::string> annotations;
    int line = 0;
};

}  // namespace

const CorpusEntry* Corpus::find(const std::string& name) const {
    for (const auto& e : entries)
        if (e.name == name) return &e;
    return nullptr;
}

Corpus load_corpus_text(const std::string& text) {
    std::vector<RawBlock> blocks;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    RawBlock* cur = nullptr;
    bool in_body = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.rfind("def ", 0) == 0 || t.rfind("extern ", 0) == 0) {
            blocks.push_back(RawBlock{t, {}, lineno});
            cur = &blocks.back();
            in_body = t.rfind("def ", 0) == 0;
            continue;
        }
        if (!cur) throw validation_error("corpus: stray line " + std::to_string(lineno));
        if (t[0] == '@') {
            cur->annotations.push_back(t);
            in_body = false;
        } else if (in_body) {
            cur->header += " " + t;
        } else {
            throw validation_error("corpus: unexpected continuation at line " + std::to_string(lineno));
        }
    }

    Corpus corpus;
    for (const auto& blk : blocks) {
        CorpusEntry entry;
        bool is_def = blk.header.rfind("def ", 0) == 0;
        std::string rest = blk.header.substr(is_def ? 4 : 7);
        auto lp = rest.find('(');
        auto rp = rest.find(')');
        if (lp == std::string::npos || rp == std::string::npos || rp < lp)
            throw validation_error("corpus: bad header at line " + std::to_string(blk.line));
        entry.name = trim(rest.substr(0, lp));
        entry.is_extern = !is_def;
        std::vector<std::string> params;
        {
            std::string inside = rest.substr(lp + 1, rp - lp - 1);
            std::istringstream ps(inside);
            std::string p;
            while (std::getline(ps, p, ',')) {
                p = trim(p);
                if (!p.empty()) params.push_back(p);
            }
        }

        std::string oracle_from_header;
        if (is_def) {
            auto assign = rest.find(":=", rp);
            if (assign == std::string::npos)
                throw validation_error("corpus: missing ':=' at line " + std::to_string(blk.line));
            entry.body_text = trim(rest.substr(assign + 2));
        } else {
            auto at = rest.find("@oracle", rp);
            if (at == std::string::npos)
                throw validation_error("corpus: extern without @oracle at line " + std::to_string(blk.line));
            oracle_from_header = trim(rest.substr(at + 7));
        }

        for (const auto& raw : blk.annotations) {
            auto sp = raw.find_first_of(" \t");
            std::string key = sp == std::string::npos ? raw : raw.substr(0, sp);
            std::string val = sp == std::string::npos ? "" : trim(raw.substr(sp));
            if (key == "@cite") entry.cite = val;
            else if (key == "@oracle") entry.oracle = val;
            else if (key == "@verify-n") entry.verify_n = std::stoi(val);
            else if (key == "@margin") entry.margin = std::stoi(val);
            else if (key == "@exact") entry.margin = 0;
            else if (key == "@oracle-only") entry.oracle_only = true;
            else if (key == "@as-printed") { entry.as_printed = true; entry.corrects = val; }
            else if (key == "@expect") entry.expect = val;
            else if (key == "@known-divergence") { entry.known_divergence = true; if (!val.empty()) entry.note += val + " "; }
            else if (key == "@corrected" || key == "@reconstructed" || key == "@bound" ||
                     key == "@monotone-safe" || key == "@note")
                entry.note += key.substr(1) + ": " + val + "\n";
            else
                throw validation_error("corpus: unknown annotation " + key + " at line " + std::to_string(blk.line));
        }

        if (entry.is_extern) {
            Definition d;
            d.name = entry.name;
            d.params = params;
            d.is_extern = true;
            d.oracle_name = oracle_from_header;
            corpus.env.add(std::move(d));
            corpus.entries.push_back(std::move(entry));
            continue;
        }

        bool may_fail = entry.expect == "parse-error" || entry.expect == "cycle-error";
        try {
            FormulaPtr body = parse_formula(entry.body_text);
            Definition d;
            d.name = entry.name;
            d.params = params;
            d.body = std::move(body);
            corpus.env.add(std::move(d));
        } catch (const parse_error& e) {
            if (!may_fail) throw;
            entry.load_failed = true;
            entry.load_error_kind = "parse-error";
            entry.load_error_message = e.what();
        } catch (const validation_error& e) {
            if (!may_fail) throw;
            entry.load_failed = true;
            entry.load_error_kind = "cycle-error";
            entry.load_error_message = e.what();
        }
        corpus.entries.push_back(std::move(entry));
    }
    return corpus;
}

Corpus load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw resource_error("cannot open corpus file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_corpus_text(buf.str());
}

std::string builtin_corpus_path() {
#ifdef GORDER_CORPUS_PATH
    return GORDER_CORPUS_PATH;
#else
    return "data/corpus.fo";
#endif
}

const Corpus& builtin_corpus() {
    static Corpus corpus = load_corpus(builtin_corpus_path());
    return corpus;
}

}  // namespace gorder::fo
