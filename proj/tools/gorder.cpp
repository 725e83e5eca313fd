#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gorder/encoding.hpp"
#include "gorder/fo/corpus.hpp"
#include "gorder/fo/eval.hpp"
#include "gorder/fo/parser.hpp"
#include "gorder/graph6.hpp"
#include "gorder/harness.hpp"
#include "gorder/opres.hpp"
#include "gorder/orders.hpp"
#include "gorder/predicates.hpp"
#include "gorder/sequences.hpp"

using namespace gorder;
using nlohmann::json;

namespace {

CanonicalGraph parse_graph_or_number(const std::string& arg) {
    if (arg.rfind("g6:", 0) == 0) return CanonicalGraph::of(from_graph6(arg.substr(3)));
    if (!arg.empty() && std::isdigit(static_cast<unsigned char>(arg[0])))
        return CanonicalGraph::edgeless(Natural(arg));
    return CanonicalGraph::of(from_graph6(arg));
}

std::vector<Natural> parse_csv_naturals(const std::string& text) {
    std::vector<Natural> out;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',') {
            if (!cur.empty()) out.emplace_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    return out;
}

std::string format_entries(const ExpSequence& s) {
    std::string out;
    for (std::size_t i = 0; i < s.length(); ++i) {
        if (i) out += ",";
        out += s.entries()[i].str();
    }
    return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph-order toolkit: enumeration, orders, codes, gadgets and the formula harness"};
    app.require_subcommand(1);

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "enumerate all isomorphism types up to a size");
    int enum_n = 5;
    std::string enum_out;
    bool enum_serial = false;
    cmd_enum->add_option("--n", enum_n, "maximum vertex count (hard limit 8)")->required();
    cmd_enum->add_option("--out", enum_out, "write a universe cache file");
    cmd_enum->add_flag("--serial", enum_serial, "use the serial reference kernel");
    cmd_enum->callback([&] {
        Universe u = enum_serial ? Universe::enumerate_serial(enum_n) : Universe::enumerate(enum_n);
        json j;
        j["n"] = enum_n;
        j["members"] = u.members().size();
        json per = json::array();
        for (int k = 0; k <= enum_n; ++k) per.push_back(u.count_at(k));
        j["per_cardinality"] = per;
        if (!enum_out.empty()) {
            u.save(enum_out);
            j["cache"] = enum_out;
        }
        emit(j);
    });

    // order check / matrix
    auto* cmd_order = app.add_subcommand("order", "order relations");
    auto* cmd_check = cmd_order->add_subcommand("check", "compare two graphs");
    std::string check_kind = "s", arg_g, arg_h;
    cmd_check->add_option("--kind", check_kind, "s, i or m");
    cmd_check->add_option("first", arg_g, "first graph (graph6, optional g6: prefix)")->required();
    cmd_check->add_option("second", arg_h, "second graph")->required();
    cmd_check->callback([&] {
        OrderKind kind = order_kind_from_string(check_kind);
        auto g = parse_graph_or_number(arg_g), h = parse_graph_or_number(arg_h);
        json j;
        j["kind"] = check_kind;
        j["leq"] = leq(kind, g, h);
        j["geq"] = leq(kind, h, g);
        j["covers"] = covers_fast(kind, g, h);
        emit(j);
    });
    auto* cmd_matrix = cmd_order->add_subcommand("matrix", "pairwise tables over a universe");
    std::string matrix_kind = "i", matrix_out;
    int matrix_n = 4;
    bool matrix_serial = false;
    cmd_matrix->add_option("--kind", matrix_kind, "s, i or m");
    cmd_matrix->add_option("--n", matrix_n, "universe size");
    cmd_matrix->add_option("--out", matrix_out, "output file (default stdout)");
    cmd_matrix->add_flag("--serial", matrix_serial, "use the serial reference kernel");
    cmd_matrix->callback([&] {
        const Universe& u = Universe::shared(matrix_n);
        OrderKind kind = order_kind_from_string(matrix_kind);
        OrderMatrix m = matrix_serial ? OrderMatrix::build_serial(u, kind) : OrderMatrix::build(u, kind);
        std::string text = m.to_json(u);
        if (matrix_out.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(matrix_out);
            out << text;
            std::cerr << "wrote " << matrix_out << "\n";
        }
    });

    // encode / decode
    auto* cmd_encode = app.add_subcommand("encode", "minimum code of a graph");
    std::string encode_arg;
    cmd_encode->add_option("graph", encode_arg, "graph6")->required();
    cmd_encode->callback([&] {
        auto g = parse_graph_or_number(encode_arg);
        std::cout << min_code(g).str() << "\n";
    });
    auto* cmd_decode = app.add_subcommand("decode", "graph of a code value");
    std::string decode_arg;
    cmd_decode->add_option("value", decode_arg, "decimal code")->required();
    cmd_decode->callback([&] {
        auto g = decode_code(Natural(decode_arg));
        if (!g) throw domain_error("value is not a graph code");
        std::cout << to_graph6(*g) << "\n";
    });

    // seq
    auto* cmd_seq = app.add_subcommand("seq", "exponent-sequence arithmetic");
    auto* cmd_f1 = cmd_seq->add_subcommand("f1", "counts -> cumulative copy profile");
    auto* cmd_f1inv = cmd_seq->add_subcommand("f1inv", "profile -> counts");
    std::string seq_arg1, seq_arg2;
    cmd_f1->add_option("entries", seq_arg1, "comma-separated entries")->required();
    cmd_f1->callback([&] {
        auto s = ExpSequence::from_entries(parse_csv_naturals(seq_arg1));
        std::cout << format_entries(counts_to_copies(s)) << "\n";
    });
    cmd_f1inv->add_option("entries", seq_arg2, "comma-separated entries")->required();
    cmd_f1inv->callback([&] {
        auto s = ExpSequence::from_entries(parse_csv_naturals(seq_arg2));
        std::cout << format_entries(copies_to_counts(s)) << "\n";
    });

    // pred
    auto* cmd_pred = app.add_subcommand("pred", "structural oracles");
    auto* cmd_eval = cmd_pred->add_subcommand("eval", "evaluate a named oracle");
    std::string pred_name;
    std::vector<std::string> pred_args;
    int pred_universe = 6;
    cmd_eval->add_option("name", pred_name, "oracle name (see the registry)")->required();
    cmd_eval->add_option("args", pred_args, "graphs (g6:...) or numbers (N_k)")->required();
    cmd_eval->add_option("--universe", pred_universe, "context for minimality scans");
    cmd_eval->callback([&] {
        const auto& reg = oracle_registry();
        auto it = reg.find(pred_name);
        if (it == reg.end()) {
            std::string names;
            for (const auto& [n, o] : reg) names += n + " ";
            throw domain_error("unknown oracle '" + pred_name + "'; available: " + names);
        }
        std::vector<CanonicalGraph> tuple;
        for (const auto& a : pred_args) tuple.push_back(parse_graph_or_number(a));
        if (static_cast<int>(tuple.size()) != it->second.arity)
            throw domain_error("oracle expects " + std::to_string(it->second.arity) + " arguments");
        json j;
        j["oracle"] = pred_name;
        j["result"] = it->second.fn(tuple, Universe::shared(pred_universe));
        emit(j);
    });

    // opres
    auto* cmd_opres = app.add_subcommand("opres", "presentation gadgets");
    auto* cmd_build = cmd_opres->add_subcommand("build", "build the gadget of a labelled base");
    std::string build_arg, build_labelling;
    cmd_build->add_option("graph", build_arg, "base graph (graph6; its labelling is used)")->required();
    cmd_build->add_option("--labelling", build_labelling, "permutation like 2,1,3 applied first");
    cmd_build->callback([&] {
        LabelledGraph base = parse_graph_arg(build_arg);
        if (!build_labelling.empty()) {
            std::vector<int> perm;
            for (const auto& v : parse_csv_naturals(build_labelling)) perm.push_back(static_cast<int>(v));
            base = base.relabelled(perm);
        }
        std::cout << to_graph6(build_opres(base).total) << "\n";
    });
    auto* cmd_dec = cmd_opres->add_subcommand("decode", "recover the labelled base");
    std::string dec_arg;
    cmd_dec->add_option("graph", dec_arg, "gadget (graph6)")->required();
    cmd_dec->callback([&] {
        auto op = recognize_opres(parse_graph_or_number(dec_arg));
        json j;
        if (!op) {
            j["recognised"] = false;
        } else {
            j["recognised"] = true;
            j["n"] = op->base_order;
            json edges = json::array();
            for (auto [u, v] : op->labelled_base.edge_list()) edges.push_back({u, v});
            j["edges"] = edges;
        }
        emit(j);
    });

    // fo
    auto* cmd_fo = app.add_subcommand("fo", "bounded formula evaluation");
    auto* cmd_foeval = cmd_fo->add_subcommand("eval", "evaluate a formula");
    auto* cmd_foext = cmd_fo->add_subcommand("extension", "satisfying tuples over a universe");
    int fo_universe = 5;
    std::string fo_env, fo_formula;
    std::vector<std::string> fo_args;
    for (auto* c : {cmd_foeval, cmd_foext}) {
        c->add_option("--universe", fo_universe, "universe size");
        c->add_option("--env", fo_env, "corpus file (default: the shipped one)");
    }
    cmd_foeval->add_option("formula", fo_formula, "formula text")->required();
    cmd_foeval->add_option("args", fo_args, "graphs bound to free variables in first-use order");
    cmd_foext->add_option("formula", fo_formula, "formula text")->required();
    auto with_eval = [&](auto&& body) {
        const fo::Corpus& corpus = fo_env.empty() ? fo::builtin_corpus() : fo::load_corpus(fo_env);
        static std::optional<fo::Corpus> owned;
        const fo::Corpus* use = &corpus;
        if (!fo_env.empty()) {
            owned = fo::load_corpus(fo_env);
            use = &*owned;
        }
        const Universe& uni = Universe::shared(fo_universe);
        fo::OracleSet oracles = make_oracle_set(uni);
        fo::Evaluator ev(uni, use->env, &oracles);
        body(ev);
    };
    cmd_foeval->callback([&] {
        with_eval([&](fo::Evaluator& ev) {
            auto f = fo::parse_formula(fo_formula);
            auto vars = fo::free_variables(f);
            if (vars.size() != fo_args.size())
                throw domain_error("formula has " + std::to_string(vars.size()) + " free variables, got " +
                                   std::to_string(fo_args.size()) + " arguments");
            fo::Assignment asg;
            for (std::size_t i = 0; i < vars.size(); ++i)
                asg.emplace_back(vars[i], parse_graph_or_number(fo_args[i]));
            auto r = ev.evaluate(f, asg);
            json j;
            j["value"] = r.value;
            j["truncated"] = r.truncated;
            emit(j);
        });
    });
    cmd_foext->callback([&] {
        with_eval([&](fo::Evaluator& ev) {
            auto f = fo::parse_formula(fo_formula);
            auto vars = fo::free_variables(f);
            auto ext = ev.extension(f, static_cast<int>(vars.size()));
            json j;
            j["variables"] = vars;
            json tuples = json::array();
            for (const auto& t : ext) {
                json row = json::array();
                for (const auto& g : t) row.push_back(to_graph6(g));
                tuples.push_back(row);
            }
            j["tuples"] = tuples;
            j["count"] = ext.size();
            emit(j);
        });
    });

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run the conformance suite");
    std::string verify_profile = "quick", verify_json;
    cmd_verify->add_option("--profile", verify_profile, "quick or full");
    cmd_verify->add_option("--json", verify_json, "write the full report");
    cmd_verify->callback([&] {
        auto result = run_suite(fo::builtin_corpus(), verify_profile);
        for (const auto& rep : result.reports)
            std::cout << (rep.disagreement_count == 0 ? "ok   " : "FAIL ") << rep.formula << " vs "
                      << rep.oracle << "  n=" << rep.universe_n << " m=" << rep.margin << "  agreements="
                      << rep.agreements << " disagreements=" << rep.disagreement_count << "\n";
        for (const auto& line : result.confirmed_expected) std::cout << "ok   " << line << "\n";
        for (const auto& line : result.failures) std::cout << "FAIL " << line << "\n";
        std::cout << (result.ok ? "suite: ok" : "suite: FAILURES") << " (" << result.elapsed_seconds
                  << " s)\n";
        if (!verify_json.empty()) {
            std::ofstream out(verify_json);
            out << suite_to_json(result).dump(2) << "\n";
        }
        if (!result.ok) throw CLI::RuntimeError(1);
    });

    // figures
    auto* cmd_fig = app.add_subcommand("figures", "pinned worked-example regressions");
    cmd_fig->callback([&] {
        auto checks = figure_regressions();
        bool ok = true;
        for (const auto& c : checks) {
            std::cout << (c.pass ? "ok   " : "FAIL ") << c.name << ": " << c.detail << "\n";
            ok = ok && c.pass;
        }
        if (!ok) throw CLI::RuntimeError(1);
    });

    try {
        CLI11_PARSE(app, argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
