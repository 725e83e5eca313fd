#include "gorder/harness.hpp"

#include <algorithm>
#include <chrono>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gorder/encoding.hpp"
#include "gorder/fo/eval.hpp"
#include "gorder/graph6.hpp"
#include "gorder/opres.hpp"
#include "gorder/orders.hpp"
#include "gorder/predicates.hpp"
#include "gorder/sequences.hpp"

namespace gorder {

namespace {

using Args = std::span<const CanonicalGraph>;

std::optional<int> cycle_param(const CanonicalGraph& g) {
    if (!g.is_edgeless()) return std::nullopt;
    if (g.order_n() < 3 || g.order_n() > LabelledGraph::kMaxVertices) return std::nullopt;
    return static_cast<int>(g.order_n());
}

std::optional<Natural> nat_param(const CanonicalGraph& g) {
    if (!g.is_edgeless()) return std::nullopt;
    return g.order_n();
}

bool gadget_chain_props(const CanonicalGraph& y, const CanonicalGraph& x) {
    if (!is_connected(x) || x.is_empty_graph()) return false;
    auto comps = components(y);
    if (std::find(comps.begin(), comps.end(), x) == comps.end()) return false;
    for (const auto& c : comps) {
        if (c.order_n() != x.order_n()) return false;
        if (!leq(OrderKind::Subgraph, x, c)) return false;
        bool complete = c.size_n() == c.order_n() * (c.order_n() - 1) / 2;
        if (complete) continue;
        bool has_cover = false;
        for (const auto& cp : comps)
            if (cover_kind_s(c, cp) == SubgraphCoverKind::EdgeCover) {
                has_cover = true;
                break;
            }
        if (!has_cover) return false;
    }
    return true;
}

std::map<std::string, Oracle> build_registry() {
    std::map<std::string, Oracle> reg;
    auto add = [&](const std::string& name, int arity, auto fn) {
        reg.emplace(name, Oracle{arity, std::function<bool(Args, const Universe&)>(fn)});
    };

    // families
    auto add_family = [&](const std::string& name, Family f) {
        add(name, 1, [f](Args a, const Universe&) { return in_family(a[0], f); });
    };
    add_family("is_empty", Family::EmptyG);
    add_family("is_N", Family::N);
    add_family("is_T", Family::T);
    add_family("is_P", Family::P);
    add_family("is_C", Family::C);
    add_family("is_K", Family::K);
    add_family("is_S", Family::S);
    add_family("is_forest", Family::Forest);
    add_family("is_pac", Family::Pac);
    add_family("is_soc", Family::Soc);
    add_family("is_conn", Family::Conn);
    add_family("is_C1", Family::C1);
    add_family("is_C2", Family::C2);
    add_family("is_bicycle", Family::Bicycle);
    add_family("is_uoc", Family::UnionOfCliques);
    add_family("is_double3star", Family::Double3star);

    // constants
    auto add_const = [&](const std::string& name, CanonicalGraph g) {
        add(name, 1, [g = std::move(g)](Args a, const Universe&) { return a[0] == g; });
    };
    add_const("const_N1", CanonicalGraph::edgeless(1));
    add_const("const_N2", CanonicalGraph::edgeless(2));
    add_const("const_N3", CanonicalGraph::edgeless(3));
    add_const("const_K2", make_named(NamedFamily::K, 2));
    add_const("const_K2N1", disjoint_union(make_named(NamedFamily::K, 2), CanonicalGraph::edgeless(1)));
    add_const("const_K2N2", disjoint_union(make_named(NamedFamily::K, 2), CanonicalGraph::edgeless(2)));
    add_const("const_P3", make_named(NamedFamily::P, 3));
    add_const("const_P3N1", disjoint_union(make_named(NamedFamily::P, 3), CanonicalGraph::edgeless(1)));
    add_const("const_S4", make_named(NamedFamily::S, 4));

    // binary relations
    add("same_card", 2, [](Args a, const Universe&) { return same_card(a[0], a[1]); });
    add("same_size", 2, [](Args a, const Universe&) { return same_size(a[0], a[1]); });
    add("leq_s_rel", 2, [](Args a, const Universe&) { return leq(OrderKind::Subgraph, a[0], a[1]); });
    add("maximal_comp", 2, [](Args a, const Universe&) { return maximal_comp(a[0], a[1]); });
    add("maximal_comp_i", 2, [](Args a, const Universe&) { return maximal_comp_induced(a[0], a[1]); });
    add("maximum_comp", 2, [](Args a, const Universe&) { return maximum_comp(a[0], a[1]); });
    add("comp_rel", 2, [](Args a, const Universe&) { return comp(a[0], a[1]); });
    add("mult_rel", 2, [](Args a, const Universe&) { return mult(a[0], a[1]); });
    add("add_vert", 2, [](Args a, const Universe&) { return add_vert(a[0], a[1]); });
    add("psi_sq", 2, [](Args a, const Universe&) { return psi_sq(a[0], a[1]); });
    add("extend_to_cliques_rel", 2, [](Args a, const Universe&) {
        if (a[1].symbolic()) return a[0] == a[1];
        return a[0] == extend_to_cliques(a[1]);
    });
    add("count_comps_rel", 2, [](Args a, const Universe&) {
        auto n = nat_param(a[1]);
        return n && count_comps(a[0]) == *n;
    });
    add("count_edges_conn_rel", 2, [](Args a, const Universe&) {
        auto n = nat_param(a[1]);
        return n && !a[0].is_empty_graph() && is_connected(a[0]) && a[0].size_n() == *n;
    });
    add("count_edges_rel", 2, [](Args a, const Universe&) {
        auto n = nat_param(a[1]);
        return n && count_edges(a[0]) == *n;
    });
    add("make_seq_uoc", 2, [](Args a, const Universe&) {
        auto n = nat_param(a[1]);
        if (!n || !union_of_cliques(a[0])) return false;
        if (a[0].symbolic()) return false;
        std::vector<Natural> profile;
        for (int i = 1; i <= a[0].order(); ++i)
            profile.emplace_back(max_copies(a[0], make_named(NamedFamily::K, i)));
        return ExpSequence::from_entries(std::move(profile)).packed() == *n;
    });
    add("construct_from_cycles", 2, [](Args a, const Universe&) { return construct_from_cycles(a[0], a[1]); });
    add("psi_opres", 2, [](Args a, const Universe&) { return psi_opres(a[0], a[1]); });
    add("is_opres", 1, [](Args a, const Universe&) { return recognize_opres(a[0]).has_value(); });
    add("csum_rel", 2, [](Args a, const Universe&) {
        auto n = nat_param(a[1]);
        return n && *n >= 1 && *n <= 16 && csum(a[0], static_cast<int>(*n));
    });
    add("psum_rel", 2, [](Args a, const Universe&) {
        auto n = nat_param(a[1]);
        return n && *n >= 1 && *n <= 16 && psum(a[0], static_cast<int>(*n));
    });
    add("csum_hook_rel", 2, [](Args a, const Universe&) {
        auto n = nat_param(a[1]);
        return n && *n >= 1 && *n <= 16 && csum_hook(a[0], static_cast<int>(*n));
    });
    add("stree_rel", 2, [](Args a, const Universe&) {
        // the depth-two construction is degenerate below n = 2, matching the
        // path condition in its defining formula
        auto n = nat_param(a[1]);
        if (!n || *n < 2 || *n > 7) return false;
        if (a[0].order_n() != *n * *n + 1) return false;
        return a[0] == stree(static_cast<int>(*n));
    });
    add("gadget_chain_rel", 2, [](Args a, const Universe&) { return gadget_chain_props(a[0], a[1]); });
    add("gadget_chain_min_rel", 2, [](Args a, const Universe& uni) {
        if (!gadget_chain_props(a[0], a[1])) return false;
        for (const auto& z : uni.members())
            if (lt(OrderKind::Subgraph, z, a[0]) && gadget_chain_props(z, a[1])) return false;
        return true;
    });

    // ternary relations
    add("mult_n_rel", 3, [](Args a, const Universe&) {
        auto n = nat_param(a[2]);
        return n && mult_n(a[0], a[1], *n);
    });
    add("max_copies_rel", 3, [](Args a, const Universe&) {
        auto n = nat_param(a[2]);
        if (!n) return false;
        if (!is_connected(a[1]) || a[1].is_empty_graph()) return false;
        return Natural(max_copies(a[0], a[1])) == *n;
    });
    add("disjoint_union_rel", 3, [](Args a, const Universe&) { return disjoint_union_check(a[0], a[1], a[2]); });
    add("soc2_rel", 3, [](Args a, const Universe&) {
        auto i = cycle_param(a[1]), j = cycle_param(a[2]);
        return i && j && soc2(a[0], *i, *j);
    });
    add("two_c1s_rel", 3, [](Args a, const Universe&) {
        auto i = cycle_param(a[1]), j = cycle_param(a[2]);
        return i && j && 3 < *i && *i < *j && two_c1s(a[0], *i, *j);
    });
    add("pcs_rel", 3, [](Args a, const Universe&) {
        auto i = cycle_param(a[1]), j = cycle_param(a[2]);
        return i && j && pointed_cycle_sum(a[0], *i, *j);
    });
    add("bicycle3_rel", 3, [](Args a, const Universe&) {
        auto i = cycle_param(a[1]), j = cycle_param(a[2]);
        return i && j && bicycle_of(a[0], *i, *j);
    });
    add("cp4c_rel", 3, [](Args a, const Universe&) {
        auto i = cycle_param(a[1]), j = cycle_param(a[2]);
        return i && j && 3 < *i && *i < *j && cp4c(a[0], *i, *j);
    });
    add("psi_plus", 3, [](Args a, const Universe&) { return psi_plus(a[0], a[1], a[2]); });
    add("psi_times", 3, [](Args a, const Universe&) { return psi_times(a[0], a[1], a[2]); });
    add("psi_edge_op", 3, [](Args a, const Universe&) {
        auto i = nat_param(a[1]), j = nat_param(a[2]);
        return i && j && psi_edge_op(a[0], *i, *j);
    });
    return reg;
}

}  // namespace

const std::map<std::string, Oracle>& oracle_registry() {
    static const std::map<std::string, Oracle> reg = build_registry();
    return reg;
}

fo::OracleSet make_oracle_set(const Universe& uni) {
    fo::OracleSet set;
    for (const auto& [name, oracle] : oracle_registry()) {
        auto fn = oracle.fn;
        set.add(name, oracle.arity,
                [fn, &uni](std::span<const CanonicalGraph> args) { return fn(args, uni); });
    }
    return set;
}

ConformanceReport conformance(const fo::Corpus& corpus, const std::string& formula_name,
                              const std::string& oracle_name, int n, int margin) {
    auto t0 = std::chrono::steady_clock::now();
    const fo::Definition* def = corpus.env.find(formula_name);
    if (!def) throw domain_error("conformance: unknown formula '" + formula_name + "'");
    auto oit = oracle_registry().find(oracle_name);
    if (oit == oracle_registry().end())
        throw domain_error("conformance: unknown oracle '" + oracle_name + "'");
    int arity = static_cast<int>(def->params.size());
    if (oit->second.arity != arity) throw domain_error("conformance: arity mismatch");
    if (n + margin > Universe::kHardLimit)
        throw resource_error("conformance: n + margin exceeds the enumeration limit");

    const Universe& tuple_uni = Universe::shared(n);
    const auto& mem = tuple_uni.members();
    long long total = 1;
    for (int k = 0; k < arity; ++k) total *= static_cast<long long>(mem.size());

    std::vector<fo::TermPtr> argterms;
    for (const auto& p : def->params) argterms.push_back(fo::GraphTerm::var(p));
    fo::FormulaPtr callf = fo::Formula::make_call(formula_name, std::move(argterms));

    ConformanceReport rep;
    rep.formula = formula_name;
    rep.oracle = oracle_name;
    if (const auto* entry = corpus.find(formula_name)) rep.citation = entry->cite;
    rep.universe_n = n;
    rep.margin = margin;
    rep.arity = arity;

    auto tuple_at = [&](long long flat, std::vector<CanonicalGraph>& out) {
        out.clear();
        for (int k = arity - 1; k >= 0; --k) {
            out.insert(out.begin(), mem[static_cast<std::size_t>(flat % mem.size())]);
            flat /= static_cast<long long>(mem.size());
        }
    };

    std::vector<std::vector<char>> value_at_margin;
    std::vector<char> truncated_flags(static_cast<std::size_t>(total), 0);
    for (int step = 0; step <= margin; ++step) {
        const Universe& eval_uni = Universe::shared(n + step);
        fo::OracleSet oracles = make_oracle_set(eval_uni);
        fo::Evaluator ev(eval_uni, corpus.env, &oracles);
        std::vector<char> values(static_cast<std::size_t>(total), 0);
#pragma omp parallel for schedule(dynamic, 16)
        for (long long t = 0; t < total; ++t) {
            std::vector<CanonicalGraph> tuple;
            tuple_at(t, tuple);
            fo::EvalResult r = ev.call(formula_name, tuple);
            values[static_cast<std::size_t>(t)] = r.value ? 1 : 0;
            if (step == margin && r.truncated) truncated_flags[static_cast<std::size_t>(t)] = 1;
        }
        value_at_margin.push_back(std::move(values));
    }

    for (int step = 1; step <= margin; ++step)
        rep.stable_at_margin.push_back(value_at_margin[static_cast<std::size_t>(step)] ==
                                       value_at_margin[static_cast<std::size_t>(step - 1)]);
    rep.truncated_any = std::find(truncated_flags.begin(), truncated_flags.end(), 1) != truncated_flags.end();

    const Universe& final_uni = Universe::shared(n + margin);
    const auto& final_values = value_at_margin.back();
    std::vector<CanonicalGraph> tuple;
    for (long long t = 0; t < total; ++t) {
        tuple_at(t, tuple);
        bool oracle_value = oit->second.fn(tuple, final_uni);
        bool formula_value = final_values[static_cast<std::size_t>(t)] != 0;
        if (oracle_value == formula_value) {
            ++rep.agreements;
        } else {
            ++rep.disagreement_count;
            if (rep.disagreements.size() < 20) {
                std::vector<std::string> g6tuple;
                for (const auto& g : tuple) g6tuple.push_back(to_graph6(g));
                rep.disagreements.push_back(std::move(g6tuple));
            }
        }
    }
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

nlohmann::json report_to_json(const ConformanceReport& r) {
    nlohmann::json j;
    j["schema"] = "gorder-conformance/1";
    j["formula"] = r.formula;
    j["oracle"] = r.oracle;
    j["citation"] = r.citation;
    j["n"] = r.universe_n;
    j["margin"] = r.margin;
    j["arity"] = r.arity;
    j["agreements"] = r.agreements;
    j["disagreement_count"] = r.disagreement_count;
    j["disagreements"] = r.disagreements;
    j["stable_at_margin"] = r.stable_at_margin;
    j["truncated"] = r.truncated_any;
    j["timing"] = {{"elapsed_seconds", r.elapsed_seconds}};
    return j;
}

SuiteResult run_suite(const fo::Corpus& corpus, const std::string& profile) {
    auto t0 = std::chrono::steady_clock::now();
    bool full = profile == "full";
    if (!full && profile != "quick") throw domain_error("unknown suite profile '" + profile + "'");

    SuiteResult res;
    for (const auto& entry : corpus.entries) {
        if (entry.is_extern) continue;
        if (entry.load_failed) {
            if (entry.expect == entry.load_error_kind) {
                res.confirmed_expected.push_back(entry.name + ": failed to load as expected (" +
                                                 entry.load_error_kind + ")");
            } else {
                res.failures.push_back(entry.name + ": unexpected load failure: " + entry.load_error_message);
            }
            continue;
        }
        if (entry.oracle_only || !entry.verify_n || entry.oracle.empty()) continue;

        int n = *entry.verify_n;
        if (full && n + 1 + entry.margin <= Universe::kHardLimit - 1) n += 1;
        ConformanceReport rep = conformance(corpus, entry.name, entry.oracle, n, entry.margin);
        res.reports.push_back(rep);

        if (entry.as_printed) {
            if (entry.expect == "disagreement" && rep.disagreement_count == 0)
                res.failures.push_back(entry.name + ": as-printed variant unexpectedly agrees with the oracle");
            else if (rep.disagreement_count > 0)
                res.confirmed_expected.push_back(entry.name + ": " + std::to_string(rep.disagreement_count) +
                                                 " disagreements, as expected");
        } else if (rep.disagreement_count > 0 && !entry.known_divergence) {
            res.failures.push_back(entry.name + ": " + std::to_string(rep.disagreement_count) +
                                   " disagreements at n=" + std::to_string(n));
        }
    }
    res.ok = res.failures.empty();
    res.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

nlohmann::json suite_to_json(const SuiteResult& r) {
    nlohmann::json j;
    j["schema"] = "gorder-suite/1";
    j["ok"] = r.ok;
    j["failures"] = r.failures;
    j["confirmed_expected"] = r.confirmed_expected;
    j["timing"] = {{"elapsed_seconds", r.elapsed_seconds}};
    j["reports"] = nlohmann::json::array();
    for (const auto& rep : r.reports) j["reports"].push_back(report_to_json(rep));
    return j;
}

namespace {

std::map<std::string, CanonicalGraph> small_named_graphs() {
    std::map<std::string, CanonicalGraph> g;
    auto L = [](int n, std::vector<std::pair<int, int>> edges) {
        return CanonicalGraph::of(LabelledGraph::from_edges(n, edges));
    };
    g["empty"] = CanonicalGraph();
    g["N1"] = CanonicalGraph::edgeless(1);
    g["N2"] = CanonicalGraph::edgeless(2);
    g["N3"] = CanonicalGraph::edgeless(3);
    g["N4"] = CanonicalGraph::edgeless(4);
    g["K2"] = L(2, {{1, 2}});
    g["K3"] = L(3, {{1, 2}, {2, 3}, {1, 3}});
    g["P3"] = L(3, {{1, 2}, {2, 3}});
    g["K2N1"] = L(3, {{1, 2}});
    g["K4"] = make_named(NamedFamily::K, 4);
    g["Kite4"] = L(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 3}});
    g["C4"] = make_named(NamedFamily::C, 4);
    g["Paw4"] = L(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}});
    g["K3N1"] = L(4, {{1, 2}, {2, 3}, {1, 3}});
    g["S4"] = make_named(NamedFamily::S, 4);
    g["P4"] = make_named(NamedFamily::P, 4);
    g["P3N1"] = L(4, {{1, 2}, {2, 3}});
    g["K2K2"] = L(4, {{1, 2}, {3, 4}});
    g["K2N2"] = L(4, {{1, 2}});
    return g;
}

const std::vector<std::pair<std::string, std::string>>& hasse_u4_edges() {
    static const std::vector<std::pair<std::string, std::string>> edges = {
        {"empty", "N1"},
        {"N1", "K2"}, {"N1", "N2"},
        {"K2", "K3"}, {"K2", "P3"}, {"K2", "K2N1"},
        {"N2", "P3"}, {"N2", "K2N1"}, {"N2", "N3"},
        {"K3", "K4"}, {"K3", "Kite4"}, {"K3", "Paw4"}, {"K3", "K3N1"},
        {"P3", "Kite4"}, {"P3", "C4"}, {"P3", "Paw4"}, {"P3", "S4"}, {"P3", "P4"}, {"P3", "P3N1"},
        {"K2N1", "Paw4"}, {"K2N1", "K3N1"}, {"K2N1", "P4"}, {"K2N1", "P3N1"}, {"K2N1", "K2K2"}, {"K2N1", "K2N2"},
        {"N3", "S4"}, {"N3", "P3N1"}, {"N3", "K2N2"}, {"N3", "N4"},
    };
    return edges;
}

}  // namespace

std::vector<FigureCheck> figure_regressions() {
    std::vector<FigureCheck> checks;
    auto named = small_named_graphs();
    auto push = [&](const std::string& name, bool pass, const std::string& detail) {
        checks.push_back({name, pass, detail});
    };

    // small Hasse diagrams of the induced order
    {
        const Universe& u3 = Universe::shared(3);
        bool pass = static_cast<int>(u3.members().size()) == 8;
        const Universe& u4 = Universe::shared(4);
        pass = pass && static_cast<int>(u4.members().size()) == 19;

        // expected edges restricted to <= 3 vertices (the first nine pairs)
        OrderMatrix m3 = OrderMatrix::build(u3, OrderKind::Induced);
        int found3 = 0;
        for (int i = 0; i < m3.size(); ++i)
            for (int j = 0; j < m3.size(); ++j)
                if (m3.covers(i, j)) ++found3;
        pass = pass && found3 == 9;
        push("hasse-u3", pass, "8 members, 9 cover edges");
    }
    {
        const Universe& u4 = Universe::shared(4);
        OrderMatrix m4 = OrderMatrix::build(u4, OrderKind::Induced);
        std::vector<std::pair<int, int>> got;
        for (int i = 0; i < m4.size(); ++i)
            for (int j = 0; j < m4.size(); ++j)
                if (m4.covers(i, j)) got.emplace_back(i, j);
        std::vector<std::pair<int, int>> want;
        bool lookup_ok = true;
        for (const auto& [a, b] : hasse_u4_edges()) {
            auto ia = u4.index_of(named.at(a)), ib = u4.index_of(named.at(b));
            if (!ia || !ib) {
                lookup_ok = false;
                break;
            }
            want.emplace_back(*ia, *ib);
        }
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        push("hasse-u4", lookup_ok && got == want,
             "the 29 drawn cover edges of the induced order on <=4 vertices");
    }
    // the three codes of the 3-path and the code chain
    {
        LabelledGraph p_a = LabelledGraph::from_edges(3, {{1, 2}, {2, 3}});
        LabelledGraph p_b = LabelledGraph::from_edges(3, {{2, 1}, {1, 3}});
        LabelledGraph p_c = LabelledGraph::from_edges(3, {{2, 3}, {3, 1}});
        bool pass = code_of(p_a) == 13 && code_of(p_b) == 11 && code_of(p_c) == 14;
        pass = pass && min_code(CanonicalGraph::of(p_a)) == 11;
        pass = pass && graph_of_number(11) == CanonicalGraph::edgeless(11);
        push("code-chain-p3", pass, "labelling codes {13,11,14}, minimum 11, N_11 image");
    }
    // the star gadget
    {
        OPresentation op = build_opres(make_star_labelled(4));
        bool pass = op.total.order_n() == 38;
        auto rec = recognize_opres(op.total);
        pass = pass && rec && rec->base_order == 4 &&
               CanonicalGraph::of(rec->labelled_base) == named.at("S4");
        pass = pass && indicator_cycles(named.at("S4")) == std::vector<int>{7, 8, 9, 10};
        push("opres-s4", pass, "38 vertices, cycles 7..10, base recovered");
    }
    // the edge-counting chain for the 4-star
    {
        CanonicalGraph gadget = build_count_edges_gadget(named.at("S4"));
        auto comps = components(gadget);
        bool pass = comps.size() == 4;
        if (pass) {
            CanonicalGraph paw = named.at("Paw4"), diamond = named.at("Kite4");
            std::vector<CanonicalGraph> want{named.at("S4"), paw, diamond, named.at("K4")};
            std::sort(want.begin(), want.end());
            pass = comps == want;
            pass = pass && cover_kind_s(named.at("S4"), paw) == SubgraphCoverKind::EdgeCover &&
                   cover_kind_s(paw, diamond) == SubgraphCoverKind::EdgeCover &&
                   cover_kind_s(diamond, named.at("K4")) == SubgraphCoverKind::EdgeCover;
        }
        push("edge-chain-s4", pass, "chain S4, S4+e, S4+2e, K4 with successive edge covers");
    }
    // completing components to cliques
    {
        CanonicalGraph x = disjoint_union(CanonicalGraph::edgeless(1), named.at("P3"));
        x = disjoint_union(x, named.at("K3"));
        x = disjoint_union(x, named.at("S4"));
        x = disjoint_union(x, make_named(NamedFamily::C, 5));
        CanonicalGraph want = CanonicalGraph::edgeless(1);
        want = disjoint_union(want, named.at("K3"));
        want = disjoint_union(want, named.at("K3"));
        want = disjoint_union(want, named.at("K4"));
        want = disjoint_union(want, make_named(NamedFamily::K, 5));
        push("clique-completion", extend_to_cliques(x) == want,
             "K1 u P3 u K3 u S4 u C5 completes to K1 u K3 u K3 u K4 u K5");
    }
    return checks;
}

nlohmann::json figures_to_json(const std::vector<FigureCheck>& checks) {
    nlohmann::json j;
    j["schema"] = "gorder-figures/1";
    bool ok = true;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        ok = ok && c.pass;
    }
    j["ok"] = ok;
    return j;
}

}  // namespace gorder
