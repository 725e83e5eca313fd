#include <doctest.h>

#include <random>

#include "gorder/fo/corpus.hpp"
#include "gorder/fo/eval.hpp"
#include "gorder/fo/parser.hpp"
#include "gorder/fo/translate.hpp"
#include "gorder/harness.hpp"
#include "gorder/opres.hpp"
#include "gorder/predicates.hpp"

using namespace gorder;
using namespace gorder::fo;

namespace {

CanonicalGraph Ng(int k) { return CanonicalGraph::edgeless(k); }

EvalResult run(const std::string& name, std::vector<CanonicalGraph> args, int universe_n) {
    const Universe& uni = Universe::shared(universe_n);
    OracleSet oracles = make_oracle_set(uni);
    Evaluator ev(uni, builtin_corpus().env, &oracles);
    return ev.call(name, args);
}

}  // namespace

TEST_CASE("parsing the basic shapes") {
    auto f = parse_formula("K2 !<=s x");
    CHECK(f->kind == Formula::Kind::Not);
    CHECK(f->f1->kind == Formula::Kind::Rel);
    CHECK(f->f1->rel == GraphRel::LeqS);

    auto g = parse_formula("forall y . (N(y) -> (y <=s x <-> y <=s z))");
    CHECK(g->kind == Formula::Kind::Quant);
    CHECK(g->is_forall);
    CHECK(g->body->kind == Formula::Kind::Implies);

    CHECK_THROWS_AS(parse_formula("forall . x"), parse_error);
    CHECK_THROWS_AS(parse_formula("x <=s"), parse_error);
    CHECK_THROWS_AS(parse_formula("N[3"), parse_error);

    auto h = parse_formula("|x| = |n|*|n| + (|n|*(|n|+1))/2 + 2*|n|");
    CHECK(h->kind == Formula::Kind::Cmp);

    auto t = parse_formula("(C1[|i|] cup C[|j|]) <.i x");
    CHECK(t->kind == Formula::Kind::Rel);
    CHECK(t->rel == GraphRel::CovI);
    CHECK(t->t1->kind == GraphTerm::Kind::Cup);

    // a bar as disjunction next to cardinality bars
    auto d = parse_formula("x = emptyg | |x| = 3");
    CHECK(d->kind == Formula::Kind::Or);
}

TEST_CASE("free variables in first-use order") {
    auto f = parse_formula("forall z : |y| . (z <=s x -> z <=s y)");
    CHECK(free_variables(f) == std::vector<std::string>{"y", "x"});
}

TEST_CASE("print and reparse is the identity on the corpus") {
    const Corpus& corpus = builtin_corpus();
    int checked = 0;
    for (const auto& def : corpus.env.definitions()) {
        if (def.is_extern) continue;
        auto printed = print(def.body);
        auto reparsed = parse_formula(printed);
        CHECK(equal(def.body, reparsed));
        ++checked;
    }
    CHECK(checked > 50);
}

TEST_CASE("corpus loads with the expected failure records") {
    const Corpus& corpus = builtin_corpus();
    const CorpusEntry* pcs_ap = corpus.find("noPCSSap");
    REQUIRE(pcs_ap);
    CHECK(pcs_ap->load_failed);
    CHECK(pcs_ap->load_error_kind == "parse-error");

    const CorpusEntry* rec_ap = corpus.find("streeApRec");
    REQUIRE(rec_ap);
    CHECK(rec_ap->load_failed);
    CHECK(rec_ap->load_error_kind == "cycle-error");

    CHECK(corpus.env.find("soc") != nullptr);
    CHECK(corpus.env.find("GtildeS") != nullptr);
    CHECK(corpus.env.find("TfamI")->is_extern);
}

TEST_CASE("environment rejects bad definitions") {
    Environment env;
    CHECK_THROWS_AS(env.add({"f", {"x"}, parse_formula("g(x)"), false, ""}), validation_error);
    CHECK_THROWS_AS(env.add({"f", {"x"}, parse_formula("f(x)"), false, ""}), validation_error);
    CHECK_THROWS_AS(env.add({"f", {"x"}, parse_formula("x <=s y"), false, ""}), validation_error);
    env.add({"f", {"x"}, parse_formula("x = emptyg"), false, ""});
    CHECK_THROWS_AS(env.add({"f", {"x"}, parse_formula("x != emptyg"), false, ""}), validation_error);
    CHECK_THROWS_AS(env.add({"g", {"x"}, parse_formula("f(x, x)"), false, ""}), validation_error);
}

TEST_CASE("evaluation of the edgeless-family formula") {
    CHECK_FALSE(run("N", {make_named(NamedFamily::K, 2)}, 4).value);
    CHECK(run("N", {Ng(3)}, 4).value);
}

TEST_CASE("the least-element formula picks out the empty graph") {
    const Universe& u4 = Universe::shared(4);
    OracleSet oracles = make_oracle_set(u4);
    Evaluator ev(u4, builtin_corpus().env, &oracles);
    auto ext = ev.extension_of("defEmpty");
    REQUIRE(ext.size() == 1);
    CHECK(ext[0][0] == CanonicalGraph());
}

TEST_CASE("the clique formula holds exactly on cliques") {
    const Universe& u5 = Universe::shared(5);
    OracleSet oracles = make_oracle_set(u5);
    Evaluator ev(u5, builtin_corpus().env, &oracles);
    for (const auto& g : u5.members()) {
        CanonicalGraph args[] = {g};
        CHECK(ev.call("K", args).value == in_family(g, Family::K));
    }
}

TEST_CASE("extension of the path formula exposes the boundary members") {
    const Universe& u5 = Universe::shared(5);
    OracleSet oracles = make_oracle_set(u5);
    Evaluator ev(u5, builtin_corpus().env, &oracles);
    auto ext = ev.extension_of("P");
    std::vector<CanonicalGraph> got;
    for (auto& t : ext) got.push_back(t[0]);
    // the definition admits the empty graph and the single vertex
    std::vector<CanonicalGraph> want{CanonicalGraph(),
                                     Ng(1),
                                     make_named(NamedFamily::K, 2),
                                     make_named(NamedFamily::P, 3),
                                     make_named(NamedFamily::P, 4),
                                     make_named(NamedFamily::P, 5)};
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    CHECK(got == want);
}

TEST_CASE("the strict-order extension matches the small diagram closure") {
    const Universe& u3 = Universe::shared(3);
    Environment env;
    Evaluator ev(u3, env, nullptr);
    auto ext = ev.extension(parse_formula("x <i y"), 2);
    CHECK(ext.size() == 19);
    // determinism
    auto again = ev.extension(parse_formula("x <i y"), 2);
    CHECK(ext == again);
}

TEST_CASE("soc formula matches its oracle across the five-vertex universe") {
    const Universe& u6 = Universe::shared(6);
    OracleSet oracles = make_oracle_set(u6);
    Evaluator ev(u6, builtin_corpus().env, &oracles);
    const Universe& u5 = Universe::shared(5);
    for (const auto& g : u5.members()) {
        CanonicalGraph args[] = {g};
        CHECK(ev.call("soc", args).value == in_family(g, Family::Soc));
    }
}

TEST_CASE("bounded evaluation is stable under universe growth") {
    // arguments from U4, evaluated at margins 1 and 2: within the annotated
    // bounds the results must not move as the universe grows
    const Universe& u4 = Universe::shared(4);
    OracleSet o1 = make_oracle_set(Universe::shared(5));
    OracleSet o2 = make_oracle_set(Universe::shared(6));
    Evaluator ev1(Universe::shared(5), builtin_corpus().env, &o1);
    Evaluator ev2(Universe::shared(6), builtin_corpus().env, &o2);
    for (const auto& g : u4.members()) {
        CanonicalGraph args[] = {g};
        for (const char* name : {"soc", "T", "K", "P", "conn"})
            CHECK(ev1.call(name, args).value == ev2.call(name, args).value);
    }
}

TEST_CASE("truncation flags") {
    const Universe& u3 = Universe::shared(3);
    Environment env;
    Evaluator ev(u3, env, nullptr);
    // unbounded quantifier: flagged unless settled by a definite witness
    auto r1 = ev.evaluate(parse_formula("forall y . x <=s y"), {{"x", CanonicalGraph()}});
    CHECK(r1.value);
    CHECK(r1.truncated);
    auto r2 = ev.evaluate(parse_formula("forall y . x <=s y"), {{"x", Ng(1)}});
    CHECK_FALSE(r2.value);
    CHECK_FALSE(r2.truncated);  // refuted by an in-universe witness
    // bound exceeding the universe
    auto r3 = ev.evaluate(parse_formula("exists y : 9 . (x <s y & x !<=s y)"), {{"x", Ng(1)}});
    CHECK_FALSE(r3.value);
    CHECK(r3.truncated);
    // naturals-restricted quantifiers reach beyond the universe exactly
    auto r4 = ev.evaluate(parse_formula("exists y in N : 125 . |y| = 100"), {});
    CHECK(r4.value);
    CHECK_FALSE(r4.truncated);
}

TEST_CASE("evaluation errors") {
    const Universe& u3 = Universe::shared(3);
    Environment env;
    Evaluator ev(u3, env, nullptr);
    CHECK_THROWS_AS(ev.evaluate(parse_formula("x <=s y"), {{"x", Ng(1)}}), domain_error);
    CHECK_THROWS_AS(ev.evaluate(parse_formula("mystery(x)"), {{"x", Ng(1)}}), validation_error);
}

TEST_CASE("witness evaluations of the gadget formulas") {
    auto c3c3 = disjoint_union(make_named(NamedFamily::C, 3), make_named(NamedFamily::C, 3));
    CHECK(run("soc2", {c3c3, Ng(3), Ng(3)}, 6).value);
    CHECK_FALSE(run("soc2", {c3c3, Ng(3), Ng(4)}, 6).value);

    auto c4plus = make_named(NamedFamily::C1, 4);  // the order-1 presentation gadget
    CHECK(run("GtildeS", {c4plus}, 6).value);
    CHECK_FALSE(run("GtildeS", {make_named(NamedFamily::C, 5)}, 6).value);
    CHECK(run("GtildeI", {c4plus}, 6).value);
    CHECK_FALSE(run("GtildeI", {make_named(NamedFamily::C1, 5)}, 6).value);

    CHECK(run("constructFromCycles", {c4plus, Ng(1)}, 6).value);
    CHECK(run("psiOpresS", {c4plus, Ng(1)}, 6).value);
    CHECK_FALSE(run("psiOpresS", {c4plus, make_named(NamedFamily::K, 2)}, 6).value);
    CHECK(run("psiOpresI", {c4plus, Ng(1)}, 6).value);

    // quantifier-light, so the 11-vertex witness evaluates directly
    auto gadget = make_cp4c(4, 5);
    CHECK(run("CP4CI", {gadget, Ng(4), Ng(5)}, 5).value);
    CHECK_FALSE(run("CP4CI", {gadget, Ng(4), Ng(6)}, 5).value);
    CHECK_FALSE(run("CP4CI", {make_pointed_cycle_sum(4, 5), Ng(4), Ng(5)}, 5).value);
}

TEST_CASE("witness evaluation of the induced bicycle formula") {
    auto bi = make_bicycle(3, 4);
    CHECK(run("bicycleI", {bi}, 7).value);
    CHECK_FALSE(run("bicycleI", {make_bicycle(4, 4)}, 8).value);
    CHECK_FALSE(run("bicycleI", {make_pointed_cycle_sum(3, 3), }, 7).value);
    // the verbatim variant rejects the true bicycle
    CHECK_FALSE(run("bicycleIap", {bi}, 7).value);
}

TEST_CASE("witness evaluations of the counting formulas") {
    CHECK(run("countComps", {make_named(NamedFamily::P, 3), Ng(1)}, 6).value);
    CHECK_FALSE(run("countComps", {make_named(NamedFamily::P, 3), Ng(2)}, 6).value);
    CHECK(run("countEdgesConn", {make_named(NamedFamily::P, 3), Ng(2)}, 6).value);
    CHECK(run("countEdges", {disjoint_union(make_named(NamedFamily::K, 2), Ng(1)), Ng(1)}, 6).value);
    CHECK(run("sameSizeDef", {make_named(NamedFamily::K, 2), disjoint_union(make_named(NamedFamily::K, 2), Ng(1))}, 6).value);
    CHECK_FALSE(run("sameSizeDef", {make_named(NamedFamily::P, 3), make_named(NamedFamily::K, 3)}, 6).value);
}

TEST_CASE("witness evaluation of the square and multiplication formulas") {
    CHECK(run("psiSq", {Ng(4), Ng(2)}, 6).value);
    CHECK(run("psiSq", {Ng(1), Ng(1)}, 6).value);
    CHECK(run("psiSq", {Ng(0), Ng(0)}, 6).value);
    CHECK_FALSE(run("psiSq", {Ng(5), Ng(2)}, 6).value);
    CHECK(run("stree", {make_named(NamedFamily::P, 5), Ng(2)}, 6).value);
    CHECK(run("timesDef", {Ng(1), Ng(1), Ng(1)}, 7).value);
    CHECK(run("plusDef", {Ng(2), Ng(3), Ng(5)}, 6).value);
}

TEST_CASE("arithmetic translation") {
    using AF = ArithFormula;
    auto plus = AF::plus(ArithTerm::c(2), ArithTerm::c(3), ArithTerm::c(5));
    Universe nat = Universe::naturals(12);
    Environment env;
    Evaluator ev(nat, env, nullptr);
    CHECK(ev.evaluate(translate_arith(plus), {}).value);

    // exists y <= 10 . times(y, y, x) at x = 9
    auto sq = AF::quant(false, "y", 10, AF::times(ArithTerm::v("y"), ArithTerm::v("y"), ArithTerm::v("x")));
    auto rsq = ev.evaluate(translate_arith(sq), {{"x", Ng(9)}});
    CHECK(rsq.value);
    CHECK_FALSE(rsq.truncated);
    CHECK_FALSE(ev.evaluate(translate_arith(sq), {{"x", Ng(8)}}).value);

    std::mt19937 rng(4242);
    for (int i = 0; i < 40; ++i) {
        auto sentence = random_arith_sentence(rng, 3, 12);
        std::map<std::string, Natural> empty;
        bool direct = eval_arith_formula(sentence, empty);
        auto translated = translate_arith(sentence);
        auto rr = ev.evaluate(translated, {});
        CHECK(rr.value == direct);
        CHECK_FALSE(rr.truncated);
    }
}
