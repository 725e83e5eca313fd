#include <doctest.h>

#include "gorder/fo/corpus.hpp"
#include "gorder/harness.hpp"

using namespace gorder;

TEST_CASE("figure checks all pass") {
    for (const auto& check : figure_regressions()) {
        INFO(check.name, ": ", check.detail);
        CHECK(check.pass);
    }
}

TEST_CASE("conformance of the edgeless-family formula") {
    auto rep = conformance(fo::builtin_corpus(), "N", "is_N", 6, 0);
    CHECK(rep.disagreement_count == 0);
    CHECK(rep.agreements == 209);
    CHECK_FALSE(rep.truncated_any);
}

TEST_CASE("conformance of the minor-order subgraph formula") {
    auto rep = conformance(fo::builtin_corpus(), "subViaMinor", "leq_s_rel", 5, 0);
    CHECK(rep.disagreement_count == 0);
    CHECK(rep.agreements == 53 * 53);
}

TEST_CASE("as-printed variants demonstrably fail") {
    auto k2n2 = conformance(fo::builtin_corpus(), "defK2N2ap", "const_K2N2", 5, 0);
    CHECK(k2n2.disagreement_count > 0);

    auto csum = conformance(fo::builtin_corpus(), "csumSap", "csum_rel", 5, 1);
    CHECK(csum.disagreement_count > 0);
}

TEST_CASE("reports are reproducible") {
    auto r1 = conformance(fo::builtin_corpus(), "pac", "is_pac", 5, 0);
    auto r2 = conformance(fo::builtin_corpus(), "pac", "is_pac", 5, 0);
    auto j1 = report_to_json(r1), j2 = report_to_json(r2);
    j1.erase("timing");
    j2.erase("timing");
    CHECK(j1.dump() == j2.dump());
}

TEST_CASE("suite machinery on a small corpus") {
    std::string text = R"(
def tiny(x) := K2 !<=s x
  @oracle is_N
  @verify-n 3
  @exact
def tinyBad(x) := K2 !<=s x & x != N2
  @as-printed tiny
  @expect disagreement
  @oracle is_N
  @verify-n 3
  @exact
)";
    auto corpus = fo::load_corpus_text(text);
    auto result = run_suite(corpus, "quick");
    CHECK(result.ok);
    CHECK(result.reports.size() == 2);
    REQUIRE(result.confirmed_expected.size() == 1);
    auto j = suite_to_json(result);
    CHECK(j["ok"].get<bool>());
}

TEST_CASE("suite flags a genuinely wrong entry") {
    std::string text = R"(
def wrong(x) := K2 <=s x
  @oracle is_N
  @verify-n 3
  @exact
)";
    auto corpus = fo::load_corpus_text(text);
    auto result = run_suite(corpus, "quick");
    CHECK_FALSE(result.ok);
    CHECK(result.failures.size() == 1);
}
