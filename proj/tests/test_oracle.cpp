#include <doctest.h>

#include <array>
#include <cstdint>
#include <vector>

#include "error_checks.hpp"
#include "softmap/codec.hpp"
#include "softmap/enumerate.hpp"
#include "softmap/law.hpp"
#include "softmap/oracle.hpp"

using namespace softmap;
using testutil::soft_error_message;

namespace {

std::vector<LawId> holding_laws() {
    std::vector<LawId> out;
    for (const auto& entry : law_catalog())
        if (!entry.refutation_target) out.push_back(entry.id);
    return out;
}

std::vector<LawId> every_law() {
    std::vector<LawId> out;
    for (const auto& entry : law_catalog()) out.push_back(entry.id);
    return out;
}

const LawReport& report_for(const std::vector<LawReport>& reports, LawId id) {
    for (const auto& r : reports)
        if (r.law == id) return r;
    REQUIRE(false);
    return reports.front();
}

}  // namespace

TEST_CASE("no identity is violated over the largest default class pair") {
    const auto src = make_bounded_context(2, 2, "x", "a");
    const auto tgt = make_bounded_context(2, 2, "y", "b");
    ExhaustiveOptions options;
    options.laws = holding_laws();
    const auto reports = run_exhaustive(src, tgt, options);
    REQUIRE(reports.size() == 10);
    for (const auto& r : reports) {
        CHECK(r.violations.empty());
        CHECK(r.instances > 0);
    }

    // 16 mappings; 25 soft sets per side; 625 ordered pairs plus 64 sampled
    // triples for the family laws; 544 pairs with overlapping domains; 196
    // pairs in soft containment.
    CHECK(report_for(reports, LawId::L1).instances == 16);
    CHECK(report_for(reports, LawId::L2).instances == 16);
    CHECK(report_for(reports, LawId::L6).instances == 16);
    CHECK(report_for(reports, LawId::L7).instances == 16);
    CHECK(report_for(reports, LawId::L3).instances == 16 * (625 + 64));
    CHECK(report_for(reports, LawId::L8).instances == 16 * (625 + 64));
    CHECK(report_for(reports, LawId::L5).instances == 16 * 196);
    CHECK(report_for(reports, LawId::L10).instances == 16 * 196);
    CHECK(report_for(reports, LawId::L4).instances >= 16 * 544);
    CHECK(report_for(reports, LawId::L4).instances <= 16 * (544 + 64));
    CHECK(report_for(reports, LawId::L9).instances >= 16 * 544);
    CHECK(report_for(reports, LawId::L9).instances <= 16 * (544 + 64));
}

TEST_CASE("the three engines produce byte-identical reports") {
    const std::vector<std::array<std::size_t, 4>> combos{
        {1, 1, 1, 1}, {1, 2, 2, 1}, {2, 1, 1, 2}, {2, 2, 2, 2}};
    for (const auto& [nx, ny, ne, nep] : combos) {
        const auto src = make_bounded_context(nx, ne, "x", "a");
        const auto tgt = make_bounded_context(ny, nep, "y", "b");
        ExhaustiveOptions options;
        options.laws = every_law();  // include the violated inclusions
        options.engine = OracleEngine::reference;
        const auto reference = serialize_document(run_exhaustive(src, tgt, options));
        options.engine = OracleEngine::packed;
        CHECK(serialize_document(run_exhaustive(src, tgt, options)) == reference);
        options.engine = OracleEngine::packed_parallel;
        CHECK(serialize_document(run_exhaustive(src, tgt, options)) == reference);
    }
}

TEST_CASE("two runs of one sweep serialize identically") {
    const auto src = make_bounded_context(2, 2, "x", "a");
    const auto tgt = make_bounded_context(2, 1, "y", "b");
    ExhaustiveOptions options;
    options.laws = every_law();
    const auto first = serialize_document(run_exhaustive(src, tgt, options));
    const auto second = serialize_document(run_exhaustive(src, tgt, options));
    CHECK(first == second);
}

TEST_CASE("reports come back in catalog order regardless of request order") {
    const auto src = make_bounded_context(1, 1, "x", "a");
    const auto tgt = make_bounded_context(1, 1, "y", "b");
    ExhaustiveOptions options;
    options.laws = {LawId::N2, LawId::L1, LawId::L7};
    const auto reports = run_exhaustive(src, tgt, options);
    REQUIRE(reports.size() == 3);
    CHECK(reports[0].law == LawId::L1);
    CHECK(reports[1].law == LawId::L7);
    CHECK(reports[2].law == LawId::N2);

    options.laws = {};
    CHECK(run_exhaustive(src, tgt, options).empty());
}

TEST_CASE("violations are sorted, self-consistent, and re-checkable") {
    const auto src = make_bounded_context(1, 2, "x", "a");
    const auto tgt = make_bounded_context(1, 1, "y", "b");
    ExhaustiveOptions options;
    options.laws = {LawId::N2};
    const auto reports = run_exhaustive(src, tgt, options);
    REQUIRE(reports.size() == 1);
    REQUIRE(!reports[0].violations.empty());

    std::uint64_t previous = 0;
    bool first = true;
    for (const auto& violation : reports[0].violations) {
        if (!first) CHECK(violation.index > previous);
        previous = violation.index;
        first = false;

        const Witness& w = violation.witness;
        CHECK(w.law == LawId::N2);
        CHECK(w.verdict == Verdict::violated);
        REQUIRE(w.arguments.size() == 2);
        const Witness again = check_law(w.law, w.mapping, w.arguments);
        CHECK(again.verdict == Verdict::violated);
        CHECK(soft_equal(again.lhs, w.lhs));
        CHECK(soft_equal(again.rhs, w.rhs));
    }
}

TEST_CASE("the family sampling budget is deterministic and bounded") {
    const auto src = make_bounded_context(1, 1, "x", "a");
    const auto tgt = make_bounded_context(1, 1, "y", "b");
    ExhaustiveOptions options;
    options.laws = {LawId::L3};

    // 3 soft sets: 9 ordered pairs; 27 ordered triples, all within the
    // default budget.
    const auto full = run_exhaustive(src, tgt, options);
    CHECK(full[0].instances == 9 + 27);

    options.family_samples = 0;
    CHECK(run_exhaustive(src, tgt, options)[0].instances == 9);

    options.family_samples = 4;  // stride 27/4 = 6: triples 0, 6, 12, 18
    CHECK(run_exhaustive(src, tgt, options)[0].instances == 9 + 4);
}

TEST_CASE("counterexample search returns the first witness in order") {
    const auto src = make_bounded_context(1, 1, "x", "a");
    const auto wide_tgt = make_bounded_context(1, 2, "y", "b");

    const auto found = search_counterexample(LawId::N1, src, wide_tgt);
    REQUIRE(found.has_value());
    CHECK(found->law == LawId::N1);
    CHECK(found->verdict == Verdict::violated);
    CHECK(found->arguments.empty());
    // The very first mapping already misses one target attribute.
    CHECK(found->mapping.map_element(0) == 0);
    CHECK(found->mapping.map_attribute(0) == 0);
    const SoftSet expected_rhs(wide_tgt, {{"b0", {"y0"}}, {"b1", {}}});
    CHECK(soft_equal(found->lhs, full_absolute_soft_set(wide_tgt)));
    CHECK(soft_equal(found->rhs, expected_rhs));
}

TEST_CASE("counterexample search pins the smallest witness sizes") {
    const auto one = make_bounded_context(1, 1, "x", "a");
    const auto one_tgt = make_bounded_context(1, 1, "y", "b");
    CHECK(!search_counterexample(LawId::N1, one, one_tgt).has_value());
    CHECK(!search_counterexample(LawId::N2, one, one_tgt).has_value());
    CHECK(!search_counterexample(LawId::L1, one, one_tgt).has_value());

    const auto two_attrs = make_bounded_context(1, 2, "x", "a");
    const auto found = search_counterexample(LawId::N2, two_attrs, one_tgt);
    REQUIRE(found.has_value());
    REQUIRE(found->arguments.size() == 2);
    CHECK(found->arguments[0] == SoftSet(two_attrs, {{"a0", {"x0"}}}));
    CHECK(found->arguments[1] == SoftSet(two_attrs, {{"a0", {}}, {"a1", {"x0"}}}));
    CHECK(soft_equal(found->lhs, SoftSet(one_tgt, {{"b0", {"y0"}}})));
    CHECK(soft_equal(found->rhs, SoftSet(one_tgt, {{"b0", {}}})));
}

TEST_CASE("sweeps refuse oversized or degenerate class pairs") {
    const auto big = make_bounded_context(5, 1, "x", "a");
    const auto small = make_bounded_context(1, 1, "y", "b");
    const auto no_elements = make_bounded_context(0, 1, "y", "b");
    ExhaustiveOptions options;
    options.laws = {LawId::L1};
    soft_error_message(Errc::bounds_exceeded, [&] { run_exhaustive(big, small, options); });
    soft_error_message(Errc::empty_target, [&] { run_exhaustive(small, no_elements, options); });
    soft_error_message(Errc::bounds_exceeded,
                       [&] { search_counterexample(LawId::N1, big, small); });
}
