#include <doctest.h>

#include <map>
#include <vector>

#include "error_checks.hpp"
#include "fixtures.hpp"
#include "softmap/class_mapping.hpp"
#include "softmap/enumerate.hpp"
#include "softmap/medical_demo.hpp"

using namespace softmap;
using testutil::contains;
using testutil::soft_error_message;

namespace {

const std::map<std::string, std::string> kPointTable{{"a", "y"}, {"b", "z"}, {"c", "y"}};
const std::map<std::string, std::string> kAttrTable{
    {"e1", "e3p"}, {"e2", "e3p"}, {"e3", "e2p"}, {"e4", "e3p"}};

}  // namespace

TEST_CASE("mapping construction validates both tables") {
    const auto& src = fixtures::example_source();
    const auto& tgt = fixtures::example_target();

    CHECK_NOTHROW(ClassMapping(src, tgt, kPointTable, kAttrTable, MapMode::strict));

    auto u_missing = kPointTable;
    u_missing.erase("b");
    const auto msg1 = soft_error_message(Errc::partial_point_map, [&] {
        ClassMapping(src, tgt, u_missing, kAttrTable, MapMode::strict);
    });
    CHECK(contains(msg1, "\"b\""));
    // The point table must be total even in partial mode.
    soft_error_message(Errc::partial_point_map, [&] {
        ClassMapping(src, tgt, u_missing, kAttrTable, MapMode::partial);
    });

    auto p_missing = kAttrTable;
    p_missing.erase("e3");
    const auto msg2 = soft_error_message(Errc::partial_attribute_map, [&] {
        ClassMapping(src, tgt, kPointTable, p_missing, MapMode::strict);
    });
    CHECK(contains(msg2, "\"e3\""));
    CHECK_NOTHROW(ClassMapping(src, tgt, kPointTable, p_missing, MapMode::partial));

    auto u_bad_key = kPointTable;
    u_bad_key["q"] = "y";
    soft_error_message(Errc::unknown_element, [&] {
        ClassMapping(src, tgt, u_bad_key, kAttrTable, MapMode::strict);
    });
    auto u_bad_value = kPointTable;
    u_bad_value["a"] = "w";
    soft_error_message(Errc::unknown_element, [&] {
        ClassMapping(src, tgt, u_bad_value, kAttrTable, MapMode::strict);
    });
    auto p_bad_key = kAttrTable;
    p_bad_key["e9"] = "e1p";
    soft_error_message(Errc::unknown_attribute, [&] {
        ClassMapping(src, tgt, kPointTable, p_bad_key, MapMode::strict);
    });
    auto p_bad_value = kAttrTable;
    p_bad_value["e1"] = "e9";
    soft_error_message(Errc::unknown_attribute, [&] {
        ClassMapping(src, tgt, kPointTable, p_bad_value, MapMode::strict);
    });
}

TEST_CASE("name-based and index-based construction agree") {
    const ClassMapping by_name = fixtures::example_mapping();
    const ClassMapping by_index = ClassMapping::from_indexed(
        fixtures::example_source(), fixtures::example_target(), {1, 2, 1},
        {std::size_t{2}, std::size_t{2}, std::size_t{1}, std::size_t{2}}, MapMode::strict);
    CHECK(by_name == by_index);
    CHECK(by_name.map_element(0) == 1);
    CHECK(by_name.map_attribute(2) == 1);
}

TEST_CASE("forward image reproduces the worked example") {
    const ClassMapping f = fixtures::example_mapping();
    const SoftSet arg = fixtures::image_argument();

    const SoftSet raw_expected(fixtures::example_target(),
                               {{"e2p", {"y"}}, {"e3p", {"y", "z"}}});
    CHECK(image(f, arg, ResultMode::raw) == raw_expected);

    const SoftSet full_expected(fixtures::example_target(),
                                {{"e1p", {}}, {"e2p", {"y"}}, {"e3p", {"y", "z"}}});
    CHECK(image(f, arg, ResultMode::full) == full_expected);
}

TEST_CASE("inverse image reproduces the worked example") {
    const ClassMapping f = fixtures::example_mapping();
    const SoftSet arg = fixtures::preimage_argument();

    const SoftSet raw_expected(fixtures::example_source(), {{"e3", {"a", "c"}}});
    CHECK(preimage(f, arg, ResultMode::raw) == raw_expected);

    const SoftSet full_expected(fixtures::example_source(),
                                {{"e1", {}}, {"e2", {}}, {"e3", {"a", "c"}}, {"e4", {}}});
    CHECK(preimage(f, arg, ResultMode::full) == full_expected);
}

TEST_CASE("image of an intersection can lose elements the images keep") {
    const ClassMapping f = fixtures::example_mapping();
    const SoftSet left = fixtures::overlap_left();
    const SoftSet right = fixtures::overlap_right();

    const SoftSet left_image(fixtures::example_target(),
                             {{"e2p", {"y", "z"}}, {"e3p", {"y", "z"}}});
    const SoftSet right_image(fixtures::example_target(), {{"e2p", {"z"}}, {"e3p", {"y", "z"}}});
    CHECK(image(f, left, ResultMode::raw) == left_image);
    CHECK(image(f, right, ResultMode::raw) == right_image);

    const SoftSet narrowed(fixtures::example_target(), {{"e2p", {"z"}}, {"e3p", {"y"}}});
    CHECK(image(f, soft_intersection(left, right), ResultMode::raw) == narrowed);

    // Full mode: the image of the intersection sits strictly below the
    // pointwise intersection of the images.
    const SoftSet lhs = image(f, soft_intersection(left, right), ResultMode::full);
    const SoftSet rhs = combine_pointwise(image(f, left, ResultMode::full),
                                          image(f, right, ResultMode::full),
                                          PointwiseOp::intersect);
    CHECK(is_soft_subset(lhs, rhs));
    CHECK(!soft_equal(lhs, rhs));
    CHECK(!is_soft_subset(rhs, lhs));
}

TEST_CASE("images and preimages reject arguments from the wrong class") {
    const ClassMapping f = fixtures::example_mapping();
    const SoftSet source_set(fixtures::example_source(), {{"e1", {"a"}}});
    const SoftSet target_set(fixtures::example_target(), {{"e1p", {"x"}}});
    soft_error_message(Errc::context_mismatch, [&] { image(f, target_set, ResultMode::raw); });
    soft_error_message(Errc::context_mismatch, [&] { preimage(f, source_set, ResultMode::raw); });
}

TEST_CASE("unmapped attributes contribute nothing in partial mode") {
    auto table = kAttrTable;
    table.erase("e1");
    const ClassMapping f(fixtures::example_source(), fixtures::example_target(), kPointTable,
                         table, MapMode::partial);

    const SoftSet only_unmapped(fixtures::example_source(), {{"e1", {"a", "b"}}});
    CHECK(image(f, only_unmapped, ResultMode::raw).domain_empty());

    const SoftSet everything = full_absolute_soft_set(fixtures::example_target());
    const SoftSet pulled = preimage(f, everything, ResultMode::raw);
    CHECK(pulled.domain_names() == std::vector<std::string>{"e2", "e3", "e4"});
}

TEST_CASE("full mode is the raw result padded to the whole attribute space") {
    const auto src = make_bounded_context(2, 2, "x", "a");
    const auto tgt = make_bounded_context(2, 2, "y", "b");
    const auto sets = enumerate_soft_sets(src);
    const auto target_sets = enumerate_soft_sets(tgt);
    for (const ClassMapping& f : enumerate_class_mappings(src, tgt)) {
        for (const SoftSet& s : sets)
            CHECK(image(f, s, ResultMode::full) == extend_to_full(image(f, s, ResultMode::raw)));
        for (const SoftSet& t : target_sets)
            CHECK(preimage(f, t, ResultMode::full) ==
                  extend_to_full(preimage(f, t, ResultMode::raw)));
    }
}

TEST_CASE("images are monotone and preimages invert unions exactly") {
    const auto src = make_bounded_context(2, 2, "x", "a");
    const auto tgt = make_bounded_context(2, 2, "y", "b");
    const auto sets = enumerate_soft_sets(src);
    const auto target_sets = enumerate_soft_sets(tgt);
    for (const ClassMapping& f : enumerate_class_mappings(src, tgt)) {
        for (const SoftSet& s : sets)
            for (const SoftSet& t : sets) {
                if (!is_soft_subset(s, t)) continue;
                CHECK(is_soft_subset(image(f, s, ResultMode::full),
                                     image(f, t, ResultMode::full)));
            }
        for (const SoftSet& s : target_sets)
            for (const SoftSet& t : target_sets) {
                const SoftSet joined = preimage(f, soft_union(s, t), ResultMode::full);
                const SoftSet pointwise =
                    combine_pointwise(preimage(f, s, ResultMode::full),
                                      preimage(f, t, ResultMode::full), PointwiseOp::unite);
                CHECK(soft_equal(joined, pointwise));
            }
    }
}

TEST_CASE("pointwise combination always spans the full attribute space") {
    const SoftSet left = fixtures::overlap_left();
    const SoftSet right = fixtures::overlap_right();

    const SoftSet united = combine_pointwise(left, right, PointwiseOp::unite);
    CHECK(united.domain_size() == 4);
    CHECK(soft_equal(united, extend_to_full(soft_union(left, right))));

    const SoftSet met = combine_pointwise(left, right, PointwiseOp::intersect);
    CHECK(met.domain_size() == 4);
    CHECK(soft_equal(met, extend_to_full(soft_intersection(left, right))));

    const SoftSet target_set(fixtures::example_target(), {{"e1p", {"x"}}});
    soft_error_message(Errc::context_mismatch,
                       [&] { combine_pointwise(left, target_set, PointwiseOp::unite); });
}

TEST_CASE("the bundled diagnosis run matches the narrated case") {
    const MedicalDemo& data = medical_demo_data();
    CHECK(data.symptoms->universe_size() == 8);
    CHECK(data.symptoms->attribute_count() == 3);
    CHECK(data.causes->universe_size() == 6);
    CHECK(data.causes->attribute_count() == 2);
    CHECK(data.attribute_table.size() == 2);  // the low-importance grade is ungraded

    const MedicalDemoResult result = run_medical_demo(MapMode::partial);
    const SoftSet expected(data.causes, {{"e1p", {"alpha", "beta"}}, {"e2p", {"gamma"}}});
    CHECK(result.diagnosis == expected);
    CHECK(result.rendering ==
          "infrequent high potency = {acidity, blood pressure}\n"
          "frequent low potency = {fatigue}\n");

    const auto msg = soft_error_message(Errc::partial_attribute_map,
                                        [] { run_medical_demo(MapMode::strict); });
    CHECK(contains(msg, "\"e3\""));
}
