#ifndef SOFTMAP_TESTS_FIXTURES_HPP
#define SOFTMAP_TESTS_FIXTURES_HPP

#include <memory>

#include "softmap/class_mapping.hpp"
#include "softmap/soft_set.hpp"

// The worked example used across the suite: a three-element universe mapped
// into another, four attributes mapped onto three, and a handful of soft
// sets whose images and preimages are known by hand.
namespace fixtures {

inline const std::shared_ptr<const softmap::Context>& example_source() {
    static const auto ctx = softmap::Context::make({"a", "b", "c"}, {"e1", "e2", "e3", "e4"});
    return ctx;
}

inline const std::shared_ptr<const softmap::Context>& example_target() {
    static const auto ctx = softmap::Context::make({"x", "y", "z"}, {"e1p", "e2p", "e3p"});
    return ctx;
}

inline softmap::ClassMapping example_mapping() {
    return softmap::ClassMapping(
        example_source(), example_target(), {{"a", "y"}, {"b", "z"}, {"c", "y"}},
        {{"e1", "e3p"}, {"e2", "e3p"}, {"e3", "e2p"}, {"e4", "e3p"}}, softmap::MapMode::strict);
}

/// Forward-image argument: image is {e2p -> {y}, e3p -> {y, z}} raw.
inline softmap::SoftSet image_argument() {
    return softmap::SoftSet(example_source(), {{"e2", {}}, {"e3", {"a"}}, {"e4", {"a", "b", "c"}}});
}

/// Inverse-image argument: preimage is {e3 -> {a, c}} raw.
inline softmap::SoftSet preimage_argument() {
    return softmap::SoftSet(example_target(), {{"e1p", {"x", "z"}}, {"e2p", {"y"}}});
}

/// Pair with overlapping domains whose image of the intersection is a
/// strict soft subset of the pointwise intersection of the images.
inline softmap::SoftSet overlap_left() {
    return softmap::SoftSet(example_source(),
                            {{"e1", {"c"}}, {"e2", {"b", "c"}}, {"e3", {"a", "b", "c"}}});
}

inline softmap::SoftSet overlap_right() {
    return softmap::SoftSet(
        example_source(), {{"e1", {"a"}}, {"e2", {"a", "c"}}, {"e3", {"b"}}, {"e4", {"b", "c"}}});
}

// The same objects as JSON documents, for driving the command line.

inline constexpr const char* kMappingJson =
    R"({"source":{"universe":["a","b","c"],"attributes":["e1","e2","e3","e4"]},)"
    R"("target":{"universe":["x","y","z"],"attributes":["e1p","e2p","e3p"]},)"
    R"("u":{"a":"y","b":"z","c":"y"},)"
    R"("p":{"e1":"e3p","e2":"e3p","e3":"e2p","e4":"e3p"},"mode":"strict"})";

inline constexpr const char* kImageArgumentJson =
    R"({"context":{"universe":["a","b","c"],"attributes":["e1","e2","e3","e4"]},)"
    R"("values":{"e2":[],"e3":["a"],"e4":["a","b","c"]}})";

inline constexpr const char* kPreimageArgumentJson =
    R"({"context":{"universe":["x","y","z"],"attributes":["e1p","e2p","e3p"]},)"
    R"("values":{"e1p":["x","z"],"e2p":["y"]}})";

inline constexpr const char* kOverlapLeftJson =
    R"({"context":{"universe":["a","b","c"],"attributes":["e1","e2","e3","e4"]},)"
    R"("values":{"e1":["c"],"e2":["b","c"],"e3":["a","b","c"]}})";

inline constexpr const char* kOverlapRightJson =
    R"({"context":{"universe":["a","b","c"],"attributes":["e1","e2","e3","e4"]},)"
    R"("values":{"e1":["a"],"e2":["a","c"],"e3":["b"],"e4":["b","c"]}})";

// Canonical serializations of the expected results.

inline constexpr const char* kImageRawExpected =
    R"({"context":{"attributes":["e1p","e2p","e3p"],"universe":["x","y","z"]},)"
    R"("values":{"e2p":["y"],"e3p":["y","z"]}})";

inline constexpr const char* kPreimageRawExpected =
    R"({"context":{"attributes":["e1","e2","e3","e4"],"universe":["a","b","c"]},)"
    R"("values":{"e3":["a","c"]}})";

}  // namespace fixtures

#endif
