#include "softmap/enumerate.hpp"

#include <string>

#include "softmap/errors.hpp"
#include "softmap/packed.hpp"

namespace softmap {

namespace {

void check_bounds(std::size_t n_elems, std::size_t n_attrs) {
    if (n_elems > kEnumerationBound || n_attrs > kEnumerationBound) {
        throw SoftError(Errc::bounds_exceeded,
                        "enumeration is limited to " + std::to_string(kEnumerationBound) +
                            " elements and attributes");
    }
}

std::uint64_t ipow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < exp; ++i) out *= base;
    return out;
}

}  // namespace

std::uint64_t soft_set_count(std::size_t n_elems, std::size_t n_attrs) {
    // Sum over parameter sets A of (2^|X|)^|A|, which closes to (1 + 2^|X|)^|E|.
    return ipow(1 + ipow(2, n_elems), n_attrs);
}

std::uint64_t class_mapping_count(std::size_t n_elems, std::size_t n_attrs,
                                  std::size_t n_target_elems, std::size_t n_target_attrs) {
    if (n_target_elems == 0 && n_elems > 0) {
        throw SoftError(Errc::empty_target, "no total point map into an empty universe");
    }
    if (n_target_attrs == 0 && n_attrs > 0) {
        throw SoftError(Errc::empty_target, "no total attribute map into an empty space");
    }
    return ipow(n_target_elems, n_elems) * ipow(n_target_attrs, n_attrs);
}

SoftSet soft_set_from_bits(std::shared_ptr<const Context> context,
                           const packed::SoftSetBits& bits) {
    std::vector<SoftEntry> entries;
    for (std::size_t a = 0; a < context->attribute_count(); ++a) {
        if (!(bits.domain & (1u << a))) continue;
        SoftEntry entry;
        entry.attribute = a;
        for (std::size_t x = 0; x < context->universe_size(); ++x) {
            if (bits.value[a] & (1u << x)) entry.elements.push_back(x);
        }
        entries.push_back(std::move(entry));
    }
    return SoftSet::from_indexed(std::move(context), std::move(entries));
}

std::vector<SoftSet> enumerate_soft_sets(std::shared_ptr<const Context> context) {
    check_bounds(context->universe_size(), context->attribute_count());
    auto packed_sets = packed::enumerate_soft_sets(context->universe_size(),
                                                   context->attribute_count());
    std::vector<SoftSet> out;
    out.reserve(packed_sets.size());
    for (const auto& bits : packed_sets) out.push_back(soft_set_from_bits(context, bits));
    return out;
}

ClassMapping class_mapping_from_bits(std::shared_ptr<const Context> source,
                                     std::shared_ptr<const Context> target,
                                     const packed::MappingBits& bits) {
    std::vector<std::size_t> point_map(source->universe_size());
    for (std::size_t x = 0; x < point_map.size(); ++x) point_map[x] = bits.point[x];
    std::vector<std::optional<std::size_t>> attr_map(source->attribute_count());
    for (std::size_t a = 0; a < attr_map.size(); ++a) attr_map[a] = bits.attr[a];
    return ClassMapping::from_indexed(std::move(source), std::move(target), std::move(point_map),
                                      std::move(attr_map), MapMode::strict);
}

std::vector<ClassMapping> enumerate_class_mappings(std::shared_ptr<const Context> source,
                                                   std::shared_ptr<const Context> target) {
    check_bounds(source->universe_size(), source->attribute_count());
    check_bounds(target->universe_size(), target->attribute_count());
    class_mapping_count(source->universe_size(), source->attribute_count(),
                        target->universe_size(), target->attribute_count());
    auto packed_maps =
        packed::enumerate_mappings(source->universe_size(), source->attribute_count(),
                                   target->universe_size(), target->attribute_count());
    std::vector<ClassMapping> out;
    out.reserve(packed_maps.size());
    for (const auto& bits : packed_maps) {
        out.push_back(class_mapping_from_bits(source, target, bits));
    }
    return out;
}

std::shared_ptr<const Context> make_bounded_context(std::size_t n_elems, std::size_t n_attrs,
                                                    const std::string& element_prefix,
                                                    const std::string& attribute_prefix) {
    std::vector<std::string> universe, attributes;
    for (std::size_t i = 0; i < n_elems; ++i) universe.push_back(element_prefix + std::to_string(i));
    for (std::size_t i = 0; i < n_attrs; ++i)
        attributes.push_back(attribute_prefix + std::to_string(i));
    return Context::make(std::move(universe), std::move(attributes));
}

}  // namespace softmap
