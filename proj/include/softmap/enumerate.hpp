#ifndef SOFTMAP_ENUMERATE_HPP
#define SOFTMAP_ENUMERATE_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "softmap/class_mapping.hpp"
#include "softmap/soft_set.hpp"

namespace softmap {

/// Largest universe or attribute-space size the enumerators accept.
inline constexpr std::size_t kEnumerationBound = 4;

/// Number of soft sets over a class: (1 + 2^|X|)^|E|.
std::uint64_t soft_set_count(std::size_t n_elems, std::size_t n_attrs);

/// Number of total mapping pairs: |Y|^|X| * |E'|^|E|.
/// Throws SoftError(empty_target) when no total map exists.
std::uint64_t class_mapping_count(std::size_t n_elems, std::size_t n_attrs,
                                  std::size_t n_target_elems, std::size_t n_target_attrs);

/// Every soft set over the context, each exactly once, in canonical order
/// (domains by size then lexicographic, values in ascending mask order with
/// the last attribute cycling fastest).
/// Throws SoftError(bounds_exceeded) beyond kEnumerationBound.
std::vector<SoftSet> enumerate_soft_sets(std::shared_ptr<const Context> context);

/// Every strict mapping pair between the two contexts, each exactly once.
/// Throws bounds_exceeded beyond kEnumerationBound and empty_target when
/// the target lacks names a total table needs.
std::vector<ClassMapping> enumerate_class_mappings(std::shared_ptr<const Context> source,
                                                   std::shared_ptr<const Context> target);

/// Canonical bounded context with names prefix0..prefixN-1 for each side.
std::shared_ptr<const Context> make_bounded_context(std::size_t n_elems, std::size_t n_attrs,
                                                    const std::string& element_prefix,
                                                    const std::string& attribute_prefix);

namespace packed {
struct SoftSetBits;
struct MappingBits;
}  // namespace packed

/// Rebuild a name-based soft set from its packed form.
SoftSet soft_set_from_bits(std::shared_ptr<const Context> context,
                           const packed::SoftSetBits& bits);

/// Rebuild a name-based mapping pair from its packed form.
ClassMapping class_mapping_from_bits(std::shared_ptr<const Context> source,
                                     std::shared_ptr<const Context> target,
                                     const packed::MappingBits& bits);

}  // namespace softmap

#endif
