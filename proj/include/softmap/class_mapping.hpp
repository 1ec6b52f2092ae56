#ifndef SOFTMAP_CLASS_MAPPING_HPP
#define SOFTMAP_CLASS_MAPPING_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "softmap/soft_set.hpp"

namespace softmap {

/// Whether the attribute table must cover the whole source attribute space.
enum class MapMode { strict, partial };

/// Whether results keep the literal definition domain or are padded with
/// empty values to the full attribute space of the result class.
enum class ResultMode { raw, full };

enum class PointwiseOp { unite, intersect };

/// A mapping between two soft classes, induced by a point table on
/// elements and an attribute table on attributes.
///
/// The point table is always total. The attribute table is total in
/// strict mode; in partial mode unmapped attributes simply contribute
/// nothing to images and preimages.
class ClassMapping {
public:
    /// Validating constructor from name-based tables.
    /// Throws unknown_element / unknown_attribute for entries outside the
    /// declared contexts, partial_point_map when the point table misses an
    /// element, and partial_attribute_map in strict mode when the attribute
    /// table misses an attribute.
    ClassMapping(std::shared_ptr<const Context> source,
                 std::shared_ptr<const Context> target,
                 const std::map<std::string, std::string>& point_table,
                 const std::map<std::string, std::string>& attribute_table,
                 MapMode mode);

    /// Index-based constructor used by the enumerators; validates ranges.
    static ClassMapping from_indexed(std::shared_ptr<const Context> source,
                                     std::shared_ptr<const Context> target,
                                     std::vector<std::size_t> point_map,
                                     std::vector<std::optional<std::size_t>> attribute_map,
                                     MapMode mode);

    const std::shared_ptr<const Context>& source() const noexcept { return source_; }
    const std::shared_ptr<const Context>& target() const noexcept { return target_; }
    MapMode mode() const noexcept { return mode_; }

    /// Target element index of a source element.
    std::size_t map_element(std::size_t element) const { return point_map_.at(element); }
    /// Target attribute index, or nullopt when unmapped (partial mode).
    std::optional<std::size_t> map_attribute(std::size_t attribute) const {
        return attribute_map_.at(attribute);
    }

    const std::vector<std::size_t>& point_map() const noexcept { return point_map_; }
    const std::vector<std::optional<std::size_t>>& attribute_map() const noexcept {
        return attribute_map_;
    }

    bool operator==(const ClassMapping& other) const;

private:
    ClassMapping() = default;

    std::shared_ptr<const Context> source_;
    std::shared_ptr<const Context> target_;
    std::vector<std::size_t> point_map_;
    std::vector<std::optional<std::size_t>> attribute_map_;
    MapMode mode_ = MapMode::strict;
};

/// Forward image of a soft set under a class mapping.
///
/// raw: the result domain is the attribute-table image of the argument's
/// domain; each value collects the argument's values over the matching
/// attributes and pushes them through the point table.
/// full: the raw result padded to the whole target attribute space.
/// Throws context_mismatch when the argument is not in the source class.
SoftSet image(const ClassMapping& f, const SoftSet& arg, ResultMode mode);

/// Inverse image of a soft set under a class mapping.
///
/// raw: the result domain is the set of source attributes whose image lies
/// in the argument's domain; each value is the point-table preimage of the
/// argument's value at the mapped attribute.
/// full: the raw result padded to the whole source attribute space.
/// Throws context_mismatch when the argument is not in the target class.
SoftSet preimage(const ClassMapping& f, const SoftSet& arg, ResultMode mode);

/// Pointwise union or intersection over the full attribute space of the
/// shared context, treating attributes outside a domain as empty.
SoftSet combine_pointwise(const SoftSet& a, const SoftSet& b, PointwiseOp op);

}  // namespace softmap

#endif
