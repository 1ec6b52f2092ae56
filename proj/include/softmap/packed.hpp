#ifndef SOFTMAP_PACKED_HPP
#define SOFTMAP_PACKED_HPP

#include <array>
#include <cstdint>
#include <vector>

namespace softmap::packed {

/// Bit-packed soft sets for the bounded exhaustive sweeps. Universe and
/// attribute space are limited to kMaxBound names each, so element subsets
/// and attribute domains fit in 16-bit masks and every operation is a few
/// mask instructions. Bit i corresponds to the context's i-th name.
inline constexpr std::size_t kMaxBound = 4;

struct SoftSetBits {
    std::uint16_t domain = 0;                       // attribute mask
    std::array<std::uint16_t, kMaxBound> value{};   // element mask per attribute, 0 outside domain

    friend bool operator==(const SoftSetBits&, const SoftSetBits&) = default;
};

inline SoftSetBits unite(const SoftSetBits& a, const SoftSetBits& b) {
    SoftSetBits out;
    out.domain = a.domain | b.domain;
    for (std::size_t i = 0; i < kMaxBound; ++i) out.value[i] = a.value[i] | b.value[i];
    return out;
}

/// Valid only when the domains overlap; the caller checks.
inline SoftSetBits intersect(const SoftSetBits& a, const SoftSetBits& b) {
    SoftSetBits out;
    out.domain = a.domain & b.domain;
    for (std::size_t i = 0; i < kMaxBound; ++i) out.value[i] = a.value[i] & b.value[i];
    return out;
}

inline bool subset(const SoftSetBits& a, const SoftSetBits& b) {
    if (a.domain & ~b.domain) return false;
    for (std::size_t i = 0; i < kMaxBound; ++i)
        if (a.value[i] & ~b.value[i]) return false;
    return true;
}

/// A total mapping pair between bounded classes, with the point table
/// precomputed as mask-to-mask lookup tables in both directions.
struct MappingBits {
    std::array<std::uint8_t, kMaxBound> point{};  // element -> target element
    std::array<std::uint8_t, kMaxBound> attr{};   // attribute -> target attribute
    std::array<std::uint16_t, 1u << kMaxBound> point_image{};     // element mask -> target mask
    std::array<std::uint16_t, 1u << kMaxBound> point_preimage{};  // target mask -> element mask

    void build_tables(std::size_t n_elems, std::size_t n_target_elems);
};

/// Full-mode forward image over a target class with n_target_attrs
/// attributes; the result domain is the whole target attribute space.
SoftSetBits image_full(const MappingBits& f, const SoftSetBits& arg, std::size_t n_attrs,
                       std::size_t n_target_attrs);

/// Full-mode inverse image over the source class.
SoftSetBits preimage_full(const MappingBits& f, const SoftSetBits& arg, std::size_t n_attrs);

/// Every soft set over a (n_elems, n_attrs) class, in canonical order:
/// domains by increasing size then lexicographic index tuple, then value
/// assignments as an odometer over the domain with the last attribute
/// cycling fastest and each subset counted in ascending mask order.
std::vector<SoftSetBits> enumerate_soft_sets(std::size_t n_elems, std::size_t n_attrs);

/// Every total mapping pair, ordered with the point table as the outer
/// odometer and the attribute table as the inner one; within a table the
/// last name cycles fastest.
std::vector<MappingBits> enumerate_mappings(std::size_t n_elems, std::size_t n_attrs,
                                            std::size_t n_target_elems,
                                            std::size_t n_target_attrs);

/// Attribute subsets of {0..n-1} ordered by size then lexicographic tuple.
std::vector<std::uint16_t> domain_masks_in_order(std::size_t n);

}  // namespace softmap::packed

#endif
