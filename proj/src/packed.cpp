#include "softmap/packed.hpp"

#include <algorithm>

namespace softmap::packed {

void MappingBits::build_tables(std::size_t n_elems, std::size_t n_target_elems) {
    const std::uint32_t source_masks = 1u << n_elems;
    const std::uint32_t target_masks = 1u << n_target_elems;
    for (std::uint32_t mask = 0; mask < source_masks; ++mask) {
        std::uint16_t img = 0;
        for (std::size_t x = 0; x < n_elems; ++x) {
            if (mask & (1u << x)) img |= static_cast<std::uint16_t>(1u << point[x]);
        }
        point_image[mask] = img;
    }
    for (std::uint32_t mask = 0; mask < target_masks; ++mask) {
        std::uint16_t pre = 0;
        for (std::size_t x = 0; x < n_elems; ++x) {
            if (mask & (1u << point[x])) pre |= static_cast<std::uint16_t>(1u << x);
        }
        point_preimage[mask] = pre;
    }
}

SoftSetBits image_full(const MappingBits& f, const SoftSetBits& arg, std::size_t n_attrs,
                       std::size_t n_target_attrs) {
    SoftSetBits out;
    out.domain = static_cast<std::uint16_t>((1u << n_target_attrs) - 1u);
    for (std::size_t beta = 0; beta < n_target_attrs; ++beta) {
        std::uint16_t acc = 0;
        for (std::size_t alpha = 0; alpha < n_attrs; ++alpha) {
            if (f.attr[alpha] == beta && (arg.domain & (1u << alpha))) acc |= arg.value[alpha];
        }
        out.value[beta] = f.point_image[acc];
    }
    return out;
}

SoftSetBits preimage_full(const MappingBits& f, const SoftSetBits& arg, std::size_t n_attrs) {
    SoftSetBits out;
    out.domain = static_cast<std::uint16_t>((1u << n_attrs) - 1u);
    for (std::size_t alpha = 0; alpha < n_attrs; ++alpha) {
        const auto beta = f.attr[alpha];
        out.value[alpha] =
            (arg.domain & (1u << beta)) ? f.point_preimage[arg.value[beta]] : std::uint16_t{0};
    }
    return out;
}

std::vector<std::uint16_t> domain_masks_in_order(std::size_t n) {
    std::vector<std::uint16_t> masks;
    masks.reserve(1u << n);
    for (std::uint32_t m = 0; m < (1u << n); ++m) masks.push_back(static_cast<std::uint16_t>(m));
    auto tuple_of = [n](std::uint16_t mask) {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) out.push_back(i);
        return out;
    };
    std::sort(masks.begin(), masks.end(), [&](std::uint16_t a, std::uint16_t b) {
        const auto ta = tuple_of(a), tb = tuple_of(b);
        if (ta.size() != tb.size()) return ta.size() < tb.size();
        return ta < tb;
    });
    return masks;
}

std::vector<SoftSetBits> enumerate_soft_sets(std::size_t n_elems, std::size_t n_attrs) {
    const std::uint32_t value_count = 1u << n_elems;  // subsets of the universe
    std::vector<SoftSetBits> out;
    for (const auto domain : domain_masks_in_order(n_attrs)) {
        std::vector<std::size_t> attrs;
        for (std::size_t i = 0; i < n_attrs; ++i)
            if (domain & (1u << i)) attrs.push_back(i);

        SoftSetBits current;
        current.domain = domain;
        // Odometer over the domain, last attribute fastest.
        std::vector<std::uint32_t> digits(attrs.size(), 0);
        bool more = true;
        while (more) {
            for (std::size_t k = 0; k < attrs.size(); ++k)
                current.value[attrs[k]] = static_cast<std::uint16_t>(digits[k]);
            out.push_back(current);

            more = false;
            for (std::size_t pos = attrs.size(); pos > 0;) {
                --pos;
                if (++digits[pos] < value_count) {
                    more = true;
                    break;
                }
                digits[pos] = 0;
            }
        }
    }
    return out;
}

std::vector<MappingBits> enumerate_mappings(std::size_t n_elems, std::size_t n_attrs,
                                            std::size_t n_target_elems,
                                            std::size_t n_target_attrs) {
    std::vector<MappingBits> out;
    std::vector<std::uint8_t> u(n_elems, 0), p(n_attrs, 0);
    bool more_u = true;
    while (more_u) {
        std::fill(p.begin(), p.end(), 0);
        bool more_p = true;
        while (more_p) {
            MappingBits f;
            std::copy(u.begin(), u.end(), f.point.begin());
            std::copy(p.begin(), p.end(), f.attr.begin());
            f.build_tables(n_elems, n_target_elems);
            out.push_back(f);

            more_p = false;
            for (std::size_t pos = n_attrs; pos > 0;) {
                --pos;
                if (++p[pos] < n_target_attrs) {
                    more_p = true;
                    break;
                }
                p[pos] = 0;
            }
        }
        more_u = false;
        for (std::size_t pos = n_elems; pos > 0;) {
            --pos;
            if (++u[pos] < n_target_elems) {
                more_u = true;
                break;
            }
            u[pos] = 0;
        }
    }
    return out;
}

}  // namespace softmap::packed
