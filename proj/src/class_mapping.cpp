#include "softmap/class_mapping.hpp"

#include <algorithm>

#include "softmap/errors.hpp"

namespace softmap {

ClassMapping::ClassMapping(std::shared_ptr<const Context> source,
                           std::shared_ptr<const Context> target,
                           const std::map<std::string, std::string>& point_table,
                           const std::map<std::string, std::string>& attribute_table,
                           MapMode mode) {
    if (!source || !target) throw SoftError(Errc::schema_error, "mapping needs both contexts");

    std::vector<std::optional<std::size_t>> points(source->universe_size());
    for (const auto& [from, to] : point_table) {
        auto x = source->element_index(from);
        if (!x) {
            throw SoftError(Errc::unknown_element,
                            "u maps \"" + from + "\", which is not in the source universe");
        }
        auto y = target->element_index(to);
        if (!y) {
            throw SoftError(Errc::unknown_element,
                            "u sends \"" + from + "\" to \"" + to +
                                "\", which is not in the target universe");
        }
        points[*x] = *y;
    }
    std::vector<std::size_t> point_map;
    point_map.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!points[i]) {
            throw SoftError(Errc::partial_point_map,
                            "u has no entry for element \"" + source->element_name(i) + "\"");
        }
        point_map.push_back(*points[i]);
    }

    std::vector<std::optional<std::size_t>> attr_map(source->attribute_count());
    for (const auto& [from, to] : attribute_table) {
        auto a = source->attribute_index(from);
        if (!a) {
            throw SoftError(Errc::unknown_attribute,
                            "p maps \"" + from + "\", which is not a source attribute");
        }
        auto b = target->attribute_index(to);
        if (!b) {
            throw SoftError(Errc::unknown_attribute,
                            "p sends \"" + from + "\" to \"" + to +
                                "\", which is not a target attribute");
        }
        attr_map[*a] = *b;
    }
    if (mode == MapMode::strict) {
        for (std::size_t i = 0; i < attr_map.size(); ++i) {
            if (!attr_map[i]) {
                throw SoftError(Errc::partial_attribute_map,
                                "p has no entry for attribute \"" + source->attribute_name(i) +
                                    "\" (strict mode)");
            }
        }
    }

    source_ = std::move(source);
    target_ = std::move(target);
    point_map_ = std::move(point_map);
    attribute_map_ = std::move(attr_map);
    mode_ = mode;
}

ClassMapping ClassMapping::from_indexed(std::shared_ptr<const Context> source,
                                        std::shared_ptr<const Context> target,
                                        std::vector<std::size_t> point_map,
                                        std::vector<std::optional<std::size_t>> attribute_map,
                                        MapMode mode) {
    if (!source || !target) throw SoftError(Errc::schema_error, "mapping needs both contexts");
    if (point_map.size() != source->universe_size()) {
        throw SoftError(Errc::partial_point_map, "u must cover the whole source universe");
    }
    for (auto y : point_map) {
        if (y >= target->universe_size()) {
            throw SoftError(Errc::unknown_element, "u image index out of range");
        }
    }
    if (attribute_map.size() != source->attribute_count()) {
        throw SoftError(Errc::partial_attribute_map, "p table has the wrong length");
    }
    for (std::size_t i = 0; i < attribute_map.size(); ++i) {
        if (attribute_map[i]) {
            if (*attribute_map[i] >= target->attribute_count()) {
                throw SoftError(Errc::unknown_attribute, "p image index out of range");
            }
        } else if (mode == MapMode::strict) {
            throw SoftError(Errc::partial_attribute_map,
                            "p has no entry for attribute \"" + source->attribute_name(i) +
                                "\" (strict mode)");
        }
    }
    ClassMapping out;
    out.source_ = std::move(source);
    out.target_ = std::move(target);
    out.point_map_ = std::move(point_map);
    out.attribute_map_ = std::move(attribute_map);
    out.mode_ = mode;
    return out;
}

bool ClassMapping::operator==(const ClassMapping& other) const {
    return same_context(*source_, *other.source_) && same_context(*target_, *other.target_) &&
           point_map_ == other.point_map_ && attribute_map_ == other.attribute_map_ &&
           mode_ == other.mode_;
}

namespace {

std::vector<std::size_t> sorted_unique(std::vector<std::size_t> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

std::vector<std::size_t> push_through_points(const ClassMapping& f,
                                             const std::vector<std::size_t>& elements) {
    std::vector<std::size_t> out;
    out.reserve(elements.size());
    for (auto x : elements) out.push_back(f.map_element(x));
    return sorted_unique(std::move(out));
}

}  // namespace

SoftSet image(const ClassMapping& f, const SoftSet& arg, ResultMode mode) {
    if (!same_context(*arg.context(), *f.source())) {
        throw SoftError(Errc::context_mismatch, "image argument is not in the source class");
    }
    // Group the domain by mapped attribute, then push the collected
    // elements through the point table.
    std::map<std::size_t, std::vector<std::size_t>> collected;
    for (const auto& entry : arg.entries()) {
        auto beta = f.map_attribute(entry.attribute);
        if (!beta) continue;
        auto& acc = collected[*beta];
        acc.insert(acc.end(), entry.elements.begin(), entry.elements.end());
    }
    std::vector<SoftEntry> entries;
    entries.reserve(collected.size());
    for (auto& [beta, elements] : collected) {
        entries.push_back(SoftEntry{beta, push_through_points(f, sorted_unique(std::move(elements)))});
    }
    auto raw = SoftSet::from_indexed(f.target(), std::move(entries));
    return mode == ResultMode::raw ? raw : extend_to_full(raw);
}

SoftSet preimage(const ClassMapping& f, const SoftSet& arg, ResultMode mode) {
    if (!same_context(*arg.context(), *f.target())) {
        throw SoftError(Errc::context_mismatch, "preimage argument is not in the target class");
    }
    std::vector<SoftEntry> entries;
    for (std::size_t alpha = 0; alpha < f.source()->attribute_count(); ++alpha) {
        auto beta = f.map_attribute(alpha);
        if (!beta) continue;
        const auto* target_value = arg.value(*beta);
        if (!target_value) continue;
        std::vector<std::size_t> pulled;
        for (std::size_t x = 0; x < f.source()->universe_size(); ++x) {
            if (std::binary_search(target_value->begin(), target_value->end(), f.map_element(x))) {
                pulled.push_back(x);
            }
        }
        entries.push_back(SoftEntry{alpha, std::move(pulled)});
    }
    auto raw = SoftSet::from_indexed(f.source(), std::move(entries));
    return mode == ResultMode::raw ? raw : extend_to_full(raw);
}

SoftSet combine_pointwise(const SoftSet& a, const SoftSet& b, PointwiseOp op) {
    if (!same_context(*a.context(), *b.context())) {
        throw SoftError(Errc::context_mismatch,
                        "pointwise combination needs both soft sets over one soft class");
    }
    const auto& ctx = a.context();
    static const std::vector<std::size_t> kEmpty;
    std::vector<SoftEntry> entries;
    entries.reserve(ctx->attribute_count());
    for (std::size_t attr = 0; attr < ctx->attribute_count(); ++attr) {
        const auto* va = a.value(attr);
        const auto* vb = b.value(attr);
        const auto& left = va ? *va : kEmpty;
        const auto& right = vb ? *vb : kEmpty;
        std::vector<std::size_t> combined;
        if (op == PointwiseOp::unite) {
            std::set_union(left.begin(), left.end(), right.begin(), right.end(),
                           std::back_inserter(combined));
        } else {
            std::set_intersection(left.begin(), left.end(), right.begin(), right.end(),
                                  std::back_inserter(combined));
        }
        entries.push_back(SoftEntry{attr, std::move(combined)});
    }
    return SoftSet::from_indexed(ctx, std::move(entries));
}

}  // namespace softmap
