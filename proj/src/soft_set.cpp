#include "softmap/soft_set.hpp"

#include <algorithm>
#include <iterator>

#include "softmap/errors.hpp"

namespace softmap {

namespace {

std::vector<std::size_t> sorted_unique(std::vector<std::size_t> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

std::vector<std::size_t> set_union(const std::vector<std::size_t>& a,
                                   const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<std::size_t> set_intersection(const std::vector<std::size_t>& a,
                                          const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_includes(const std::vector<std::size_t>& big, const std::vector<std::size_t>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

void require_same_context(const SoftSet& f, const SoftSet& g, const char* op) {
    if (!same_context(*f.context(), *g.context())) {
        throw SoftError(Errc::context_mismatch,
                        std::string(op) + " needs both soft sets over one soft class");
    }
}

std::vector<std::size_t> all_element_indices(const Context& ctx) {
    std::vector<std::size_t> out(ctx.universe_size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
    return out;
}

std::vector<std::size_t> attribute_indices_of(const Context& ctx,
                                              const std::vector<std::string>& names) {
    std::vector<std::size_t> out;
    out.reserve(names.size());
    for (const auto& name : names) {
        auto idx = ctx.attribute_index(name);
        if (!idx) {
            throw SoftError(Errc::unknown_attribute, "\"" + name + "\" is not an attribute");
        }
        out.push_back(*idx);
    }
    return sorted_unique(std::move(out));
}

}  // namespace

SoftSet::SoftSet(std::shared_ptr<const Context> context,
                 const std::map<std::string, std::vector<std::string>>& assignments) {
    if (!context) throw SoftError(Errc::schema_error, "soft set needs a context");
    std::vector<SoftEntry> entries;
    entries.reserve(assignments.size());
    for (const auto& [attr_name, element_names] : assignments) {
        auto attr = context->attribute_index(attr_name);
        if (!attr) {
            throw SoftError(Errc::unknown_attribute,
                            "\"" + attr_name + "\" is not an attribute of the context");
        }
        SoftEntry entry;
        entry.attribute = *attr;
        entry.elements.reserve(element_names.size());
        for (const auto& elem_name : element_names) {
            auto elem = context->element_index(elem_name);
            if (!elem) {
                throw SoftError(Errc::unknown_element,
                                "\"" + elem_name + "\" is not an element of the universe");
            }
            entry.elements.push_back(*elem);
        }
        entry.elements = sorted_unique(std::move(entry.elements));
        entries.push_back(std::move(entry));
    }
    *this = from_indexed(std::move(context), std::move(entries));
}

SoftSet SoftSet::from_indexed(std::shared_ptr<const Context> context,
                              std::vector<SoftEntry> entries) {
    if (!context) throw SoftError(Errc::schema_error, "soft set needs a context");
    std::sort(entries.begin(), entries.end(),
              [](const SoftEntry& a, const SoftEntry& b) { return a.attribute < b.attribute; });
    for (std::size_t i = 0; i < entries.size(); ++i) {
        auto& entry = entries[i];
        if (entry.attribute >= context->attribute_count()) {
            throw SoftError(Errc::unknown_attribute,
                            "attribute index " + std::to_string(entry.attribute) + " out of range");
        }
        if (i > 0 && entries[i - 1].attribute == entry.attribute) {
            throw SoftError(Errc::duplicate_name,
                            "attribute \"" + context->attribute_name(entry.attribute) +
                                "\" assigned twice");
        }
        entry.elements = sorted_unique(std::move(entry.elements));
        if (!entry.elements.empty() && entry.elements.back() >= context->universe_size()) {
            throw SoftError(Errc::unknown_element,
                            "element index " + std::to_string(entry.elements.back()) +
                                " out of range");
        }
    }
    SoftSet out;
    out.context_ = std::move(context);
    out.entries_ = std::move(entries);
    return out;
}

bool SoftSet::has_attribute(std::size_t attribute) const { return value(attribute) != nullptr; }

const std::vector<std::size_t>* SoftSet::value(std::size_t attribute) const {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), attribute,
        [](const SoftEntry& e, std::size_t a) { return e.attribute < a; });
    if (it == entries_.end() || it->attribute != attribute) return nullptr;
    return &it->elements;
}

std::vector<std::size_t> SoftSet::domain() const {
    std::vector<std::size_t> out;
    out.reserve(entries_.size());
    for (const auto& entry : entries_) out.push_back(entry.attribute);
    return out;
}

std::vector<std::string> SoftSet::domain_names() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& entry : entries_) out.push_back(context_->attribute_name(entry.attribute));
    return out;
}

std::vector<std::string> SoftSet::value_names(std::size_t attribute) const {
    const auto* elems = value(attribute);
    std::vector<std::string> out;
    if (!elems) return out;
    out.reserve(elems->size());
    for (auto e : *elems) out.push_back(context_->element_name(e));
    return out;
}

bool SoftSet::operator==(const SoftSet& other) const {
    return same_context(*context_, *other.context_) && entries_ == other.entries_;
}

SoftSet null_soft_set_indexed(std::shared_ptr<const Context> context,
                              std::vector<std::size_t> attributes) {
    std::vector<SoftEntry> entries;
    entries.reserve(attributes.size());
    for (auto a : attributes) entries.push_back(SoftEntry{a, {}});
    return SoftSet::from_indexed(std::move(context), std::move(entries));
}

SoftSet null_soft_set(std::shared_ptr<const Context> context,
                      const std::vector<std::string>& attributes) {
    auto idx = attribute_indices_of(*context, attributes);
    return null_soft_set_indexed(std::move(context), std::move(idx));
}

SoftSet full_null_soft_set(std::shared_ptr<const Context> context) {
    std::vector<std::size_t> all(context->attribute_count());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return null_soft_set_indexed(std::move(context), std::move(all));
}

SoftSet absolute_soft_set_indexed(std::shared_ptr<const Context> context,
                                  std::vector<std::size_t> attributes) {
    auto everything = all_element_indices(*context);
    std::vector<SoftEntry> entries;
    entries.reserve(attributes.size());
    for (auto a : attributes) entries.push_back(SoftEntry{a, everything});
    return SoftSet::from_indexed(std::move(context), std::move(entries));
}

SoftSet absolute_soft_set(std::shared_ptr<const Context> context,
                          const std::vector<std::string>& attributes) {
    auto idx = attribute_indices_of(*context, attributes);
    return absolute_soft_set_indexed(std::move(context), std::move(idx));
}

SoftSet full_absolute_soft_set(std::shared_ptr<const Context> context) {
    std::vector<std::size_t> all(context->attribute_count());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return absolute_soft_set_indexed(std::move(context), std::move(all));
}

bool is_soft_subset(const SoftSet& f, const SoftSet& g) {
    require_same_context(f, g, "soft subset");
    for (const auto& entry : f.entries()) {
        const auto* other = g.value(entry.attribute);
        if (!other) return false;
        if (!set_includes(*other, entry.elements)) return false;
    }
    return true;
}

bool soft_equal(const SoftSet& f, const SoftSet& g) {
    return is_soft_subset(f, g) && is_soft_subset(g, f);
}

SoftSet soft_union(const SoftSet& f, const SoftSet& g) {
    require_same_context(f, g, "soft union");
    std::vector<SoftEntry> entries;
    auto fi = f.entries().begin(), fe = f.entries().end();
    auto gi = g.entries().begin(), ge = g.entries().end();
    while (fi != fe || gi != ge) {
        if (gi == ge || (fi != fe && fi->attribute < gi->attribute)) {
            entries.push_back(*fi++);
        } else if (fi == fe || gi->attribute < fi->attribute) {
            entries.push_back(*gi++);
        } else {
            entries.push_back(SoftEntry{fi->attribute, set_union(fi->elements, gi->elements)});
            ++fi;
            ++gi;
        }
    }
    return SoftSet::from_indexed(f.context(), std::move(entries));
}

SoftSet soft_intersection(const SoftSet& f, const SoftSet& g) {
    require_same_context(f, g, "soft intersection");
    std::vector<SoftEntry> entries;
    for (const auto& entry : f.entries()) {
        const auto* other = g.value(entry.attribute);
        if (!other) continue;
        entries.push_back(SoftEntry{entry.attribute, set_intersection(entry.elements, *other)});
    }
    if (entries.empty()) {
        throw SoftError(Errc::empty_parameter_intersection,
                        "the parameter sets share no attribute");
    }
    return SoftSet::from_indexed(f.context(), std::move(entries));
}

SoftSet extend_domain_indexed(const SoftSet& f, std::vector<std::size_t> attributes) {
    attributes = sorted_unique(std::move(attributes));
    if (!attributes.empty() && attributes.back() >= f.context()->attribute_count()) {
        throw SoftError(Errc::unknown_attribute,
                        "attribute index " + std::to_string(attributes.back()) + " out of range");
    }
    if (!set_includes(attributes, f.domain())) {
        throw SoftError(Errc::not_a_superset,
                        "extension domain does not contain the current domain");
    }
    std::vector<SoftEntry> entries;
    entries.reserve(attributes.size());
    for (auto a : attributes) {
        const auto* elems = f.value(a);
        entries.push_back(SoftEntry{a, elems ? *elems : std::vector<std::size_t>{}});
    }
    return SoftSet::from_indexed(f.context(), std::move(entries));
}

SoftSet extend_domain(const SoftSet& f, const std::vector<std::string>& attributes) {
    return extend_domain_indexed(f, attribute_indices_of(*f.context(), attributes));
}

SoftSet extend_to_full(const SoftSet& f) {
    std::vector<std::size_t> all(f.context()->attribute_count());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return extend_domain_indexed(f, std::move(all));
}

}  // namespace softmap
