#ifndef SOFTMAP_SOFT_SET_HPP
#define SOFTMAP_SOFT_SET_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "softmap/context.hpp"

namespace softmap {

/// One attribute of a soft set's domain together with its element subset.
/// Element indices are sorted and unique; the subset may be empty, which
/// is distinct from the attribute being absent from the domain.
struct SoftEntry {
    std::size_t attribute = 0;
    std::vector<std::size_t> elements;

    bool operator==(const SoftEntry&) const = default;
};

/// A parametrized family of element subsets: a domain of attributes, each
/// mapped to a subset of the context's universe.
///
/// The empty domain is a legal soft set (the unique soft set over no
/// attributes). Entries are kept sorted by attribute index, matching the
/// context's lexicographic attribute order, so equality and serialization
/// are deterministic.
class SoftSet {
public:
    /// Validating constructor from attribute names and element-name lists.
    /// Element lists are normalized (sorted, deduplicated).
    /// Throws SoftError(unknown_attribute) and SoftError(unknown_element).
    SoftSet(std::shared_ptr<const Context> context,
            const std::map<std::string, std::vector<std::string>>& assignments);

    /// Index-based constructor; validates ranges and normalizes order.
    static SoftSet from_indexed(std::shared_ptr<const Context> context,
                                std::vector<SoftEntry> entries);

    const std::shared_ptr<const Context>& context() const noexcept { return context_; }
    const std::vector<SoftEntry>& entries() const noexcept { return entries_; }

    std::size_t domain_size() const noexcept { return entries_.size(); }
    bool domain_empty() const noexcept { return entries_.empty(); }

    bool has_attribute(std::size_t attribute) const;
    /// Null when the attribute is outside the domain.
    const std::vector<std::size_t>* value(std::size_t attribute) const;

    std::vector<std::size_t> domain() const;
    std::vector<std::string> domain_names() const;
    std::vector<std::string> value_names(std::size_t attribute) const;

    /// Structural equality: same context value, same domain, same values.
    bool operator==(const SoftSet& other) const;

private:
    SoftSet() = default;

    std::shared_ptr<const Context> context_;
    std::vector<SoftEntry> entries_;
};

/// Soft set assigning the empty set to every attribute of `attributes`.
SoftSet null_soft_set(std::shared_ptr<const Context> context,
                      const std::vector<std::string>& attributes);
SoftSet null_soft_set_indexed(std::shared_ptr<const Context> context,
                              std::vector<std::size_t> attributes);
/// The full null soft set: empty value on the whole attribute space.
SoftSet full_null_soft_set(std::shared_ptr<const Context> context);

/// Soft set assigning the whole universe to every attribute of `attributes`.
SoftSet absolute_soft_set(std::shared_ptr<const Context> context,
                          const std::vector<std::string>& attributes);
SoftSet absolute_soft_set_indexed(std::shared_ptr<const Context> context,
                                  std::vector<std::size_t> attributes);
/// The full absolute soft set: whole universe on the whole attribute space.
SoftSet full_absolute_soft_set(std::shared_ptr<const Context> context);

/// Domain containment plus pointwise element containment on the smaller
/// domain. Throws SoftError(context_mismatch) when the contexts differ.
bool is_soft_subset(const SoftSet& f, const SoftSet& g);

/// Mutual soft containment: equal domains and pointwise equal values.
bool soft_equal(const SoftSet& f, const SoftSet& g);

/// Domain union; on shared attributes the values are united.
SoftSet soft_union(const SoftSet& f, const SoftSet& g);

/// Domain intersection with pointwise value intersection. The domains must
/// overlap; throws SoftError(empty_parameter_intersection) otherwise.
SoftSet soft_intersection(const SoftSet& f, const SoftSet& g);

/// Pads the domain up to `attributes` with empty values. The target domain
/// must contain the current one (SoftError(not_a_superset) otherwise).
SoftSet extend_domain(const SoftSet& f, const std::vector<std::string>& attributes);
SoftSet extend_domain_indexed(const SoftSet& f, std::vector<std::size_t> attributes);
/// Pads the domain to the full attribute space.
SoftSet extend_to_full(const SoftSet& f);

}  // namespace softmap

#endif
