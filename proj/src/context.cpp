#include "softmap/context.hpp"

#include <algorithm>

#include "softmap/errors.hpp"

namespace softmap {

namespace {

void sort_unique_or_throw(std::vector<std::string>& names, const char* what) {
    std::sort(names.begin(), names.end());
    auto dup = std::adjacent_find(names.begin(), names.end());
    if (dup != names.end()) {
        throw SoftError(Errc::duplicate_name,
                        std::string(what) + " name \"" + *dup + "\" appears twice");
    }
}

std::optional<std::size_t> find_sorted(const std::vector<std::string>& names,
                                       std::string_view name) {
    auto it = std::lower_bound(names.begin(), names.end(), name);
    if (it == names.end() || *it != name) return std::nullopt;
    return static_cast<std::size_t>(it - names.begin());
}

}  // namespace

Context::Context(std::vector<std::string> universe, std::vector<std::string> attributes)
    : universe_(std::move(universe)), attributes_(std::move(attributes)) {
    sort_unique_or_throw(universe_, "element");
    sort_unique_or_throw(attributes_, "attribute");
}

std::shared_ptr<const Context> Context::make(std::vector<std::string> universe,
                                             std::vector<std::string> attributes) {
    return std::make_shared<const Context>(std::move(universe), std::move(attributes));
}

std::optional<std::size_t> Context::element_index(std::string_view name) const {
    return find_sorted(universe_, name);
}

std::optional<std::size_t> Context::attribute_index(std::string_view name) const {
    return find_sorted(attributes_, name);
}

bool same_context(const Context& a, const Context& b) { return a == b; }

}  // namespace softmap
