#ifndef SOFTMAP_CONTEXT_HPP
#define SOFTMAP_CONTEXT_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace softmap {

/// A finite universe of elements together with a finite attribute space.
///
/// Names are normalized to lexicographic order on construction, so two
/// contexts built from the same names in any order compare equal and
/// serialize identically. Element and attribute names live in separate
/// namespaces; either list may be empty.
class Context {
public:
    /// Throws SoftError(duplicate_name) if either list repeats a name.
    Context(std::vector<std::string> universe, std::vector<std::string> attributes);

    static std::shared_ptr<const Context> make(std::vector<std::string> universe,
                                               std::vector<std::string> attributes);

    const std::vector<std::string>& universe() const noexcept { return universe_; }
    const std::vector<std::string>& attributes() const noexcept { return attributes_; }

    std::size_t universe_size() const noexcept { return universe_.size(); }
    std::size_t attribute_count() const noexcept { return attributes_.size(); }

    std::optional<std::size_t> element_index(std::string_view name) const;
    std::optional<std::size_t> attribute_index(std::string_view name) const;

    const std::string& element_name(std::size_t index) const { return universe_.at(index); }
    const std::string& attribute_name(std::size_t index) const { return attributes_.at(index); }

    bool operator==(const Context& other) const = default;

private:
    std::vector<std::string> universe_;
    std::vector<std::string> attributes_;
};

/// Shared-context check used by every binary operation.
bool same_context(const Context& a, const Context& b);

}  // namespace softmap

#endif
