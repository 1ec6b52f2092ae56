#ifndef SOFTMAP_ERRORS_HPP
#define SOFTMAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace softmap {

/// Every failure the library reports, one code per condition.
enum class Errc {
    unknown_attribute,
    unknown_element,
    duplicate_name,
    context_mismatch,
    empty_parameter_intersection,
    not_a_superset,
    partial_point_map,
    partial_attribute_map,
    bounds_exceeded,
    empty_target,
    side_condition_unmet,
    syntax_error,
    schema_error,
};

const char* errc_name(Errc code);

/// Thrown by validation, algebra, enumeration and codec entry points.
class SoftError : public std::runtime_error {
public:
    SoftError(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message),
          code_(code),
          detail_(message) {}

    Errc code() const noexcept { return code_; }
    /// The message without the code prefix, for callers that re-wrap it.
    const std::string& detail() const noexcept { return detail_; }

private:
    Errc code_;
    std::string detail_;
};

}  // namespace softmap

#endif
