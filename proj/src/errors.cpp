#include "softmap/errors.hpp"

namespace softmap {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::unknown_attribute: return "UnknownAttribute";
        case Errc::unknown_element: return "UnknownElement";
        case Errc::duplicate_name: return "DuplicateName";
        case Errc::context_mismatch: return "ContextMismatch";
        case Errc::empty_parameter_intersection: return "EmptyParameterIntersection";
        case Errc::not_a_superset: return "NotASuperset";
        case Errc::partial_point_map: return "PartialPointMap";
        case Errc::partial_attribute_map: return "PartialAttributeMap";
        case Errc::bounds_exceeded: return "BoundsExceeded";
        case Errc::empty_target: return "EmptyTarget";
        case Errc::side_condition_unmet: return "SideConditionUnmet";
        case Errc::syntax_error: return "SyntaxError";
        case Errc::schema_error: return "SchemaError";
    }
    return "UnknownError";
}

}  // namespace softmap
