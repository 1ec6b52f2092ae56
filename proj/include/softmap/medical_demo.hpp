#ifndef SOFTMAP_MEDICAL_DEMO_HPP
#define SOFTMAP_MEDICAL_DEMO_HPP

#include <string>

#include "softmap/class_mapping.hpp"

namespace softmap {

/// The bundled medical-diagnosis dataset: a patient's complaints graded by
/// importance, mapped through expert look-up tables to causes graded by
/// treatment preference. Greek and primed symbols are stored as ASCII
/// names (alpha, e1p) with a display legend.
struct MedicalDemo {
    std::shared_ptr<const Context> symptoms;   // universe of complaints, importance grades
    std::shared_ptr<const Context> causes;     // universe of causes, potency grades
    SoftSet patient;                           // the narrated case
    std::map<std::string, std::string> point_table;
    std::map<std::string, std::string> attribute_table;  // defined on e1, e2 only

    /// Display names for every symbol in both contexts.
    std::map<std::string, std::string> legend;
};

const MedicalDemo& medical_demo_data();

struct MedicalDemoResult {
    SoftSet diagnosis;        // raw image of the patient soft set
    std::string rendering;    // legend lines, one per diagnosis attribute
};

/// Runs the batch transformation. Partial mode reproduces the bundled
/// tables as given; strict mode rejects them with
/// SoftError(partial_attribute_map) naming the unmapped attribute.
MedicalDemoResult run_medical_demo(MapMode mode);

}  // namespace softmap

#endif
