#include "softmap/medical_demo.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace softmap {

const MedicalDemo& medical_demo_data() {
    static const MedicalDemo demo = [] {
        auto symptoms = Context::make({"b", "h", "s", "c", "j", "p", "d", "a"},
                                      {"e1", "e2", "e3"});
        auto causes = Context::make({"alpha", "beta", "gamma", "delta", "lambda", "mu"},
                                    {"e1p", "e2p"});
        SoftSet patient(symptoms, {{"e1", {"b", "h", "s"}},
                                   {"e2", {"c"}},
                                   {"e3", {"j", "p", "d", "a"}}});
        std::map<std::string, std::string> point_table{
            {"b", "alpha"}, {"h", "beta"}, {"s", "alpha"}, {"c", "gamma"},
            {"j", "alpha"}, {"p", "delta"}, {"d", "mu"},   {"a", "mu"},
        };
        // e3 is deliberately absent: the expert tables grade only the two
        // potency classes, so the mapping only works in partial mode.
        std::map<std::string, std::string> attribute_table{{"e1", "e1p"}, {"e2", "e2p"}};
        std::map<std::string, std::string> legend{
            {"b", "burning in stomach"},
            {"h", "headache"},
            {"s", "sleeplessness"},
            {"c", "semi-conscious sleep"},
            {"j", "joint pain"},
            {"p", "backbone pain"},
            {"d", "depression"},
            {"a", "anxiety"},
            {"e1", "high importance"},
            {"e2", "medium importance"},
            {"e3", "low importance"},
            {"alpha", "acidity"},
            {"beta", "blood pressure"},
            {"gamma", "fatigue"},
            {"delta", "wrong posture"},
            {"lambda", "depression"},
            {"mu", "mood disorder"},
            {"e1p", "infrequent high potency"},
            {"e2p", "frequent low potency"},
        };
        return MedicalDemo{std::move(symptoms), std::move(causes),   std::move(patient),
                           std::move(point_table), std::move(attribute_table), std::move(legend)};
    }();
    return demo;
}

MedicalDemoResult run_medical_demo(MapMode mode) {
    const MedicalDemo& d = medical_demo_data();
    const ClassMapping f(d.symptoms, d.causes, d.point_table, d.attribute_table, mode);
    SoftSet diagnosis = image(f, d.patient, ResultMode::raw);

    std::string rendering;
    for (const auto& entry : diagnosis.entries()) {
        rendering += d.legend.at(d.causes->attribute_name(entry.attribute));
        rendering += " = {";
        bool first = true;
        for (const std::size_t e : entry.elements) {
            if (!first) rendering += ", ";
            first = false;
            rendering += d.legend.at(d.causes->element_name(e));
        }
        rendering += "}\n";
    }
    return MedicalDemoResult{std::move(diagnosis), std::move(rendering)};
}

}  // namespace softmap
