#ifndef SOFTMAP_LAW_HPP
#define SOFTMAP_LAW_HPP

#include <span>
#include <string>
#include <vector>

#include "softmap/class_mapping.hpp"

namespace softmap {

/// Catalog of the checked identities and inclusions.
///
/// L1..L5 constrain forward images, L6..L10 inverse images. N1 and N2 are
/// the reversed inclusions of L2 and L4; they fail on some instances and
/// exist as counterexample-search targets.
enum class LawId {
    L1,   // image of the full null soft set equals the full null soft set
    L2,   // image of the full absolute soft set is contained in the target absolute
    L3,   // image of a union equals the pointwise union of images
    L4,   // image of an intersection is contained in the pointwise intersection of images
    L5,   // images preserve soft containment
    L6,   // preimage of the full null soft set equals the full null soft set
    L7,   // preimage of the target absolute equals the source absolute
    L8,   // preimage of a union equals the pointwise union of preimages
    L9,   // preimage of an intersection equals the pointwise intersection of preimages
    L10,  // preimages preserve soft containment
    N1,   // reversed L2: target absolute contained in image of source absolute
    N2,   // reversed L4: pointwise intersection of images contained in image of intersection
};

enum class LawRelation { equality, inclusion };

enum class SideCondition {
    none,
    overlapping_domains,  // the argument domains must share an attribute
    first_in_second,      // the first argument must be a soft subset of the second
};

/// Which soft class the law's arguments live in.
enum class ArgumentClass { source, target };

struct Law {
    LawId id;
    std::string name;
    std::size_t arity;  // number of soft-set arguments in the binary form
    ArgumentClass argument_class;
    SideCondition side_condition;
    LawRelation relation;
    bool refutation_target;  // expected to be violated on some instances
    bool family;             // has an n-ary form checked on sampled triples
};

const Law& law(LawId id);
const std::vector<Law>& law_catalog();

LawId parse_law_id(const std::string& text);  // throws SoftError(schema_error)
std::string law_id_name(LawId id);

enum class Verdict { holds, violated };

/// A concrete instance of a law: the mapping, the arguments, and the two
/// evaluated sides. Re-evaluating the law on the stored instance
/// reproduces the verdict.
struct Witness {
    LawId law;
    ClassMapping mapping;
    std::vector<SoftSet> arguments;
    SoftSet lhs;
    SoftSet rhs;
    Verdict verdict;
};

/// Evaluates one law on one instance, in full result mode.
///
/// Arguments must live in the law's argument class (the source class for
/// L1..L5, N1, N2; the target class for L6..L10) and match the catalog
/// arity; the family laws L3, L4, L8, L9 also accept more than two
/// arguments. Throws SoftError(side_condition_unmet) when the instance is
/// inadmissible (non-overlapping domains for L4/L9/N2, arguments not in
/// soft containment for L5/L10).
Witness check_law(LawId id, const ClassMapping& f, std::span<const SoftSet> arguments);

}  // namespace softmap

#endif
