#include "softmap/law.hpp"

#include <algorithm>

#include "softmap/errors.hpp"

namespace softmap {

const std::vector<Law>& law_catalog() {
    static const std::vector<Law> catalog = {
        {LawId::L1, "image of null", 0, ArgumentClass::source, SideCondition::none,
         LawRelation::equality, false, false},
        {LawId::L2, "image of absolute within absolute", 0, ArgumentClass::source,
         SideCondition::none, LawRelation::inclusion, false, false},
        {LawId::L3, "image distributes over union", 2, ArgumentClass::source,
         SideCondition::none, LawRelation::equality, false, true},
        {LawId::L4, "image of intersection within intersection of images", 2,
         ArgumentClass::source, SideCondition::overlapping_domains, LawRelation::inclusion,
         false, true},
        {LawId::L5, "image preserves containment", 2, ArgumentClass::source,
         SideCondition::first_in_second, LawRelation::inclusion, false, false},
        {LawId::L6, "preimage of null", 0, ArgumentClass::target, SideCondition::none,
         LawRelation::equality, false, false},
        {LawId::L7, "preimage of absolute", 0, ArgumentClass::target, SideCondition::none,
         LawRelation::equality, false, false},
        {LawId::L8, "preimage distributes over union", 2, ArgumentClass::target,
         SideCondition::none, LawRelation::equality, false, true},
        {LawId::L9, "preimage distributes over intersection", 2, ArgumentClass::target,
         SideCondition::overlapping_domains, LawRelation::equality, false, true},
        {LawId::L10, "preimage preserves containment", 2, ArgumentClass::target,
         SideCondition::first_in_second, LawRelation::inclusion, false, false},
        {LawId::N1, "absolute within image of absolute", 0, ArgumentClass::source,
         SideCondition::none, LawRelation::inclusion, true, false},
        {LawId::N2, "intersection of images within image of intersection", 2,
         ArgumentClass::source, SideCondition::overlapping_domains, LawRelation::inclusion,
         true, false},
    };
    return catalog;
}

const Law& law(LawId id) {
    for (const auto& entry : law_catalog()) {
        if (entry.id == id) return entry;
    }
    throw SoftError(Errc::schema_error, "unknown law id");
}

LawId parse_law_id(const std::string& text) {
    for (const auto& entry : law_catalog()) {
        if (law_id_name(entry.id) == text) return entry.id;
    }
    throw SoftError(Errc::schema_error, "unknown law \"" + text + "\"");
}

std::string law_id_name(LawId id) {
    switch (id) {
        case LawId::L1: return "L1";
        case LawId::L2: return "L2";
        case LawId::L3: return "L3";
        case LawId::L4: return "L4";
        case LawId::L5: return "L5";
        case LawId::L6: return "L6";
        case LawId::L7: return "L7";
        case LawId::L8: return "L8";
        case LawId::L9: return "L9";
        case LawId::L10: return "L10";
        case LawId::N1: return "N1";
        case LawId::N2: return "N2";
    }
    return "?";
}

namespace {

SoftSet fold_union(std::span<const SoftSet> args) {
    SoftSet acc = args[0];
    for (std::size_t i = 1; i < args.size(); ++i) acc = soft_union(acc, args[i]);
    return acc;
}

// The n-ary intersection exists only when all domains share an attribute;
// the caller has already checked that, which makes the pairwise fold safe.
SoftSet fold_intersection(std::span<const SoftSet> args) {
    SoftSet acc = args[0];
    for (std::size_t i = 1; i < args.size(); ++i) acc = soft_intersection(acc, args[i]);
    return acc;
}

SoftSet fold_pointwise(std::span<const SoftSet> values, PointwiseOp op) {
    SoftSet acc = extend_to_full(values[0]);
    for (std::size_t i = 1; i < values.size(); ++i) acc = combine_pointwise(acc, values[i], op);
    return acc;
}

bool domains_overlap(std::span<const SoftSet> args) {
    if (args.empty()) return false;
    auto common = args[0].domain();
    for (std::size_t i = 1; i < args.size() && !common.empty(); ++i) {
        auto other = args[i].domain();
        std::vector<std::size_t> next;
        std::set_intersection(common.begin(), common.end(), other.begin(), other.end(),
                              std::back_inserter(next));
        common = std::move(next);
    }
    return !common.empty();
}

std::vector<SoftSet> images_of(const ClassMapping& f, std::span<const SoftSet> args) {
    std::vector<SoftSet> out;
    out.reserve(args.size());
    for (const auto& arg : args) out.push_back(image(f, arg, ResultMode::full));
    return out;
}

std::vector<SoftSet> preimages_of(const ClassMapping& f, std::span<const SoftSet> args) {
    std::vector<SoftSet> out;
    out.reserve(args.size());
    for (const auto& arg : args) out.push_back(preimage(f, arg, ResultMode::full));
    return out;
}

}  // namespace

Witness check_law(LawId id, const ClassMapping& f, std::span<const SoftSet> arguments) {
    const Law& entry = law(id);

    const auto& expected_ctx =
        entry.argument_class == ArgumentClass::source ? f.source() : f.target();
    for (const auto& arg : arguments) {
        if (!same_context(*arg.context(), *expected_ctx)) {
            throw SoftError(Errc::context_mismatch, "law argument is in the wrong soft class");
        }
    }
    const bool nary_ok = entry.family && arguments.size() > entry.arity;
    if (arguments.size() != entry.arity && !nary_ok) {
        throw SoftError(Errc::schema_error,
                        law_id_name(id) + " takes " + std::to_string(entry.arity) +
                            " soft-set arguments");
    }

    switch (entry.side_condition) {
        case SideCondition::none:
            break;
        case SideCondition::overlapping_domains:
            if (!domains_overlap(arguments)) {
                throw SoftError(Errc::side_condition_unmet,
                                "the argument domains share no attribute");
            }
            break;
        case SideCondition::first_in_second:
            if (!is_soft_subset(arguments[0], arguments[1])) {
                throw SoftError(Errc::side_condition_unmet,
                                "the first argument is not a soft subset of the second");
            }
            break;
    }

    SoftSet lhs = full_null_soft_set(f.source());  // placeholder, overwritten below
    SoftSet rhs = lhs;
    switch (id) {
        case LawId::L1:
            lhs = image(f, full_null_soft_set(f.source()), ResultMode::full);
            rhs = full_null_soft_set(f.target());
            break;
        case LawId::L2:
            lhs = image(f, full_absolute_soft_set(f.source()), ResultMode::full);
            rhs = full_absolute_soft_set(f.target());
            break;
        case LawId::L3:
            lhs = image(f, fold_union(arguments), ResultMode::full);
            rhs = fold_pointwise(images_of(f, arguments), PointwiseOp::unite);
            break;
        case LawId::L4:
            lhs = image(f, fold_intersection(arguments), ResultMode::full);
            rhs = fold_pointwise(images_of(f, arguments), PointwiseOp::intersect);
            break;
        case LawId::L5:
            lhs = image(f, arguments[0], ResultMode::full);
            rhs = image(f, arguments[1], ResultMode::full);
            break;
        case LawId::L6:
            lhs = preimage(f, full_null_soft_set(f.target()), ResultMode::full);
            rhs = full_null_soft_set(f.source());
            break;
        case LawId::L7:
            lhs = preimage(f, full_absolute_soft_set(f.target()), ResultMode::full);
            rhs = full_absolute_soft_set(f.source());
            break;
        case LawId::L8:
            lhs = preimage(f, fold_union(arguments), ResultMode::full);
            rhs = fold_pointwise(preimages_of(f, arguments), PointwiseOp::unite);
            break;
        case LawId::L9:
            lhs = preimage(f, fold_intersection(arguments), ResultMode::full);
            rhs = fold_pointwise(preimages_of(f, arguments), PointwiseOp::intersect);
            break;
        case LawId::L10:
            lhs = preimage(f, arguments[0], ResultMode::full);
            rhs = preimage(f, arguments[1], ResultMode::full);
            break;
        case LawId::N1:
            lhs = full_absolute_soft_set(f.target());
            rhs = image(f, full_absolute_soft_set(f.source()), ResultMode::full);
            break;
        case LawId::N2:
            lhs = fold_pointwise(images_of(f, arguments), PointwiseOp::intersect);
            rhs = image(f, fold_intersection(arguments), ResultMode::full);
            break;
    }

    const bool ok = entry.relation == LawRelation::equality ? soft_equal(lhs, rhs)
                                                                 : is_soft_subset(lhs, rhs);
    Witness out{id, f, std::vector<SoftSet>(arguments.begin(), arguments.end()), std::move(lhs),
                std::move(rhs), ok ? Verdict::holds : Verdict::violated};
    return out;
}

}  // namespace softmap
