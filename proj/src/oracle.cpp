#include "softmap/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "softmap/errors.hpp"
#include "softmap/packed.hpp"

namespace softmap {
namespace {

using packed::MappingBits;
using packed::SoftSetBits;

constexpr std::uint16_t full_mask(std::size_t n) {
    return static_cast<std::uint16_t>((1u << n) - 1u);
}

SoftSetBits full_null_bits(std::size_t n_attrs) {
    SoftSetBits s;
    s.domain = full_mask(n_attrs);
    return s;
}

SoftSetBits full_absolute_bits(std::size_t n_elems, std::size_t n_attrs) {
    SoftSetBits s;
    s.domain = full_mask(n_attrs);
    for (std::size_t a = 0; a < n_attrs; ++a) s.value[a] = full_mask(n_elems);
    return s;
}

bool overlap2(const SoftSetBits& a, const SoftSetBits& b) {
    return (a.domain & b.domain) != 0;
}

bool overlap3(const SoftSetBits& a, const SoftSetBits& b, const SoftSetBits& c) {
    return (a.domain & b.domain & c.domain) != 0;
}

// Name-based admissibility used by the reference engine, so its decisions
// never touch the packed kernel.
bool domains_overlap(const SoftSet& a, const SoftSet& b) {
    for (const auto& e : a.entries())
        if (b.has_attribute(e.attribute)) return true;
    return false;
}

bool domains_overlap(const SoftSet& a, const SoftSet& b, const SoftSet& c) {
    for (const auto& e : a.entries())
        if (b.has_attribute(e.attribute) && c.has_attribute(e.attribute)) return true;
    return false;
}

/// Deterministic sample of the ordered-triple space [0, S^3): everything
/// when the space fits the budget, otherwise an even stride starting at 0.
std::vector<std::uint64_t> sampled_triples(std::uint64_t set_count, std::size_t budget) {
    std::vector<std::uint64_t> out;
    if (budget == 0 || set_count == 0) return out;
    const std::uint64_t space = set_count * set_count * set_count;
    if (space <= budget) {
        for (std::uint64_t t = 0; t < space; ++t) out.push_back(t);
    } else {
        const std::uint64_t stride = space / budget;
        for (std::uint64_t q = 0; q < budget; ++q) out.push_back(q * stride);
    }
    return out;
}

/// One law's slice of the sweep. Instance keys are positions in the
/// structural enumeration: each mapping owns a block of `block` slots —
/// ordered pairs first (rank i*S+j), then the sampled triples — and
/// inadmissible slots simply never produce violations.
struct PlanInfo {
    Law law;
    std::uint64_t set_count = 0;   // S: argument-class soft sets
    std::uint64_t pair_space = 0;  // S*S for binary laws, 0 otherwise
    std::uint64_t block = 1;       // per-mapping key block
    std::vector<std::uint64_t> triples;
};

struct Hit {
    LawId law;
    std::uint64_t key = 0;
    std::array<std::uint32_t, 3> args{};
    std::uint8_t arg_count = 0;
};

struct SweepInputs {
    std::shared_ptr<const Context> source;
    std::shared_ptr<const Context> target;
    std::size_t n_se = 0, n_sa = 0, n_te = 0, n_ta = 0;
    std::vector<SoftSetBits> src_bits;
    std::vector<SoftSetBits> tgt_bits;
    std::vector<MappingBits> map_bits;
    SoftSetBits null_src, abs_src, null_tgt, abs_tgt;
};

SweepInputs build_inputs(std::shared_ptr<const Context> source,
                         std::shared_ptr<const Context> target) {
    SweepInputs in;
    in.source = std::move(source);
    in.target = std::move(target);
    in.n_se = in.source->universe_size();
    in.n_sa = in.source->attribute_count();
    in.n_te = in.target->universe_size();
    in.n_ta = in.target->attribute_count();
    for (std::size_t v : {in.n_se, in.n_sa, in.n_te, in.n_ta}) {
        if (v > kEnumerationBound) {
            throw SoftError(Errc::bounds_exceeded,
                            "exhaustive checking is limited to " +
                                std::to_string(kEnumerationBound) +
                                " elements and attributes per class");
        }
    }
    class_mapping_count(in.n_se, in.n_sa, in.n_te, in.n_ta);  // rejects empty targets
    in.src_bits = packed::enumerate_soft_sets(in.n_se, in.n_sa);
    in.tgt_bits = packed::enumerate_soft_sets(in.n_te, in.n_ta);
    in.map_bits = packed::enumerate_mappings(in.n_se, in.n_sa, in.n_te, in.n_ta);
    in.null_src = full_null_bits(in.n_sa);
    in.abs_src = full_absolute_bits(in.n_se, in.n_sa);
    in.null_tgt = full_null_bits(in.n_ta);
    in.abs_tgt = full_absolute_bits(in.n_te, in.n_ta);
    return in;
}

std::vector<PlanInfo> build_plans(const SweepInputs& in, const std::vector<LawId>& requested,
                                  std::size_t family_samples) {
    std::vector<PlanInfo> plans;
    for (const Law& lw : law_catalog()) {
        if (std::find(requested.begin(), requested.end(), lw.id) == requested.end()) continue;
        PlanInfo p;
        p.law = lw;
        p.set_count = lw.argument_class == ArgumentClass::source ? in.src_bits.size()
                                                                 : in.tgt_bits.size();
        if (lw.arity == 2) {
            p.pair_space = p.set_count * p.set_count;
            if (lw.family) p.triples = sampled_triples(p.set_count, family_samples);
            p.block = p.pair_space + p.triples.size();
        }
        plans.push_back(std::move(p));
    }
    return plans;
}

/// Admissible instances one mapping contributes; side conditions only
/// involve the arguments, so this is the same for every mapping.
std::uint64_t admissible_per_mapping(const PlanInfo& plan, const std::vector<SoftSetBits>& sets) {
    if (plan.law.arity == 0) return 1;
    const std::size_t S = sets.size();
    std::uint64_t pairs = 0;
    switch (plan.law.side_condition) {
        case SideCondition::none:
            pairs = plan.pair_space;
            break;
        case SideCondition::overlapping_domains:
            for (std::size_t i = 0; i < S; ++i)
                for (std::size_t j = 0; j < S; ++j)
                    if (overlap2(sets[i], sets[j])) ++pairs;
            break;
        case SideCondition::first_in_second:
            for (std::size_t i = 0; i < S; ++i)
                for (std::size_t j = 0; j < S; ++j)
                    if (packed::subset(sets[i], sets[j])) ++pairs;
            break;
    }
    std::uint64_t triples = 0;
    for (std::uint64_t t : plan.triples) {
        const std::size_t i = static_cast<std::size_t>(t / (S * S));
        const std::size_t j = static_cast<std::size_t>((t / S) % S);
        const std::size_t k = static_cast<std::size_t>(t % S);
        if (plan.law.side_condition == SideCondition::overlapping_domains) {
            if (overlap3(sets[i], sets[j], sets[k])) ++triples;
        } else {
            ++triples;
        }
    }
    return pairs + triples;
}

/// Evaluates every requested instance for one mapping on the packed
/// kernel, appending violated slots to `hits` in key order.
void packed_sweep_mapping(const SweepInputs& in, const std::vector<PlanInfo>& plans,
                          std::uint32_t m, std::vector<Hit>& hits) {
    const MappingBits& f = in.map_bits[m];

    bool need_img = false, need_pre = false;
    for (const auto& p : plans) {
        if (p.law.arity != 2) continue;
        (p.law.argument_class == ArgumentClass::source ? need_img : need_pre) = true;
    }
    std::vector<SoftSetBits> img, pre;
    if (need_img) {
        img.reserve(in.src_bits.size());
        for (const auto& s : in.src_bits)
            img.push_back(packed::image_full(f, s, in.n_sa, in.n_ta));
    }
    if (need_pre) {
        pre.reserve(in.tgt_bits.size());
        for (const auto& t : in.tgt_bits) pre.push_back(packed::preimage_full(f, t, in.n_sa));
    }

    for (const PlanInfo& plan : plans) {
        const std::uint64_t base = static_cast<std::uint64_t>(m) * plan.block;
        const auto push = [&](std::uint64_t offset, std::initializer_list<std::uint32_t> args) {
            Hit h;
            h.law = plan.law.id;
            h.key = base + offset;
            h.arg_count = static_cast<std::uint8_t>(args.size());
            std::size_t k = 0;
            for (std::uint32_t a : args) h.args[k++] = a;
            hits.push_back(h);
        };
        const std::size_t S = static_cast<std::size_t>(plan.set_count);
        const auto triple_parts = [S](std::uint64_t t) {
            return std::array<std::size_t, 3>{static_cast<std::size_t>(t / (S * S)),
                                              static_cast<std::size_t>((t / S) % S),
                                              static_cast<std::size_t>(t % S)};
        };

        switch (plan.law.id) {
            case LawId::L1:
                if (!(packed::image_full(f, in.null_src, in.n_sa, in.n_ta) == in.null_tgt))
                    push(0, {});
                break;
            case LawId::L2:
                if (!packed::subset(packed::image_full(f, in.abs_src, in.n_sa, in.n_ta),
                                    in.abs_tgt))
                    push(0, {});
                break;
            case LawId::N1:
                if (!packed::subset(in.abs_tgt,
                                    packed::image_full(f, in.abs_src, in.n_sa, in.n_ta)))
                    push(0, {});
                break;
            case LawId::L6:
                if (!(packed::preimage_full(f, in.null_tgt, in.n_sa) == in.null_src)) push(0, {});
                break;
            case LawId::L7:
                if (!(packed::preimage_full(f, in.abs_tgt, in.n_sa) == in.abs_src)) push(0, {});
                break;
            case LawId::L3: {
                for (std::size_t i = 0; i < S; ++i) {
                    for (std::size_t j = 0; j < S; ++j) {
                        const SoftSetBits lhs = packed::image_full(
                            f, packed::unite(in.src_bits[i], in.src_bits[j]), in.n_sa, in.n_ta);
                        if (!(lhs == packed::unite(img[i], img[j])))
                            push(static_cast<std::uint64_t>(i) * S + j,
                                 {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
                    }
                }
                for (std::size_t q = 0; q < plan.triples.size(); ++q) {
                    const auto [i, j, k] = triple_parts(plan.triples[q]);
                    const SoftSetBits arg = packed::unite(
                        packed::unite(in.src_bits[i], in.src_bits[j]), in.src_bits[k]);
                    const SoftSetBits rhs = packed::unite(packed::unite(img[i], img[j]), img[k]);
                    if (!(packed::image_full(f, arg, in.n_sa, in.n_ta) == rhs))
                        push(plan.pair_space + q,
                             {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                              static_cast<std::uint32_t>(k)});
                }
            } break;
            case LawId::L4: {
                for (std::size_t i = 0; i < S; ++i) {
                    for (std::size_t j = 0; j < S; ++j) {
                        if (!overlap2(in.src_bits[i], in.src_bits[j])) continue;
                        const SoftSetBits lhs = packed::image_full(
                            f, packed::intersect(in.src_bits[i], in.src_bits[j]), in.n_sa,
                            in.n_ta);
                        if (!packed::subset(lhs, packed::intersect(img[i], img[j])))
                            push(static_cast<std::uint64_t>(i) * S + j,
                                 {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
                    }
                }
                for (std::size_t q = 0; q < plan.triples.size(); ++q) {
                    const auto [i, j, k] = triple_parts(plan.triples[q]);
                    if (!overlap3(in.src_bits[i], in.src_bits[j], in.src_bits[k])) continue;
                    const SoftSetBits arg = packed::intersect(
                        packed::intersect(in.src_bits[i], in.src_bits[j]), in.src_bits[k]);
                    const SoftSetBits rhs =
                        packed::intersect(packed::intersect(img[i], img[j]), img[k]);
                    if (!packed::subset(packed::image_full(f, arg, in.n_sa, in.n_ta), rhs))
                        push(plan.pair_space + q,
                             {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                              static_cast<std::uint32_t>(k)});
                }
            } break;
            case LawId::L5:
                for (std::size_t i = 0; i < S; ++i) {
                    for (std::size_t j = 0; j < S; ++j) {
                        if (!packed::subset(in.src_bits[i], in.src_bits[j])) continue;
                        if (!packed::subset(img[i], img[j]))
                            push(static_cast<std::uint64_t>(i) * S + j,
                                 {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
                    }
                }
                break;
            case LawId::N2:
                for (std::size_t i = 0; i < S; ++i) {
                    for (std::size_t j = 0; j < S; ++j) {
                        if (!overlap2(in.src_bits[i], in.src_bits[j])) continue;
                        const SoftSetBits lhs = packed::intersect(img[i], img[j]);
                        const SoftSetBits rhs = packed::image_full(
                            f, packed::intersect(in.src_bits[i], in.src_bits[j]), in.n_sa,
                            in.n_ta);
                        if (!packed::subset(lhs, rhs))
                            push(static_cast<std::uint64_t>(i) * S + j,
                                 {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
                    }
                }
                break;
            case LawId::L8: {
                for (std::size_t i = 0; i < S; ++i) {
                    for (std::size_t j = 0; j < S; ++j) {
                        const SoftSetBits lhs = packed::preimage_full(
                            f, packed::unite(in.tgt_bits[i], in.tgt_bits[j]), in.n_sa);
                        if (!(lhs == packed::unite(pre[i], pre[j])))
                            push(static_cast<std::uint64_t>(i) * S + j,
                                 {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
                    }
                }
                for (std::size_t q = 0; q < plan.triples.size(); ++q) {
                    const auto [i, j, k] = triple_parts(plan.triples[q]);
                    const SoftSetBits arg = packed::unite(
                        packed::unite(in.tgt_bits[i], in.tgt_bits[j]), in.tgt_bits[k]);
                    const SoftSetBits rhs = packed::unite(packed::unite(pre[i], pre[j]), pre[k]);
                    if (!(packed::preimage_full(f, arg, in.n_sa) == rhs))
                        push(plan.pair_space + q,
                             {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                              static_cast<std::uint32_t>(k)});
                }
            } break;
            case LawId::L9: {
                for (std::size_t i = 0; i < S; ++i) {
                    for (std::size_t j = 0; j < S; ++j) {
                        if (!overlap2(in.tgt_bits[i], in.tgt_bits[j])) continue;
                        const SoftSetBits lhs = packed::preimage_full(
                            f, packed::intersect(in.tgt_bits[i], in.tgt_bits[j]), in.n_sa);
                        if (!(lhs == packed::intersect(pre[i], pre[j])))
                            push(static_cast<std::uint64_t>(i) * S + j,
                                 {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
                    }
                }
                for (std::size_t q = 0; q < plan.triples.size(); ++q) {
                    const auto [i, j, k] = triple_parts(plan.triples[q]);
                    if (!overlap3(in.tgt_bits[i], in.tgt_bits[j], in.tgt_bits[k])) continue;
                    const SoftSetBits arg = packed::intersect(
                        packed::intersect(in.tgt_bits[i], in.tgt_bits[j]), in.tgt_bits[k]);
                    const SoftSetBits rhs =
                        packed::intersect(packed::intersect(pre[i], pre[j]), pre[k]);
                    if (!(packed::preimage_full(f, arg, in.n_sa) == rhs))
                        push(plan.pair_space + q,
                             {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                              static_cast<std::uint32_t>(k)});
                }
            } break;
            case LawId::L10:
                for (std::size_t i = 0; i < S; ++i) {
                    for (std::size_t j = 0; j < S; ++j) {
                        if (!packed::subset(in.tgt_bits[i], in.tgt_bits[j])) continue;
                        if (!packed::subset(pre[i], pre[j]))
                            push(static_cast<std::uint64_t>(i) * S + j,
                                 {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
                    }
                }
                break;
        }
    }
}

/// Same sweep on the public name-based algebra. Serial; every instance
/// goes through check_law, and admissibility is decided with name-based
/// predicates, so agreement with the packed engines is a checked property
/// rather than shared code.
void reference_sweep(const SweepInputs& in, const std::vector<PlanInfo>& plans,
                     std::vector<std::vector<Hit>>& slots, std::vector<std::uint64_t>& counts) {
    const auto src_sets = enumerate_soft_sets(in.source);
    const auto tgt_sets = enumerate_soft_sets(in.target);
    const auto mappings = enumerate_class_mappings(in.source, in.target);

    for (std::size_t m = 0; m < mappings.size(); ++m) {
        auto& hits = slots[m];
        for (std::size_t pi = 0; pi < plans.size(); ++pi) {
            const PlanInfo& plan = plans[pi];
            const std::uint64_t base = static_cast<std::uint64_t>(m) * plan.block;
            const auto& sets =
                plan.law.argument_class == ArgumentClass::source ? src_sets : tgt_sets;
            const std::size_t S = sets.size();
            const auto record = [&](std::uint64_t offset, const Witness& w,
                                    std::initializer_list<std::uint32_t> args) {
                ++counts[pi];
                if (w.verdict != Verdict::violated) return;
                Hit h;
                h.law = plan.law.id;
                h.key = base + offset;
                h.arg_count = static_cast<std::uint8_t>(args.size());
                std::size_t k = 0;
                for (std::uint32_t a : args) h.args[k++] = a;
                hits.push_back(h);
            };
            const auto admissible2 = [&](const SoftSet& a, const SoftSet& b) {
                switch (plan.law.side_condition) {
                    case SideCondition::none: return true;
                    case SideCondition::overlapping_domains: return domains_overlap(a, b);
                    case SideCondition::first_in_second: return is_soft_subset(a, b);
                }
                return false;
            };

            if (plan.law.arity == 0) {
                record(0, check_law(plan.law.id, mappings[m], std::span<const SoftSet>{}), {});
                continue;
            }
            for (std::size_t i = 0; i < S; ++i) {
                for (std::size_t j = 0; j < S; ++j) {
                    if (!admissible2(sets[i], sets[j])) continue;
                    const std::vector<SoftSet> args{sets[i], sets[j]};
                    record(static_cast<std::uint64_t>(i) * S + j,
                           check_law(plan.law.id, mappings[m], args),
                           {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
                }
            }
            for (std::size_t q = 0; q < plan.triples.size(); ++q) {
                const std::uint64_t t = plan.triples[q];
                const std::size_t i = static_cast<std::size_t>(t / (S * S));
                const std::size_t j = static_cast<std::size_t>((t / S) % S);
                const std::size_t k = static_cast<std::size_t>(t % S);
                if (plan.law.side_condition == SideCondition::overlapping_domains &&
                    !domains_overlap(sets[i], sets[j], sets[k]))
                    continue;
                const std::vector<SoftSet> args{sets[i], sets[j], sets[k]};
                record(plan.pair_space + q, check_law(plan.law.id, mappings[m], args),
                       {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                        static_cast<std::uint32_t>(k)});
            }
        }
    }
}

/// Rebuilds the name-based instance behind a recorded hit and re-evaluates
/// it, so every reported witness is vouched for by the reference path no
/// matter which engine found it.
Witness materialize_hit(const SweepInputs& in, const PlanInfo& plan, std::uint32_t m,
                        const Hit& hit) {
    const ClassMapping f = class_mapping_from_bits(in.source, in.target, in.map_bits[m]);
    const bool on_source = plan.law.argument_class == ArgumentClass::source;
    const auto& bits = on_source ? in.src_bits : in.tgt_bits;
    const auto& ctx = on_source ? in.source : in.target;
    std::vector<SoftSet> args;
    args.reserve(hit.arg_count);
    for (std::size_t k = 0; k < hit.arg_count; ++k)
        args.push_back(soft_set_from_bits(ctx, bits[hit.args[k]]));
    Witness w = check_law(plan.law.id, f, args);
    if (w.verdict != Verdict::violated)
        throw std::logic_error("sweep engine reported a violation the reference evaluation rejects");
    return w;
}

}  // namespace

std::vector<LawReport> run_exhaustive(std::shared_ptr<const Context> source,
                                      std::shared_ptr<const Context> target,
                                      const ExhaustiveOptions& options) {
    const SweepInputs in = build_inputs(std::move(source), std::move(target));
    const std::vector<PlanInfo> plans = build_plans(in, options.laws, options.family_samples);
    if (plans.empty()) return {};

    const std::size_t mapping_count = in.map_bits.size();
    std::vector<std::vector<Hit>> slots(mapping_count);
    std::vector<std::uint64_t> counts(plans.size(), 0);

    if (options.engine == OracleEngine::reference) {
        reference_sweep(in, plans, slots, counts);
    } else {
        if (options.engine == OracleEngine::packed_parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
            for (long long m = 0; m < static_cast<long long>(mapping_count); ++m)
                packed_sweep_mapping(in, plans, static_cast<std::uint32_t>(m),
                                     slots[static_cast<std::size_t>(m)]);
        } else {
            for (std::size_t m = 0; m < mapping_count; ++m)
                packed_sweep_mapping(in, plans, static_cast<std::uint32_t>(m), slots[m]);
        }
        for (std::size_t pi = 0; pi < plans.size(); ++pi) {
            const auto& sets = plans[pi].law.argument_class == ArgumentClass::source
                                   ? in.src_bits
                                   : in.tgt_bits;
            counts[pi] = mapping_count * admissible_per_mapping(plans[pi], sets);
        }
    }

    std::vector<LawReport> reports;
    reports.reserve(plans.size());
    for (std::size_t pi = 0; pi < plans.size(); ++pi) {
        LawReport report;
        report.law = plans[pi].law.id;
        report.instances = counts[pi];
        for (std::size_t m = 0; m < mapping_count; ++m) {
            for (const Hit& hit : slots[m]) {
                if (hit.law != plans[pi].law.id) continue;
                report.violations.push_back(Violation{
                    hit.key, materialize_hit(in, plans[pi], static_cast<std::uint32_t>(m), hit)});
            }
        }
        reports.push_back(std::move(report));
    }
    return reports;
}

std::optional<Witness> search_counterexample(LawId target_law,
                                             std::shared_ptr<const Context> source,
                                             std::shared_ptr<const Context> target) {
    const SweepInputs in = build_inputs(std::move(source), std::move(target));
    const std::vector<PlanInfo> plans =
        build_plans(in, std::vector<LawId>{target_law}, /*family_samples=*/0);
    for (std::uint32_t m = 0; m < in.map_bits.size(); ++m) {
        std::vector<Hit> hits;
        packed_sweep_mapping(in, plans, m, hits);
        if (!hits.empty()) return materialize_hit(in, plans.front(), m, hits.front());
    }
    return std::nullopt;
}

}  // namespace softmap
