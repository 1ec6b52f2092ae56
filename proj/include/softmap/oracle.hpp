#ifndef SOFTMAP_ORACLE_HPP
#define SOFTMAP_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "softmap/enumerate.hpp"
#include "softmap/law.hpp"

namespace softmap {

/// Which evaluator drives the exhaustive sweep.
///
/// reference walks the public algebra on name-based soft sets and is the
/// slow, obviously-faithful path kept for testing. packed evaluates the
/// same instances on bit-packed soft sets; packed_parallel partitions the
/// mapping space across OpenMP threads. All three produce byte-identical
/// reports.
enum class OracleEngine { reference, packed, packed_parallel };

struct Violation {
    std::uint64_t index = 0;  // position in the law's instance enumeration
    Witness witness;
};

struct LawReport {
    LawId law;
    std::uint64_t instances = 0;  // admissible instances checked
    std::vector<Violation> violations;  // sorted by index
};

struct ExhaustiveOptions {
    std::vector<LawId> laws;  // empty list means: check nothing
    OracleEngine engine = OracleEngine::packed_parallel;
    /// Budget of sampled ordered triples per mapping for the n-ary forms of
    /// L3, L4, L8, L9; picked by a deterministic stride over the full
    /// triple space. Zero disables family checks.
    std::size_t family_samples = 64;
};

/// Checks every requested law on every admissible instance over the two
/// contexts: all strict mapping pairs crossed with all argument tuples,
/// skipping instances whose side condition fails. Reports are returned in
/// catalog order with violations sorted by instance index; two runs over
/// the same inputs are byte-identical once serialized.
std::vector<LawReport> run_exhaustive(std::shared_ptr<const Context> source,
                                      std::shared_ptr<const Context> target,
                                      const ExhaustiveOptions& options);

/// First instance, in enumeration order, violating N1 or N2 over the two
/// contexts; nullopt when every admissible instance satisfies the
/// inclusion at these sizes.
std::optional<Witness> search_counterexample(LawId target_law,
                                             std::shared_ptr<const Context> source,
                                             std::shared_ptr<const Context> target);

}  // namespace softmap

#endif
