// Command-line front end: soft-set algebra on JSON documents, exhaustive
// law checking over bounded classes, counterexample search, and the
// bundled diagnosis demo.
//
// Exit codes: 0 success, 1 search exhausted without a witness, 2 input or
// validation failure, 3 check found violations.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "softmap/codec.hpp"
#include "softmap/enumerate.hpp"
#include "softmap/errors.hpp"
#include "softmap/medical_demo.hpp"
#include "softmap/oracle.hpp"

namespace {

using namespace softmap;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SoftError(Errc::syntax_error, path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ContextTable load_context_table(const std::vector<std::string>& bindings) {
    ContextTable table;
    for (const auto& binding : bindings) {
        const auto eq = binding.find('=');
        if (eq == std::string::npos || eq == 0)
            throw SoftError(Errc::schema_error, "--context expects NAME=FILE, got \"" + binding +
                                                    "\"");
        const std::string name = binding.substr(0, eq);
        const std::string path = binding.substr(eq + 1);
        Document doc = parse_document(slurp(path), table);
        if (const auto* ctx = std::get_if<std::shared_ptr<const Context>>(&doc)) {
            table[name] = *ctx;
        } else {
            throw SoftError(Errc::schema_error, path + ": expected a context document");
        }
    }
    return table;
}

SoftSet load_soft_set(const std::string& path, const ContextTable& table) {
    Document doc = parse_document(slurp(path), table);
    if (auto* s = std::get_if<SoftSet>(&doc)) return std::move(*s);
    throw SoftError(Errc::schema_error, path + ": expected a soft set document");
}

ClassMapping load_mapping(const std::string& path, const ContextTable& table) {
    Document doc = parse_document(slurp(path), table);
    if (auto* f = std::get_if<ClassMapping>(&doc)) return std::move(*f);
    throw SoftError(Errc::schema_error, path + ": expected a mapping document");
}

/// Size tuples (|X|, |Y|, |E|, |E'|) from (1,1,1,1) up to the given caps,
/// smallest classes first: ascending total, ties in lexicographic order.
std::vector<std::array<int, 4>> size_sweep(int x, int y, int e, int ep) {
    std::vector<std::array<int, 4>> combos;
    for (int a = 1; a <= x; ++a)
        for (int b = 1; b <= y; ++b)
            for (int c = 1; c <= e; ++c)
                for (int d = 1; d <= ep; ++d) combos.push_back({a, b, c, d});
    std::sort(combos.begin(), combos.end(), [](const auto& l, const auto& r) {
        const int ls = l[0] + l[1] + l[2] + l[3];
        const int rs = r[0] + r[1] + r[2] + r[3];
        return std::tie(ls, l) < std::tie(rs, r);
    });
    return combos;
}

struct CheckArgs {
    int x = 0, y = 0, e = 0, ep = 0;
    std::vector<std::string> laws;
    std::string engine = "parallel";
    std::size_t samples = 64;
    bool deep = false;
    std::string find;
};

int run_check(const CheckArgs& args) {
    const int limit = args.deep ? 3 : 2;
    for (const int n : {args.x, args.y, args.e, args.ep}) {
        if (n < 1 || n > limit)
            throw SoftError(Errc::bounds_exceeded,
                            "class sizes must lie in [1, " + std::to_string(limit) +
                                "]; pass --deep to allow 3");
    }

    const auto combos = size_sweep(args.x, args.y, args.e, args.ep);

    if (!args.find.empty()) {
        const LawId target_law = parse_law_id(args.find);
        for (const auto& [a, b, c, d] : combos) {
            const auto source = make_bounded_context(a, c, "x", "a");
            const auto target = make_bounded_context(b, d, "y", "b");
            if (const auto witness = search_counterexample(target_law, source, target)) {
                std::cerr << "witness at |X|=" << a << " |Y|=" << b << " |E|=" << c
                          << " |E'|=" << d << "\n";
                std::cout << serialize_document(*witness) << "\n";
                return 0;
            }
        }
        std::cout << "null\n";
        return 1;
    }

    ExhaustiveOptions options;
    if (args.engine == "reference") {
        options.engine = OracleEngine::reference;
    } else if (args.engine == "packed") {
        options.engine = OracleEngine::packed;
    } else if (args.engine == "parallel") {
        options.engine = OracleEngine::packed_parallel;
    } else {
        throw SoftError(Errc::schema_error,
                        "--engine expects reference, packed, or parallel");
    }
    options.family_samples = args.samples;
    if (args.laws.empty()) {
        for (const Law& lw : law_catalog())
            if (!lw.refutation_target) options.laws.push_back(lw.id);
    } else {
        for (const auto& name : args.laws) options.laws.push_back(parse_law_id(name));
    }

    std::vector<LawReport> totals;
    std::uint64_t violation_count = 0;
    for (const auto& [a, b, c, d] : combos) {
        const auto source = make_bounded_context(a, c, "x", "a");
        const auto target = make_bounded_context(b, d, "y", "b");
        auto reports = run_exhaustive(source, target, options);
        std::uint64_t combo_instances = 0, combo_violations = 0;
        for (const auto& r : reports) {
            combo_instances += r.instances;
            combo_violations += r.violations.size();
        }
        violation_count += combo_violations;
        std::cerr << "|X|=" << a << " |Y|=" << b << " |E|=" << c << " |E'|=" << d << ": "
                  << combo_instances << " instances, " << combo_violations << " violations\n";
        if (totals.empty()) {
            totals = std::move(reports);
        } else {
            for (std::size_t i = 0; i < totals.size(); ++i) {
                totals[i].instances += reports[i].instances;
                for (auto& v : reports[i].violations)
                    totals[i].violations.push_back(std::move(v));
            }
        }
    }
    std::cout << serialize_document(totals) << "\n";
    return violation_count == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"soft-set algebra, class mappings, and exhaustive law checking"};
    app.require_subcommand(1);

    std::vector<std::string> context_bindings;
    app.add_option("--context", context_bindings,
                   "NAME=FILE: load FILE as a context and let documents refer to it by NAME")
        ->expected(1)
        ->allow_extra_args(false)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

    std::string left, right, map_path, in_path;
    bool raw = false, full = false;

    auto* cmd_union = app.add_subcommand("union", "union of two soft sets");
    auto* cmd_intersect = app.add_subcommand("intersect", "intersection of two soft sets");
    auto* cmd_subset = app.add_subcommand("subset", "is the first soft set contained in the second");
    for (auto* cmd : {cmd_union, cmd_intersect, cmd_subset}) {
        cmd->fallthrough();
        cmd->add_option("LEFT", left, "soft set document")->required();
        cmd->add_option("RIGHT", right, "soft set document")->required();
    }

    auto* cmd_image = app.add_subcommand("image", "forward image of a soft set under a mapping");
    auto* cmd_preimage =
        app.add_subcommand("preimage", "inverse image of a soft set under a mapping");
    for (auto* cmd : {cmd_image, cmd_preimage}) {
        cmd->fallthrough();
        cmd->add_option("--map", map_path, "mapping document")->required();
        cmd->add_option("--in", in_path, "soft set document")->required();
        auto* raw_flag = cmd->add_flag("--raw", raw, "keep the definition domain (default)");
        cmd->add_flag("--full", full, "pad the result to the whole attribute space")
            ->excludes(raw_flag);
    }

    CheckArgs check_args;
    auto* cmd_check = app.add_subcommand(
        "check", "exhaustively check laws over all classes up to the given sizes");
    cmd_check->fallthrough();
    cmd_check->add_option("--x", check_args.x, "universe size of the source class")->required();
    cmd_check->add_option("--y", check_args.y, "universe size of the target class")->required();
    cmd_check->add_option("--e", check_args.e, "attribute count of the source class")->required();
    cmd_check->add_option("--ep", check_args.ep, "attribute count of the target class")
        ->required();
    cmd_check->add_option("--laws", check_args.laws, "comma-separated law ids (default L1..L10)")
        ->delimiter(',')
        ->expected(1)
        ->allow_extra_args(false)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    cmd_check->add_option("--engine", check_args.engine, "reference | packed | parallel");
    cmd_check->add_option("--samples", check_args.samples,
                          "sampled triples per mapping for the n-ary law forms");
    cmd_check->add_flag("--deep", check_args.deep, "raise the size cap from 2 to 3");
    cmd_check->add_option("--find", check_args.find,
                          "search for the first counterexample to this law (N1 or N2) instead");

    std::string demo_what;
    bool strict = false;
    auto* cmd_demo = app.add_subcommand("demo", "run a bundled batch transformation");
    cmd_demo->fallthrough();
    cmd_demo->add_option("WHAT", demo_what, "demo name (medical)")->required();
    cmd_demo->add_flag("--strict", strict, "require a total attribute table");

    CLI11_PARSE(app, argc, argv);

    try {
        const ContextTable table = load_context_table(context_bindings);

        if (*cmd_union || *cmd_intersect || *cmd_subset) {
            const SoftSet a = load_soft_set(left, table);
            const SoftSet b = load_soft_set(right, table);
            if (*cmd_union) {
                std::cout << serialize_document(soft_union(a, b)) << "\n";
            } else if (*cmd_intersect) {
                std::cout << serialize_document(soft_intersection(a, b)) << "\n";
            } else {
                std::cout << (is_soft_subset(a, b) ? "true" : "false") << "\n";
            }
            return 0;
        }

        if (*cmd_image || *cmd_preimage) {
            const ClassMapping f = load_mapping(map_path, table);
            const SoftSet arg = load_soft_set(in_path, table);
            const ResultMode mode = full ? ResultMode::full : ResultMode::raw;
            const SoftSet result =
                *cmd_image ? image(f, arg, mode) : preimage(f, arg, mode);
            std::cout << serialize_document(result) << "\n";
            return 0;
        }

        if (*cmd_check) return run_check(check_args);

        if (*cmd_demo) {
            if (demo_what != "medical")
                throw SoftError(Errc::schema_error, "unknown demo \"" + demo_what + "\"");
            const MedicalDemoResult result =
                run_medical_demo(strict ? MapMode::strict : MapMode::partial);
            std::cout << serialize_document(result.diagnosis) << "\n" << result.rendering;
            return 0;
        }
    } catch (const SoftError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
