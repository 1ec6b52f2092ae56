#include "softmap/codec.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "softmap/errors.hpp"

namespace softmap {
namespace {

using nlohmann::json;  // map-backed: object keys come out sorted

[[noreturn]] void fail_schema(const std::string& path, const std::string& what) {
    throw SoftError(Errc::schema_error, path.empty() ? what : path + ": " + what);
}

std::string child(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

const json& member(const json& j, const std::string& path, const std::string& key) {
    const auto it = j.find(key);
    if (it == j.end()) fail_schema(path, "missing field \"" + key + "\"");
    return *it;
}

void reject_unknown_keys(const json& j, const std::string& path,
                         std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const char* a : allowed) known = known || key == a;
        if (!known) fail_schema(path, "unknown field \"" + key + "\"");
    }
}

std::vector<std::string> parse_name_array(const json& j, const std::string& path) {
    if (!j.is_array()) fail_schema(path, "expected an array of names");
    std::vector<std::string> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string())
            fail_schema(path + "[" + std::to_string(i) + "]", "expected a string");
        out.push_back(j[i].get<std::string>());
    }
    return out;
}

std::shared_ptr<const Context> parse_context(const json& j, const std::string& path) {
    if (!j.is_object()) fail_schema(path, "expected a context object");
    reject_unknown_keys(j, path, {"universe", "attributes"});
    auto universe = parse_name_array(member(j, path, "universe"), child(path, "universe"));
    auto attributes = parse_name_array(member(j, path, "attributes"), child(path, "attributes"));
    try {
        return Context::make(std::move(universe), std::move(attributes));
    } catch (const SoftError& e) {
        throw SoftError(e.code(), path.empty() ? e.detail() : path + ": " + e.detail());
    }
}

/// A context field is either an inline context object or the name of one
/// supplied out of band.
std::shared_ptr<const Context> parse_context_ref(const json& j, const std::string& path,
                                                 const ContextTable& contexts) {
    if (j.is_string()) {
        const auto it = contexts.find(j.get<std::string>());
        if (it == contexts.end())
            fail_schema(path, "unknown context name \"" + j.get<std::string>() + "\"");
        return it->second;
    }
    return parse_context(j, path);
}

SoftSet parse_soft_set(const json& j, const ContextTable& contexts) {
    reject_unknown_keys(j, "", {"context", "values"});
    auto ctx = parse_context_ref(member(j, "", "context"), "context", contexts);
    const json& values = member(j, "", "values");
    if (!values.is_object()) fail_schema("values", "expected an object of attribute values");
    std::map<std::string, std::vector<std::string>> assignments;
    for (const auto& [attr, elems] : values.items()) {
        const std::string path = child("values", attr);
        if (!ctx->attribute_index(attr))
            throw SoftError(Errc::unknown_attribute, path + ": not an attribute of the context");
        auto names = parse_name_array(elems, path);
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (!ctx->element_index(names[i]))
                throw SoftError(Errc::unknown_element, path + "[" + std::to_string(i) +
                                                           "]: \"" + names[i] +
                                                           "\" is not an element of the universe");
        }
        assignments.emplace(attr, std::move(names));
    }
    return SoftSet(std::move(ctx), assignments);
}

std::map<std::string, std::string> parse_name_table(const json& j, const std::string& path) {
    if (!j.is_object()) fail_schema(path, "expected an object of name pairs");
    std::map<std::string, std::string> out;
    for (const auto& [key, value] : j.items()) {
        if (!value.is_string()) fail_schema(child(path, key), "expected a string");
        out.emplace(key, value.get<std::string>());
    }
    return out;
}

ClassMapping parse_mapping(const json& j, const ContextTable& contexts) {
    reject_unknown_keys(j, "", {"source", "target", "u", "p", "mode"});
    auto source = parse_context_ref(member(j, "", "source"), "source", contexts);
    auto target = parse_context_ref(member(j, "", "target"), "target", contexts);
    auto u = parse_name_table(member(j, "", "u"), "u");
    auto p = parse_name_table(member(j, "", "p"), "p");

    for (const auto& [from, to] : u) {
        if (!source->element_index(from))
            throw SoftError(Errc::unknown_element,
                            child("u", from) + ": not an element of the source universe");
        if (!target->element_index(to))
            throw SoftError(Errc::unknown_element, child("u", from) + ": \"" + to +
                                                       "\" is not an element of the target universe");
    }
    for (const auto& [from, to] : p) {
        if (!source->attribute_index(from))
            throw SoftError(Errc::unknown_attribute,
                            child("p", from) + ": not an attribute of the source class");
        if (!target->attribute_index(to))
            throw SoftError(Errc::unknown_attribute,
                            child("p", from) + ": \"" + to +
                                "\" is not an attribute of the target class");
    }

    MapMode mode = MapMode::strict;
    if (j.contains("mode")) {
        const json& m = j["mode"];
        if (!m.is_string() || (m != "strict" && m != "partial"))
            fail_schema("mode", "expected \"strict\" or \"partial\"");
        mode = m == "strict" ? MapMode::strict : MapMode::partial;
    }

    try {
        return ClassMapping(std::move(source), std::move(target), u, p, mode);
    } catch (const SoftError& e) {
        const char* prefix = e.code() == Errc::partial_attribute_map ? "p" : "u";
        throw SoftError(e.code(), std::string(prefix) + ": " + e.detail());
    }
}

json context_json(const Context& c) {
    json j;
    j["universe"] = c.universe();
    j["attributes"] = c.attributes();
    return j;
}

json soft_set_json(const SoftSet& s) {
    json j;
    j["context"] = context_json(*s.context());
    j["values"] = json::object();
    for (const auto& entry : s.entries())
        j["values"][s.context()->attribute_name(entry.attribute)] =
            s.value_names(entry.attribute);
    return j;
}

json mapping_json(const ClassMapping& f) {
    json j;
    j["source"] = context_json(*f.source());
    j["target"] = context_json(*f.target());
    j["u"] = json::object();
    for (std::size_t e = 0; e < f.source()->universe_size(); ++e)
        j["u"][f.source()->element_name(e)] = f.target()->element_name(f.map_element(e));
    j["p"] = json::object();
    for (std::size_t a = 0; a < f.source()->attribute_count(); ++a)
        if (const auto to = f.map_attribute(a))
            j["p"][f.source()->attribute_name(a)] = f.target()->attribute_name(*to);
    j["mode"] = f.mode() == MapMode::strict ? "strict" : "partial";
    return j;
}

json witness_json(const Witness& w) {
    json j;
    j["law"] = law_id_name(w.law);
    j["mapping"] = mapping_json(w.mapping);
    j["arguments"] = json::array();
    for (const auto& arg : w.arguments) j["arguments"].push_back(soft_set_json(arg));
    j["lhs"] = soft_set_json(w.lhs);
    j["rhs"] = soft_set_json(w.rhs);
    j["verdict"] = w.verdict == Verdict::holds ? "holds" : "violated";
    return j;
}

}  // namespace

Document parse_document(const std::string& text, const ContextTable& contexts) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SoftError(Errc::syntax_error, e.what());
    }
    if (!j.is_object()) fail_schema("", "expected a JSON object");
    if (j.contains("values")) return parse_soft_set(j, contexts);
    if (j.contains("u") || j.contains("p")) return parse_mapping(j, contexts);
    if (j.contains("universe") || j.contains("attributes")) return parse_context(j, "");
    fail_schema("", "unrecognized document: expected a context, a soft set, or a mapping");
}

std::string serialize_document(const std::shared_ptr<const Context>& context) {
    return context_json(*context).dump();
}

std::string serialize_document(const SoftSet& value) { return soft_set_json(value).dump(); }

std::string serialize_document(const ClassMapping& value) { return mapping_json(value).dump(); }

std::string serialize_document(const Witness& value) { return witness_json(value).dump(); }

std::string serialize_document(const std::vector<LawReport>& reports) {
    json out = json::array();
    for (const auto& report : reports) {
        json r;
        r["law"] = law_id_name(report.law);
        r["instances"] = report.instances;
        r["violations"] = json::array();
        for (const auto& v : report.violations) r["violations"].push_back(witness_json(v.witness));
        out.push_back(std::move(r));
    }
    return out.dump();
}

}  // namespace softmap
