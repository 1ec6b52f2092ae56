#ifndef SOFTMAP_CODEC_HPP
#define SOFTMAP_CODEC_HPP

#include <map>
#include <memory>
#include <string>
#include <variant>

#include "softmap/class_mapping.hpp"
#include "softmap/oracle.hpp"

namespace softmap {

/// Named contexts a document may refer to instead of embedding one inline.
using ContextTable = std::map<std::string, std::shared_ptr<const Context>>;

using Document = std::variant<std::shared_ptr<const Context>, SoftSet, ClassMapping>;

/// Parses one JSON document; the kind is inferred from its fields
///   context  {"universe": [...], "attributes": [...]}
///   softset  {"context": <context or name>, "values": {attr: [elem, ...]}}
///   mapping  {"source": ..., "target": ..., "u": {...}, "p": {...}, "mode": ...}
/// Unknown or missing fields raise schema_error, malformed JSON raises
/// syntax_error, and domain validation failures carry the document path of
/// the offending field in their message.
Document parse_document(const std::string& text, const ContextTable& contexts = {});

/// Canonical bytes: sorted keys, sorted sets, no whitespace. Parsing the
/// result and serializing again reproduces the same bytes.
std::string serialize_document(const std::shared_ptr<const Context>& context);
std::string serialize_document(const SoftSet& value);
std::string serialize_document(const ClassMapping& value);
std::string serialize_document(const Witness& value);
std::string serialize_document(const std::vector<LawReport>& reports);

}  // namespace softmap

#endif
