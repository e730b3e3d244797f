#pragma once

// Group-spec documents and word serialization.
//
// Spec document schema:
//   { "variant": "free_product",
//     "factors": [ { "order": 3, "table": [[0,1,2],[1,2,0],[2,0,1]] }, "cyclic:3", ... ] }
//   { "variant": "free_group", "rank": 2 }
// A factor may carry an optional "inverse" array, checked against the table.
//
// Named specs: "fp:MxP" (m copies of Z_p) and "free:N".
//
// Words are JSON lists of [factor, element] pairs, or [generator, sign] for a
// free group; the identity is []. A k-tuple is a list of k words.

#include "core/group.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace radial {

using Json = nlohmann::json;

SpecDocument parse_spec_document(const Json& doc);

/// Resolves "fp:MxP" / "free:N" names; std::nullopt if `name` is not one.
std::optional<GroupSpec> named_spec(std::string_view name);

/// A named spec, inline JSON text, or a path to a JSON file.
SpecDocument load_spec_document(std::string_view source);
GroupSpec load_spec(std::string_view source);

Json spec_to_json(const GroupSpec& spec);

Json word_to_json(const Word& w);
std::string render_word(const Word& w);
Json tuple_to_json(const WordTuple& t);

/// Reads a raw letter list; indices are range-checked against `spec` and the
/// result is reduced.
Word parse_word(const GroupSpec& spec, const Json& j);
Word parse_word(const GroupSpec& spec, std::string_view text);

/// Accepts either a list of k words or a single word, which is repeated k
/// times (the tensor power x^(k)).
WordTuple parse_tuple(const GroupSpec& spec, const Json& j, int k);
WordTuple parse_tuple(const GroupSpec& spec, std::string_view text, int k);

}  // namespace radial
