#ifndef TROPIC_DOCUMENT_HPP
#define TROPIC_DOCUMENT_HPP

#include "tropic/mechanism.hpp"
#include "tropic/rat.hpp"

#include <json.hpp>

#include <map>
#include <string>

namespace tropic {

/// Named inputs parsed from a single JSON document:
///   {"schema":1,
///    "type_spaces":{name:{"m":int,"rows":[[num|"p/q",...],...]}},
///    "outcome_functions":{name:{"m":int,"shape":[...],"values":[...]}}}
/// Numbers may be integers, decimal strings ("4.3" -> 43/10) or fraction
/// strings ("1/2"); everything is kept exact.
struct InputDocument {
  std::map<std::string, TypeSpace> type_spaces;
  std::map<std::string, OutcomeFunction> outcome_functions;
};

/// Throws ParseError on malformed input, naming the offending field.
InputDocument parse_document(const nlohmann::json& doc);
InputDocument parse_document_text(const std::string& text);

nlohmann::json document_to_json(const InputDocument& doc);

/// Rational from a JSON value: integer, string, or (as a convenience) a
/// double, which is read back through its shortest decimal form.
Rat rat_from_json(const nlohmann::json& value);

/// Integer when the denominator is 1, "p/q" string otherwise.
nlohmann::json rat_to_json(const Rat& value);

} // namespace tropic

#endif
