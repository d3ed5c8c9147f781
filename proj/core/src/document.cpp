#include "tropic/document.hpp"

#include "tropic/errors.hpp"

#include <limits>

namespace tropic {

using nlohmann::json;

Rat rat_from_json(const json& value) {
  if (value.is_number_integer()) {
    return Rat(static_cast<long long>(value.get<int64_t>()));
  }
  if (value.is_string()) {
    return parse_rat(value.get<std::string>());
  }
  if (value.is_number_float()) {
    // round-trips through the shortest decimal representation, which is what
    // the author typed for literals like 4.3
    return parse_rat(value.dump());
  }
  throw ParseError("expected a number or a fraction string, got: " + value.dump());
}

json rat_to_json(const Rat& value) {
  if (denominator(value) == 1) {
    const Int& num = numerator(value);
    if (num >= std::numeric_limits<int64_t>::min() && num <= std::numeric_limits<int64_t>::max()) {
      return json(static_cast<int64_t>(num));
    }
  }
  return json(format_rat(value));
}

namespace {

int require_positive_int(const json& obj, const std::string& field, const std::string& where) {
  if (!obj.contains(field) || !obj[field].is_number_integer() || obj[field].get<int64_t>() < 1) {
    throw ParseError(where + ": field '" + field + "' must be a positive integer");
  }
  return static_cast<int>(obj[field].get<int64_t>());
}

TypeSpace parse_type_space(const std::string& name, const json& obj) {
  if (!obj.is_object()) throw ParseError("type_spaces." + name + ": expected an object");
  int m = require_positive_int(obj, "m", "type_spaces." + name);
  if (!obj.contains("rows") || !obj["rows"].is_array() || obj["rows"].empty()) {
    throw ParseError("type_spaces." + name + ".rows: expected a nonempty array of rows");
  }
  const json& rows = obj["rows"];
  TypeSpace space;
  space.label = name;
  space.matrix = RatMatrix(static_cast<int>(rows.size()), m);
  for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != m) {
      throw ParseError("type_spaces." + name + ".rows[" + std::to_string(i) +
                       "]: expected " + std::to_string(m) + " entries");
    }
    for (int k = 0; k < m; ++k) {
      try {
        space.matrix.at(i, k) = rat_from_json(rows[i][k]);
      } catch (const ParseError& e) {
        throw ParseError("type_spaces." + name + ".rows[" + std::to_string(i) + "][" +
                         std::to_string(k) + "]: " + e.what());
      }
    }
  }
  return space;
}

OutcomeFunction parse_outcome_function(const std::string& name, const json& obj) {
  const std::string where = "outcome_functions." + name;
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  OutcomeFunction g;
  g.outcomes = require_positive_int(obj, "m", where);
  if (!obj.contains("shape") || !obj["shape"].is_array() || obj["shape"].empty()) {
    throw ParseError(where + ".shape: expected a nonempty array");
  }
  for (const json& s : obj["shape"]) {
    if (!s.is_number_integer() || s.get<int64_t>() < 1) {
      throw ParseError(where + ".shape: entries must be positive integers");
    }
    g.shape.push_back(static_cast<int>(s.get<int64_t>()));
  }
  if (!obj.contains("values") || !obj["values"].is_array()) {
    throw ParseError(where + ".values: expected an array");
  }
  for (const json& v : obj["values"]) {
    if (!v.is_number_integer()) {
      throw ParseError(where + ".values: outcomes must be integers");
    }
    g.values.push_back(static_cast<int>(v.get<int64_t>()));
  }
  try {
    g.validate();
  } catch (const ShapeMismatchError& e) {
    throw ParseError(where + ": " + e.what());
  }
  return g;
}

} // namespace

InputDocument parse_document(const json& doc) {
  if (!doc.is_object()) throw ParseError("document root must be an object");
  if (doc.contains("schema") && (!doc["schema"].is_number_integer() || doc["schema"] != 1)) {
    throw ParseError("schema: only version 1 is understood");
  }
  InputDocument out;
  if (doc.contains("type_spaces")) {
    if (!doc["type_spaces"].is_object()) throw ParseError("type_spaces: expected an object");
    for (const auto& [name, obj] : doc["type_spaces"].items()) {
      out.type_spaces.emplace(name, parse_type_space(name, obj));
    }
  }
  if (doc.contains("outcome_functions")) {
    if (!doc["outcome_functions"].is_object()) {
      throw ParseError("outcome_functions: expected an object");
    }
    for (const auto& [name, obj] : doc["outcome_functions"].items()) {
      out.outcome_functions.emplace(name, parse_outcome_function(name, obj));
    }
  }
  return out;
}

InputDocument parse_document_text(const std::string& text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) throw ParseError("input is not valid JSON");
  return parse_document(doc);
}

json document_to_json(const InputDocument& doc) {
  json out;
  out["schema"] = 1;
  out["type_spaces"] = json::object();
  for (const auto& [name, space] : doc.type_spaces) {
    json rows = json::array();
    for (int i = 0; i < space.type_count(); ++i) {
      json row = json::array();
      for (int k = 0; k < space.outcome_count(); ++k) {
        row.push_back(rat_to_json(space.matrix.at(i, k)));
      }
      rows.push_back(std::move(row));
    }
    out["type_spaces"][name] = {{"m", space.outcome_count()}, {"rows", std::move(rows)}};
  }
  out["outcome_functions"] = json::object();
  for (const auto& [name, g] : doc.outcome_functions) {
    out["outcome_functions"][name] = {
        {"m", g.outcomes}, {"shape", g.shape}, {"values", g.values}};
  }
  return out;
}

} // namespace tropic
