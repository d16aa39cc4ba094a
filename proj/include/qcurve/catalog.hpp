#pragma once
// Machine-readable output: classification records as ordered JSON documents
// (the canonical format), CSV as a lossy projection, and aligned text tables.
// The JSON schema ships with the tool; a subset validator checks every
// document against it.

#include <fstream>

#include <json.hpp>
#include <qcurve/modelspec.hpp>

namespace qcurve {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

// Single source of truth for the shipped catalog.schema.json.
inline const char* catalog_schema_text() {
  return R"SCHEMA({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "title": "qcurve classification catalog",
  "type": "object",
  "required": ["version", "invocation", "records"],
  "properties": {
    "version": {"type": "string"},
    "invocation": {"type": "object"},
    "records": {
      "type": "array",
      "items": {"$ref": "#/definitions/record"}
    },
    "oracle_audits": {"type": "array"}
  },
  "definitions": {
    "record": {
      "type": "object",
      "required": ["genus", "q", "wild", "family", "params",
                   "hyperelliptic", "aut"],
      "properties": {
        "genus": {"type": "integer"},
        "q": {"type": "integer"},
        "wild": {"type": "boolean"},
        "kind": {"type": "string",
                 "enum": ["curve", "profile", "delegated", "note"]},
        "family": {"type": "string"},
        "params": {"type": "string"},
        "hyperelliptic": {"type": ["boolean", "null"]},
        "aut": {
          "type": "object",
          "required": ["c", "order", "exceptional", "notes"],
          "properties": {
            "c": {"type": ["integer", "null"]},
            "order": {"type": ["integer", "null"]},
            "exceptional": {"type": ["string", "null"]},
            "outside_hypotheses": {"type": "boolean"},
            "notes": {"type": "array", "items": {"type": "string"}}
          },
          "additionalProperties": false
        },
        "notes": {"type": "string"}
      },
      "additionalProperties": false
    }
  }
})SCHEMA";
}

inline Json aut_to_json(const AutReport& a) {
  Json j;
  j["c"] = a.c ? Json(*a.c) : Json(nullptr);
  j["order"] = a.order ? Json(*a.order) : Json(nullptr);
  j["exceptional"] = a.exceptional.empty() ? Json(nullptr) : Json(a.exceptional);
  j["outside_hypotheses"] = a.outside_hypotheses;
  j["notes"] = a.notes;
  return j;
}

inline Json record_to_json(const ClassificationRecord& r) {
  Json j;
  j["genus"] = r.g;
  j["q"] = r.q;
  j["wild"] = r.wild;
  j["kind"] = r.kind;
  j["family"] = r.family;
  j["params"] = r.params;
  j["hyperelliptic"] = r.hyperelliptic ? Json(*r.hyperelliptic) : Json(nullptr);
  j["aut"] = aut_to_json(r.aut);
  j["notes"] = r.notes;
  return j;
}

struct CatalogDocument {
  std::string version = kToolVersion;
  Json invocation = Json::object();
  std::vector<ClassificationRecord> records;
  Json oracle_audits = Json::array();
};

inline Json catalog_to_json(const CatalogDocument& doc) {
  Json j;
  j["version"] = doc.version;
  j["invocation"] = doc.invocation;
  j["records"] = Json::array();
  for (auto& r : doc.records) j["records"].push_back(record_to_json(r));
  j["oracle_audits"] = doc.oracle_audits;
  return j;
}

namespace detail {

inline std::string csv_quote(const std::string& s) {
  bool needs = s.find_first_of(",\"\n") != std::string::npos;
  if (!needs) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace detail

// Lossy projection: params flattened, notes dropped.
inline std::string catalog_to_csv(const std::vector<ClassificationRecord>& rs) {
  std::ostringstream os;
  os << "genus,q,wild,kind,family,params,hyperelliptic,aut_c,aut_order,"
        "exceptional\n";
  for (auto& r : rs) {
    os << r.g << ',' << r.q << ',' << (r.wild ? "true" : "false") << ','
       << r.kind << ',' << detail::csv_quote(r.family) << ','
       << detail::csv_quote(r.params) << ',';
    if (r.hyperelliptic) os << (*r.hyperelliptic ? "true" : "false");
    os << ',';
    if (r.aut.c) os << *r.aut.c;
    os << ',';
    if (r.aut.order) os << *r.aut.order;
    os << ',' << detail::csv_quote(r.aut.exceptional) << '\n';
  }
  return os.str();
}

inline std::string catalog_to_table(
    const std::vector<ClassificationRecord>& rs) {
  std::vector<std::array<std::string, 8>> rows;
  rows.push_back({"g", "q", "wild", "family", "params", "hyp", "c", "order"});
  for (auto& r : rs) {
    std::array<std::string, 8> row;
    row[0] = std::to_string(r.g);
    row[1] = std::to_string(r.q);
    row[2] = r.wild ? "wild" : "tame";
    row[3] = r.family;
    row[4] = r.params;
    row[5] = r.hyperelliptic ? (*r.hyperelliptic ? "yes" : "no") : "-";
    row[6] = r.aut.c ? std::to_string(*r.aut.c) : "-";
    row[7] = r.aut.order ? std::to_string(*r.aut.order) : "-";
    if (!r.aut.exceptional.empty()) row[7] += " (" + r.aut.exceptional + ")";
    rows.push_back(row);
  }
  std::array<size_t, 8> w{};
  for (auto& row : rows)
    for (size_t i = 0; i < 8; ++i) w[i] = std::max(w[i], row[i].size());
  std::ostringstream os;
  for (size_t ri = 0; ri < rows.size(); ++ri) {
    for (size_t i = 0; i < 8; ++i) {
      os << rows[ri][i];
      if (i + 1 < 8)
        os << std::string(w[i] - rows[ri][i].size() + 2, ' ');
    }
    os << '\n';
    if (ri == 0) {
      size_t total = 0;
      for (size_t i = 0; i < 8; ++i) total += w[i] + (i + 1 < 8 ? 2 : 0);
      os << std::string(total, '-') << '\n';
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Subset JSON-schema validation: type / properties / required / items /
// enum / additionalProperties / $ref into #/definitions.

namespace detail {

inline bool json_type_is(const Json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "integer") return v.is_number_integer();
  if (t == "number") return v.is_number();
  if (t == "boolean") return v.is_boolean();
  if (t == "null") return v.is_null();
  return false;
}

inline void schema_check(const Json& root, const Json& schema, const Json& v,
                         const std::string& path,
                         std::vector<std::string>& errors) {
  const Json* sch = &schema;
  if (sch->contains("$ref")) {
    std::string ref = (*sch)["$ref"].get<std::string>();
    const std::string prefix = "#/definitions/";
    if (ref.rfind(prefix, 0) != 0) {
      errors.push_back(path + ": unsupported $ref " + ref);
      return;
    }
    sch = &root["definitions"][ref.substr(prefix.size())];
  }
  if (sch->contains("type")) {
    const Json& t = (*sch)["type"];
    bool ok = false;
    if (t.is_string()) {
      ok = json_type_is(v, t.get<std::string>());
    } else {
      for (auto& tt : t)
        if (json_type_is(v, tt.get<std::string>())) ok = true;
    }
    if (!ok) {
      errors.push_back(path + ": type mismatch (want " + t.dump() + ")");
      return;
    }
  }
  if (sch->contains("enum")) {
    bool ok = false;
    for (auto& e : (*sch)["enum"])
      if (e == v) ok = true;
    if (!ok) errors.push_back(path + ": value not in enum");
  }
  if (v.is_object()) {
    if (sch->contains("required"))
      for (auto& req : (*sch)["required"])
        if (!v.contains(req.get<std::string>()))
          errors.push_back(path + ": missing required field '" +
                           req.get<std::string>() + "'");
    bool extra_forbidden = sch->contains("additionalProperties") &&
                           (*sch)["additionalProperties"].is_boolean() &&
                           !(*sch)["additionalProperties"].get<bool>();
    const Json props =
        sch->contains("properties") ? (*sch)["properties"] : Json::object();
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (props.contains(it.key())) {
        schema_check(root, props[it.key()], it.value(), path + "/" + it.key(),
                     errors);
      } else if (extra_forbidden) {
        errors.push_back(path + ": unexpected field '" + it.key() + "'");
      }
    }
  }
  if (v.is_array() && sch->contains("items")) {
    size_t i = 0;
    for (auto& el : v) {
      schema_check(root, (*sch)["items"], el,
                   path + "[" + std::to_string(i) + "]", errors);
      ++i;
    }
  }
}

}  // namespace detail

inline std::vector<std::string> validate_against_schema(const Json& schema,
                                                        const Json& doc) {
  std::vector<std::string> errors;
  detail::schema_check(schema, schema, doc, "$", errors);
  return errors;
}

inline std::vector<std::string> validate_catalog(const Json& doc) {
  Json schema = Json::parse(catalog_schema_text());
  return validate_against_schema(schema, doc);
}

}  // namespace qcurve
