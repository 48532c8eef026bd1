#include "zroupoid/json_io.hpp"

#include "zroupoid/error.hpp"

namespace zroupoid {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::uint64_t require_index(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    throw ValidationError(where + " must be a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

template <std::size_t N>
Json witness_json(const PropertyVerdict<N>& v) {
  if (!v.witness) return nullptr;
  Json arr = Json::array();
  for (Element x : *v.witness) arr.push_back(x);
  return arr;
}

template <std::size_t N>
Json verdict_json(const PropertyVerdict<N>& v) {
  return Json{{"holds", v.holds}, {"witness", witness_json(v)}};
}

}  // namespace

Json to_json(const FiniteZroupoid& alg) {
  Json j;
  j["schema"] = kAlgebraSchema;
  j["size"] = alg.size();
  j["zero"] = alg.zero();
  j["table"] = alg.rows();
  if (!alg.labels().empty()) j["labels"] = alg.labels();
  return j;
}

FiniteZroupoid algebra_from_json(const Json& j) {
  const Json& schema = require(j, "schema");
  if (!schema.is_string() || schema.get<std::string>() != kAlgebraSchema) {
    throw ValidationError("expected \"schema\": \"" + std::string(kAlgebraSchema) + "\"");
  }
  const auto size = require_index(require(j, "size"), "size");
  const auto zero = require_index(require(j, "zero"), "zero");
  const Json& table = require(j, "table");
  if (!table.is_array()) throw ValidationError("table must be an array of rows");
  std::vector<std::vector<Element>> rows;
  for (std::size_t r = 0; r < table.size(); ++r) {
    const Json& row = table[r];
    if (!row.is_array()) throw ValidationError("table[" + std::to_string(r) + "] must be an array");
    std::vector<Element> values;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const auto where = "table[" + std::to_string(r) + "][" + std::to_string(c) + "]";
      const auto v = require_index(row[c], where);
      if (v > UINT32_MAX) throw ValidationError(where + " = " + std::to_string(v) + " out of range");
      values.push_back(static_cast<Element>(v));
    }
    rows.push_back(std::move(values));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const Json& l = j.at("labels");
    if (!l.is_array()) throw ValidationError("labels must be an array of strings");
    for (const auto& s : l) {
      if (!s.is_string()) throw ValidationError("labels must be an array of strings");
      labels.push_back(s.get<std::string>());
    }
  }
  if (zero > UINT32_MAX) throw ValidationError("zero out of range");
  return FiniteZroupoid(static_cast<std::size_t>(size), static_cast<Element>(zero), std::move(rows),
                        std::move(labels));
}

std::vector<FiniteZroupoid> algebras_from_json(const Json& j) {
  std::vector<FiniteZroupoid> out;
  if (j.is_array()) {
    for (const auto& item : j) out.push_back(algebra_from_json(item));
    return out;
  }
  if (j.is_object() && j.contains("schema") && j["schema"] == kEnumerationSchema) {
    return algebras_from_json(require(j, "algebras"));
  }
  out.push_back(algebra_from_json(j));
  return out;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

Json to_json(const Assignment& assignment) {
  Json j = Json::object();
  for (const auto& [name, value] : assignment) j[name] = value;
  return j;
}

Json to_json(const OrderReport& report, const FiniteZroupoid& alg) {
  Json j;
  j["schema"] = kOrderSchema;
  j["size"] = alg.size();
  j["matrix"] = report.matrix;
  j["reflexive"] = verdict_json(report.reflexive);
  j["antisymmetric"] = verdict_json(report.antisymmetric);
  j["transitive"] = verdict_json(report.transitive);
  j["total"] = verdict_json(report.total);
  j["partial_order"] = report.is_partial_order();
  j["greatest"] = report.greatest ? Json(*report.greatest) : Json(nullptr);
  if (report.is_total_order()) j["chain"] = chain_listing(report);
  return j;
}

Json to_json(const CheckResult& result, const Statement& statement) {
  Json j;
  j["schema"] = kCheckSchema;
  j["statement"] = print_statement(statement);
  j["holds"] = result.holds;
  j["witness"] = result.witness ? to_json(*result.witness) : Json(nullptr);
  return j;
}

Json to_json(const IsoResult& result) {
  Json j;
  j["schema"] = kIsoSchema;
  j["isomorphic"] = result.isomorphic;
  j["map"] = result.map ? Json(*result.map) : Json(nullptr);
  return j;
}

Json to_json(const EnumerationResult& result, const SearchConfig& config) {
  Json j;
  j["schema"] = kEnumerationSchema;
  j["size"] = config.size;
  j["mode"] = config.mode == SearchMode::chains_only ? "chains" : "all-i20";
  j["complete"] = result.complete;
  j["count"] = result.algebras.size();
  Json algebras = Json::array();
  for (const auto& a : result.algebras) algebras.push_back(to_json(a));
  j["algebras"] = std::move(algebras);
  return j;
}

Json to_json(const SuiteReport& report, const std::vector<NamedCheck>& checks) {
  Json j;
  j["schema"] = kSuiteSchema;
  const auto& s = report.summary;
  j["summary"] = {{"algebras", s.algebras}, {"checks", s.checks},  {"applied", s.applied},
                  {"passed", s.passed},     {"failed", s.failed}, {"skipped", s.skipped}};
  Json scopes = Json::array();
  for (const auto& f : report.scopes) scopes.push_back({{"I", f.i}, {"I20", f.i20}, {"I20-chain", f.chain}});
  j["scopes"] = std::move(scopes);
  Json verdicts = Json::array();
  for (const auto& v : report.verdicts) {
    Json e;
    e["algebra"] = v.algebra;
    e["check"] = checks.at(v.check).id;
    e["holds"] = v.holds;
    e["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
    if (!v.members.empty()) e["members"] = v.members;
    verdicts.push_back(std::move(e));
  }
  j["verdicts"] = std::move(verdicts);
  return j;
}

}  // namespace zroupoid
