#pragma once

#include <string>
#include <vector>

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include "json.hpp"
#endif

#include "omplab/errors.hpp"
#include "omplab/report.hpp"

namespace omplab {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json element_json(ElementId x, const std::vector<std::string>& names) {
  Json j{{"index", x}};
  if (x < names.size()) j["name"] = names[x];
  return j;
}

inline Json elements_json(const std::vector<ElementId>& xs, const std::vector<std::string>& names) {
  Json arr = Json::array();
  for (ElementId x : xs) arr.push_back(element_json(x, names));
  return arr;
}

inline std::vector<ElementId> elements_from(const Json& arr) {
  std::vector<ElementId> out;
  for (const auto& e : arr) out.push_back(e.at("index").get<ElementId>());
  return out;
}

} // namespace detail

/// Serializes a report. Elements carry their index and, when `names` covers
/// them, their name. Key order is fixed, so output is byte-stable.
inline Json report_to_json(const ModelReport& r, const std::vector<std::string>& names = {}) {
  Json items = Json::array();
  for (const ItemResult& i : r.items) {
    Json values = Json::array();
    for (const NamedSet& v : i.values) {
      std::vector<ElementId> members(v.members.begin(), v.members.end());
      values.push_back(Json{{"label", v.label}, {"members", detail::elements_json(members, names)}});
    }
    Json item{{"label", i.label}, {"pass", i.pass}, {"witness", detail::elements_json(i.witness, names)},
              {"values", std::move(values)}, {"message", i.message}};
    item["line"] = i.line ? Json(*i.line) : Json(nullptr);
    item["checked"] = i.checked;
    items.push_back(std::move(item));
  }
  return Json{{"check", r.check}, {"pass", r.pass()}, {"items", std::move(items)}};
}

/// Inverse of report_to_json (names are dropped; indices are authoritative).
/// Throws ParseError on malformed input.
inline ModelReport report_from_json(const Json& j) {
  try {
    ModelReport r{j.at("check").get<std::string>(), {}};
    for (const auto& ji : j.at("items")) {
      ItemResult i;
      i.label = ji.at("label").get<std::string>();
      i.pass = ji.at("pass").get<bool>();
      i.witness = detail::elements_from(ji.at("witness"));
      for (const auto& jv : ji.at("values")) {
        NamedSet v{jv.at("label").get<std::string>(), {}};
        for (ElementId x : detail::elements_from(jv.at("members"))) v.members.insert(x);
        i.values.push_back(std::move(v));
      }
      i.message = ji.at("message").get<std::string>();
      if (!ji.at("line").is_null()) i.line = ji.at("line").get<std::size_t>();
      i.checked = ji.at("checked").get<std::uint64_t>();
      r.items.push_back(std::move(i));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what(), 0, 0);
  }
}

} // namespace omplab
