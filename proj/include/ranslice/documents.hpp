#pragma once

// Typed document envelope: {schema_version, kind, body}. The kind is derived
// from the body alternative, so the two cannot disagree once parsed.

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

#include "ranslice/codec.hpp"

namespace ranslice {

inline constexpr std::string_view kSchemaVersion = "1.0.0";
inline constexpr std::array<std::string_view, 1> kSupportedSchemaVersions = {"1.0.0"};

enum class DocumentKind { Catalog, Topology, SliceRequest, SlicePlan, ProfilerPolicy, PlannerConfig };

template <>
struct EnumNames<DocumentKind> {
  static constexpr std::array<std::pair<DocumentKind, std::string_view>, 6> table{{
      {DocumentKind::Catalog, "CATALOG"},
      {DocumentKind::Topology, "TOPOLOGY"},
      {DocumentKind::SliceRequest, "SLICE_REQUEST"},
      {DocumentKind::SlicePlan, "SLICE_PLAN"},
      {DocumentKind::ProfilerPolicy, "PROFILER_POLICY"},
      {DocumentKind::PlannerConfig, "PLANNER_CONFIG"},
  }};
};

// Alternative order follows DocumentKind.
using DocumentBody =
    std::variant<Catalog, DeploymentArea, SliceRequest, SlicePlan, ProfilerPolicy, PlannerConfig>;

struct DocumentEnvelope {
  std::string schema_version{kSchemaVersion};
  DocumentBody body;

  DocumentKind kind() const { return static_cast<DocumentKind>(body.index()); }

  bool operator==(const DocumentEnvelope&) const = default;
};

namespace detail {

inline std::string position_of(std::string_view text, std::size_t byte) {
  // nlohmann reports the 1-based byte index of the offending character.
  const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

template <std::size_t I = 0>
DocumentBody decode_body(DocumentKind kind, const json& j) {
  if constexpr (I == std::variant_size_v<DocumentBody>) {
    throw Error(ErrorCode::Internal, "unhandled document kind");
  } else {
    if (static_cast<std::size_t>(kind) == I) {
      return DocumentBody(std::in_place_index<I>,
                          from_json_value<std::variant_alternative_t<I, DocumentBody>>(j, "/body"));
    }
    return decode_body<I + 1>(kind, j);
  }
}

}  // namespace detail

inline DocumentEnvelope parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, detail::position_of(text, e.byte) + ": " + e.what());
  }
  if (!root.is_object()) codec::shape_error("", "document must be an object");
  for (const auto& [key, value] : root.items()) {
    if (key != "schema_version" && key != "kind" && key != "body") codec::shape_error("/" + key, "unknown field");
  }
  if (!root.contains("schema_version") || !root["schema_version"].is_string()) {
    codec::shape_error("/schema_version", "missing or not a string");
  }
  const auto version = root["schema_version"].get<std::string>();
  if (std::find(kSupportedSchemaVersions.begin(), kSupportedSchemaVersions.end(), version) ==
      kSupportedSchemaVersions.end()) {
    throw Error(ErrorCode::UnsupportedVersion, "schema_version '" + version + "' is not supported");
  }
  if (!root.contains("kind") || !root["kind"].is_string()) codec::shape_error("/kind", "missing or not a string");
  const auto kind_name = root["kind"].get<std::string>();
  const auto kind = enum_from_string<DocumentKind>(kind_name);
  if (!kind) throw Error(ErrorCode::UnknownKind, "unknown document kind '" + kind_name + "'");
  if (!root.contains("body")) codec::shape_error("/body", "missing required field");

  DocumentEnvelope env;
  env.schema_version = version;
  env.body = detail::decode_body(*kind, root["body"]);
  return env;
}

inline json envelope_to_json(const DocumentEnvelope& env) {
  json out = json::object();
  out["schema_version"] = env.schema_version;
  out["kind"] = std::string(to_string(env.kind()));
  out["body"] = std::visit([](const auto& body) { return to_json_value(body); }, env.body);
  return out;
}

/// Canonical text: sorted keys, two-space indent, shortest round-trip doubles,
/// trailing newline.
inline std::string serialize_document(const DocumentEnvelope& env) { return envelope_to_json(env).dump(2) + "\n"; }

template <class T>
DocumentEnvelope make_document(T body) {
  DocumentEnvelope env;
  env.body = DocumentBody(std::move(body));
  return env;
}

/// Extracts a body of the expected type, or throws SHAPE_MISMATCH naming both kinds.
template <class T>
const T& expect_body(const DocumentEnvelope& env, DocumentKind expected) {
  if (const auto* body = std::get_if<T>(&env.body)) return *body;
  throw Error(ErrorCode::ShapeMismatch, "expected a " + std::string(to_string(expected)) + " document, got " +
                                            std::string(to_string(env.kind())));
}

}  // namespace ranslice
