#pragma once

// JSON plumbing: exact integer/rational serialization and the cone file format.

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ctoric/cone.hpp"
#include "ctoric/lattice.hpp"

namespace nlohmann {

// Integers that fit in 64 bits are plain JSON numbers; anything larger is a
// decimal string so no precision is lost.
template <>
struct adl_serializer<ctoric::BigInt> {
  static void to_json(json& j, const ctoric::BigInt& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
      j = x.convert_to<std::int64_t>();
    } else {
      j = x.str();
    }
  }
  static void from_json(const json& j, ctoric::BigInt& x) {
    if (j.is_number_integer()) {
      x = j.is_number_unsigned() ? ctoric::BigInt(j.get<std::uint64_t>()) : ctoric::BigInt(j.get<std::int64_t>());
    } else if (j.is_string()) {
      x = ctoric::BigInt(j.get<std::string>());
    } else {
      throw std::invalid_argument("expected an integer, got " + std::string(j.type_name()));
    }
  }
};

template <>
struct adl_serializer<ctoric::Rational> {
  static void to_json(json& j, const ctoric::Rational& q) { j = ctoric::to_string(q); }
  static void from_json(const json& j, ctoric::Rational& q) {
    if (j.is_number_integer()) {
      q = ctoric::Rational(j.get<ctoric::BigInt>());
      return;
    }
    q = ctoric::Rational(j.get<std::string>());
  }
};

template <typename T>
struct adl_serializer<std::optional<T>> {
  static void to_json(json& j, const std::optional<T>& v) {
    if (v) {
      j = *v;
    } else {
      j = nullptr;
    }
  }
  static void from_json(const json& j, std::optional<T>& v) {
    if (j.is_null()) {
      v.reset();
    } else {
      v = j.get<T>();
    }
  }
};

}  // namespace nlohmann

namespace ctoric {

using Json = nlohmann::json;

/// Malformed input: syntax errors, wrong types, missing fields.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ConeFile {
  ConeSpec cone;
  std::optional<std::string> mode;  // "integral" or "rational" when given
};

/// Parses a cone document. Structural problems raise ParseError; violations
/// of the cone invariants (length, primitivity, duplicates) raise ConeError.
inline ConeFile parse_cone(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("cone file must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "dim" && key != "normals" && key != "name" && key != "mode")
      throw ParseError("unknown field \"" + key + "\"");
  }
  if (!doc.contains("dim")) throw ParseError("missing field \"dim\"");
  if (!doc.contains("normals")) throw ParseError("missing field \"normals\"");
  const Json& dim = doc["dim"];
  if (!dim.is_number_integer() || dim.get<long long>() < 0) throw ParseError("field \"dim\" must be a non-negative integer");
  const Json& normals = doc["normals"];
  if (!normals.is_array()) throw ParseError("field \"normals\" must be an array");

  std::vector<IntVector> vs;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    const Json& row = normals[i];
    if (!row.is_array()) throw ParseError("normal " + std::to_string(i + 1) + " must be an array of integers");
    IntVector v;
    for (std::size_t j = 0; j < row.size(); ++j) {
      const Json& x = row[j];
      if (!x.is_number_integer())
        throw ParseError("normal " + std::to_string(i + 1) + " entry " + std::to_string(j + 1) + " is not an integer");
      v.push_back(x.get<BigInt>());
    }
    vs.push_back(std::move(v));
  }

  ConeFile out;
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("field \"name\" must be a string");
    name = doc["name"].get<std::string>();
  }
  if (doc.contains("mode")) {
    if (!doc["mode"].is_string()) throw ParseError("field \"mode\" must be a string");
    std::string m = doc["mode"].get<std::string>();
    if (m != "integral" && m != "rational") throw ParseError("field \"mode\" must be \"integral\" or \"rational\"");
    out.mode = m;
  }
  out.cone = make_cone(dim.get<std::size_t>(), std::move(vs), std::move(name));
  return out;
}

inline Json cone_to_json(const ConeSpec& cone, const std::optional<std::string>& mode = std::nullopt) {
  Json j;
  j["dim"] = cone.dim;
  j["normals"] = cone.normals;
  if (!cone.name.empty()) j["name"] = cone.name;
  if (mode) j["mode"] = *mode;
  return j;
}

/// 64-bit FNV-1a, used to fingerprint a run configuration.
inline std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = digits[h & 0xf];
  return out;
}

}  // namespace ctoric
