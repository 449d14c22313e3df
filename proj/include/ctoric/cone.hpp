#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctoric/lattice.hpp"

namespace ctoric {

/// Sorted, 0-based facet indices. Human-facing output is 1-based.
using FacetSet = std::vector<std::size_t>;

inline std::string to_string(const FacetSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i] + 1;
  os << '}';
  return os.str();
}

class ConeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Polyhedral cone { x in R^n : <x, v_i> >= 0 } given by its inward facet
/// normals. The normals double as the characteristic map of the torus action.
struct ConeSpec {
  std::size_t dim = 0;
  std::vector<IntVector> normals;
  std::string name;

  std::size_t facet_count() const { return normals.size(); }
  IntMatrix normal_matrix() const { return IntMatrix::from_rows(normals, dim); }
  std::vector<IntVector> normals_of(const FacetSet& s) const {
    std::vector<IntVector> out;
    out.reserve(s.size());
    for (std::size_t i : s) out.push_back(normals.at(i));
    return out;
  }
};

/// Builds a cone, enforcing dimension >= 2, consistent lengths, primitive
/// normals and no duplicates. Messages name the offending normal (1-based).
inline ConeSpec make_cone(std::size_t dim, std::vector<IntVector> normals, std::string name = {}) {
  if (dim < 2) {
    std::ostringstream os;
    os << "dimension must be at least 2, got " << dim;
    throw ConeError(os.str());
  }
  if (normals.empty()) throw ConeError("at least one normal is required");
  for (std::size_t i = 0; i < normals.size(); ++i) {
    std::ostringstream os;
    if (normals[i].size() != dim) {
      os << "normal " << i + 1 << " has length " << normals[i].size() << ", expected " << dim;
      throw ConeError(os.str());
    }
    BigInt g = gcd_of(normals[i]);
    if (g == 0) {
      os << "normal " << i + 1 << " is the zero vector";
      throw ConeError(os.str());
    }
    if (g != 1) {
      os << "normal " << i + 1 << " not primitive (gcd " << g << ")";
      throw ConeError(os.str());
    }
    for (std::size_t j = 0; j < i; ++j)
      if (normals[j] == normals[i]) {
        os << "normal " << i + 1 << " duplicates normal " << j + 1;
        throw ConeError(os.str());
      }
  }
  return ConeSpec{dim, std::move(normals), std::move(name)};
}

/// The cone with every normal replaced by D * v_i.
inline ConeSpec transform_cone(const ConeSpec& cone, const IntMatrix& d) {
  ConeSpec out{cone.dim, {}, cone.name};
  out.normals.reserve(cone.normals.size());
  for (const auto& v : cone.normals) out.normals.push_back(d * v);
  return out;
}

}  // namespace ctoric
