#pragma once

// Minimality, strict convexity and goodness of a cone; stabilizer data per face.

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ctoric/cone.hpp"
#include "ctoric/lattice.hpp"
#include "ctoric/slice.hpp"

namespace ctoric {

struct BasicValidation {
  bool is_strictly_convex = false;
  std::optional<bool> is_minimal;  // undetermined without a slice
  std::vector<std::string> diagnostics;
};

inline bool strictly_convex(const ConeSpec& cone) {
  return rank_of(cone.normal_matrix()) == cone.dim;
}

/// Strict convexity is full rank of the normal matrix. A normal is redundant
/// when the vertices of P on its hyperplane span less than a facet.
inline BasicValidation validate_basic(const ConeSpec& cone, const SlicePolytope& p) {
  BasicValidation r;
  r.is_strictly_convex = strictly_convex(cone);
  if (!r.is_strictly_convex) r.diagnostics.push_back("normal matrix has rank < " + std::to_string(cone.dim));
  bool minimal = true;
  const std::size_t k = p.ambient_dim;
  for (std::size_t i = 0; i < p.facet_count(); ++i) {
    std::vector<RatVector> on;
    for (std::size_t w = 0; w < p.vertices.size(); ++w)
      if (std::binary_search(p.vertex_facets[w].begin(), p.vertex_facets[w].end(), i)) on.push_back(p.vertices[w]);
    if (on.empty() || affine_rank(on) + 1 != k) {
      minimal = false;
      std::ostringstream os;
      os << "normal " << i + 1 << " is redundant: its hyperplane meets the slice in "
         << (on.empty() ? std::string("no point") : "a face of dimension " + std::to_string(affine_rank(on)));
      r.diagnostics.push_back(os.str());
    }
  }
  r.is_minimal = minimal;
  return r;
}

/// Same report without a precomputed slice; minimality stays undetermined
/// when the cone cannot be sliced.
inline BasicValidation validate_basic(const ConeSpec& cone) {
  if (!strictly_convex(cone)) {
    BasicValidation r;
    r.diagnostics.push_back("normal matrix has rank < " + std::to_string(cone.dim));
    return r;
  }
  try {
    return validate_basic(cone, slice(normalize(cone).cone));
  } catch (const SliceError& e) {
    BasicValidation r;
    r.is_strictly_convex = true;
    r.diagnostics.emplace_back(e.what());
    return r;
  }
}

enum class ViolationReason { NotSimple, NotSummand };

inline const char* to_string(ViolationReason r) {
  return r == ViolationReason::NotSimple ? "not-simple" : "not-summand";
}

struct GoodnessViolation {
  FacetSet face;
  ViolationReason reason;
  IntVector divisors;
};

struct GoodnessReport {
  bool is_strictly_convex = false;
  bool is_minimal = false;
  bool is_good = false;
  std::vector<GoodnessViolation> violations;
  std::vector<FacetSet> faces_checked;
};

/// Every face of codimension l lies in exactly l facets whose normals span a
/// rank-l direct summand of Z^n. Faces are the closed facet sets of the
/// nerve; the apex is excluded.
inline GoodnessReport goodness_check(const ConeSpec& cone, const BasicValidation& basic, const FaceComplex& nerve) {
  GoodnessReport r;
  r.is_strictly_convex = basic.is_strictly_convex;
  r.is_minimal = basic.is_minimal.value_or(false);
  std::set<FacetSet> closed;
  for (const auto& s : nerve.faces)
    if (!s.empty()) closed.insert(nerve.closure(s));
  for (const auto& t : closed) {
    auto rows = cone.normals_of(t);
    IntVector divisors = elementary_divisors(IntMatrix::from_rows(rows, cone.dim));
    r.faces_checked.push_back(t);
    if (divisors.size() != t.size()) {
      r.violations.push_back({t, ViolationReason::NotSimple, divisors});
    } else if (!is_direct_summand(rows, cone.dim)) {
      r.violations.push_back({t, ViolationReason::NotSummand, divisors});
    }
  }
  r.is_good = r.is_strictly_convex && r.is_minimal && r.violations.empty();
  return r;
}

struct StabilizerDescriptor {
  FacetSet face;
  std::size_t dimension = 0;
  IntVector smoothness_divisors;

  bool smooth() const {
    for (const auto& d : smoothness_divisors)
      if (d != 1) return false;
    return smoothness_divisors.size() == face.size();
  }
};

/// The subtorus fixing points of the face: generated by the face's normals.
inline StabilizerDescriptor stabilizer(const ConeSpec& cone, const FaceComplex& nerve, const FacetSet& face) {
  if (!nerve.contains(face)) throw ConeError("facet set " + to_string(face) + " is not a face of the nerve");
  StabilizerDescriptor d{face, 0, {}};
  if (face.empty()) return d;
  d.smoothness_divisors = elementary_divisors(IntMatrix::from_rows(cone.normals_of(face), cone.dim));
  d.dimension = d.smoothness_divisors.size();
  return d;
}

}  // namespace ctoric
