#pragma once

// Moving a cone into the upper half space, slicing it at x_n = 1, and the
// combinatorics of the resulting polytope.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctoric/cone.hpp"
#include "ctoric/lattice.hpp"

namespace ctoric {

class SliceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Calls fn(subset) for every k-subset of {0..n-1}, in lexicographic order.
inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const FacetSet&)>& fn) {
  if (k > n) return;
  FacetSet s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  for (;;) {
    fn(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

inline bool is_subset(const FacetSet& a, const FacetSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline BigInt dot(const IntVector& a, const IntVector& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Primitive generators of the extreme rays of a strictly convex cone, each
/// the kernel direction of n-1 normals that satisfies every inequality.
inline std::vector<IntVector> extreme_rays(const ConeSpec& cone) {
  std::set<IntVector> rays;
  const std::size_t n = cone.dim;
  for_each_subset(cone.facet_count(), n - 1, [&](const FacetSet& s) {
    auto kernel = saturated_kernel(IntMatrix::from_rows(cone.normals_of(s), n));
    if (kernel.size() != 1) return;
    for (int sign : {1, -1}) {
      IntVector r = kernel.front();
      if (sign < 0)
        for (auto& x : r) x = -x;
      bool feasible = std::all_of(cone.normals.begin(), cone.normals.end(),
                                  [&](const IntVector& v) { return dot(v, r) >= 0; });
      if (feasible) rays.insert(r);
    }
  });
  return {rays.begin(), rays.end()};
}

/// Positive rational k_i with sum k_i v_i = e_n, present exactly when the
/// punctured cone lies in the open upper half space.
inline std::optional<RatVector> upper_half_certificate(const ConeSpec& cone) {
  const std::size_t n = cone.dim, m = cone.facet_count();
  IntVector sum(n);
  for (const auto& v : cone.normals)
    for (std::size_t j = 0; j < n; ++j) sum[j] += v[j];

  // Constructive case: the sum of normals is already a positive multiple of e_n.
  bool aligned = sum[n - 1] > 0;
  for (std::size_t j = 0; j + 1 < n && aligned; ++j) aligned = sum[j] == 0;
  if (aligned) return RatVector(m, Rational(1) / Rational(sum[n - 1]));

  if (rank_of(cone.normal_matrix()) != n) return std::nullopt;
  auto rays = extreme_rays(cone);
  if (rays.empty()) return std::nullopt;
  // e_n lies in the interior of the dual cone iff every ray has x_n > 0.
  std::optional<Rational> t;
  for (const auto& r : rays) {
    if (r[n - 1] <= 0) return std::nullopt;
    Rational bound = Rational(r[n - 1]) / Rational(dot(sum, r));
    if (!t || bound < *t) t = bound;
  }
  *t /= 2;
  // e_n - t*sum is interior to cone(v_i); a nonnegative basic solution exists.
  RatVector target(n);
  for (std::size_t j = 0; j < n; ++j) target[j] = Rational(j + 1 == n ? 1 : 0) - *t * Rational(sum[j]);
  std::optional<RatVector> result;
  for_each_subset(m, n, [&](const FacetSet& s) {
    if (result) return;
    IntMatrix basis_t = IntMatrix::from_rows(cone.normals_of(s), n).transpose();
    auto lambda = solve_rational(basis_t, target);
    if (!lambda) return;
    if (std::any_of(lambda->begin(), lambda->end(), [](const Rational& x) { return x < 0; })) return;
    RatVector k(m, *t);
    for (std::size_t i = 0; i < n; ++i) k[s[i]] += (*lambda)[i];
    result = std::move(k);
  });
  return result;
}

struct NormalizationResult {
  IntMatrix D;                  // det 1, D*u = e_n
  ConeSpec cone;                // normals D*v_i, same facet order
  IntVector u;                  // primitive direction of the normal sum
  BigInt k;                     // normal sum = k*u
  RatVector coefficients;       // positive k_i with sum k_i * D v_i = e_n
};

/// Moves the cone into the upper half space by a determinant-one integral map
/// sending the primitive direction of the normal sum to e_n.
inline NormalizationResult normalize(const ConeSpec& cone) {
  const std::size_t n = cone.dim;
  if (rank_of(cone.normal_matrix()) != n)
    throw SliceError("cone is not strictly convex: normal matrix has rank < " + std::to_string(n));
  IntVector sum(n);
  for (const auto& v : cone.normals)
    for (std::size_t j = 0; j < n; ++j) sum[j] += v[j];
  if (gcd_of(sum) == 0) throw SliceError("cone has empty interior: the normals sum to zero");
  PrimitivePart p = primitive_part(sum);
  IntMatrix d = complete_to_unimodular(p.u);
  NormalizationResult r{d, transform_cone(cone, d), p.u, p.k, {}};
  auto cert = upper_half_certificate(r.cone);
  if (!cert) throw SliceError("normalized cone failed the upper half space certificate");
  r.coefficients = std::move(*cert);
  return r;
}

/// P = { x in R^{n-1} : <x, truncated_i> >= offset_i }.
struct SlicePolytope {
  std::size_t ambient_dim = 0;
  std::vector<IntVector> truncated_normals;
  IntVector offsets;
  std::vector<RatVector> vertices;
  std::vector<FacetSet> vertex_facets;

  std::size_t facet_count() const { return truncated_normals.size(); }

  Rational evaluate(std::size_t facet, const RatVector& x) const {
    Rational s = 0;
    for (std::size_t j = 0; j < ambient_dim; ++j) s += Rational(truncated_normals[facet][j]) * x[j];
    return s;
  }
  bool contains(const RatVector& x) const {
    for (std::size_t i = 0; i < facet_count(); ++i)
      if (evaluate(i, x) < Rational(offsets[i])) return false;
    return true;
  }
};

/// Slices a cone already in the upper half space at x_n = 1 and enumerates
/// the vertices exactly over all (n-1)-subsets of facets.
inline SlicePolytope slice(const ConeSpec& normalized) {
  const std::size_t n = normalized.dim, k = n - 1, m = normalized.facet_count();
  auto cert = upper_half_certificate(normalized);
  if (!cert) throw SliceError("cone is not in the upper half space; normalize it first");

  SlicePolytope p;
  p.ambient_dim = k;
  for (const auto& v : normalized.normals) {
    p.truncated_normals.emplace_back(v.begin(), v.end() - 1);
    p.offsets.push_back(-v.back());
  }
  if (rank_of(IntMatrix::from_rows(p.truncated_normals, k)) != k)
    throw SliceError("unbounded slice: truncated normals do not span R^" + std::to_string(k));

  std::set<RatVector> seen;
  for_each_subset(m, k, [&](const FacetSet& s) {
    IntMatrix a(k, k);
    RatVector b(k);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) a(r, c) = p.truncated_normals[s[r]][c];
      b[r] = Rational(p.offsets[s[r]]);
    }
    auto x = solve_rational(a, b);
    if (!x || !p.contains(*x) || !seen.insert(*x).second) return;
    FacetSet on;
    for (std::size_t i = 0; i < m; ++i)
      if (p.evaluate(i, *x) == Rational(p.offsets[i])) on.push_back(i);
    p.vertices.push_back(*x);
    p.vertex_facets.push_back(std::move(on));
  });
  if (p.vertices.empty()) throw SliceError("empty slice");
  if (affine_rank(p.vertices) != k)
    throw SliceError("slice is not full-dimensional: the cone has empty interior");
  return p;
}

/// Nerve of the facets of P: index sets with nonempty common intersection.
struct FaceComplex {
  std::size_t facet_count = 0;
  std::set<FacetSet> faces;  // includes the empty set
  std::vector<FacetSet> maximal_faces;  // facet sets of the vertices
  std::vector<FacetSet> minimal_nonfaces;
  std::vector<std::size_t> f_vector;  // f_vector[c] = number of faces of cardinality c

  bool contains(const FacetSet& s) const { return faces.count(s) > 0; }
  /// Smallest set of facets containing the face cut out by s: the
  /// intersection of all maximal faces containing s.
  FacetSet closure(const FacetSet& s) const {
    std::optional<FacetSet> acc;
    for (const auto& mf : maximal_faces) {
      if (!is_subset(s, mf)) continue;
      if (!acc) {
        acc = mf;
      } else {
        FacetSet out;
        std::set_intersection(acc->begin(), acc->end(), mf.begin(), mf.end(), std::back_inserter(out));
        acc = std::move(out);
      }
    }
    return acc ? *acc : s;
  }
  std::size_t max_face_size() const { return f_vector.empty() ? 0 : f_vector.size() - 1; }
};

inline FaceComplex nerve(const SlicePolytope& p) {
  FaceComplex fc;
  fc.facet_count = p.facet_count();
  fc.faces.insert(FacetSet{});
  fc.maximal_faces = p.vertex_facets;
  std::sort(fc.maximal_faces.begin(), fc.maximal_faces.end());
  for (const auto& vf : p.vertex_facets) {
    const std::size_t sz = vf.size();
    for (unsigned long long mask = 1; mask < (1ULL << sz); ++mask) {
      FacetSet s;
      for (std::size_t b = 0; b < sz; ++b)
        if (mask & (1ULL << b)) s.push_back(vf[b]);
      fc.faces.insert(std::move(s));
    }
  }
  for (const auto& s : fc.faces) {
    if (fc.f_vector.size() <= s.size()) fc.f_vector.resize(s.size() + 1, 0);
    ++fc.f_vector[s.size()];
  }

  // Breadth-first by cardinality: a candidate of size c extends a face of
  // size c-1 by a larger index and has every (c-1)-subset a face.
  const std::size_t m = fc.facet_count;
  for (std::size_t c = 1; c <= fc.max_face_size() + 1 && c <= m; ++c) {
    for (const auto& base : fc.faces) {
      if (base.size() != c - 1) continue;
      const std::size_t start = base.empty() ? 0 : base.back() + 1;
      for (std::size_t i = start; i < m; ++i) {
        FacetSet cand = base;
        cand.push_back(i);
        if (fc.contains(cand)) continue;
        bool minimal = true;
        for (std::size_t drop = 0; drop < cand.size() && minimal; ++drop) {
          FacetSet sub;
          for (std::size_t j = 0; j < cand.size(); ++j)
            if (j != drop) sub.push_back(cand[j]);
          minimal = fc.contains(sub);
        }
        if (minimal) fc.minimal_nonfaces.push_back(std::move(cand));
      }
    }
  }
  std::sort(fc.minimal_nonfaces.begin(), fc.minimal_nonfaces.end());
  return fc;
}

enum class SmoothnessViolationKind { NonSimpleVertex, NonUnimodularVertex, NonPrimitiveNormal };

struct SmoothnessViolation {
  SmoothnessViolationKind kind;
  std::size_t index = 0;   // vertex index, or facet index for NonPrimitiveNormal
  FacetSet facets;         // facets through the vertex
  RatVector vertex;
  BigInt value;            // determinant, or gcd for NonPrimitiveNormal

  std::string describe() const {
    std::ostringstream os;
    switch (kind) {
      case SmoothnessViolationKind::NonSimpleVertex:
        os << "vertex " << index + 1 << " lies on " << facets.size() << " facets " << to_string(facets);
        break;
      case SmoothnessViolationKind::NonUnimodularVertex:
        os << "vertex " << index + 1 << " (facets " << to_string(facets) << ") has determinant " << value;
        break;
      case SmoothnessViolationKind::NonPrimitiveNormal:
        os << "truncated normal " << index + 1 << " not primitive (gcd " << value << ")";
        return os.str();
    }
    os << " at (";
    for (std::size_t j = 0; j < vertex.size(); ++j) os << (j ? "," : "") << to_string(vertex[j]);
    os << ')';
    return os.str();
  }
};

struct SmoothnessReport {
  bool delzant = true;
  bool truncated_primitive = true;
  std::vector<SmoothnessViolation> violations;

  bool passed() const { return delzant && truncated_primitive; }
};

/// P is Delzant (the truncated normals at every vertex form a Z-basis) and
/// every truncated normal is primitive.
inline SmoothnessReport smoothness_check(const SlicePolytope& p) {
  SmoothnessReport r;
  const std::size_t k = p.ambient_dim;
  for (std::size_t w = 0; w < p.vertices.size(); ++w) {
    const auto& facets = p.vertex_facets[w];
    if (facets.size() != k) {
      r.delzant = false;
      r.violations.push_back({SmoothnessViolationKind::NonSimpleVertex, w, facets, p.vertices[w], 0});
      continue;
    }
    std::vector<IntVector> rows;
    for (std::size_t i : facets) rows.push_back(p.truncated_normals[i]);
    BigInt det = determinant(IntMatrix::from_rows(rows, k));
    if (abs_value(det) != 1) {
      r.delzant = false;
      r.violations.push_back({SmoothnessViolationKind::NonUnimodularVertex, w, facets, p.vertices[w], det});
    }
  }
  for (std::size_t i = 0; i < p.facet_count(); ++i) {
    BigInt g = gcd_of(p.truncated_normals[i]);
    if (g != 1) {
      r.truncated_primitive = false;
      r.violations.push_back({SmoothnessViolationKind::NonPrimitiveNormal, i, {i}, {}, g});
    }
  }
  return r;
}

}  // namespace ctoric
