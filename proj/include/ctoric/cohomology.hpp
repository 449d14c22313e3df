#pragma once

// Equivariant cohomology of the contact manifold, cohomology of the base toric
// manifold, and integral cohomology of the contact manifold from the kernel and
// cokernel of multiplication by the Euler form.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctoric/cone.hpp"
#include "ctoric/graded.hpp"
#include "ctoric/lattice.hpp"
#include "ctoric/slice.hpp"
#include "ctoric/validation.hpp"

namespace ctoric {

enum class CoefficientMode { Integral, Rational };

inline const char* to_string(CoefficientMode m) { return m == CoefficientMode::Integral ? "integral" : "rational"; }

/// Everything derived from a cone before any ring is built.
struct ConeAnalysis {
  ConeSpec cone;
  NormalizationResult normalization;
  SlicePolytope polytope;
  FaceComplex nerve;
  BasicValidation basic;
  GoodnessReport goodness;
  SmoothnessReport smoothness;

  std::size_t dim() const { return cone.dim; }
  std::size_t facet_count() const { return cone.facet_count(); }
};

/// Runs normalization, slicing, nerve, and all validation. Throws SliceError
/// when the cone cannot be sliced (not strictly convex, empty interior).
inline ConeAnalysis analyze(const ConeSpec& cone) {
  ConeAnalysis a{cone, normalize(cone), {}, {}, {}, {}, {}};
  a.polytope = slice(a.normalization.cone);
  a.nerve = nerve(a.polytope);
  a.basic = validate_basic(cone, a.polytope);
  a.goodness = goodness_check(cone, a.basic, a.nerve);
  a.smoothness = smoothness_check(a.polytope);
  return a;
}

/// Raised when a computation's preconditions on the cone do not hold.
class ValidationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require_good(const ConeAnalysis& a) {
  if (a.goodness.is_good) return;
  std::ostringstream os;
  os << "cone is not a strictly convex good cone";
  if (!a.goodness.is_minimal) os << " (normals are not minimal)";
  for (const auto& v : a.goodness.violations) {
    os << "; violation at " << to_string(v.face) << " (" << to_string(v.reason) << ", divisors "
       << to_string(v.divisors) << ")";
  }
  throw ValidationFailure(os.str());
}

inline void require_smooth(const ConeAnalysis& a, CoefficientMode mode) {
  if (mode == CoefficientMode::Rational || a.smoothness.passed()) return;
  std::ostringstream os;
  os << "slice fails the smoothness criterion";
  for (const auto& v : a.smoothness.violations) os << "; " << v.describe();
  os << " (rational mode is available)";
  throw ValidationFailure(os.str());
}

inline RingPresentation face_ring_presentation(const ConeAnalysis& a) {
  return {a.facet_count(), stanley_reisner(a.nerve), {}};
}

/// Z[x] / <I, J_1..J_count> with J_k read off the normalized normals.
inline RingPresentation presentation_with_forms(const ConeAnalysis& a, std::size_t count) {
  RingPresentation p = face_ring_presentation(a);
  auto forms = linear_forms(a.normalization.cone.normals, a.dim());
  p.linear_generators.assign(forms.begin(), forms.begin() + static_cast<std::ptrdiff_t>(count));
  return p;
}

struct EquivariantCohomology {
  RingPresentation presentation;
  std::vector<std::size_t> hilbert;  // ranks at degrees 0..bound
};

inline EquivariantCohomology equivariant_cohomology(const ConeAnalysis& a, unsigned max_degree) {
  require_good(a);
  EquivariantCohomology e{face_ring_presentation(a), {}};
  for (unsigned d = 0; d <= max_degree; ++d) e.hilbert.push_back(standard_monomials(e.presentation, d).size());
  return e;
}

struct ToricCohomology {
  CoefficientMode mode = CoefficientMode::Integral;
  GradedQuotient ring;  // degrees 0..n, the last verified to vanish
  std::vector<std::size_t> ranks() const { return ring.ranks(); }
};

inline ToricCohomology toric_cohomology(const ConeAnalysis& a, CoefficientMode mode) {
  require_good(a);
  require_smooth(a, mode);
  return {mode, graded_quotient(presentation_with_forms(a, a.dim() - 1), static_cast<unsigned>(a.dim()))};
}

/// Ranks of Z[x]/<I, J_1..J_{k-r}> for a rank-r subtorus, k = n-1.
inline std::vector<std::size_t> partial_equivariant(const ConeAnalysis& a, std::size_t r, unsigned max_degree) {
  const std::size_t k = a.dim() - 1;
  if (r > k) throw std::out_of_range("subtorus rank " + std::to_string(r) + " exceeds " + std::to_string(k));
  require_good(a);
  return graded_quotient(presentation_with_forms(a, k - r), max_degree).ranks();
}

enum class CheckStatus { Pass, Fail, NotApplicable };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    default: return "not-applicable";
  }
}

struct CheckRecord {
  std::string name;
  CheckStatus status = CheckStatus::NotApplicable;
  std::string evidence;
  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

/// Odd cohomology in degree 2d+1: a saturated basis of ker(rho_d), each vector
/// in the degree-d basis of the base ring.
struct OddGenerators {
  unsigned polynomial_degree = 0;
  std::vector<IntVector> kernel;
  std::vector<Polynomial> representatives;

  unsigned cohomological_degree() const { return 2 * polynomial_degree + 1; }
};

struct ContactCohomologyReport {
  CoefficientMode mode = CoefficientMode::Integral;
  std::size_t dim = 0;
  std::vector<std::size_t> betti;    // b_0 .. b_{2n-1}
  std::vector<IntVector> torsion;    // per cohomological degree; empty in rational mode
  GradedQuotient toric;              // Z[x]/<I, J~>
  GradedQuotient even;               // Z[x]/<I, J>
  MultiplicationMap rho;             // multiplication by J_n on `toric`
  std::vector<OddGenerators> odd;    // empty in rational mode
  std::vector<BigInt> h;             // h-vector of the nerve
  std::vector<std::size_t> face_ring_ranks;
  std::vector<BigInt> face_ring_oracle;
  std::vector<CheckRecord> checks;

  Polynomial euler_form() const { return linear_polynomial(rho.form); }
};

std::vector<CheckRecord> consistency_checks(const ContactCohomologyReport& r);

inline ContactCohomologyReport contact_cohomology(const ConeAnalysis& a, CoefficientMode mode) {
  require_good(a);
  require_smooth(a, mode);
  const std::size_t n = a.dim();
  const auto top = static_cast<unsigned>(n);

  ContactCohomologyReport r;
  r.mode = mode;
  r.dim = n;
  r.toric = graded_quotient(presentation_with_forms(a, n - 1), top);
  r.even = graded_quotient(presentation_with_forms(a, n), top);
  r.rho = multiplication_map(r.toric, linear_forms(a.normalization.cone.normals, n).back());
  r.h = h_vector(a.nerve, n - 1);
  auto face_ring = face_ring_presentation(a);
  for (unsigned d = 0; d <= top; ++d) {
    r.face_ring_ranks.push_back(standard_monomials(face_ring, d).size());
    r.face_ring_oracle.push_back(face_ring_hilbert(a.nerve, d));
  }

  // H^0 = Z; H^{2d+1} = ker rho_d; H^{2d+2} = coker rho_d.
  r.betti.assign(2 * n, 0);
  r.torsion.assign(2 * n, {});
  r.betti[0] = r.toric.at(0).rank();
  for (unsigned d = 0; d < top; ++d) {
    if (2 * d + 1 < 2 * n) r.betti[2 * d + 1] = r.rho.kernels[d].size();
    if (2 * d + 2 < 2 * n) {
      r.betti[2 * d + 2] = r.rho.cokernel_ranks[d];
      r.torsion[2 * d + 2] = r.rho.cokernel_divisors[d];
    }
  }
  if (mode == CoefficientMode::Integral) {
    for (unsigned d = 0; d < top; ++d) {
      OddGenerators g{d, r.rho.kernels[d], {}};
      for (const auto& k : g.kernel) {
        Polynomial p;
        for (std::size_t j = 0; j < k.size(); ++j) p = p + scaled(r.toric.at(d).basis[j], k[j]);
        g.representatives.push_back(std::move(p));
      }
      r.odd.push_back(std::move(g));
    }
  } else {
    r.torsion.assign(2 * n, {});
  }
  r.checks = consistency_checks(r);
  return r;
}

// ---------------------------------------------------------------------------
// Ring and module structure

struct EvenGenerator {
  unsigned polynomial_degree = 0;
  bool torsion = false;
  std::size_t index = 0;  // position within the free basis or torsion generators
  BigInt order = 0;       // 0 for free generators
  Polynomial representative;

  unsigned cohomological_degree() const { return 2 * polynomial_degree; }
};

struct EvenProduct {
  std::size_t left = 0, right = 0;  // indices into generators, left <= right
  unsigned polynomial_degree = 0;
  QuotientElement value;
};

/// Products of the positive-degree generators of H^even = Z[x]/<I,J>; products
/// landing in degree >= n vanish and are omitted.
struct EvenRingStructure {
  std::vector<EvenGenerator> generators;
  std::vector<EvenProduct> products;

  /// Element of the even ring at `degree` represented by generator g.
  QuotientElement generator_element(const GradedQuotient& ring, std::size_t g) const {
    const auto& gen = generators.at(g);
    QuotientElement e = ring.at(gen.polynomial_degree).zero();
    if (gen.torsion) {
      e.torsion.at(gen.index) = 1;
    } else {
      e.free.at(gen.index) = 1;
    }
    return e;
  }
};

inline EvenRingStructure even_ring_structure(const ContactCohomologyReport& r) {
  if (r.mode != CoefficientMode::Integral) throw ValidationFailure("even ring structure is only computed integrally");
  EvenRingStructure s;
  const unsigned top = static_cast<unsigned>(r.dim) - 1;
  for (unsigned d = 1; d <= top; ++d) {
    const auto& q = r.even.at(d);
    for (std::size_t i = 0; i < q.basis.size(); ++i) s.generators.push_back({d, false, i, 0, q.basis[i]});
    for (std::size_t i = 0; i < q.torsion_generators.size(); ++i)
      s.generators.push_back({d, true, i, q.divisors[i], q.torsion_generators[i]});
  }
  for (std::size_t i = 0; i < s.generators.size(); ++i)
    for (std::size_t j = i; j < s.generators.size(); ++j) {
      const unsigned d = s.generators[i].polynomial_degree + s.generators[j].polynomial_degree;
      if (d > top) continue;
      s.products.push_back({i, j, d, r.even.multiply(s.generators[i].representative, s.generators[j].representative, d)});
    }
  return s;
}

/// An odd class of degree 2*polynomial_degree+1 in kernel-basis coordinates.
struct OddClass {
  unsigned polynomial_degree = 0;
  IntVector coefficients;  // empty when the degree is beyond the top class

  bool is_zero() const {
    return std::all_of(coefficients.begin(), coefficients.end(), [](const BigInt& x) { return x == 0; });
  }
  friend bool operator==(const OddClass&, const OddClass&) = default;
};

/// Action of an even class (any homogeneous representative in Z[x]) on an odd
/// class, computed in the base ring and re-expressed in the kernel basis.
inline OddClass odd_module_action(const ContactCohomologyReport& r, const Polynomial& even, unsigned even_degree,
                                  const OddClass& odd) {
  if (r.mode != CoefficientMode::Integral) throw ValidationFailure("module action is only computed integrally");
  const unsigned top = static_cast<unsigned>(r.dim) - 1;
  if (odd.polynomial_degree > top) throw AlgebraError("odd class degree out of range");
  const unsigned target = odd.polynomial_degree + even_degree;
  if (target > top) return {target, {}};

  const auto& src = r.odd.at(odd.polynomial_degree);
  if (odd.coefficients.size() != src.kernel.size()) throw AlgebraError("odd class has the wrong number of coordinates");
  Polynomial lifted;
  for (std::size_t i = 0; i < src.representatives.size(); ++i)
    lifted = lifted + scaled(src.representatives[i], odd.coefficients[i]);
  QuotientElement product = r.toric.multiply(even, lifted, target);

  const auto& rho = r.rho.matrices.at(target);
  IntVector image = rho * product.free;
  if (std::any_of(image.begin(), image.end(), [](const BigInt& x) { return x != 0; }))
    throw AlgebraError("product left the kernel of the Euler form");
  auto coords = solve_in_lattice(r.odd.at(target).kernel, product.free);
  if (!coords) throw AlgebraError("product is not in the span of the kernel basis");
  return {target, *coords};
}

// ---------------------------------------------------------------------------
// Consistency checks

namespace detail {

inline std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

inline CheckRecord verdict(std::string name, bool ok, std::string evidence) {
  return {std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(evidence)};
}

}  // namespace detail

inline std::vector<CheckRecord> consistency_checks(const ContactCohomologyReport& r) {
  using detail::join;
  using detail::verdict;
  std::vector<CheckRecord> out;
  const std::size_t n = r.dim;
  const bool integral = r.mode == CoefficientMode::Integral;
  const auto& b = r.betti;

  out.push_back(verdict("betti_endpoints", b.front() == 1 && b.back() == 1,
                        "b0=" + std::to_string(b.front()) + ", b" + std::to_string(2 * n - 1) + "=" +
                            std::to_string(b.back())));
  out.push_back(verdict("h1_vanishes", b[1] == 0, "b1=" + std::to_string(b[1])));

  {
    bool ok = true;
    std::ostringstream ev;
    for (std::size_t deg = 1; deg + 1 <= n; deg += 2) {
      ok = ok && b[deg] == 0;
      ev << "b" << deg << "=" << b[deg] << ' ';
    }
    std::string e = ev.str();
    out.push_back(verdict("odd_vanishing", ok, e.empty() ? "empty window" : e.substr(0, e.size() - 1)));
  }
  {
    bool ok = true;
    std::ostringstream ev;
    for (std::size_t deg = (n % 2 ? n + 1 : n); deg <= 2 * n - 2; deg += 2) {
      ok = ok && b[deg] == 0;
      ev << "b" << deg << "=" << b[deg] << ' ';
    }
    std::string e = ev.str();
    out.push_back(verdict("even_rational_vanishing", ok, e.empty() ? "empty window" : e.substr(0, e.size() - 1)));
  }
  {
    long long chi = 0;
    for (std::size_t i = 0; i < b.size(); ++i) chi += (i % 2 ? -1LL : 1LL) * static_cast<long long>(b[i]);
    out.push_back(verdict("euler_characteristic", chi == 0, "chi=" + std::to_string(chi)));
  }
  {
    bool ok = true;
    for (std::size_t i = 0; i < b.size(); ++i) ok = ok && b[i] == b[b.size() - 1 - i];
    out.push_back(verdict("poincare_duality", ok, "betti=" + join(b)));
  }
  {
    // Over Q, e^{n-1-2j}: degree j -> degree n-1-j has rank h_j.
    bool ok = true;
    std::ostringstream ev;
    for (std::size_t j = 0; 2 * j <= n - 1; ++j) {
      const std::size_t hj = r.toric.at(static_cast<unsigned>(j)).rank();
      IntMatrix acc = IntMatrix::identity(hj);
      for (std::size_t d = j; d < n - 1 - j; ++d) acc = r.rho.matrices[d] * acc;
      const std::size_t rk = acc.empty() ? 0 : rank_of(acc);
      ok = ok && rk == hj;
      ev << "e^" << n - 1 - 2 * j << ":H" << 2 * j << "->H" << 2 * (n - 1 - j) << " rank " << rk << "/" << hj << ' ';
    }
    std::string e = ev.str();
    out.push_back(verdict("hard_lefschetz", ok, e.substr(0, e.size() - 1)));
  }
  {
    bool ok = true;
    std::ostringstream ev;
    for (std::size_t j = 0; j < r.h.size(); ++j) {
      ok = ok && r.h[j] == r.h[r.h.size() - 1 - j];
      ev << (j ? "," : "") << r.h[j];
    }
    out.push_back(verdict("h_vector_symmetry", ok, "h=(" + ev.str() + ")"));
  }
  {
    auto ranks = r.toric.ranks();
    bool ok = ranks.back() == 0;
    for (std::size_t d = 0; d < n; ++d) ok = ok && BigInt(ranks[d]) == r.h[d];
    out.push_back(verdict("toric_ranks_match_h_vector", ok, "ranks=" + join(ranks)));
  }
  {
    bool ok = r.face_ring_ranks.size() == r.face_ring_oracle.size();
    for (std::size_t d = 0; ok && d < r.face_ring_ranks.size(); ++d) ok = BigInt(r.face_ring_ranks[d]) == r.face_ring_oracle[d];
    out.push_back(verdict("face_ring_hilbert", ok, "ranks=" + join(r.face_ring_ranks)));
  }
  {
    // h_d - dim ker rho_d = h_{d+1} - dim coker at degree d+1
    bool ok = true;
    for (std::size_t d = 0; d < n; ++d) {
      const long long lhs = static_cast<long long>(r.toric.at(static_cast<unsigned>(d)).rank()) -
                            static_cast<long long>(r.rho.kernels[d].size());
      const long long rhs = static_cast<long long>(r.toric.at(static_cast<unsigned>(d + 1)).rank()) -
                            static_cast<long long>(r.rho.cokernel_ranks[d]);
      ok = ok && lhs == rhs;
    }
    out.push_back(verdict("gysin_exactness", ok, "ker=" + [&] {
      std::vector<std::size_t> k;
      for (const auto& kb : r.rho.kernels) k.push_back(kb.size());
      return join(k);
    }() + ", coker=" + join(r.rho.cokernel_ranks)));
  }
  {
    // Two odd classes have degrees summing past 2n-1 once no odd class sits below degree n.
    std::size_t lowest = 0;
    for (std::size_t deg = 1; deg < b.size() && !lowest; deg += 2)
      if (b[deg]) lowest = deg;
    const bool ok = lowest == 0 || 2 * lowest > 2 * n - 1;
    out.push_back(verdict("odd_products_vanish", ok, "lowest odd degree " + std::to_string(lowest)));
  }

  if (!integral) {
    for (const char* name : {"toric_torsion_free", "kernel_torsion_free", "even_presentation_matches_cokernel"})
      out.push_back({name, CheckStatus::NotApplicable, "rational mode"});
    return out;
  }
  {
    std::ostringstream ev;
    for (unsigned d = 0; d <= r.toric.max_degree(); ++d)
      if (!r.toric.at(d).divisors.empty()) ev << "degree " << d << " divisors " << to_string(r.toric.at(d).divisors) << ' ';
    out.push_back(verdict("toric_torsion_free", r.toric.torsion_free(), ev.str().empty() ? "no divisors" : ev.str()));
  }
  {
    bool ok = true;
    for (std::size_t d = 0; d < r.rho.kernels.size(); ++d) {
      const auto& k = r.rho.kernels[d];
      if (!k.empty()) ok = ok && is_direct_summand(k, r.toric.at(static_cast<unsigned>(d)).rank());
    }
    out.push_back(verdict("kernel_torsion_free", ok, ok ? "all kernel bases are direct summands" : "non-saturated kernel"));
  }
  {
    bool ok = r.even.at(0).rank() == 1 && r.even.at(0).divisors.empty();
    std::ostringstream ev;
    for (std::size_t d = 0; d < n; ++d) {
      const auto& q = r.even.at(static_cast<unsigned>(d + 1));
      ok = ok && q.rank() == r.rho.cokernel_ranks[d] && q.divisors == r.rho.cokernel_divisors[d];
      ev << "H" << 2 * (d + 1) << ": rank " << q.rank() << " divisors " << to_string(q.divisors) << ' ';
    }
    std::string e = ev.str();
    out.push_back(verdict("even_presentation_matches_cokernel", ok, e.substr(0, e.size() - 1)));
  }
  return out;
}

}  // namespace ctoric
