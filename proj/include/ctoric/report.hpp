#pragma once

// The report document: one typed struct per section, built from pipeline
// results, serialized to JSON and rendered as text from the same data.

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "ctoric/cohomology.hpp"
#include "ctoric/io.hpp"

namespace ctoric {

inline constexpr const char* kToolVersion = "0.1.0";

using IndexList = std::vector<std::size_t>;  // 1-based facet or generator indices

inline IndexList one_based(const FacetSet& s) {
  IndexList out;
  for (std::size_t i : s) out.push_back(i + 1);
  return out;
}

struct InputSection {
  std::string name;
  std::size_t dim = 0;
  std::vector<IntVector> normals;
  std::string mode;
  friend bool operator==(const InputSection&, const InputSection&) = default;
};

struct NormalizationSection {
  std::vector<IntVector> D;
  IntVector u;
  BigInt k;
  std::vector<IntVector> normals;
  std::vector<Rational> certificate;
  friend bool operator==(const NormalizationSection&, const NormalizationSection&) = default;
};

struct GoodnessViolationEntry {
  IndexList face;
  std::string reason;
  IntVector divisors;
  friend bool operator==(const GoodnessViolationEntry&, const GoodnessViolationEntry&) = default;
};

struct SmoothnessEntry {
  std::string kind;
  IndexList facets;
  std::vector<Rational> vertex;
  BigInt value;
  std::string message;
  friend bool operator==(const SmoothnessEntry&, const SmoothnessEntry&) = default;
};

struct ValidationSection {
  bool strictly_convex = false;
  std::optional<bool> minimal;
  std::optional<bool> good;
  std::vector<GoodnessViolationEntry> violations;
  std::size_t faces_checked = 0;
  std::optional<bool> smooth;
  std::vector<SmoothnessEntry> smoothness_violations;
  std::vector<std::string> diagnostics;
  friend bool operator==(const ValidationSection&, const ValidationSection&) = default;
};

struct SliceSection {
  std::size_t dim = 0;
  std::vector<std::vector<Rational>> vertices;
  std::vector<IndexList> vertex_facets;
  std::vector<std::size_t> f_vector;  // f_{-1}, f_0, ... of the nerve
  std::vector<IndexList> minimal_nonfaces;
  std::vector<BigInt> h_vector;
  friend bool operator==(const SliceSection&, const SliceSection&) = default;
};

struct StabilizerEntry {
  IndexList face;
  std::size_t dimension = 0;
  IntVector divisors;
  bool smooth = false;
  friend bool operator==(const StabilizerEntry&, const StabilizerEntry&) = default;
};

struct EquivariantSection {
  std::vector<std::string> generators;
  std::vector<std::size_t> hilbert;
  friend bool operator==(const EquivariantSection&, const EquivariantSection&) = default;
};

struct ToricSection {
  std::vector<std::size_t> ranks;
  std::vector<IntVector> torsion;  // per polynomial degree
  std::vector<std::vector<std::string>> basis;
  friend bool operator==(const ToricSection&, const ToricSection&) = default;
};

struct PartialSection {
  std::size_t subtorus_rank = 0;
  std::vector<std::string> linear_forms;
  std::vector<std::size_t> ranks;
  friend bool operator==(const PartialSection&, const PartialSection&) = default;
};

struct EvenGeneratorEntry {
  unsigned degree = 0;  // cohomological
  BigInt order;         // 0 for free generators
  std::string representative;
  friend bool operator==(const EvenGeneratorEntry&, const EvenGeneratorEntry&) = default;
};

struct EvenProductEntry {
  std::size_t left = 0, right = 0;  // 1-based generator indices
  unsigned degree = 0;              // cohomological
  IntVector free;
  IntVector torsion;
  friend bool operator==(const EvenProductEntry&, const EvenProductEntry&) = default;
};

struct EvenStructureSection {
  std::vector<EvenGeneratorEntry> generators;
  std::vector<EvenProductEntry> products;
  friend bool operator==(const EvenStructureSection&, const EvenStructureSection&) = default;
};

struct OddGeneratorEntry {
  unsigned degree = 0;  // cohomological
  std::vector<IntVector> kernel;
  std::vector<std::string> representatives;
  friend bool operator==(const OddGeneratorEntry&, const OddGeneratorEntry&) = default;
};

struct ContactSection {
  std::vector<std::size_t> betti;
  std::vector<IntVector> torsion;  // per cohomological degree
  std::string euler_form;
  std::optional<EvenStructureSection> even_structure;
  std::vector<OddGeneratorEntry> odd_generators;
  friend bool operator==(const ContactSection&, const ContactSection&) = default;
};

struct CheckEntry {
  std::string name;
  std::string status;
  std::string evidence;
  friend bool operator==(const CheckEntry&, const CheckEntry&) = default;
};

struct ConfigSection {
  std::string command;
  std::string mode;
  unsigned max_degree = 0;
  std::optional<std::size_t> subtorus_rank;
  std::string hash;
  friend bool operator==(const ConfigSection&, const ConfigSection&) = default;
};

struct ReportFile {
  InputSection input;
  std::optional<NormalizationSection> normalization;
  std::optional<ValidationSection> validation;
  std::optional<SliceSection> slice;
  std::optional<std::vector<StabilizerEntry>> stabilizers;
  std::optional<EquivariantSection> equivariant;
  std::optional<ToricSection> toric;
  std::optional<PartialSection> partial;
  std::optional<ContactSection> contact;
  std::optional<std::vector<CheckEntry>> checks;
  std::optional<std::string> error;
  std::string version = kToolVersion;
  ConfigSection config;
  friend bool operator==(const ReportFile&, const ReportFile&) = default;
};

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(InputSection, name, dim, normals, mode)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(NormalizationSection, D, u, k, normals, certificate)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(GoodnessViolationEntry, face, reason, divisors)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SmoothnessEntry, kind, facets, vertex, value, message)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ValidationSection, strictly_convex, minimal, good, violations, faces_checked, smooth,
                                   smoothness_violations, diagnostics)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SliceSection, dim, vertices, vertex_facets, f_vector, minimal_nonfaces, h_vector)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(StabilizerEntry, face, dimension, divisors, smooth)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(EquivariantSection, generators, hilbert)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ToricSection, ranks, torsion, basis)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(PartialSection, subtorus_rank, linear_forms, ranks)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(EvenGeneratorEntry, degree, order, representative)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(EvenProductEntry, left, right, degree, free, torsion)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(EvenStructureSection, generators, products)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(OddGeneratorEntry, degree, kernel, representatives)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ContactSection, betti, torsion, euler_form, even_structure, odd_generators)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CheckEntry, name, status, evidence)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ConfigSection, command, mode, max_degree, subtorus_rank, hash)

// Absent sections are omitted rather than written as null.
inline void to_json(Json& j, const ReportFile& r) {
  j = Json::object();
  j["input"] = r.input;
  auto put = [&j](const char* key, const auto& section) {
    if (section) j[key] = *section;
  };
  put("normalization", r.normalization);
  put("validation", r.validation);
  put("slice", r.slice);
  put("stabilizers", r.stabilizers);
  put("equivariant", r.equivariant);
  put("toric", r.toric);
  put("partial", r.partial);
  put("contact", r.contact);
  put("checks", r.checks);
  put("error", r.error);
  j["version"] = r.version;
  j["config"] = r.config;
}

inline void from_json(const Json& j, ReportFile& r) {
  r = ReportFile{};
  j.at("input").get_to(r.input);
  auto take = [&j](const char* key, auto& section) {
    if (j.contains(key)) {
      section.emplace();
      j.at(key).get_to(*section);
    }
  };
  take("normalization", r.normalization);
  take("validation", r.validation);
  take("slice", r.slice);
  take("stabilizers", r.stabilizers);
  take("equivariant", r.equivariant);
  take("toric", r.toric);
  take("partial", r.partial);
  take("contact", r.contact);
  take("checks", r.checks);
  take("error", r.error);
  j.at("version").get_to(r.version);
  j.at("config").get_to(r.config);
}

inline std::string to_json_text(const ReportFile& r) { return Json(r).dump(2) + "\n"; }

inline ReportFile report_from_json_text(const std::string& text) { return Json::parse(text).get<ReportFile>(); }

// ---------------------------------------------------------------------------
// Builders

inline InputSection make_input_section(const ConeSpec& cone, CoefficientMode mode) {
  return {cone.name, cone.dim, cone.normals, to_string(mode)};
}

inline NormalizationSection make_normalization_section(const NormalizationResult& n) {
  NormalizationSection s;
  for (std::size_t i = 0; i < n.D.rows(); ++i) s.D.push_back(n.D.row(i));
  s.u = n.u;
  s.k = n.k;
  s.normals = n.cone.normals;
  s.certificate = n.coefficients;
  return s;
}

inline const char* to_string(SmoothnessViolationKind k) {
  switch (k) {
    case SmoothnessViolationKind::NonSimpleVertex: return "non-simple-vertex";
    case SmoothnessViolationKind::NonUnimodularVertex: return "non-unimodular-vertex";
    default: return "non-primitive-normal";
  }
}

/// Validation verdicts; `smooth` is only reported when it matters for `mode`.
inline ValidationSection make_validation_section(const ConeAnalysis& a, CoefficientMode mode) {
  ValidationSection s;
  s.strictly_convex = a.goodness.is_strictly_convex;
  s.minimal = a.basic.is_minimal;
  s.good = a.goodness.is_good;
  for (const auto& v : a.goodness.violations) s.violations.push_back({one_based(v.face), to_string(v.reason), v.divisors});
  s.faces_checked = a.goodness.faces_checked.size();
  s.smooth = a.smoothness.passed();
  for (const auto& v : a.smoothness.violations)
    s.smoothness_violations.push_back({to_string(v.kind), one_based(v.facets), v.vertex, v.value, v.describe()});
  s.diagnostics = a.basic.diagnostics;
  if (mode == CoefficientMode::Rational && !a.smoothness.passed())
    s.diagnostics.push_back("smoothness criterion fails; continuing with rational coefficients");
  return s;
}

/// Validation of a cone that could not be sliced.
inline ValidationSection make_validation_section(const ConeSpec& cone, const std::string& why) {
  ValidationSection s;
  BasicValidation b = validate_basic(cone);
  s.strictly_convex = b.is_strictly_convex;
  s.minimal = b.is_minimal;
  s.diagnostics = b.diagnostics;
  if (s.diagnostics.empty() || s.diagnostics.back() != why) s.diagnostics.push_back(why);
  return s;
}

inline SliceSection make_slice_section(const ConeAnalysis& a) {
  SliceSection s;
  s.dim = a.polytope.ambient_dim;
  s.vertices = a.polytope.vertices;
  for (const auto& f : a.polytope.vertex_facets) s.vertex_facets.push_back(one_based(f));
  s.f_vector = a.nerve.f_vector;
  for (const auto& f : a.nerve.minimal_nonfaces) s.minimal_nonfaces.push_back(one_based(f));
  s.h_vector = h_vector(a.nerve, a.dim() - 1);
  return s;
}

inline std::vector<StabilizerEntry> make_stabilizers(const ConeAnalysis& a) {
  std::vector<StabilizerEntry> out;
  for (const auto& face : a.nerve.faces) {
    if (face.empty()) continue;
    auto d = stabilizer(a.cone, a.nerve, face);
    out.push_back({one_based(face), d.dimension, d.smoothness_divisors, d.smooth()});
  }
  return out;
}

inline EquivariantSection make_equivariant_section(const EquivariantCohomology& e) {
  EquivariantSection s;
  for (const auto& m : e.presentation.monomial_generators) s.generators.push_back(to_string(m));
  s.hilbert = e.hilbert;
  return s;
}

inline ToricSection make_toric_section(const GradedQuotient& q, CoefficientMode mode) {
  ToricSection s;
  s.ranks = q.ranks();
  for (unsigned d = 0; d <= q.max_degree(); ++d) {
    s.torsion.push_back(mode == CoefficientMode::Integral ? q.at(d).divisors : IntVector{});
    std::vector<std::string> b;
    for (const auto& p : q.at(d).basis) b.push_back(to_string(p));
    s.basis.push_back(std::move(b));
  }
  return s;
}

inline ContactSection make_contact_section(const ContactCohomologyReport& r) {
  ContactSection s;
  s.betti = r.betti;
  s.torsion = r.torsion;
  s.euler_form = to_string(r.euler_form());
  if (r.mode == CoefficientMode::Integral) {
    EvenRingStructure ring = even_ring_structure(r);
    EvenStructureSection es;
    for (const auto& g : ring.generators) es.generators.push_back({g.cohomological_degree(), g.order, to_string(g.representative)});
    for (const auto& p : ring.products)
      es.products.push_back({p.left + 1, p.right + 1, 2 * p.polynomial_degree, p.value.free, p.value.torsion});
    s.even_structure = std::move(es);
    for (const auto& g : r.odd) {
      OddGeneratorEntry e{g.cohomological_degree(), g.kernel, {}};
      for (const auto& p : g.representatives) e.representatives.push_back(to_string(p));
      s.odd_generators.push_back(std::move(e));
    }
  }
  return s;
}

inline std::vector<CheckEntry> make_checks(const std::vector<CheckRecord>& checks) {
  std::vector<CheckEntry> out;
  for (const auto& c : checks) out.push_back({c.name, to_string(c.status), c.evidence});
  return out;
}

/// Fingerprint of everything that determines the output.
inline std::string configuration_hash(const ReportFile& r) {
  Json key;
  key["input"] = r.input;
  key["command"] = r.config.command;
  key["mode"] = r.config.mode;
  key["max_degree"] = r.config.max_degree;
  key["subtorus_rank"] = r.config.subtorus_rank;
  key["version"] = r.version;
  return fnv1a_hex(key.dump());
}

// ---------------------------------------------------------------------------
// Text rendering

namespace detail {

template <typename T>
std::string list(const std::vector<T>& v, const char* open = "(", const char* close = ")") {
  std::ostringstream os;
  os << open;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    if constexpr (std::is_same_v<T, Rational>) {
      os << to_string(v[i]);
    } else {
      os << v[i];
    }
  }
  os << close;
  return os.str();
}

inline std::string facets(const IndexList& v) { return list(v, "{", "}"); }

inline std::string yes_no(const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "undetermined"; }

}  // namespace detail

inline std::string render_text(const ReportFile& r) {
  using detail::facets;
  using detail::list;
  std::ostringstream os;
  os << "cone " << (r.input.name.empty() ? "(unnamed)" : r.input.name) << ": n = " << r.input.dim << ", m = "
     << r.input.normals.size() << ", mode " << r.input.mode << "\n";
  for (std::size_t i = 0; i < r.input.normals.size(); ++i) os << "  v" << i + 1 << " = " << list(r.input.normals[i]) << "\n";

  if (r.normalization) {
    const auto& n = *r.normalization;
    os << "normalization\n  D =\n";
    for (const auto& row : n.D) os << "    " << list(row, "[", "]") << "\n";
    os << "  u = " << list(n.u) << ", k = " << n.k << "\n";
    for (std::size_t i = 0; i < n.normals.size(); ++i) os << "  D v" << i + 1 << " = " << list(n.normals[i]) << "\n";
    os << "  certificate k_i = " << list(n.certificate) << "\n";
  }
  if (r.validation) {
    const auto& v = *r.validation;
    os << "validation\n  strictly convex: " << (v.strictly_convex ? "yes" : "no") << "\n  minimal: " << detail::yes_no(v.minimal)
       << "\n  good: " << detail::yes_no(v.good) << " (" << v.faces_checked << " faces checked)\n";
    for (const auto& g : v.violations)
      os << "  violation at face " << facets(g.face) << ": " << g.reason << ", divisors " << list(g.divisors) << "\n";
    os << "  smoothness criterion: " << detail::yes_no(v.smooth) << "\n";
    for (const auto& s : v.smoothness_violations) os << "  smoothness violation: " << s.message << "\n";
    for (const auto& d : v.diagnostics) os << "  note: " << d << "\n";
  }
  if (r.slice) {
    const auto& s = *r.slice;
    os << "slice polytope in R^" << s.dim << ": " << s.vertices.size() << " vertices\n";
    for (std::size_t w = 0; w < s.vertices.size(); ++w)
      os << "  p" << w + 1 << " = " << list(s.vertices[w]) << " on facets " << facets(s.vertex_facets[w]) << "\n";
    os << "  f-vector " << list(s.f_vector) << ", h-vector " << list(s.h_vector) << "\n  minimal non-faces";
    for (const auto& f : s.minimal_nonfaces) os << " " << facets(f);
    os << "\n";
  }
  if (r.stabilizers) {
    os << "stabilizers\n";
    for (const auto& s : *r.stabilizers)
      os << "  face " << facets(s.face) << ": dimension " << s.dimension << ", divisors " << list(s.divisors)
         << (s.smooth ? "" : " (not smooth)") << "\n";
  }
  if (r.equivariant) {
    os << "equivariant cohomology: Z[x1..x" << r.input.normals.size() << "] / <";
    for (std::size_t i = 0; i < r.equivariant->generators.size(); ++i) os << (i ? ", " : "") << r.equivariant->generators[i];
    os << ">\n  hilbert " << list(r.equivariant->hilbert) << "\n";
  }
  if (r.toric) {
    os << "base toric manifold\n  ranks " << list(r.toric->ranks) << "\n";
    for (std::size_t d = 0; d < r.toric->ranks.size(); ++d) {
      if (r.toric->basis[d].empty() && r.toric->torsion[d].empty()) continue;
      os << "  H^" << 2 * d << ": basis";
      for (const auto& b : r.toric->basis[d]) os << " [" << b << "]";
      if (!r.toric->torsion[d].empty()) os << ", torsion " << list(r.toric->torsion[d]);
      os << "\n";
    }
  }
  if (r.partial) {
    os << "partial quotient for a rank " << r.partial->subtorus_rank << " subtorus\n  linear forms";
    for (const auto& f : r.partial->linear_forms) os << " [" << f << "]";
    os << "\n  ranks " << list(r.partial->ranks) << "\n";
  }
  if (r.contact) {
    const auto& c = *r.contact;
    os << "contact manifold\n  betti " << list(c.betti) << "\n  euler form " << c.euler_form << "\n";
    for (std::size_t d = 0; d < c.torsion.size(); ++d)
      if (!c.torsion[d].empty()) os << "  torsion in H^" << d << ": " << list(c.torsion[d]) << "\n";
    if (c.even_structure) {
      const auto& es = *c.even_structure;
      for (std::size_t g = 0; g < es.generators.size(); ++g) {
        const auto& gen = es.generators[g];
        os << "  even generator g" << g + 1 << " in H^" << gen.degree << ": [" << gen.representative << "]";
        if (gen.order != 0) os << " of order " << gen.order;
        os << "\n";
      }
      for (const auto& p : es.products)
        os << "  g" << p.left << " * g" << p.right << " in H^" << p.degree << ": free " << list(p.free) << ", torsion "
           << list(p.torsion) << "\n";
    }
    for (const auto& o : c.odd_generators) {
      if (o.kernel.empty()) continue;
      os << "  H^" << o.degree << " generators:";
      for (std::size_t i = 0; i < o.kernel.size(); ++i) os << " [" << o.representatives[i] << "] " << list(o.kernel[i]);
      os << "\n";
    }
  }
  if (r.checks) {
    os << "checks\n";
    for (const auto& c : *r.checks) os << "  " << c.status << "  " << c.name << ": " << c.evidence << "\n";
  }
  if (r.error) os << "error: " << *r.error << "\n";
  os << "version " << r.version << ", command " << r.config.command << ", mode " << r.config.mode << ", max degree "
     << r.config.max_degree;
  if (r.config.subtorus_rank) os << ", subtorus rank " << *r.config.subtorus_rank;
  os << ", config " << r.config.hash << "\n";
  return os.str();
}

}  // namespace ctoric
