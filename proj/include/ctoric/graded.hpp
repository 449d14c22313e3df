#pragma once

// Graded quotients Z[x_1..x_m] / <squarefree monomials, linear forms>, computed
// degree by degree with Smith normal form so torsion is detected exactly.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ctoric/cone.hpp"
#include "ctoric/lattice.hpp"
#include "ctoric/slice.hpp"

namespace ctoric {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Monomial {
  std::vector<unsigned> exponents;

  static Monomial one(std::size_t vars) { return {std::vector<unsigned>(vars, 0)}; }
  static Monomial variable(std::size_t vars, std::size_t i) {
    Monomial m = one(vars);
    m.exponents[i] = 1;
    return m;
  }
  static Monomial squarefree(std::size_t vars, const FacetSet& support) {
    Monomial m = one(vars);
    for (std::size_t i : support) m.exponents[i] = 1;
    return m;
  }

  unsigned degree() const {
    unsigned d = 0;
    for (unsigned e : exponents) d += e;
    return d;
  }
  FacetSet support() const {
    FacetSet s;
    for (std::size_t i = 0; i < exponents.size(); ++i)
      if (exponents[i]) s.push_back(i);
    return s;
  }
  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exponents.size(); ++i)
      if (exponents[i] > other.exponents[i]) return false;
    return true;
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial c = a;
    for (std::size_t i = 0; i < c.exponents.size(); ++i) c.exponents[i] += b.exponents[i];
    return c;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order with x_1 > x_2 > ... > x_m.
inline bool grlex_greater(const Monomial& a, const Monomial& b) {
  const unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  return std::lexicographical_compare(b.exponents.begin(), b.exponents.end(), a.exponents.begin(),
                                      a.exponents.end());
}

struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_greater(a, b); }
};

/// Sparse polynomial; iteration runs from the largest monomial down.
using Polynomial = std::map<Monomial, BigInt, GrlexDescending>;

inline void add_term(Polynomial& p, const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = p.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

inline Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial c;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) add_term(c, ma * mb, ca * cb);
  return c;
}

inline Polynomial operator+(Polynomial a, const Polynomial& b) {
  for (const auto& [m, c] : b) add_term(a, m, c);
  return a;
}

inline Polynomial scaled(const Polynomial& p, const BigInt& s) {
  Polynomial out;
  if (s == 0) return out;
  for (const auto& [m, c] : p) out.emplace(m, c * s);
  return out;
}

inline Polynomial monomial_polynomial(const Monomial& m, const BigInt& c = 1) {
  Polynomial p;
  add_term(p, m, c);
  return p;
}

/// Linear form sum_i coefficients[i] * x_i as a polynomial.
inline Polynomial linear_polynomial(const IntVector& coefficients) {
  Polynomial p;
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    add_term(p, Monomial::variable(coefficients.size(), i), coefficients[i]);
  return p;
}

inline std::string to_string(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    if (!m.exponents[i]) continue;
    if (!first) os << '*';
    os << 'x' << i + 1;
    if (m.exponents[i] > 1) os << '^' << m.exponents[i];
    first = false;
  }
  if (first) os << '1';
  return os.str();
}

inline std::string to_string(const Polynomial& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p) {
    const bool constant = m.degree() == 0;
    BigInt mag = abs_value(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (constant) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << to_string(m);
    }
    first = false;
  }
  return os.str();
}

struct RingPresentation {
  std::size_t variables = 0;
  std::vector<Monomial> monomial_generators;  // squarefree
  std::vector<IntVector> linear_generators;   // coefficient vectors of length `variables`
};

/// One squarefree monomial per minimal non-face, sorted grlex-descending.
inline std::vector<Monomial> stanley_reisner(const FaceComplex& nerve) {
  std::vector<Monomial> gens;
  for (const auto& s : nerve.minimal_nonfaces) gens.push_back(Monomial::squarefree(nerve.facet_count, s));
  std::sort(gens.begin(), gens.end(), grlex_greater);
  return gens;
}

/// J_k = sum_i v_ik x_i for k = 1..n; the last one is the Euler form.
inline std::vector<IntVector> linear_forms(const std::vector<IntVector>& normals, std::size_t dim) {
  std::vector<IntVector> forms(dim, IntVector(normals.size()));
  for (std::size_t i = 0; i < normals.size(); ++i)
    for (std::size_t k = 0; k < dim; ++k) forms[k][i] = normals[i][k];
  return forms;
}

/// Degree-d monomials not divisible by any monomial generator, grlex-descending.
inline std::vector<Monomial> standard_monomials(const RingPresentation& pres, unsigned d) {
  const std::size_t m = pres.variables;
  std::vector<FacetSet> forbidden;
  for (const auto& g : pres.monomial_generators) forbidden.push_back(g.support());
  std::vector<Monomial> out;
  Monomial cur = Monomial::one(m);
  FacetSet support;
  auto blocked = [&]() {
    for (const auto& f : forbidden)
      if (is_subset(f, support)) return true;
    return false;
  };
  // Exponents assigned from x_1 downward, largest first, so output is grlex-descending.
  auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
    if (var + 1 == m || m == 0) {
      if (m == 0) {
        if (left == 0) out.push_back(cur);
        return;
      }
      cur.exponents[var] = left;
      if (left > 0) support.push_back(var);
      if (!blocked()) out.push_back(cur);
      if (left > 0) support.pop_back();
      cur.exponents[var] = 0;
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      cur.exponents[var] = e;
      if (e > 0) {
        support.push_back(var);
        if (!blocked()) self(self, var + 1, left - e);
        support.pop_back();
      } else {
        self(self, var + 1, left);
      }
    }
    cur.exponents[var] = 0;
  };
  rec(rec, 0, d);
  return out;
}

/// An element of one graded piece: free coordinates in the chosen basis and
/// torsion coordinates reduced into [0, divisor).
struct QuotientElement {
  IntVector free;
  IntVector torsion;

  bool is_zero() const {
    auto z = [](const BigInt& x) { return x == 0; };
    return std::all_of(free.begin(), free.end(), z) && std::all_of(torsion.begin(), torsion.end(), z);
  }
  friend bool operator==(const QuotientElement&, const QuotientElement&) = default;
};

/// Degree-d piece of a quotient ring, with a Z-basis of its free part,
/// generators of its torsion, and an exact reduction map.
class QuotientDegree {
 public:
  unsigned degree = 0;
  std::vector<Monomial> spanning;             // standard monomials of the monomial ideal
  std::vector<Polynomial> basis;              // free-part generators
  std::vector<Polynomial> torsion_generators; // one per divisor
  IntVector divisors;                         // elementary divisors > 1
  bool monomial_basis = true;

  std::size_t rank() const { return basis.size(); }

  /// Coefficients over `spanning`; monomials in the monomial ideal vanish.
  IntVector dense(const Polynomial& p) const {
    IntVector c(spanning.size());
    for (const auto& [m, coeff] : p) {
      if (m.degree() != degree) throw AlgebraError("polynomial is not homogeneous of degree " + std::to_string(degree));
      auto it = index_.find(m);
      if (it != index_.end()) c[it->second] += coeff;
    }
    return c;
  }

  QuotientElement reduce(const Polynomial& p) const {
    IntVector c = dense(p);
    QuotientElement e;
    if (trivial_) {
      e.free = std::move(c);
      return e;
    }
    e.free = basis_inverse_ * (free_coords_ * c);
    e.torsion = torsion_coords_ * c;
    if (!divisors.empty()) {
      IntVector shift = basis_torsion_ * e.free;
      for (std::size_t i = 0; i < divisors.size(); ++i) {
        BigInt t = (e.torsion[i] - shift[i]) % divisors[i];
        if (t < 0) t += divisors[i];
        e.torsion[i] = t;
      }
    }
    return e;
  }

  Polynomial lift(const QuotientElement& e) const {
    Polynomial p;
    for (std::size_t j = 0; j < basis.size(); ++j) p = p + scaled(basis[j], e.free.at(j));
    for (std::size_t i = 0; i < torsion_generators.size(); ++i) p = p + scaled(torsion_generators[i], e.torsion.at(i));
    return p;
  }

  QuotientElement zero() const { return {IntVector(basis.size()), IntVector(divisors.size())}; }

 private:
  friend QuotientDegree quotient_basis(const RingPresentation& pres, unsigned d);

  std::map<Monomial, std::size_t, GrlexDescending> index_;
  bool trivial_ = true;      // no relations: spanning monomials are the basis
  IntMatrix free_coords_;    // rank x |spanning|
  IntMatrix torsion_coords_; // |divisors| x |spanning|
  IntMatrix basis_inverse_;  // inverse of free_coords_ restricted to the basis
  IntMatrix basis_torsion_;  // torsion coordinates of the basis elements
};

/// Degree-d piece of Z[x] / <monomial gens, linear gens>. Relations are
/// (linear form) * (standard monomial of degree d-1), reduced modulo the
/// monomial ideal; their Smith form yields the free rank and torsion.
inline QuotientDegree quotient_basis(const RingPresentation& pres, unsigned d) {
  QuotientDegree q;
  q.degree = d;
  q.spanning = standard_monomials(pres, d);
  for (std::size_t i = 0; i < q.spanning.size(); ++i) q.index_.emplace(q.spanning[i], i);
  const std::size_t n_span = q.spanning.size();

  std::vector<IntVector> relations;
  if (d > 0 && !pres.linear_generators.empty()) {
    auto lower = standard_monomials(pres, d - 1);
    for (const auto& form : pres.linear_generators) {
      Polynomial lf = linear_polynomial(form);
      for (const auto& b : lower) {
        IntVector r = q.dense(lf * monomial_polynomial(b));
        if (std::any_of(r.begin(), r.end(), [](const BigInt& x) { return x != 0; })) relations.push_back(std::move(r));
      }
    }
    std::sort(relations.begin(), relations.end());
    relations.erase(std::unique(relations.begin(), relations.end()), relations.end());
  }

  if (relations.empty()) {
    for (const auto& m : q.spanning) q.basis.push_back(monomial_polynomial(m));
    return q;
  }
  q.trivial_ = false;

  // Columns of R are relations; U R V = S.
  IntMatrix r = IntMatrix::from_rows(relations, n_span).transpose();
  IntMatrix u = IntMatrix::identity(n_span), u_inv = IntMatrix::identity(n_span);
  detail::smith_reduce(r, &u, nullptr, &u_inv);
  std::size_t rank = 0;
  while (rank < std::min(r.rows(), r.cols()) && r(rank, rank) != 0) ++rank;

  std::vector<std::size_t> torsion_rows;
  for (std::size_t i = 0; i < rank; ++i)
    if (r(i, i) != 1) {
      torsion_rows.push_back(i);
      q.divisors.push_back(r(i, i));
    }
  const std::size_t f = n_span - rank;
  q.free_coords_ = IntMatrix(f, n_span);
  for (std::size_t i = 0; i < f; ++i)
    for (std::size_t j = 0; j < n_span; ++j) q.free_coords_(i, j) = u(rank + i, j);
  q.torsion_coords_ = IntMatrix(torsion_rows.size(), n_span);
  for (std::size_t t = 0; t < torsion_rows.size(); ++t)
    for (std::size_t j = 0; j < n_span; ++j) q.torsion_coords_(t, j) = u(torsion_rows[t], j);

  // Prefer a basis of monomials, taken greedily from the smallest upward as
  // long as their free coordinates span a direct summand.
  std::vector<std::size_t> chosen;
  std::vector<IntVector> chosen_cols;
  for (std::size_t j = n_span; j-- > 0 && chosen.size() < f;) {
    IntVector col = q.free_coords_.col(j);
    chosen_cols.push_back(col);
    if (is_direct_summand(chosen_cols, f)) {
      chosen.push_back(j);
    } else {
      chosen_cols.pop_back();
    }
  }
  IntMatrix basis_cols;
  if (chosen.size() == f) {
    std::sort(chosen.begin(), chosen.end());  // grlex-descending order
    basis_cols = IntMatrix(f, f);
    for (std::size_t b = 0; b < f; ++b) {
      q.basis.push_back(monomial_polynomial(q.spanning[chosen[b]]));
      for (std::size_t i = 0; i < f; ++i) basis_cols(i, b) = q.free_coords_(i, chosen[b]);
    }
    SnfResult inv = smith_normal_form(basis_cols);  // unimodular: U B V = I
    q.basis_inverse_ = inv.V * inv.U;
  } else {
    q.monomial_basis = false;
    for (std::size_t b = 0; b < f; ++b) {
      Polynomial p;
      for (std::size_t j = 0; j < n_span; ++j) add_term(p, q.spanning[j], u_inv(j, rank + b));
      q.basis.push_back(std::move(p));
    }
    q.basis_inverse_ = IntMatrix::identity(f);
  }
  q.basis_torsion_ = IntMatrix(q.divisors.size(), f);
  for (std::size_t b = 0; b < f; ++b) {
    IntVector tc = q.torsion_coords_ * q.dense(q.basis[b]);
    for (std::size_t t = 0; t < tc.size(); ++t) q.basis_torsion_(t, b) = tc[t];
  }

  // Torsion generators: a monomial whose class is exactly the i-th generator
  // when one exists, else the corresponding column of U^{-1}.
  for (std::size_t t = 0; t < torsion_rows.size(); ++t) {
    std::optional<Polynomial> gen;
    for (std::size_t j = n_span; j-- > 0 && !gen;) {
      Polynomial cand = monomial_polynomial(q.spanning[j]);
      IntVector c = q.dense(cand);
      IntVector fc = q.free_coords_ * c;
      if (std::any_of(fc.begin(), fc.end(), [](const BigInt& x) { return x != 0; })) continue;
      IntVector tc = q.torsion_coords_ * c;
      bool exact = true;
      for (std::size_t s = 0; s < tc.size() && exact; ++s) {
        BigInt v = tc[s] % q.divisors[s];
        if (v < 0) v += q.divisors[s];
        exact = v == (s == t ? 1 : 0);
      }
      if (exact) gen = std::move(cand);
    }
    if (!gen) {
      Polynomial p;
      for (std::size_t j = 0; j < n_span; ++j) add_term(p, q.spanning[j], u_inv(j, torsion_rows[t]));
      gen = std::move(p);
    }
    q.torsion_generators.push_back(std::move(*gen));
  }
  return q;
}

/// Degrees 0..max_degree of a quotient ring.
struct GradedQuotient {
  RingPresentation presentation;
  std::vector<QuotientDegree> degrees;

  const QuotientDegree& at(unsigned d) const { return degrees.at(d); }
  unsigned max_degree() const { return static_cast<unsigned>(degrees.size()) - 1; }
  std::vector<std::size_t> ranks() const {
    std::vector<std::size_t> r;
    for (const auto& q : degrees) r.push_back(q.rank());
    return r;
  }
  bool torsion_free() const {
    return std::all_of(degrees.begin(), degrees.end(), [](const QuotientDegree& q) { return q.divisors.empty(); });
  }
  /// Product of homogeneous representatives, reduced in degree `degree`.
  QuotientElement multiply(const Polynomial& a, const Polynomial& b, unsigned degree) const {
    if (degree > max_degree()) throw AlgebraError("product degree exceeds the computed range");
    return at(degree).reduce(a * b);
  }
};

inline GradedQuotient graded_quotient(RingPresentation pres, unsigned max_degree) {
  GradedQuotient g{std::move(pres), {}};
  for (unsigned d = 0; d <= max_degree; ++d) g.degrees.push_back(quotient_basis(g.presentation, d));
  return g;
}

inline BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Hilbert function of the face ring: H(0) = 1 and for d >= 1 the sum over
/// nonempty faces S with |S| <= d of C(d-1, |S|-1).
inline BigInt face_ring_hilbert(const FaceComplex& nerve, unsigned d) {
  if (d == 0) return 1;
  BigInt h = 0;
  for (std::size_t c = 1; c < nerve.f_vector.size() && c <= d; ++c) h += BigInt(nerve.f_vector[c]) * binomial(d - 1, static_cast<long long>(c) - 1);
  return h;
}

/// h-vector of a (dim-1)-sphere nerve of a dim-polytope:
/// sum_i f_{i-1} (t-1)^{dim-i} = sum_j h_j t^{dim-j}.
inline std::vector<BigInt> h_vector(const FaceComplex& nerve, std::size_t dim) {
  std::vector<BigInt> h(dim + 1);
  for (std::size_t j = 0; j <= dim; ++j)
    for (std::size_t i = 0; i <= j; ++i) {
      BigInt f = i < nerve.f_vector.size() ? BigInt(nerve.f_vector[i]) : BigInt(0);
      BigInt term = binomial(static_cast<long long>(dim - i), static_cast<long long>(j - i)) * f;
      h[j] += ((j - i) % 2 == 0) ? term : BigInt(-term);
    }
  return h;
}

/// Multiplication by a linear form between consecutive degrees of a quotient.
struct MultiplicationMap {
  IntVector form;
  std::vector<IntMatrix> matrices;              // matrices[d]: degree d -> d+1 (free parts)
  std::vector<std::vector<IntVector>> kernels;  // saturated kernel bases
  std::vector<std::size_t> cokernel_ranks;      // rank of coker at target degree d+1
  std::vector<IntVector> cokernel_divisors;     // elementary divisors > 1 at degree d+1
};

inline MultiplicationMap multiplication_map(const GradedQuotient& q, const IntVector& form) {
  MultiplicationMap mm;
  mm.form = form;
  Polynomial e = linear_polynomial(form);
  for (unsigned d = 0; d < q.max_degree(); ++d) {
    const auto& src = q.at(d);
    const auto& dst = q.at(d + 1);
    IntMatrix rho(dst.rank(), src.rank());
    for (std::size_t j = 0; j < src.rank(); ++j) {
      QuotientElement img = dst.reduce(e * src.basis[j]);
      for (std::size_t i = 0; i < dst.rank(); ++i) rho(i, j) = img.free[i];
    }
    IntVector divs = rho.empty() ? IntVector{} : elementary_divisors(rho);
    IntVector nonunit;
    for (const auto& x : divs)
      if (x != 1) nonunit.push_back(x);
    mm.kernels.push_back(src.rank() == 0 ? std::vector<IntVector>{}
                         : dst.rank() == 0
                             ? saturated_kernel(IntMatrix(1, src.rank()))
                             : saturated_kernel(rho));
    mm.cokernel_ranks.push_back(dst.rank() - divs.size());
    mm.cokernel_divisors.push_back(std::move(nonunit));
    mm.matrices.push_back(std::move(rho));
  }
  return mm;
}

}  // namespace ctoric
