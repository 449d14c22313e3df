#pragma once

// Brute-force reference computations used to check the library. None of them
// call into Smith normal form or the quotient machinery.

#include <cstddef>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "ctoric/lattice.hpp"

namespace oracle {

using ctoric::BigInt;
using ctoric::IntMatrix;
using ctoric::IntVector;
using ctoric::Rational;

/// Determinant by cofactor expansion along the first row.
inline BigInt det(const std::vector<std::vector<BigInt>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  BigInt total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BigInt> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    BigInt term = m[0][c] * det(minor);
    total += c % 2 ? BigInt(-term) : term;
  }
  return total;
}

inline BigInt det(const IntMatrix& a) {
  std::vector<std::vector<BigInt>> m(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) m[i] = a.row(i);
  return det(m);
}

inline void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> s;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (s.size() == k) {
      fn(s);
      return;
    }
    for (std::size_t i = from; i < n; ++i) {
      s.push_back(i);
      rec(i + 1);
      s.pop_back();
    }
  };
  rec(0);
}

inline BigInt gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// gcd of all k x k minors.
inline BigInt minors_gcd(const IntMatrix& a, std::size_t k) {
  BigInt g = 0;
  subsets(a.rows(), k, [&](const std::vector<std::size_t>& rs) {
    subsets(a.cols(), k, [&](const std::vector<std::size_t>& cs) {
      std::vector<std::vector<BigInt>> m;
      for (std::size_t r : rs) {
        std::vector<BigInt> row;
        for (std::size_t c : cs) row.push_back(a(r, c));
        m.push_back(std::move(row));
      }
      g = gcd(g, det(m));
    });
  });
  return g;
}

/// Elementary divisors as quotients of successive determinantal divisors.
inline IntVector elementary_divisors(const IntMatrix& a) {
  IntVector out;
  BigInt prev = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    BigInt d = minors_gcd(a, k);
    if (d == 0) break;
    out.push_back(d / prev);
    prev = d;
  }
  return out;
}

/// Rank over Q by plain Gaussian elimination.
inline std::size_t rank(const std::vector<std::vector<Rational>>& rows_in) {
  auto rows = rows_in;
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

inline std::size_t rank(const IntMatrix& a) {
  std::vector<std::vector<Rational>> rows(a.rows(), std::vector<Rational>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) rows[i][j] = Rational(a(i, j));
  return rank(rows);
}

/// Independent rows spanning a direct summand: full rank and coprime maximal minors.
inline bool direct_summand(const std::vector<IntVector>& vs, std::size_t n) {
  if (vs.empty()) return true;
  IntMatrix a = IntMatrix::from_rows(vs, n);
  return vs.size() <= n && minors_gcd(a, vs.size()) == 1;
}

using Exponents = std::vector<unsigned>;

/// All exponent vectors of total degree d in m variables.
inline std::vector<Exponents> monomials(std::size_t m, unsigned d) {
  std::vector<Exponents> out;
  Exponents e(m, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == m) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  if (m == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(0, d);
  return out;
}

inline bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// Rank over Q of the degree-d part of Z[x_1..x_m] / <monomials, linear forms>,
/// built from every degree d-1 monomial times every form.
inline std::size_t quotient_rank(std::size_t m, const std::vector<Exponents>& gens, const std::vector<IntVector>& forms,
                                 unsigned d) {
  auto blocked = [&](const Exponents& e) {
    for (const auto& g : gens)
      if (divides(g, e)) return true;
    return false;
  };
  std::map<Exponents, std::size_t> index;
  for (const auto& e : monomials(m, d))
    if (!blocked(e)) index.emplace(e, index.size());
  if (d == 0 || forms.empty()) return index.size();
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : forms)
    for (const auto& b : monomials(m, d - 1)) {
      std::vector<Rational> row(index.size());
      for (std::size_t i = 0; i < m; ++i) {
        if (f[i] == 0) continue;
        Exponents e = b;
        ++e[i];
        auto it = index.find(e);
        if (it != index.end()) row[it->second] += Rational(f[i]);
      }
      rows.push_back(std::move(row));
    }
  return index.size() - rank(rows);
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim, int bound) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_int_distribution<int> entry(-bound, bound);
  IntMatrix a(dim(rng), dim(rng));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = entry(rng);
  return a;
}

}  // namespace oracle
