#pragma once

// Exact integer / rational linear algebra over arbitrary-precision numbers:
// Smith and Hermite normal forms, primitivity, unimodular completion and
// saturated integer kernels.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ctoric {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntVector = std::vector<BigInt>;
using RatVector = std::vector<Rational>;

class LatticeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline IntVector to_int_vector(std::initializer_list<long long> xs) {
  IntVector v;
  v.reserve(xs.size());
  for (long long x : xs) v.emplace_back(x);
  return v;
}

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw LatticeError("ragged matrix literal");
      for (long long x : row) data_.emplace_back(x);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Matrix whose rows are the given vectors (all of length `cols`).
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) {
        std::ostringstream os;
        os << "row " << i << " has length " << rows[i].size() << ", expected " << cols;
        throw LatticeError(os.str());
      }
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  IntVector col(std::size_t j) const {
    IntVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const BigInt& factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < cols_; ++j)
      if (!is_zero((*this)(src, j))) (*this)(dst, j) += factor * (*this)(src, j);
  }
  /// col[dst] += factor * col[src]
  void add_col(std::size_t dst, std::size_t src, const BigInt& factor) {
    if (factor == 0) return;
    for (std::size_t i = 0; i < rows_; ++i)
      if (!is_zero((*this)(i, src))) (*this)(i, dst) += factor * (*this)(i, src);
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }
  void negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
  }

  bool is_zero_matrix() const {
    return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x == 0; });
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw LatticeError("matrix product dimension mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const BigInt& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!is_zero(b(k, j))) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend IntVector operator*(const IntMatrix& a, const IntVector& x) {
    if (a.cols_ != x.size()) throw LatticeError("matrix-vector dimension mismatch");
    IntVector y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        if (!is_zero(x[j])) y[i] += a(i, j) * x[j];
    return y;
  }

 private:
  static bool is_zero(const BigInt& x) { return x.is_zero(); }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

inline std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

inline BigInt abs_value(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

inline BigInt gcd_of(const IntVector& v) {
  BigInt g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, abs_value(x));
  return g;
}

/// Floor division (rounds toward negative infinity).
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

struct ExtendedGcd {
  BigInt g, x, y;  // x*a + y*b == g >= 0
};

/// Bezout coefficients, preferring (0, ±1) when b | a and (±1, 0) when a | b.
inline ExtendedGcd extended_gcd(const BigInt& a, const BigInt& b) {
  if (b != 0 && a % b == 0) return {abs_value(b), 0, b < 0 ? -1 : 1};
  if (a != 0 && b % a == 0) return {abs_value(a), a < 0 ? -1 : 1, 0};
  BigInt old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

// ---------------------------------------------------------------------------
// Smith normal form

struct SnfResult {
  IntMatrix U;  // rows x rows, unimodular
  IntMatrix S;  // rows x cols, diagonal with d_i | d_{i+1}, d_i >= 0
  IntMatrix V;  // cols x cols, unimodular

  std::size_t rank() const {
    std::size_t r = 0;
    const std::size_t k = std::min(S.rows(), S.cols());
    while (r < k && S(r, r) != 0) ++r;
    return r;
  }
  /// Nonzero diagonal entries in order.
  IntVector divisors() const {
    IntVector d;
    for (std::size_t i = 0; i < rank(); ++i) d.push_back(S(i, i));
    return d;
  }
};

namespace detail {

// Reduces `a` in place to Smith form. When non-null, `left` and `right`
// accumulate the row and column operations so that left * A * right == S,
// and `left_inverse` tracks the inverse of `left`.
inline void smith_reduce(IntMatrix& a, IntMatrix* left, IntMatrix* right, IntMatrix* left_inverse = nullptr) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const std::size_t k = std::min(rows, cols);

  auto row_add = [&](std::size_t dst, std::size_t src, const BigInt& f) {
    a.add_row(dst, src, f);
    if (left) left->add_row(dst, src, f);
    if (left_inverse) left_inverse->add_col(src, dst, -f);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const BigInt& f) {
    a.add_col(dst, src, f);
    if (right) right->add_col(dst, src, f);
  };
  auto row_swap = [&](std::size_t x, std::size_t y) {
    a.swap_rows(x, y);
    if (left) left->swap_rows(x, y);
    if (left_inverse) left_inverse->swap_cols(x, y);
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    a.swap_cols(x, y);
    if (right) right->swap_cols(x, y);
  };

  for (std::size_t t = 0; t < k; ++t) {
    for (;;) {
      // Pivot: nonzero entry of least absolute value, ties broken by (row, col).
      std::optional<std::pair<std::size_t, std::size_t>> pivot;
      BigInt best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          const BigInt& x = a(i, j);
          if (x == 0) continue;
          BigInt ax = abs_value(x);
          if (!pivot || ax < best) {
            best = ax;
            pivot = {i, j};
            if (best == 1) goto found;
          }
        }
    found:
      if (!pivot) return;  // remaining block is zero
      row_swap(t, pivot->first);
      col_swap(t, pivot->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        BigInt q = floor_div(a(i, t), a(t, t));
        row_add(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        BigInt q = floor_div(a(t, j), a(t, t));
        col_add(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce divisibility of the trailing block by the pivot.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            row_add(t, i, 1);
            divisible = false;
            break;
          }
      if (!divisible) continue;

      if (a(t, t) < 0) {
        a.negate_row(t);
        if (left) left->negate_row(t);
        if (left_inverse) left_inverse->negate_col(t);
      }
      break;
    }
  }
}

}  // namespace detail

/// Smith normal form U*A*V = S with a minimal-absolute-value pivot rule.
inline SnfResult smith_normal_form(const IntMatrix& a) {
  SnfResult r{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols())};
  detail::smith_reduce(r.S, &r.U, &r.V);
  return r;
}

/// Nonzero elementary divisors of `a` (no transforms tracked).
inline IntVector elementary_divisors(const IntMatrix& a) {
  IntMatrix s = a;
  detail::smith_reduce(s, nullptr, nullptr);
  IntVector d;
  for (std::size_t i = 0; i < std::min(s.rows(), s.cols()) && s(i, i) != 0; ++i) d.push_back(s(i, i));
  return d;
}

inline std::size_t rank_of(const IntMatrix& a) { return elementary_divisors(a).size(); }

/// Exact determinant by fraction-free (Bareiss) elimination.
inline BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw LatticeError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Hermite normal form (row style): echelon, positive pivots, entries above a
// pivot reduced into [0, pivot). Zero rows are dropped.

inline std::vector<IntVector> hermite_normal_form(std::vector<IntVector> rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (!best || abs_value(rows[i][c]) < abs_value(rows[*best][c]))) best = i;
      if (!best) break;
      std::swap(rows[r], rows[*best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        BigInt q = floor_div(rows[i][c], rows[r][c]);
        for (std::size_t j = c; j < cols; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r < rows.size() && rows[r][c] != 0) {
      if (rows[r][c] < 0)
        for (auto& x : rows[r]) x = -x;
      pivots.push_back(c);
      ++r;
    }
  }
  rows.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t c = pivots[i];
    for (std::size_t h = 0; h < i; ++h) {
      BigInt q = floor_div(rows[h][c], rows[i][c]);
      if (q == 0) continue;
      for (std::size_t j = c; j < cols; ++j) rows[h][j] -= q * rows[i][j];
    }
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Lattice operations

struct PrimitivePart {
  IntVector u;
  BigInt k;
};

/// Splits v = k*u with u primitive and k > 0.
inline PrimitivePart primitive_part(const IntVector& v) {
  BigInt g = gcd_of(v);
  if (g == 0) throw LatticeError("primitive part of the zero vector is undefined");
  IntVector u(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) u[i] = v[i] / g;
  return {std::move(u), g};
}

/// True iff the vectors are linearly independent and span a direct summand
/// of Z^n (all elementary divisors equal to 1).
inline bool is_direct_summand(const std::vector<IntVector>& vectors, std::size_t n) {
  for (std::size_t i = 0; i < vectors.size(); ++i)
    if (vectors[i].size() != n) {
      std::ostringstream os;
      os << "vector " << i + 1 << " has length " << vectors[i].size() << ", expected " << n;
      throw LatticeError(os.str());
    }
  if (vectors.empty()) return true;
  IntVector d = elementary_divisors(IntMatrix::from_rows(vectors, n));
  return d.size() == vectors.size() &&
         std::all_of(d.begin(), d.end(), [](const BigInt& x) { return x == 1; });
}

inline bool is_direct_summand(const std::vector<IntVector>& vectors) {
  return is_direct_summand(vectors, vectors.empty() ? 0 : vectors.front().size());
}

/// A matrix D with det D = +1 and D*u = e_n, built from 2x2 Bezout steps
/// sweeping the entries of u toward the last coordinate.
inline IntMatrix complete_to_unimodular(const IntVector& u) {
  const std::size_t n = u.size();
  if (n == 0) throw LatticeError("cannot complete an empty vector");
  BigInt g = gcd_of(u);
  if (g != 1) {
    std::ostringstream os;
    os << "vector " << to_string(u) << " is not primitive (gcd " << g << ")";
    throw LatticeError(os.str());
  }
  IntMatrix d = IntMatrix::identity(n);
  IntVector w = u;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const BigInt a = w[i], b = w[i + 1];
    if (a == 0 && b == 0) continue;
    ExtendedGcd e = extended_gcd(a, b);
    // [[b/g, -a/g], [x, y]] has determinant 1 and maps (a, b) to (0, g).
    const BigInt p = b / e.g, q = -a / e.g;
    for (std::size_t j = 0; j < n; ++j) {
      BigInt ri = p * d(i, j) + q * d(i + 1, j);
      BigInt rk = e.x * d(i, j) + e.y * d(i + 1, j);
      d(i, j) = std::move(ri);
      d(i + 1, j) = std::move(rk);
    }
    w[i] = 0;
    w[i + 1] = e.g;
  }
  if (w[n - 1] != 1) {
    // Only reachable for n == 1 with u = (-1); no SL(1) element fixes it.
    throw LatticeError("no determinant-one completion exists for " + to_string(u));
  }
  return d;
}

/// Basis (in Hermite normal form) of {x in Z^cols : A x = 0}. The lattice is
/// saturated, so the returned vectors span a direct summand.
inline std::vector<IntVector> saturated_kernel(const IntMatrix& a) {
  if (a.cols() == 0) return {};
  SnfResult s = smith_normal_form(a);
  std::vector<IntVector> basis;
  for (std::size_t j = s.rank(); j < a.cols(); ++j) basis.push_back(s.V.col(j));
  return hermite_normal_form(std::move(basis));
}

/// Integer coefficients c with sum_i c_i * basis[i] == target, if they exist.
inline std::optional<IntVector> solve_in_lattice(const std::vector<IntVector>& basis, const IntVector& target) {
  if (basis.empty()) {
    if (std::all_of(target.begin(), target.end(), [](const BigInt& x) { return x == 0; })) return IntVector{};
    return std::nullopt;
  }
  // B^T c = target with B the matrix of basis rows.
  IntMatrix bt = IntMatrix::from_rows(basis, target.size()).transpose();
  SnfResult s = smith_normal_form(bt);
  IntVector rhs = s.U * target;
  IntVector z(basis.size());
  const std::size_t r = s.rank();
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    if (i < r) {
      if (rhs[i] % s.S(i, i) != 0) return std::nullopt;
      z[i] = rhs[i] / s.S(i, i);
    } else if (rhs[i] != 0) {
      return std::nullopt;
    }
  }
  return s.V * z;
}

// ---------------------------------------------------------------------------
// Rational helpers

/// Solves the square system M x = b over Q; nullopt when M is singular.
inline std::optional<RatVector> solve_rational(const IntMatrix& m, const RatVector& b) {
  const std::size_t n = m.rows();
  if (m.cols() != n || b.size() != n) throw LatticeError("solve_rational expects a square system");
  std::vector<RatVector> a(n, RatVector(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
    a[i][n] = b[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[c], a[p]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

/// Rank over Q of a set of rational points' differences from the first point.
inline std::size_t affine_rank(const std::vector<RatVector>& points) {
  if (points.size() <= 1) return 0;
  const std::size_t dim = points.front().size();
  std::vector<RatVector> rows;
  for (std::size_t i = 1; i < points.size(); ++i) {
    RatVector d(dim);
    for (std::size_t j = 0; j < dim; ++j) d[j] = points[i][j] - points[0][j];
    rows.push_back(std::move(d));
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < dim && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < dim; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

inline std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(q);
  if (boost::multiprecision::denominator(q) != 1) os << '/' << boost::multiprecision::denominator(q);
  return os.str();
}

}  // namespace ctoric
