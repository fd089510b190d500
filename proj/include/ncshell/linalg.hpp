#pragma once

// Exact vectors and dense matrices over Scalar, with Gaussian elimination.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ncshell/errors.hpp"
#include "ncshell/scalar.hpp"

namespace ncshell {

using Vec = std::vector<Scalar>;
using Matrix = std::vector<Vec>;  // row-major

inline Vec unit_vector(std::size_t dim, std::size_t i, const Scalar& value = Scalar(1)) {
  Vec v(dim);
  v.at(i) = value;
  return v;
}

inline void require_same_dim(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) {
    throw DimensionError("dimension mismatch: " + std::to_string(u.size()) + " vs " +
                         std::to_string(v.size()));
  }
}

// Standard Euclidean inner product.
inline Scalar inner(const Vec& u, const Vec& v) {
  require_same_dim(u, v);
  Scalar s;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero() || v[i].is_zero()) continue;
    s += u[i] * v[i];
  }
  return s;
}

inline Vec operator+(Vec u, const Vec& v) {
  require_same_dim(u, v);
  for (std::size_t i = 0; i < u.size(); ++i) u[i] += v[i];
  return u;
}

inline Vec operator-(Vec u, const Vec& v) {
  require_same_dim(u, v);
  for (std::size_t i = 0; i < u.size(); ++i) u[i] -= v[i];
  return u;
}

inline Vec operator-(Vec u) {
  for (auto& x : u) x = -x;
  return u;
}

inline Vec operator*(const Scalar& c, Vec u) {
  for (auto& x : u) x *= c;
  return u;
}

inline bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

// Lexicographic order by exact scalar comparison.
struct VecLess {
  bool operator()(const Vec& a, const Vec& b) const {
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end()) < 0;
  }
};

inline std::string to_string(const Vec& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += v[i].str();
  }
  return out + "]";
}

inline Matrix identity_matrix(std::size_t n) {
  Matrix m(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Matrix transpose(const Matrix& m) {
  if (m.empty()) return {};
  Matrix t(m[0].size(), Vec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.empty() || b.empty()) return {};
  if (a[0].size() != b.size()) throw DimensionError("matrix product shape mismatch");
  Matrix c(a.size(), Vec(b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j) {
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
      }
    }
  return c;
}

inline Vec apply(const Matrix& m, const Vec& v) {
  Vec out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = inner(m[i], v);
  return out;
}

struct Echelon {
  Matrix rows;                       // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
  int swaps = 0;
};

// Reduced row echelon form. Pivoting takes the first nonzero entry; all
// arithmetic is exact so no numerical pivoting is needed.
inline Echelon row_reduce(Matrix m) {
  Echelon e;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      ++e.swaps;
    }
    const Scalar inv = Scalar(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Scalar f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
      }
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.rows = std::move(m);
  return e;
}

inline std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

// Basis of { x : m x = 0 }, one vector per free column.
inline std::vector<Vec> nullspace(const Matrix& m) {
  if (m.empty()) return {};
  const std::size_t cols = m[0].size();
  const Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec x(cols);
    x[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = -e.rows[r][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

inline Scalar determinant(Matrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DimensionError("determinant of a non-square matrix");
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    const Scalar inv = Scalar(1) / m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      const Scalar f = m[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

inline Matrix inverse(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix aug(n, Vec(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw DimensionError("inverse of a non-square matrix");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  const Echelon e = row_reduce(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw DegeneracyError("singular matrix");
  Matrix out(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = e.rows[i][n + j];
  return out;
}

// Coefficients x with sum_k x[k] * columns[k] = target. Returns nullopt when
// target is outside the span; throws when the columns are dependent.
inline std::optional<Vec> solve_in_span(const std::vector<Vec>& columns, const Vec& target) {
  const std::size_t k = columns.size();
  const std::size_t dim = target.size();
  Matrix aug(dim, Vec(k + 1));
  for (std::size_t c = 0; c < k; ++c) {
    require_same_dim(columns[c], target);
    for (std::size_t r = 0; r < dim; ++r) aug[r][c] = columns[c][r];
  }
  for (std::size_t r = 0; r < dim; ++r) aug[r][k] = target[r];
  const Echelon e = row_reduce(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == k) return std::nullopt;
  if (e.pivots.size() != k) throw DegeneracyError("spanning set is linearly dependent");
  Vec x(k);
  for (std::size_t r = 0; r < k; ++r) x[e.pivots[r]] = e.rows[r][k];
  return x;
}

}  // namespace ncshell
