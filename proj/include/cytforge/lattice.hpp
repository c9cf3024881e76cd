#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cytforge/arithmetic.hpp"

namespace cytforge {

using IntVector = std::vector<Integer>;

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<IntVector>& rows) {
    if (rows.empty()) return {};
    IntMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_)
        throw Error(ErrorCode::RankMismatch, "ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  IntVector column(std::size_t j) const {
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

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols_ != y.rows_) throw Error(ErrorCode::RankMismatch, "matrix product shape");
    IntMatrix z(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        if (x(i, k) == 0) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) z(i, j) += x(i, k) * y(k, j);
      }
    return z;
  }

  friend IntVector operator*(const IntMatrix& x, const IntVector& v) {
    if (x.cols_ != v.size()) throw Error(ErrorCode::RankMismatch, "matrix-vector shape");
    IntVector out(x.rows_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t j = 0; j < x.cols_; ++j) out[i] += x(i, j) * v[j];
    return out;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += f * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += f * (*this)(src, j);
  }
  /// col[dst] += f * col[src]
  void add_col(std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += f * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// U * A * V = S with S diagonal, d1 | d2 | ..., and U, V unimodular.
struct SmithForm {
  IntMatrix S;
  IntMatrix U;
  IntMatrix V;
  std::size_t rank = 0;

  /// Nonzero diagonal entries d1 | d2 | ... | d_rank.
  IntVector invariant_factors() const {
    IntVector d;
    for (std::size_t i = 0; i < rank; ++i) d.push_back(S(i, i));
    return d;
  }
};

/// Pivot: smallest nonzero |entry| of the trailing block, ties by lowest
/// row-major index.
inline SmithForm snf(const IntMatrix& A) {
  const std::size_t m = A.rows(), n = A.cols();
  SmithForm f{A, IntMatrix::identity(m), IntMatrix::identity(n), 0};
  IntMatrix& S = f.S;
  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      std::optional<std::pair<std::size_t, std::size_t>> piv;
      Integer best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (S(i, j) == 0) continue;
          Integer a = abs(S(i, j));
          if (!piv || a < best) {
            piv = {i, j};
            best = a;
          }
        }
      if (!piv) {
        f.rank = t;
        return f;
      }
      S.swap_rows(t, piv->first);
      f.U.swap_rows(t, piv->first);
      S.swap_cols(t, piv->second);
      f.V.swap_cols(t, piv->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (S(i, t) == 0) continue;
        Integer q = S(i, t) / S(t, t);
        S.add_row(i, t, -q);
        f.U.add_row(i, t, -q);
        if (S(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (S(t, j) == 0) continue;
        Integer q = S(t, j) / S(t, t);
        S.add_col(j, t, -q);
        f.V.add_col(j, t, -q);
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: fold an offending row into row t and re-pivot
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < m && !bad_row; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (S(i, j) % S(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row) {
        S.add_row(t, *bad_row, 1);
        f.U.add_row(t, *bad_row, 1);
        continue;
      }
      break;
    }
    if (S(t, t) < 0) {
      S.negate_row(t);
      f.U.negate_row(t);
    }
  }
  f.rank = steps;
  for (std::size_t t = 0; t < steps; ++t)
    if (S(t, t) == 0) {
      f.rank = t;
      break;
    }
  return f;
}

inline std::size_t integer_rank(const IntMatrix& A) { return snf(A).rank; }

/// Some integer x with A x = target, or nullopt when none exists.
inline std::optional<IntVector> solve_integer_linear(const IntMatrix& A, const IntVector& target) {
  if (target.size() != A.rows()) throw Error(ErrorCode::RankMismatch, "target length");
  if (A.cols() == 0) {
    for (const auto& t : target)
      if (t != 0) return std::nullopt;
    return IntVector{};
  }
  SmithForm f = snf(A);
  // S (V^-1 x) = U t
  IntVector ut = f.U * target;
  IntVector y(A.cols());
  for (std::size_t i = 0; i < ut.size(); ++i) {
    if (i < f.rank) {
      const Integer& d = f.S(i, i);
      if (ut[i] % d != 0) return std::nullopt;
      y[i] = ut[i] / d;
    } else if (ut[i] != 0) {
      return std::nullopt;
    }
  }
  return f.V * y;
}

/// Basis (as columns) of the integer kernel {x : A x = 0}.
inline std::vector<IntVector> integer_kernel(const IntMatrix& A) {
  SmithForm f = snf(A);
  std::vector<IntVector> basis;
  for (std::size_t j = f.rank; j < A.cols(); ++j) basis.push_back(f.V.column(j));
  return basis;
}

inline Integer gcd_of(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, abs(x));
  return g;
}

/// True iff target (mod 2) lies in the GF(2) span of the given vectors.
inline bool mod2_in_span(const IntVector& target, const std::vector<IntVector>& span) {
  const std::size_t n = target.size();
  auto reduce = [](const Integer& x) -> unsigned char { return static_cast<unsigned char>(x % 2 != 0); };
  std::vector<std::vector<unsigned char>> rows;
  for (const auto& v : span) {
    if (v.size() != n) throw Error(ErrorCode::RankMismatch, "mod-2 span vector length");
    std::vector<unsigned char> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = reduce(v[i]);
    rows.push_back(std::move(r));
  }
  std::vector<unsigned char> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = reduce(target[i]);
  // row echelon form over GF(2)
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && !rows[p][c]) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i][c])
        for (std::size_t j = 0; j < n; ++j) rows[i][j] ^= rows[r][j];
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = 0; i < pivots.size(); ++i)
    if (t[pivots[i]])
      for (std::size_t j = 0; j < n; ++j) t[j] ^= rows[i][j];
  for (auto bit : t)
    if (bit) return false;
  return true;
}

}  // namespace cytforge
