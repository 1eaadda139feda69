#pragma once

#include <cstddef>
#include <vector>

#include "extq/scalar.hpp"

namespace extq {

/// Row echelon accumulator: rows are inserted one at a time, reduced against
/// the pivots found so far.  Forward-reduced only (no back substitution);
/// sufficient for rank, membership and kernel extraction.
template <class K>
class Echelon {
 public:
  explicit Echelon(size_t width, FieldCtx<K> = {}) : width_(width), row_of_pivot_(width, -1) {}

  size_t width() const { return width_; }
  size_t rank() const { return rows_.size(); }

  /// Reduces v against the stored rows in place; afterwards v is either zero
  /// or has its first nonzero entry in a non-pivot column.
  void reduce(std::vector<K>& v) const {
    for (size_t c = 0; c < width_; ++c) {
      if (extq::is_zero(v[c])) continue;
      int r = row_of_pivot_[c];
      if (r < 0) continue;
      K f = v[c];
      const auto& row = rows_[r];
      for (size_t j = c; j < width_; ++j)
        if (!extq::is_zero(row[j])) v[j] -= f * row[j];
    }
  }

  /// Returns true (and consumes v, rank grows) when v is independent of the rows.
  bool insert(std::vector<K> v) {
    for (size_t c = 0; c < width_; ++c) {
      if (extq::is_zero(v[c])) continue;
      int r = row_of_pivot_[c];
      if (r < 0) {
        K inv = inverse(v[c]);
        for (size_t j = c; j < width_; ++j)
          if (!extq::is_zero(v[j])) v[j] = v[j] * inv;
        row_of_pivot_[c] = static_cast<int>(rows_.size());
        pivots_.push_back(c);
        rows_.push_back(std::move(v));
        return true;
      }
      K f = v[c];
      const auto& row = rows_[r];
      for (size_t j = c; j < width_; ++j)
        if (!extq::is_zero(row[j])) v[j] -= f * row[j];
    }
    return false;
  }

  bool member(std::vector<K> v) const {
    reduce(v);
    for (auto& x : v)
      if (!extq::is_zero(x)) return false;
    return true;
  }

  const std::vector<size_t>& pivots() const { return pivots_; }

 private:
  size_t width_;
  std::vector<std::vector<K>> rows_;
  std::vector<size_t> pivots_;
  std::vector<int> row_of_pivot_;
};

/// F_p specialization with delayed modular reduction: work vectors accumulate
/// in 64-bit and are reduced once per insertion.  Valid while
/// width * (p-1)^2 stays below 2^64; enforced in the constructor.
template <>
class Echelon<Fp> {
 public:
  explicit Echelon(size_t width, FieldCtx<Fp> ctx = {})
      : p_(ctx.p), width_(width), row_of_pivot_(width, -1) {
    if (p_ >= (uint32_t{1} << 20))
      throw UsageError("modulus too large for the delayed-reduction echelon");
  }

  size_t width() const { return width_; }
  size_t rank() const { return rows_.size(); }
  uint32_t modulus() const { return p_; }

  bool insert(const std::vector<Fp>& v) {
    std::vector<uint64_t> w(width_);
    for (size_t j = 0; j < width_; ++j) w[j] = v[j].value();
    return insert_raw(w);
  }

  bool insert_raw(std::vector<uint64_t>& w) {
    size_t c = eliminate(w);
    if (c == width_) return false;
    // normalize into a fresh u32 row with pivot value 1
    uint64_t x = w[c] % p_;
    uint64_t inv = inverse(Fp(static_cast<long long>(x), p_)).value();
    std::vector<uint32_t> row(width_, 0);
    for (size_t j = c; j < width_; ++j) row[j] = static_cast<uint32_t>((w[j] % p_) * inv % p_);
    row_of_pivot_[c] = static_cast<int>(rows_.size());
    pivots_.push_back(c);
    rows_.push_back(std::move(row));
    return true;
  }

  bool member(const std::vector<Fp>& v) const {
    std::vector<uint64_t> w(width_);
    for (size_t j = 0; j < width_; ++j) w[j] = v[j].value();
    return eliminate(w) == width_;
  }

  const std::vector<size_t>& pivots() const { return pivots_; }

  /// Reduces w against the rows; returns the first surviving nonzero column,
  /// or width when w reduced to zero.  On return entries may be unreduced mod p.
  size_t eliminate(std::vector<uint64_t>& w) const {
    size_t budget = (~uint64_t{0}) / (uint64_t(p_ - 1) * (p_ - 1)) - 1;
    size_t steps = 0;
    for (size_t c = 0; c < width_; ++c) {
      uint64_t x = w[c] % p_;
      w[c] = x;
      if (x == 0) continue;
      int r = row_of_pivot_[c];
      if (r < 0) return c;
      uint64_t f = p_ - x;
      const uint32_t* row = rows_[r].data();
      for (size_t j = c + 1; j < width_; ++j) w[j] += f * row[j];
      w[c] = 0;
      if (++steps >= budget) {  // re-normalize to keep accumulators in range
        for (size_t j = c + 1; j < width_; ++j) w[j] %= p_;
        steps = 0;
      }
    }
    return width_;
  }

 private:
  uint32_t p_;
  size_t width_;
  std::vector<std::vector<uint32_t>> rows_;
  std::vector<size_t> pivots_;
  std::vector<int> row_of_pivot_;
};

template <class K>
struct KernelResult {
  size_t rank = 0;
  std::vector<std::vector<K>> kernel;  // vectors of length = number of columns
};

/// Rank and kernel basis of the linear map sending unit vector k to columns[k].
template <class K>
KernelResult<K> column_kernel(const std::vector<std::vector<K>>& columns, size_t target_dim,
                              FieldCtx<K> ctx = {}) {
  size_t ncols = columns.size();
  Echelon<K> ech(target_dim + ncols, ctx);
  KernelResult<K> out;
  std::vector<K> v;
  for (size_t k = 0; k < ncols; ++k) {
    v.assign(target_dim + ncols, ctx.zero());
    for (size_t j = 0; j < target_dim; ++j) v[j] = columns[k][j];
    v[target_dim + k] = ctx.one();
    if constexpr (std::is_same_v<K, Fp>) {
      std::vector<uint64_t> w(v.size());
      for (size_t j = 0; j < v.size(); ++j) w[j] = v[j].value();
      size_t c = ech.eliminate(w);
      if (c >= target_dim) {
        std::vector<K> kv(ncols);
        for (size_t j = 0; j < ncols; ++j)
          kv[j] = Fp(static_cast<long long>(w[target_dim + j] % ech.modulus()), ech.modulus());
        out.kernel.push_back(std::move(kv));
      } else {
        ++out.rank;
      }
      if (c < w.size()) ech.insert_raw(w);
    } else {
      ech.reduce(v);
      size_t lead = 0;
      while (lead < v.size() && extq::is_zero(v[lead])) ++lead;
      if (lead >= target_dim) {
        out.kernel.emplace_back(v.begin() + target_dim, v.end());
      } else {
        ++out.rank;
      }
      if (lead < v.size()) ech.insert(std::move(v));
    }
  }
  return out;
}

/// Small dense matrix over an exact field; used for ranks, inverses and
/// membership checks at desk scale.
template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols, FieldCtx<K> ctx = {})
      : rows_(rows), cols_(cols), data_(rows, std::vector<K>(cols, ctx.zero())) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  K& at(size_t i, size_t j) { return data_[i][j]; }
  const K& at(size_t i, size_t j) const { return data_[i][j]; }
  const std::vector<K>& row(size_t i) const { return data_[i]; }

  size_t rank(FieldCtx<K> ctx = {}) const {
    Echelon<K> ech(cols_, ctx);
    for (auto& r : data_) ech.insert(r);
    return ech.rank();
  }

  std::vector<std::vector<K>> kernel_basis(FieldCtx<K> ctx = {}) const {
    std::vector<std::vector<K>> cols(cols_, std::vector<K>(rows_, ctx.zero()));
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) cols[j][i] = data_[i][j];
    return column_kernel<K>(cols, rows_, ctx).kernel;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw UsageError("matrix dimension mismatch");
    Matrix out(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        if (extq::is_zero(a.data_[i][k])) continue;
        for (size_t j = 0; j < b.cols_; ++j) out.data_[i][j] += a.data_[i][k] * b.data_[k][j];
      }
    return out;
  }

  /// Gauss-Jordan inverse; throws UsageError when singular.
  Matrix inverse(FieldCtx<K> ctx = {}) const {
    if (rows_ != cols_) throw UsageError("inverse of a non-square matrix");
    size_t n = rows_;
    std::vector<std::vector<K>> a = data_;
    Matrix inv(n, n, ctx);
    for (size_t i = 0; i < n; ++i) inv.data_[i][i] = ctx.one();
    for (size_t c = 0; c < n; ++c) {
      size_t piv = c;
      while (piv < n && extq::is_zero(a[piv][c])) ++piv;
      if (piv == n) throw UsageError("matrix is not invertible");
      std::swap(a[piv], a[c]);
      std::swap(inv.data_[piv], inv.data_[c]);
      K d = extq::inverse(a[c][c]);
      for (size_t j = 0; j < n; ++j) {
        a[c][j] = a[c][j] * d;
        inv.data_[c][j] = inv.data_[c][j] * d;
      }
      for (size_t r = 0; r < n; ++r) {
        if (r == c || extq::is_zero(a[r][c])) continue;
        K f = a[r][c];
        for (size_t j = 0; j < n; ++j) {
          a[r][j] -= f * a[c][j];
          inv.data_[r][j] -= f * inv.data_[c][j];
        }
      }
    }
    return inv;
  }

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<std::vector<K>> data_;
};

}  // namespace extq
