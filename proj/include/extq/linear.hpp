#pragma once

#include <utility>
#include <vector>

#include "extq/element.hpp"
#include "extq/matrix.hpp"

namespace extq {

/// Invertible linear change of coordinates on E_1.  Row i is the image of
/// variable e_{i+1} as a linear form; invertibility is checked on construction.
template <class K>
class LinearChange {
 public:
  LinearChange(Matrix<K> m, FieldCtx<K> ctx = {}) : matrix_(std::move(m)) {
    if (matrix_.rows() != matrix_.cols()) throw UsageError("linear change must be square");
    inverse_ = matrix_.inverse(ctx);  // throws when singular
  }

  static LinearChange identity(int n, FieldCtx<K> ctx = {}) {
    Matrix<K> m(n, n, ctx);
    for (int i = 0; i < n; ++i) m.at(i, i) = ctx.one();
    return LinearChange(std::move(m), ctx);
  }

  /// Build from the images of the variables.
  static LinearChange from_images(const std::vector<LinearForm<K>>& images, FieldCtx<K> ctx = {}) {
    int n = static_cast<int>(images.size());
    Matrix<K> m(n, n, ctx);
    for (int i = 0; i < n; ++i) {
      if (images[i].ambient_n() != n) throw UsageError("linear change image has wrong length");
      for (int j = 0; j < n; ++j) m.at(i, j) = images[i].coefficients[j];
    }
    return LinearChange(std::move(m), ctx);
  }

  int n() const { return static_cast<int>(matrix_.rows()); }
  const Matrix<K>& matrix() const { return matrix_; }

  LinearForm<K> image_of_variable(int i) const {
    LinearForm<K> out(n());
    for (int j = 0; j < n(); ++j) out.coefficients[j] = matrix_.at(i - 1, j);
    return out;
  }

  LinearChange inverted() const {
    LinearChange out = *this;
    std::swap(out.matrix_, out.inverse_);
    return out;
  }

  /// Composition: applying `composed(a, b)` equals applying a, then b.
  friend LinearChange composed(const LinearChange& a, const LinearChange& b) {
    LinearChange out = a;
    out.matrix_ = a.matrix_ * b.matrix_;
    out.inverse_ = b.inverse_ * a.inverse_;
    return out;
  }

 private:
  Matrix<K> matrix_;
  Matrix<K> inverse_;
};

/// Algebra-map extension of the variable substitution e_i -> C(e_i).
template <class K>
ExtElement<K> substitute(const ExtElement<K>& f, const LinearChange<K>& C) {
  if (f.ambient_n() != C.n()) throw UsageError("mismatched ambient variable counts");
  ExtElement<K> out(f.ambient_n());
  for (auto& [m, c] : f.terms()) {
    ExtElement<K> prod = ExtElement<K>::term(f.ambient_n(), Monomial{}, c);
    for (int i : m.variables()) prod = prod * C.image_of_variable(i).element();
    out = out + prod;
  }
  return out;
}

}  // namespace extq
