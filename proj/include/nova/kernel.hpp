// Exact arithmetic kernel: rationals, dense matrices, 3-tensors, and the
// handful of linear-algebra routines the algebra layers need.
//
// Everything here is a value type. Tensors use the coordinate convention
//   t = sum T[i][j] e_i (x) e_j,   (X (x) Y)(t)  has coefficient matrix  X T Y^T
// and analogously for three slots.

#ifndef NOVA_KERNEL_HPP
#define NOVA_KERNEL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nova {

using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

// Error taxonomy. All of them are std::invalid_argument so callers that only
// care about "bad input" can catch one type.
class Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class DimensionError : public Error {
 public:
  using Error::Error;
};
class DegeneracyError : public Error {
 public:
  using Error::Error;
};
class KindMismatch : public Error {
 public:
  using Error::Error;
};
class PreconditionError : public Error {
 public:
  using Error::Error;
};
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, unsigned long long count)
      : Error(what), count_(count) {}
  unsigned long long count() const { return count_; }

 private:
  unsigned long long count_;
};
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Parses "-1/2", "3", "0". Rejects zero denominators, whitespace, and '+'.
Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar& s);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

template <class T>
class BasicMatrix {
 public:
  BasicMatrix() = default;
  BasicMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static BasicMatrix identity(std::size_t n) {
    BasicMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const T> entries() const { return data_; }

  BasicMatrix transpose() const {
    BasicMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!(x == T(0))) return false;
    return true;
  }

  BasicMatrix& operator+=(const BasicMatrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  BasicMatrix& operator-=(const BasicMatrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  BasicMatrix& operator*=(const Scalar& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }
  friend BasicMatrix operator+(BasicMatrix a, const BasicMatrix& b) { return a += b; }
  friend BasicMatrix operator-(BasicMatrix a, const BasicMatrix& b) { return a -= b; }
  friend BasicMatrix operator-(BasicMatrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }
  friend BasicMatrix operator*(const Scalar& s, BasicMatrix a) { return a *= s; }

  friend BasicMatrix operator*(const BasicMatrix& a, const BasicMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimensions differ");
    BasicMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  std::vector<T> apply(std::span<const T> v) const {
    if (v.size() != cols_) throw DimensionError("matrix-vector product: size mismatch");
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!(v[j] == T(0))) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend bool operator==(const BasicMatrix& a, const BasicMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same(const BasicMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using Matrix = BasicMatrix<Scalar>;
// Elements of V (x) V: square coefficient matrices.
using Tensor2 = Matrix;

/// Dense cube of side n; t = sum T[i][j][k] e_i (x) e_j (x) e_k.
template <class T>
class BasicTensor3 {
 public:
  BasicTensor3() = default;
  explicit BasicTensor3(std::size_t n) : n_(n), data_(n * n * n) {}

  std::size_t dim() const { return n_; }
  T& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * n_ + j) * n_ + k]; }
  const T& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * n_ + j) * n_ + k];
  }
  std::span<const T> entries() const { return data_; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!(x == T(0))) return false;
    return true;
  }

  BasicTensor3& operator+=(const BasicTensor3& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  BasicTensor3& operator-=(const BasicTensor3& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  friend BasicTensor3 operator+(BasicTensor3 a, const BasicTensor3& b) { return a += b; }
  friend BasicTensor3 operator-(BasicTensor3 a, const BasicTensor3& b) { return a -= b; }
  friend bool operator==(const BasicTensor3& a, const BasicTensor3& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }

  /// Slice i as a matrix: the coefficients of e_i (x) (.) (x) (.).
  BasicMatrix<T> slice(std::size_t i) const {
    BasicMatrix<T> m(n_, n_);
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k) m(j, k) = (*this)(i, j, k);
    return m;
  }

 private:
  void check_same(const BasicTensor3& o) const {
    if (n_ != o.n_) throw DimensionError("tensor sides differ");
  }

  std::size_t n_ = 0;
  std::vector<T> data_;
};

using Tensor3 = BasicTensor3<Scalar>;

// Slot permutations on V (x) V (x) V.
template <class T>
BasicTensor3<T> swap12(const BasicTensor3<T>& t) {
  BasicTensor3<T> out(t.dim());
  const auto n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out(j, i, k) = t(i, j, k);
  return out;
}
template <class T>
BasicTensor3<T> swap23(const BasicTensor3<T>& t) {
  BasicTensor3<T> out(t.dim());
  const auto n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out(i, k, j) = t(i, j, k);
  return out;
}

/// (X (x) Y)(t) for t in V (x) V.
Tensor2 apply2(const Matrix& x, const Matrix& y, const Tensor2& t);
/// (X (x) Y (x) Z)(t) for t in V (x) V (x) V.
Tensor3 apply3(const Matrix& x, const Matrix& y, const Matrix& z, const Tensor3& t);

/// a (x) b as a coefficient matrix.
Tensor2 outer(std::span<const Scalar> a, std::span<const Scalar> b);
/// Kronecker product; index (i, j) -> i * b.rows() + j.
Matrix kron(const Matrix& a, const Matrix& b);

std::optional<Matrix> mat_inverse(const Matrix& m);
std::size_t mat_rank(const Matrix& m);
/// Columns of the result are the omega-dual basis vectors f_j, omega(e_i, f_j) = delta_ij.
Matrix dual_basis_wrt_form(const Matrix& omega);

std::string format_vector(std::span<const Scalar> v, std::span<const std::string> basis);
/// "e1⊗e2 - 2*e2⊗e1"; "0" for the zero tensor.
std::string format_tensor2(const Tensor2& t, std::span<const std::string> basis);
std::string format_tensor3(const Tensor3& t, std::span<const std::string> basis);

}  // namespace nova

#endif  // NOVA_KERNEL_HPP
