#include "nova/kernel.hpp"

#include <cctype>
#include <sstream>

namespace nova {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed rational literal '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Scalar q(n, d);
  q.canonicalize();
  return negative ? Scalar(-q) : q;
}

std::string to_string(const Scalar& s) { return s.get_str(10); }

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Tensor2 apply2(const Matrix& x, const Matrix& y, const Tensor2& t) { return x * t * y.transpose(); }

Tensor3 apply3(const Matrix& x, const Matrix& y, const Matrix& z, const Tensor3& t) {
  const auto n = t.dim();
  if (x.rows() != n || y.rows() != n || z.rows() != n || !x.square() || !y.square() || !z.square())
    throw DimensionError("apply3: operator sizes do not match tensor side");
  // Contract one slot at a time; each pass is O(n^4).
  Tensor3 a(n), b(n), c(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t i = 0; i < n; ++i) {
      if (x(p, i) == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) a(p, j, k) += x(p, i) * t(i, j, k);
    }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t j = 0; j < n; ++j) {
        if (y(q, j) == 0) continue;
        for (std::size_t k = 0; k < n; ++k) b(p, q, k) += y(q, j) * a(p, j, k);
      }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t k = 0; k < n; ++k) {
          if (z(s, k) == 0) continue;
          c(p, q, s) += z(s, k) * b(p, q, k);
        }
  return c;
}

Tensor2 outer(std::span<const Scalar> a, std::span<const Scalar> b) {
  Tensor2 m(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * b[j];
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

namespace {

// Reduced row echelon form in place; returns the rank. Pivot is the first
// nonzero entry in the column.
std::size_t row_reduce(Matrix& m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(rank, j));
    const Scalar inv = 1 / m(rank, col);
    for (std::size_t j = 0; j < m.cols(); ++j) m(rank, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank || m(i, col) == 0) continue;
      const Scalar f = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::optional<Matrix> mat_inverse(const Matrix& m) {
  if (!m.square()) throw DimensionError("mat_inverse: matrix is not square");
  const auto n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  row_reduce(aug);
  for (std::size_t i = 0; i < n; ++i)
    if (aug(i, i) != 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::size_t mat_rank(const Matrix& m) {
  Matrix copy = m;
  return row_reduce(copy);
}

Matrix dual_basis_wrt_form(const Matrix& omega) {
  if (!omega.square()) throw DimensionError("dual_basis_wrt_form: form is not square");
  if (!(omega == omega.transpose())) throw DegeneracyError("dual_basis_wrt_form: form is not symmetric");
  auto inv = mat_inverse(omega);
  if (!inv) throw DegeneracyError("dual_basis_wrt_form: form is degenerate");
  // omega(e_i, f_j) = (Omega F)_{ij} = delta_ij.
  return *inv;
}

std::string format_vector(std::span<const Scalar> v, std::span<const std::string> basis) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    const Scalar& c = v[i];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const Scalar a = abs(c);
    if (a != 1) os << a.get_str() << "*";
    os << (i < basis.size() ? basis[i] : "e" + std::to_string(i + 1));
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

namespace {

void append_term(std::ostringstream& os, bool& first, const Scalar& c, const std::string& label) {
  if (!first) os << (c < 0 ? " - " : " + ");
  else if (c < 0) os << "-";
  const Scalar a = abs(c);
  if (a != 1) os << a.get_str() << "*";
  os << label;
  first = false;
}

std::string label_of(std::span<const std::string> basis, std::size_t i) {
  return i < basis.size() ? basis[i] : "e" + std::to_string(i + 1);
}

}  // namespace

std::string format_tensor2(const Tensor2& t, std::span<const std::string> basis) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j)
      if (t(i, j) != 0) append_term(os, first, t(i, j), label_of(basis, i) + "⊗" + label_of(basis, j));
  if (first) os << "0";
  return os.str();
}

std::string format_tensor3(const Tensor3& t, std::span<const std::string> basis) {
  std::ostringstream os;
  bool first = true;
  const auto n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (t(i, j, k) != 0)
          append_term(os, first, t(i, j, k),
                      label_of(basis, i) + "⊗" + label_of(basis, j) + "⊗" + label_of(basis, k));
  if (first) os << "0";
  return os.str();
}

}  // namespace nova
