// Fixture accessors, literal builders, and seeded generators shared by the tests.

#ifndef NOVA_TESTS_SUPPORT_HPP
#define NOVA_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <random>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "nova/algebra.hpp"
#include "nova/bialgebra.hpp"
#include "nova/fixtures.hpp"
#include "nova/io.hpp"

namespace support {

using namespace nova;

inline Algebra alg(std::string_view fx) { return to_algebra(fixture_part(fx, DefKind::Algebra)); }
inline Coproduct cop(std::string_view fx) { return to_coproduct(fixture_part(fx, DefKind::Coproduct)); }
inline Tensor2 rmat(std::string_view fx) { return to_tensor(fixture_part(fx, DefKind::RMatrix)); }
inline Matrix map(std::string_view fx, std::string_view cls) { return to_map(fixture_part(fx, DefKind::Map, cls)).matrix; }
inline BilinearForm form(std::string_view fx) { return to_form(fixture_part(fx, DefKind::Form)); }
inline BialgebraBundle bundle(std::string_view fx) { return to_bialgebra_bundle(flatten(fixture(fx))); }

/// Tensor from 1-based (i, j, value) triples.
inline Tensor2 t2(std::size_t n, std::initializer_list<std::tuple<int, int, const char*>> entries) {
  Tensor2 t(n, n);
  for (const auto& [i, j, v] : entries) t(i - 1, j - 1) += parse_scalar(v);
  return t;
}

/// Vector from 1-based (i, value) pairs.
inline Vector vec(std::size_t n, std::initializer_list<std::pair<int, const char*>> entries) {
  Vector v = zero_vector(n);
  for (const auto& [i, x] : entries) v[i - 1] += parse_scalar(x);
  return v;
}

/// Linear map from 1-based (source, target, value): e_source -> value e_target.
inline Matrix lin(std::size_t n, std::initializer_list<std::tuple<int, int, const char*>> entries) {
  Matrix m(n, n);
  for (const auto& [src, dst, v] : entries) m(dst - 1, src - 1) += parse_scalar(v);
  return m;
}

/// Tensor3 from 1-based (i, j, k, value).
inline Tensor3 t3(std::size_t n, std::initializer_list<std::tuple<int, int, int, const char*>> entries) {
  Tensor3 t(n);
  for (const auto& [i, j, k, v] : entries) t(i - 1, j - 1, k - 1) += parse_scalar(v);
  return t;
}

/// Small rationals p/q with |p| <= 3, q in {1, 2, 3}, zero with the given weight.
inline Scalar small_rational(std::mt19937& rng, int zero_weight = 2) {
  std::uniform_int_distribution<int> pick(-3, 3 + zero_weight);
  int p = pick(rng);
  if (p > 3) p = 0;
  std::uniform_int_distribution<int> den(1, 3);
  Scalar s(p, den(rng));
  s.canonicalize();
  return s;
}

inline Tensor2 random_tensor2(std::mt19937& rng, std::size_t n, int zero_weight = 4) {
  Tensor2 t(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t(i, j) = small_rational(rng, zero_weight);
  return t;
}

inline Matrix random_invertible(std::mt19937& rng, std::size_t n) {
  for (;;) {
    Matrix m = random_tensor2(rng, n, 1);
    if (mat_inverse(m)) return m;
  }
}

/// Structure constants transported along the basis change e'_i = P e_i.
inline Algebra change_basis(const Algebra& a, const Matrix& p) {
  const Matrix pinv = *mat_inverse(p);
  const std::size_t n = a.dim();
  Algebra out(a.basis, a.kind, a.name);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Scalar> pi(n), pj(n);
      for (std::size_t k = 0; k < n; ++k) {
        pi[k] = p(k, i);
        pj[k] = p(k, j);
      }
      out.set_product(i, j, pinv.apply(a.product(pi, pj)));
    }
  return out;
}

/// Coproduct whose dual product is the given algebra: d(i, j, k) = c(j, k, i).
inline Coproduct coproduct_dual_to(const Algebra& a, CoalgebraFlavor f) {
  Coproduct c(a.basis, f, "dual");
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c.d(i, j, k) = a.c(j, k, i);
  return c;
}

}  // namespace support

#endif  // NOVA_TESTS_SUPPORT_HPP
