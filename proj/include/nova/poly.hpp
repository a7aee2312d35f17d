// Sparse multivariate polynomials over the rationals.
//
// Used for parametric residuals: an r-matrix whose entries depend on a few
// symbols (k, l, ...) is pushed through the same residual code as a constant
// one, and every entry of the result is tested for being the zero polynomial.

#ifndef NOVA_POLY_HPP
#define NOVA_POLY_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "nova/kernel.hpp"

namespace nova {

inline constexpr std::size_t kMaxPolyVariables = 8;

using Monomial = std::vector<unsigned>;

/// Graded lexicographic order: total degree first, then lexicographic.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Poly {
 public:
  Poly() = default;
  Poly(const Scalar& c);  // NOLINT: implicit promotion of constants is intended
  Poly(int c) : Poly(Scalar(c)) {}

  /// The polynomial x_index over the given variable list.
  static Poly variable(std::vector<std::string> variables, std::size_t index);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::map<Monomial, Scalar, GradedLex>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the constant monomial.
  Scalar constant_term() const;
  unsigned total_degree() const;

  /// Substitutes values for variables in order.
  Scalar evaluate(std::span<const Scalar> values) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator-(Poly a);

  /// Structural equality after aligning variable lists.
  friend bool operator==(const Poly& a, const Poly& b);

  std::string to_string() const;

  /// Re-expresses *this over `vars`, which must contain all current variables.
  Poly over(const std::vector<std::string>& vars) const;

 private:
  void add_term(const Monomial& m, const Scalar& c);
  static std::vector<std::string> merged(const std::vector<std::string>& a, const std::vector<std::string>& b);

  std::vector<std::string> vars_;
  std::map<Monomial, Scalar, GradedLex> terms_;
};

bool poly_is_zero(const Poly& p);

/// Parses expressions such as "k", "-2*k*l + 1/2", "k^2 - l". Variables are
/// collected in order of first appearance unless `variables` pins them.
Poly parse_poly(std::string_view text, const std::vector<std::string>& variables = {});

using PolyMatrix = BasicMatrix<Poly>;
using PolyTensor3 = BasicTensor3<Poly>;

}  // namespace nova

#endif  // NOVA_POLY_HPP
