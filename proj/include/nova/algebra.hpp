// Finite-dimensional algebras given by structure constants, and the identity
// checkers for every class used by the library.
//
// Products are stored as c(i, j, k) with e_i * e_j = sum_k c(i, j, k) e_k.
// Identity checks run over all basis tuples; multilinearity makes that
// sufficient.

#ifndef NOVA_ALGEBRA_HPP
#define NOVA_ALGEBRA_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nova/kernel.hpp"
#include "nova/report.hpp"

namespace nova {

enum class AlgebraKind { LeftNovikov, RightNovikov, CommAssoc, Lie, PreLie, Unchecked };

enum class IdentityKind { LeftNovikov, RightNovikov, PreLie, CommAssoc, Lie, Commutative };

std::string_view to_string(AlgebraKind k);
AlgebraKind parse_algebra_kind(std::string_view s);
std::string_view to_string(IdentityKind k);
IdentityKind parse_identity_kind(std::string_view s);
/// The identity a declared kind promises; nullopt for Unchecked.
std::optional<IdentityKind> identity_for(AlgebraKind k);

/// Default basis labels prefix1..prefixn.
std::vector<std::string> default_basis(std::size_t n, std::string_view prefix = "e");

struct Algebra {
  std::string name;
  std::vector<std::string> basis;
  Tensor3 c;
  AlgebraKind kind = AlgebraKind::Unchecked;

  Algebra() = default;
  Algebra(std::vector<std::string> labels, AlgebraKind k, std::string nm = {});

  std::size_t dim() const { return basis.size(); }

  /// Sets e_i * e_j (0-based indices).
  void set_product(std::size_t i, std::size_t j, const Vector& value);
  Vector basis_product(std::size_t i, std::size_t j) const;
  Vector product(std::span<const Scalar> a, std::span<const Scalar> b) const;

  /// Matrix of v -> a * v.
  Matrix left(std::span<const Scalar> a) const;
  /// Matrix of v -> v * a.
  Matrix right(std::span<const Scalar> a) const;
  Matrix left(std::size_t i) const;
  Matrix right(std::size_t i) const;

  std::size_t index_of(std::string_view label) const;
};

Algebra zero_algebra(std::size_t n, AlgebraKind kind, std::string_view prefix = "e");

Report check_identity(const Algebra& a, IdentityKind id);

/// (V, l, r) with one m x m matrix per basis element of the algebra.
struct Representation {
  std::size_t carrier_dim = 0;
  std::vector<Matrix> l_maps;
  std::vector<Matrix> r_maps;
};

Representation adjoint_rep(const Algebra& a);
/// Dual of (V, l, r): (V*, l* + r*, -r*) with psi*(x) = -psi(x)^T.
Representation dual_rep(const Representation& rep);
Representation coadjoint_rep(const Algebra& a);
Report check_representation(const Algebra& a, const Representation& rep);

enum class MapRole { Derivation, AdmissibleTheta, RotaBaxter, Homomorphism, Generic };
std::string_view to_string(MapRole r);
MapRole parse_map_role(std::string_view s);

struct StructureMap {
  std::string name;
  Matrix matrix;  // column j = image of e_j
  MapRole role = MapRole::Generic;
  Scalar weight = 0;  // Rota-Baxter weight

  Vector operator()(std::span<const Scalar> v) const { return matrix.apply(v); }
};

/// Verifies the role identity on all basis pairs. Admissible-theta needs the
/// companion derivation; homomorphisms need the target algebra.
Report check_structure_map(const Algebra& a, const StructureMap& m, const StructureMap* companion = nullptr,
                           const Algebra* target = nullptr);

/// f(x * y) = f(x) *' f(y) on basis pairs; f given as a matrix (column j = f(e_j)).
Report check_homomorphism(const Algebra& source, const Algebra& target, const Matrix& f, std::string_view name);

enum class FormFlavor { NovikovInvariant, RightNovikovInvariant, Plain };
std::string_view to_string(FormFlavor f);
FormFlavor parse_form_flavor(std::string_view s);

struct BilinearForm {
  std::string name;
  Matrix matrix;  // matrix(i, j) = B(e_i, e_j)
  FormFlavor flavor = FormFlavor::Plain;

  Scalar operator()(std::span<const Scalar> x, std::span<const Scalar> y) const;
};

struct FormReport {
  bool symmetric = false;
  bool nondegenerate = false;
  bool invariant = false;
  std::string witness;

  bool pass() const { return symmetric && nondegenerate && invariant; }
  Report as_report() const;
};

FormReport check_bilinear_form(const Algebra& a, const BilinearForm& f);

Algebra direct_sum(const Algebra& a, const Algebra& b);

}  // namespace nova

#endif  // NOVA_ALGEBRA_HPP
