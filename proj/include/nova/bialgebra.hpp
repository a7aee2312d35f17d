// Coproducts, coalgebra axioms, and bialgebra compatibility checks.
//
// A coproduct stores d(i, j, k) with delta(e_i) = sum d(i, j, k) e_j (x) e_k.
// Elements of V (x) V are coefficient matrices, so (X (x) Y)(t) = X t Y^T.

#ifndef NOVA_BIALGEBRA_HPP
#define NOVA_BIALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "nova/algebra.hpp"

namespace nova {

enum class CoalgebraFlavor { Novikov, CoassocCocomm, RightNovikov, Lie, Unchecked };
std::string_view to_string(CoalgebraFlavor f);
CoalgebraFlavor parse_coalgebra_flavor(std::string_view s);

/// Algebra kind the dual of a coalgebra of this flavor should have.
AlgebraKind dual_kind(CoalgebraFlavor f);

struct Coproduct {
  std::string name;
  std::vector<std::string> basis;
  Tensor3 d;
  CoalgebraFlavor flavor = CoalgebraFlavor::Unchecked;

  Coproduct() = default;
  Coproduct(std::vector<std::string> labels, CoalgebraFlavor f, std::string nm = {});

  std::size_t dim() const { return basis.size(); }
  /// delta(e_i) as a coefficient matrix.
  Tensor2 of(std::size_t i) const { return d.slice(i); }
  /// delta(x) for an arbitrary element.
  Tensor2 of(std::span<const Scalar> x) const;
  void set(std::size_t i, const Tensor2& value);
};

/// The algebra on the dual basis with f_j * f_k = sum_i d(i, j, k) f_i.
/// Dual labels: "e3" becomes "f3"; any other label gets a trailing "*".
Algebra dual_product(const Coproduct& cop);
std::vector<std::string> dual_labels(const std::vector<std::string>& basis);

Report check_coalgebra(const Coproduct& cop, CoalgebraFlavor flavor);

enum class BialgebraFlavor { Novikov, Infinitesimal, Lie, DiffInfinitesimal };
std::string_view to_string(BialgebraFlavor f);
BialgebraFlavor parse_bialgebra_flavor(std::string_view s);

struct BialgebraBundle {
  Algebra algebra;
  Coproduct coproduct;
  std::optional<Matrix> d;      // derivation
  std::optional<Matrix> theta;  // admissible companion
};

/// Runs the algebra identity, the coalgebra axioms and the compatibility
/// conditions; sub-check names are prefixed "algebra/", "coalgebra/",
/// "compatibility/" (and "differential/" for the differential flavor).
Report check_bialgebra(const BialgebraBundle& b, BialgebraFlavor flavor);

}  // namespace nova

#endif  // NOVA_BIALGEBRA_HPP
