// Yang-Baxter residuals, invariance of 2-tensors, the maps r#, r_nat, I
// read off an r-matrix, coboundary coproducts, and r-matrix classification.
//
// Coordinates: r = sum R(i, j) e_i (x) e_j. With f_j the dual basis,
//   r#(f_j) = sum_i R(j, i) e_i      (matrix R^T)
//   r_nat(f_j) = -sum_i R(i, j) e_i  (matrix -R)
//   I = r# - r_nat = R + R^T

#ifndef NOVA_YANGBAXTER_HPP
#define NOVA_YANGBAXTER_HPP

#include <functional>
#include <utility>
#include <vector>

#include "nova/algebra.hpp"
#include "nova/bialgebra.hpp"
#include "nova/poly.hpp"

namespace nova {

enum class YbeFlavor { Nybe, Aybe, Cybe };
std::string_view to_string(YbeFlavor f);
YbeFlavor parse_ybe_flavor(std::string_view s);

/// Throws KindMismatch unless the algebra's declared kind suits the flavor.
/// Unchecked algebras are accepted.
void require_kind(const Algebra& a, AlgebraKind expected, std::string_view what);

Tensor3 ybe_residual(const Algebra& a, const Tensor2& r, YbeFlavor flavor);
/// Same residual with polynomial coefficients.
PolyTensor3 parametric_residual(const Algebra& a, const PolyMatrix& r, YbeFlavor flavor);

/// A_r = 0 together with (d (x) id - id (x) theta) r = 0 and
/// (id (x) d - theta (x) id) r = 0. Throws PreconditionError if theta is not
/// admissible to (a, d).
Report admissible_aybe_check(const Algebra& a, const Matrix& d, const Matrix& theta, const Tensor2& r);

enum class InvarianceFlavor { Phi, U, Ad };
std::string_view to_string(InvarianceFlavor f);

/// The operator of the flavor applied to t for the basis element e_i.
Tensor2 invariance_action(const Algebra& a, const Tensor2& t, std::size_t i, InvarianceFlavor flavor);
Report invariance_check(const Algebra& a, const Tensor2& t, InvarianceFlavor flavor);

/// The matrix form of invariance of r + tau(r): I l*(e_i) = (L + R)(e_i) I
/// for every basis element, computed without going through the tensor action.
Report invariance_via_iso(const Algebra& a, const Tensor2& r);

struct RMaps {
  Matrix sharp;
  Matrix natural;
  Matrix iso;
};
RMaps build_r_maps(const Tensor2& r);

enum class CoboundaryFlavor { Novikov, Infinitesimal, Lie };
Coproduct coboundary_coproduct(const Algebra& a, const Tensor2& r, CoboundaryFlavor flavor);

/// The product on A* induced by r through the coadjoint actions.
Algebra a_star_product_from_r(const Algebra& a, const Tensor2& r);

enum class Verdict { None, Triangular, QuasiTriangular, Factorizable };
std::string_view to_string(Verdict v);

struct Classification {
  bool is_solution = false;
  bool is_skew = false;
  bool sym_part_invariant = false;
  bool iso_invertible = false;
  bool sharp_hom = false;
  bool natural_hom = false;
  Verdict verdict = Verdict::None;
  Tensor3 residual;

  Report as_report() const;
};

Classification classify_r(const Algebra& a, const Tensor2& r);

inline constexpr std::size_t kMaxSearchSupport = 9;
inline constexpr unsigned long long kMaxSearchPoints = 10'000'000ULL;

/// All NYBE solutions with the given support and coefficient grid, in
/// lexicographic order (first support entry most significant, coefficients
/// in the given order). `on_hit` sees each solution as it is found.
std::vector<Tensor2> grid_search_r(const Algebra& a, const std::vector<std::pair<std::size_t, std::size_t>>& support,
                                   const std::vector<Scalar>& coeffs,
                                   const std::function<void(const Tensor2&)>& on_hit = {});

}  // namespace nova

#endif  // NOVA_YANGBAXTER_HPP
