// Constructions built from bialgebra data: doubles, factorization,
// Rota-Baxter operators from factorizable r-matrices and back, Novikov
// bialgebras induced from differential data, and Lie bialgebras on A (x) B.

#ifndef NOVA_CONSTRUCTIONS_HPP
#define NOVA_CONSTRUCTIONS_HPP

#include <string>
#include <utility>

#include "nova/algebra.hpp"
#include "nova/bialgebra.hpp"
#include "nova/yangbaxter.hpp"

namespace nova {

/// Algebra on A + A* (basis e..., f...) with r~ = sum e_i (x) f_i and the
/// pairing form B((a1, x1), (a2, x2)) = <x1, a2> + <x2, a1>.
struct DoubleBundle {
  Algebra algebra;
  Tensor2 r_tilde;
  std::size_t half = 0;  // A occupies [0, half), A* occupies [half, 2 half)
  BilinearForm form;
};

/// Throws PreconditionError unless (a, cop) is a Novikov bialgebra.
DoubleBundle novikov_double(const Algebra& a, const Coproduct& cop);
Report check_manin_triple(const DoubleBundle& d);

struct DiffDoubleBundle {
  BialgebraBundle bundle;  // algebra on A + A*, coproduct Delta_{r~}, d + theta^T, theta + d^T
  Tensor2 r_tilde;
  std::size_t half = 0;
};

/// Throws PreconditionError unless b is a differential infinitesimal bialgebra.
DiffDoubleBundle differential_double(const BialgebraBundle& b);

/// Factorizability of a differential bialgebra: I invertible and I theta^T = d I.
Report check_differential_factorizable(const Algebra& a, const Matrix& d, const Matrix& theta, const Tensor2& r);

/// x = x_plus + x_minus with x_plus = r#(I^-1 x) and x_minus = -r_nat(I^-1 x).
std::pair<Vector, Vector> factorize_element(const Algebra& a, const Tensor2& r, const Vector& x);

/// a1 *_P a2 = P(a1) a2 + a1 P(a2) + weight a1 a2.
Algebra descendent_algebra(const Algebra& a, const StructureMap& p);

struct QuadraticRB {
  Algebra algebra;
  StructureMap p;
  BilinearForm form;
};

/// Rota-Baxter identity, form checks, and B(P a1, a2) + B(a1, P a2) + weight B(a1, a2) = 0.
Report check_quadratic_rb(const QuadraticRB& q);
QuadraticRB rb_from_factorizable(const Algebra& a, const Tensor2& r, const Scalar& weight);
Tensor2 r_from_quadratic_rb(const QuadraticRB& q);
/// The same data with P replaced by -weight id - P.
QuadraticRB twin_rb(const QuadraticRB& q);

enum class InductionGate { HalfQ, ThetaDerivation, SideConditions, None };
std::string_view to_string(InductionGate g);

struct InducedNovikov {
  BialgebraBundle bundle;
  InductionGate gate = InductionGate::None;
  Report verification;  // check_bialgebra(novikov) on the result
};

/// a1 *_q a2 = a1 (d + q theta)(a2), delta_q = (id (x) (theta + q d)) Delta.
InducedNovikov induce_novikov_bialgebra(const BialgebraBundle& b, const Scalar& q);

/// Delta_omega(e_s) = sum_{p,q} omega(e_s, f_p f_q) e_p (x) e_q.
Coproduct delta_omega(const Algebra& b, const BilinearForm& omega);

/// Basis labels "a.b" in row-major order, index(i, j) = i * m + j.
std::vector<std::string> product_labels(const std::vector<std::string>& a, const std::vector<std::string>& b);

/// Bracket [a1 (x) b1, a2 (x) b2] = a1 a2 (x) b1 b2 - a2 a1 (x) b2 b1 on A (x) B.
Algebra induced_lie_algebra(const Algebra& a, const Algebra& b);

struct LieBundle {
  BialgebraBundle bundle;
  std::size_t n = 0;
  std::size_t m = 0;
};

/// (id - tau) of sum (a1 (x) b1) (x) (a2 (x) b2) over delta(a) and delta_b(b).
/// No axioms are checked; induce_lie_bialgebra adds the precondition checks.
Coproduct induced_cobracket(const Coproduct& delta, const Coproduct& delta_b);

LieBundle induce_lie_bialgebra(const BialgebraBundle& nb, const Algebra& b, const BilinearForm& omega);

/// r^ with coefficient R(a, b) F(k, j) at ((a, j), (b, k)), F = omega^-1.
Tensor2 lift_r_hat(const Tensor2& r, const BilinearForm& omega);

}  // namespace nova

#endif  // NOVA_CONSTRUCTIONS_HPP
