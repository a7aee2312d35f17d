#include "nova/constructions.hpp"

namespace nova {

namespace {

void require_pass(const Report& r, std::string_view what) {
  if (const Check* f = r.first_failure())
    throw PreconditionError(std::string(what) + ": " + f->name + (f->witness.empty() ? "" : " (" + f->witness + ")"));
}

// Writes block products: out(i, j, .) = va (A part) and vb (A* part).
void put(Algebra& out, std::size_t i, std::size_t j, std::size_t n, const Vector& va, const Vector& vb) {
  for (std::size_t k = 0; k < n; ++k) {
    out.c(i, j, k) = va[k];
    out.c(i, j, n + k) = vb[k];
  }
}

std::vector<std::string> doubled_labels(const std::vector<std::string>& basis) {
  std::vector<std::string> labels = basis;
  for (auto& f : dual_labels(basis)) labels.push_back(f);
  return labels;
}

Tensor2 canonical_r(std::size_t n) {
  Tensor2 r(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) r(i, n + i) = 1;
  return r;
}

Matrix block_diag(const Matrix& x, const Matrix& y) {
  const auto n = x.rows(), m = y.rows();
  Matrix out(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = x(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out(n + i, n + j) = y(i, j);
  return out;
}

}  // namespace

DoubleBundle novikov_double(const Algebra& a, const Coproduct& cop) {
  require_pass(check_bialgebra({a, cop, std::nullopt, std::nullopt}, BialgebraFlavor::Novikov),
               "not a Novikov bialgebra");
  const auto n = a.dim();
  const Algebra star = dual_product(cop);
  DoubleBundle d;
  d.half = n;
  d.algebra = Algebra(doubled_labels(a.basis), AlgebraKind::LeftNovikov, a.name.empty() ? "" : "D(" + a.name + ")");
  const Vector zero = zero_vector(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix lr_neg_t = -(a.left(i) + a.right(i)).transpose();  // (l* + r*)(e_i) on A*
    const Matrix sl_neg_t = -(star.left(i) + star.right(i)).transpose();  // (l* + r*)(f_i) on A
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ej = unit_vector(n, j);
      put(d.algebra, i, j, n, a.basis_product(i, j), zero);
      put(d.algebra, n + i, n + j, n, zero, star.basis_product(i, j));
      // e_i * f_j and f_i * e_j; -r*(x) is R(x)^T
      put(d.algebra, i, n + j, n, star.right(j).transpose().apply(unit_vector(n, i)), lr_neg_t.apply(ej));
      put(d.algebra, n + i, j, n, sl_neg_t.apply(ej), a.right(j).transpose().apply(unit_vector(n, i)));
    }
  }
  d.r_tilde = canonical_r(n);
  d.form.name = "pairing";
  d.form.flavor = FormFlavor::NovikovInvariant;
  d.form.matrix = d.r_tilde + d.r_tilde.transpose();
  return d;
}

Report check_manin_triple(const DoubleBundle& d) {
  const auto n = d.half;
  Report rep;
  auto closure = [&](std::size_t lo, std::size_t other, const char* name) {
    for (std::size_t i = lo; i < lo + n; ++i)
      for (std::size_t j = lo; j < lo + n; ++j)
        for (std::size_t k = other; k < other + n; ++k)
          if (d.algebra.c(i, j, k) != 0) {
            rep.add(name, false,
                    "product of (" + d.algebra.basis[i] + "," + d.algebra.basis[j] + ") has a " +
                        d.algebra.basis[k] + " component");
            return;
          }
    rep.add(name, true);
  };
  closure(0, n, "A is a subalgebra");
  closure(n, 0, "A* is a subalgebra");
  rep.absorb(check_identity(d.algebra, IdentityKind::LeftNovikov));
  rep.absorb(check_bilinear_form(d.algebra, d.form).as_report(), "form");
  return rep;
}

DiffDoubleBundle differential_double(const BialgebraBundle& b) {
  require_pass(check_bialgebra(b, BialgebraFlavor::DiffInfinitesimal), "not a differential infinitesimal bialgebra");
  const Algebra& a = b.algebra;
  const auto n = a.dim();
  const Algebra star = dual_product(b.coproduct);
  DiffDoubleBundle dd;
  dd.half = n;
  Algebra alg(doubled_labels(a.basis), AlgebraKind::CommAssoc, a.name.empty() ? "" : "D(" + a.name + ")");
  const Vector zero = zero_vector(n);
  // The dual actions here are plain transposes.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ei = unit_vector(n, i), ej = unit_vector(n, j);
      put(alg, i, j, n, a.basis_product(i, j), zero);
      put(alg, n + i, n + j, n, zero, star.basis_product(i, j));
      const Vector va = star.left(j).transpose().apply(ei);
      const Vector vb = a.left(i).transpose().apply(ej);
      put(alg, i, n + j, n, va, vb);
      put(alg, n + j, i, n, va, vb);
    }
  dd.r_tilde = canonical_r(n);
  dd.bundle.algebra = alg;
  dd.bundle.coproduct = coboundary_coproduct(alg, dd.r_tilde, CoboundaryFlavor::Infinitesimal);
  dd.bundle.d = block_diag(*b.d, b.theta->transpose());
  dd.bundle.theta = block_diag(*b.theta, b.d->transpose());
  return dd;
}

Report check_differential_factorizable(const Algebra& a, const Matrix& d, const Matrix& theta, const Tensor2& r) {
  const RMaps maps = build_r_maps(r);
  Report rep;
  const bool inv = mat_rank(maps.iso) == a.dim();
  rep.add("I invertible", inv, inv ? "" : "I is singular");
  const Matrix diff = maps.iso * theta.transpose() - d * maps.iso;
  rep.add("I theta* = d I", diff.is_zero(), diff.is_zero() ? "" : "the two composites differ");
  return rep;
}

std::pair<Vector, Vector> factorize_element(const Algebra& a, const Tensor2& r, const Vector& x) {
  if (x.size() != a.dim()) throw DimensionError("element has wrong size");
  const RMaps maps = build_r_maps(r);
  const auto inv = mat_inverse(maps.iso);
  if (!inv) throw DegeneracyError("I is singular; r is not factorizable");
  if (classify_r(a, r).verdict != Verdict::Factorizable) throw PreconditionError("r is not factorizable");
  const Vector y = inv->apply(x);
  Vector plus = maps.sharp.apply(y);
  Vector minus = maps.natural.apply(y);
  for (auto& v : minus) v = -v;
  return {plus, minus};
}

Algebra descendent_algebra(const Algebra& a, const StructureMap& p) {
  if (p.role != MapRole::RotaBaxter) throw PreconditionError("descendent algebra needs a Rota-Baxter operator");
  require_pass(check_structure_map(a, p), "not a Rota-Baxter operator");
  const auto n = a.dim();
  Algebra out(a.basis, a.kind, a.name.empty() ? "" : a.name + "_P");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ei = unit_vector(n, i), ej = unit_vector(n, j);
      Vector v = a.product(p(ei), ej);
      const Vector w = a.product(ei, p(ej));
      const Vector u = a.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) v[k] += w[k] + p.weight * u[k];
      out.set_product(i, j, v);
    }
  return out;
}

Report check_quadratic_rb(const QuadraticRB& q) {
  Report rep;
  rep.absorb(check_structure_map(q.algebra, q.p));
  rep.absorb(check_bilinear_form(q.algebra, q.form).as_report(), "form");
  const Matrix& g = q.form.matrix;
  const Matrix res = q.p.matrix.transpose() * g + g * q.p.matrix + q.p.weight * g;
  std::string witness;
  for (std::size_t i = 0; i < res.rows() && witness.empty(); ++i)
    for (std::size_t j = 0; j < res.cols(); ++j)
      if (res(i, j) != 0) {
        witness = "fails at (" + q.algebra.basis[i] + "," + q.algebra.basis[j] + "): residual " + res(i, j).get_str();
        break;
      }
  rep.add("B(Pa,b) + B(a,Pb) + weight B(a,b) = 0", witness.empty(), witness);
  return rep;
}

QuadraticRB rb_from_factorizable(const Algebra& a, const Tensor2& r, const Scalar& weight) {
  if (weight == 0) throw PreconditionError("weight must be nonzero");
  const RMaps maps = build_r_maps(r);
  const auto inv = mat_inverse(maps.iso);
  if (!inv) throw DegeneracyError("I is singular; r is not factorizable");
  if (classify_r(a, r).verdict != Verdict::Factorizable) throw PreconditionError("r is not factorizable");
  QuadraticRB q;
  q.algebra = a;
  q.p = StructureMap{"P", weight * (maps.natural * *inv), MapRole::RotaBaxter, weight};
  q.form = BilinearForm{"B_I", inv->transpose(), FormFlavor::NovikovInvariant};
  return q;
}

Tensor2 r_from_quadratic_rb(const QuadraticRB& q) {
  const Scalar& weight = q.p.weight;
  if (weight == 0) throw PreconditionError("weight must be nonzero");
  const auto iso = mat_inverse(q.form.matrix);
  if (!iso) throw DegeneracyError("form is degenerate");
  const auto n = q.algebra.dim();
  Matrix shifted = q.p.matrix + weight * Matrix::identity(n);
  const Matrix sharp = Scalar(1 / weight) * (shifted * iso->transpose());
  return sharp.transpose();
}

QuadraticRB twin_rb(const QuadraticRB& q) {
  QuadraticRB t = q;
  t.p.name = q.p.name + "'";
  t.p.matrix = -(q.p.weight * Matrix::identity(q.algebra.dim())) - q.p.matrix;
  return t;
}

std::string_view to_string(InductionGate g) {
  switch (g) {
    case InductionGate::HalfQ: return "q = -1/2";
    case InductionGate::ThetaDerivation: return "theta is a derivation";
    case InductionGate::SideConditions: return "theta acts as -d on coproduct and products";
    case InductionGate::None: return "none";
  }
  return "?";
}

InducedNovikov induce_novikov_bialgebra(const BialgebraBundle& b, const Scalar& q) {
  require_pass(check_bialgebra(b, BialgebraFlavor::DiffInfinitesimal), "not a differential infinitesimal bialgebra");
  const Algebra& a = b.algebra;
  const auto n = a.dim();
  const Matrix& d = *b.d;
  const Matrix& th = *b.theta;

  InducedNovikov out;
  if (q == Scalar(-1, 2)) {
    out.gate = InductionGate::HalfQ;
  } else if (check_structure_map(a, StructureMap{"theta", th, MapRole::Derivation, 0}).pass()) {
    out.gate = InductionGate::ThetaDerivation;
  } else {
    bool side = true;
    for (std::size_t i = 0; i < n && side; ++i) {
      const Tensor2 di = b.coproduct.of(i);
      side = di * th.transpose() == -(di * d.transpose());
      const Matrix l = a.left(i);
      side = side && l * th == -(l * d);
    }
    out.gate = side ? InductionGate::SideConditions : InductionGate::None;
  }

  const Matrix m = d + q * th;
  const Matrix k = th + q * d;
  Algebra alg(a.basis, AlgebraKind::LeftNovikov, a.name.empty() ? "" : a.name + "_q");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) alg.set_product(i, j, a.product(unit_vector(n, i), m.apply(unit_vector(n, j))));
  Coproduct cop(a.basis, CoalgebraFlavor::Novikov);
  for (std::size_t i = 0; i < n; ++i) cop.set(i, b.coproduct.of(i) * k.transpose());
  out.bundle = BialgebraBundle{alg, cop, std::nullopt, std::nullopt};
  out.verification = check_bialgebra(out.bundle, BialgebraFlavor::Novikov);
  return out;
}

Coproduct delta_omega(const Algebra& b, const BilinearForm& omega) {
  const auto n = b.dim();
  if (omega.matrix.rows() != n || omega.matrix.cols() != n) throw DimensionError("form size differs from algebra");
  const FormReport fr = check_bilinear_form(b, BilinearForm{omega.name, omega.matrix, FormFlavor::RightNovikovInvariant});
  if (!fr.nondegenerate) throw DegeneracyError("omega is degenerate");
  if (!fr.pass()) throw PreconditionError("omega is not a symmetric invariant form: " + fr.witness);
  const Matrix f = dual_basis_wrt_form(omega.matrix);
  std::vector<Vector> duals(n);
  for (std::size_t j = 0; j < n; ++j) duals[j] = f.apply(unit_vector(n, j));
  Coproduct cop(b.basis, CoalgebraFlavor::RightNovikov, b.name.empty() ? "" : "Delta_" + omega.name);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t qq = 0; qq < n; ++qq) {
      const Vector prod = b.product(duals[p], duals[qq]);
      for (std::size_t s = 0; s < n; ++s) cop.d(s, p, qq) = omega(unit_vector(n, s), prod);
    }
  return cop;
}

std::vector<std::string> product_labels(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x + "." + y);
  return out;
}

Algebra induced_lie_algebra(const Algebra& a, const Algebra& b) {
  const auto n = a.dim(), m = b.dim();
  Algebra g(product_labels(a.basis, b.basis), AlgebraKind::Lie);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < m; ++l)
          for (std::size_t p = 0; p < n; ++p) {
            const Scalar& ik = a.c(i, k, p);
            const Scalar& ki = a.c(k, i, p);
            if (ik == 0 && ki == 0) continue;
            for (std::size_t s = 0; s < m; ++s)
              g.c(i * m + j, k * m + l, p * m + s) += ik * b.c(j, l, s) - ki * b.c(l, j, s);
          }
  return g;
}

Coproduct induced_cobracket(const Coproduct& delta, const Coproduct& delta_b) {
  const auto n = delta.dim(), m = delta_b.dim();
  Coproduct cop(product_labels(delta.basis, delta_b.basis), CoalgebraFlavor::Lie);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Tensor2 t(n * m, n * m);
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          if (delta.d(i, p, q) == 0) continue;
          for (std::size_t s = 0; s < m; ++s)
            for (std::size_t u = 0; u < m; ++u)
              if (delta_b.d(j, s, u) != 0) t(p * m + s, q * m + u) += delta.d(i, p, q) * delta_b.d(j, s, u);
        }
      cop.set(i * m + j, t - t.transpose());
    }
  return cop;
}

LieBundle induce_lie_bialgebra(const BialgebraBundle& nb, const Algebra& b, const BilinearForm& omega) {
  require_pass(check_bialgebra(nb, BialgebraFlavor::Novikov), "not a Novikov bialgebra");
  require_pass(check_identity(b, IdentityKind::RightNovikov), "not a right Novikov algebra");
  LieBundle lb;
  lb.n = nb.algebra.dim();
  lb.m = b.dim();
  lb.bundle.algebra = induced_lie_algebra(nb.algebra, b);
  lb.bundle.coproduct = induced_cobracket(nb.coproduct, delta_omega(b, omega));
  return lb;
}

Tensor2 lift_r_hat(const Tensor2& r, const BilinearForm& omega) {
  const Matrix f = dual_basis_wrt_form(omega.matrix);
  const auto n = r.rows(), m = f.rows();
  Tensor2 out(n * m, n * m);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (r(a, b) == 0) continue;
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k) out(a * m + j, b * m + k) = r(a, b) * f(k, j);
    }
  return out;
}

}  // namespace nova
