#include "nova/yangbaxter.hpp"

#include <limits>

namespace nova {

std::string_view to_string(YbeFlavor f) {
  switch (f) {
    case YbeFlavor::Nybe: return "nybe";
    case YbeFlavor::Aybe: return "aybe";
    case YbeFlavor::Cybe: return "cybe";
  }
  return "?";
}

YbeFlavor parse_ybe_flavor(std::string_view s) {
  for (auto f : {YbeFlavor::Nybe, YbeFlavor::Aybe, YbeFlavor::Cybe})
    if (to_string(f) == s) return f;
  throw ParseError("unknown Yang-Baxter flavor '" + std::string(s) + "'");
}

std::string_view to_string(InvarianceFlavor f) {
  switch (f) {
    case InvarianceFlavor::Phi: return "phi";
    case InvarianceFlavor::U: return "u";
    case InvarianceFlavor::Ad: return "ad";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::None: return "none";
    case Verdict::Triangular: return "triangular";
    case Verdict::QuasiTriangular: return "quasi-triangular";
    case Verdict::Factorizable: return "factorizable";
  }
  return "?";
}

void require_kind(const Algebra& a, AlgebraKind expected, std::string_view what) {
  if (a.kind != expected && a.kind != AlgebraKind::Unchecked)
    throw KindMismatch(std::string(what) + " needs a " + std::string(to_string(expected)) + " algebra, got " +
                       std::string(to_string(a.kind)));
}

namespace {

AlgebraKind kind_for(YbeFlavor f) {
  switch (f) {
    case YbeFlavor::Nybe: return AlgebraKind::LeftNovikov;
    case YbeFlavor::Aybe: return AlgebraKind::CommAssoc;
    case YbeFlavor::Cybe: return AlgebraKind::Lie;
  }
  return AlgebraKind::Unchecked;
}

// Sums over x_i (x) y_i = R(a, c) e_a (x) e_c and x_j (x) y_j = R(b, d) e_b (x) e_d.
template <class T>
BasicTensor3<T> residual_impl(const Algebra& alg, const BasicMatrix<T>& r, YbeFlavor flavor) {
  const auto n = alg.dim();
  if (r.rows() != n || r.cols() != n) throw DimensionError("r-matrix size differs from algebra dimension");
  require_kind(alg, kind_for(flavor), to_string(flavor));
  BasicTensor3<T> out(n);
  const T zero(0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      if (r(a, c) == zero) continue;
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t d = 0; d < n; ++d) {
          if (r(b, d) == zero) continue;
          const T w = r(a, c) * r(b, d);
          for (std::size_t k = 0; k < n; ++k) {
            const Scalar& ycyd = alg.c(c, d, k);  // y_i y_j
            const Scalar& ycxb = alg.c(c, b, k);  // y_i x_j
            const Scalar& xayd = alg.c(a, d, k);  // x_i y_j
            const Scalar& xaxb = alg.c(a, b, k);  // x_i x_j
            switch (flavor) {
              case YbeFlavor::Nybe:
                if (ycyd != 0) out(a, b, k) += w * T(ycyd);
                if (ycxb != 0) out(a, k, d) += w * T(ycxb);
                if (xayd != 0) out(b, k, c) += w * T(xayd);
                if (xaxb != 0) out(k, d, c) += w * T(xaxb);
                break;
              case YbeFlavor::Aybe:
                if (xaxb != 0) out(k, d, c) += w * T(xaxb);
                if (ycyd != 0) out(a, b, k) += w * T(ycyd);
                if (ycxb != 0) out(a, k, d) -= w * T(ycxb);
                break;
              case YbeFlavor::Cybe:
                if (xaxb != 0) out(k, c, d) += w * T(xaxb);
                if (ycyd != 0) out(a, b, k) += w * T(ycyd);
                if (ycxb != 0) out(a, k, d) += w * T(ycxb);
                break;
            }
          }
        }
    }
  return out;
}

}  // namespace

Tensor3 ybe_residual(const Algebra& a, const Tensor2& r, YbeFlavor flavor) { return residual_impl(a, r, flavor); }

PolyTensor3 parametric_residual(const Algebra& a, const PolyMatrix& r, YbeFlavor flavor) {
  return residual_impl(a, r, flavor);
}

Report admissible_aybe_check(const Algebra& a, const Matrix& d, const Matrix& theta, const Tensor2& r) {
  require_kind(a, AlgebraKind::CommAssoc, "admissible AYBE");
  const StructureMap dmap{"d", d, MapRole::Derivation, 0};
  const StructureMap tmap{"theta", theta, MapRole::AdmissibleTheta, 0};
  if (const Report adm = check_structure_map(a, tmap, &dmap); !adm.pass())
    throw PreconditionError("theta is not admissible: " + adm.first_failure()->witness);

  Report rep;
  const Tensor3 res = ybe_residual(a, r, YbeFlavor::Aybe);
  rep.add("aybe", res.is_zero(), res.is_zero() ? "" : "A_r = " + format_tensor3(res, a.basis));
  const Tensor2 s1 = d * r - r * theta.transpose();
  rep.add("(d(x)id - id(x)theta) r = 0", s1.is_zero(), s1.is_zero() ? "" : "residual " + format_tensor2(s1, a.basis));
  const Tensor2 s2 = r * d.transpose() - theta * r;
  rep.add("(id(x)d - theta(x)id) r = 0", s2.is_zero(), s2.is_zero() ? "" : "residual " + format_tensor2(s2, a.basis));
  return rep;
}

Tensor2 invariance_action(const Algebra& a, const Tensor2& t, std::size_t i, InvarianceFlavor flavor) {
  const Matrix l = a.left(i);
  switch (flavor) {
    case InvarianceFlavor::Phi: return l * t + t * (l + a.right(i)).transpose();
    case InvarianceFlavor::U: return t * l.transpose() - l * t;
    case InvarianceFlavor::Ad: return t * l.transpose() + l * t;
  }
  return t;
}

Report invariance_check(const Algebra& a, const Tensor2& t, InvarianceFlavor flavor) {
  const auto n = a.dim();
  if (t.rows() != n || t.cols() != n) throw DimensionError("tensor size differs from algebra dimension");
  switch (flavor) {
    case InvarianceFlavor::Phi: require_kind(a, AlgebraKind::LeftNovikov, "phi-invariance"); break;
    case InvarianceFlavor::U: require_kind(a, AlgebraKind::CommAssoc, "u-invariance"); break;
    case InvarianceFlavor::Ad: require_kind(a, AlgebraKind::Lie, "ad-invariance"); break;
  }
  const std::string name = std::string(to_string(flavor)) + "-invariant";
  for (std::size_t i = 0; i < n; ++i) {
    const Tensor2 v = invariance_action(a, t, i, flavor);
    if (!v.is_zero())
      return Report(name, false, "action of " + a.basis[i] + " gives " + format_tensor2(v, a.basis));
  }
  return Report(name, true);
}

Report invariance_via_iso(const Algebra& a, const Tensor2& r) {
  const Matrix iso = r + r.transpose();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Matrix l = a.left(i);
    const Matrix lhs = iso * (-l.transpose());
    const Matrix rhs = (l + a.right(i)) * iso;
    if (!(lhs == rhs)) return Report("I l*(a) = (L+R)(a) I", false, "fails at " + a.basis[i]);
  }
  return Report("I l*(a) = (L+R)(a) I", true);
}

RMaps build_r_maps(const Tensor2& r) {
  if (!r.square()) throw DimensionError("r-matrix must be square");
  RMaps m{r.transpose(), -r, r + r.transpose()};
  return m;
}

Coproduct coboundary_coproduct(const Algebra& a, const Tensor2& r, CoboundaryFlavor flavor) {
  const auto n = a.dim();
  if (r.rows() != n || r.cols() != n) throw DimensionError("r-matrix size differs from algebra dimension");
  CoalgebraFlavor cf{};
  switch (flavor) {
    case CoboundaryFlavor::Novikov:
      require_kind(a, AlgebraKind::LeftNovikov, "novikov coboundary");
      cf = CoalgebraFlavor::Novikov;
      break;
    case CoboundaryFlavor::Infinitesimal:
      require_kind(a, AlgebraKind::CommAssoc, "infinitesimal coboundary");
      cf = CoalgebraFlavor::CoassocCocomm;
      break;
    case CoboundaryFlavor::Lie:
      require_kind(a, AlgebraKind::Lie, "lie coboundary");
      cf = CoalgebraFlavor::Lie;
      break;
  }
  Coproduct c(a.basis, cf);
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix l = a.left(i);
    switch (flavor) {
      case CoboundaryFlavor::Novikov: c.set(i, -(l * r + r * (l + a.right(i)).transpose())); break;
      case CoboundaryFlavor::Infinitesimal: c.set(i, r * l.transpose() - l * r); break;
      case CoboundaryFlavor::Lie: c.set(i, r * l.transpose() + l * r); break;
    }
  }
  return c;
}

Algebra a_star_product_from_r(const Algebra& a, const Tensor2& r) {
  require_kind(a, AlgebraKind::LeftNovikov, "induced dual product");
  const auto n = a.dim();
  if (r.rows() != n || r.cols() != n) throw DimensionError("r-matrix size differs from algebra dimension");
  const RMaps maps = build_r_maps(r);
  Algebra out(dual_labels(a.basis), AlgebraKind::LeftNovikov);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector sharp_j = maps.sharp.apply(unit_vector(n, j));
    // (l* + r*)(x) = -(L + R)(x)^T
    const Matrix lr_star = -(a.left(sharp_j) + a.right(sharp_j)).transpose();
    for (std::size_t k = 0; k < n; ++k) {
      const Vector nat_k = maps.natural.apply(unit_vector(n, k));
      const Matrix r_star = -a.right(nat_k).transpose();
      const Vector v = lr_star.apply(unit_vector(n, k));
      const Vector w = r_star.apply(unit_vector(n, j));
      Vector prod(n);
      for (std::size_t i = 0; i < n; ++i) prod[i] = v[i] - w[i];
      out.set_product(j, k, prod);
    }
  }
  return out;
}

Report Classification::as_report() const {
  auto yes_no = [](bool b) { return b ? std::string("yes") : std::string("no"); };
  Report r;
  r.add("nybe", is_solution, is_solution ? "" : "N_r is nonzero");
  r.add("symmetric part invariant", sym_part_invariant, sym_part_invariant ? "" : "r + tau(r) is not invariant");
  // Informational flags; they do not affect the verdict's validity.
  r.add("skew-symmetric: " + yes_no(is_skew), true);
  r.add("I invertible: " + yes_no(iso_invertible), true);
  r.add("r# homomorphism: " + yes_no(sharp_hom), true);
  r.add("r_nat homomorphism: " + yes_no(natural_hom), true);
  return r;
}

Classification classify_r(const Algebra& a, const Tensor2& r) {
  require_kind(a, AlgebraKind::LeftNovikov, "classification");
  Classification c;
  c.residual = ybe_residual(a, r, YbeFlavor::Nybe);
  c.is_solution = c.residual.is_zero();
  const RMaps maps = build_r_maps(r);
  c.is_skew = maps.iso.is_zero();
  c.sym_part_invariant = invariance_check(a, maps.iso, InvarianceFlavor::Phi).pass();
  c.iso_invertible = mat_rank(maps.iso) == a.dim();
  const Algebra star = a_star_product_from_r(a, r);
  c.sharp_hom = check_homomorphism(star, a, maps.sharp, "r#").pass();
  c.natural_hom = check_homomorphism(star, a, maps.natural, "r_nat").pass();
  if (!c.is_solution || !c.sym_part_invariant) c.verdict = Verdict::None;
  else if (c.is_skew) c.verdict = Verdict::Triangular;
  else if (c.iso_invertible) c.verdict = Verdict::Factorizable;
  else c.verdict = Verdict::QuasiTriangular;
  return c;
}

std::vector<Tensor2> grid_search_r(const Algebra& a, const std::vector<std::pair<std::size_t, std::size_t>>& support,
                                   const std::vector<Scalar>& coeffs,
                                   const std::function<void(const Tensor2&)>& on_hit) {
  const auto n = a.dim();
  for (const auto& [i, j] : support)
    if (i >= n || j >= n) throw DimensionError("support entry outside the basis");
  unsigned long long count = 1;
  for (std::size_t s = 0; s < support.size(); ++s) {
    if (!coeffs.empty() && count > std::numeric_limits<unsigned long long>::max() / coeffs.size())
      count = std::numeric_limits<unsigned long long>::max();
    else
      count *= coeffs.size();
  }
  if (support.size() > kMaxSearchSupport || count > kMaxSearchPoints)
    throw BudgetExceeded("grid has " + std::to_string(count) + " points over a support of " +
                             std::to_string(support.size()) + " entries; limits are " +
                             std::to_string(kMaxSearchPoints) + " points and " +
                             std::to_string(kMaxSearchSupport) + " entries",
                         count);
  std::vector<Tensor2> hits;
  if (coeffs.empty() && !support.empty()) return hits;
  std::vector<std::size_t> idx(support.size(), 0);
  while (true) {
    Tensor2 r(n, n);
    for (std::size_t s = 0; s < support.size(); ++s) r(support[s].first, support[s].second) += coeffs[idx[s]];
    if (ybe_residual(a, r, YbeFlavor::Nybe).is_zero()) {
      if (on_hit) on_hit(r);
      hits.push_back(std::move(r));
    }
    std::size_t s = support.size();
    while (s > 0 && ++idx[s - 1] == coeffs.size()) idx[--s] = 0;
    if (s == 0) break;
  }
  return hits;
}

}  // namespace nova
