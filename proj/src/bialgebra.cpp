#include "nova/bialgebra.hpp"

#include <array>
#include <cctype>
#include <functional>

namespace nova {

std::string_view to_string(CoalgebraFlavor f) {
  switch (f) {
    case CoalgebraFlavor::Novikov: return "novikov";
    case CoalgebraFlavor::CoassocCocomm: return "coassoc-cocomm";
    case CoalgebraFlavor::RightNovikov: return "right-novikov";
    case CoalgebraFlavor::Lie: return "lie";
    case CoalgebraFlavor::Unchecked: return "unchecked";
  }
  return "?";
}

CoalgebraFlavor parse_coalgebra_flavor(std::string_view s) {
  for (auto f : {CoalgebraFlavor::Novikov, CoalgebraFlavor::CoassocCocomm, CoalgebraFlavor::RightNovikov,
                 CoalgebraFlavor::Lie, CoalgebraFlavor::Unchecked})
    if (to_string(f) == s) return f;
  throw ParseError("unknown coalgebra flavor '" + std::string(s) + "'");
}

AlgebraKind dual_kind(CoalgebraFlavor f) {
  switch (f) {
    case CoalgebraFlavor::Novikov: return AlgebraKind::LeftNovikov;
    case CoalgebraFlavor::CoassocCocomm: return AlgebraKind::CommAssoc;
    case CoalgebraFlavor::RightNovikov: return AlgebraKind::RightNovikov;
    case CoalgebraFlavor::Lie: return AlgebraKind::Lie;
    case CoalgebraFlavor::Unchecked: return AlgebraKind::Unchecked;
  }
  return AlgebraKind::Unchecked;
}

std::string_view to_string(BialgebraFlavor f) {
  switch (f) {
    case BialgebraFlavor::Novikov: return "novikov";
    case BialgebraFlavor::Infinitesimal: return "infinitesimal";
    case BialgebraFlavor::Lie: return "lie";
    case BialgebraFlavor::DiffInfinitesimal: return "diff-infinitesimal";
  }
  return "?";
}

BialgebraFlavor parse_bialgebra_flavor(std::string_view s) {
  for (auto f : {BialgebraFlavor::Novikov, BialgebraFlavor::Infinitesimal, BialgebraFlavor::Lie,
                 BialgebraFlavor::DiffInfinitesimal})
    if (to_string(f) == s) return f;
  throw ParseError("unknown bialgebra flavor '" + std::string(s) + "'");
}

Coproduct::Coproduct(std::vector<std::string> labels, CoalgebraFlavor f, std::string nm)
    : name(std::move(nm)), basis(std::move(labels)), d(basis.size()), flavor(f) {}

Tensor2 Coproduct::of(std::span<const Scalar> x) const {
  const auto n = dim();
  if (x.size() != n) throw DimensionError("coproduct: element has wrong size");
  Tensor2 t(n, n);
  for (std::size_t i = 0; i < n; ++i)
    if (x[i] != 0) t += x[i] * of(i);
  return t;
}

void Coproduct::set(std::size_t i, const Tensor2& value) {
  const auto n = dim();
  if (value.rows() != n || value.cols() != n) throw DimensionError("coproduct: value has wrong size");
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) d(i, j, k) = value(j, k);
}

std::vector<std::string> dual_labels(const std::vector<std::string>& basis) {
  std::vector<std::string> out;
  out.reserve(basis.size());
  for (const auto& b : basis) {
    bool indexed = b.size() > 1 && b[0] == 'e';
    for (std::size_t i = 1; indexed && i < b.size(); ++i) indexed = std::isdigit(static_cast<unsigned char>(b[i]));
    out.push_back(indexed ? "f" + b.substr(1) : b + "*");
  }
  return out;
}

Algebra dual_product(const Coproduct& cop) {
  const auto n = cop.dim();
  Algebra a(dual_labels(cop.basis), dual_kind(cop.flavor), cop.name.empty() ? "" : cop.name + "*");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) a.c(j, k, i) = cop.d(i, j, k);
  return a;
}

namespace {

// (delta (x) id) delta (e_i)
Tensor3 left_iterate(const Coproduct& c, std::size_t i) {
  const auto n = c.dim();
  Tensor3 t(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar& w = c.d(i, j, k);
      if (w == 0) continue;
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) t(p, q, k) += w * c.d(j, p, q);
    }
  return t;
}

// (id (x) delta) outer(e_i); outer defaults to delta itself
Tensor3 right_iterate(const Coproduct& c, std::size_t i, const Tensor3* outer = nullptr) {
  const auto n = c.dim();
  const Tensor3& first = outer ? *outer : c.d;
  Tensor3 t(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar& w = first(i, j, k);
      if (w == 0) continue;
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) t(j, p, q) += w * c.d(k, p, q);
    }
  return t;
}

Report sweep_basis(const Coproduct& c, std::string_view what, const std::function<Tensor3(std::size_t)>& residual) {
  for (std::size_t i = 0; i < c.dim(); ++i) {
    const Tensor3 r = residual(i);
    if (!r.is_zero())
      return Report(std::string(what), false,
                    std::string(what) + " fails at " + c.basis[i] + ": residual " + format_tensor3(r, c.basis));
  }
  return Report(std::string(what), true);
}

Report sweep_basis2(const std::vector<std::string>& basis, std::string_view what,
                    const std::function<Tensor2(std::size_t)>& residual) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Tensor2 r = residual(i);
    if (!r.is_zero())
      return Report(std::string(what), false,
                    std::string(what) + " fails at " + basis[i] + ": residual " + format_tensor2(r, basis));
  }
  return Report(std::string(what), true);
}

Report sweep_pairs(const Algebra& a, std::string_view what,
                   const std::function<Tensor2(std::size_t, std::size_t)>& residual) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Tensor2 r = residual(i, j);
      if (!r.is_zero())
        return Report(std::string(what), false,
                      std::string(what) + " fails at (" + a.basis[i] + "," + a.basis[j] +
                          "): residual " + format_tensor2(r, a.basis));
    }
  return Report(std::string(what), true);
}

}  // namespace

Report check_coalgebra(const Coproduct& c, CoalgebraFlavor flavor) {
  Report rep;
  const Tensor3 tau_d = swap23(c.d);
  switch (flavor) {
    case CoalgebraFlavor::Novikov:
      rep.absorb(sweep_basis(c, "novikov coalgebra: left-commutativity", [&](std::size_t i) {
        // (tau (x) id)(id (x) delta) tau delta = (delta (x) id) delta
        return swap12(right_iterate(c, i, &tau_d)) - left_iterate(c, i);
      }));
      rep.absorb(sweep_basis(c, "novikov coalgebra: symmetry", [&](std::size_t i) {
        const Tensor3 r = right_iterate(c, i);
        const Tensor3 l = left_iterate(c, i);
        return (r - swap12(r)) - (l - swap12(l));
      }));
      break;
    case CoalgebraFlavor::RightNovikov:
      rep.absorb(sweep_basis(c, "right-novikov coalgebra: left-commutativity", [&](std::size_t i) {
        const Tensor3 r = right_iterate(c, i);
        return r - swap12(r);
      }));
      rep.absorb(sweep_basis(c, "right-novikov coalgebra: right-symmetry", [&](std::size_t i) {
        const Tensor3 r = right_iterate(c, i);
        const Tensor3 l = left_iterate(c, i);
        return (l - swap23(l)) - (r - swap23(r));
      }));
      break;
    case CoalgebraFlavor::Lie:
      rep.absorb(sweep_basis2(c.basis, "lie coalgebra: antisymmetry", [&](std::size_t i) {
        return c.of(i) + c.of(i).transpose();
      }));
      rep.absorb(sweep_basis(c, "lie coalgebra: co-jacobi", [&](std::size_t i) {
        const Tensor3 r = right_iterate(c, i);
        return (r - swap12(r)) - left_iterate(c, i);
      }));
      break;
    case CoalgebraFlavor::CoassocCocomm:
      rep.absorb(sweep_basis2(c.basis, "cocommutative", [&](std::size_t i) {
        return c.of(i) - c.of(i).transpose();
      }));
      rep.absorb(sweep_basis(c, "coassociative", [&](std::size_t i) {
        return left_iterate(c, i) - right_iterate(c, i);
      }));
      break;
    case CoalgebraFlavor::Unchecked:
      rep.add("unchecked", true);
      break;
  }
  return rep;
}

namespace {

Report compatibility_novikov(const Algebra& a, const Coproduct& c) {
  const auto n = a.dim();
  std::vector<Matrix> L(n), R(n), LR(n);
  std::vector<Tensor2> D(n), S(n);
  for (std::size_t i = 0; i < n; ++i) {
    L[i] = a.left(i);
    R[i] = a.right(i);
    LR[i] = L[i] + R[i];
    D[i] = c.of(i);
    S[i] = D[i] + D[i].transpose();
  }
  Report rep;
  rep.absorb(sweep_pairs(a, "coproduct of a product", [&](std::size_t i, std::size_t j) {
    return c.of(a.basis_product(i, j)) - (R[j] * D[i] + S[j] * LR[i].transpose());
  }));
  // ((L+R)(a1) (x) id) delta(a2) - (id (x) (L+R)(a1)) tau delta(a2), symmetric in a1, a2
  auto e2 = [&](std::size_t i, std::size_t j) { return LR[i] * D[j] - D[j].transpose() * LR[i].transpose(); };
  rep.absorb(sweep_pairs(a, "symmetric (L+R) condition", [&](std::size_t i, std::size_t j) {
    return e2(i, j) - e2(j, i);
  }));
  // (id (x) R(a1) - R(a1) (x) id)(delta(a2) + tau delta(a2)), symmetric in a1, a2
  auto e3 = [&](std::size_t i, std::size_t j) { return S[j] * R[i].transpose() - R[i] * S[j]; };
  rep.absorb(sweep_pairs(a, "symmetric R condition", [&](std::size_t i, std::size_t j) {
    return e3(i, j) - e3(j, i);
  }));
  return rep;
}

Report compatibility_infinitesimal(const Algebra& a, const Coproduct& c) {
  const auto n = a.dim();
  std::vector<Matrix> U(n);
  for (std::size_t i = 0; i < n; ++i) U[i] = a.left(i);
  return sweep_pairs(a, "coproduct of a product", [&](std::size_t i, std::size_t j) {
    return c.of(a.basis_product(i, j)) - (c.of(j) * U[i].transpose() + U[j] * c.of(i));
  });
}

Report compatibility_lie(const Algebra& a, const Coproduct& c) {
  const auto n = a.dim();
  std::vector<Matrix> ad(n);
  for (std::size_t i = 0; i < n; ++i) ad[i] = a.left(i);
  auto act = [&](std::size_t g, const Tensor2& t) { return ad[g] * t + t * ad[g].transpose(); };
  return sweep_pairs(a, "coproduct of a bracket", [&](std::size_t i, std::size_t j) {
    return c.of(a.basis_product(i, j)) - (act(i, c.of(j)) - act(j, c.of(i)));
  });
}

Report differential_conditions(const Algebra& a, const Coproduct& c, const Matrix& dd, const Matrix& th) {
  const auto n = a.dim();
  if (dd.rows() != n || dd.cols() != n || th.rows() != n || th.cols() != n)
    throw DimensionError("differential maps have wrong size");
  Report rep;
  const StructureMap dmap{"d", dd, MapRole::Derivation, 0};
  const StructureMap tmap{"theta", th, MapRole::AdmissibleTheta, 0};
  rep.absorb(check_structure_map(a, dmap));
  rep.absorb(check_structure_map(a, tmap, &dmap));
  rep.absorb(sweep_basis2(c.basis, "theta coderivation", [&](std::size_t i) {
    const Tensor2 di = c.of(i);
    return c.of(th.apply(unit_vector(n, i))) - (di * th.transpose() + th * di);
  }));
  rep.absorb(sweep_basis2(c.basis, "admissible codifferential", [&](std::size_t i) {
    const Tensor2 di = c.of(i);
    return (dd * di - di * th.transpose()) - c.of(dd.apply(unit_vector(n, i)));
  }));
  return rep;
}

}  // namespace

Report check_bialgebra(const BialgebraBundle& b, BialgebraFlavor flavor) {
  const Algebra& a = b.algebra;
  const Coproduct& c = b.coproduct;
  if (a.dim() != c.dim()) throw DimensionError("bialgebra: algebra and coproduct dimensions differ");
  if (flavor == BialgebraFlavor::DiffInfinitesimal && (!b.d || !b.theta))
    throw PreconditionError("differential bialgebra check needs both d and theta");

  IdentityKind id{};
  CoalgebraFlavor cf{};
  switch (flavor) {
    case BialgebraFlavor::Novikov: id = IdentityKind::LeftNovikov; cf = CoalgebraFlavor::Novikov; break;
    case BialgebraFlavor::Lie: id = IdentityKind::Lie; cf = CoalgebraFlavor::Lie; break;
    case BialgebraFlavor::Infinitesimal:
    case BialgebraFlavor::DiffInfinitesimal: id = IdentityKind::CommAssoc; cf = CoalgebraFlavor::CoassocCocomm; break;
  }

  Report rep;
  rep.absorb(check_identity(a, id), "algebra");
  rep.absorb(check_coalgebra(c, cf), "coalgebra");
  switch (flavor) {
    case BialgebraFlavor::Novikov: rep.absorb(compatibility_novikov(a, c), "compatibility"); break;
    case BialgebraFlavor::Lie: rep.absorb(compatibility_lie(a, c), "compatibility"); break;
    case BialgebraFlavor::Infinitesimal: rep.absorb(compatibility_infinitesimal(a, c), "compatibility"); break;
    case BialgebraFlavor::DiffInfinitesimal:
      rep.absorb(compatibility_infinitesimal(a, c), "compatibility");
      rep.absorb(differential_conditions(a, c, *b.d, *b.theta), "differential");
      break;
  }
  return rep;
}

}  // namespace nova
