#include "nova/algebra.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <utility>

namespace nova {

namespace {

template <class Enum, std::size_t N>
Enum parse_enum(std::string_view s, const std::array<std::pair<std::string_view, Enum>, N>& table,
                std::string_view what) {
  for (const auto& [name, value] : table)
    if (name == s) return value;
  throw ParseError("unknown " + std::string(what) + " '" + std::string(s) + "'");
}

template <class Enum, std::size_t N>
std::string_view enum_name(Enum e, const std::array<std::pair<std::string_view, Enum>, N>& table) {
  for (const auto& [name, value] : table)
    if (value == e) return name;
  return "?";
}

constexpr std::array<std::pair<std::string_view, AlgebraKind>, 6> kAlgebraKinds{{
    {"left-novikov", AlgebraKind::LeftNovikov},
    {"right-novikov", AlgebraKind::RightNovikov},
    {"comm-assoc", AlgebraKind::CommAssoc},
    {"lie", AlgebraKind::Lie},
    {"pre-lie", AlgebraKind::PreLie},
    {"unchecked", AlgebraKind::Unchecked},
}};

constexpr std::array<std::pair<std::string_view, IdentityKind>, 6> kIdentityKinds{{
    {"left-novikov", IdentityKind::LeftNovikov},
    {"right-novikov", IdentityKind::RightNovikov},
    {"pre-lie", IdentityKind::PreLie},
    {"comm-assoc", IdentityKind::CommAssoc},
    {"lie", IdentityKind::Lie},
    {"commutative", IdentityKind::Commutative},
}};

constexpr std::array<std::pair<std::string_view, MapRole>, 5> kMapRoles{{
    {"derivation", MapRole::Derivation},
    {"admissible-theta", MapRole::AdmissibleTheta},
    {"rota-baxter", MapRole::RotaBaxter},
    {"homomorphism", MapRole::Homomorphism},
    {"generic", MapRole::Generic},
}};

constexpr std::array<std::pair<std::string_view, FormFlavor>, 3> kFormFlavors{{
    {"novikov-invariant", FormFlavor::NovikovInvariant},
    {"right-novikov-invariant", FormFlavor::RightNovikovInvariant},
    {"plain", FormFlavor::Plain},
}};

Vector add(Vector a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
Vector sub(Vector a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
Vector scale(const Scalar& s, Vector a) {
  for (auto& x : a) x *= s;
  return a;
}

std::string tuple_label(const Algebra& a, std::initializer_list<std::size_t> idx) {
  std::string s = "(";
  bool first = true;
  for (auto i : idx) {
    if (!first) s += ",";
    s += a.basis[i];
    first = false;
  }
  return s + ")";
}

std::string residual_witness(std::string_view what, const Algebra& a, std::initializer_list<std::size_t> idx,
                             const Vector& residual) {
  return std::string(what) + " fails at " + tuple_label(a, idx) + ": residual " + format_vector(residual, a.basis);
}

// Operator l(x) = sum_k x_k maps[k].
Matrix combine(const std::vector<Matrix>& maps, std::span<const Scalar> x, std::size_t m) {
  Matrix out(m, m);
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k] != 0) out += x[k] * maps[k];
  return out;
}

}  // namespace

std::string_view to_string(AlgebraKind k) { return enum_name(k, kAlgebraKinds); }
AlgebraKind parse_algebra_kind(std::string_view s) { return parse_enum(s, kAlgebraKinds, "algebra class"); }
std::string_view to_string(IdentityKind k) { return enum_name(k, kIdentityKinds); }
IdentityKind parse_identity_kind(std::string_view s) { return parse_enum(s, kIdentityKinds, "identity"); }
std::string_view to_string(MapRole r) { return enum_name(r, kMapRoles); }
MapRole parse_map_role(std::string_view s) { return parse_enum(s, kMapRoles, "map role"); }
std::string_view to_string(FormFlavor f) { return enum_name(f, kFormFlavors); }
FormFlavor parse_form_flavor(std::string_view s) { return parse_enum(s, kFormFlavors, "form flavor"); }

std::optional<IdentityKind> identity_for(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::LeftNovikov: return IdentityKind::LeftNovikov;
    case AlgebraKind::RightNovikov: return IdentityKind::RightNovikov;
    case AlgebraKind::CommAssoc: return IdentityKind::CommAssoc;
    case AlgebraKind::Lie: return IdentityKind::Lie;
    case AlgebraKind::PreLie: return IdentityKind::PreLie;
    case AlgebraKind::Unchecked: return std::nullopt;
  }
  return std::nullopt;
}

std::vector<std::string> default_basis(std::size_t n, std::string_view prefix) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(prefix) + std::to_string(i + 1));
  return out;
}

Algebra::Algebra(std::vector<std::string> labels, AlgebraKind k, std::string nm)
    : name(std::move(nm)), basis(std::move(labels)), c(basis.size()), kind(k) {}

void Algebra::set_product(std::size_t i, std::size_t j, const Vector& value) {
  if (value.size() != dim()) throw DimensionError("set_product: value has wrong size");
  for (std::size_t k = 0; k < dim(); ++k) c(i, j, k) = value[k];
}

Vector Algebra::basis_product(std::size_t i, std::size_t j) const {
  Vector v(dim());
  for (std::size_t k = 0; k < dim(); ++k) v[k] = c(i, j, k);
  return v;
}

Vector Algebra::product(std::span<const Scalar> a, std::span<const Scalar> b) const {
  const auto n = dim();
  if (a.size() != n || b.size() != n) throw DimensionError("product: element has wrong size");
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      const Scalar w = a[i] * b[j];
      for (std::size_t k = 0; k < n; ++k)
        if (c(i, j, k) != 0) v[k] += w * c(i, j, k);
    }
  }
  return v;
}

Matrix Algebra::left(std::span<const Scalar> a) const {
  const auto n = dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector col = product(a, unit_vector(n, j));
    for (std::size_t k = 0; k < n; ++k) m(k, j) = col[k];
  }
  return m;
}

Matrix Algebra::right(std::span<const Scalar> a) const {
  const auto n = dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector col = product(unit_vector(n, j), a);
    for (std::size_t k = 0; k < n; ++k) m(k, j) = col[k];
  }
  return m;
}

Matrix Algebra::left(std::size_t i) const { return left(unit_vector(dim(), i)); }
Matrix Algebra::right(std::size_t i) const { return right(unit_vector(dim(), i)); }

std::size_t Algebra::index_of(std::string_view label) const {
  const auto it = std::find(basis.begin(), basis.end(), label);
  if (it == basis.end()) throw DimensionError("unknown basis label '" + std::string(label) + "'");
  return static_cast<std::size_t>(it - basis.begin());
}

Algebra zero_algebra(std::size_t n, AlgebraKind kind, std::string_view prefix) {
  return Algebra(default_basis(n, prefix), kind);
}

namespace {

// Runs `residual(i, j, k)` over all triples, returning the first nonzero one.
Report sweep3(const Algebra& a, std::string_view what,
              const std::function<Vector(std::size_t, std::size_t, std::size_t)>& residual) {
  const auto n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector r = residual(i, j, k);
        if (!is_zero(r)) return Report(std::string(what), false, residual_witness(what, a, {i, j, k}, r));
      }
  return Report(std::string(what), true);
}

Report sweep2(const Algebra& a, std::string_view what, const std::function<Vector(std::size_t, std::size_t)>& residual) {
  const auto n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector r = residual(i, j);
      if (!is_zero(r)) return Report(std::string(what), false, residual_witness(what, a, {i, j}, r));
    }
  return Report(std::string(what), true);
}

// Collapses several sub-reports into one check named `name`; the witness is
// the first failing sub-check's witness.
Report collapse(std::string_view name, std::initializer_list<Report> parts) {
  for (const auto& p : parts)
    if (const Check* f = p.first_failure()) return Report(std::string(name), false, f->witness);
  return Report(std::string(name), true);
}

}  // namespace

Report check_identity(const Algebra& a, IdentityKind id) {
  const auto n = a.dim();
  // table[i][j] = e_i * e_j
  std::vector<std::vector<Vector>> table(n, std::vector<Vector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j] = a.basis_product(i, j);
  // (x) * e_k and e_k * (x) for x given in coordinates
  auto mul_right = [&](const Vector& x, std::size_t k) {
    Vector v(n);
    for (std::size_t p = 0; p < n; ++p)
      if (x[p] != 0) v = add(v, scale(x[p], table[p][k]));
    return v;
  };
  auto mul_left = [&](std::size_t k, const Vector& x) {
    Vector v(n);
    for (std::size_t p = 0; p < n; ++p)
      if (x[p] != 0) v = add(v, scale(x[p], table[k][p]));
    return v;
  };
  // assoc(i,j,k) = (e_i e_j) e_k - e_i (e_j e_k)
  auto assoc = [&](std::size_t i, std::size_t j, std::size_t k) {
    return sub(mul_right(table[i][j], k), mul_left(i, table[j][k]));
  };

  auto pre_lie = [&] {
    return sweep3(a, "pre-lie", [&](std::size_t i, std::size_t j, std::size_t k) {
      return sub(assoc(i, j, k), assoc(j, i, k));
    });
  };
  auto commutative = [&] {
    return sweep2(a, "commutative", [&](std::size_t i, std::size_t j) { return sub(table[i][j], table[j][i]); });
  };

  switch (id) {
    case IdentityKind::PreLie:
      return pre_lie();
    case IdentityKind::LeftNovikov: {
      auto right_comm = sweep3(a, "right-commutative", [&](std::size_t i, std::size_t j, std::size_t k) {
        return sub(mul_right(table[i][j], k), mul_right(table[i][k], j));
      });
      return collapse("left-novikov", {pre_lie(), right_comm});
    }
    case IdentityKind::RightNovikov: {
      auto left_comm = sweep3(a, "left-commutative", [&](std::size_t i, std::size_t j, std::size_t k) {
        return sub(mul_left(i, table[j][k]), mul_left(j, table[i][k]));
      });
      auto right_sym = sweep3(a, "right-symmetric", [&](std::size_t i, std::size_t j, std::size_t k) {
        return sub(assoc(i, j, k), assoc(i, k, j));
      });
      return collapse("right-novikov", {left_comm, right_sym});
    }
    case IdentityKind::Commutative:
      return commutative();
    case IdentityKind::CommAssoc: {
      auto associative = sweep3(a, "associative", assoc);
      return collapse("comm-assoc", {commutative(), associative});
    }
    case IdentityKind::Lie: {
      auto anti = sweep2(a, "antisymmetric", [&](std::size_t i, std::size_t j) { return add(table[i][j], table[j][i]); });
      auto jacobi = sweep3(a, "jacobi", [&](std::size_t i, std::size_t j, std::size_t k) {
        return add(add(mul_right(table[i][j], k), mul_right(table[j][k], i)), mul_right(table[k][i], j));
      });
      return collapse("lie", {anti, jacobi});
    }
  }
  return {};
}

Representation adjoint_rep(const Algebra& a) {
  Representation rep;
  rep.carrier_dim = a.dim();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    rep.l_maps.push_back(a.left(i));
    rep.r_maps.push_back(a.right(i));
  }
  return rep;
}

Representation dual_rep(const Representation& rep) {
  Representation out;
  out.carrier_dim = rep.carrier_dim;
  for (std::size_t i = 0; i < rep.l_maps.size(); ++i) {
    const Matrix l_star = -rep.l_maps[i].transpose();
    const Matrix r_star = -rep.r_maps[i].transpose();
    out.l_maps.push_back(l_star + r_star);
    out.r_maps.push_back(-r_star);
  }
  return out;
}

Representation coadjoint_rep(const Algebra& a) { return dual_rep(adjoint_rep(a)); }

Report check_representation(const Algebra& a, const Representation& rep) {
  const auto n = a.dim();
  const auto m = rep.carrier_dim;
  if (rep.l_maps.size() != n || rep.r_maps.size() != n)
    throw DimensionError("representation: expected one map per basis element");
  for (std::size_t i = 0; i < n; ++i)
    if (rep.l_maps[i].rows() != m || rep.l_maps[i].cols() != m || rep.r_maps[i].rows() != m ||
        rep.r_maps[i].cols() != m)
      throw DimensionError("representation: map size differs from carrier dimension");

  auto l = [&](const Vector& x) { return combine(rep.l_maps, x, m); };
  auto r = [&](const Vector& x) { return combine(rep.r_maps, x, m); };
  const char* names[4] = {"l([a1,a2]) = [l(a1),l(a2)]", "l(a1*a2) = r(a2)l(a1)",
                          "[l(a1),r(a2)] = r(a1*a2) - r(a2)r(a1)", "[r(a1),r(a2)] = 0"};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix& li = rep.l_maps[i];
      const Matrix& lj = rep.l_maps[j];
      const Matrix& ri = rep.r_maps[i];
      const Matrix& rj = rep.r_maps[j];
      const Vector ij = a.basis_product(i, j);
      const Vector ji = a.basis_product(j, i);
      const Matrix diffs[4] = {
          l(sub(ij, ji)) - (li * lj - lj * li),
          l(ij) - rj * li,
          (li * rj - rj * li) - (r(ij) - rj * ri),
          ri * rj - rj * ri,
      };
      for (int c = 0; c < 4; ++c)
        if (!diffs[c].is_zero())
          return Report("representation", false,
                        std::string("condition ") + names[c] + " fails at " + tuple_label(a, {i, j}));
    }
  return Report("representation", true);
}

Report check_homomorphism(const Algebra& source, const Algebra& target, const Matrix& f, std::string_view name) {
  if (f.rows() != target.dim() || f.cols() != source.dim())
    throw DimensionError("homomorphism: matrix shape does not match algebras");
  const auto n = source.dim();
  std::vector<Vector> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = f.apply(unit_vector(n, i));
  return sweep2(source, name, [&](std::size_t i, std::size_t j) {
    return sub(f.apply(source.basis_product(i, j)), target.product(images[i], images[j]));
  });
}

Report check_structure_map(const Algebra& a, const StructureMap& m, const StructureMap* companion,
                           const Algebra* target) {
  const auto n = a.dim();
  if (m.matrix.cols() != n) throw DimensionError("structure map: column count differs from algebra dimension");
  if (m.role != MapRole::Homomorphism && m.matrix.rows() != n)
    throw DimensionError("structure map: not an endomorphism");
  std::vector<Vector> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = m(unit_vector(n, i));
  auto e = [&](std::size_t i) { return unit_vector(n, i); };

  switch (m.role) {
    case MapRole::Derivation:
      return sweep2(a, "derivation", [&](std::size_t i, std::size_t j) {
        return sub(m(a.basis_product(i, j)), add(a.product(img[i], e(j)), a.product(e(i), img[j])));
      });
    case MapRole::AdmissibleTheta: {
      if (companion == nullptr) throw PreconditionError("admissible-theta check needs the companion derivation");
      if (companion->matrix.rows() != n || companion->matrix.cols() != n)
        throw DimensionError("companion derivation has wrong size");
      return sweep2(a, "admissible-theta", [&](std::size_t i, std::size_t j) {
        const Vector dj = (*companion)(e(j));
        return sub(m(a.basis_product(i, j)), sub(a.product(img[i], e(j)), a.product(e(i), dj)));
      });
    }
    case MapRole::RotaBaxter:
      return sweep2(a, "rota-baxter", [&](std::size_t i, std::size_t j) {
        Vector inner = add(a.product(img[i], e(j)), a.product(e(i), img[j]));
        inner = add(inner, scale(m.weight, a.basis_product(i, j)));
        return sub(a.product(img[i], img[j]), m(inner));
      });
    case MapRole::Homomorphism:
      if (target == nullptr) throw PreconditionError("homomorphism check needs the target algebra");
      return check_homomorphism(a, *target, m.matrix, "homomorphism");
    case MapRole::Generic:
      return Report("generic", true);
  }
  return {};
}

Scalar BilinearForm::operator()(std::span<const Scalar> x, std::span<const Scalar> y) const {
  Scalar s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0) s += x[i] * matrix(i, j) * y[j];
  }
  return s;
}

Report FormReport::as_report() const {
  Report r;
  r.add("symmetric", symmetric, symmetric ? "" : witness);
  r.add("nondegenerate", nondegenerate, nondegenerate ? "" : "form matrix is rank deficient");
  r.add("invariant", invariant, invariant ? "" : witness);
  return r;
}

FormReport check_bilinear_form(const Algebra& a, const BilinearForm& f) {
  const auto n = a.dim();
  if (f.matrix.rows() != n || f.matrix.cols() != n) throw DimensionError("bilinear form: size differs from algebra");
  FormReport out;
  out.symmetric = f.matrix == f.matrix.transpose();
  if (!out.symmetric) {
    for (std::size_t i = 0; i < n && out.witness.empty(); ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (f.matrix(i, j) != f.matrix(j, i)) {
          out.witness = "not symmetric at " + tuple_label(a, {i, j});
          break;
        }
  }
  out.nondegenerate = mat_rank(f.matrix) == n;
  out.invariant = true;
  if (f.flavor == FormFlavor::Plain) return out;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
        Scalar v;
        if (f.flavor == FormFlavor::NovikovInvariant)
          v = f(a.basis_product(i, j), ek) + f(ej, add(a.basis_product(i, k), a.basis_product(k, i)));
        else
          v = f(a.basis_product(i, j), ek) + f(ei, add(a.basis_product(j, k), a.basis_product(k, j)));
        if (v != 0) {
          out.invariant = false;
          if (out.witness.empty() || out.symmetric)
            out.witness = std::string(to_string(f.flavor)) + " fails at " + tuple_label(a, {i, j, k}) +
                          ": residual " + v.get_str();
          return out;
        }
      }
  return out;
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  if (a.kind != b.kind) throw KindMismatch("direct_sum: summands have different kinds");
  const auto n = a.dim(), m = b.dim();
  std::vector<std::string> labels = default_basis(n + m);
  Algebra s(labels, a.kind, a.name.empty() || b.name.empty() ? "" : a.name + "+" + b.name);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) s.c(i, j, k) = a.c(i, j, k);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) s.c(n + i, n + j, n + k) = b.c(i, j, k);
  return s;
}

}  // namespace nova
